#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobi::cli {

/// Exit statuses. Library errors map to 10 + their ErrorCode.
enum ExitStatus : int {
    kOk = 0,
    kChecksFailed = 1,
    kUsage = 2,
    kUnknownVerb = 3,
    kErrorBase = 10,
};

/// Runs one command line (without the program name). Results go to `out` as
/// one JSON document; failures as {"error": {"code", "message"}}.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

} // namespace jacobi::cli
