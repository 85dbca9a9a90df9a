#include "jacobi/cli.hpp"

#include "jacobi/basis.hpp"
#include "jacobi/error.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/lie.hpp"
#include "jacobi/maps.hpp"
#include "jacobi/verify.hpp"
#include "jacobi/weights.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace jacobi::cli {

namespace {

const std::vector<std::string> kVerbs = {"enumerate", "basis", "reduce", "chi", "close", "cap",
                                         "omega", "connect-sum", "eval", "verify"};

struct Options {
    std::string cache_dir;
    bool no_cache = false;
    std::string input;
    std::string output;
    long long max_labeled = EnumerationLimits{}.max_labeled;
    std::uint64_t max_cost = PlanOptions{}.max_cost;

    std::string space;
    int v = -1, l = -1, e = -1, total = -1;
    int vmax = -1;
    std::string algebra = "sl2";
    std::string rep;
    std::string suite;
    int max_total = -1;
};

Json error_json(const std::string& code, const std::string& message)
{
    return {{"error", {{"code", code}, {"message", message}}}};
}

Json piece_json(const Piece& p)
{
    Json j;
    j["space"] = to_string(p.space);
    if (p.space == Space::A) {
        j["total"] = p.total;
    } else {
        j["v"] = p.internal();
        j["l"] = p.legs;
    }
    return j;
}

Json diagrams_json(const std::vector<Diagram>& ds)
{
    Json list = Json::array();
    for (const auto& d : ds)
        list.push_back(to_json(d));
    return list;
}

Json terms_json(const DiagramVector& x)
{
    return {{"terms", to_json(x)}};
}

class Session {
public:
    Session(const Options& o, std::istream& in) : o_(o), in_(in) {}

    Json enumerate()
    {
        const Space space = parse_space();
        Json j;
        j["space"] = to_string(space);
        std::vector<Diagram> ds;
        if (space == Space::B) {
            require(o_.v >= 0 && o_.l >= 0, "enumerate --space B needs --v and --l");
            ds = enumerate_diagrams(space, {o_.v, o_.l, 0}, limits());
            j["grading"] = {{"v", o_.v}, {"l", o_.l}};
        } else if (o_.total >= 0) {
            require(o_.v < 0 && o_.e < 0, "enumerate --space A takes either --total or --v and --e");
            ds = enumerate_piece(Piece::of_a(o_.total), limits());
            j["grading"] = {{"total", o_.total}};
        } else {
            require(o_.v >= 0 && o_.e >= 0, "enumerate --space A needs --total, or --v and --e");
            ds = enumerate_diagrams(space, {o_.v, 0, o_.e}, limits());
            j["grading"] = {{"v", o_.v}, {"e", o_.e}};
        }
        j["count"] = ds.size();
        j["diagrams"] = diagrams_json(ds);
        return j;
    }

    Json basis()
    {
        const Piece piece = parse_piece();
        const QuotientBasis& b = store().get(piece);
        Json j;
        j["piece"] = piece_json(piece);
        j["dimension"] = b.dimension();
        j["basis"] = diagrams_json(b.basis());
        return j;
    }

    Json reduce_input()
    {
        const DiagramVector x = read_vector();
        Json pieces = Json::array();
        for (const auto& [piece, part] : x.by_piece()) {
            const QuotientBasis& b = store().get(piece);
            Json coords = Json::array();
            for (const auto& c : reduce(part, b))
                coords.push_back(to_string(c));
            Json p;
            p["piece"] = piece_json(piece);
            p["dimension"] = b.dimension();
            p["coordinates"] = coords;
            p["basis"] = diagrams_json(b.basis());
            pieces.push_back(std::move(p));
        }
        return {{"pieces", pieces}};
    }

    Json chi_input() { return terms_json(chi(read_vector())); }
    Json close_input() { return terms_json(closure(read_vector())); }

    Json cap_input()
    {
        const Json j = read_json();
        require(j.is_object() && j.contains("c") && j.contains("d"), "cap reads {\"c\": ..., \"d\": ...} from input");
        return terms_json(cap(diagram_or_vector_from_json(j["c"]), diagram_or_vector_from_json(j["d"])));
    }

    Json connect_sum_input()
    {
        const Json j = read_json();
        require(j.is_object() && j.contains("a") && j.contains("b"),
                "connect-sum reads {\"a\": ..., \"b\": ...} from input");
        return terms_json(connect_sum(diagram_or_vector_from_json(j["a"], Space::A),
                                      diagram_or_vector_from_json(j["b"], Space::A)));
    }

    Json omega_output()
    {
        require(o_.vmax >= 0, "omega needs --vmax");
        return terms_json(omega(o_.vmax).value);
    }

    Json eval_input()
    {
        const DiagramVector x = read_vector(Space::A);
        const LieData data = lie_data();
        Rational value;
        if (x.space() == Space::A) {
            WeightSystem ws(data.algebra, data.representation(rep_name(data)), plan_options());
            value = ws.evaluate(x);
        } else {
            for (const auto& [d, c] : x)
                if (!d.legs.empty())
                    throw Error(ErrorCode::InvalidArgument, "eval needs diagrams without legs");
            WeightSystem ws(data.algebra, std::nullopt, plan_options());
            value = ws.evaluate(x);
        }
        return {{"value", to_string(value)}};
    }

    Json verify(int& status)
    {
        SuiteReport report;
        if (o_.suite == "relations") {
            const LieData data = lie_data();
            WeightSystem ws(data.algebra, data.representation(rep_name(data)), plan_options());
            report = verify_relations(o_.max_total >= 0 ? o_.max_total : 6, ws);
        } else if (o_.suite == "chi-iso") {
            report = verify_chi_iso(o_.max_total >= 0 ? o_.max_total : 4, store());
        } else if (o_.suite == "closure-omega") {
            report = verify_closure_omega(o_.vmax >= 0 ? o_.vmax : 4, store());
        } else if (o_.suite == "wheeling") {
            report = verify_wheeling_suite(store());
        } else {
            throw Error(ErrorCode::InvalidArgument,
                        "unknown suite \"" + o_.suite + "\" (relations, chi-iso, closure-omega, wheeling)");
        }
        status = report.passed() ? kOk : kChecksFailed;
        return report.to_json();
    }

private:
    static void require(bool ok, const std::string& message)
    {
        if (!ok)
            throw Error(ErrorCode::InvalidArgument, message);
    }

    EnumerationLimits limits() const
    {
        EnumerationLimits l;
        l.max_labeled = o_.max_labeled;
        return l;
    }

    PlanOptions plan_options() const
    {
        PlanOptions p;
        p.max_cost = o_.max_cost;
        return p;
    }

    Space parse_space() const
    {
        if (o_.space == "A")
            return Space::A;
        if (o_.space == "B")
            return Space::B;
        throw Error(ErrorCode::InvalidArgument, "--space must be A or B");
    }

    Piece parse_piece() const
    {
        if (parse_space() == Space::A) {
            require(o_.total >= 0, "basis --space A needs --total");
            return Piece::of_a(o_.total);
        }
        require(o_.v >= 0 && o_.l >= 0, "basis --space B needs --v and --l");
        return Piece::of_b(o_.v, o_.l);
    }

    BasisStore& store()
    {
        if (!store_) {
            std::optional<std::filesystem::path> dir;
            if (!o_.no_cache)
                dir = o_.cache_dir.empty() ? BasisStore::default_cache_dir() : std::filesystem::path(o_.cache_dir);
            store_ = std::make_unique<BasisStore>(dir, limits());
        }
        return *store_;
    }

    Json read_json()
    {
        std::stringstream text;
        if (o_.input.empty() || o_.input == "-") {
            text << in_.rdbuf();
        } else {
            std::ifstream file(o_.input);
            if (!file)
                throw Error(ErrorCode::Io, "cannot read " + o_.input);
            text << file.rdbuf();
        }
        return parse_json(text.str());
    }

    DiagramVector read_vector(Space empty_space = Space::B) { return diagram_or_vector_from_json(read_json(), empty_space); }

    LieData lie_data() const
    {
        if (o_.algebra == "sl2" || o_.algebra == "abelian" || o_.algebra.rfind("abelian:", 0) == 0)
            return builtin_lie_data(o_.algebra);
        std::ifstream file(o_.algebra);
        if (!file)
            throw Error(ErrorCode::Io, "cannot read Lie algebra file " + o_.algebra);
        std::stringstream text;
        text << file.rdbuf();
        return lie_data_from_json(parse_json(text.str()), o_.algebra);
    }

    std::string rep_name(const LieData& data) const
    {
        if (!o_.rep.empty())
            return o_.rep;
        return data.representations.count("fundamental") ? "fundamental" : "adjoint";
    }

    const Options& o_;
    std::istream& in_;
    std::unique_ptr<BasisStore> store_;
};

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--cache-dir", o.cache_dir, "basis cache directory (default: $JACOBI_CACHE_DIR, "
                                                "$XDG_CACHE_HOME/jacobi or ~/.cache/jacobi)");
    sub->add_flag("--no-cache", o.no_cache, "keep bases in memory only");
    sub->add_option("--input,-i", o.input, "read JSON from this file instead of stdin");
    sub->add_option("--output,-o", o.output, "write JSON to this file instead of stdout");
    sub->add_option("--max-labeled", o.max_labeled, "enumeration limit on labeled candidates")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-cost", o.max_cost, "contraction cost limit")->check(CLI::PositiveNumber);
}

void add_grading(CLI::App* sub, Options& o)
{
    sub->add_option("--space", o.space, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
    sub->add_option("--v", o.v, "internal vertices")->check(CLI::NonNegativeNumber);
    sub->add_option("--l", o.l, "legs (B)")->check(CLI::NonNegativeNumber);
    sub->add_option("--total", o.total, "total vertex count (A)")->check(CLI::NonNegativeNumber);
}

void add_lie(CLI::App* sub, Options& o)
{
    sub->add_option("--algebra", o.algebra, "sl2, abelian, abelian:d or a Lie algebra JSON file");
    sub->add_option("--rep", o.rep, "representation name (default: fundamental if present, else adjoint)");
}

int emit(const Json& j, const Options& o, std::ostream& out)
{
    if (o.output.empty() || o.output == "-") {
        out << j.dump() << '\n';
        return kOk;
    }
    std::ofstream file(o.output);
    file << j.dump() << '\n';
    if (!file) {
        out << error_json("io", "cannot write " + o.output).dump() << '\n';
        return kErrorBase + static_cast<int>(ErrorCode::Io);
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out)
{
    Options o;
    CLI::App app{"Jacobi diagram algebras and Lie algebra weight systems", "jacobi"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "list canonical diagrams of one grading");
    add_grading(enumerate, o);
    enumerate->add_option("--e", o.e, "circle vertices (A)")->check(CLI::NonNegativeNumber);
    auto* basis = app.add_subcommand("basis", "quotient basis of one piece");
    add_grading(basis, o);
    auto* reduce = app.add_subcommand("reduce", "coordinates of the input in the quotient bases");
    auto* chi = app.add_subcommand("chi", "symmetrization map from B to A");
    auto* close = app.add_subcommand("close", "sum over all pairings of legs");
    auto* cap = app.add_subcommand("cap", "cap product of input {\"c\", \"d\"}");
    auto* omega = app.add_subcommand("omega", "wheels element");
    omega->add_option("--vmax", o.vmax, "largest internal vertex count kept")->required()->check(CLI::NonNegativeNumber);
    auto* connect = app.add_subcommand("connect-sum", "product of A on input {\"a\", \"b\"}");
    auto* eval = app.add_subcommand("eval", "Lie algebra weight system");
    add_lie(eval, o);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "relations, chi-iso, closure-omega or wheeling")->required();
    verify->add_option("--max-total", o.max_total, "largest total vertex count")->check(CLI::NonNegativeNumber);
    verify->add_option("--vmax", o.vmax, "truncation of the wheels element")->check(CLI::NonNegativeNumber);
    add_lie(verify, o);
    for (auto* sub : {enumerate, basis, reduce, chi, close, cap, omega, connect, eval, verify})
        add_common(sub, o);

    if (!args.empty() && args[0].rfind("-", 0) != 0
        && std::find(kVerbs.begin(), kVerbs.end(), args[0]) == kVerbs.end()) {
        out << error_json("unknown_verb", "unknown verb \"" + args[0] + "\"").dump() << '\n';
        return kUnknownVerb;
    }

    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "jacobi");
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        out << error_json("usage", e.what()).dump() << '\n';
        return kUsage;
    }

    Session session(o, in);
    try {
        int status = kOk;
        Json result;
        if (*enumerate)
            result = session.enumerate();
        else if (*basis)
            result = session.basis();
        else if (*reduce)
            result = session.reduce_input();
        else if (*chi)
            result = session.chi_input();
        else if (*close)
            result = session.close_input();
        else if (*cap)
            result = session.cap_input();
        else if (*omega)
            result = session.omega_output();
        else if (*connect)
            result = session.connect_sum_input();
        else if (*eval)
            result = session.eval_input();
        else
            result = session.verify(status);
        const int written = emit(result, o, out);
        return written != kOk ? written : status;
    } catch (const Error& e) {
        out << error_json(std::string(code_name(e.code())), e.what()).dump() << '\n';
        return kErrorBase + static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        out << error_json("resource_limit", "out of memory").dump() << '\n';
        return kErrorBase + static_cast<int>(ErrorCode::ResourceLimit);
    }
}

} // namespace jacobi::cli
