#pragma once

#include "jacobi/diagram.hpp"
#include "jacobi/diagram_vector.hpp"

#include <json.hpp>

namespace jacobi {

using Json = nlohmann::ordered_json;

/// Diagram wire format: {"space", "internal", "legs", "skeleton" (A only),
/// "pairing", "free_loops"}.
Json to_json(const Diagram& d);
RawDiagram raw_diagram_from_json(const Json& j);
/// Parses and validates; throws Error(MalformedInput / InvalidDiagram).
Diagram diagram_from_json(const Json& j);

/// Array of {"coeff": "p/q", "diagram": ...} in canonical order.
Json to_json(const DiagramVector& v);
/// Accepts that array, or an object carrying it under "terms". An empty
/// array yields a zero vector in `empty_space`.
DiagramVector vector_from_json(const Json& j, Space empty_space = Space::B);

/// Accepts a single diagram (coefficient 1) or a vector.
DiagramVector diagram_or_vector_from_json(const Json& j, Space empty_space = Space::B);

/// Exact rational from a "p/q" string or an integer; floats are rejected.
Rational rational_from_json(const Json& j);

Json parse_json(const std::string& text);

} // namespace jacobi
