#pragma once

// JSON encodings of the library types. Every number is an exact string
// ("p/q", or "p" for integers) except small integer data such as partitions,
// tableau cells and dimensions.

#include <string>

#include "json.hpp"
#include "yfuse/combinatorics.hpp"
#include "yfuse/group_algebra.hpp"
#include "yfuse/linalg.hpp"
#include "yfuse/rational_function.hpp"

namespace yfuse::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);              // ascending coefficient strings
Json to_json(const RationalFunction& f);        // {"num": [...], "den": [...]}
Json to_json(const Partition& p);               // integer array
Json to_json(const SkewShape& s);               // {"outer": [...], "inner": [...]}
Json to_json(const StandardTableau& t);         // {"outer", "inner", "filling": [[i, j, k], ...]}
Json to_json(const GroupAlgebraQ& a);           // [[cycle notation, coefficient], ...]
Json to_json(const MatQ& m);                    // row-major nested arrays
Json to_json(const MatF& m);

/// Parses "5,3,3" (or an empty string) into a partition; throws InvalidInput.
Partition parse_partition(const std::string& s);
/// Parses the tableau encoding produced by to_json; throws InvalidInput or ShapeInvalid.
StandardTableau tableau_from_json(const Json& j);

}  // namespace yfuse::cli
