#pragma once

#include <json.hpp>

#include <span>
#include <vector>

#include "oinv/abelian.hpp"
#include "oinv/census.hpp"
#include "oinv/delta1.hpp"
#include "oinv/gf2.hpp"
#include "oinv/invariant_m.hpp"
#include "oinv/moves.hpp"

namespace oinv {

// Ordered so emitted documents list coefficients in ascending degree
// order and keep schema key order stable.
using Json = nlohmann::ordered_json;

// Integers fitting a signed 64-bit value are emitted as JSON numbers,
// anything larger as a decimal string; both forms parse back.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const char* context);

// {"t2": {...}, "h2": {...}, "h1_0": 1, "q2_0": 1}; zero parts omitted.
Json gu_to_json(const GUElement& g);
GUElement gu_from_json(const Json& j);

// {"x": {...}, "y": {...}}; zero parts omitted.
Json o_to_json(const OElement& o);
OElement o_from_json(const Json& j);

// {"genus": g, "chambers": [{"degree": m, "euler": c}, ...],
//  "triple_points": [{"degree": m, "count": n}, ...]}
// Duplicate degrees, odd or negative counts are rejected.
Json census_to_json(const Census& c);
Census census_from_json(const Json& j);

// {"rows": r, "cols": c, "data": [[0,1,...], ...]}
Json matrix_to_json(const gf2::Matrix& m);
gf2::Matrix matrix_from_json(const Json& j);

// {"genus": g, "c_side": -1|1, "map0": M, "map1": M, "form": M?}
// A non-standard intersection form is converted to the standard
// symplectic basis on the way in.
Json embedding_to_json(const EmbeddingSides& e);
EmbeddingSides embedding_from_json(const Json& j);

// {"genus": g, "h_star": M, "orientation": "preserving"|"reversing"}
Json diffeo_to_json(const DiffeoAction& d);
DiffeoAction diffeo_from_json(const Json& j);

// JSON array of move strings "T3@0:+".
Json moves_to_json(std::span<const Move> moves);
std::vector<Move> moves_from_json(const Json& j);

Json report_to_json(const CensusReport& r);
Json violations_to_json(const std::vector<RelationViolation>& v);

}  // namespace oinv
