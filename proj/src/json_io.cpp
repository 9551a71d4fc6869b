#include "oinv/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <string>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

std::string ctx(const char* context) { return std::string(context) + ": "; }

void require_object(const Json& j, const char* context,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) throw ParseError(ctx(context) + "expected a JSON object");
    for (const char* key : required)
        if (!j.contains(key)) throw ParseError(ctx(context) + "missing key \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        const auto known = [&key](const char* k) { return key == k; };
        if (!std::any_of(required.begin(), required.end(), known) &&
            !std::any_of(optional.begin(), optional.end(), known))
            throw ParseError(ctx(context) + "unknown key \"" + key + "\"");
    }
}

std::int64_t int64_from_json(const Json& j, const char* context) {
    if (!j.is_number_integer())
        throw ParseError(ctx(context) + "expected an integer, got " + j.dump());
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError(ctx(context) + "integer out of range");
    return j.get<std::int64_t>();
}

std::int64_t degree_key(const std::string& key, const char* context) {
    std::int64_t out = 0;
    const char* begin = key.data();
    const char* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end || key.empty())
        throw ParseError(ctx(context) + "bad degree key \"" + key + "\"");
    return out;
}

Json coef_map_to_json(const CoefMap& map) {
    Json out = Json::object();
    for (const auto& [k, v] : map) out[std::to_string(k)] = int_to_json(v);
    return out;
}

CoefMap coef_map_from_json(const Json& j, const char* context) {
    if (!j.is_object()) throw ParseError(ctx(context) + "expected an object of coefficients");
    CoefMap out;
    for (const auto& [key, value] : j.items()) {
        const std::int64_t k = degree_key(key, context);
        Int coef = int_from_json(value, context);
        if (coef == 0) continue;
        if (!out.emplace(k, std::move(coef)).second)
            throw ParseError(ctx(context) + "duplicate degree " + key);
    }
    return out;
}

Z2 bit_from_json(const Json& j, const char* context) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v == 0 || v == 1) return Z2(v);
    }
    throw ParseError(ctx(context) + "expected 0 or 1");
}

}  // namespace

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j, const char* context) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (mpz_class tmp; tmp.set_str(s, 10) == 0) return tmp;
        throw ParseError(ctx(context) + "bad integer string \"" + s + "\"");
    }
    throw ParseError(ctx(context) + "expected an integer or decimal string, got " + j.dump());
}

Json gu_to_json(const GUElement& g) {
    Json out = Json::object();
    if (!g.t2_coef().empty()) out["t2"] = coef_map_to_json(g.t2_coef());
    if (!g.h2_coef().empty()) out["h2"] = coef_map_to_json(g.h2_coef());
    if (!g.m_bit().is_zero()) out["h1_0"] = 1;
    if (!g.q_bit().is_zero()) out["q2_0"] = 1;
    return out;
}

GUElement gu_from_json(const Json& j) {
    require_object(j, "group element", {}, {"t2", "h2", "h1_0", "q2_0"});
    GUElement out;
    if (j.contains("t2"))
        for (const auto& [m, c] : coef_map_from_json(j.at("t2"), "t2 coefficients"))
            out.add_t2(m, c);
    if (j.contains("h2"))
        for (const auto& [m, c] : coef_map_from_json(j.at("h2"), "h2 coefficients"))
            out.add_h2(m, c);
    if (j.contains("h1_0")) out.add_m_bit(bit_from_json(j.at("h1_0"), "h1_0"));
    if (j.contains("q2_0")) out.add_q_bit(bit_from_json(j.at("q2_0"), "q2_0"));
    return out;
}

Json o_to_json(const OElement& o) {
    Json out = Json::object();
    if (!o.x_coef().empty()) out["x"] = coef_map_to_json(o.x_coef());
    if (!o.y_coef().empty()) out["y"] = coef_map_to_json(o.y_coef());
    return out;
}

OElement o_from_json(const Json& j) {
    require_object(j, "group element", {}, {"x", "y"});
    OElement out;
    if (j.contains("x"))
        for (const auto& [n, c] : coef_map_from_json(j.at("x"), "x coefficients")) out.add_x(n, c);
    if (j.contains("y"))
        for (const auto& [n, c] : coef_map_from_json(j.at("y"), "y coefficients")) out.add_y(n, c);
    return out;
}

Json census_to_json(const Census& c) {
    Json out = Json::object();
    out["genus"] = c.genus;
    Json chambers = Json::array();
    for (const auto& [m, chi] : c.chi)
        chambers.push_back(Json{{"degree", m}, {"euler", int_to_json(chi)}});
    out["chambers"] = std::move(chambers);
    Json triples = Json::array();
    for (const auto& [m, count] : c.n)
        triples.push_back(Json{{"degree", m}, {"count", int_to_json(count)}});
    out["triple_points"] = std::move(triples);
    return out;
}

Census census_from_json(const Json& j) {
    require_object(j, "census", {"genus"}, {"chambers", "triple_points"});
    Census out;
    out.genus = int64_from_json(j.at("genus"), "census genus");
    if (out.genus < 0) throw ParseError("census genus: must be non-negative");

    if (j.contains("chambers")) {
        const Json& chambers = j.at("chambers");
        if (!chambers.is_array()) throw ParseError("census chambers: expected an array");
        std::set<std::int64_t> seen;
        for (const Json& entry : chambers) {
            require_object(entry, "chamber", {"degree", "euler"});
            const std::int64_t m = int64_from_json(entry.at("degree"), "chamber degree");
            Int chi = int_from_json(entry.at("euler"), "chamber euler");
            if (!seen.insert(m).second)
                throw ParseError("census chambers: duplicate degree " + std::to_string(m));
            if (chi != 0) out.chi.emplace(m, std::move(chi));
        }
    }
    if (j.contains("triple_points")) {
        const Json& triples = j.at("triple_points");
        if (!triples.is_array()) throw ParseError("census triple_points: expected an array");
        std::set<std::int64_t> seen;
        for (const Json& entry : triples) {
            require_object(entry, "triple point entry", {"degree", "count"});
            const std::int64_t m = int64_from_json(entry.at("degree"), "triple point degree");
            Int count = int_from_json(entry.at("count"), "triple point count");
            if (!seen.insert(m).second)
                throw ParseError("census triple_points: duplicate degree " + std::to_string(m));
            if (count < 0)
                throw ParseError("census triple_points: count at degree " + std::to_string(m) +
                                 " is negative");
            if (!is_even(count))
                throw ParseError("census triple_points: count at degree " + std::to_string(m) +
                                 " is odd");
            if (count != 0) out.n.emplace(m, std::move(count));
        }
    }
    return out;
}

Json matrix_to_json(const gf2::Matrix& m) {
    Json data = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

gf2::Matrix matrix_from_json(const Json& j) {
    require_object(j, "matrix", {"rows", "cols", "data"});
    const std::int64_t rows = int64_from_json(j.at("rows"), "matrix rows");
    const std::int64_t cols = int64_from_json(j.at("cols"), "matrix cols");
    if (rows < 0 || cols < 0) throw ParseError("matrix: dimensions must be non-negative");
    const Json& data = j.at("data");
    if (!data.is_array() || data.size() != static_cast<std::size_t>(rows))
        throw ParseError("matrix: data must be an array of " + std::to_string(rows) + " rows");
    gf2::Matrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < out.rows(); ++r) {
        const Json& row = data[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols))
            throw ParseError("matrix: row " + std::to_string(r) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < out.cols(); ++c) {
            const Json& cell = row[c];
            if (!cell.is_number_integer() ||
                (cell.get<std::int64_t>() != 0 && cell.get<std::int64_t>() != 1))
                throw ParseError("matrix: entries must be 0 or 1");
            out.set(r, c, cell.get<std::int64_t>() == 1);
        }
    }
    return out;
}

Json embedding_to_json(const EmbeddingSides& e) {
    return Json{{"genus", e.genus},
                {"c_side", e.c_side},
                {"map0", matrix_to_json(e.map0)},
                {"map1", matrix_to_json(e.map1)}};
}

EmbeddingSides embedding_from_json(const Json& j) {
    require_object(j, "embedding", {"genus", "c_side", "map0", "map1"}, {"form"});
    EmbeddingSides out;
    out.genus = int64_from_json(j.at("genus"), "embedding genus");
    if (out.genus < 0) throw ParseError("embedding genus: must be non-negative");
    out.c_side = static_cast<int>(int64_from_json(j.at("c_side"), "embedding c_side"));
    if (out.c_side != -1 && out.c_side != 1) throw ParseError("embedding c_side: must be -1 or 1");
    out.map0 = matrix_from_json(j.at("map0"));
    out.map1 = matrix_from_json(j.at("map1"));
    const std::size_t dim = 2 * static_cast<std::size_t>(out.genus);
    if (out.map0.cols() != dim || out.map1.cols() != dim)
        throw ParseError("embedding: side maps must have 2*genus columns");
    if (j.contains("form")) {
        const gf2::Matrix form = matrix_from_json(j.at("form"));
        if (form.rows() != dim || form.cols() != dim)
            throw ParseError("embedding form: must be 2*genus x 2*genus");
        if (form != gf2::Matrix::standard_symplectic(static_cast<std::size_t>(out.genus))) {
            gf2::Matrix basis;
            try {
                basis = gf2::symplectic_basis(form);
            } catch (const DomainError& e) {
                throw ParseError(std::string("embedding form: ") + e.what());
            }
            out.map0 = gf2::mat_mul(out.map0, basis);
            out.map1 = gf2::mat_mul(out.map1, basis);
        }
    }
    return out;
}

Json diffeo_to_json(const DiffeoAction& d) {
    return Json{{"genus", d.genus},
                {"h_star", matrix_to_json(d.h_star)},
                {"orientation",
                 d.orientation == Orientation::Preserving ? "preserving" : "reversing"}};
}

DiffeoAction diffeo_from_json(const Json& j) {
    require_object(j, "diffeo", {"genus", "h_star", "orientation"});
    DiffeoAction out;
    out.genus = int64_from_json(j.at("genus"), "diffeo genus");
    if (out.genus < 0) throw ParseError("diffeo genus: must be non-negative");
    out.h_star = matrix_from_json(j.at("h_star"));
    const Json& orientation = j.at("orientation");
    if (orientation == "preserving")
        out.orientation = Orientation::Preserving;
    else if (orientation == "reversing")
        out.orientation = Orientation::Reversing;
    else
        throw ParseError("diffeo orientation: expected \"preserving\" or \"reversing\"");
    return out;
}

Json moves_to_json(std::span<const Move> moves) {
    Json out = Json::array();
    for (const Move& m : moves) out.push_back(format_move(m));
    return out;
}

std::vector<Move> moves_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("move list: expected a JSON array of strings");
    std::vector<Move> out;
    out.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_string()) throw ParseError("move list: expected a string, got " + entry.dump());
        out.push_back(parse_move(entry.get<std::string>()));
    }
    return out;
}

Json report_to_json(const CensusReport& r) {
    auto identity = [](const IdentityCheck& c) {
        Json out = Json::object();
        if (c.value) out["value"] = int_to_json(*c.value);
        out["expected"] = int_to_json(c.expected);
        out["ok"] = c.ok;
        return out;
    };
    return Json{{"clean", r.clean()},
                {"parity_failures", r.odd_counts},
                {"negative_counts", r.negative_counts},
                {"identities", Json{{"even", identity(r.even_identity)},
                                    {"odd", identity(r.odd_identity)}}}};
}

Json violations_to_json(const std::vector<RelationViolation>& v) {
    Json items = Json::array();
    for (const RelationViolation& violation : v)
        items.push_back(Json{{"relation", violation.relation},
                             {"deg", violation.deg},
                             {"lhs", violation.lhs},
                             {"rhs", violation.rhs}});
    return Json{{"count", v.size()}, {"violations", std::move(items)}};
}

}  // namespace oinv
