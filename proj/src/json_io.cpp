#include "p1/json_io.hpp"

#include <string>

#include "p1/error.hpp"

namespace p1 {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

std::string type_name(const Json& j) { return j.type_name(); }

const Json& expect_object(const Json& j, const char* what) {
    if (!j.is_object()) parse_fail(std::string(what) + ": expected an object, got " + type_name(j));
    return j;
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + ": expected an array, got " + type_name(j));
    return j;
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) parse_fail(std::string(what) + ": expected a string, got " + type_name(j));
    return j.get<std::string>();
}

int expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        parse_fail(std::string(what) + ": expected an integer, got " + type_name(j));
    return j.get<int>();
}

int parse_weight_key(const std::string& key) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(key, &used);
    } catch (const std::exception&) {
        parse_fail("weights: key \"" + key + "\" is not an integer");
    }
    if (used != key.size()) parse_fail("weights: key \"" + key + "\" is not an integer");
    return value;
}

} // namespace

const Json& require_key(const Json& j, const char* key) {
    expect_object(j, "request");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
    return *it;
}

Json to_json(const FieldDescriptor& field) {
    if (field.kind == FieldKind::Rationals) return Json{{"field", "Q"}};
    return Json{{"field", "Fp"}, {"p", field.characteristic}};
}

FieldDescriptor field_from_json(const Json& j) {
    std::string name = expect_string(require_key(expect_object(j, "field"), "field"), "field");
    if (name == "Q") return FieldDescriptor::rationals();
    if (name == "Fp") {
        int p = expect_int(require_key(j, "p"), "p");
        if (p <= 0) parse_fail("p: expected a positive prime");
        return FieldDescriptor::prime_field(static_cast<std::uint32_t>(p));
    }
    parse_fail("field: expected \"Q\" or \"Fp\", got \"" + name + "\"");
}

Json to_json(const LaurentMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

LaurentMatrix matrix_from_json(const Json& j, const FieldDescriptor& field) {
    const Json& rows = expect_array(j, "matrix");
    if (rows.empty()) parse_fail("matrix: expected at least one row");
    int n_rows = static_cast<int>(rows.size());
    int n_cols = -1;
    for (const Json& row : rows) {
        expect_array(row, "matrix row");
        if (n_cols < 0) n_cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != n_cols)
            parse_fail("matrix: rows have unequal lengths");
    }
    if (n_cols == 0) parse_fail("matrix: rows are empty");
    LaurentMatrix out(field, n_rows, n_cols);
    for (int r = 0; r < n_rows; ++r)
        for (int c = 0; c < n_cols; ++c)
            out.set(r, c, parse_laurent(expect_string(rows[r][c], "matrix entry"), field));
    return out;
}

Json to_json(const TransitionBundle& e) {
    return Json{{"field", to_json(e.field())},
                {"rank", e.rank()},
                {"transition", to_json(e.transition())}};
}

TransitionBundle bundle_from_json(const Json& j) {
    FieldDescriptor field = field_from_json(require_key(j, "field"));
    int rank = expect_int(require_key(j, "rank"), "rank");
    LaurentMatrix t = matrix_from_json(require_key(j, "transition"), field);
    if (t.rows() != rank || t.cols() != rank)
        parse_fail("rank: declared " + std::to_string(rank) + " but transition is " +
                   std::to_string(t.rows()) + "x" + std::to_string(t.cols()));
    return make_bundle(std::move(t));
}

Json to_json(const SplittingType& type) { return Json(type.exponents); }

Json to_json(const GradedVectorSpace& v) {
    Json weights = Json::object();
    for (const auto& [weight, dim] : v.dims) weights[std::to_string(weight)] = dim;
    return Json{{"weights", weights}};
}

GradedVectorSpace graded_from_json(const Json& j) {
    const Json& weights = expect_object(require_key(j, "weights"), "weights");
    GradedVectorSpace v;
    for (const auto& [key, value] : weights.items())
        v.add(parse_weight_key(key), expect_int(value, "weights entry"));
    return v;
}

Json to_json(const Cocharacter& chi) {
    return Json{{"group", to_string(chi.group.family)},
                {"n", chi.group.n},
                {"weights", Json(chi.weights)}};
}

Cocharacter cocharacter_from_json(const Json& j) {
    std::string group = expect_string(require_key(j, "group"), "group");
    GroupFamily family;
    if (group == "GL")
        family = GroupFamily::GL;
    else if (group == "SL")
        family = GroupFamily::SL;
    else if (group == "PGL")
        family = GroupFamily::PGL;
    else
        parse_fail("group: expected \"GL\", \"SL\", or \"PGL\", got \"" + group + "\"");
    int n = expect_int(require_key(j, "n"), "n");
    const Json& weights = expect_array(require_key(j, "weights"), "weights");
    std::vector<int> entries;
    entries.reserve(weights.size());
    for (const Json& w : weights) entries.push_back(expect_int(w, "weights entry"));
    return make_cocharacter({family, n}, std::move(entries));
}

Json to_json(const BirkhoffWitness& w) {
    return Json{{"p", to_json(w.p)}, {"d", to_json(w.d)}, {"q", to_json(w.q)}};
}

Json to_json(const HNFiltration& hn) {
    Json steps = Json::array();
    for (const HNStep& s : hn.steps) steps.push_back(Json{{"slope", s.slope}, {"rank", s.rank}});
    return Json{{"steps", steps}, {"basisP", to_json(hn.basis_p)}, {"basisQ", to_json(hn.basis_q)}};
}

Json to_json(const DoubleCosetWitness& w) {
    return Json{{"u", to_json(w.u)}, {"lambda", Json(w.lambda.weights)}, {"v", to_json(w.v)}};
}

Json to_json(const EulerWitness& w) {
    return Json{{"sub", to_json(w.sub)},
                {"mid", to_json(w.mid)},
                {"quot", to_json(w.quot)},
                {"inclusion", Json{{"m0", to_json(w.inclusion.m0)}, {"m1", to_json(w.inclusion.m1)}}},
                {"projection",
                 Json{{"m0", to_json(w.projection.m0)}, {"m1", to_json(w.projection.m1)}}},
                {"midSlopes", Json(w.mid_slopes)},
                {"outerSlopes", Json(w.outer_slopes)}};
}

Json to_json(const CohomologyDims& dims) { return Json{{"h0", dims.h0}, {"h1", dims.h1}}; }

} // namespace p1
