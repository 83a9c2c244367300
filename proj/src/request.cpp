#include "p1/request.hpp"

#include <utility>

#include "p1/selftest.hpp"

namespace p1 {

namespace {

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string())
        fail(ErrorKind::ParseError, std::string(what) + ": expected a string");
    return j.get<std::string>();
}

int expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        fail(ErrorKind::ParseError, std::string(what) + ": expected an integer");
    return j.get<int>();
}

FieldDescriptor field_or_rationals(const Json& payload) {
    if (payload.is_object() && payload.contains("field"))
        return field_from_json(payload.at("field"));
    return FieldDescriptor::rationals();
}

Json handle_splitting_type(const Json& payload) {
    TransitionBundle e = bundle_from_json(payload);
    SplittingType type = splitting_type(e);
    return Json{{"splittingType", to_json(type)}, {"rank", type.rank()}, {"degree", type.degree()}};
}

Json handle_factorize(const Json& payload, std::uint64_t seed) {
    TransitionBundle e = bundle_from_json(payload);
    BirkhoffWitness w = birkhoff_factorize(e, seed);
    return Json{{"splittingType", to_json(w.d)},
                {"witness", to_json(w)},
                {"verification", Json{{"productMatches", verify_witness(w, e.transition())}}}};
}

Json handle_cohomology(const Json& payload) {
    return to_json(cohomology_dims(bundle_from_json(payload)));
}

Json handle_hn(const Json& payload, std::uint64_t seed) {
    TransitionBundle e = bundle_from_json(payload);
    HNFiltration hn = hn_filtration(e, seed);
    std::vector<int> exponents;
    for (const HNStep& s : hn.steps)
        exponents.insert(exponents.end(), static_cast<std::size_t>(s.rank), s.slope);
    LaurentMatrix diag = LaurentMatrix::diagonal_monomials(e.field(), exponents);
    bool product = hn.basis_p * diag * hn.basis_q == e.transition();
    return Json{{"steps", to_json(hn)["steps"]},
                {"basisP", to_json(hn.basis_p)},
                {"basisQ", to_json(hn.basis_q)},
                {"verification", Json{{"productMatches", product}}}};
}

Json handle_construct(const Json& payload) {
    std::string kind_name = expect_string(require_key(payload, "kind"), "kind");
    ConstructionKind kind;
    bool binary = false;
    if (kind_name == "dual")
        kind = ConstructionKind::Dual;
    else if (kind_name == "tensor") {
        kind = ConstructionKind::Tensor;
        binary = true;
    } else if (kind_name == "exterior2")
        kind = ConstructionKind::Exterior2;
    else if (kind_name == "sym2")
        kind = ConstructionKind::Sym2;
    else if (kind_name == "directSum") {
        kind = ConstructionKind::DirectSum;
        binary = true;
    } else
        fail(ErrorKind::ParseError,
             "kind: expected one of dual, tensor, exterior2, sym2, directSum; got \"" +
                 kind_name + "\"");

    TransitionBundle first = bundle_from_json(require_key(payload, "first"));
    TransitionBundle result =
        binary ? bundle_construction(kind, first, bundle_from_json(require_key(payload, "second")))
               : bundle_construction(kind, first);
    return Json{{"bundle", to_json(result)}, {"splittingType", to_json(splitting_type(result))}};
}

Json handle_classify(const Json& payload) {
    return to_json(classify_bundle(bundle_from_json(payload)));
}

Json handle_pushout(const Json& payload) {
    Cocharacter chi = cocharacter_from_json(require_key(payload, "cocharacter"));
    TransitionBundle e = cocharacter_pushout(chi, field_or_rationals(payload));
    return Json{{"bundle", to_json(e)}, {"splittingType", to_json(splitting_type(e))}};
}

Json handle_pgl_lift(const Json& payload) {
    return to_json(pgl_lift(cocharacter_from_json(payload)));
}

Json handle_double_coset(const Json& payload, std::uint64_t seed) {
    FieldDescriptor field = field_from_json(require_key(payload, "field"));
    LaurentMatrix g = matrix_from_json(require_key(payload, "matrix"), field);
    DoubleCosetWitness w = double_coset_witnesses(g, seed);
    LaurentMatrix certificate = inverse(w.u) * g * inverse(w.v);
    LaurentMatrix expected = LaurentMatrix::diagonal_monomials(field, w.lambda.weights);
    return Json{{"lambda", Json(w.lambda.weights)},
                {"witness", to_json(w)},
                {"verification", Json{{"productMatches", verify_coset_witness(w, g)},
                                      {"uniformization", to_json(certificate)},
                                      {"uniformizationDiagonal", certificate == expected}}}};
}

Json handle_euler(const Json& payload, std::uint64_t seed) {
    FieldDescriptor field = field_or_rationals(payload);
    EulerWitness w = euler_witness(field);
    MorphismReport inc = validate_morphism(w.inclusion, seed);
    MorphismReport proj = validate_morphism(w.projection, seed);
    LaurentMatrix zero_row(field, 1, 1);
    bool composition_zero = w.projection.m0 * w.inclusion.m0 == zero_row &&
                            w.projection.m1 * w.inclusion.m1 == zero_row;
    Json out = to_json(w);
    out["verification"] = Json{{"inclusionValid", inc.valid},
                               {"projectionValid", proj.valid},
                               {"compositionZero", composition_zero}};
    return out;
}

ExecutionResult handle_selftest(const Json& payload, std::uint64_t seed) {
    int workers = 4;
    if (payload.is_object() && payload.contains("shards"))
        workers = expect_int(payload.at("shards"), "shards");
    if (workers < 1) fail(ErrorKind::InvalidArgument, "shards: expected a positive count");
    SelftestReport report = run_selftest(seed, workers);
    Json out{{"passed", report.passed},
             {"failed", report.failed},
             {"failures", Json(report.failures)}};
    return {out, report.ok() ? 0 : 1};
}

} // namespace

std::string command_name(Command c) {
    switch (c) {
    case Command::SplittingType: return "splitting-type";
    case Command::Factorize: return "factorize";
    case Command::Cohomology: return "cohomology";
    case Command::Hn: return "hn";
    case Command::Construct: return "construct";
    case Command::Classify: return "classify";
    case Command::Pushout: return "pushout";
    case Command::PglLift: return "pgl-lift";
    case Command::DoubleCoset: return "double-coset";
    case Command::EulerWitness: return "euler-witness";
    case Command::Selftest: return "selftest";
    }
    fail(ErrorKind::InvalidArgument, "unhandled command");
}

Command command_from_name(const std::string& name) {
    static const std::pair<const char*, Command> table[] = {
        {"splitting-type", Command::SplittingType},
        {"factorize", Command::Factorize},
        {"cohomology", Command::Cohomology},
        {"hn", Command::Hn},
        {"construct", Command::Construct},
        {"classify", Command::Classify},
        {"pushout", Command::Pushout},
        {"pgl-lift", Command::PglLift},
        {"double-coset", Command::DoubleCoset},
        {"euler-witness", Command::EulerWitness},
        {"selftest", Command::Selftest},
    };
    for (const auto& [key, value] : table)
        if (name == key) return value;
    fail(ErrorKind::UnknownCommand, "unknown command \"" + name + "\"");
}

TaskRequest parse_request(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorKind::ParseError, "request: expected an object");

    TaskRequest req;
    req.command = command_from_name(expect_string(require_key(doc, "command"), "command"));
    if (doc.contains("payload")) {
        const Json& payload = doc.at("payload");
        if (!payload.is_object()) fail(ErrorKind::ParseError, "payload: expected an object");
        req.payload = payload;
    }
    if (doc.contains("seed")) {
        const Json& seed = doc.at("seed");
        bool ok = seed.is_number_unsigned() ||
                  (seed.is_number_integer() && seed.get<long long>() >= 0);
        if (!ok) fail(ErrorKind::ParseError, "seed: expected a non-negative integer");
        req.seed = seed.get<std::uint64_t>();
    }
    return req;
}

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::ParseError || kind == ErrorKind::UnknownCommand ? 2 : 1;
}

Json error_json(const Error& e) {
    std::string kind(to_string(e.kind()));
    std::string message = e.what();
    if (message.rfind(kind + ": ", 0) == 0) message = message.substr(kind.size() + 2);
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

ExecutionResult execute(const TaskRequest& req) {
    try {
        switch (req.command) {
        case Command::SplittingType: return {handle_splitting_type(req.payload), 0};
        case Command::Factorize: return {handle_factorize(req.payload, req.seed), 0};
        case Command::Cohomology: return {handle_cohomology(req.payload), 0};
        case Command::Hn: return {handle_hn(req.payload, req.seed), 0};
        case Command::Construct: return {handle_construct(req.payload), 0};
        case Command::Classify: return {handle_classify(req.payload), 0};
        case Command::Pushout: return {handle_pushout(req.payload), 0};
        case Command::PglLift: return {handle_pgl_lift(req.payload), 0};
        case Command::DoubleCoset: return {handle_double_coset(req.payload, req.seed), 0};
        case Command::EulerWitness: return {handle_euler(req.payload, req.seed), 0};
        case Command::Selftest: return handle_selftest(req.payload, req.seed);
        }
        fail(ErrorKind::InvalidArgument, "unhandled command");
    } catch (const Error& e) {
        return {error_json(e), exit_code_for(e.kind())};
    } catch (const std::exception& e) {
        Json diag{{"error", Json{{"kind", "InternalError"}, {"message", e.what()}}}};
        return {diag, 1};
    }
}

} // namespace p1
