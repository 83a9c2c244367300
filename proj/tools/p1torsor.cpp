#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "p1/request.hpp"

namespace {

constexpr int kExitParse = 2;

struct CommandSpec {
    const char* name;
    p1::Command command;
    const char* help;
    bool reads_stdin; // payload-free commands never block on a missing --input
};

const CommandSpec kCommands[] = {
    {"splitting-type", p1::Command::SplittingType,
     "Decompose a bundle into line bundle degrees", true},
    {"factorize", p1::Command::Factorize,
     "Factor a transition matrix through its diagonal model, with witness", true},
    {"cohomology", p1::Command::Cohomology, "Section and obstruction dimensions h0, h1", true},
    {"hn", p1::Command::Hn, "Slope filtration steps and diagonalizing bases", true},
    {"construct", p1::Command::Construct,
     "Apply dual, tensor, exterior2, sym2, or directSum to bundle inputs", true},
    {"classify", p1::Command::Classify, "Dominant cocharacter classifying a bundle", true},
    {"pushout", p1::Command::Pushout, "Bundle associated to a diagonal cocharacter", true},
    {"pgl-lift", p1::Command::PglLift, "Lift a projective cocharacter class to GL", true},
    {"double-coset", p1::Command::DoubleCoset,
     "Normal form u * t^lambda * v of an invertible Laurent matrix", true},
    {"euler-witness", p1::Command::EulerWitness,
     "Short exact sequence showing slopes are not additive in extensions", false},
    {"selftest", p1::Command::Selftest, "Run the built-in invariant suites", false},
};

std::string read_input(const std::string& path, bool reads_stdin) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "p1torsor: cannot open input file " << path << "\n";
            std::exit(kExitParse);
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    if (!reads_stdin) return "";
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
}

bool blank(const std::string& text) {
    return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

/// Accept either a bare payload document or a full request document whose
/// "command" matches the invoked subcommand.
p1::TaskRequest build_request(p1::Command command, const std::string& text,
                              std::optional<std::uint64_t> seed_flag) {
    p1::Json doc = p1::Json::object();
    if (!blank(text)) {
        try {
            doc = p1::Json::parse(text);
        } catch (const p1::Json::parse_error& e) {
            p1::fail(p1::ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
        }
    }
    if (!doc.is_object()) p1::fail(p1::ErrorKind::ParseError, "input: expected a JSON object");

    p1::TaskRequest req;
    if (doc.contains("command")) {
        req = p1::parse_request(doc.dump());
        if (req.command != command)
            p1::fail(p1::ErrorKind::ParseError,
                     "command: input document says \"" + p1::command_name(req.command) +
                         "\" but the \"" + p1::command_name(command) +
                         "\" subcommand was invoked");
    } else {
        req.command = command;
        req.payload = doc;
    }
    if (seed_flag) req.seed = *seed_flag;
    return req;
}

void write_output(const std::string& path, const p1::Json& output) {
    std::string text = output.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "p1torsor: cannot open output file " << path << "\n";
        std::exit(kExitParse);
    }
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for vector bundles on the projective line: splitting "
                 "types, factorization witnesses, cohomology, slope filtrations, and loop "
                 "group double cosets. Commands read a JSON payload (or a full request "
                 "document) and write a JSON result with verification data."};
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;
    std::uint64_t seed_value = p1::kDefaultSeed;
    bool seed_given = false;
    int shards = 0;

    const CommandSpec* chosen = nullptr;
    for (const CommandSpec& spec : kCommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--input", input_path, "Input JSON file (default: stdin)");
        sub->add_option("--output", output_path, "Output JSON file (default: stdout)");
        sub->add_option("--seed", seed_value, "Seed for randomized searches")
            ->each([&seed_given](const std::string&) { seed_given = true; });
        if (spec.command == p1::Command::Selftest)
            sub->add_option("--shards", shards, "Concurrent suite workers (default 4)");
        sub->callback([&chosen, spec_ptr = &spec] { chosen = spec_ptr; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        std::string text = read_input(input_path, chosen->reads_stdin);
        p1::TaskRequest req = build_request(
            chosen->command, text,
            seed_given ? std::optional<std::uint64_t>(seed_value) : std::nullopt);
        if (shards > 0 && req.command == p1::Command::Selftest) req.payload["shards"] = shards;
        p1::ExecutionResult result = p1::execute(req);
        write_output(output_path, result.output);
        return result.exit_code;
    } catch (const p1::Error& e) {
        write_output(output_path, p1::error_json(e));
        return p1::exit_code_for(e.kind());
    }
}
