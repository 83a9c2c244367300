#pragma once

#include <string>

#include "p1/json_io.hpp"

namespace p1 {

enum class Command {
    SplittingType,
    Factorize,
    Cohomology,
    Hn,
    Construct,
    Classify,
    Pushout,
    PglLift,
    DoubleCoset,
    EulerWitness,
    Selftest,
};

/// The hyphenated name used on the command line and in request documents.
std::string command_name(Command c);
Command command_from_name(const std::string& name); // UnknownCommand otherwise

struct TaskRequest {
    Command command = Command::Selftest;
    Json payload = Json::object();
    std::uint64_t seed = kDefaultSeed;
};

/// Parse a full request document {"command": ..., "payload": {...}, "seed": n}.
/// Payload and seed are optional at this stage; each command validates its own
/// payload schema during execution.
TaskRequest parse_request(const std::string& text);

struct ExecutionResult {
    Json output;
    int exit_code = 0; // 0 success, 1 domain error, 2 parse error
};

/// Dispatch to the library and wrap errors as structured diagnostics. Never
/// throws: failures come back as {"error": {"kind", "message"}} with the
/// matching exit code.
ExecutionResult execute(const TaskRequest& req);

/// Exit code class for an error kind: 2 for parse-level kinds, 1 otherwise.
int exit_code_for(ErrorKind kind);

/// {"error": {"kind", "message"}} with the kind prefix stripped from what().
Json error_json(const Error& e);

} // namespace p1
