#pragma once

#include "novipot/critical.hpp"
#include "novipot/invariants.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace novipot::cli {

enum class Command { certify, verify, solve, blowup, invariants, clifford_qh };
enum class Format { json, text };

std::string to_string(Command c);
Command command_from_string(const std::string& name);

/// Bad flags, unparseable values or inconsistent settings; maps to exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Command command = Command::certify;
    PotentialSpec spec;
    std::optional<TorusSpec> torus;                 // invariants
    std::optional<std::vector<ThetaBlock>> against;  // invariants: torus to compare with
    std::map<std::string, std::string> point;       // verify: variable -> scalar text
    Rational cutoff = Lattice::default_cutoff;
    Rational floor = Lattice::default_floor;
    int threads = 1;
    int max_k = 8;
    std::string output = "-";
    Format format = Format::json;

    /// Throws UsageError unless cutoff > floor > 0 and the spec is valid for the command.
    void validate() const;
    Lattice lattice() const;

    nlohmann::json to_json() const;
    /// Accepts a full config, a bare PotentialSpec, or a bare TorusSpec (command invariants).
    static RunConfig from_json(const nlohmann::json& j);

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// argv[0] is the program name. The default cutoff comes from NOVIPOT_CUTOFF when set.
RunConfig parse_args(int argc, const char* const* argv);
RunConfig load_config(const std::string& path);

struct Report {
    int exit_code = 0;  // 0 success, 2 the mathematics says no
    nlohmann::json body;
    std::string text;
};

Report execute(const RunConfig& config);

/// Canonical bytes: JSON with sorted keys and two-space indent, or the text rendering.
std::string emit(const Report& report, Format format);

/// Full pipeline with exit-code mapping; usage errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace novipot::cli
