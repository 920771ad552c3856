// Copyright 2026 The fermicluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fermicluster::cli {

using Json = nlohmann::ordered_json;

/// Invalid user input; maps to exit code 2.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kMaxQubits = 10;

struct RunConfig {
    std::string command;
    int n = 2;
    double tau = 1.0;
    std::vector<double> thetas;
    std::uint64_t seed = 0;
    std::string seed_source = "default";
    int shots = 1;
    std::optional<std::array<int, 3>> forced_outcomes;
    std::string gate = "all";
    double theta = 0.7853981633974483;  // pi/4
    std::string output_format = "json";
    std::string output_path;
    bool deterministic = false;
};

/// Throws ConfigError when a field is out of range.
void validate(const RunConfig &config);

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    RunConfig config;
    Json results = Json::object();
    std::vector<Check> checks;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? kExitOk : kExitCheckFailed; }
    /// "pass" iff |value - expected| <= tolerance.
    void check_close(const std::string &name, double value, double expected, double tolerance);
    /// "pass" iff value >= threshold; the tolerance field carries 1 - threshold.
    void check_at_least(const std::string &name, double value, double threshold);
    void check_true(const std::string &name, bool ok);
};

Report cmd_spectrum(const RunConfig &config);
Report cmd_verify(const RunConfig &config);
Report cmd_teleport(const RunConfig &config);
Report cmd_subgraph(const RunConfig &config);
Report cmd_synth(const RunConfig &config);

/// Dispatches on config.command.
Report run(const RunConfig &config);

Json to_json(const Report &report);
std::string render_json(const Report &report);
std::string render_csv(const Report &report);

/// Parses "0.1,0.2" style lists; throws ConfigError.
std::vector<double> parse_angles(const std::string &text);
/// Parses a three-character bit string such as "010".
std::array<int, 3> parse_outcomes(const std::string &text);

/// Full command line entry point. Returns the process exit code.
int main(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace fermicluster::cli
