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

#include "fermicluster/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermicluster/encoded.hpp"
#include "fermicluster/kernels.hpp"
#include "fermicluster/mbqc.hpp"
#include "fermicluster/model.hpp"
#include "fermicluster/qubit.hpp"
#include "fermicluster/spectral.hpp"
#include "fermicluster/synth.hpp"

#ifndef FERMICLUSTER_VERSION
#define FERMICLUSTER_VERSION "unknown"
#endif

namespace fermicluster::cli {

namespace {

constexpr double kEnergyTol = 1e-9;
constexpr double kOverlapTol = 1e-10;
constexpr double kRepresentationTol = 1e-12;
constexpr double kStabilizerTol = 1e-10;
constexpr double kFidelityTol = 1e-9;
constexpr double kEntropyTol = 1e-9;

Json tolerances_json() {
    Json t;
    t["energy"] = kEnergyTol;
    t["ground_overlap"] = kOverlapTol;
    t["representation"] = kRepresentationTol;
    t["stabilizer"] = kStabilizerTol;
    t["fidelity"] = kFidelityTol;
    t["entropy"] = kEntropyTol;
    t["degeneracy"] = spectral::kDegeneracyThreshold;
    return t;
}

Json complex_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

Json vector_json(const CVector &v) {
    Json out = Json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(complex_json(v(k)));
    }
    return out;
}

Json matrix_json(const CMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json rr = Json::array();
        Json ri = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::string bits_string(std::uint64_t b, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((b >> (n - 1 - q)) & 1u) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

std::string outcomes_string(const std::array<int, 3> &m) {
    return std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]);
}

Json config_json(const RunConfig &c) {
    Json j;
    j["command"] = c.command;
    j["n"] = c.n;
    j["tau"] = c.tau;
    j["thetas"] = c.thetas;
    j["seed"] = c.seed;
    j["seed_source"] = c.seed_source;
    j["shots"] = c.shots;
    j["forced_outcomes"] = c.forced_outcomes ? Json(outcomes_string(*c.forced_outcomes)) : Json(nullptr);
    j["gate"] = c.gate;
    j["theta"] = c.theta;
    j["output_format"] = c.output_format;
    return j;
}

}  // namespace

void validate(const RunConfig &c) {
    static const std::vector<std::string> kCommands = {"spectrum", "verify", "teleport", "subgraph", "synth"};
    if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end()) {
        throw ConfigError("unknown command '" + c.command + "'");
    }
    if (c.n < 1 || c.n > kMaxQubits) {
        throw ConfigError("n must be in 1.." + std::to_string(kMaxQubits));
    }
    if (!(c.tau > 0.0) || !std::isfinite(c.tau)) {
        throw ConfigError("tau must be a positive finite number");
    }
    if (c.shots < 1) {
        throw ConfigError("shots must be >= 1");
    }
    if (c.thetas.size() > static_cast<std::size_t>(c.n - 1)) {
        throw ConfigError("at most n-1 angles are allowed");
    }
    for (double t : c.thetas) {
        if (!std::isfinite(t)) {
            throw ConfigError("angles must be finite");
        }
    }
    if (c.command == "teleport" && c.n < 2) {
        throw ConfigError("teleport needs n >= 2");
    }
    if (c.output_format != "json" && c.output_format != "csv") {
        throw ConfigError("format must be json or csv");
    }
    static const std::vector<std::string> kGates = {"rz",       "hadamard",    "rx90", "cz",
                                                    "sandwich", "obstruction", "all"};
    if (std::find(kGates.begin(), kGates.end(), c.gate) == kGates.end()) {
        throw ConfigError("unknown gate '" + c.gate + "'");
    }
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

void Report::check_close(const std::string &name, double value, double expected, double tolerance) {
    checks.push_back({name, value, tolerance, std::abs(value - expected) <= tolerance});
}

void Report::check_at_least(const std::string &name, double value, double threshold) {
    checks.push_back({name, value, 1.0 - threshold, value >= threshold});
}

void Report::check_true(const std::string &name, bool ok) {
    checks.push_back({name, ok ? 1.0 : 0.0, 0.0, ok});
}

Report cmd_spectrum(const RunConfig &config) {
    validate(config);
    Report r;
    r.config = config;
    const int n = config.n;
    const double tau = config.tau;
    const auto spectrum = spectral::diagonalize(model::leapfrog_1d(n, tau));
    const auto &ev = spectrum.eigenvalues;
    const int degeneracy = spectral::ground_degeneracy(spectrum);
    const double gap = ev.size() > 1 ? ev(1) - ev(0) : 0.0;
    Json eig = Json::array();
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        eig.push_back(ev(k));
    }
    r.results["eigenvalues"] = std::move(eig);
    r.results["ground_energy"] = ev(0);
    r.results["gap"] = gap;
    r.results["degeneracy"] = degeneracy;
    r.results["gap_over_tau"] = gap / tau;
    r.results["stated_gap_over_tau"] = 1.0;
    r.results["gap_discrepancy"] = std::abs(gap / tau - 1.0) > kEnergyTol;
    r.check_close("ground_energy", ev(0), -n * tau, kEnergyTol);
    r.check_true("unique_ground_state", degeneracy == 1);
    r.check_close("gap_over_tau", gap / tau, 2.0, kEnergyTol);
    return r;
}

Report cmd_verify(const RunConfig &config) {
    validate(config);
    Report r;
    r.config = config;
    const int n = config.n;
    const double tau = config.tau;
    const auto map = encoded::chain_register(n);
    const auto h = model::leapfrog_1d(n, tau);
    const auto g = spectral::ground_state(h);

    Json amps = Json::array();
    for (std::size_t k = 0; k < map.dim(); ++k) {
        amps.push_back({{"fock", fock::to_string(map.sector().state(k))},
                        {"encoded", bits_string(map.encoded_index(k), n)},
                        {"amplitude", complex_json(g.vector(static_cast<Eigen::Index>(k)))}});
    }
    r.results["ground_state"] = std::move(amps);
    r.results["ground_energy"] = g.energy;
    r.results["gap"] = g.gap;
    r.check_close("ground_energy", g.energy, -n * tau, kEnergyTol);

    const CVector cluster = map.to_sector(model::dressed_cluster_state(n));
    const double overlap = std::abs(g.vector.dot(cluster));
    r.results["cluster_overlap"] = overlap;
    r.check_at_least("ground_state_vs_cluster_construction", overlap, 1.0 - kOverlapTol);

    const auto spin = model::spin_hamiltonian(n, tau);
    const double d_spin = model::max_abs_difference(h, spin);
    const auto enc = model::encoded_hamiltonian(n, tau);
    const double d_enc = model::max_abs_difference(map.to_encoded(h), enc);
    r.check_close("fermionic_vs_spin", d_spin, 0.0, kRepresentationTol);
    r.check_close("fermionic_vs_encoded", d_enc, 0.0, kRepresentationTol);

    // Conjugating by Z on qubits 0..n-2 turns the encoded form into the cluster form.
    CMatrix dress = CMatrix::Identity(enc.dim(), enc.dim());
    for (Eigen::Index k = 0; k < enc.dim(); ++k) {
        if (std::popcount(static_cast<std::uint64_t>(k) & ~std::uint64_t{1}) & 1) {
            dress(k, k) = -1.0;
        }
    }
    const double d_cluster =
        (dress * enc.entries() * dress - model::cluster_hamiltonian(n, tau).entries()).cwiseAbs().maxCoeff();
    r.check_close("encoded_vs_cluster_form", d_cluster, 0.0, kRepresentationTol);

    const CVector genc = map.to_encoded(g.vector);
    Json stabs = Json::array();
    auto stabilizer = [&](int j, bool boundary) {
        std::string label(static_cast<std::size_t>(n), 'I');
        label[static_cast<std::size_t>(j)] = 'X';
        if (j > 0) {
            label[static_cast<std::size_t>(j - 1)] = 'Z';
        }
        if (!boundary) {
            label[static_cast<std::size_t>(j + 1)] = 'Z';
        }
        const double value = qubit::pauli_expectation(genc, label).real();
        // Each term's coefficient is +tau (interior) or -tau (boundary); the
        // ground state minimizes every term separately.
        const double expected = boundary ? 1.0 : -1.0;
        stabs.push_back({{"pauli", label}, {"expectation", value}, {"expected", expected}});
        r.check_close("stabilizer_" + label, value, expected, kStabilizerTol);
    };
    for (int j = 0; j + 1 < n; ++j) {
        stabilizer(j, false);
    }
    stabilizer(n - 1, true);
    r.results["stabilizers"] = std::move(stabs);
    r.results["max_diff_fermionic_spin"] = d_spin;
    r.results["max_diff_fermionic_encoded"] = d_enc;
    return r;
}

namespace {

// Post-measurement state of qubit 1 for n = 2 and one angle.
CVector branch_formula(double theta, int m) {
    const Complex e = std::exp(kI * theta);
    CVector v(2);
    if (m == 0) {
        v << 1.0 - e, 1.0 + e;
    } else {
        v << 1.0 + e, 1.0 - e;
    }
    return v;
}

}  // namespace

Report cmd_teleport(const RunConfig &config_in) {
    RunConfig config = config_in;
    if (config.thetas.empty() && config.n >= 2) {
        config.thetas.assign(static_cast<std::size_t>(config.n - 1), std::numbers::pi / 4);
    }
    validate(config);
    Report r;
    r.config = config;
    const int n = config.n;
    const CVector ideal = mbqc::ideal_chain_output(config.thetas);
    const bool branch_case = n == 2 && config.thetas.size() == 1;

    double min_logical = 1.0;
    double min_remainder = 1.0;
    double min_branch = 1.0;
    int zeros = 0;
    Json shots = Json::array();
    CVector first_output;
    for (int s = 0; s < config.shots; ++s) {
        const std::uint64_t seed = mbqc::derive_seed(config.seed, static_cast<std::uint64_t>(s));
        const auto t = mbqc::run_chain(n, config.thetas, seed);
        const double fid = qubit::state_fidelity(ideal, t.logical_output);
        min_logical = std::min(min_logical, fid);
        min_remainder = std::min(min_remainder, t.remainder_overlap);
        Json outcomes = Json::array();
        Json applied = Json::array();
        for (const auto &step : t.steps) {
            outcomes.push_back(step.measurement.outcome);
            applied.push_back(step.applied_theta);
        }
        if (!t.steps.empty() && t.steps.front().measurement.outcome == 0) {
            ++zeros;
        }
        Json shot = {{"seed", seed},
                     {"outcomes", std::move(outcomes)},
                     {"applied_thetas", std::move(applied)},
                     {"frame", t.frame.label()},
                     {"logical_fidelity", fid}};
        if (branch_case) {
            const int m = t.steps.front().measurement.outcome;
            const double bf = qubit::state_fidelity(branch_formula(config.thetas.front(), m), t.output);
            min_branch = std::min(min_branch, bf);
            shot["branch_fidelity"] = bf;
        }
        if (s == 0) {
            first_output = t.output;
            shot["output"] = vector_json(t.output);
            shot["logical_output"] = vector_json(t.logical_output);
        }
        shots.push_back(std::move(shot));
    }
    r.results["ideal_output"] = vector_json(ideal);
    r.results["first_qubit_zero_count"] = zeros;
    r.results["shots"] = std::move(shots);
    r.check_at_least("min_logical_fidelity", min_logical, 1.0 - kFidelityTol);
    r.check_at_least("min_remainder_overlap", min_remainder, 1.0 - kFidelityTol);
    if (branch_case) {
        r.check_at_least("min_branch_fidelity", min_branch, 1.0 - kFidelityTol);
    }
    const auto replay = mbqc::run_chain(n, config.thetas, mbqc::derive_seed(config.seed, 0));
    r.check_true("replay_identical", replay.output == first_output);
    return r;
}

Report cmd_subgraph(const RunConfig &config) {
    validate(config);
    Report r;
    r.config = config;
    const auto table = mbqc::generate_byproduct_table();
    Json jtable = Json::array();
    std::vector<std::string> listed;
    for (const auto &e : table) {
        jtable.push_back({{"outcomes", outcomes_string(e.outcomes)},
                          {"listed", e.listed},
                          {"candidates", e.candidates},
                          {"generic_inputs", e.generic}});
        listed.push_back(e.listed);
    }
    r.results["byproduct_table"] = std::move(jtable);
    {
        auto sorted = listed;
        std::sort(sorted.begin(), sorted.end());
        const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        const bool filled = std::none_of(listed.begin(), listed.end(), [](const auto &s) { return s.empty(); });
        r.check_true("byproduct_table_bijective", distinct && filled);
    }

    double min_fid = 1.0;
    double max_entropy_dev = 0.0;
    Json runs = Json::array();
    const int shots = config.forced_outcomes ? 1 : config.shots;
    for (int s = 0; s < shots; ++s) {
        mbqc::SubgraphOptions opt;
        opt.seed = mbqc::derive_seed(config.seed, static_cast<std::uint64_t>(s));
        opt.forced = config.forced_outcomes;
        const auto t = mbqc::run_subgraph(opt);
        const int code = t.outcomes[0] * 4 + t.outcomes[1] * 2 + t.outcomes[2];
        const auto &entry = table[static_cast<std::size_t>(code)];
        const CVector expected = qubit::pauli_string(entry.listed) * t.reference;
        const double fid = qubit::state_fidelity(expected, t.output);
        min_fid = std::min(min_fid, fid);
        max_entropy_dev = std::max(max_entropy_dev, std::abs(t.entropy_bits - 1.0));
        runs.push_back({{"outcomes", outcomes_string(t.outcomes)},
                        {"byproduct", entry.listed},
                        {"fidelity", fid},
                        {"entropy_bits", t.entropy_bits},
                        {"output", vector_json(t.output)}});
    }
    r.results["runs"] = std::move(runs);
    r.check_at_least("min_byproduct_fidelity", min_fid, 1.0 - kFidelityTol);
    r.check_close("max_entropy_deviation", max_entropy_dev, 0.0, kEntropyTol);
    return r;
}

namespace {

Json gate_json(const synth::GateReport &g) {
    Json metrics = Json::object();
    for (const auto &[k, v] : g.metrics) {
        metrics[k] = v;
    }
    Json notes = Json::object();
    for (const auto &[k, v] : g.notes) {
        notes[k] = v;
    }
    Json blocks = Json::array();
    for (const auto &b : g.blocks) {
        blocks.push_back({{"occupancy", b.occupancy},
                          {"expected", b.expected},
                          {"fidelity", b.fidelity},
                          {"unitary", matrix_json(b.unitary)}});
    }
    return {{"name", g.name},
            {"fidelity", g.fidelity},
            {"tolerance", g.tolerance},
            {"pass", g.pass},
            {"reading", model::to_string(g.reading)},
            {"alternative_fidelity", g.alternative_fidelity ? Json(*g.alternative_fidelity) : Json(nullptr)},
            {"metrics", std::move(metrics)},
            {"notes", std::move(notes)},
            {"blocks", std::move(blocks)},
            {"synthesized", matrix_json(g.synthesized)},
            {"reference", matrix_json(g.reference)}};
}

}  // namespace

Report cmd_synth(const RunConfig &config) {
    validate(config);
    Report r;
    r.config = config;
    const double tau = config.tau;
    std::vector<synth::GateReport> gates;
    const auto want = [&](const char *name) { return config.gate == "all" || config.gate == name; };
    if (want("rz")) {
        gates.push_back(synth::synth_rz(config.theta));
    }
    if (want("hadamard")) {
        gates.push_back(synth::synth_hadamard_attempt(tau));
    }
    if (want("rx90")) {
        gates.push_back(synth::synth_rx90_attempt(tau));
    }
    if (want("cz")) {
        gates.push_back(synth::synth_cz(tau));
    }
    if (want("sandwich")) {
        gates.push_back(synth::synth_hadamard_sandwich(tau));
    }
    Json jg = Json::array();
    for (const auto &g : gates) {
        r.check_at_least(g.name + "_fidelity", g.fidelity, 1.0 - g.tolerance);
        jg.push_back(gate_json(g));
    }
    if (want("obstruction")) {
        const auto g = synth::verify_obstruction(qubit::hadamard());
        r.check_at_least("obstruction_matches_cz_u_cz", g.fidelity, 1.0 - g.tolerance);
        r.check_true("obstruction_not_local", g.metric("equals_local") == 0.0);
        jg.push_back(gate_json(g));
    }
    r.results["gates"] = std::move(jg);
    return r;
}

Report run(const RunConfig &config) {
    if (config.command == "spectrum") {
        return cmd_spectrum(config);
    }
    if (config.command == "verify") {
        return cmd_verify(config);
    }
    if (config.command == "teleport") {
        return cmd_teleport(config);
    }
    if (config.command == "subgraph") {
        return cmd_subgraph(config);
    }
    if (config.command == "synth") {
        return cmd_synth(config);
    }
    throw ConfigError("unknown command '" + config.command + "'");
}

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

}  // namespace

Json to_json(const Report &report) {
    Json doc;
    doc["tool"] = "fermicluster";
    doc["version"] = FERMICLUSTER_VERSION;
    doc["kernel_isa"] = std::string(kernels::to_string(kernels::active_isa()));
    if (!report.config.deterministic) {
        doc["timestamp"] = utc_timestamp();
    }
    doc["config"] = config_json(report.config);
    doc["tolerances"] = tolerances_json();
    doc["results"] = report.results;
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    doc["checks"] = std::move(checks);
    doc["all_pass"] = report.all_pass();
    return doc;
}

std::string render_json(const Report &report) {
    return to_json(report).dump(2) + "\n";
}

std::string render_csv(const Report &report) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "name,value,tolerance,pass\n";
    for (const auto &c : report.checks) {
        out << c.name << ',' << c.value << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

std::vector<double> parse_angles(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw ConfigError("bad angle '" + item + "'");
        }
        if (used != item.size()) {
            throw ConfigError("bad angle '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::array<int, 3> parse_outcomes(const std::string &text) {
    if (text.size() != 3) {
        throw ConfigError("outcomes must be three bits, e.g. 010");
    }
    std::array<int, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (text[k] != '0' && text[k] != '1') {
            throw ConfigError("outcomes must be three bits, e.g. 010");
        }
        out[k] = text[k] - '0';
    }
    return out;
}

namespace {

struct RawOptions {
    std::string thetas;
    std::string outcomes;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App *sub, RunConfig &c, RawOptions &raw) {
    sub->add_option("--n", c.n, "Number of encoded qubits (1..10)");
    sub->add_option("--tau", c.tau, "Hopping amplitude (> 0)");
    sub->add_option("--seed", raw.seed, "Base seed (falls back to FERMICLUSTER_SEED, then 0)");
    sub->add_option("--shots", c.shots, "Number of seeded shots");
    sub->add_option("--format", c.output_format, "Output format: json or csv");
    sub->add_option("--output", c.output_path, "Write the report to this path instead of stdout");
    sub->add_flag("--deterministic", c.deterministic, "Omit the timestamp so identical runs are byte-identical");
}

}  // namespace

int main(int argc, char **argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulator for the leapfrog fermion lattice and its encoded cluster state", "fermicluster"};
    app.require_subcommand(1);
    RunConfig config;
    RawOptions raw;

    auto *spectrum = app.add_subcommand("spectrum", "Spectrum of the leapfrog chain");
    auto *verify = app.add_subcommand("verify", "Ground state, stabilizer and representation checks");
    auto *teleport = app.add_subcommand("teleport", "Gate teleportation along the chain");
    auto *subgraph = app.add_subcommand("subgraph", "Entangling protocol on the ten-site subgraph");
    auto *synth_cmd = app.add_subcommand("synth", "Pulse synthesis of encoded gates");
    for (auto *sub : {spectrum, verify, teleport, subgraph, synth_cmd}) {
        add_common(sub, config, raw);
    }
    teleport->add_option("--thetas", raw.thetas, "Comma-separated angles in radians (default: pi/4 each)");
    subgraph->add_option("--outcome", raw.outcomes, "Forced outcomes m1 m2 m3 as three bits, e.g. 010");
    synth_cmd->add_option("--gate", config.gate, "rz, hadamard, rx90, cz, sandwich, obstruction or all");
    synth_cmd->add_option("--theta", config.theta, "R_Z angle in radians");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        for (auto *sub : app.get_subcommands()) {
            config.command = sub->get_name();
        }
        if (!raw.thetas.empty()) {
            config.thetas = parse_angles(raw.thetas);
        }
        if (!raw.outcomes.empty()) {
            config.forced_outcomes = parse_outcomes(raw.outcomes);
        }
        if (raw.seed) {
            config.seed = *raw.seed;
            config.seed_source = "flag";
        } else if (const char *env = std::getenv("FERMICLUSTER_SEED"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                config.seed = std::stoull(env, &used);
                if (env[used] != '\0') {
                    throw ConfigError("");
                }
            } catch (const std::exception &) {
                throw ConfigError("FERMICLUSTER_SEED is not an unsigned integer");
            }
            config.seed_source = "env";
        }
        const Report report = run(config);
        const std::string text = config.output_format == "csv" ? render_csv(report) : render_json(report);
        if (config.output_path.empty()) {
            out << text;
        } else {
            std::ofstream file(config.output_path, std::ios::binary);
            if (!file) {
                throw ConfigError("cannot open output path '" + config.output_path + "'");
            }
            file << text;
        }
        return report.exit_code();
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace fermicluster::cli
