// Command-line runner for the Dirac automaton experiments and the
// verification suites. Emits deterministic CSV/JSON; exit codes:
// 0 success, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qca/experiments.hpp"
#include "qca/threading.hpp"
#include "qca/verify.hpp"
#include "qca/version.hpp"

using json = nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error("config error: " + field + ": " + message) {}
};

double parse_angle(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ConfigError("theta", "empty angle expression");
    const std::size_t pos = t.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw ConfigError("theta", "cannot parse angle '" + text + "'");
        }
        if (used != t.size()) throw ConfigError("theta", "cannot parse angle '" + text + "'");
        return v;
    }
    std::string head = t.substr(0, pos);
    std::string tail = t.substr(pos + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    double numerator = 1.0;
    if (head == "-") {
        numerator = -1.0;
    } else if (!head.empty()) {
        std::size_t used = 0;
        try {
            numerator = std::stod(head, &used);
        } catch (const std::exception&) {
            throw ConfigError("theta", "cannot parse angle '" + text + "'");
        }
        if (used != head.size()) throw ConfigError("theta", "cannot parse angle '" + text + "'");
    }
    double denominator = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') throw ConfigError("theta", "cannot parse angle '" + text + "'");
        std::size_t used = 0;
        try {
            denominator = std::stod(tail.substr(1), &used);
        } catch (const std::exception&) {
            throw ConfigError("theta", "cannot parse angle '" + text + "'");
        }
        if (used != tail.size() - 1 || denominator == 0.0)
            throw ConfigError("theta", "cannot parse angle '" + text + "'");
    }
    return numerator * M_PI / denominator;
}

enum class FieldType { Int, Real, Str };

struct FieldSpec {
    const char* key;
    FieldType type;
};

void validate_config(const json& cfg, const std::vector<FieldSpec>& fields) {
    if (!cfg.is_object()) throw ConfigError("<root>", "config must be a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        const FieldSpec* spec = nullptr;
        for (const FieldSpec& f : fields)
            if (key == f.key) spec = &f;
        if (!spec) throw ConfigError(key, "unknown field");
        switch (spec->type) {
            case FieldType::Int:
                if (!value.is_number_integer()) throw ConfigError(key, "expected an integer");
                break;
            case FieldType::Real:
                if (!value.is_number() && !value.is_string())
                    throw ConfigError(key, "expected a number");
                break;
            case FieldType::Str:
                if (!value.is_string()) throw ConfigError(key, "expected a string");
                break;
        }
    }
}

json load_config_file(const std::string& path, const std::vector<FieldSpec>& fields) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    validate_config(cfg, fields);
    return cfg;
}

int get_int(const json& cfg, const char* key, int fallback) {
    if (!cfg.contains(key)) return fallback;
    return cfg[key].get<int>();
}

double get_real(const json& cfg, const char* key, double fallback) {
    if (!cfg.contains(key)) return fallback;
    if (cfg[key].is_string()) return parse_angle(cfg[key].get<std::string>());
    return cfg[key].get<double>();
}

/// theta from the merged config: an explicit theta (number or expression)
/// or a mass ratio, not both.
double resolve_theta(const json& cfg, double fallback) {
    const bool has_theta = cfg.contains("theta");
    const bool has_ratio = cfg.contains("m_ratio");
    if (has_theta && has_ratio) throw ConfigError("theta", "conflicts with m_ratio");
    if (has_ratio) {
        const double ratio = cfg["m_ratio"].get<double>();
        if (!(ratio >= 0.0 && ratio <= 1.0))
            throw ConfigError("m_ratio", "must lie in [0, 1]");
        return qca::coupling_from_mass(ratio).theta;
    }
    if (has_theta) return get_real(cfg, "theta", fallback);
    return fallback;
}

struct OutputTarget {
    std::string path; // empty means stdout
    bool to_stdout() const { return path.empty() || path == "-"; }
};

json table_to_json(const qca::Table& t) {
    json meta = json::object();
    for (const auto& [k, v] : t.metadata) meta[k] = v;
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            if (t.column_kinds[c] == qca::ColumnKind::Int)
                row.push_back(static_cast<long long>(t.rows[r][c]));
            else
                row.push_back(t.rows[r][c]);
        }
        rows.push_back(row);
    }
    return json{{"metadata", meta}, {"columns", t.column_names}, {"rows", rows}};
}

std::string summary_path_for(const std::string& out_path) {
    const std::size_t dot = out_path.find_last_of('.');
    const std::size_t slash = out_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out_path + ".summary.json";
    return out_path.substr(0, dot) + ".summary.json";
}

void emit(const qca::Table& table, const std::optional<json>& summary, const OutputTarget& out,
          const std::string& format) {
    if (format == "json") {
        json doc = table_to_json(table);
        if (summary) doc["summary"] = *summary;
        const std::string text = doc.dump(2) + "\n";
        if (out.to_stdout()) {
            std::cout << text;
        } else {
            std::ofstream f(out.path, std::ios::binary);
            if (!f) throw ConfigError("out", "cannot write '" + out.path + "'");
            f << text;
        }
        return;
    }
    if (out.to_stdout()) {
        qca::write_csv(table, std::cout);
        if (summary) std::cout << "# summary: " << summary->dump() << "\n";
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw ConfigError("out", "cannot write '" + out.path + "'");
        qca::write_csv(table, f);
        if (summary) {
            std::ofstream s(summary_path_for(out.path), std::ios::binary);
            s << summary->dump(2) << "\n";
        }
    }
}

void log_clamps(long count) {
    if (count > 0)
        std::cerr << "note: clamped " << count << " probability value(s) into [0, 1]\n";
}

json run_summary_json(const qca::SingleParticleRun& run, bool mirror) {
    json t = json::array(), norm = json::array(), xm = json::array(), xs = json::array(),
         xv = json::array();
    for (const qca::StepStat& s : run.stats) {
        t.push_back(s.t);
        norm.push_back(s.norm);
        xm.push_back(s.x_mean);
        xs.push_back(s.x_star);
        xv.push_back(s.x_var);
    }
    json out{{"zeta", run.zeta},
             {"max_norm_drift", run.max_norm_drift},
             {"max_abs_slope", run.max_abs_slope},
             {"t", t},
             {"norm", norm},
             {"x_mean", xm},
             {"x_star", xs},
             {"x_var", xv}};
    if (mirror) out["max_mirror_residual"] = run.max_mirror_residual;
    return out;
}

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::string theta_text;
    double m_ratio = -1.0;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_theta = true) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override its keys");
    cmd->add_option("--out", flags.out_path, "output path ('-' or empty: stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_theta) {
        cmd->add_option("--theta", flags.theta_text, "mass angle in radians or e.g. pi/8");
        cmd->add_option("--m-ratio", flags.m_ratio, "mass ratio m / planck mass in [0, 1]");
        cmd->add_option("--threads", flags.threads, "worker thread cap (default: hardware)");
    }
}

/// Merge config file and CLI flags into one validated JSON object.
json merge_config(const CommonFlags& flags, CLI::App* cmd,
                  const std::vector<FieldSpec>& fields,
                  const std::vector<std::pair<const char*, const char*>>& int_flags,
                  const std::vector<std::pair<const char*, const char*>>& real_flags) {
    json cfg = flags.config_path.empty() ? json::object()
                                         : load_config_file(flags.config_path, fields);
    if (cmd->count("--theta") && cmd->count("--m-ratio"))
        throw ConfigError("theta", "conflicts with m_ratio");
    if (cmd->count("--theta")) {
        cfg.erase("m_ratio");
        cfg["theta"] = parse_angle(flags.theta_text);
    }
    if (cmd->count("--m-ratio")) {
        cfg.erase("theta");
        cfg["m_ratio"] = flags.m_ratio;
    }
    for (auto [flag, key] : int_flags)
        if (cmd->count(flag)) cfg[key] = static_cast<int>(cmd->get_option(flag)->as<int>());
    for (auto [flag, key] : real_flags)
        if (cmd->count(flag)) cfg[key] = cmd->get_option(flag)->as<double>();
    validate_config(cfg, fields);
    return cfg;
}

int resolve_threads(const CommonFlags& flags, const json& cfg) {
    int t = get_int(cfg, "threads", 0);
    if (flags.threads > 0) t = flags.threads;
    return t > 0 ? t : qca::default_thread_count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac quantum cellular automaton toolkit"};
    app.set_version_flag("--version", qca::kVersion);
    app.require_subcommand(1);

    int exit_code = 0;

    // refraction-curve ---------------------------------------------------
    auto* curve = app.add_subcommand("refraction-curve",
                                     "inverse vacuum refraction index zeta versus mass");
    static CommonFlags curve_flags;
    static int curve_samples = 101;
    curve->add_option("--samples", curve_samples, "grid points (default 101)");
    add_common(curve, curve_flags, false);
    curve->callback([&]() {
        const std::vector<FieldSpec> fields{{"samples", FieldType::Int}};
        json cfg = curve_flags.config_path.empty()
                       ? json::object()
                       : load_config_file(curve_flags.config_path, fields);
        if (curve->count("--samples")) cfg["samples"] = curve_samples;
        validate_config(cfg, fields);
        qca::RefractionConfig rc;
        rc.samples = get_int(cfg, "samples", 101);
        emit(qca::run_refraction_curve(rc), std::nullopt, {curve_flags.out_path},
             curve_flags.format);
    });

    // packet ---------------------------------------------------------------
    auto* packet = app.add_subcommand("packet", "Gaussian packet evolution");
    static CommonFlags packet_flags;
    static int packet_sites = 64, packet_steps = 180, packet_n0 = 0, packet_k = 8,
               packet_sign = 1;
    static double packet_delta = 2.0;
    packet->add_option("--sites", packet_sites, "field sites (default 64)");
    packet->add_option("--steps", packet_steps, "time steps (default 180)");
    packet->add_option("--n0", packet_n0, "packet center site (default 0)");
    packet->add_option("--delta", packet_delta, "packet width in sites (default 2)");
    packet->add_option("--k", packet_k, "carrier phase period (default 8)");
    packet->add_option("--sign", packet_sign, "+1 particle, -1 antiparticle");
    add_common(packet, packet_flags);
    packet->callback([&]() {
        const std::vector<FieldSpec> fields{
            {"theta", FieldType::Real}, {"m_ratio", FieldType::Real},
            {"sites", FieldType::Int},  {"steps", FieldType::Int},
            {"n0", FieldType::Int},     {"delta", FieldType::Real},
            {"k", FieldType::Int},      {"sign", FieldType::Int},
            {"threads", FieldType::Int}};
        json cfg = merge_config(packet_flags, packet, fields,
                                {{"--sites", "sites"},
                                 {"--steps", "steps"},
                                 {"--n0", "n0"},
                                 {"--k", "k"},
                                 {"--sign", "sign"},
                                 {"--threads", "threads"}},
                                {{"--delta", "delta"}});
        qca::PacketConfig pc;
        pc.theta = resolve_theta(cfg, pc.theta);
        pc.sites = get_int(cfg, "sites", pc.sites);
        pc.steps = get_int(cfg, "steps", pc.steps);
        pc.n0 = get_int(cfg, "n0", pc.n0);
        pc.delta = get_real(cfg, "delta", pc.delta);
        pc.k = get_int(cfg, "k", pc.k);
        pc.sign = get_int(cfg, "sign", pc.sign);
        pc.threads = resolve_threads(packet_flags, cfg);
        qca::SingleParticleRun run = qca::run_packet(pc);
        log_clamps(run.clamp_count);
        emit(run.table, run_summary_json(run, false), {packet_flags.out_path},
             packet_flags.format);
    });

    // double-slit ------------------------------------------------------------
    auto* slit = app.add_subcommand("double-slit", "two-site localized state evolution");
    static CommonFlags slit_flags;
    static int slit_sites = 64, slit_steps = 80, slit_n = 10;
    slit->add_option("--sites", slit_sites, "field sites (default 64)");
    slit->add_option("--steps", slit_steps, "time steps (default 80)");
    slit->add_option("--slit-n", slit_n, "slit offset (default 10)");
    add_common(slit, slit_flags);
    slit->callback([&]() {
        const std::vector<FieldSpec> fields{{"theta", FieldType::Real},
                                            {"m_ratio", FieldType::Real},
                                            {"sites", FieldType::Int},
                                            {"steps", FieldType::Int},
                                            {"slit_n", FieldType::Int},
                                            {"threads", FieldType::Int}};
        json cfg = merge_config(slit_flags, slit, fields,
                                {{"--sites", "sites"}, {"--steps", "steps"},
                                 {"--slit-n", "slit_n"}},
                                {});
        qca::DoubleSlitConfig dc;
        dc.theta = resolve_theta(cfg, dc.theta);
        dc.sites = get_int(cfg, "sites", dc.sites);
        dc.steps = get_int(cfg, "steps", dc.steps);
        dc.slit_n = get_int(cfg, "slit_n", dc.slit_n);
        qca::SingleParticleRun run = qca::run_double_slit(dc);
        log_clamps(run.clamp_count);
        emit(run.table, run_summary_json(run, true), {slit_flags.out_path}, slit_flags.format);
    });

    // collide -----------------------------------------------------------------
    auto* collide = app.add_subcommand("collide", "two-particle packet collision");
    static CommonFlags collide_flags;
    static int collide_sites = 64, collide_steps = 60, collide_x0 = 10, collide_k = 8,
               collide_dump = 10;
    static double collide_delta = 2.0;
    collide->add_option("--sites", collide_sites, "field sites (default 64)");
    collide->add_option("--steps", collide_steps, "time steps (default 60)");
    collide->add_option("--x0", collide_x0, "packet offset: packets start at +-x0");
    collide->add_option("--delta", collide_delta, "packet width (default 2)");
    collide->add_option("--k", collide_k, "carrier phase period; packets carry +-k");
    collide->add_option("--dump-every", collide_dump, "matrix dump cadence (default 10)");
    add_common(collide, collide_flags);
    collide->callback([&]() {
        const std::vector<FieldSpec> fields{
            {"theta", FieldType::Real}, {"m_ratio", FieldType::Real},
            {"sites", FieldType::Int},  {"steps", FieldType::Int},
            {"x0", FieldType::Int},     {"delta", FieldType::Real},
            {"k", FieldType::Int},      {"dump_every", FieldType::Int},
            {"threads", FieldType::Int}};
        json cfg = merge_config(collide_flags, collide, fields,
                                {{"--sites", "sites"},
                                 {"--steps", "steps"},
                                 {"--x0", "x0"},
                                 {"--k", "k"},
                                 {"--dump-every", "dump_every"},
                                 {"--threads", "threads"}},
                                {{"--delta", "delta"}});
        qca::CollisionConfig cc;
        cc.theta = resolve_theta(cfg, cc.theta);
        cc.sites = get_int(cfg, "sites", cc.sites);
        cc.steps = get_int(cfg, "steps", cc.steps);
        cc.x0 = get_int(cfg, "x0", cc.x0);
        cc.delta = get_real(cfg, "delta", cc.delta);
        cc.k = get_int(cfg, "k", cc.k);
        cc.dump_every = get_int(cfg, "dump_every", cc.dump_every);
        cc.threads = resolve_threads(collide_flags, cfg);
        qca::CollisionRun run = qca::run_collision(cc);
        log_clamps(run.clamp_count);
        json dumped = json::array();
        for (int t : run.dumped_steps) dumped.push_back(t);
        json summary{{"dumped_steps", dumped},
                     {"max_norm_drift", run.max_norm_drift},
                     {"max_antisymmetry_residual", run.max_antisymmetry_residual},
                     {"max_symmetry_residual", run.max_symmetry_residual},
                     {"initial_diagonal_max", run.initial_diagonal_max}};
        emit(run.table, summary, {collide_flags.out_path}, collide_flags.format);
    });

    // dispersion ----------------------------------------------------------------
    auto* dispersion = app.add_subcommand("dispersion", "dispersion relation scan");
    static CommonFlags dispersion_flags;
    static int dispersion_samples = 256;
    dispersion->add_option("--samples", dispersion_samples, "grid points (default 256)");
    add_common(dispersion, dispersion_flags);
    dispersion->callback([&]() {
        const std::vector<FieldSpec> fields{{"theta", FieldType::Real},
                                            {"m_ratio", FieldType::Real},
                                            {"samples", FieldType::Int}};
        json cfg = merge_config(dispersion_flags, dispersion, fields,
                                {{"--samples", "samples"}}, {});
        qca::DispersionConfig dc;
        dc.theta = resolve_theta(cfg, dc.theta);
        dc.samples = get_int(cfg, "samples", dc.samples);
        qca::DispersionRun run = qca::run_dispersion(dc);
        json summary{{"zeta", run.zeta}, {"max_velocity", run.max_velocity}};
        emit(run.table, summary, {dispersion_flags.out_path}, dispersion_flags.format);
    });

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    static std::string verify_suite;
    static unsigned verify_seed = 12345;
    static std::string verify_out;
    verify->add_option("suite", verify_suite, "suite name")->required();
    verify->add_option("--seed", verify_seed, "seed for randomized checks");
    verify->add_option("--out", verify_out, "report path (default stdout)");
    verify->callback([&]() {
        bool known = false;
        for (const std::string& name : qca::verify_suite_names())
            if (name == verify_suite) known = true;
        if (!known) throw ConfigError("suite", "unknown suite '" + verify_suite + "'");
        qca::VerifyReport rep = qca::run_suite(verify_suite, verify_seed);
        json checks = json::array();
        for (const qca::Check& c : rep.checks) {
            const char* status = c.status == qca::CheckStatus::Pass ? "PASS"
                                 : c.status == qca::CheckStatus::Fail ? "FAIL"
                                                                      : "EXPECTED_FAIL";
            checks.push_back({{"name", c.name},
                              {"residual", c.residual},
                              {"tolerance", c.tolerance},
                              {"status", status}});
        }
        json doc{{"suite", rep.suite},
                 {"seed", verify_seed},
                 {"passed", rep.passed()},
                 {"checks", checks}};
        const std::string text = doc.dump(2) + "\n";
        if (verify_out.empty() || verify_out == "-") {
            std::cout << text;
        } else {
            std::ofstream f(verify_out, std::ios::binary);
            f << text;
        }
        if (!rep.passed()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
