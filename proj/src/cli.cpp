#include "ch2geo/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <vector>

#include "ch2geo/curvature.hpp"
#include "ch2geo/errors.hpp"
#include "ch2geo/evolution.hpp"
#include "ch2geo/flowmap.hpp"
#include "ch2geo/initial_data.hpp"
#include "ch2geo/io.hpp"
#include "ch2geo/rigidbody.hpp"
#include "ch2geo/verify.hpp"

namespace ch2geo::cli {

using nlohmann::json;

std::string_view to_string(Command command) {
    switch (command) {
        case Command::evolve: return "evolve";
        case Command::flowmap: return "flowmap";
        case Command::curvature: return "curvature";
        case Command::curvature_scan: return "curvature-scan";
        case Command::rigidbody: return "rigidbody";
        case Command::verify: return "verify";
    }
    return "?";
}

namespace {

enum class Kind { integer, unsigned_integer, real, text, modes, vec3 };

struct Key {
    const char* name;  // JSON key
    const char* flag;
    Kind kind;
    const char* help;
};

constexpr Key keys[] = {
    {"model", "--model", Kind::text, "model: ch, dp, 2ch, 2dp"},
    {"ic", "--ic", Kind::text, "initial condition: zero | cosmode:m:amp | pair:m1:a1:m2:a2 | file:<path>"},
    {"n", "--n", Kind::integer, "grid size (even, >= 16)"},
    {"dt", "--dt", Kind::real, "time step"},
    {"t_end", "--t-end", Kind::real, "final time"},
    {"stride", "--stride", Kind::integer, "steps between saved snapshots"},
    {"slope_threshold", "--slope-threshold", Kind::real, "blow-up threshold on min u_x (negative)"},
    {"rhox_threshold", "--rhox-threshold", Kind::real, "blow-up threshold on max |rho_x| (positive)"},
    {"out", "--out", Kind::text, "output directory"},
    {"seed", "--seed", Kind::unsigned_integer, "seed for the randomized checks"},
    {"max_mode", "--max-mode", Kind::integer, "largest cosine mode in the scan"},
    {"modes", "--modes", Kind::modes, "k1,k2,l1,l2 for u=(cos k1, cos k2), v=(cos l1, cos l2)"},
    {"inertia", "--inertia", Kind::vec3, "principal moments I1,I2,I3"},
    {"omega", "--omega", Kind::vec3, "initial body angular velocity w1,w2,w3"},
};

const Key* find_key(std::string_view name) {
    for (const auto& k : keys)
        if (name == k.name) return &k;
    return nullptr;
}

// Flags each subcommand exposes (besides --config).
std::vector<std::string_view> flags_for(Command c) {
    switch (c) {
        case Command::evolve:
        case Command::flowmap:
            return {"model", "ic", "n", "dt", "t_end", "stride", "slope_threshold", "rhox_threshold", "out"};
        case Command::curvature: return {"modes", "n", "out"};
        case Command::curvature_scan: return {"max_mode", "n", "out"};
        case Command::rigidbody: return {"inertia", "omega", "dt", "t_end", "stride", "out"};
        case Command::verify: return {"seed", "out"};
    }
    return {};
}

Command parse_command(std::string_view name) {
    for (Command c : {Command::evolve, Command::flowmap, Command::curvature, Command::curvature_scan,
                      Command::rigidbody, Command::verify})
        if (name == to_string(c)) return c;
    throw ConfigError("unknown command '" + std::string(name) + "'");
}

template <class T>
bool parse_number(std::string_view text, T& value) {
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && end == text.data() + text.size();
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

// Command-line text -> typed JSON value; errors name the flag.
json typed_from_text(const Key& key, const std::string& text) {
    auto fail = [&]() -> json { throw ConfigError("invalid value '" + text + "' for " + key.flag); };
    switch (key.kind) {
        case Kind::text: return text;
        case Kind::integer: {
            long long v = 0;
            return parse_number(text, v) ? json(v) : fail();
        }
        case Kind::unsigned_integer: {
            std::uint64_t v = 0;
            return parse_number(text, v) ? json(v) : fail();
        }
        case Kind::real: {
            double v = 0.0;
            return parse_number(text, v) ? json(v) : fail();
        }
        case Kind::modes: {
            json arr = json::array();
            for (auto part : split_commas(text)) {
                long long v = 0;
                if (!parse_number(part, v)) fail();
                arr.push_back(v);
            }
            return arr;
        }
        case Kind::vec3: {
            json arr = json::array();
            for (auto part : split_commas(text)) {
                double v = 0.0;
                if (!parse_number(part, v)) fail();
                arr.push_back(v);
            }
            return arr;
        }
    }
    return fail();
}

[[noreturn]] void bad_key(const Key& key, const std::string& why) {
    throw ConfigError(std::string(key.flag) + " (config key '" + key.name + "'): " + why);
}

int get_int(const json& v, const Key& key) {
    if (!v.is_number_integer()) bad_key(key, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) bad_key(key, "out of range");
    return static_cast<int>(x);
}

double get_real(const json& v, const Key& key) {
    if (!v.is_number()) bad_key(key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad_key(key, "must be finite");
    return x;
}

template <std::size_t N, class T>
std::array<T, N> get_array(const json& v, const Key& key) {
    if (!v.is_array() || v.size() != N) bad_key(key, "expected " + std::to_string(N) + " comma-separated values");
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        if constexpr (std::is_same_v<T, int>)
            out[i] = get_int(v[i], key);
        else
            out[i] = get_real(v[i], key);
    }
    return out;
}

void validate(RunConfig& c, bool n_given) {
    const Key& n_key = *find_key("n");
    switch (c.command) {
        case Command::evolve:
        case Command::flowmap: {
            if (!c.model)
                throw ConfigError("missing required option --model for " + std::string(to_string(c.command)));
            try {
                Grid{c.n};
            } catch (const InvalidArgument& e) {
                bad_key(n_key, e.what());
            }
            try {
                validate_initial_spec(c.ic);
            } catch (const ConfigError& e) {
                bad_key(*find_key("ic"), e.what());
            }
            EvolutionConfig ec;
            ec.model = *c.model;
            ec.dt = c.dt;
            ec.t_end = c.t_end;
            ec.grid_n = c.n;
            ec.blowup_slope_threshold = c.slope_threshold;
            ec.blowup_rhox_threshold = c.rhox_threshold;
            ec.diagnostics_stride = c.stride;
            try {
                ec.validate();
            } catch (const InvalidArgument& e) {
                throw ConfigError(e.what());
            }
            break;
        }
        case Command::curvature: {
            const auto [k1, k2, l1, l2] = c.modes;
            CosineDirectionPair dir{k1, k2, l1, l2, k1 == 0 && l1 == 0};
            try {
                dir.validate();
            } catch (const InvalidArgument& e) {
                bad_key(*find_key("modes"), e.what());
            }
            const int top = std::max({k1, k2, l1, l2});
            if (!n_given) c.n = scan_grid_size(top);
            try {
                Grid{c.n};
            } catch (const InvalidArgument& e) {
                bad_key(n_key, e.what());
            }
            break;
        }
        case Command::curvature_scan:
            if (c.max_mode < 2) bad_key(*find_key("max_mode"), "must be at least 2");
            if (!n_given) c.n = scan_grid_size(c.max_mode);
            try {
                Grid{c.n};
            } catch (const InvalidArgument& e) {
                bad_key(n_key, e.what());
            }
            if (c.n < scan_grid_size(c.max_mode))
                bad_key(n_key, "must be at least " + std::to_string(scan_grid_size(c.max_mode)) +
                                   " for max mode " + std::to_string(c.max_mode));
            break;
        case Command::rigidbody:
            for (double i : c.inertia)
                if (!(i > 0.0)) bad_key(*find_key("inertia"), "moments must be positive");
            if (!(c.dt > 0.0)) bad_key(*find_key("dt"), "must be positive");
            if (!(c.t_end > c.dt)) bad_key(*find_key("t_end"), "must exceed dt");
            if (c.stride < 1) bad_key(*find_key("stride"), "must be positive");
            break;
        case Command::verify: break;
    }
    if (c.out.empty()) bad_key(*find_key("out"), "must not be empty");
}

}  // namespace

RunConfig config_from_json(const json& input) {
    if (!input.is_object()) throw ConfigError("configuration must be a JSON object");
    // A run.json manifest carries the configuration under "config".
    const json& j = input.contains("config") && input.contains("status") ? input.at("config") : input;
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    if (!j.contains("command") || !j.at("command").is_string())
        throw ConfigError("configuration is missing the \"command\" key");

    RunConfig c;
    c.command = parse_command(j.at("command").get<std::string>());
    if (c.command == Command::rigidbody) {
        c.dt = 1e-3;
        c.t_end = 10.0;
        c.stride = 10;
    }

    bool n_given = false;
    for (const auto& [name, value] : j.items()) {
        if (name == "command") continue;
        const Key* key = find_key(name);
        if (!key) throw ConfigError("unknown configuration key '" + name + "'");
        if (name == "model") {
            if (!value.is_string()) bad_key(*key, "expected a string");
            try {
                c.model = parse_model(value.get<std::string>());
            } catch (const Error& e) {
                bad_key(*key, e.what());
            }
        } else if (name == "ic") {
            if (!value.is_string()) bad_key(*key, "expected a string");
            c.ic = value.get<std::string>();
        } else if (name == "out") {
            if (!value.is_string()) bad_key(*key, "expected a string");
            c.out = value.get<std::string>();
        } else if (name == "n") {
            c.n = get_int(value, *key);
            n_given = true;
        } else if (name == "dt") {
            c.dt = get_real(value, *key);
        } else if (name == "t_end") {
            c.t_end = get_real(value, *key);
        } else if (name == "stride") {
            c.stride = get_int(value, *key);
        } else if (name == "slope_threshold") {
            c.slope_threshold = get_real(value, *key);
        } else if (name == "rhox_threshold") {
            c.rhox_threshold = get_real(value, *key);
        } else if (name == "seed") {
            if (!value.is_number_unsigned()) bad_key(*key, "expected a non-negative integer");
            c.seed = value.get<std::uint64_t>();
        } else if (name == "max_mode") {
            c.max_mode = get_int(value, *key);
        } else if (name == "modes") {
            c.modes = get_array<4, int>(value, *key);
        } else if (name == "inertia") {
            c.inertia = get_array<3, double>(value, *key);
        } else if (name == "omega") {
            c.omega = get_array<3, double>(value, *key);
        }
    }
    validate(c, n_given);
    return c;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["command"] = std::string(to_string(c.command));
    for (auto name : flags_for(c.command)) {
        if (name == "model") j["model"] = std::string(ch2geo::to_string(*c.model));
        else if (name == "ic") j["ic"] = c.ic;
        else if (name == "n") j["n"] = c.n;
        else if (name == "dt") j["dt"] = c.dt;
        else if (name == "t_end") j["t_end"] = c.t_end;
        else if (name == "stride") j["stride"] = c.stride;
        else if (name == "slope_threshold") j["slope_threshold"] = c.slope_threshold;
        else if (name == "rhox_threshold") j["rhox_threshold"] = c.rhox_threshold;
        else if (name == "out") j["out"] = c.out.string();
        else if (name == "seed") j["seed"] = c.seed;
        else if (name == "max_mode") j["max_mode"] = c.max_mode;
        else if (name == "modes") j["modes"] = c.modes;
        else if (name == "inertia") j["inertia"] = c.inertia;
        else if (name == "omega") j["omega"] = c.omega;
    }
    return j;
}

RunConfig parse_config(int argc, const char* const* argv) {
    CLI::App app{"Geodesic solvers for the two-component Camassa-Holm and Degasperis-Procesi systems", "ch2geo"};
    app.require_subcommand(1);

    std::string config_path;
    std::map<std::string, std::string> text;
    std::map<std::string, std::pair<CLI::App*, std::vector<CLI::Option*>>> subs;
    for (Command c : {Command::evolve, Command::flowmap, Command::curvature, Command::curvature_scan,
                      Command::rigidbody, Command::verify}) {
        const std::string name(to_string(c));
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON configuration or run.json manifest");
        std::vector<CLI::Option*> opts;
        for (auto key_name : flags_for(c)) {
            const Key& key = *find_key(key_name);
            opts.push_back(sub->add_option(key.flag, text[key.name], key.help));
        }
        subs[name] = {sub, std::move(opts)};
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands()) throw HelpRequested(sub->help());
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    auto* chosen = app.get_subcommands().front();
    json j = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot open --config file '" + config_path + "'");
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw ConfigError("--config file '" + config_path + "' is not valid JSON: " + e.what());
        }
        if (j.is_object() && j.contains("config") && j.contains("status")) j = json(j.at("config"));
        if (!j.is_object()) throw ConfigError("--config file '" + config_path + "' must hold a JSON object");
        if (j.contains("command") && j.at("command") != chosen->get_name())
            throw ConfigError("--config file '" + config_path + "' is for command '" +
                              j.at("command").dump() + "', not '" + chosen->get_name() + "'");
    }
    j["command"] = chosen->get_name();
    for (auto* opt : subs.at(chosen->get_name()).second) {
        if (opt->count() == 0) continue;
        const std::string flag = opt->get_name();
        for (const auto& key : keys) {
            if (flag == key.flag) {
                j[key.name] = typed_from_text(key, text[key.name]);
                break;
            }
        }
    }
    return config_from_json(j);
}

namespace {

json diagnostics_json(const DiagnosticsRecord& r) {
    return {{"t", r.t},           {"energy", r.energy},     {"min_ux", r.min_ux},
            {"max_abs_rhox", r.max_abs_rhox}, {"mean_m", r.mean_m}, {"mean_rho", r.mean_rho}};
}

void write_manifest(const RunConfig& config, const std::string& status, const RunStatus* run_status,
                    const json& final_diagnostics, double wall_seconds, const json& extra = json::object()) {
    json m;
    m["config"] = config_to_json(config);
    m["status"] = status;
    if (run_status && run_status->blowup) {
        m["reason"] = std::string(to_string(run_status->blowup->reason));
        m["blowup_time"] = run_status->blowup->t;
    }
    m["final_diagnostics"] = final_diagnostics;
    m["wall_seconds"] = wall_seconds;
    for (const auto& [k, v] : extra.items()) m[k] = v;

    const auto path = config.out / "run.json";
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << m.dump(2) << '\n';
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

EvolutionConfig evolution_config(const RunConfig& c) {
    EvolutionConfig ec;
    ec.model = *c.model;
    ec.dt = c.dt;
    ec.t_end = c.t_end;
    ec.grid_n = c.n;
    ec.blowup_slope_threshold = c.slope_threshold;
    ec.blowup_rhox_threshold = c.rhox_threshold;
    ec.diagnostics_stride = c.stride;
    return ec;
}

std::string status_name(const RunStatus& s) { return s.completed() ? "completed" : "blowup_detected"; }

void log_status(std::ostream& log, const RunStatus& s) {
    if (s.completed())
        log << "status: completed\n";
    else
        log << "status: blowup_detected at t = " << s.blowup->t << " (" << to_string(s.blowup->reason) << ")\n";
}

int run_evolve(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    const Grid grid(c.n);
    const auto result = evolve(evolution_config(c), make_initial(c.ic, grid));
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json snapshots = json::array();
    for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
        const auto file = io::numbered("snapshot", i);
        io::write_snapshot_csv(c.out / file, result.trajectory[i].state);
        snapshots.push_back({{"file", file}, {"t", result.trajectory[i].t}});
    }
    io::write_diagnostics_csv(c.out / "diagnostics.csv", result.diagnostics);
    write_manifest(c, status_name(result.status), &result.status, diagnostics_json(result.diagnostics.back()), wall,
                   {{"snapshots", snapshots}});
    log << "wrote " << result.trajectory.size() << " snapshots to " << c.out.string() << '\n';
    log_status(log, result.status);
    return result.status.completed() ? 0 : 2;
}

int run_flowmap(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    const Grid grid(c.n);
    const auto result = evolve_flowmap(evolution_config(c), make_initial(c.ic, grid));
    const auto drift = momentum_drift(*c.model, result);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json snapshots = json::array();
    for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
        const auto& snap = result.trajectory[i];
        io::write_snapshot_csv(c.out / io::numbered("snapshot", i), snap.state);
        io::write_flowmap_csv(c.out / io::numbered("flowmap", i), snap.g);
        snapshots.push_back({{"snapshot", io::numbered("snapshot", i)},
                             {"flowmap", io::numbered("flowmap", i)},
                             {"t", snap.t}});
    }
    io::write_diagnostics_csv(c.out / "diagnostics.csv", result.diagnostics);
    {
        std::ofstream out(c.out / "momentum.csv");
        out << std::setprecision(17) << "t,density_drift,body_momentum_drift\n";
        for (const auto& d : drift) {
            out << d.t << ',' << d.density << ',';
            if (d.body_momentum) out << *d.body_momentum;
            out << '\n';
        }
        if (!out) throw Error("write failed for momentum.csv");
    }
    auto final_diag = diagnostics_json(result.diagnostics.back());
    final_diag["density_drift"] = drift.back().density;
    if (drift.back().body_momentum) final_diag["body_momentum_drift"] = *drift.back().body_momentum;
    write_manifest(c, status_name(result.status), &result.status, final_diag, wall, {{"snapshots", snapshots}});
    log << "wrote " << result.trajectory.size() << " snapshot/flowmap pairs to " << c.out.string() << '\n';
    log_status(log, result.status);
    return result.status.completed() ? 0 : 2;
}

int run_curvature(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    const Grid grid(c.n);
    const auto [k1, k2, l1, l2] = c.modes;
    const CosineDirectionPair dir{k1, k2, l1, l2, k1 == 0 && l1 == 0};
    ScanRow row;
    row.dir = dir;
    const auto u = dir.u(grid);
    const auto v = dir.v(grid);
    row.s_numeric = curvature_S(u, v);
    row.s_closed = closedform_S(dir);
    row.gram = gram_determinant(u, v);
    row.sec = sectional(u, v);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    io::write_scan_csv(c.out / "curvature.csv", std::span<const ScanRow>(&row, 1));
    write_manifest(c, "completed", nullptr,
                   {{"S_numeric", row.s_numeric}, {"S_closed", row.s_closed}, {"Sec", row.sec}, {"gram", row.gram}},
                   wall);
    log << std::setprecision(12) << dir.label() << "\n  S numeric " << row.s_numeric << "\n  S closed  "
        << row.s_closed << "\n  Sec       " << row.sec << "\n  Gram      " << row.gram << '\n';
    return 0;
}

int run_scan(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    const auto scan = positivity_scan(c.max_mode, c.n);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    double min_s = std::numeric_limits<double>::infinity();
    double max_rel = 0.0;
    for (const auto& r : scan.rows) {
        min_s = std::min(min_s, r.s_numeric);
        max_rel = std::max(max_rel, std::abs(r.s_numeric - r.s_closed) / std::abs(r.s_closed));
    }
    io::write_scan_csv(c.out / "scan.csv", scan.rows);
    write_manifest(c, "completed", nullptr,
                   {{"rows", scan.rows.size()}, {"skipped", scan.skipped.size()}, {"min_S", min_s},
                    {"max_relative_error", max_rel}},
                   wall);
    log << scan.rows.size() << " tuples on n=" << scan.grid_n << ", min S = " << min_s
        << ", max relative error vs closed form = " << max_rel << '\n';
    return 0;
}

int run_rigidbody(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    rigidbody::State s;
    s.inertia = {c.inertia[0], c.inertia[1], c.inertia[2]};
    s.omega = {c.omega[0], c.omega[1], c.omega[2]};
    const auto traj = rigidbody::evolve_rigidbody(s, c.dt, c.t_end, c.stride);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto& first = traj.front();
    const auto& last = traj.back();
    const double pi_drift = (last.spatial_momentum - first.spatial_momentum).norm();
    io::write_rigidbody_csv(c.out / "rigidbody.csv", traj);
    write_manifest(c, "completed", nullptr,
                   {{"t", last.t},
                    {"energy", last.energy},
                    {"energy_drift", std::abs(last.energy - first.energy)},
                    {"spatial_momentum_drift", pi_drift},
                    {"ad_star_drift", rigidbody::ad_star_check(traj)}},
                   wall);
    log << traj.size() << " samples, |pi(T) - pi(0)| = " << pi_drift << '\n';
    return 0;
}

int run_verify(const RunConfig& c, std::ostream& log, double& wall) {
    const auto start = std::chrono::steady_clock::now();
    verify::Options options;
    options.seed = c.seed;
    const auto results = verify::run_all(options, [&](const verify::CriterionResult& r) {
        log << verify::format(r) << std::endl;
    });
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool all = true;
    json criteria = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    write_manifest(c, all ? "passed" : "failed", nullptr, {{"criteria", criteria}}, wall);
    log << (all ? "all criteria passed" : "some criteria failed") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    if (ec) throw Error("cannot create output directory '" + config.out.string() + "': " + ec.message());

    double wall = 0.0;
    switch (config.command) {
        case Command::evolve: return run_evolve(config, log, wall);
        case Command::flowmap: return run_flowmap(config, log, wall);
        case Command::curvature: return run_curvature(config, log, wall);
        case Command::curvature_scan: return run_scan(config, log, wall);
        case Command::rigidbody: return run_rigidbody(config, log, wall);
        case Command::verify: return run_verify(config, log, wall);
    }
    return 1;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const auto config = parse_config(argc, argv);
        return run(config, out);
    } catch (const HelpRequested& help) {
        out << help.what();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ch2geo::cli
