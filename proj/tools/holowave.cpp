// Command-line harness: runs the verification experiments described in the
// README from a config file and writes CSV/JSON reports.
// Exit codes: 0 pass, 1 tolerance failure, 2 usage/config error.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "holowave/config.hpp"
#include "holowave/conserved.hpp"
#include "holowave/experiments.hpp"
#include "holowave/linearized.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace hw;

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir = ".";
    bool deterministic = false;
    std::uint64_t seed = 0;  // 0 = use the config's seed
};

void stamp(json& j, const CliOptions& opt) {
    if (!opt.deterministic) {
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_dispersion(const ExperimentConfig& cfg, const CliOptions& opt) {
    const double g = cfg.get_double("params", "g", 1.0);
    std::vector<double> gammas = cfg.has("experiment", "gammas")
                                     ? cfg.get_doubles("experiment", "gammas")
                                     : std::vector<double>{0.0, 1.0, 2.0};
    std::vector<int> modes;
    if (cfg.has("experiment", "modes"))
        for (long m : cfg.get_ints("experiment", "modes")) modes.push_back(int(m));
    else
        modes = {-1, -2, -4, -8};
    const int n = int(cfg.get_int("grid", "n", 128));
    const double dt = cfg.get_double("step", "dt", 1e-3);
    const double t_end = cfg.get_double("step", "t_end", 5.0);
    const double tol = cfg.get_double("experiment", "tolerance", 1e-6);

    const auto rows = dispersion_sweep(g, gammas, modes, n, dt, t_end);

    std::ofstream csv(fs::path(opt.out_dir) / "dispersion.csv");
    csv << "gamma,mode,tau1_exact_re,tau1_exact_im,tau1_meas_re,tau1_meas_im,"
           "tau2_exact_re,tau2_exact_im,tau2_meas_re,tau2_meas_im,abs_error\n";
    double max_err = 0.0;
    for (const auto& r : rows) {
        csv << fmt(r.gamma) << ',' << r.mode;
        for (int i = 0; i < 2; ++i)
            csv << ',' << fmt(r.tau_exact[i].real()) << ',' << fmt(r.tau_exact[i].imag())
                << ',' << fmt(r.tau_measured[i].real()) << ','
                << fmt(r.tau_measured[i].imag());
        csv << ',' << fmt(r.error) << "\n";
        max_err = std::max(max_err, r.error);
    }

    json rep;
    rep["experiment"] = "dispersion";
    rep["max_abs_error"] = max_err;
    rep["tolerance"] = tol;
    rep["pass"] = max_err < tol;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "dispersion.json", rep);
    std::cout << "dispersion: max |tau_meas - tau_exact| = " << max_err
              << (max_err < tol ? "  PASS" : "  FAIL") << "\n";
    return max_err < tol ? 0 : 1;
}

int run_conserve(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const StepConfig step = cfg.step_config();
    const double tol = cfg.get_double("experiment", "tolerance", 1e-8);
    std::vector<double> gammas = cfg.has("experiment", "gammas")
                                     ? cfg.get_doubles("experiment", "gammas")
                                     : std::vector<double>{cfg.params().gamma};
    json rep;
    rep["experiment"] = "conserve";
    rep["tolerance"] = tol;
    bool pass = true;
    for (double gamma : gammas) {
        Params p = cfg.params();
        p.gamma = gamma;
        const State init{cfg.make_initial(grid, opt.seed),
                         cfg.make_initial(grid, opt.seed ? opt.seed + 1 : 2)};
        const ConservationReport r = conservation_run(init, p, step);

        std::ofstream csv(fs::path(opt.out_dir) /
                          ("conserve_gamma" + std::to_string(gamma) + ".csv"));
        csv << "t,energy,momentum\n";
        for (size_t i = 0; i < r.times.size(); ++i)
            csv << fmt(r.times[i]) << ',' << fmt(r.energy[i]) << ',' << fmt(r.momentum[i])
                << "\n";

        json jg;
        jg["energy_drift"] = r.energy_drift;
        jg["momentum_drift"] = r.momentum_drift;
        rep["gamma=" + std::to_string(gamma)] = jg;
        pass = pass && r.energy_drift < tol && r.momentum_drift < tol;
        std::cout << "conserve gamma=" << gamma << ": energy drift " << r.energy_drift
                  << ", momentum drift " << r.momentum_drift << "\n";
    }
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "conserve.json", rep);
    std::cout << (pass ? "conserve: PASS" : "conserve: FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_normalform(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const double slope_min = cfg.get_double("experiment", "slope_min", 2.8);
    std::vector<double> gammas = cfg.has("experiment", "gammas")
                                     ? cfg.get_doubles("experiment", "gammas")
                                     : std::vector<double>{0.0, 0.5, 2.0};
    std::vector<double> eps = cfg.has("experiment", "epsilons")
                                  ? cfg.get_doubles("experiment", "epsilons")
                                  : std::vector<double>{1e-1, 1e-2, 1e-3};
    std::vector<std::uint64_t> seeds;
    if (cfg.has("experiment", "seeds"))
        for (long s : cfg.get_ints("experiment", "seeds")) seeds.push_back(std::uint64_t(s));
    else
        seeds = {1, 2, 3, 4, 5};
    if (opt.seed)
        for (size_t i = 0; i < seeds.size(); ++i) seeds[i] = opt.seed + i;

    const NormalFormReport r =
        normalform_select_sign(grid, gammas, seeds, eps, cfg.get_double("params", "g", 1.0));

    json rep;
    rep["experiment"] = "normalform";
    rep["slope_min"] = slope_min;
    rep["min_slope"] = r.min_slope;
    rep["gamma_cube_sign"] =
        r.sign == GammaCubeSign::kDoubledI ? "doubled_i" : "plain_i";
    for (const auto& [k, v] : r.slopes) rep["slopes"][k] = v;
    const bool pass = r.min_slope >= slope_min;
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "normalform.json", rep);
    std::cout << "normalform: min slope " << r.min_slope << " (sign convention "
              << std::string(rep["gamma_cube_sign"]) << ")"
              << (pass ? "  PASS" : "  FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_linearize(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const Params p = cfg.params();
    StepConfig step = cfg.step_config();
    step.observer_stride = 0;
    const double slope_min = cfg.get_double("experiment", "slope_min", 0.9);
    const int n_dirs = int(cfg.get_int("experiment", "directions", 3));
    std::vector<double> eps = cfg.has("experiment", "epsilons")
                                  ? cfg.get_doubles("experiment", "epsilons")
                                  : std::vector<double>{1e-2, 1e-3, 1e-4};
    const std::uint64_t seed0 = opt.seed ? opt.seed : 1;
    const double amp = cfg.get_double("init", "amplitude", 1e-2);
    const int band = int(cfg.get_int("init", "band", 8));

    const State base = make_random_state(grid, seed0, amp, band);
    json rep;
    rep["experiment"] = "linearize";
    rep["slope_min"] = slope_min;
    bool pass = true;
    double min_slope = 1e300;
    for (int k = 0; k < n_dirs; ++k) {
        const State dir = make_random_state(grid, seed0 + 10 + k, 1.0, band);
        const double slope = linearization_slope(base, dir, eps, p, step);
        rep["slopes"]["direction=" + std::to_string(k)] = slope;
        min_slope = std::min(min_slope, slope);
        pass = pass && slope >= slope_min;
        std::cout << "linearize direction " << k << ": slope " << slope << "\n";
    }
    rep["min_slope"] = min_slope;
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "linearize.json", rep);
    std::cout << (pass ? "linearize: PASS" : "linearize: FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_identities(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const Params p = cfg.params();
    const int n_states = int(cfg.get_int("experiment", "n_states", 20));
    const double amp = cfg.get_double("init", "amplitude", 1e-2);
    const int band = int(cfg.get_int("init", "band", 8));
    const double tol_exact = cfg.get_double("experiment", "tolerance", 1e-8);
    const double slope_min = cfg.get_double("experiment", "slope_min", 1.8);
    std::vector<double> amps = cfg.has("experiment", "slope_amplitudes")
                                   ? cfg.get_doubles("experiment", "slope_amplitudes")
                                   : std::vector<double>{1e-2, 1e-3, 1e-4};
    const int slope_band = int(cfg.get_int("experiment", "slope_band", 32));
    const IdentityReport r = identity_sweep(grid, p, n_states, amp, band, amps,
                                            opt.seed ? opt.seed : 1, slope_band);

    json rep;
    rep["experiment"] = "identities";
    bool pass = true;
    for (const auto& [name, v] : r.exact_max) {
        rep["exact_max"][name] = v;
        pass = pass && v < tol_exact;
    }
    for (const auto& [name, v] : r.slopes) {
        rep["slopes"][name] = v;
        pass = pass && v >= slope_min;
    }
    rep["tolerance"] = tol_exact;
    rep["slope_min"] = slope_min;
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "identities.json", rep);
    for (const auto& [name, v] : r.exact_max)
        std::cout << "identity " << name << ": max residual " << v << "\n";
    for (const auto& [name, v] : r.slopes)
        std::cout << "identity " << name << ": amplitude slope " << v << "\n";
    std::cout << (pass ? "identities: PASS" : "identities: FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_norms(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const Params p = cfg.params();
    const State s{cfg.make_initial(grid, opt.seed),
                  cfg.make_initial(grid, opt.seed ? opt.seed + 1 : 2)};
    const DiffState d = derive(s, p);
    const AuxBundle aux = compute_aux(d, s, p);
    const ControlNorms cn = control_norms(d, aux, p);

    json rep;
    rep["experiment"] = "norms";
    for (const auto& [k, v] : cn.as_map()) rep["control_norms"][k] = v;
    rep["energy"] = energy(s, p);
    rep["momentum"] = momentum(s, p);
    rep["E0"] = linear_energy(s.W, s.Q, p);
    const LinState l{s.W, s.Q};
    for (const auto& [k, v] : lin_energy_report(l, aux, p)) rep["linear_energies"][k] = v;

    // Norm-equivalence sweep: E_lin^(2)/E_0 must sit in [1/2, 2] and within
    // 1 +- 10 uA on every sampled background.
    const int n_states = int(cfg.get_int("experiment", "n_states", 20));
    const int band = int(cfg.get_int("init", "band", 8));
    const auto sweep = norm_equivalence_sweep(grid, p, n_states, band, opt.seed ? opt.seed : 1);
    bool pass = true;
    for (size_t i = 0; i < sweep.size(); ++i) {
        const NormEquivRow& row = sweep[i];
        json jr;
        jr["amplitude"] = row.amplitude;
        jr["ratio"] = row.ratio;
        jr["uA"] = row.uA;
        jr["in_band"] = row.in_band;
        jr["near_one"] = row.near_one;
        rep["equivalence"]["state=" + std::to_string(i)] = jr;
        pass = pass && row.in_band && row.near_one;
    }
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "norms.json", rep);
    std::cout << "norms: " << sweep.size() << " backgrounds checked"
              << (pass ? "  PASS" : "  FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_scaling(const ExperimentConfig& cfg, const CliOptions& opt) {
    const Grid grid = cfg.grid();
    const Params p = cfg.params();
    const double lambda = cfg.get_double("experiment", "lambda", 2.0);
    const double tol = cfg.get_double("experiment", "tolerance", 1e-7);
    const StepConfig step = cfg.step_config();
    const State init{cfg.make_initial(grid, opt.seed),
                     cfg.make_initial(grid, opt.seed ? opt.seed + 1 : 2)};
    const ScalingReport r = scaling_check(init, p, lambda, step.t_end, step.dt);

    json rep;
    rep["experiment"] = "scaling";
    rep["lambda"] = lambda;
    rep["tolerance"] = tol;
    rep["err_spacetime"] = r.err_spacetime;
    rep["err_space"] = r.err_space;
    const bool pass = r.err_spacetime < tol && r.err_space < tol;
    rep["pass"] = pass;
    stamp(rep, opt);
    write_json(fs::path(opt.out_dir) / "scaling.json", rep);
    std::cout << "scaling: space-time error " << r.err_spacetime << ", space error "
              << r.err_space << (pass ? "  PASS" : "  FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holowave: water-wave simulator verification harness"};
    app.require_subcommand(1);

    CliOptions opt;
    const std::vector<std::string> commands = {"dispersion", "conserve", "normalform",
                                               "linearize", "identities", "norms", "scaling"};
    for (const std::string& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "config file path")->required();
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_flag("--deterministic", opt.deterministic,
                      "suppress timestamps in reports");
        sub->add_option("--seed", opt.seed, "override the config seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const ExperimentConfig cfg = ExperimentConfig::parse_file(opt.config_path);
        fs::create_directories(opt.out_dir);
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "dispersion") return run_dispersion(cfg, opt);
        if (cmd == "conserve") return run_conserve(cfg, opt);
        if (cmd == "normalform") return run_normalform(cfg, opt);
        if (cmd == "linearize") return run_linearize(cfg, opt);
        if (cmd == "identities") return run_identities(cfg, opt);
        if (cmd == "norms") return run_norms(cfg, opt);
        if (cmd == "scaling") return run_scaling(cfg, opt);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
