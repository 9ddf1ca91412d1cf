#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hermlab/ensemble.hpp"
#include "hermlab/io.hpp"
#include "hermlab/spectral.hpp"
#include "hermlab/timefreq.hpp"
#include "hermlab/torus.hpp"
#include "hermlab/verify.hpp"

namespace {

using namespace hermlab;

double parse_exponent(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF")
        return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_exponent(item));
    if (out.empty()) fail("empty list: " + s);
    return out;
}

// flat key -> number config; command-line flags win over config entries
struct Config {
    nlohmann::json j = nlohmann::json::object();

    void load(const std::string& path) {
        j = nlohmann::json::parse(read_text_file(path));
        if (!j.is_object()) fail("config must be a flat JSON object: " + path);
    }
    template <typename T>
    void fill(const CLI::Option* opt, const std::string& key, T& value) const {
        if (opt->count() == 0 && j.contains(key)) value = j.at(key).get<T>();
    }
};

int cmd_verify(const std::string& suite, const Config& cfg_file, const CLI::Option* seed_opt,
               std::uint64_t seed, const std::string& out_dir) {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg_file.fill(seed_opt, "seed", cfg.seed);
    if (cfg_file.j.contains("quick")) cfg.quick = cfg_file.j.at("quick").get<int>();

    auto rows = run_suite(suite, cfg);
    int passed = 0;
    for (const auto& r : rows) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.experiment << " (" << r.params
                  << "): measured=" << format_g17(r.measured);
        if (r.reference) std::cout << " reference=" << format_g17(*r.reference);
        std::cout << " tol=" << format_g17(r.tolerance) << "\n";
        passed += r.pass;
    }
    std::cout << passed << "/" << rows.size() << " checks passed\n";

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text_file(out_dir + "/verify_" + suite + ".csv", report_csv(rows, cfg));
        write_text_file(out_dir + "/verify_" + suite + ".json", report_json(rows, cfg));
        if (suite == "torus" || suite == "all") {
            auto rep = kernel_l1_bound_check({0.5, 1.0, 2.0, 5.0}, {0.5, 1.0, 2.0},
                                             default_grid(1));
            write_text_file(out_dir + "/kernel_l1.csv", kernel_l1_report_csv(rep, 1));
            write_text_file(out_dir + "/kernel_l1.json", kernel_l1_report_json(rep));
        }
    }
    return all_pass(rows) ? 0 : 1;
}

int cmd_norm(const std::string& p_s, const std::string& q_s, const std::string& input,
             const std::string& out_file) {
    const double p = parse_exponent(p_s), q = parse_exponent(q_s);
    const std::string text = read_text_file(input);
    const auto j = nlohmann::json::parse(text);
    double value = 0.0;
    if (j.contains("entries"))
        value = modulation_norm(coeffs_from_json(text), p, q);
    else
        value = modulation_norm(field_from_json(text), p, q);
    const std::string rec = norm_record_json("M", p, q, value);
    std::cout << rec << "\n";
    if (!out_file.empty()) write_text_file(out_file, rec + "\n");
    return 0;
}

int cmd_sweep(const std::string& beta_s, const std::string& gamma_s, const std::string& p_s,
              std::uint64_t seed, int N, int d, const std::string& backend_s,
              const std::string& out_dir) {
    const auto betas = parse_list(beta_s);
    const auto gammas = parse_list(gamma_s);
    const auto ps = parse_list(p_s);
    const NormBackend backend =
        backend_s == "cartesian" ? NormBackend::Cartesian : NormBackend::Polar;
    if (backend_s != "cartesian" && backend_s != "polar")
        fail("unknown backend: " + backend_s);
    require(d == 1 || d == 2, "sweep: d must be 1 or 2");

    EnsembleSpec spec;
    spec.d = d;
    spec.N = N;
    spec.grid = default_grid(d);
    spec.seed = seed;
    auto members = make_ensemble(spec);

    std::ostringstream csv;
    csv << "family,beta,gamma,p,q,d,N,seed,"
           "max_ratio_lower_bound,threshold,region,argmax,skipped\n";
    for (double beta : betas)
        for (double gamma : gammas) {
            auto m = SpectralSymbol::oscillatory(beta, gamma);
            for (double p : ps) {
                auto est = estimate_operator_norm(m, p, p, members, spec.grid, backend);
                const double threshold = beta / (d * gamma);
                const bool inside = std::abs(1.0 / p - 0.5) < threshold;
                csv << "oscillatory," << format_g17(beta) << ',' << format_g17(gamma) << ','
                    << format_g17(p) << ',' << format_g17(p) << ',' << d << ',' << N << ','
                    << seed << ',' << format_g17(est.max_ratio) << ','
                    << format_g17(threshold) << ',' << (inside ? "inside" : "outside") << ','
                    << est.argmax << ',' << est.skipped << '\n';
            }
        }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text_file(out_dir + "/sweep.csv", csv.str());
    }
    std::cout << csv.str();
    return 0;
}

int cmd_propagate(const std::string& kind, double t, int j, const std::string& input,
                  const std::string& out_file) {
    HermiteCoeffs c = coeffs_from_json(read_text_file(input));
    HermiteCoeffs out(c.d, c.N);
    if (kind == "schrodinger")
        out = schrodinger_propagate(c, t);
    else if (kind == "wave")
        out = wave_propagate(c, t);
    else if (kind == "riesz")
        out = riesz_transform(c, j);
    else
        fail("unknown kind: " + kind + " (expected schrodinger|wave|riesz)");
    const std::string text = coeffs_to_json(out);
    std::cout << text << "\n";
    if (!out_file.empty()) write_text_file(out_file, text + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermlab: Hermite-operator functional calculus at desk scale"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 20240817ULL;

    auto* verify = app.add_subcommand("verify", "run a named check suite");
    std::string suite = "all";
    verify->add_option("suite", suite, "basis|special|timefreq|torus|propagators|all");
    auto* v_cfg = verify->add_option("--config", config_path, "flat JSON config");
    auto* v_seed = verify->add_option("--seed", seed, "ensemble seed");
    verify->add_option("--out", out_path, "directory for CSV/JSON reports");
    (void)v_cfg;

    auto* norm = app.add_subcommand("norm", "modulation norm of a coefficient or grid field");
    std::string p_s = "2", q_s = "2", input, out_file;
    norm->add_option("--p", p_s, "inner exponent (number or inf)")->required();
    norm->add_option("--q", q_s, "outer exponent (number or inf)")->required();
    norm->add_option("--input", input, "JSON input file")->required()->check(CLI::ExistingFile);
    norm->add_option("--out", out_file, "write the norm record here too");

    auto* sweep = app.add_subcommand("sweep", "operator-norm lower bounds on a symbol family");
    std::string family = "oscillatory", beta_s = "1", gamma_s = "1", ps_s = "2";
    std::string backend = "polar";
    int N = 40, d = 1;
    sweep->add_option("--family", family, "symbol family (oscillatory)");
    sweep->add_option("--beta", beta_s, "comma list of beta values")->required();
    sweep->add_option("--gamma", gamma_s, "comma list of gamma values")->required();
    sweep->add_option("--p", ps_s, "comma list of exponents")->required();
    auto* s_seed = sweep->add_option("--seed", seed, "ensemble seed");
    auto* s_N = sweep->add_option("--N", N, "max Hermite degree of the probe ensemble");
    sweep->add_option("--d", d, "dimension (1 or 2)");
    sweep->add_option("--backend", backend, "polar|cartesian");
    auto* s_cfg = sweep->add_option("--config", config_path, "flat JSON config");
    sweep->add_option("--out", out_path, "directory for sweep.csv");
    (void)s_cfg;

    auto* prop = app.add_subcommand("propagate", "apply a propagator to coefficients");
    std::string kind = "schrodinger";
    double t = 0.0;
    int jaxis = 0;
    prop->add_option("--kind", kind, "schrodinger|wave|riesz")->required();
    prop->add_option("--t", t, "time (schrodinger/wave)");
    prop->add_option("--j", jaxis, "axis (riesz)");
    prop->add_option("--input", input, "coefficients JSON")->required()->check(CLI::ExistingFile);
    prop->add_option("--out", out_file, "write the result here too");

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg;
        if (!config_path.empty()) cfg.load(config_path);
        if (verify->parsed()) return cmd_verify(suite, cfg, v_seed, seed, out_path);
        if (norm->parsed()) return cmd_norm(p_s, q_s, input, out_file);
        if (sweep->parsed()) {
            if (family != "oscillatory") fail("unknown family: " + family);
            cfg.fill(s_seed, "seed", seed);
            cfg.fill(s_N, "N", N);
            return cmd_sweep(beta_s, gamma_s, ps_s, seed, N, d, backend, out_path);
        }
        if (prop->parsed()) return cmd_propagate(kind, t, jaxis, input, out_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
