// kronlab command-line frontend: exact Kronecker coefficients, vanishing
// scans at rectangular shapes, minimal stretching factors, quantum-marginal
// verification, estimation-bound grids, and tail-bound thresholds.
//
// Exit codes: 0 success, 1 numerical verification failure, 2 contract or
// usage error, 3 budget refusal, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronlab/kronlab.hpp"

namespace {

using nlohmann::json;
using namespace kronlab;

std::vector<Rational> parse_rational_csv(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(parse_rational(token));
    if (out.empty()) throw contract_error("empty spectrum");
    return out;
}

void validate_probability_vector(const std::vector<Rational>& r, const std::string& what) {
    for (const Rational& x : r)
        if (x < 0) throw contract_error(what + ": negative entry");
    if (!is_weakly_decreasing(r)) throw contract_error(what + ": entries must be decreasing");
    if (rational_sum(r) != 1) throw contract_error(what + ": entries must sum to 1");
}

json partition_list(const std::vector<Partition>& ps) {
    json out = json::array();
    for (const Partition& p : ps) out.push_back(to_text(p));
    return out;
}

struct PendingCommand {
    std::string name;
    json input;
    std::function<json()> run;  // returns the output payload; prints human lines
    int exit_code = 0;          // may be raised by run()
};

void cmd_kron(PendingCommand& cmd, std::string lt, std::string mt, std::string nt) {
    cmd.name = "kron";
    cmd.input = {{"lambda", lt}, {"mu", mt}, {"nu", nt}};
    cmd.run = [=]() {
        const BigInt g =
            kron(partition_from_text(lt), partition_from_text(mt), partition_from_text(nt));
        std::cout << "g = " << g.str() << "\n";
        return json{{"g", g.str()}};
    };
}

void cmd_scan(PendingCommand& cmd, unsigned d, unsigned ell, std::uint64_t budget,
              unsigned threads) {
    cmd.name = "scan";
    cmd.input = {{"d", d}, {"ell", ell}, {"budget", budget}, {"threads", threads}};
    cmd.run = [=]() {
        ScanOptions options;
        options.budget = budget;
        options.threads = threads;
        const ScanReport report = scan_vanishing(d, ell, options);
        std::cout << "scan d=" << d << " ell=" << ell << ": " << report.total << " candidates, "
                  << report.vanishing.size() << " vanishing\n";
        for (const Partition& p : report.vanishing) std::cout << "  " << to_text(p) << "\n";
        return json{{"d", d},
                    {"ell", ell},
                    {"n", static_cast<std::uint64_t>(d) * ell},
                    {"total", report.total},
                    {"vanishing", partition_list(report.vanishing)},
                    {"vanishing_count", report.vanishing.size()}};
    };
}

void cmd_stretch(PendingCommand& cmd, std::string lt, unsigned d, unsigned cap) {
    cmd.name = "stretch";
    cmd.input = {{"lambda", lt}, {"d", d}, {"cap", cap}};
    cmd.run = [=]() {
        const StretchResult result = find_stretch(partition_from_text(lt), d, cap);
        json out{{"lambda", to_text(result.lambda)},
                 {"d", d},
                 {"ell", result.ell},
                 {"cap", cap},
                 {"found", result.k_min.has_value()}};
        if (result.k_min) {
            std::cout << "k_min = " << *result.k_min << " (g = " << result.g.str() << ")\n";
            out["k_min"] = *result.k_min;
            out["g"] = result.g.str();
        } else {
            std::cout << "NOT_FOUND up to cap = " << cap << "\n";
        }
        return out;
    };
}

void cmd_marginal_verify(PendingCommand& cmd, std::string spectrum_text, double tol) {
    cmd.name = "marginal-verify";
    cmd.input = {{"spectrum", spectrum_text}, {"tol", tol}};
    cmd.run = [=, &cmd]() {
        const std::vector<Rational> exact = parse_rational_csv(spectrum_text);
        validate_probability_vector(exact, "spectrum");
        std::size_t d = 0;
        while (d * d < exact.size()) ++d;
        if (d * d != exact.size()) throw contract_error("spectrum length must be a square d²");
        std::vector<double> r;
        r.reserve(exact.size());
        for (const Rational& x : exact) r.push_back(x.convert_to<double>());

        const DensityOperator rho = construct_marginal_uniform(r);
        const auto spec = rho.spectrum();
        double spectrum_error = 0;
        for (std::size_t i = 0; i < r.size(); ++i) spectrum_error += std::abs(spec[i] - r[i]);
        const ComplexMatrix uniform =
            Complex(1.0 / static_cast<double>(d), 0) * ComplexMatrix::identity(d);
        const double dev_a = (partial_trace(rho, Subsystem::A).matrix() - uniform).frobenius_norm();
        const double dev_b = (partial_trace(rho, Subsystem::B).matrix() - uniform).frobenius_norm();
        const double worst = std::max({spectrum_error, dev_a, dev_b});
        const bool pass = worst <= tol;
        std::cout << (pass ? "PASS" : "FAIL") << ": max deviation " << worst << " (tol " << tol
                  << ")\n";
        if (!pass) cmd.exit_code = 1;
        return json{{"d", d},
                    {"pass", pass},
                    {"spectrum_l1_error", spectrum_error},
                    {"marginal_a_deviation", dev_a},
                    {"marginal_b_deviation", dev_b},
                    {"max_deviation", worst},
                    {"tol", tol}};
    };
}

void cmd_swbound(PendingCommand& cmd, unsigned d, unsigned k, std::string spectrum_text) {
    cmd.name = "swbound";
    cmd.input = {{"d", d}, {"k", k}, {"spectrum", spectrum_text}};
    cmd.run = [=]() {
        const std::vector<Rational> r = parse_rational_csv(spectrum_text);
        if (r.size() != d) throw contract_error("spectrum must have exactly d entries");
        validate_probability_vector(r, "spectrum");
        if (k == 0) throw contract_error("k must be positive");
        std::size_t checks = 0;
        bool all_hold = true;
        bool sums_exact = true;
        Rational worst{0};
        for (unsigned kk = 1; kk <= k; ++kk) {
            Rational total{0};
            for (const Partition& lam : enumerate_partitions(kk, d)) {
                const BoundCheck check = check_estimation_bound(lam, r);
                ++checks;
                all_hold = all_hold && check.holds;
                if (check.rhs != 0) worst = std::max(worst, Rational{check.lhs / check.rhs});
                total += check.lhs;
            }
            sums_exact = sums_exact && total == 1;
        }
        std::cout << checks << " bounds up to k=" << k << ": "
                  << (all_hold ? "all hold" : "VIOLATED") << "; weight sums "
                  << (sums_exact ? "exact" : "BROKEN")
                  << "; worst lhs/rhs = " << worst.convert_to<double>() << "\n";
        return json{{"d", d},
                    {"k", k},
                    {"checks", checks},
                    {"all_hold", all_hold},
                    {"weight_sums_exact", sums_exact},
                    {"worst_ratio", rational_to_text(worst)},
                    {"worst_ratio_approx", worst.convert_to<double>()}};
    };
}

void cmd_kthreshold(PendingCommand& cmd, unsigned d, std::string eps_text) {
    cmd.name = "kthreshold";
    cmd.input = {{"d", d}, {"eps", eps_text}};
    cmd.run = [=]() {
        const Rational eps = parse_rational(eps_text);
        const ThresholdReport report = tail_bound_threshold(d, eps);
        std::cout << "k_star = " << report.k_star << "  (marginal tail <= "
                  << report.bound_a.convert_to<double>()
                  << ", joint tail <= " << report.bound_joint.convert_to<double>() << ")\n";
        return json{{"d", d},
                    {"eps", rational_to_text(eps)},
                    {"k_star", report.k_star},
                    {"bound_a", rational_to_text(report.bound_a)},
                    {"bound_b", rational_to_text(report.bound_b)},
                    {"bound_joint", rational_to_text(report.bound_joint)},
                    {"bound_a_approx", report.bound_a.convert_to<double>()},
                    {"bound_joint_approx", report.bound_joint.convert_to<double>()}};
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kronecker coefficients and quantum-marginal verification"};
    app.require_subcommand(1);

    std::string json_path;
    std::string cache_flag;
    app.add_option("--json", json_path, "write the result record to this file as JSON");
    app.add_option("--cache", cache_flag,
                   "character cache file (overrides the KRONLAB_CACHE environment variable)");

    PendingCommand pending;

    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient of three partitions");
    auto kron_args = std::make_shared<std::vector<std::string>>(3);
    kron_cmd->add_option("lambda", (*kron_args)[0], "first partition, e.g. \"[2,2]\"")->required();
    kron_cmd->add_option("mu", (*kron_args)[1], "second partition")->required();
    kron_cmd->add_option("nu", (*kron_args)[2], "third partition")->required();
    kron_cmd->callback(
        [&, kron_args] { cmd_kron(pending, (*kron_args)[0], (*kron_args)[1], (*kron_args)[2]); });

    auto* scan_cmd = app.add_subcommand("scan", "list vanishing rectangular coefficients");
    auto scan_d = std::make_shared<unsigned>(0);
    auto scan_ell = std::make_shared<unsigned>(0);
    auto scan_budget = std::make_shared<std::uint64_t>(kDefaultScanBudget);
    auto scan_threads = std::make_shared<unsigned>(0);
    scan_cmd->add_option("--d", *scan_d, "rectangle rows")->required();
    scan_cmd->add_option("--ell", *scan_ell, "rectangle row length")->required();
    scan_cmd->add_option("--budget", *scan_budget, "candidate-count budget");
    scan_cmd->add_option("--threads", *scan_threads, "worker threads (0 = hardware)");
    scan_cmd->callback([&] { cmd_scan(pending, *scan_d, *scan_ell, *scan_budget, *scan_threads); });

    auto* stretch_cmd = app.add_subcommand("stretch", "minimal stretching factor");
    auto stretch_lambda = std::make_shared<std::string>();
    auto stretch_d = std::make_shared<unsigned>(0);
    auto stretch_cap = std::make_shared<unsigned>(kDefaultStretchCap);
    stretch_cmd->add_option("--lambda", *stretch_lambda, "partition text")->required();
    stretch_cmd->add_option("--d", *stretch_d, "rectangle rows")->required();
    stretch_cmd->add_option("--cap", *stretch_cap, "largest stretching factor tried");
    stretch_cmd->callback([&] { cmd_stretch(pending, *stretch_lambda, *stretch_d, *stretch_cap); });

    auto* marginal_cmd =
        app.add_subcommand("marginal-verify", "build a state with the given spectrum and "
                                              "uniform marginals, then verify it numerically");
    auto marginal_spectrum = std::make_shared<std::string>();
    auto marginal_tol = std::make_shared<double>(1e-9);
    marginal_cmd->add_option("--spectrum", *marginal_spectrum, "decreasing probabilities, CSV")
        ->required();
    marginal_cmd->add_option("--tol", *marginal_tol, "acceptance tolerance");
    marginal_cmd->callback(
        [&] { cmd_marginal_verify(pending, *marginal_spectrum, *marginal_tol); });

    auto* swbound_cmd = app.add_subcommand("swbound", "estimation-bound grid for a fixed spectrum");
    auto sw_d = std::make_shared<unsigned>(0);
    auto sw_k = std::make_shared<unsigned>(0);
    auto sw_spectrum = std::make_shared<std::string>();
    swbound_cmd->add_option("--d", *sw_d, "number of spectrum entries")->required();
    swbound_cmd->add_option("--k", *sw_k, "largest tensor power")->required();
    swbound_cmd->add_option("--spectrum", *sw_spectrum, "decreasing probabilities, CSV")
        ->required();
    swbound_cmd->callback([&] { cmd_swbound(pending, *sw_d, *sw_k, *sw_spectrum); });

    auto* kth_cmd = app.add_subcommand("kthreshold", "minimal k with all tail bounds below 1/3");
    auto kth_d = std::make_shared<unsigned>(0);
    auto kth_eps = std::make_shared<std::string>();
    kth_cmd->add_option("--d", *kth_d, "local dimension")->required();
    kth_cmd->add_option("--eps", *kth_eps, "accuracy, rational in (0,2]")->required();
    kth_cmd->callback([&] { cmd_kthreshold(pending, *kth_d, *kth_eps); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // cache resolution: flag over environment over no persistence
    std::string cache_path = cache_flag;
    if (cache_path.empty())
        if (const char* env = std::getenv("KRONLAB_CACHE")) cache_path = env;

    try {
        if (!cache_path.empty() && std::filesystem::exists(cache_path))
            load_character_cache(cache_path, global_character_table());

        const auto start = std::chrono::steady_clock::now();
        ResultRecord record;
        record.command = pending.name;
        record.input = pending.input;
        record.output = pending.run();
        record.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        record.character_evaluations = global_character_table().computations();

        if (!cache_path.empty()) append_character_cache(cache_path, global_character_table());

        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) throw contract_error("cannot write JSON file: " + json_path);
            out << to_json(record).dump(2) << "\n";
        }
        return pending.exit_code;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
