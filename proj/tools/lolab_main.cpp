// lolab: small-ball probabilities of planar random signed sums.
//
// Subcommands: exact, mc, q, certify, pipeline, axis, fprobe, search, lemmas.
// Output is a single JSON document (CSV for the profile/search tools) with
// floats at 17 significant digits. Exit codes: 0 ok, 1 computation error,
// 2 usage error, 3 certify soundness cross-check failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lolab/exact_engine.hpp"
#include "lolab/extremal.hpp"
#include "lolab/json_io.hpp"
#include "lolab/lemma_suites.hpp"
#include "lolab/mc_engine.hpp"
#include "lolab/pipeline.hpp"
#include "lolab/rng.hpp"

namespace {

using lolab::ordered_json;

constexpr std::uint64_t kCrossCheckSeed = 0x10AB5EEDULL;

struct CommonOpts {
    std::string input_path;
    std::string angles;
    std::string output_path;
    std::string format = "json";
    int threads = 0;
};

void add_config_flags(CLI::App* cmd, CommonOpts& o) {
    auto* in = cmd->add_option("--input", o.input_path, "Configuration JSON file");
    auto* an = cmd->add_option("--angles", o.angles, "Inline comma-separated angles (radians)");
    in->excludes(an);
    an->excludes(in);
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--output", o.output_path, "Write the document here instead of stdout");
    cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", o.threads,
                    "Cap engine parallelism (default: LO_LAB_THREADS or all cores)");
}

lolab::Configuration load_config(const CommonOpts& o) {
    if (!o.input_path.empty()) return lolab::config_from_file(o.input_path);
    if (o.angles.empty()) throw CLI::ValidationError("config", "need --input or --angles");
    std::vector<double> angles;
    std::stringstream ss(o.angles);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw CLI::ValidationError("--angles", "bad number: " + tok);
        angles.push_back(v);
    }
    return lolab::Configuration::from_angles(angles);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(o.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output: " + o.output_path);
    out << text << "\n";
}

void emit_json(const CommonOpts& o, const ordered_json& j) { emit(o, lolab::dump_json17(j)); }

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small-ball probability laboratory for planar signed sums"};
    app.require_subcommand(1);

    CommonOpts ex_o;
    double ex_r2 = 0.0;
    std::optional<double> ex_band;
    auto* ex = app.add_subcommand("exact", "Exact Pr[|sigma|^2 <= r2] by meet-in-the-middle");
    add_config_flags(ex, ex_o);
    add_output_flags(ex, ex_o);
    ex->add_option("--r2", ex_r2, "Squared radius")->required();
    double ex_band_val = 0.0;
    auto* ex_band_opt = ex->add_option("--eps-band", ex_band_val, "Boundary audit band");

    CommonOpts mc_o;
    double mc_r2 = 0.0;
    std::uint64_t mc_samples = 0, mc_seed = 0;
    auto* mc = app.add_subcommand("mc", "Monte Carlo Pr[|sigma|^2 <= r2] with Wilson interval");
    add_config_flags(mc, mc_o);
    add_output_flags(mc, mc_o);
    mc->add_option("--r2", mc_r2, "Squared radius")->required();
    mc->add_option("--samples", mc_samples, "Number of trials")->required();
    mc->add_option("--seed", mc_seed, "Generator seed (required: runs must be reproducible)")
        ->required();

    CommonOpts q_o;
    double q_r2 = 0.0;
    std::uint64_t q_samples = 0, q_seed = 0;
    auto* qc =
        app.add_subcommand("q", "Collision probability Pr[|X - X'| <= a] with a = sqrt(--r2)");
    add_config_flags(qc, q_o);
    add_output_flags(qc, q_o);
    qc->add_option("--r2", q_r2, "Squared distance a^2")->required();
    auto* q_samples_opt = qc->add_option("--samples", q_samples, "Monte Carlo trials");
    auto* q_seed_opt = qc->add_option("--seed", q_seed, "Seed (required with --samples)");
    q_samples_opt->needs(q_seed_opt);

    CommonOpts ce_o;
    double ce_r2 = 2.0;
    auto* ce = app.add_subcommand("certify",
                                  "Emit an explicit lower-bound certificate for Pr[|sigma| <= r]");
    add_config_flags(ce, ce_o);
    add_output_flags(ce, ce_o);
    ce->add_option("--r2", ce_r2, "Squared radius (default 2)");

    CommonOpts pl_o;
    double pl_gamma = 0.0;
    auto* pl =
        app.add_subcommand("pipeline", "Inspect ordering, pairing and classification stages");
    add_config_flags(pl, pl_o);
    add_output_flags(pl, pl_o);
    auto* pl_gamma_opt =
        pl->add_option("--gamma", pl_gamma, "Closeness angle (default arcsin 0.1)");

    CommonOpts ax_o;
    int ax_n = 0, ax_t = -1;
    double ax_r2 = 0.0;
    auto* ax = app.add_subcommand("axis", "Exact axis-configuration probabilities over t");
    add_output_flags(ax, ax_o);
    ax->add_option("--n", ax_n, "Number of vectors")->required();
    ax->add_option("--r2", ax_r2, "Squared radius")->required();
    ax->add_option("--t", ax_t, "Single split point (omit for the full profile)");

    CommonOpts fp_o;
    std::string fp_nlist;
    double fp_r2 = 2.0;
    auto* fp = app.add_subcommand("fprobe", "Scaled axis minima n * min_t P for a list of n");
    add_output_flags(fp, fp_o);
    fp->add_option("--n", fp_nlist, "Comma-separated list of n")->required();
    fp->add_option("--r2", fp_r2, "Squared radius (default 2)");

    CommonOpts se_o;
    int se_n = 0, se_iterations = 1000, se_restarts = 200;
    double se_r2 = 2.0;
    std::uint64_t se_seed = 0;
    auto* se =
        app.add_subcommand("search", "Randomized local search for low-probability configurations");
    add_output_flags(se, se_o);
    se->add_option("--n", se_n, "Number of vectors")->required();
    se->add_option("--r2", se_r2, "Squared radius (default 2)");
    se->add_option("--seed", se_seed, "Seed (required: runs must be reproducible)")->required();
    se->add_option("--iterations", se_iterations, "Moves per restart (default 1000)");
    se->add_option("--restarts", se_restarts, "Restarts (default 200)");

    CommonOpts le_o;
    std::uint64_t le_trials = 100000, le_seed = 0;
    auto* le = app.add_subcommand("lemmas", "Seeded randomized checks of the geometric lemmas");
    add_output_flags(le, le_o);
    le->add_option("--trials", le_trials, "Trials per suite (default 100000)");
    le->add_option("--seed", le_seed, "Seed (required: runs must be reproducible)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*ex) {
            const auto cfg = load_config(ex_o);
            if (*ex_band_opt) ex_band = ex_band_val;
            const auto r = lolab::exact_probability(cfg, ex_r2, ex_band, ex_o.threads);
            ordered_json j = lolab::to_json(r);
            j["op"] = "exact";
            emit_json(ex_o, j);
        } else if (*mc) {
            const auto cfg = load_config(mc_o);
            const auto est =
                lolab::mc_probability(cfg, mc_r2, mc_samples, mc_seed, 0.95, mc_o.threads);
            ordered_json j = lolab::to_json(est);
            j["op"] = "mc";
            j["n"] = cfg.size();
            j["r_sq"] = mc_r2;
            emit_json(mc_o, j);
        } else if (*qc) {
            const auto cfg = load_config(q_o);
            const double a = std::sqrt(q_r2);
            ordered_json j;
            if (*q_samples_opt) {
                const auto est = lolab::mc_q(cfg, a, q_samples, q_seed, 0.95, q_o.threads);
                j = lolab::to_json(est);
                j["method"] = "mc";
            } else {
                const auto r = lolab::exact_q(cfg, a, std::nullopt, q_o.threads);
                j = lolab::to_json(r);
                j["method"] = "exact";
            }
            j["op"] = "q";
            j["a"] = a;
            emit_json(q_o, j);
        } else if (*ce) {
            const auto cfg = load_config(ce_o);
            const double r = std::sqrt(ce_r2);
            const auto cert = lolab::certify(cfg, r);
            ordered_json j = lolab::to_json(cert);
            j["op"] = "certify";

            // soundness cross-check: the certified bound must never exceed
            // what the engines report; a violation is a build defect
            ordered_json cc;
            bool sound = true;
            if (cfg.size() <= 24) {
                const auto exact =
                    lolab::exact_probability(cfg, ce_r2, std::nullopt, ce_o.threads);
                cc["method"] = "exact";
                cc["prob_upper"] = exact.prob_upper;
                sound = cert.bound <= exact.prob_upper;
            } else {
                const auto est = lolab::mc_probability(cfg, ce_r2, 200000, kCrossCheckSeed,
                                                       0.999, ce_o.threads);
                cc["method"] = "mc";
                cc["seed"] = kCrossCheckSeed;
                cc["confidence"] = 0.999;
                cc["ci_high"] = est.ci_high;
                sound = cert.bound <= est.ci_high;
            }
            cc["sound"] = sound;
            j["crosscheck"] = std::move(cc);
            emit_json(ce_o, j);
            if (!sound) {
                std::cerr << "certify: soundness cross-check FAILED\n";
                return 3;
            }
        } else if (*pl) {
            const auto cfg = load_config(pl_o);
            const double gamma = *pl_gamma_opt ? pl_gamma : lolab::certify_gamma();
            const auto [sorted, plan] = lolab::normalize_to_semicircle(cfg);
            ordered_json j;
            j["op"] = "pipeline";
            j["n"] = cfg.size();
            j["gamma"] = gamma;
            j["normalized"] = lolab::config_to_json(sorted);
            j["plan"] = lolab::to_json(plan);
            j["consecutive_chord_sum"] = lolab::consecutive_chord_sum(sorted);
            if (cfg.size() % 2 == 0) j["pairing"] = lolab::to_json(lolab::choose_pairing(sorted));
            j["classification"] = lolab::to_json(lolab::classify_two_directions(cfg, gamma));
            if (cfg.size() % 2 == 1 && cfg.size() >= 3) {
                const auto red = lolab::reduce_to_even(cfg);
                ordered_json rj;
                rj["branch"] = red.kind == lolab::ReduceToEven::Kind::BranchA ? "A" : "B";
                rj["i"] = red.i;
                if (red.kind == lolab::ReduceToEven::Kind::BranchB) {
                    rj["j"] = red.j;
                    rj["k"] = red.k;
                }
                j["reduce_to_even"] = std::move(rj);
            }
            emit_json(pl_o, j);
        } else if (*ax) {
            if (ax_t >= 0) {
                const auto p = lolab::axis_probability(ax_n, ax_t, ax_r2);
                if (ax_o.format == "csv") {
                    std::ostringstream out;
                    out << "n,t,probability_num,probability_den,scaled\n";
                    out << ax_n << "," << ax_t << "," << p.get_num().get_str() << ","
                        << p.get_den().get_str() << "," << fmt17(double(ax_n) * p.get_d());
                    emit(ax_o, out.str());
                } else {
                    ordered_json j = lolab::rational_to_json(p);
                    j["op"] = "axis";
                    j["n"] = ax_n;
                    j["t"] = ax_t;
                    j["r_sq"] = ax_r2;
                    j["value"] = p.get_d();
                    j["scaled"] = double(ax_n) * p.get_d();
                    emit_json(ax_o, j);
                }
            } else {
                const auto prof = lolab::axis_profile(ax_n, ax_r2);
                if (ax_o.format == "csv") {
                    std::ostringstream out;
                    out << "n,t,probability_num,probability_den,scaled\n";
                    for (int t = 0; t <= ax_n; ++t) {
                        const auto& p = prof.per_t[std::size_t(t)];
                        out << ax_n << "," << t << "," << p.get_num().get_str() << ","
                            << p.get_den().get_str() << "," << fmt17(double(ax_n) * p.get_d());
                        if (t < ax_n) out << "\n";
                    }
                    emit(ax_o, out.str());
                } else {
                    ordered_json j = lolab::to_json(prof);
                    j["op"] = "axis";
                    emit_json(ax_o, j);
                }
            }
        } else if (*fp) {
            std::vector<int> ns;
            std::stringstream ss(fp_nlist);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) ns.push_back(std::stoi(tok));
            const auto rep = lolab::f_probe(std::sqrt(fp_r2), ns);
            if (fp_o.format == "csv") {
                std::ostringstream out;
                out << "n,axis_argmin_t,axis_min_scaled\n";
                for (std::size_t i = 0; i < rep.entries.size(); ++i) {
                    const auto& e = rep.entries[i];
                    out << e.n << "," << e.axis_argmin_t << "," << fmt17(e.axis_min_scaled);
                    if (i + 1 < rep.entries.size()) out << "\n";
                }
                emit(fp_o, out.str());
            } else {
                ordered_json j = lolab::to_json(rep);
                j["op"] = "fprobe";
                emit_json(fp_o, j);
            }
        } else if (*se) {
            const auto res = lolab::search_min(se_n, se_r2, se_seed, se_iterations, se_restarts);
            const auto prof = lolab::axis_profile(se_n, se_r2);
            lolab::ExtremalReport rep;
            rep.r = std::sqrt(se_r2);
            rep.seed = se_seed;
            lolab::ExtremalEntry e;
            e.n = se_n;
            e.axis_argmin_t = prof.argmin_t;
            e.axis_min_scaled = prof.min_scaled;
            e.searched_probability = res.probability;
            e.searched_scaled = double(se_n) * res.probability;
            e.searched_angles = res.angles;
            rep.entries.push_back(std::move(e));
            if (se_o.format == "csv") {
                std::ostringstream out;
                out << "n,best_value,angles\n" << se_n << "," << fmt17(res.probability);
                for (double a : res.angles) out << "," << fmt17(a);
                emit(se_o, out.str());
            } else {
                ordered_json j = lolab::to_json(rep);
                j["op"] = "search";
                j["iterations"] = se_iterations;
                j["restarts"] = se_restarts;
                emit_json(se_o, j);
            }
        } else if (*le) {
            const auto suites = lolab::run_lemma_suites(le_trials, le_seed);
            ordered_json j;
            j["op"] = "lemmas";
            j["seed"] = le_seed;
            j["trials"] = le_trials;
            auto arr = ordered_json::array();
            std::uint64_t total_violations = 0;
            for (const auto& s : suites) {
                ordered_json e;
                e["name"] = s.name;
                e["trials"] = s.trials;
                e["violations"] = s.violations;
                e["worst_margin"] = s.worst_margin;
                total_violations += s.violations;
                arr.push_back(std::move(e));
            }
            j["suites"] = std::move(arr);
            j["total_violations"] = total_violations;
            emit_json(le_o, j);
            if (total_violations > 0) return 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
