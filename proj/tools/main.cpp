// Command-line surface for the exact counting library: constructions,
// disjoint-pair counts, formulas, interval checks, exhaustive minimisers,
// spectra, and the full verification suite.

#include "supersat/config.hpp"
#include "supersat/exactcomb.hpp"
#include "supersat/intgraph.hpp"
#include "supersat/io.hpp"
#include "supersat/oracle.hpp"
#include "supersat/permfam.hpp"
#include "supersat/setfam.hpp"
#include "supersat/structcount.hpp"
#include "supersat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using json = nlohmann::ordered_json;
using namespace supersat;

namespace {

json minimizer_json(const MinimizerReport& r) {
    json j;
    json params;
    params["kind"] = r.kind;
    params["n"] = r.n;
    if (r.kind == "sets") params["k"] = r.k;
    params["s"] = to_decimal(r.s);
    j["params"] = params;
    j["minimum"] = to_decimal(r.minimum);
    j["formula_value"] = to_decimal(r.construction_value);
    j["optimal"] = r.construction_optimal;
    if (r.counted) j["num_minimizers"] = to_decimal(r.num_minimizers);
    json w = json::array();
    for (const auto& fam : r.sample_minimizers) w.push_back(fam);
    j["witnesses"] = w;
    j["exhaustive"] = r.exhaustive;
    j["runtime"] = r.seconds;
    return j;
}

void emit(const json& j, const RunConfig& cfg) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

int family_method_count(const SetFamily& fam, const std::string& method, const RunConfig& cfg,
                        BigNat& out) {
    if (method == "naive") {
        out = disj_naive(fam, cfg.workers > 0 ? cfg.workers : 2);
    } else if (method == "zeta") {
        out = disj_zeta(fam, cfg.zeta_cap);
    } else {
        out = fam.n <= cfg.zeta_cap && fam.size() > 512 ? disj_zeta(fam, cfg.zeta_cap)
                                                        : disj_naive(fam, cfg.workers > 0 ? cfg.workers : 2);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting for intersecting families and disjoint pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg = config_from_env();
    app.add_option("--format", cfg.format, "output format: plain|json|csv");
    app.add_option("--workers", cfg.workers, "worker threads (0 = auto)");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");
    app.add_option("--zeta-cap", cfg.zeta_cap, "ground-set cap for the subset-sum transform");
    app.add_option("--time-budget", cfg.time_budget_s, "search budget in seconds (0 = unlimited)");

    // ---- constructions ----
    auto* lex = app.add_subcommand("lex", "write the lex initial segment L(n,k,s)");
    long lex_n = 0, lex_k = 0;
    std::string lex_s, lex_out;
    lex->add_option("-n", lex_n)->required();
    lex->add_option("-k", lex_k)->required();
    lex->add_option("-s", lex_s)->required();
    lex->add_option("-o,--out", lex_out, "output file (default stdout)");

    auto* plex = app.add_subcommand("perm-lex", "write the lex permutation segment");
    long plex_n = 0;
    std::string plex_s, plex_out;
    plex->add_option("-n", plex_n)->required();
    plex->add_option("-s", plex_s)->required();
    plex->add_option("-o,--out", plex_out);

    auto* ball = app.add_subcommand("ball", "write an l-ball of given size");
    long ball_n = 0, ball_k = 0, ball_l = 0;
    std::string ball_s, ball_out;
    ball->add_option("-n", ball_n)->required();
    ball->add_option("-k", ball_k)->required();
    ball->add_option("-l,--ell", ball_l)->required();
    ball->add_option("-s", ball_s)->required();
    ball->add_option("-o,--out", ball_out);

    auto* cex = app.add_subcommand("counterexample", "counterexample table at n = 3k-1");
    long cex_k = 0;
    std::string cex_fam;
    cex->add_option("-k", cex_k)->required();
    cex->add_option("--family", cex_fam, "also write the family to a file");

    // ---- counting ----
    auto* dsets = app.add_subcommand("disj-sets", "count disjoint pairs in a family file");
    std::string dsets_file, dsets_method = "auto";
    dsets->add_option("--file", dsets_file)->required();
    dsets->add_option("--method", dsets_method, "naive|zeta|auto");

    auto* dperms = app.add_subcommand("disj-perms", "count disjoint pairs in a permutation file");
    std::string dperms_file;
    dperms->add_option("--file", dperms_file)->required();

    auto* formula = app.add_subcommand("formula", "closed-form counts and bounds");
    bool f_sets = false, f_perms = false;
    long f_n = 0, f_k = 0, f_r = 0;
    std::string f_s, f_gamma;
    formula->add_flag("--sets", f_sets, "lex-segment disjoint pairs");
    formula->add_flag("--perms", f_perms, "permutation-segment disjoint pairs");
    formula->add_option("-n", f_n);
    formula->add_option("-k", f_k);
    formula->add_option("-s", f_s);
    formula->add_option("-r", f_r, "star count for the upper bounds");
    formula->add_option("--gamma", f_gamma, "partial-star fraction (rational, e.g. 1/2)");

    auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of a family file");
    std::string sh_file, sh_out;
    long sh_s = 0;
    shadow_cmd->add_option("--file", sh_file)->required();
    shadow_cmd->add_option("-s", sh_s)->required();
    shadow_cmd->add_option("-o,--out", sh_out);

    auto* count_cmd = app.add_subcommand("count-families", "families without an s-matching");
    long cf_n = 0, cf_k = 0, cf_s = 2;
    count_cmd->add_option("-n", cf_n)->required();
    count_cmd->add_option("-k", cf_k)->required();
    count_cmd->add_option("-s", cf_s);

    auto* typ = app.add_subcommand("typicality", "typical-structure margin report");
    long ty_n = 0, ty_k = 0, ty_s = 2;
    typ->add_option("-n", ty_n)->required();
    typ->add_option("-k", ty_k)->required();
    typ->add_option("-s", ty_s);

    // ---- graphs and intervals ----
    auto* ig = app.add_subcommand("intgraph", "intersection-graph statistics or full sweep");
    std::string ig_spec;
    long ig_sweep = 0, ig_n = 0;
    ig->add_option("--spec", ig_spec, "coset spec file");
    ig->add_option("--sweep", ig_sweep, "sweep all canonical classes up to this size");
    ig->add_option("-n", ig_n, "ground-set size: adds interval-containment columns to the sweep");

    auto* p25 = app.add_subcommand("prop25", "interval checks for a coset union");
    std::string p25_spec;
    long p25_n = 0, p25_samples = 4;
    p25->add_option("--spec", p25_spec)->required();
    p25->add_option("-n", p25_n)->required();
    p25->add_option("--pi-samples", p25_samples);

    // ---- oracles ----
    auto* osets = app.add_subcommand("oracle-sets", "exhaustive minimum disjoint pairs (sets)");
    long os_n = 0, os_k = 0;
    std::string os_s;
    osets->add_option("-n", os_n)->required();
    osets->add_option("-k", os_k)->required();
    osets->add_option("-s", os_s)->required();

    auto* operms = app.add_subcommand("oracle-perms", "exhaustive minimum disjoint pairs (perms)");
    long op_n = 0;
    std::string op_s;
    operms->add_option("-n", op_n)->required();
    operms->add_option("-s", op_s)->required();

    auto* spec_cmd = app.add_subcommand("spectrum", "derangement-graph or Kneser spectra");
    long sp_n = 0, sp_m = 0, sp_a = 0;
    spec_cmd->add_option("--perm-n", sp_n, "derangement graph on S_n");
    spec_cmd->add_option("-m", sp_m, "Kneser ground set");
    spec_cmd->add_option("-a", sp_a, "Kneser uniformity");

    auto* verify_cmd = app.add_subcommand("verify-all", "run the full verification suite");
    std::vector<int> verify_only;
    verify_cmd->add_option("--only", verify_only, "criterion ids to run (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!cfg.valid()) {
        std::cerr << "error: invalid configuration\n";
        return 2;
    }

    try {
        if (lex->parsed()) {
            SetFamily f = lex_segment(static_cast<int>(lex_n), static_cast<int>(lex_k), BigNat(lex_s));
            if (lex_out.empty())
                write_family(std::cout, f);
            else
                write_family_file(lex_out, f);
            return 0;
        }
        if (plex->parsed()) {
            PermFamily f = lex_perm_segment(static_cast<int>(plex_n), BigNat(plex_s), cfg.perm_enum_cap);
            if (plex_out.empty())
                write_perm_family(std::cout, f);
            else
                write_perm_family_file(plex_out, f);
            return 0;
        }
        if (ball->parsed()) {
            SetFamily f = ell_ball(static_cast<int>(ball_n), static_cast<int>(ball_k),
                                   static_cast<int>(ball_l), BigNat(ball_s));
            if (ball_out.empty())
                write_family(std::cout, f);
            else
                write_family_file(ball_out, f);
            return 0;
        }
        if (cex->parsed()) {
            if (!cex_fam.empty()) write_family_file(cex_fam, counterexample_family(static_cast<int>(cex_k)));
            if (cex_k >= 5 && cex_k <= 8) {
                CounterexampleTable t = verify_counterexample(static_cast<int>(cex_k));
                json j;
                j["k"] = t.k;
                j["n"] = t.n;
                j["s"] = to_decimal(t.s);
                j["disj_family"] = to_decimal(t.disj_family);
                j["disj_lex"] = to_decimal(t.disj_lex);
                j["gap"] = to_decimal(t.expected_gap);
                j["family_beats_lex"] = t.family_beats_lex;
                j["lex_beats_balls"] = t.lex_beats_balls;
                json balls = json::array();
                for (const auto& row : t.balls) {
                    json b;
                    b["ell"] = row.ell;
                    b["radius"] = row.radius;
                    b["disj"] = to_decimal(row.disj);
                    b["inner_disj_lower_bound"] = to_decimal(row.inner_disj);
                    b["inner_size"] = to_decimal(row.inner_size);
                    balls.push_back(b);
                }
                j["balls"] = balls;
                emit(j, cfg);
                return t.family_beats_lex && t.lex_beats_balls ? 0 : 1;
            }
            auto [lexv, gap] = counterexample_closed_forms(static_cast<int>(cex_k));
            json j;
            j["k"] = cex_k;
            j["n"] = 3 * cex_k - 1;
            j["disj_lex"] = to_decimal(lexv);
            j["gap"] = to_decimal(gap);
            j["note"] = "closed forms only; direct counting covers k = 5..8";
            emit(j, cfg);
            return 0;
        }
        if (dsets->parsed()) {
            SetFamily fam = read_family_file(dsets_file);
            BigNat v;
            family_method_count(fam, dsets_method, cfg, v);
            std::cout << to_decimal(v) << "\n";
            return 0;
        }
        if (dperms->parsed()) {
            PermFamily fam = read_perm_family_file(dperms_file);
            std::cout << to_decimal(disj_perm(fam)) << "\n";
            return 0;
        }
        if (formula->parsed()) {
            if (f_sets) {
                std::cout << to_decimal(disj_lex_formula(f_n, f_k, BigNat(f_s))) << "\n";
            } else if (f_perms) {
                std::cout << to_decimal(disj_perm_formula(f_n, BigNat(f_s))) << "\n";
            } else if (f_r > 0 && !f_gamma.empty()) {
                BigRat gamma(f_gamma);
                gamma.canonicalize();
                std::cout << to_decimal(star_upper_bound(f_n, f_k, f_r, gamma)) << "\n";
                std::cout << to_decimal(quad_upper_bound(BigRat(BigNat(f_s)), f_r)) << "\n";
            } else {
                std::cerr << "formula: pass --sets, --perms, or -r with --gamma\n";
                return 2;
            }
            return 0;
        }
        if (shadow_cmd->parsed()) {
            SetFamily fam = read_family_file(sh_file);
            SetFamily sh = shadow(fam, static_cast<int>(sh_s));
            if (sh_out.empty())
                write_family(std::cout, sh);
            else
                write_family_file(sh_out, sh);
            return 0;
        }
        if (count_cmd->parsed()) {
            BigNat v = count_no_matching_families(static_cast<int>(cf_n), static_cast<int>(cf_k),
                                                  static_cast<int>(cf_s), cfg.family_enum_cap);
            json j;
            j["parameters"] = {{"n", cf_n}, {"k", cf_k}, {"s", cf_s}};
            j["value"] = to_decimal(v);
            emit(j, cfg);
            return 0;
        }
        if (typ->parsed()) {
            TypicalityReport r = typicality_report(ty_n, ty_k, ty_s);
            json j;
            j["parameters"] = {{"n", r.n}, {"k", r.k}, {"s", r.s}};
            j["value"] = to_decimal(r.margin); // the margin certifying typicality
            j["bound"] = to_decimal(r.margin_target);
            j["pass"] = !r.deep_range || r.target_met;
            j["N0"] = to_decimal(r.N0);
            j["N2"] = to_decimal(r.N2);
            j["N1_bound"] = to_decimal(r.N1_bound);
            j["log2M_bound"] = to_decimal(r.log2M_bound);
            j["num_extremal"] = to_decimal(r.T);
            j["deep_range"] = r.deep_range;
            emit(j, cfg);
            return (!r.deep_range || r.target_met) ? 0 : 1;
        }
        if (ig->parsed()) {
            if (ig_sweep > 0) {
                std::cout << "points;k1;k2;k3;k4;p3bar;canonical;ineq1;ineq2;ineq3;strong3;"
                             "size_in;within_in;within_refined_in\n";
                bool all_ok = true;
                FactorialTable fact(ig_n > 0 ? ig_n : 1);
                CrossMemo cross_memo;
                for (const auto& pts : enumerate_grid_graphs(static_cast<int>(ig_sweep))) {
                    IntGraph g = build_intgraph_points(pts);
                    auto kc = clique_counts(g, 4);
                    GridInequalities r = grid_inequality_check(g);
                    std::string pstr;
                    for (auto [a, b] : pts) pstr += std::to_string(a) + "," + std::to_string(b) + " ";
                    if (!pstr.empty()) pstr.pop_back();
                    std::string contain = ";;";
                    if (ig_n >= 5) {
                        CosetSpec spec = make_coset_spec(static_cast<int>(ig_n), pts);
                        CosetUnionEstimates est = union_estimates(g, ig_n);
                        BigNat usize = exact_union_size(spec, fact);
                        BigNat within = exact_disj_within_union(spec, fact, 12, &cross_memo);
                        bool s_in = est.size.contains(usize);
                        bool w_in = est.within.contains(within);
                        bool wr_in = est.within_refined.contains(within);
                        contain = std::string(s_in ? "1" : "0") + ";" + (w_in ? "1" : "0") + ";" +
                                  (wr_in ? "1" : "0");
                        if (!s_in || !w_in || !wr_in) all_ok = false;
                    }
                    std::cout << pstr << ";" << to_decimal(kc[0]) << ";" << to_decimal(kc[1]) << ";"
                              << to_decimal(kc[2]) << ";" << to_decimal(kc[3]) << ";"
                              << to_decimal(p3bar_count(g)) << ";" << (is_canonical(g) ? 1 : 0)
                              << ";" << to_string(r.one) << ";" << to_string(r.two) << ";"
                              << to_string(r.three) << ";" << (r.three_strong ? 1 : 0) << ";"
                              << contain << "\n";
                    if (r.one == IneqStatus::violated || r.two == IneqStatus::violated ||
                        r.three == IneqStatus::violated)
                        all_ok = false;
                }
                return all_ok ? 0 : 1;
            }
            if (ig_spec.empty()) {
                std::cerr << "intgraph: pass --spec or --sweep\n";
                return 2;
            }
            CosetSpec spec = read_coset_spec_file(ig_spec);
            IntGraph g = build_intgraph(spec);
            auto kc = clique_counts(g, 4);
            GridInequalities r = grid_inequality_check(g);
            json j;
            j["points"] = g.order();
            j["k"] = {to_decimal(kc[0]), to_decimal(kc[1]), to_decimal(kc[2]), to_decimal(kc[3])};
            j["p3bar"] = to_decimal(p3bar_count(g));
            j["canonical"] = is_canonical(g);
            j["inequalities"] = {to_string(r.one), to_string(r.two), to_string(r.three)};
            emit(j, cfg);
            return 0;
        }
        if (p25->parsed()) {
            CosetSpec spec = read_coset_spec_file(p25_spec);
            spec = make_coset_spec(static_cast<int>(p25_n), spec.points);
            IntGraph g = build_intgraph(spec);
            CosetUnionEstimates est = union_estimates(g, p25_n);
            FactorialTable fact(p25_n);
            CrossMemo cross_memo;
            AltSumMemo alt_memo;
            BigNat usize = exact_union_size(spec, fact);
            BigNat within = exact_disj_within_union(spec, fact, 12, &cross_memo);
            json j;
            j["n"] = p25_n;
            j["union_size"] = to_decimal(usize);
            j["size_in_interval"] = est.size.contains(usize);
            j["within"] = to_decimal(within);
            j["within_in_interval"] = est.within.contains(within);
            j["within_in_refined"] = est.within_refined.contains(within);
            bool per_ok = true;
            json piruns = json::array();
            std::mt19937_64 rng(cfg.seed);
            for (long t = 0; t < p25_samples; ++t) {
                Perm p;
                p.img.resize(p25_n);
                for (long i = 0; i < p25_n; ++i) p.img[i] = static_cast<int>((i + 7 + t) % p25_n) + 1;
                if (spec_contains_perm(spec, p)) continue;
                BigNat v = exact_disj_to_union(p, spec, fact, &alt_memo);
                bool in_b = est.per_perm.contains(v);
                bool in_b_ref = est.per_perm_refined(edge_overlap_sum(g, p)).contains(v);
                per_ok = per_ok && in_b && in_b_ref;
                json run;
                run["value"] = to_decimal(v);
                run["in_interval"] = in_b;
                run["in_refined"] = in_b_ref;
                piruns.push_back(run);
            }
            j["per_perm_runs"] = piruns;
            bool pass = est.size.contains(usize) && est.within.contains(within) &&
                        est.within_refined.contains(within) && per_ok;
            j["pass"] = pass;
            emit(j, cfg);
            return pass ? 0 : 1;
        }
        if (osets->parsed()) {
            BigNat s(os_s);
            MinimizerReport r = binom(os_n, os_k) <= 24 && cfg.time_budget_s == 0
                                    ? min_disj_sets_sweep(static_cast<int>(os_n),
                                                          static_cast<int>(os_k))[s.get_ui()]
                                    : min_disj_sets(static_cast<int>(os_n), static_cast<int>(os_k), s,
                                                    cfg.time_budget_s);
            dedup_samples_up_to_relabeling(r);
            emit(minimizer_json(r), cfg);
            return r.exhaustive ? 0 : 1;
        }
        if (operms->parsed()) {
            BigNat s(op_s);
            MinimizerReport r = min_disj_perms(static_cast<int>(op_n), s, cfg.time_budget_s);
            emit(minimizer_json(r), cfg);
            return r.exhaustive ? 0 : 1;
        }
        if (spec_cmd->parsed()) {
            json j;
            bool ok = true;
            if (sp_n > 0) {
                SpectrumReport r = derangement_graph_spectrum(static_cast<int>(sp_n));
                j["n"] = r.n;
                j["d_n"] = to_decimal(r.d_n);
                j["lambda0"] = r.lambda0;
                j["lambda1"] = r.lambda1;
                j["lambda2_ratio"] = r.lambda2_ratio;
                j["pass"] = r.lambda0_ok && r.lambda1_ok && r.row_sums_ok;
                ok = r.lambda0_ok && r.lambda1_ok && r.row_sums_ok;
            } else if (sp_m > 0 && sp_a > 0) {
                KneserSpectrumCheck r = kneser_spectrum_check(sp_m, sp_a);
                KneserParams kp = kneser_params(sp_m, sp_a);
                j["vertices"] = to_decimal(kp.vertices);
                j["degree"] = to_decimal(kp.degree);
                j["lambda"] = to_decimal(kp.lambda);
                j["extreme_nontrivial"] = r.extreme;
                j["pass"] = r.ok;
                ok = r.ok;
            } else {
                std::cerr << "spectrum: pass --perm-n or -m with -a\n";
                return 2;
            }
            emit(j, cfg);
            return ok ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            std::vector<int> ids = verify_only;
            if (ids.empty())
                for (int i = 1; i <= verify::criterion_count(); ++i) ids.push_back(i);
            bool all = true;
            for (int id : ids) {
                verify::CriterionResult r = verify::run_criterion(id, cfg);
                all = all && r.pass;
                std::printf("[%2d/%d] %s  %s  (%.2fs)\n", r.id, verify::criterion_count(),
                            r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
                std::printf("        %s\n", r.detail.c_str());
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
