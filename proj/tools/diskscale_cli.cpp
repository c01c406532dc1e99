// Command-line front end: solve / verify / generate / oracle-compare /
// plot / bench. Exit codes: 0 = yes|valid|ok, 1 = no|invalid|mismatch,
// 2 = error or timeout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diskscale/harness.hpp"
#include "diskscale/io.hpp"
#include "diskscale/is_enlarge.hpp"
#include "diskscale/svg.hpp"
#include "diskscale/vc_shrink.hpp"

namespace {

using namespace diskscale;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, ','))
        out.push_back(std::stoi(tok));
    return out;
}

Algo parse_algo(const std::string& name) {
    if (name == "auto") return Algo::Auto;
    if (name == "xp") return Algo::Xp;
    if (name == "cluster-fpt") return Algo::ClusterFpt;
    if (name == "complete") return Algo::Complete;
    if (name == "oracle") return Algo::Oracle;
    throw InputError("unknown algorithm '" + name + "'");
}

GraphClass target_class(const InstanceDoc& doc, const std::string& flag) {
    if (!flag.empty()) return parse_graph_class(flag);
    if (doc.target) return *doc.target;
    throw InputError("no target class: pass --class or store one in the instance file");
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << body;
}

// grid-tiling pick syntax: one "a,b" token per cell, outer coordinate i
// first, e.g. "1,2 2,1 1,1 2,2" for a 2x2 grid.
std::vector<std::vector<std::pair<int, int>>> parse_pick(const std::string& s, int kappa) {
    std::vector<std::pair<int, int>> flat;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        auto parts = split(tok, ',');
        if (parts.size() != 2) throw InputError("bad pick token '" + tok + "'");
        flat.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
    }
    if (flat.size() != static_cast<std::size_t>(kappa) * kappa)
        throw InputError("pick needs exactly kappa^2 tokens");
    std::vector<std::vector<std::pair<int, int>>> pick(kappa);
    for (int i = 0; i < kappa; ++i)
        pick[i].assign(flat.begin() + std::ptrdiff_t(i) * kappa,
                       flat.begin() + std::ptrdiff_t(i + 1) * kappa);
    return pick;
}

int cmd_solve(const std::string& instance_path, const std::string& cls_flag,
              const std::string& algo_flag, const std::string& out_path, double timeout_sec) {
    InstanceDoc doc = load_instance(instance_path);
    GraphClass cls = target_class(doc, cls_flag);
    Deadline deadline = timeout_sec > 0
                            ? Deadline::after_ms(static_cast<long long>(timeout_sec * 1000))
                            : Deadline::none();
    SolveOutcome out = solve(doc.instance, cls, parse_algo(algo_flag), deadline);
    std::cerr << "algo=" << out.stats.algorithm << " branches=" << out.stats.branches
              << " lp_calls=" << out.stats.lp_calls << " wall_ms=" << out.stats.wall_ms
              << "\n";
    std::cout << (out.yes ? "yes" : "no") << "\n";
    if (out.yes && !out_path.empty()) save_solution(out_path, *out.witness);
    return out.yes ? 0 : 1;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               const std::string& cls_flag) {
    InstanceDoc doc = load_instance(instance_path);
    GraphClass cls = target_class(doc, cls_flag);
    RadiusAssignment r = load_solution(solution_path);
    VerifyResult res = verify_solution(doc.instance, r, cls);
    if (!res) {
        std::cerr << res.message << "\n";
        std::cout << "invalid\n";
        return 1;
    }
    std::cout << "valid\n";
    return 0;
}

void maybe_write_witness(const std::string& path, const RadiusAssignment& r) {
    if (!path.empty()) save_solution(path, r);
}

int cmd_oracle_compare(const CompareOptions& opt) {
    CompareReport rep = run_oracle_compare(opt);
    std::cout << "trials=" << rep.trials << " yes=" << rep.yes << " no=" << rep.no
              << " mismatches=" << rep.mismatches << "\n";
    for (const auto& f : rep.failures) std::cerr << f << "\n";
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-disk rescaling toolkit"};
    app.require_subcommand(1);

    // ---- solve ----------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "decide one instance");
    std::string s_instance, s_class, s_algo = "auto", s_out;
    double s_timeout = 0;
    std::uint64_t s_seed = 1;
    solve_cmd->add_option("--instance", s_instance, "instance JSON")->required();
    solve_cmd->add_option("--class", s_class, "cluster|complete|connected|edgeless");
    solve_cmd->add_option("--algo", s_algo, "auto|xp|cluster-fpt|complete|oracle");
    solve_cmd->add_option("--out", s_out, "write witness JSON here on yes");
    solve_cmd->add_option("--seed", s_seed, "reserved for randomized strategies")
        ->envname("DISKSCALE_SEED");
    solve_cmd->add_option("--timeout", s_timeout, "cooperative limit in seconds");

    // ---- verify ---------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check a witness");
    std::string v_instance, v_solution, v_class;
    verify_cmd->add_option("--instance", v_instance, "instance JSON")->required();
    verify_cmd->add_option("--solution", v_solution, "witness JSON")->required();
    verify_cmd->add_option("--class", v_class, "target class override");

    // ---- generate -------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("generate", "emit instances");
    gen_cmd->require_subcommand(1);

    auto* g_random = gen_cmd->add_subcommand("random", "seeded random points");
    int r_n = 6, r_box = 6;
    long long r_k = 1;
    std::string r_rmin = "1/2", r_rmax = "2", r_class, r_out;
    std::uint64_t r_seed = 1;
    g_random->add_option("--n", r_n, "point count")->required();
    g_random->add_option("--k", r_k, "scaling budget")->required();
    g_random->add_option("--r-min", r_rmin, "lower radius bound (rational)");
    g_random->add_option("--r-max", r_rmax, "upper radius bound (rational)");
    g_random->add_option("--box", r_box, "points land in [0,box]^2");
    g_random->add_option("--class", r_class, "stamp a target class");
    g_random->add_option("--seed", r_seed, "RNG seed")->envname("DISKSCALE_SEED");
    g_random->add_option("--out", r_out, "output instance JSON")->required();

    auto* g_vc = gen_cmd->add_subcommand("vc-shrink", "cover gadget (shrink-only window)");
    std::string vc_embedding, vc_rmin = "1/2", vc_rmax, vc_out, vc_cover, vc_sol_out;
    long long vc_kappa = 1;
    g_vc->add_option("--embedding", vc_embedding, "embedded cubic graph JSON")->required();
    g_vc->add_option("--r-min", vc_rmin, "shrink radius (rational in (0,1))");
    g_vc->add_option("--r-max", vc_rmax, "optional upper bound < 1");
    g_vc->add_option("--kappa", vc_kappa, "cover size")->required();
    g_vc->add_option("--out", vc_out, "output instance JSON")->required();
    g_vc->add_option("--cover", vc_cover, "comma list of vertex ids for a witness");
    g_vc->add_option("--solution-out", vc_sol_out, "write the witness here");

    auto* g_is = gen_cmd->add_subcommand("is-enlarge", "independent-set gadget (enlarge)");
    std::string is_embedding, is_rmin = "2", is_rmax, is_out, is_members, is_sol_out;
    long long is_kappa = 1;
    g_is->add_option("--embedding", is_embedding, "embedded cubic graph JSON")->required();
    g_is->add_option("--r-min", is_rmin, "enlarge radius (rational >= 1)");
    g_is->add_option("--r-max", is_rmax, "optional upper bound");
    g_is->add_option("--kappa", is_kappa, "independent-set size")->required();
    g_is->add_option("--out", is_out, "output instance JSON")->required();
    g_is->add_option("--independent-set", is_members, "comma list of vertex ids");
    g_is->add_option("--solution-out", is_sol_out, "write the witness here");

    auto* g_gt = gen_cmd->add_subcommand("gridtiling", "grid-tiling connectivity gadget");
    std::string gt_tiles, gt_out, gt_pick, gt_sol_out, gt_tiles_out;
    int gt_eta = 2, gt_kappa = 2;
    long long gt_gamma = 0;
    bool gt_planted = false;
    g_gt->add_option("--tiles", gt_tiles, "grid-tiling instance JSON");
    g_gt->add_flag("--planted", gt_planted, "use the built-in solvable instance");
    g_gt->add_option("--eta", gt_eta, "planted alphabet size");
    g_gt->add_option("--kappa", gt_kappa, "planted grid size");
    g_gt->add_option("--gamma", gt_gamma, "override the tile pitch (testing)");
    g_gt->add_option("--out", gt_out, "output instance JSON")->required();
    g_gt->add_option("--tiles-out", gt_tiles_out, "also write the tiling JSON");
    g_gt->add_option("--pick", gt_pick, "one 'a,b' per cell, outer index first");
    g_gt->add_option("--solution-out", gt_sol_out, "write the witness here");

    auto* g_tr = gen_cmd->add_subcommand("gt-transform", "rewrite tiling order relation");
    std::string tr_tiles, tr_mode = "le-to-lt", tr_out;
    bool tr_check = false;
    g_tr->add_option("--tiles", tr_tiles, "grid-tiling instance JSON")->required();
    g_tr->add_option("--mode", tr_mode, "le-to-lt|lt-to-gt|le-to-gt");
    g_tr->add_flag("--check", tr_check, "report solvability before and after");
    g_tr->add_option("--out", tr_out, "output tiling JSON")->required();

    // ---- oracle-compare --------------------------------------------------
    auto* cmp_cmd = app.add_subcommand("oracle-compare", "randomized agreement sweep");
    CompareOptions cmp;
    std::string cmp_classes = "cluster,complete,connected,edgeless", cmp_algo = "xp";
    cmp_cmd->add_option("--trials", cmp.trials, "number of seeded trials");
    cmp_cmd->add_option("--max-n", cmp.max_n, "largest point count");
    cmp_cmd->add_option("--max-k", cmp.max_k, "largest budget");
    cmp_cmd->add_option("--classes", cmp_classes, "comma list of target classes");
    cmp_cmd->add_option("--algo", cmp_algo, "solver under test");
    cmp_cmd->add_option("--seed", cmp.seed, "base seed")->envname("DISKSCALE_SEED");
    cmp_cmd->add_flag("--inject-fault", cmp.inject_fault,
                      "flip trial 0 to prove mismatches are caught");

    // ---- plot ------------------------------------------------------------
    auto* plot_cmd = app.add_subcommand("plot", "render an instance to SVG");
    std::string p_instance, p_solution, p_out;
    plot_cmd->add_option("--instance", p_instance, "instance JSON")->required();
    plot_cmd->add_option("--solution", p_solution, "optional witness JSON");
    plot_cmd->add_option("--out", p_out, "output SVG path")->required();

    // ---- bench -----------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "seeded micro-benchmarks (CSV)");
    std::string b_suite = "complete", b_sizes;
    int b_repeats = 3;
    std::uint64_t b_seed = 1;
    bench_cmd->add_option("--suite", b_suite, "xp|cluster|complete")->required();
    bench_cmd->add_option("--sizes", b_sizes, "comma list of point counts");
    bench_cmd->add_option("--repeats", b_repeats, "runs per size (median)");
    bench_cmd->add_option("--seed", b_seed, "base seed")->envname("DISKSCALE_SEED");

    try {
        app.parse(argc, argv);

        if (*solve_cmd) return cmd_solve(s_instance, s_class, s_algo, s_out, s_timeout);
        if (*verify_cmd) return cmd_verify(v_instance, v_solution, v_class);

        if (*g_random) {
            Instance inst = gen_random(r_n, r_k, parse_rational(r_rmin),
                                       parse_rational(r_rmax), r_box, r_seed);
            InstanceDoc doc;
            doc.instance = inst;
            if (!r_class.empty()) doc.target = parse_graph_class(r_class);
            save_instance(r_out, doc);
            return 0;
        }
        if (*g_vc) {
            EmbeddedGraph g = load_embedding(vc_embedding);
            std::optional<Rational> rmax;
            if (!vc_rmax.empty()) rmax = parse_rational(vc_rmax);
            ReductionArtifact art = gen_vc_shrink(g, parse_rational(vc_rmin), vc_kappa, rmax);
            save_instance(vc_out, doc_from_artifact(art, GraphClass::Cluster));
            if (!vc_cover.empty())
                maybe_write_witness(vc_sol_out,
                                    build_vc_forward_solution(art, parse_id_list(vc_cover)));
            return 0;
        }
        if (*g_is) {
            EmbeddedGraph g = load_embedding(is_embedding);
            std::optional<Rational> rmax;
            if (!is_rmax.empty()) rmax = parse_rational(is_rmax);
            ReductionArtifact art = gen_is_enlarge(g, parse_rational(is_rmin), is_kappa, rmax);
            save_instance(is_out, doc_from_artifact(art, GraphClass::Cluster));
            if (!is_members.empty())
                maybe_write_witness(is_sol_out,
                                    build_is_forward_solution(art, parse_id_list(is_members)));
            return 0;
        }
        if (*g_gt) {
            GridTilingInstance tiles = gt_planted ? gt_planted_instance(gt_eta, gt_kappa)
                                                  : load_tiles(gt_tiles);
            std::optional<long long> gamma;
            if (gt_gamma > 0) gamma = gt_gamma;
            ReductionArtifact art = gen_gridtiling_connected(tiles, gamma);
            save_instance(gt_out, doc_from_artifact(art, GraphClass::Connected));
            if (!gt_tiles_out.empty()) save_tiles(gt_tiles_out, tiles);
            if (!gt_pick.empty())
                maybe_write_witness(
                    gt_sol_out, build_gt_forward_solution(art, parse_pick(gt_pick, tiles.kappa)));
            return 0;
        }
        if (*g_tr) {
            GridTilingInstance in = load_tiles(tr_tiles);
            GridTilingInstance out;
            GtOrder from, to;
            if (tr_mode == "le-to-lt") {
                from = GtOrder::LessEq, to = GtOrder::Less;
                out = gt_le_to_lt(in);
            } else if (tr_mode == "lt-to-gt") {
                from = GtOrder::Less, to = GtOrder::Greater;
                out = gt_lt_to_gt(in);
            } else if (tr_mode == "le-to-gt") {
                from = GtOrder::LessEq, to = GtOrder::Greater;
                out = gt_lt_to_gt(gt_le_to_lt(in));
            } else {
                throw InputError("unknown mode '" + tr_mode + "'");
            }
            if (tr_check)
                std::cerr << "solvable(before)=" << (gt_solvable(in, from) ? "yes" : "no")
                          << " solvable(after)=" << (gt_solvable(out, to) ? "yes" : "no")
                          << "\n";
            save_tiles(tr_out, out);
            return 0;
        }
        if (*cmp_cmd) {
            cmp.classes.clear();
            for (const auto& name : split(cmp_classes, ','))
                cmp.classes.push_back(parse_graph_class(name));
            if (cmp.classes.empty()) throw InputError("--classes must name at least one class");
            cmp.algo = parse_algo(cmp_algo);
            cmp.budget.max_n = cmp.max_n;
            cmp.budget.max_k = cmp.max_k;
            return cmd_oracle_compare(cmp);
        }
        if (*plot_cmd) {
            InstanceDoc doc = load_instance(p_instance);
            std::optional<RadiusAssignment> sol;
            if (!p_solution.empty()) sol = load_solution(p_solution);
            write_text_file(p_out, render_svg(doc.instance, sol));
            return 0;
        }
        if (*bench_cmd) {
            std::vector<int> sizes;
            for (const auto& tok : split(b_sizes, ',')) sizes.push_back(std::stoi(tok));
            Algo algo;
            GraphClass cls;
            long long k;
            if (b_suite == "xp")
                algo = Algo::Xp, cls = GraphClass::Connected, k = 2;
            else if (b_suite == "cluster")
                algo = Algo::ClusterFpt, cls = GraphClass::Cluster, k = 3;
            else if (b_suite == "complete")
                algo = Algo::Complete, cls = GraphClass::Complete, k = 3;
            else
                throw InputError("unknown suite '" + b_suite + "'");
            std::cout << bench_to_csv(run_bench(algo, cls, k, sizes, b_repeats, b_seed));
            return 0;
        }
        return 2; // unreachable: require_subcommand(1)
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const diskscale::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
