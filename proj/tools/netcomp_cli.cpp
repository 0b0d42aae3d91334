// netcomp: batch front end for network computation problems. Every
// subcommand reads JSON files, runs one library operation and reports
// pass/fail: exit 0 on success, 1 on a failed check or search, 2 on
// usage or malformed input. --json replaces the text report with a
// machine-readable object (byte-identical across runs; timings are only
// printed in text mode).

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "netcomp/netcomp.hpp"

namespace {

using namespace netcomp;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    bool json = false;
    std::optional<std::uint32_t> q;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.json, "emit a machine-readable JSON report");
    cmd->add_option("--q", opts.q, "override the alphabet size of the problem");
}

NetworkProblem load_problem_checked(const std::string& path,
                                    const CommonOpts& opts) {
    NetworkProblem p = load_problem(path);
    if (opts.q) p = with_alphabet(p, *opts.q);
    return p;
}

/// Problems must be structurally sound before any other operation runs;
/// sinks listing several demands are split into co-located sinks first.
NetworkProblem load_valid_problem(const std::string& path, const CommonOpts& opts) {
    NetworkProblem p = normalize_multi_demand(load_problem_checked(path, opts));
    const auto violations = validate(p);
    if (!violations.empty()) {
        std::string what = path + ": invalid problem";
        for (const auto& v : violations) what += "\n  " + v.code + ": " + v.detail;
        throw ParseError(what);
    }
    return p;
}

int emit(const CommonOpts& opts, json report, const std::string& text, int code) {
    if (opts.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

json violations_json(const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"code", v.code}, {"detail", v.detail}});
    return out;
}

json code_violations_json(const VerifyReport& report) {
    json out = json::array();
    for (const auto& v : report.items)
        out.push_back({{"condition", v.condition}, {"where", v.where},
                       {"detail", v.detail}});
    return out;
}

std::string code_violations_text(const VerifyReport& report) {
    std::string out;
    for (const auto& v : report.items)
        out += "  [" + v.condition + "] " + v.where + ": " + v.detail + "\n";
    return out;
}

json matroidal_json(const MatroidalReport& m, const ConstraintVerdict* c) {
    json items = json::array();
    for (const auto& v : m.items)
        items.push_back({{"condition", v.condition}, {"where", v.where},
                         {"detail", v.detail}});
    if (c)
        for (const auto& v : c->items)
            items.push_back({{"condition", v.condition}, {"where", v.where},
                             {"detail", v.detail}});
    return items;
}

std::string matroidal_text(const MatroidalReport& m, const ConstraintVerdict* c) {
    std::string out;
    for (const auto& v : m.items)
        out += "  [" + v.condition + "] " + v.where + ": " + v.detail + "\n";
    if (c)
        for (const auto& v : c->items)
            out += "  [" + v.condition + "] " + v.where + ": " + v.detail + "\n";
    return out;
}

json edge_names(const NetworkProblem& p, EdgeSet s) {
    json out = json::array();
    for (const auto& r : edge_set_members(p, s)) out.push_back(r.name());
    return out;
}

int run_validate(const std::string& problem_path, const CommonOpts& opts) {
    const NetworkProblem p = load_problem_checked(problem_path, opts);
    const auto violations = validate(p);
    json report = {{"command", "validate"}, {"pass", violations.empty()},
                   {"violations", violations_json(violations)}};
    std::string text;
    if (violations.empty()) {
        text = "ok: " + problem_path + " is a well-formed problem\n";
    } else {
        text = "invalid: " + problem_path + "\n";
        for (const auto& v : violations)
            text += "  " + v.code + ": " + v.detail + "\n";
    }
    return emit(opts, report, text, violations.empty() ? kExitPass : kExitFail);
}

int run_check_code(const std::string& problem_path, const std::string& code_path,
                   const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    LinearNetworkCode code = load_code(code_path);
    if (code.decoders.empty()) {
        if (auto d = solve_decoders(p, code)) code.decoders = *d;
    }
    const VerifyReport report = verify_code(p, code);
    json j = {{"command", "check-code"}, {"pass", report.pass},
              {"violations", code_violations_json(report)}};
    std::string text = report.pass ? "ok: code verifies on " + problem_path + "\n"
                                   : "fail: code does not verify\n" +
                                         code_violations_text(report);
    return emit(opts, j, text, report.pass ? kExitPass : kExitFail);
}

int run_solve(const std::string& problem_path, bool nonlinear,
              const SolveBudget& budget, const std::string& out_path,
              const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    json code_json;
    SolveStatus status;
    SolveStats stats;
    std::uint32_t q = p.alphabet;
    if (nonlinear) {
        const NonlinearSolveResult result =
            solve_scalar_nonlinear_exhaustive(p, p.alphabet, budget);
        status = result.status;
        stats = result.stats;
        q = result.q;
        if (result.code)
            code_json = nonlinear_code_to_json(*result.code, p.message_count());
    } else {
        const LinearSolveResult result = solve_scalar_linear(p, budget);
        status = result.status;
        stats = result.stats;
        q = result.q;
        if (result.code) code_json = code_to_json(*result.code);
    }
    const std::string status_name = status == SolveStatus::solved ? "solved"
                                    : status == SolveStatus::unsolvable
                                        ? "unsolvable"
                                        : "unknown";
    json provenance = {
        {"mode", budget.mode == SolveBudget::Mode::exhaustive ? "exhaustive"
                                                              : "randomized"},
        {"candidates_examined", stats.candidates_examined}};
    json report = {{"command", "solve"}, {"pass", status == SolveStatus::solved},
                   {"status", status_name}, {"q", q}, {"provenance", provenance}};
    std::string text = status_name + " (q=" + std::to_string(q) + ", " +
                       std::to_string(stats.candidates_examined) +
                       " candidates, " + std::to_string(stats.elapsed_seconds) +
                       " s)\n";
    if (status == SolveStatus::solved) {
        if (!out_path.empty()) {
            save_json_file(out_path, code_json);
            report["code_file"] = out_path;
            text += "code written to " + out_path + "\n";
        } else {
            report["code"] = code_json;
            if (!opts.json) text += code_json.dump(2) + "\n";
        }
    }
    return emit(opts, report, text,
                status == SolveStatus::solved ? kExitPass : kExitFail);
}

int run_extract_matroid(const std::string& problem_path,
                        const std::string& code_path,
                        std::vector<std::string> outs, const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    LinearNetworkCode code = load_code(code_path);
    const ExtractResult result = matroid_from_code(p, code);
    if (!result.matrix) {
        json report = {{"command", "extract-matroid"}, {"pass", false},
                       {"violations", code_violations_json(result.code_report)}};
        return emit(opts, report,
                    "fail: code does not verify, no matroid extracted\n" +
                        code_violations_text(result.code_report),
                    kExitFail);
    }
    while (outs.size() < 2) outs.push_back(outs.empty() ? "matroid.json" : "map.json");
    const RankOracle oracle = RankOracle::vector_matroid(*result.matrix);
    save_json_file(outs[0], matroid_to_json(oracle));
    save_json_file(outs[1], map_to_json(result.map));
    json report = {{"command", "extract-matroid"}, {"pass", true},
                   {"matroid_file", outs[0]}, {"map_file", outs[1]},
                   {"ground_size", result.matrix->cols()},
                   {"rank", rank(*result.matrix)}};
    return emit(opts, report,
                "ok: wrote " + outs[0] + " and " + outs[1] + " (ground set " +
                    std::to_string(result.matrix->cols()) + ", rank " +
                    std::to_string(rank(*result.matrix)) + ")\n",
                kExitPass);
}

int run_check_matroidal(const std::string& problem_path,
                        const std::string& matroid_path,
                        const std::string& map_path, const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    const RankOracle oracle =
        matroid_from_json(load_json_file(matroid_path), matroid_path);
    const NetworkMatroidMap f = complete_map_defaults(
        p, map_from_json(load_json_file(map_path), map_path));
    const MatroidalReport matroidal = check_matroidal(p, oracle, f);
    // C1/C2 are defined for vector matroids over linear-demand problems
    bool linear_demands = true;
    for (std::size_t t = 1; t <= p.sink_count(); ++t)
        if (!demand_column(p, static_cast<int>(t))) linear_demands = false;
    std::optional<ConstraintVerdict> constraints;
    if (oracle.kind() == RankOracle::Kind::vector_matroid && linear_demands)
        constraints = check_representation_constraints(oracle.matrix(), p, f);
    const bool pass = matroidal.pass && (!constraints || constraints->ok);
    json report = {{"command", "check-matroidal"}, {"pass", pass},
                   {"violations",
                    matroidal_json(matroidal,
                                   constraints ? &*constraints : nullptr)}};
    std::string text =
        pass ? "ok: the network is matroidal with respect to the given matroid\n"
             : "fail:\n" + matroidal_text(matroidal,
                                          constraints ? &*constraints : nullptr);
    return emit(opts, report, text, pass ? kExitPass : kExitFail);
}

int run_code_from_matroid(const std::string& problem_path,
                          const std::string& matrix_path,
                          const std::string& map_path,
                          const std::string& out_path, const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    const json mj = load_json_file(matrix_path);
    const FieldMatrix m = mj.contains("kind")
                              ? matroid_from_json(mj, matrix_path).matrix()
                              : matrix_from_json(mj, matrix_path);
    const NetworkMatroidMap f = complete_map_defaults(
        p, map_from_json(load_json_file(map_path), map_path));
    const SynthesisResult result = code_from_representation(m, p, f);
    if (!result.ok()) {
        json report = {{"command", "code-from-matroid"}, {"pass", false},
                       {"violations",
                        matroidal_json(result.matroidal, &result.constraints)}};
        if (!result.error.empty()) report["error"] = result.error;
        std::string text = "fail:\n" +
                           matroidal_text(result.matroidal, &result.constraints);
        if (!result.error.empty()) text += "  " + result.error + "\n";
        return emit(opts, report, text, kExitFail);
    }
    const json code_json = code_to_json(*result.code);
    json report = {{"command", "code-from-matroid"}, {"pass", true}};
    std::string text;
    if (!out_path.empty()) {
        save_json_file(out_path, code_json);
        report["code_file"] = out_path;
        text = "ok: code written to " + out_path + "\n";
    } else {
        report["code"] = code_json;
        text = code_json.dump(2) + "\n";
    }
    return emit(opts, report, text, kExitPass);
}

int run_fd_generators(const std::string& problem_path, const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    const FDGenerators g = build_QE(p);
    json pairs = json::array();
    std::string text;
    for (const auto& [i, j] : g.pairs) {
        pairs.push_back({{"I", edge_names(p, i)}, {"J", edge_names(p, j)}});
        text += edge_set_name(p, i) + " -> " + edge_set_name(p, j) + "\n";
    }
    json report = {{"command", "fd-generators"}, {"pass", true},
                   {"ground_size", g.ground_size}, {"pairs", pairs}};
    return emit(opts, report, text, kExitPass);
}

int run_fd_closure(const std::string& problem_path, const std::string& of,
                   const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    EdgeSet set = 0;
    std::string token;
    std::stringstream ss(of);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto ref = EdgeRef::parse(token);
        if (!ref) throw ParseError("--of: bad edge name \"" + token + "\"");
        set |= EdgeSet(1) << dense_index(p, *ref);
    }
    const EdgeSet closed = attr_closure(build_QE(p), set);
    json report = {{"command", "fd-closure"}, {"pass", true},
                   {"of", edge_names(p, set)}, {"closure", edge_names(p, closed)}};
    return emit(opts, report, edge_set_name(p, closed) + "\n", kExitPass);
}

int run_check_fd_rep(const std::string& problem_path, const std::string& phi_path,
                     std::uint64_t tuple_budget, const CommonOpts& opts) {
    const NetworkProblem p = load_valid_problem(problem_path, opts);
    json pj = load_json_file(phi_path);
    if (opts.q) pj["q"] = *opts.q; // alphabet override applies to both files
    const PhiAssignment phi = phi_from_json(pj, p.message_count(), phi_path);
    const FdRepReport report =
        check_functional_representation(p, phi, tuple_budget);
    json items = json::array();
    std::string text;
    for (const auto& v : report.items) {
        items.push_back({{"condition", v.condition}, {"where", v.where},
                         {"x", v.x}, {"x2", v.x2}, {"edge", v.differing.name()},
                         {"detail", v.detail}});
        text += "  [" + v.condition + "] " + v.where + ": " + v.detail + "\n";
        if (!v.x2.empty())
            text += "    x  = " + to_string(Column(v.x.begin(), v.x.end())) +
                    "\n    x' = " + to_string(Column(v.x2.begin(), v.x2.end())) +
                    "\n";
    }
    json j = {{"command", "check-fd-rep"}, {"pass", report.pass},
              {"violations", items}};
    return emit(opts, j,
                report.pass ? "ok: functional representation verifies\n"
                            : "fail:\n" + text,
                report.pass ? kExitPass : kExitFail);
}

int run_check_matroid_axioms(const std::string& matroid_path,
                             const CommonOpts& opts) {
    const RankOracle oracle =
        matroid_from_json(load_json_file(matroid_path), matroid_path);
    const auto violations = check_rank_axioms(oracle);
    json items = json::array();
    std::string text;
    for (const auto& v : violations) {
        items.push_back({{"axiom", v.axiom}, {"A", subset_name(v.a)},
                         {"B", subset_name(v.b)}, {"detail", v.detail}});
        text += "  [" + v.axiom + "] " + v.detail + "\n";
    }
    json report = {{"command", "check-matroid-axioms"},
                   {"pass", violations.empty()}, {"violations", items}};
    return emit(opts, report,
                violations.empty() ? "ok: R1-R3 hold\n" : "fail:\n" + text,
                violations.empty() ? kExitPass : kExitFail);
}

int run_check_representation(const std::string& matroid_path,
                             const std::string& matrix_path,
                             const std::string& map_path, const CommonOpts& opts) {
    const RankOracle oracle =
        matroid_from_json(load_json_file(matroid_path), matroid_path);
    const FieldMatrix m =
        matrix_from_json(load_json_file(matrix_path), matrix_path);
    std::vector<std::size_t> phi =
        RepresentationClaim::identity_map(oracle.ground_size());
    if (!map_path.empty()) {
        const json mj = load_json_file(map_path);
        for (const auto& [k, v] : jdetail::require(mj, "phi", map_path).items()) {
            const std::size_t element = std::stoul(k);
            if (element < 1 || element > phi.size())
                throw ParseError(map_path + ".phi: element " + k +
                                 " outside the ground set");
            phi[element - 1] = jdetail::number<std::size_t>(v, map_path + ".phi");
        }
    }
    const RepresentationVerdict verdict = is_representation({oracle, m, phi});
    json report = {{"command", "check-representation"}, {"pass", verdict.ok},
                   {"matrix_rank", verdict.matrix_rank},
                   {"matroid_rank", verdict.matroid_rank}};
    std::string text;
    if (verdict.ok) {
        text = "ok: the matrix represents the matroid\n";
    } else {
        report["witness"] = subset_name(verdict.witness);
        report["detail"] = verdict.detail;
        text = "fail: " + verdict.detail + "\n";
    }
    return emit(opts, report, text, verdict.ok ? kExitPass : kExitFail);
}

int run_check_fd_axioms(const std::string& relation_path,
                        Fd1Orientation orientation, const CommonOpts& opts) {
    const json rj = load_json_file(relation_path);
    const auto n = jdetail::number<std::size_t>(
        jdetail::require(rj, "n", relation_path), relation_path + ".n");
    std::vector<std::pair<EdgeSet, EdgeSet>> pairs;
    for (const auto& pair : jdetail::require(rj, "pairs", relation_path)) {
        EdgeSet i = 0, j = 0;
        for (int e : jdetail::int_list(jdetail::require(pair, "I", relation_path),
                                       relation_path + ".I"))
            i |= EdgeSet(1) << (e - 1);
        for (int e : jdetail::int_list(jdetail::require(pair, "J", relation_path),
                                       relation_path + ".J"))
            j |= EdgeSet(1) << (e - 1);
        pairs.emplace_back(i, j);
    }
    const auto violations = check_fd_axioms(pairs, n, orientation);
    json items = json::array();
    std::string text;
    for (const auto& v : violations) {
        items.push_back({{"axiom", v.axiom}, {"I", v.i}, {"J", v.j}, {"K", v.k},
                         {"detail", v.detail}});
        text += "  [" + v.axiom + "] " + v.detail + "\n";
    }
    json report = {{"command", "check-fd-axioms"}, {"pass", violations.empty()},
                   {"violations", items}};
    return emit(opts, report,
                violations.empty() ? "ok: FD axioms hold\n" : "fail:\n" + text,
                violations.empty() ? kExitPass : kExitFail);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"network computation problems: codes, matroids, FD-relations"};
    app.require_subcommand(1);

    // the engine is sequential; the env var is validated and honored as a cap
    if (const char* threads = std::getenv("NETCOMP_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(threads, &end, 10);
        if (end == threads || *end != '\0' || n < 1) {
            std::cerr << "NETCOMP_THREADS must be a positive integer\n";
            return kExitUsage;
        }
    }

    std::function<int()> action;

    CommonOpts validate_opts;
    std::string validate_problem;
    auto* cmd_validate =
        app.add_subcommand("validate", "check a problem file for structural defects");
    cmd_validate->add_option("problem", validate_problem)->required();
    add_common(cmd_validate, validate_opts);
    cmd_validate->callback(
        [&] { action = [&] { return run_validate(validate_problem, validate_opts); }; });

    CommonOpts check_code_opts;
    std::string cc_problem, cc_code;
    auto* cmd_check_code = app.add_subcommand(
        "check-code", "verify a scalar linear code against a problem");
    cmd_check_code->add_option("problem", cc_problem)->required();
    cmd_check_code->add_option("code", cc_code)->required();
    add_common(cmd_check_code, check_code_opts);
    cmd_check_code->callback([&] {
        action = [&] { return run_check_code(cc_problem, cc_code, check_code_opts); };
    });

    CommonOpts solve_opts;
    std::string solve_problem, solve_out;
    bool solve_nonlinear = false;
    SolveBudget budget;
    std::string mode = "exhaustive";
    auto* cmd_solve =
        app.add_subcommand("solve", "search for a scalar code by enumeration");
    cmd_solve->add_option("problem", solve_problem)->required();
    cmd_solve->add_flag("--nonlinear", solve_nonlinear,
                        "search arbitrary kernel tables instead of linear ones");
    cmd_solve->add_option("--budget-candidates", budget.max_candidates);
    cmd_solve->add_option("--budget-seconds", budget.time_limit_seconds);
    cmd_solve->add_option("--mode", mode)
        ->check(CLI::IsMember({"exhaustive", "randomized"}));
    cmd_solve->add_option("--seed", budget.seed);
    cmd_solve->add_option("-o,--out", solve_out, "write the code here");
    add_common(cmd_solve, solve_opts);
    cmd_solve->callback([&] {
        action = [&] {
            budget.mode = mode == "randomized" ? SolveBudget::Mode::randomized
                                               : SolveBudget::Mode::exhaustive;
            return run_solve(solve_problem, solve_nonlinear, budget, solve_out,
                             solve_opts);
        };
    });

    CommonOpts extract_opts;
    std::string ex_problem, ex_code;
    std::vector<std::string> ex_outs;
    auto* cmd_extract = app.add_subcommand(
        "extract-matroid", "matroid and network-matroid map from a working code");
    cmd_extract->add_option("problem", ex_problem)->required();
    cmd_extract->add_option("code", ex_code)->required();
    cmd_extract->add_option("-o,--out", ex_outs,
                            "output files: matroid, then map");
    add_common(cmd_extract, extract_opts);
    cmd_extract->callback([&] {
        action = [&] {
            return run_extract_matroid(ex_problem, ex_code, ex_outs, extract_opts);
        };
    });

    CommonOpts cm_opts;
    std::string cm_problem, cm_matroid, cm_map;
    auto* cmd_cm = app.add_subcommand(
        "check-matroidal",
        "check M1-M3 (and C1-C2 for vector matroids) for a problem and map");
    cmd_cm->add_option("problem", cm_problem)->required();
    cmd_cm->add_option("matroid", cm_matroid)->required();
    cmd_cm->add_option("map", cm_map)->required();
    add_common(cmd_cm, cm_opts);
    cmd_cm->callback([&] {
        action = [&] {
            return run_check_matroidal(cm_problem, cm_matroid, cm_map, cm_opts);
        };
    });

    CommonOpts cfm_opts;
    std::string cfm_problem, cfm_matrix, cfm_map, cfm_out;
    auto* cmd_cfm = app.add_subcommand(
        "code-from-matroid", "synthesize a code from a constrained representation");
    cmd_cfm->add_option("problem", cfm_problem)->required();
    cmd_cfm->add_option("matrix", cfm_matrix,
                        "matrix literal or vector-matroid file")
        ->required();
    cmd_cfm->add_option("map", cfm_map)->required();
    cmd_cfm->add_option("-o,--out", cfm_out, "write the code here");
    add_common(cmd_cfm, cfm_opts);
    cmd_cfm->callback([&] {
        action = [&] {
            return run_code_from_matroid(cfm_problem, cfm_matrix, cfm_map, cfm_out,
                                         cfm_opts);
        };
    });

    CommonOpts fdg_opts;
    std::string fdg_problem;
    auto* cmd_fdg = app.add_subcommand("fd-generators",
                                       "the generator pairs of the FD-relation");
    cmd_fdg->add_option("problem", fdg_problem)->required();
    add_common(cmd_fdg, fdg_opts);
    cmd_fdg->callback(
        [&] { action = [&] { return run_fd_generators(fdg_problem, fdg_opts); }; });

    CommonOpts fdc_opts;
    std::string fdc_problem, fdc_of;
    auto* cmd_fdc =
        app.add_subcommand("fd-closure", "attribute closure of an edge set");
    cmd_fdc->add_option("problem", fdc_problem)->required();
    cmd_fdc->add_option("--of", fdc_of, "comma-separated edge names (s1,e2,t1)")
        ->required();
    add_common(cmd_fdc, fdc_opts);
    cmd_fdc->callback([&] {
        action = [&] { return run_fd_closure(fdc_problem, fdc_of, fdc_opts); };
    });

    CommonOpts cfr_opts;
    std::string cfr_problem, cfr_phi;
    std::uint64_t cfr_budget = std::uint64_t(1) << 24;
    auto* cmd_cfr = app.add_subcommand(
        "check-fd-rep", "verify a functional representation (phi tables)");
    cmd_cfr->add_option("problem", cfr_problem)->required();
    cmd_cfr->add_option("phi", cfr_phi)->required();
    cmd_cfr->add_option("--budget-candidates", cfr_budget,
                        "maximum number of message tuples to scan");
    add_common(cmd_cfr, cfr_opts);
    cmd_cfr->callback([&] {
        action = [&] {
            return run_check_fd_rep(cfr_problem, cfr_phi, cfr_budget, cfr_opts);
        };
    });

    CommonOpts cma_opts;
    std::string cma_matroid;
    auto* cmd_cma = app.add_subcommand("check-matroid-axioms",
                                       "exhaustive R1-R3 check of a matroid file");
    cmd_cma->add_option("matroid", cma_matroid)->required();
    add_common(cmd_cma, cma_opts);
    cmd_cma->callback([&] {
        action = [&] { return run_check_matroid_axioms(cma_matroid, cma_opts); };
    });

    CommonOpts crep_opts;
    std::string crep_matroid, crep_matrix, crep_map;
    auto* cmd_crep = app.add_subcommand(
        "check-representation", "does the matrix represent the matroid?");
    cmd_crep->add_option("matroid", crep_matroid)->required();
    cmd_crep->add_option("matrix", crep_matrix)->required();
    cmd_crep->add_option("map", crep_map,
                         "optional {\"phi\": {element: column}}; identity if absent");
    add_common(cmd_crep, crep_opts);
    cmd_crep->callback([&] {
        action = [&] {
            return run_check_representation(crep_matroid, crep_matrix, crep_map,
                                            crep_opts);
        };
    });

    CommonOpts cfa_opts;
    std::string cfa_relation, cfa_orientation = "consistent";
    auto* cmd_cfa = app.add_subcommand(
        "check-fd-axioms", "exhaustive FD1-FD3 check of an explicit relation");
    cmd_cfa->add_option("relation", cfa_relation)->required();
    cmd_cfa->add_option("--fd1-orientation", cfa_orientation)
        ->check(CLI::IsMember({"paper", "consistent"}));
    add_common(cmd_cfa, cfa_opts);
    cmd_cfa->callback([&] {
        action = [&] {
            return run_check_fd_axioms(cfa_relation,
                                       cfa_orientation == "paper"
                                           ? Fd1Orientation::paper
                                           : Fd1Orientation::consistent,
                                       cfa_opts);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
