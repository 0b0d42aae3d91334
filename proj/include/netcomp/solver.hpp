#ifndef NETCOMP_SOLVER_HPP
#define NETCOMP_SOLVER_HPP

// Ground-truth search: exhaustive enumeration of scalar linear codes in
// lexicographic local-kernel order, and (for tiny instances) of arbitrary
// scalar codes. The returned witness is always the lexicographically
// least one, so runs are reproducible.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "netcomp/fdrel.hpp"
#include "netcomp/lincode.hpp"
#include "netcomp/netgraph.hpp"

namespace netcomp {

struct SolveBudget {
    std::uint64_t max_candidates = std::uint64_t(1) << 20;
    double time_limit_seconds = 30.0;
    enum class Mode { exhaustive, randomized } mode = Mode::exhaustive;
    std::uint64_t seed = 1;
};

enum class SolveStatus { solved, unsolvable, unknown };

struct SolveStats {
    std::uint64_t candidates_examined = 0; // kernel assignments tried
    std::uint64_t pruned_subtrees = 0;
    double elapsed_seconds = 0.0;
};

struct LinearSolveResult {
    SolveStatus status = SolveStatus::unknown;
    std::uint32_t q = 2; // an Unsolvable verdict is tagged with its field
    std::optional<LinearNetworkCode> code;
    std::optional<LocalKernelSet> kernels;
    SolveStats stats;
};

namespace detail {

/// Exhaustive search space cap: sum of |In(e)|*log2(q) bits.
inline double linear_search_bits(const NetworkProblem& p) {
    double bits = 0.0;
    for (const auto& e : p.edges)
        bits += static_cast<double>(in_set_of_edge(p, e.id).size()) *
                std::log2(static_cast<double>(p.alphabet));
    return bits;
}

struct Deadline {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double limit_seconds = 0.0;

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
    bool expired() const { return limit_seconds > 0 && elapsed() > limit_seconds; }
};

} // namespace detail

/// Enumerates local kernel tuples in lexicographic order over the
/// ancestral edge order, expanding globals by induction. A sink is
/// checked as soon as its whole In-set is assigned, and kernel prefixes
/// that reproduce an already-failed global profile are skipped; both
/// prunings preserve the least witness and the Unsolvable verdict.
inline LinearSolveResult solve_scalar_linear(const NetworkProblem& p,
                                             const SolveBudget& budget = {}) {
    for (std::size_t t = 1; t <= p.sink_count(); ++t)
        if (!demand_column(p, static_cast<int>(t)))
            throw std::invalid_argument("solve_scalar_linear: demand of t" +
                                        std::to_string(t) + " is not linear");
    PrimeField field(p.alphabet);
    const std::uint32_t q = p.alphabet;
    const std::size_t K = p.message_count();

    LinearSolveResult result;
    result.q = q;

    if (budget.mode == SolveBudget::Mode::exhaustive &&
        detail::linear_search_bits(p) > 40.0)
        throw std::invalid_argument(
            "solve_scalar_linear: exhaustive search space exceeds 2^40");

    // link edges in ancestral order, with their In-sets and the depth at
    // which each sink's In-set becomes fully assigned
    std::vector<int> edge_order;
    for (const auto& e : ancestral_order(p))
        if (e.kind == EdgeRef::Kind::link) edge_order.push_back(e.index);
    std::map<int, std::size_t> depth_of_edge; // edge id -> position+1
    for (std::size_t d = 0; d < edge_order.size(); ++d)
        depth_of_edge[edge_order[d]] = d + 1;

    std::vector<std::vector<EdgeRef>> in_refs(edge_order.size());
    for (std::size_t d = 0; d < edge_order.size(); ++d)
        in_refs[d] = in_set_of_edge(p, edge_order[d]);

    std::vector<std::vector<std::size_t>> sinks_ready_at(edge_order.size() + 1);
    std::vector<std::vector<EdgeRef>> sink_ins(p.sink_count());
    std::vector<Column> sink_demand(p.sink_count());
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        sink_ins[t - 1] = in_set(p, p.sinks[t - 1].node);
        sink_demand[t - 1] = *demand_column(p, static_cast<int>(t));
        std::size_t ready = 0;
        for (const auto& r : sink_ins[t - 1])
            if (r.kind == EdgeRef::Kind::link)
                ready = std::max(ready, depth_of_edge.at(r.index));
        sinks_ready_at[ready].push_back(t - 1);
    }

    std::map<int, Column> globals; // edge id -> column, grows with depth
    auto global_of_ref = [&](const EdgeRef& r) -> Column {
        if (r.kind == EdgeRef::Kind::source) return unit_column(r.index, K);
        return globals.at(r.index);
    };
    auto sink_feasible = [&](std::size_t t0) {
        std::vector<Column> cols;
        for (const auto& r : sink_ins[t0]) cols.push_back(global_of_ref(r));
        FieldMatrix a = FieldMatrix::from_columns(field, K, cols);
        return solve_right(a, sink_demand[t0]).has_value();
    };

    detail::Deadline deadline{std::chrono::steady_clock::now(),
                              budget.time_limit_seconds};
    SolveStats stats;
    std::unordered_set<std::string> failed_profiles;
    std::map<int, Column> chosen; // edge id -> kernel coefficients
    bool out_of_budget = false;

    auto profile_key = [&](std::size_t depth) {
        std::string key;
        key.reserve(depth * K + 8);
        key += std::to_string(depth);
        key += ':';
        for (std::size_t d = 0; d < depth; ++d)
            for (auto v : globals.at(edge_order[d]))
                key += static_cast<char>('0' + v % 64);
        return key;
    };

    std::optional<LocalKernelSet> found;

    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (out_of_budget) return false;
        if (depth == edge_order.size()) {
            found = LocalKernelSet{chosen};
            return true;
        }
        const std::string key = profile_key(depth);
        if (failed_profiles.count(key)) {
            ++stats.pruned_subtrees;
            return false;
        }
        const int id = edge_order[depth];
        const auto& ins = in_refs[depth];
        std::vector<Column> in_cols;
        for (const auto& r : ins) in_cols.push_back(global_of_ref(r));
        const std::uint64_t combos = pow_u64(q, ins.size());
        for (std::uint64_t v = 0; v < combos; ++v) {
            if (++stats.candidates_examined > budget.max_candidates ||
                (stats.candidates_examined % 4096 == 0 && deadline.expired())) {
                out_of_budget = true;
                return false;
            }
            const auto coeffs = decode_tuple(v, q, ins.size());
            Column g(K, 0);
            for (std::size_t j = 0; j < ins.size(); ++j)
                g = add_columns(field, g, scale_column(field, coeffs[j], in_cols[j]));
            globals[id] = std::move(g);
            chosen[id] = Column(coeffs.begin(), coeffs.end());
            bool feasible = true;
            for (std::size_t t0 : sinks_ready_at[depth + 1])
                if (!sink_feasible(t0)) {
                    feasible = false;
                    break;
                }
            if (feasible && self(self, depth + 1)) return true;
            globals.erase(id);
            chosen.erase(id);
        }
        if (!out_of_budget) failed_profiles.insert(key);
        return false;
    };

    if (budget.mode == SolveBudget::Mode::exhaustive) {
        // sinks whose In-set holds no link edge are decided up front
        bool root_feasible = true;
        for (std::size_t t0 : sinks_ready_at[0])
            if (!sink_feasible(t0)) root_feasible = false;
        const bool solved = root_feasible && dfs(dfs, 0);
        stats.elapsed_seconds = deadline.elapsed();
        result.stats = stats;
        if (solved) {
            LinearNetworkCode code = globals_from_locals(p, *found);
            code.decoders = *solve_decoders(p, code);
            result.status = SolveStatus::solved;
            result.code = std::move(code);
            result.kernels = std::move(found);
        } else {
            result.status = out_of_budget ? SolveStatus::unknown
                                          : SolveStatus::unsolvable;
        }
        return result;
    }

    // randomized exploration: sample kernels, verify, first hit wins
    std::mt19937_64 rng(budget.seed);
    for (std::uint64_t it = 0; it < budget.max_candidates; ++it) {
        if (deadline.expired()) break;
        ++stats.candidates_examined;
        LocalKernelSet kernels;
        for (std::size_t d = 0; d < edge_order.size(); ++d) {
            Column c(in_refs[d].size());
            for (auto& v : c) v = static_cast<std::uint32_t>(rng() % q);
            kernels.locals[edge_order[d]] = std::move(c);
        }
        LinearNetworkCode code = globals_from_locals(p, kernels);
        auto decoders = solve_decoders(p, code);
        if (!decoders) continue;
        code.decoders = *decoders;
        if (!verify_code(p, code).pass) continue; // re-verify before returning
        stats.elapsed_seconds = deadline.elapsed();
        result.status = SolveStatus::solved;
        result.code = std::move(code);
        result.kernels = std::move(kernels);
        result.stats = stats;
        return result;
    }
    stats.elapsed_seconds = deadline.elapsed();
    result.status = SolveStatus::unknown;
    result.stats = stats;
    return result;
}

struct NonlinearSolveResult {
    SolveStatus status = SolveStatus::unknown;
    std::uint32_t q = 2;
    std::optional<NonlinearCode> code;
    SolveStats stats;
};

/// Enumerates every assignment of local kernel tables in lexicographic
/// order (tables ordered by their value vector read as a base-q number,
/// edges in ancestral order); a candidate solves the problem when, over
/// all q^K inputs, each sink's In-values determine its demand.
inline NonlinearSolveResult solve_scalar_nonlinear_exhaustive(
    const NetworkProblem& p, std::uint32_t q, const SolveBudget& budget = {}) {
    if (q < 2)
        throw std::invalid_argument("solve_scalar_nonlinear_exhaustive: q < 2");
    const NetworkProblem prob = with_alphabet(p, q);
    const std::size_t K = prob.message_count();

    double bits = 0.0;
    for (const auto& e : prob.edges)
        bits += static_cast<double>(pow_u64(q, in_set_of_edge(prob, e.id).size())) *
                std::log2(static_cast<double>(q));
    if (bits > 40.0)
        throw std::invalid_argument(
            "solve_scalar_nonlinear_exhaustive: search space exceeds 2^40 "
            "before search");

    NonlinearSolveResult result;
    result.q = q;

    std::vector<int> edge_order;
    for (const auto& e : ancestral_order(prob))
        if (e.kind == EdgeRef::Kind::link) edge_order.push_back(e.index);
    std::vector<std::size_t> cells(edge_order.size());
    std::vector<std::vector<EdgeRef>> in_refs(edge_order.size());
    for (std::size_t d = 0; d < edge_order.size(); ++d) {
        in_refs[d] = in_set_of_edge(prob, edge_order[d]);
        cells[d] = pow_u64(q, in_refs[d].size());
    }

    std::vector<FunctionTable> demands;
    std::vector<std::vector<EdgeRef>> sink_ins;
    for (std::size_t t = 1; t <= prob.sink_count(); ++t) {
        demands.push_back(demand_table(prob, static_cast<int>(t)));
        sink_ins.push_back(in_set(prob, prob.sinks[t - 1].node));
    }

    const std::uint64_t total_inputs = pow_u64(q, K);
    detail::Deadline deadline{std::chrono::steady_clock::now(),
                              budget.time_limit_seconds};
    SolveStats stats;
    bool out_of_budget = false;

    std::map<int, TabulatedKernel> current;

    // evaluates the whole candidate; fills decoders when it works
    auto candidate_solves = [&](std::map<int, TabulatedKernel>& decoders) {
        decoders.clear();
        for (std::size_t t = 0; t < sink_ins.size(); ++t)
            decoders.emplace(static_cast<int>(t + 1),
                             TabulatedKernel::empty(q, sink_ins[t].size()));
        std::vector<std::uint32_t> x(K, 0);
        std::vector<std::uint32_t> in_vals;
        for (std::uint64_t idx = 0; idx < total_inputs; ++idx) {
            std::map<int, std::uint32_t> link_val;
            for (std::size_t d = 0; d < edge_order.size(); ++d) {
                in_vals.clear();
                for (const auto& r : in_refs[d])
                    in_vals.push_back(r.kind == EdgeRef::Kind::source
                                          ? x[r.index - 1]
                                          : link_val.at(r.index));
                link_val[edge_order[d]] =
                    current.at(edge_order[d]).values[tuple_index(in_vals, q)];
            }
            for (std::size_t t = 0; t < sink_ins.size(); ++t) {
                in_vals.clear();
                for (const auto& r : sink_ins[t])
                    in_vals.push_back(r.kind == EdgeRef::Kind::source
                                          ? x[r.index - 1]
                                          : link_val.at(r.index));
                const std::uint64_t key = tuple_index(in_vals, q);
                const std::uint32_t want = demands[t].eval(x);
                auto& dec = decoders.at(static_cast<int>(t + 1));
                if (dec.defined[key] && dec.values[key] != want) return false;
                dec.defined[key] = true;
                dec.values[key] = want;
            }
            for (std::size_t i = K; i-- > 0;) {
                if (++x[i] < q) break;
                x[i] = 0;
            }
        }
        return true;
    };

    std::optional<NonlinearCode> found;
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        if (out_of_budget) return false;
        if (depth == edge_order.size()) {
            ++stats.candidates_examined;
            if (stats.candidates_examined > budget.max_candidates ||
                deadline.expired()) {
                out_of_budget = true;
                return false;
            }
            std::map<int, TabulatedKernel> decoders;
            if (!candidate_solves(decoders)) return false;
            found = NonlinearCode{q, current, std::move(decoders)};
            return true;
        }
        const std::uint64_t table_count = pow_u64(q, cells[depth]);
        for (std::uint64_t v = 0; v < table_count; ++v) {
            std::vector<std::uint32_t> values =
                decode_tuple(v, q, cells[depth]); // cell 0 most significant
            current[edge_order[depth]] =
                TabulatedKernel::total(q, in_refs[depth].size(), std::move(values));
            if (self(self, depth + 1)) return true;
            if (out_of_budget) return false;
            current.erase(edge_order[depth]);
        }
        return false;
    };

    const bool solved = dfs(dfs, 0);
    stats.elapsed_seconds = deadline.elapsed();
    result.stats = stats;
    if (solved) {
        result.status = SolveStatus::solved;
        result.code = std::move(found);
    } else {
        result.status = out_of_budget ? SolveStatus::unknown : SolveStatus::unsolvable;
    }
    return result;
}

} // namespace netcomp

#endif // NETCOMP_SOLVER_HPP
