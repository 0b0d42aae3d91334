#ifndef NETCOMP_FDREL_HPP
#define NETCOMP_FDREL_HPP

// FD-relations on the edge set: the per-node generator pairs, attribute
// closure and membership, axiom checking in both FD1 orientations, and
// functional-representation verification, which is what makes nonlinear
// codes checkable.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "netcomp/functable.hpp"
#include "netcomp/lincode.hpp"
#include "netcomp/netgraph.hpp"

namespace netcomp {

/// Subset of the full edge set as a bitmask over dense edge indices.
using EdgeSet = std::uint64_t;

struct FDGenerators {
    std::size_t ground_size = 0;
    std::vector<std::pair<EdgeSet, EdgeSet>> pairs; // (I, J): I determines J
};

inline EdgeSet edge_set_of(const NetworkProblem& p,
                           const std::vector<EdgeRef>& refs) {
    EdgeSet s = 0;
    for (const auto& r : refs) s |= EdgeSet(1) << dense_index(p, r);
    return s;
}

inline std::vector<EdgeRef> edge_set_members(const NetworkProblem& p, EdgeSet s) {
    std::vector<EdgeRef> out;
    for (std::size_t i = 0; i < p.total_edges(); ++i)
        if (s & (EdgeSet(1) << i)) out.push_back(edge_from_dense(p, i));
    return out;
}

inline std::string edge_set_name(const NetworkProblem& p, EdgeSet s) {
    std::string out = "{";
    bool first = true;
    for (const auto& r : edge_set_members(p, s)) {
        if (!first) out += ",";
        out += r.name();
        first = false;
    }
    return out + "}";
}

/// The generator pairs of the network's FD-relation: (In(v), Out'(v)) for
/// every node with outgoing links, then (In(t), {demand edge}) for every
/// sink; node pairs come in ascending node id, sink pairs in sink order.
inline FDGenerators build_QE(const NetworkProblem& p) {
    if (p.total_edges() > 64)
        throw std::invalid_argument("build_QE: edge set exceeds 64 elements");
    FDGenerators g;
    g.ground_size = p.total_edges();
    std::vector<int> order = p.nodes;
    std::sort(order.begin(), order.end());
    for (int v : order) {
        const auto outs = out_prime(p, v);
        if (outs.empty()) continue;
        g.pairs.emplace_back(edge_set_of(p, in_set(p, v)), edge_set_of(p, outs));
    }
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        const auto ins = in_set(p, p.sinks[t - 1].node);
        g.pairs.emplace_back(
            edge_set_of(p, ins),
            EdgeSet(1) << dense_index(p, EdgeRef::demand(static_cast<int>(t))));
    }
    return g;
}

/// Least fixed point: everything functionally determined by I under the
/// generator pairs (database-style attribute closure).
inline EdgeSet attr_closure(const FDGenerators& g, EdgeSet i) {
    EdgeSet closed = i;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [a, b] : g.pairs) {
            if ((a & closed) == a && (b & ~closed) != 0) {
                closed |= b;
                grew = true;
            }
        }
    }
    return closed;
}

inline bool fd_member(const FDGenerators& g, EdgeSet i, EdgeSet j) {
    return (j & ~attr_closure(g, i)) == 0;
}

/// FD1 as printed says subsets determine supersets; that contradicts the
/// semantics "J depends functionally on I", under which projection
/// (J inside I) is the sound base case. "consistent" is the projection
/// orientation, "paper" the printed one.
enum class Fd1Orientation { paper, consistent };

struct FdAxiomViolation {
    std::string axiom; // "FD1" | "FD2" | "FD3"
    EdgeSet i = 0, j = 0, k = 0;
    std::string detail;
};

/// Exhaustive axiom check of an explicit relation over a ground set of at
/// most 6 elements (the pair space is 4^n).
inline std::vector<FdAxiomViolation> check_fd_axioms(
    const std::vector<std::pair<EdgeSet, EdgeSet>>& relation,
    std::size_t ground_size,
    Fd1Orientation orientation = Fd1Orientation::consistent) {
    if (ground_size > 6)
        throw std::invalid_argument(
            "check_fd_axioms: ground set too large for exhaustive check");
    constexpr std::size_t kMaxReported = 100;
    const EdgeSet full = (EdgeSet(1) << ground_size) - 1;
    std::set<std::pair<EdgeSet, EdgeSet>> q(relation.begin(), relation.end());
    std::vector<FdAxiomViolation> out;

    for (EdgeSet j = 0; j <= full; ++j) {
        for (EdgeSet i = j;; i = (i - 1) & j) { // submasks of j
            const bool want = orientation == Fd1Orientation::paper
                                  ? q.count({i, j}) > 0  // I ⊆ J ⇒ (I,J)
                                  : q.count({j, i}) > 0; // I ⊆ J ⇒ (J,I)
            if (!want) {
                const EdgeSet lhs = orientation == Fd1Orientation::paper ? i : j;
                const EdgeSet rhs = orientation == Fd1Orientation::paper ? j : i;
                out.push_back({"FD1", lhs, rhs, 0, "missing pair"});
                if (out.size() >= kMaxReported) return out;
            }
            if (i == 0) break;
        }
    }
    for (const auto& [i, j] : q) {
        for (const auto& [j2, k] : q) {
            if (j2 != j) continue;
            if (!q.count({i, k})) {
                out.push_back({"FD2", i, j, k, "missing (I,K)"});
                if (out.size() >= kMaxReported) return out;
            }
            if (!q.count({i, j | k})) {
                out.push_back({"FD3", i, j, k, "missing (I,J∪K)"});
                if (out.size() >= kMaxReported) return out;
            }
        }
    }
    return out;
}

/// Brute-force closure of a generator set under FD1 (in the chosen
/// orientation), FD2 and FD3; the validation oracle for attr_closure.
/// Ground sets of at most 6 elements.
inline std::vector<std::pair<EdgeSet, EdgeSet>> explicit_fd_closure(
    const FDGenerators& g,
    Fd1Orientation orientation = Fd1Orientation::consistent) {
    if (g.ground_size > 6)
        throw std::invalid_argument(
            "explicit_fd_closure: ground set too large for brute force");
    const EdgeSet full = (EdgeSet(1) << g.ground_size) - 1;
    const std::size_t subsets = static_cast<std::size_t>(full) + 1;
    std::vector<bool> have(subsets * subsets, false);
    std::vector<std::pair<EdgeSet, EdgeSet>> all;
    std::size_t cursor = 0;
    auto offer = [&](EdgeSet i, EdgeSet j) {
        const std::size_t slot = static_cast<std::size_t>(i) * subsets +
                                 static_cast<std::size_t>(j);
        if (have[slot]) return;
        have[slot] = true;
        all.emplace_back(i, j);
    };

    for (EdgeSet j = 0; j <= full; ++j) {
        for (EdgeSet i = j;; i = (i - 1) & j) {
            if (orientation == Fd1Orientation::paper)
                offer(i, j);
            else
                offer(j, i);
            if (i == 0) break;
        }
    }
    for (const auto& [i, j] : g.pairs) offer(i, j);

    while (cursor < all.size()) {
        const auto [a, b] = all[cursor++];
        for (std::size_t k = 0; k < all.size(); ++k) {
            const auto [c, d] = all[k];
            if (d == a) { // (c,d)=(c,a) then (a,b): FD2 and FD3
                offer(c, b);
                offer(c, a | b);
            }
            if (b == c) { // (a,b) then (b,d)
                offer(a, d);
                offer(a, b | d);
            }
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

// ---------------------------------------------------------------------
// Functional representations (Phi maps) and the nonlinear code pipeline.

/// Assignment of message-domain kernels to edges. Source and demand edges
/// may be omitted: they default to the coordinate projections and the
/// demand functions, which is what the constraints require anyway.
struct PhiAssignment {
    std::uint32_t q = 2;
    std::map<EdgeRef, FunctionTable> tables;
};

struct FdRepViolation {
    std::string condition; // "C1'" | "C2'" | "Eq7"
    std::string where;     // edge or generator description
    std::vector<std::uint32_t> x, x2;
    EdgeRef differing{};
    std::string detail;
};

struct FdRepReport {
    bool pass = true;
    std::vector<FdRepViolation> items;

    void fail(FdRepViolation v) {
        pass = false;
        items.push_back(std::move(v));
    }
};

namespace detail {

/// One evaluable kernel per dense edge index, with provided tables
/// validated for alphabet and arity.
inline std::vector<FunctionTable> resolve_phi(const NetworkProblem& p,
                                              const PhiAssignment& phi,
                                              std::vector<bool>* provided = nullptr) {
    const std::size_t K = p.message_count();
    if (phi.q != p.alphabet)
        throw std::invalid_argument("phi alphabet q=" + std::to_string(phi.q) +
                                    " does not match problem q=" +
                                    std::to_string(p.alphabet));
    std::vector<FunctionTable> out;
    out.reserve(p.total_edges());
    if (provided) provided->assign(p.total_edges(), false);
    for (std::size_t i = 0; i < p.total_edges(); ++i) {
        const EdgeRef e = edge_from_dense(p, i);
        auto it = phi.tables.find(e);
        if (it != phi.tables.end()) {
            if (it->second.q != p.alphabet || it->second.arity != K)
                throw std::invalid_argument("phi table for " + e.name() +
                                            " has wrong alphabet or arity");
            if (provided) (*provided)[i] = true;
            out.push_back(it->second);
            continue;
        }
        switch (e.kind) {
        case EdgeRef::Kind::source:
            out.push_back(FunctionTable::coordinate(p.alphabet, K, e.index));
            break;
        case EdgeRef::Kind::demand:
            out.push_back(demand_table(p, e.index));
            break;
        case EdgeRef::Kind::link:
            throw std::invalid_argument("phi misses a table for link " + e.name());
        }
    }
    return out;
}

inline std::uint32_t value_bits(std::uint32_t q) {
    return std::max<std::uint32_t>(1, std::bit_width(q - 1));
}

inline std::uint64_t pack_values(const std::uint32_t* values,
                                 const std::vector<std::size_t>& idxs,
                                 std::uint32_t bits) {
    std::uint64_t key = 0;
    for (std::size_t i : idxs) key = (key << bits) | values[i];
    return key;
}

} // namespace detail

/// Verifies that the given kernels form a functional representation of
/// the network's FD-relation under C1'/C2': source kernels project the
/// messages, demand kernels equal the demands, and for every generator
/// (I,J) the I-values determine the J-values over all q^K message tuples.
inline FdRepReport check_functional_representation(
    const NetworkProblem& p, const PhiAssignment& phi,
    std::uint64_t tuple_budget = std::uint64_t(1) << 24) {
    const std::size_t K = p.message_count();
    const std::uint32_t q = p.alphabet;
    const std::uint64_t total = pow_u64(q, K);
    if (total > tuple_budget)
        throw std::invalid_argument("check_functional_representation: q^K = " +
                                    std::to_string(total) +
                                    " exceeds the tuple budget of " +
                                    std::to_string(tuple_budget));

    std::vector<bool> provided;
    const auto tables = detail::resolve_phi(p, phi, &provided);
    const FDGenerators generators = build_QE(p);
    const std::uint32_t bits = detail::value_bits(q);

    struct GenState {
        std::vector<std::size_t> i_idx, j_idx;
        std::string name;
        std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>
            seen; // packed I-values -> (packed J-values, first tuple index)
        bool failed = false;
    };
    std::vector<GenState> gens;
    for (const auto& [imask, jmask] : generators.pairs) {
        GenState s;
        for (std::size_t i = 0; i < generators.ground_size; ++i) {
            if (imask & (EdgeSet(1) << i)) s.i_idx.push_back(i);
            if (jmask & (EdgeSet(1) << i)) s.j_idx.push_back(i);
        }
        if (s.i_idx.size() * bits > 64 || s.j_idx.size() * bits > 64)
            throw std::invalid_argument(
                "check_functional_representation: generator too wide to fingerprint");
        s.name = "(" + edge_set_name(p, imask) + " -> " + edge_set_name(p, jmask) + ")";
        gens.push_back(std::move(s));
    }

    // Demand tables for the C2' comparison wherever a hat table was given.
    std::vector<std::optional<FunctionTable>> hat_expect(p.sink_count());
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        const std::size_t idx = dense_index(p, EdgeRef::demand(static_cast<int>(t)));
        if (provided[idx]) hat_expect[t - 1] = demand_table(p, static_cast<int>(t));
    }

    FdRepReport report;
    constexpr std::size_t kMaxItems = 8;
    std::vector<bool> source_flagged(K, false), hat_flagged(p.sink_count(), false);

    std::vector<std::uint32_t> x(K, 0);
    std::vector<std::uint32_t> values(p.total_edges(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::size_t i = 0; i < p.total_edges(); ++i)
            values[i] = tables[i].eval(x);

        for (std::size_t k = 1; k <= K; ++k) {
            const std::size_t di = dense_index(p, EdgeRef::source(static_cast<int>(k)));
            if (provided[di] && !source_flagged[k - 1] && values[di] != x[k - 1]) {
                source_flagged[k - 1] = true;
                if (report.items.size() < kMaxItems)
                    report.fail({"C1'", "s" + std::to_string(k), x, {},
                                 EdgeRef::source(static_cast<int>(k)),
                                 "kernel yields " + std::to_string(values[di]) +
                                     ", message is " + std::to_string(x[k - 1])});
            }
        }
        for (std::size_t t = 1; t <= p.sink_count(); ++t) {
            if (!hat_expect[t - 1] || hat_flagged[t - 1]) continue;
            const std::size_t di = dense_index(p, EdgeRef::demand(static_cast<int>(t)));
            const std::uint32_t want = hat_expect[t - 1]->eval(x);
            if (values[di] != want) {
                hat_flagged[t - 1] = true;
                if (report.items.size() < kMaxItems)
                    report.fail({"C2'", "t" + std::to_string(t), x, {},
                                 EdgeRef::demand(static_cast<int>(t)),
                                 "kernel yields " + std::to_string(values[di]) +
                                     ", demand is " + std::to_string(want)});
            }
        }

        for (auto& s : gens) {
            if (s.failed) continue;
            const std::uint64_t key = detail::pack_values(values.data(), s.i_idx, bits);
            const std::uint64_t jval = detail::pack_values(values.data(), s.j_idx, bits);
            auto [it, fresh] = s.seen.emplace(key, std::make_pair(jval, idx));
            if (!fresh && it->second.first != jval) {
                s.failed = true;
                if (report.items.size() < kMaxItems) {
                    // locate the first differing edge of J
                    EdgeRef differing = edge_from_dense(p, s.j_idx.front());
                    std::uint64_t a = it->second.first, b = jval;
                    for (std::size_t pos = s.j_idx.size(); pos-- > 0;) {
                        const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
                        if ((a & mask) != (b & mask)) {
                            differing = edge_from_dense(p, s.j_idx[pos]);
                            break;
                        }
                        a >>= bits;
                        b >>= bits;
                    }
                    report.fail({"Eq7", s.name, decode_tuple(it->second.second, q, K),
                                 decode_tuple(idx, q, K), differing,
                                 "equal I-values but " + differing.name() +
                                     " differs: no Psi exists"});
                }
            }
        }

        for (std::size_t i = K; i-- > 0;) { // odometer, x_K fastest
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }
    return report;
}

/// Reference implementation of the Eq.-7 determinism check: the plain
/// all-pairs scan over message tuples, no fingerprint grouping. Only for
/// small instances (q^K capped at 4096); used to validate the grouped
/// implementation against an independent route.
inline bool functional_representation_holds_quadratic(const NetworkProblem& p,
                                                      const PhiAssignment& phi) {
    const std::size_t K = p.message_count();
    const std::uint32_t q = p.alphabet;
    const std::uint64_t total = pow_u64(q, K);
    if (total > 4096)
        throw std::invalid_argument(
            "functional_representation_holds_quadratic: q^K exceeds 4096");
    const auto tables = detail::resolve_phi(p, phi);
    const FDGenerators generators = build_QE(p);

    // every edge value for every tuple, then compare all tuple pairs
    std::vector<std::vector<std::uint32_t>> values(total);
    std::vector<std::uint32_t> x(K, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        values[idx].resize(p.total_edges());
        for (std::size_t i = 0; i < p.total_edges(); ++i)
            values[idx][i] = tables[i].eval(x);
        for (std::size_t k = 1; k <= K; ++k)
            if (values[idx][dense_index(p, EdgeRef::source(static_cast<int>(k)))] !=
                x[k - 1])
                return false; // C1'
        for (std::size_t t = 1; t <= p.sink_count(); ++t)
            if (values[idx][dense_index(p, EdgeRef::demand(static_cast<int>(t)))] !=
                demand_table(p, static_cast<int>(t)).eval(x))
                return false; // C2'
        for (std::size_t i = K; i-- > 0;) {
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }
    for (std::uint64_t a = 0; a < total; ++a) {
        for (std::uint64_t b = a + 1; b < total; ++b) {
            for (const auto& [imask, jmask] : generators.pairs) {
                bool same_i = true;
                for (std::size_t e = 0; e < generators.ground_size && same_i; ++e)
                    if ((imask & (EdgeSet(1) << e)) &&
                        values[a][e] != values[b][e])
                        same_i = false;
                if (!same_i) continue;
                for (std::size_t e = 0; e < generators.ground_size; ++e)
                    if ((jmask & (EdgeSet(1) << e)) &&
                        values[a][e] != values[b][e])
                        return false;
            }
        }
    }
    return true;
}

/// A scalar (possibly nonlinear) code as tabulated kernels. Entries are
/// defined only for inputs realizable by some message tuple; solver
/// output is total.
struct TabulatedKernel {
    std::uint32_t q = 2;
    std::size_t arity = 0;
    std::vector<std::uint32_t> values;
    std::vector<bool> defined;

    static TabulatedKernel empty(std::uint32_t q, std::size_t arity) {
        TabulatedKernel k;
        k.q = q;
        k.arity = arity;
        const std::uint64_t n = pow_u64(q, arity);
        k.values.assign(n, 0);
        k.defined.assign(n, false);
        return k;
    }

    static TabulatedKernel total(std::uint32_t q, std::size_t arity,
                                 std::vector<std::uint32_t> values) {
        TabulatedKernel k;
        k.q = q;
        k.arity = arity;
        if (values.size() != pow_u64(q, arity))
            throw std::invalid_argument("TabulatedKernel: expected q^arity values");
        k.values = std::move(values);
        k.defined.assign(k.values.size(), true);
        return k;
    }

    bool is_total() const {
        for (bool d : defined)
            if (!d) return false;
        return true;
    }
};

struct NonlinearCode {
    std::uint32_t q = 2;
    std::map<int, TabulatedKernel> locals;   // edge id -> kernel over In(e)
    std::map<int, TabulatedKernel> decoders; // sink t -> kernel over In(t)
};

/// Tabulates the local kernels and decoders from a functional
/// representation by scanning all message tuples: the key is the I-value
/// tuple, the entry the J-value (well defined once the Eq.-7 determinism
/// check has passed).
inline NonlinearCode code_from_fd_representation(
    const NetworkProblem& p, const PhiAssignment& phi,
    std::uint64_t tuple_budget = std::uint64_t(1) << 24) {
    const std::size_t K = p.message_count();
    const std::uint32_t q = p.alphabet;
    const std::uint64_t total = pow_u64(q, K);
    if (total > tuple_budget)
        throw std::invalid_argument("code_from_fd_representation: budget exceeded");
    const auto tables = detail::resolve_phi(p, phi);

    NonlinearCode code;
    code.q = q;
    for (const auto& e : p.edges)
        code.locals.emplace(e.id,
                            TabulatedKernel::empty(q, in_set_of_edge(p, e.id).size()));
    for (std::size_t t = 1; t <= p.sink_count(); ++t)
        code.decoders.emplace(static_cast<int>(t),
                              TabulatedKernel::empty(
                                  q, in_set(p, p.sinks[t - 1].node).size()));

    auto record = [&](TabulatedKernel& k, std::uint64_t key, std::uint32_t value,
                      const std::string& where) {
        if (k.defined[key] && k.values[key] != value)
            throw std::invalid_argument(
                "code_from_fd_representation: determinism violated at " + where);
        k.defined[key] = true;
        k.values[key] = value;
    };

    std::vector<std::uint32_t> x(K, 0);
    std::vector<std::uint32_t> values(p.total_edges(), 0);
    std::vector<std::uint32_t> in_vals;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::size_t i = 0; i < p.total_edges(); ++i)
            values[i] = tables[i].eval(x);

        for (const auto& e : p.edges) {
            const auto ins = in_set_of_edge(p, e.id);
            in_vals.clear();
            for (const auto& r : ins) in_vals.push_back(values[dense_index(p, r)]);
            const std::uint64_t key = tuple_index(in_vals, q);
            record(code.locals.at(e.id), key,
                   values[dense_index(p, EdgeRef::link(e.id))],
                   "e" + std::to_string(e.id));
        }
        for (std::size_t t = 1; t <= p.sink_count(); ++t) {
            const auto ins = in_set(p, p.sinks[t - 1].node);
            in_vals.clear();
            for (const auto& r : ins) in_vals.push_back(values[dense_index(p, r)]);
            const std::uint64_t key = tuple_index(in_vals, q);
            record(code.decoders.at(static_cast<int>(t)), key,
                   values[dense_index(p, EdgeRef::demand(static_cast<int>(t)))],
                   "t" + std::to_string(t));
        }

        for (std::size_t i = K; i-- > 0;) {
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }
    return code;
}

/// Linear global encoding vectors as message-domain kernels, the bridge
/// from the linear pipeline into the FD one.
inline PhiAssignment phi_from_linear_code(const NetworkProblem& p,
                                          const LinearNetworkCode& code) {
    PhiAssignment phi;
    phi.q = p.alphabet;
    for (const auto& [id, global] : code.link_globals)
        phi.tables.emplace(EdgeRef::link(id),
                           FunctionTable::linear(p.alphabet, global));
    return phi;
}

struct ExecutionTrace {
    std::map<int, std::uint32_t> link_values; // edge id -> symbol
    std::map<int, std::uint32_t> sink_values; // sink t -> decoder output
};

/// Runs the tabulated kernels edge by edge in ancestral order on one
/// message tuple.
inline ExecutionTrace execute_code(const NetworkProblem& p, const NonlinearCode& code,
                                   std::span<const std::uint32_t> x) {
    if (x.size() != p.message_count())
        throw std::invalid_argument("execute_code: message tuple has wrong length");
    ExecutionTrace trace;
    auto value_of = [&](const EdgeRef& r) -> std::uint32_t {
        if (r.kind == EdgeRef::Kind::source) return x[r.index - 1];
        if (r.kind == EdgeRef::Kind::link) return trace.link_values.at(r.index);
        throw std::logic_error("execute_code: demand edge has no carried value");
    };
    std::vector<std::uint32_t> in_vals;
    for (const auto& e : ancestral_order(p)) {
        if (e.kind == EdgeRef::Kind::source) continue;
        if (e.kind == EdgeRef::Kind::link) {
            const auto ins = in_set_of_edge(p, e.index);
            in_vals.clear();
            for (const auto& r : ins) in_vals.push_back(value_of(r));
            const auto& kernel = code.locals.at(e.index);
            const std::uint64_t key = tuple_index(in_vals, code.q);
            if (!kernel.defined[key])
                throw std::out_of_range("execute_code: kernel of " + e.name() +
                                        " undefined at " + to_string(Column(
                                            in_vals.begin(), in_vals.end())));
            trace.link_values[e.index] = kernel.values[key];
        } else {
            const auto ins = in_set(p, p.sinks[e.index - 1].node);
            in_vals.clear();
            for (const auto& r : ins) in_vals.push_back(value_of(r));
            const auto& kernel = code.decoders.at(e.index);
            const std::uint64_t key = tuple_index(in_vals, code.q);
            if (!kernel.defined[key])
                throw std::out_of_range("execute_code: decoder of sink t" +
                                        std::to_string(e.index) + " undefined");
            trace.sink_values[e.index] = kernel.values[key];
        }
    }
    return trace;
}

/// Global kernels by forward execution on every message tuple: links get
/// explicit tables, sources stay coordinate projections and demand edges
/// keep the demand functions.
inline PhiAssignment fd_rep_from_code(const NetworkProblem& p,
                                      const NonlinearCode& code,
                                      std::uint64_t tuple_budget = std::uint64_t(1)
                                                                   << 20) {
    const std::size_t K = p.message_count();
    const std::uint32_t q = p.alphabet;
    const std::uint64_t total = pow_u64(q, K);
    if (total > tuple_budget)
        throw std::invalid_argument("fd_rep_from_code: budget exceeded");

    std::map<int, std::vector<std::uint32_t>> link_tables;
    for (const auto& e : p.edges) link_tables[e.id].resize(total);

    std::vector<std::uint32_t> x(K, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const ExecutionTrace trace = execute_code(p, code, x);
        for (const auto& [id, v] : trace.link_values) link_tables[id][idx] = v;
        for (std::size_t i = K; i-- > 0;) {
            if (++x[i] < q) break;
            x[i] = 0;
        }
    }

    PhiAssignment phi;
    phi.q = q;
    for (auto& [id, values] : link_tables)
        phi.tables.emplace(EdgeRef::link(id),
                           FunctionTable::explicit_table(q, K, std::move(values)));
    return phi;
}

} // namespace netcomp

#endif // NETCOMP_FDREL_HPP
