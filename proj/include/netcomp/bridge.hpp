#ifndef NETCOMP_BRIDGE_HPP
#define NETCOMP_BRIDGE_HPP

// The code/matroid bridge: matroidal-network checking (M1-M3), matroid
// extraction from a working code, representation-constraint checking
// (C1-C2) and code synthesis from a constrained representation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcomp/galois.hpp"
#include "netcomp/lincode.hpp"
#include "netcomp/matroid.hpp"
#include "netcomp/netgraph.hpp"

namespace netcomp {

/// The network-matroid map f on messages, link edges and demands; values
/// are 1-based ground elements. Injectivity is demanded only on the
/// messages, so a demand equal to some unit vector may share its ground
/// element with that message.
struct NetworkMatroidMap {
    std::map<int, int> messages; // k -> ground element
    std::map<int, int> edges;    // edge id -> ground element
    std::map<int, int> demands;  // sink t -> ground element

    int of(const EdgeRef& e) const {
        switch (e.kind) {
        case EdgeRef::Kind::source: return messages.at(e.index);
        case EdgeRef::Kind::link: return edges.at(e.index);
        case EdgeRef::Kind::demand: return demands.at(e.index);
        }
        throw std::logic_error("bad EdgeRef kind");
    }
};

/// Fills missing demand entries for sinks whose demand is a unit vector,
/// mapping them onto the matching message element (the network coding
/// special case, where the map domain shrinks to messages and links).
inline NetworkMatroidMap complete_map_defaults(const NetworkProblem& p,
                                               NetworkMatroidMap f) {
    const std::size_t K = p.message_count();
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        if (f.demands.count(static_cast<int>(t))) continue;
        auto g = demand_column(p, static_cast<int>(t));
        if (!g) continue;
        for (std::size_t k = 1; k <= K; ++k) {
            if (*g == unit_column(k, K)) {
                auto it = f.messages.find(static_cast<int>(k));
                if (it != f.messages.end())
                    f.demands[static_cast<int>(t)] = it->second;
                break;
            }
        }
    }
    return f;
}

namespace detail {

inline void require_total_map(const NetworkProblem& p, const NetworkMatroidMap& f,
                              std::size_t ground_size) {
    auto check = [&](int value, const std::string& what) {
        if (value < 1 || static_cast<std::size_t>(value) > ground_size)
            throw std::out_of_range("network-matroid map sends " + what + " to " +
                                    std::to_string(value) +
                                    ", outside the ground set");
    };
    for (std::size_t k = 1; k <= p.message_count(); ++k) {
        auto it = f.messages.find(static_cast<int>(k));
        if (it == f.messages.end())
            throw std::invalid_argument("network-matroid map misses message X" +
                                        std::to_string(k));
        check(it->second, "X" + std::to_string(k));
    }
    for (const auto& e : p.edges) {
        auto it = f.edges.find(e.id);
        if (it == f.edges.end())
            throw std::invalid_argument("network-matroid map misses edge e" +
                                        std::to_string(e.id));
        check(it->second, "e" + std::to_string(e.id));
    }
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        auto it = f.demands.find(static_cast<int>(t));
        if (it == f.demands.end())
            throw std::invalid_argument("network-matroid map misses demand of t" +
                                        std::to_string(t));
        check(it->second, "g_t" + std::to_string(t));
    }
}

inline std::vector<int> map_refs(const NetworkMatroidMap& f,
                                 const std::vector<EdgeRef>& refs) {
    std::vector<int> out;
    out.reserve(refs.size());
    for (const auto& r : refs) out.push_back(f.of(r));
    return out;
}

} // namespace detail

struct MatroidalItem {
    std::string condition; // "M1" | "M2" | "M3"
    std::string where;
    std::string detail;
};

struct MatroidalReport {
    bool pass = true;
    std::vector<MatroidalItem> items;

    void fail(std::string condition, std::string where, std::string detail) {
        pass = false;
        items.push_back({std::move(condition), std::move(where), std::move(detail)});
    }
};

/// Definition-1 check: f injective on messages (M1), message image
/// independent (M2), and at every node the mapped In-set carries the same
/// rank as In together with Out (M3).
inline MatroidalReport check_matroidal(const NetworkProblem& p,
                                       const RankOracle& matroid,
                                       const NetworkMatroidMap& f) {
    detail::require_total_map(p, f, matroid.ground_size());
    MatroidalReport report;

    std::map<int, int> seen; // ground element -> message k
    for (std::size_t k = 1; k <= p.message_count(); ++k) {
        const int s = f.messages.at(static_cast<int>(k));
        auto [it, fresh] = seen.emplace(s, static_cast<int>(k));
        if (!fresh)
            report.fail("M1", "X" + std::to_string(k),
                        "collides with X" + std::to_string(it->second) +
                            " on ground element " + std::to_string(s));
    }

    std::vector<int> image;
    for (auto& [s, k] : seen) image.push_back(s);
    const std::size_t r = matroid.rank(image);
    if (r != image.size())
        report.fail("M2", "f(X)",
                    "rank of mapped messages is " + std::to_string(r) +
                        ", expected " + std::to_string(image.size()));

    for (int v : p.nodes) {
        auto ins = detail::map_refs(f, in_set(p, v));
        auto outs = detail::map_refs(f, out_set(p, v));
        if (outs.empty()) continue;
        std::vector<int> both = ins;
        both.insert(both.end(), outs.begin(), outs.end());
        const std::size_t r_in = matroid.rank(ins);
        const std::size_t r_both = matroid.rank(both);
        if (r_in != r_both)
            report.fail("M3", "node " + std::to_string(v),
                        "r(f(In)) = " + std::to_string(r_in) +
                            " but r(f(In∪Out)) = " + std::to_string(r_both));
    }
    return report;
}

struct ConstraintItem {
    std::string condition; // "C1" | "C2"
    std::string where;
    std::string detail;
};

struct ConstraintVerdict {
    bool ok = true;
    std::vector<ConstraintItem> items;

    void fail(std::string condition, std::string where, std::string detail) {
        ok = false;
        items.push_back({std::move(condition), std::move(where), std::move(detail)});
    }
};

/// C1/C2 at the columns designated by f: message columns must be unit
/// columns padded with zeros below row K, demand columns the demand
/// vectors with the same padding.
inline ConstraintVerdict check_representation_constraints(
    const FieldMatrix& m, const NetworkProblem& p, const NetworkMatroidMap& f) {
    const std::size_t K = p.message_count();
    if (m.rows() < K)
        throw std::invalid_argument("representation has fewer rows than messages");
    if (m.cols() < m.rows())
        throw std::invalid_argument("representation needs at least as many columns as rows");
    if (m.field().p() != p.alphabet)
        throw std::invalid_argument("representation field GF(" +
                                    std::to_string(m.field().p()) +
                                    ") does not match alphabet " +
                                    std::to_string(p.alphabet));
    detail::require_total_map(p, f, m.cols());

    ConstraintVerdict verdict;
    auto padded = [&](const Column& g) {
        Column c(m.rows(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = g[i];
        return c;
    };
    for (std::size_t k = 1; k <= K; ++k) {
        const std::size_t col = f.messages.at(static_cast<int>(k));
        if (m.column(col) != padded(unit_column(k, K)))
            verdict.fail("C1", "X" + std::to_string(k),
                         "column " + std::to_string(col) + " is " +
                             to_string(m.column(col)) + ", expected unit " +
                             std::to_string(k) + " with zero padding");
    }
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        auto g = demand_column(p, static_cast<int>(t));
        if (!g)
            throw std::invalid_argument(
                "check_representation_constraints: demand of t" +
                std::to_string(t) + " is not linear");
        const std::size_t col = f.demands.at(static_cast<int>(t));
        if (m.column(col) != padded(*g))
            verdict.fail("C2", "t" + std::to_string(t),
                         "column " + std::to_string(col) + " is " +
                             to_string(m.column(col)) + ", expected demand " +
                             to_string(*g) + " with zero padding");
    }
    return verdict;
}

struct ExtractResult {
    std::optional<FieldMatrix> matrix; // absent when the code fails to verify
    NetworkMatroidMap map;
    VerifyReport code_report;
};

/// Juxtaposes unit columns, link globals (ancestral column order) and
/// demand columns into the K x |edges| representation whose vector
/// matroid makes the network matroidal, with the canonical map.
inline ExtractResult matroid_from_code(const NetworkProblem& p,
                                       const LinearNetworkCode& code) {
    LinearNetworkCode c = code;
    if (c.decoders.empty()) {
        if (auto d = solve_decoders(p, c)) c.decoders = *d;
    }
    ExtractResult result;
    result.code_report = verify_code(p, c);
    if (!result.code_report.pass) return result;

    const std::size_t K = p.message_count();
    PrimeField field(p.alphabet);
    std::vector<Column> cols;
    NetworkMatroidMap f;
    for (std::size_t k = 1; k <= K; ++k) {
        cols.push_back(unit_column(k, K));
        f.messages[static_cast<int>(k)] = static_cast<int>(k);
    }
    std::size_t pos = 0;
    for (const auto& e : ancestral_order(p)) {
        if (e.kind != EdgeRef::Kind::link) continue;
        ++pos;
        cols.push_back(c.link_globals.at(e.index));
        f.edges[e.index] = static_cast<int>(K + pos);
    }
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        cols.push_back(*demand_column(p, static_cast<int>(t)));
        f.demands[static_cast<int>(t)] =
            static_cast<int>(K + p.edges.size() + t);
    }
    result.matrix = FieldMatrix::from_columns(field, K, cols);
    result.map = std::move(f);
    return result;
}

struct SynthesisResult {
    std::optional<LinearNetworkCode> code;
    MatroidalReport matroidal;
    ConstraintVerdict constraints;
    std::string error; // set on internal solve failure only

    bool ok() const { return code.has_value(); }
};

/// Theorem-1 converse: from a representation satisfying M1-M3 and C1-C2,
/// read the globals off the mapped columns. Rows beyond the first K act
/// as dummy messages during decoder solving and are deleted at the end.
inline SynthesisResult code_from_representation(const FieldMatrix& m,
                                                const NetworkProblem& p,
                                                const NetworkMatroidMap& f) {
    SynthesisResult result;
    result.matroidal = check_matroidal(p, RankOracle::vector_matroid(m), f);
    result.constraints = check_representation_constraints(m, p, f);
    if (!result.matroidal.pass || !result.constraints.ok) return result;

    const std::size_t K = p.message_count();
    const FieldMatrix b = full_rank_row_basis(m);

    auto stripped = [&](const Column& full) {
        return Column(full.begin(), full.begin() + K);
    };

    LinearNetworkCode code{b.field(), K, {}, {}, {}};
    for (const auto& e : p.edges)
        code.link_globals[e.id] = stripped(b.column(f.edges.at(e.id)));

    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        const auto ins = in_set(p, p.sinks[t - 1].node);
        std::vector<Column> in_cols;
        for (const auto& r : ins) in_cols.push_back(b.column(f.of(r)));
        FieldMatrix a = FieldMatrix::from_columns(b.field(), b.rows(), in_cols);
        auto d = solve_right(a, b.column(f.demands.at(static_cast<int>(t))));
        if (!d) {
            result.error = "decoder solve failed at sink t" + std::to_string(t) +
                           " although M3 holds; representation is inconsistent";
            return result;
        }
        code.decoders[static_cast<int>(t)] = std::move(*d);
    }
    result.code = std::move(code);
    return result;
}

} // namespace netcomp

#endif // NETCOMP_BRIDGE_HPP
