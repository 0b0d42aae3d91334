#ifndef NETCOMP_NETGRAPH_HPP
#define NETCOMP_NETGRAPH_HPP

// The network computation problem model: a DAG with three edge classes
// (tailless source-message edges, unit-capacity links, headless demand
// edges), incidence queries and validation.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "netcomp/functable.hpp"
#include "netcomp/galois.hpp"

namespace netcomp {

/// One of the three edge classes. Source edges are indexed by message
/// number k, links by edge id, demand edges by sink number t; all 1-based.
struct EdgeRef {
    enum class Kind { source, link, demand };
    Kind kind = Kind::link;
    int index = 0;

    static EdgeRef source(int k) { return {Kind::source, k}; }
    static EdgeRef link(int i) { return {Kind::link, i}; }
    static EdgeRef demand(int t) { return {Kind::demand, t}; }

    auto operator<=>(const EdgeRef&) const = default;

    std::string name() const {
        switch (kind) {
        case Kind::source: return "s" + std::to_string(index);
        case Kind::link: return "e" + std::to_string(index);
        case Kind::demand: return "t" + std::to_string(index);
        }
        return "?";
    }

    /// Parses "s<k>", "e<i>" or "t<j>".
    static std::optional<EdgeRef> parse(const std::string& s) {
        if (s.size() < 2) return std::nullopt;
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(s.substr(1), &used);
            if (used + 1 != s.size() || idx < 1) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        switch (s[0]) {
        case 's': return source(idx);
        case 'e': return link(idx);
        case 't': return demand(idx);
        default: return std::nullopt;
        }
    }
};

struct LinearDemand {
    Column coeffs; // length K, entries in [0,q)
};

struct NamedDemand {
    enum class Name { max, sum, identity };
    Name name = Name::max;
    int k = 0; // identity only: which message
};

struct TableDemand {
    FunctionTable table; // arity K over [0,q)
};

using DemandSpec = std::variant<LinearDemand, NamedDemand, TableDemand>;

struct SourceMessage {
    int k = 0; // message index, 1-based
    int node = 0;
};

struct LinkEdge {
    int id = 0; // 1-based
    int tail = 0;
    int head = 0;
};

/// One sink entry. A well-formed problem carries exactly one demand per
/// sink; normalize_multi_demand splits entries that carry several.
struct Sink {
    int node = 0;
    std::vector<DemandSpec> demands;
};

struct NetworkProblem {
    std::uint32_t alphabet = 2; // q
    std::vector<int> nodes;
    std::vector<SourceMessage> messages;
    std::vector<LinkEdge> edges;
    std::vector<Sink> sinks;

    std::size_t message_count() const { return messages.size(); }
    std::size_t sink_count() const { return sinks.size(); }
    std::size_t total_edges() const {
        return messages.size() + edges.size() + sinks.size();
    }

    const LinkEdge& edge_by_id(int id) const {
        for (const auto& e : edges)
            if (e.id == id) return e;
        throw std::out_of_range("edge id " + std::to_string(id) + " unknown");
    }

    bool has_node(int v) const {
        return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
    }
};

/// Copy with a different alphabet, for running the same topology over
/// another field (demand coefficients must stay in range; re-validate).
inline NetworkProblem with_alphabet(NetworkProblem p, std::uint32_t q) {
    p.alphabet = q;
    return p;
}

/// Dense 0-based index over the full edge set: sources, then links by id,
/// then demand edges by sink number.
inline std::size_t dense_index(const NetworkProblem& p, const EdgeRef& e) {
    const std::size_t K = p.message_count();
    switch (e.kind) {
    case EdgeRef::Kind::source:
        if (e.index < 1 || static_cast<std::size_t>(e.index) > K)
            throw std::out_of_range("source edge index out of range");
        return e.index - 1;
    case EdgeRef::Kind::link:
        if (e.index < 1 || static_cast<std::size_t>(e.index) > p.edges.size())
            throw std::out_of_range("link edge index out of range");
        return K + e.index - 1;
    case EdgeRef::Kind::demand:
        if (e.index < 1 || static_cast<std::size_t>(e.index) > p.sinks.size())
            throw std::out_of_range("demand edge index out of range");
        return K + p.edges.size() + e.index - 1;
    }
    throw std::logic_error("bad EdgeRef kind");
}

inline EdgeRef edge_from_dense(const NetworkProblem& p, std::size_t idx) {
    const std::size_t K = p.message_count();
    if (idx < K) return EdgeRef::source(static_cast<int>(idx + 1));
    idx -= K;
    if (idx < p.edges.size()) return EdgeRef::link(static_cast<int>(idx + 1));
    idx -= p.edges.size();
    if (idx < p.sinks.size()) return EdgeRef::demand(static_cast<int>(idx + 1));
    throw std::out_of_range("dense edge index out of range");
}

struct Violation {
    std::string code;   // e.g. "CycleDetected"
    std::string detail; // names the offending element
};

namespace detail {

inline bool is_valid_demand(const NetworkProblem& p, const DemandSpec& d,
                            std::string& why) {
    const std::size_t K = p.message_count();
    if (const auto* lin = std::get_if<LinearDemand>(&d)) {
        if (!PrimeField::is_prime(p.alphabet)) {
            why = "linear demand requires a prime alphabet, q=" +
                  std::to_string(p.alphabet);
            return false;
        }
        if (lin->coeffs.size() != K) {
            why = "linear demand has " + std::to_string(lin->coeffs.size()) +
                  " coefficients, expected " + std::to_string(K);
            return false;
        }
        for (auto c : lin->coeffs)
            if (c >= p.alphabet) {
                why = "linear demand coefficient " + std::to_string(c) +
                      " outside [0," + std::to_string(p.alphabet) + ")";
                return false;
            }
        return true;
    }
    if (const auto* named = std::get_if<NamedDemand>(&d)) {
        if (named->name == NamedDemand::Name::identity &&
            (named->k < 1 || static_cast<std::size_t>(named->k) > K)) {
            why = "identity demand names message " + std::to_string(named->k);
            return false;
        }
        return true;
    }
    const auto& tab = std::get<TableDemand>(d).table;
    if (tab.q != p.alphabet || tab.arity != K) {
        why = "table demand has q=" + std::to_string(tab.q) + ", arity=" +
              std::to_string(tab.arity);
        return false;
    }
    if (tab.kind == FunctionTable::Kind::explicit_values &&
        tab.values.size() != pow_u64(p.alphabet, K)) {
        why = "table demand has " + std::to_string(tab.values.size()) +
              " values, expected q^K";
        return false;
    }
    return true;
}

} // namespace detail

/// Structural checks; an empty result means the problem is well formed.
inline std::vector<Violation> validate(const NetworkProblem& p) {
    std::vector<Violation> out;
    if (p.alphabet < 2)
        out.push_back({"AlphabetInvalid", "q=" + std::to_string(p.alphabet)});

    std::set<int> node_set(p.nodes.begin(), p.nodes.end());
    if (node_set.size() != p.nodes.size())
        out.push_back({"DuplicateNode", "node list contains repeats"});

    // message indices must form [1..K], generators must exist
    std::set<int> ks;
    for (const auto& m : p.messages) {
        if (!ks.insert(m.k).second)
            out.push_back({"MessageIndexInvalid",
                           "message index " + std::to_string(m.k) + " repeats"});
        if (!node_set.count(m.node))
            out.push_back({"UnknownNode", "message X" + std::to_string(m.k) +
                                              " generated at unknown node " +
                                              std::to_string(m.node)});
    }
    for (std::size_t k = 1; k <= p.messages.size(); ++k)
        if (!ks.count(static_cast<int>(k)))
            out.push_back({"MessageIndexInvalid",
                           "message indices do not form [1.." +
                               std::to_string(p.messages.size()) + "]"});

    // edge ids must form [1..|E|], endpoints must exist
    std::set<int> ids;
    for (const auto& e : p.edges) {
        if (!ids.insert(e.id).second)
            out.push_back({"EdgeIdInvalid",
                           "edge id " + std::to_string(e.id) + " repeats"});
        if (!node_set.count(e.tail))
            out.push_back({"UnknownNode", "edge e" + std::to_string(e.id) +
                                              " tail " + std::to_string(e.tail)});
        if (!node_set.count(e.head))
            out.push_back({"UnknownNode", "edge e" + std::to_string(e.id) +
                                              " head " + std::to_string(e.head)});
    }
    for (std::size_t i = 1; i <= p.edges.size(); ++i)
        if (!ids.count(static_cast<int>(i)))
            out.push_back({"EdgeIdInvalid", "edge ids do not form [1.." +
                                                std::to_string(p.edges.size()) +
                                                "]"});

    for (std::size_t t = 0; t < p.sinks.size(); ++t) {
        const auto& s = p.sinks[t];
        if (!node_set.count(s.node))
            out.push_back({"UnknownNode", "sink t" + std::to_string(t + 1) +
                                              " at unknown node " +
                                              std::to_string(s.node)});
        if (s.demands.size() != 1)
            out.push_back({"MultiDemandSink",
                           "sink t" + std::to_string(t + 1) + " carries " +
                               std::to_string(s.demands.size()) +
                               " demands; normalize first"});
        for (const auto& d : s.demands) {
            std::string why;
            if (!detail::is_valid_demand(p, d, why))
                out.push_back({"DemandInvalid",
                               "sink t" + std::to_string(t + 1) + ": " + why});
        }
    }

    // acyclicity of the link graph (Kahn); self-loops surface here too
    std::map<int, std::size_t> indeg;
    for (int v : p.nodes) indeg[v] = 0;
    bool endpoints_ok = true;
    for (const auto& e : p.edges) {
        if (!node_set.count(e.tail) || !node_set.count(e.head)) {
            endpoints_ok = false;
            continue;
        }
        ++indeg[e.head];
    }
    if (endpoints_ok) {
        std::queue<int> ready;
        for (auto& [v, d] : indeg)
            if (d == 0) ready.push(v);
        std::size_t seen = 0;
        while (!ready.empty()) {
            int v = ready.front();
            ready.pop();
            ++seen;
            for (const auto& e : p.edges)
                if (e.tail == v && --indeg[e.head] == 0) ready.push(e.head);
        }
        if (seen != node_set.size()) {
            std::string stuck;
            for (auto& [v, d] : indeg)
                if (d > 0) stuck += (stuck.empty() ? "" : ",") + std::to_string(v);
            out.push_back({"CycleDetected", "cycle through nodes {" + stuck + "}"});
        }
    }
    return out;
}

/// Splits every sink entry holding N > 1 demands into N co-located sinks
/// with identical incoming edges; idempotent.
inline NetworkProblem normalize_multi_demand(const NetworkProblem& p) {
    NetworkProblem out = p;
    out.sinks.clear();
    for (const auto& s : p.sinks) {
        if (s.demands.empty()) {
            out.sinks.push_back(s);
            continue;
        }
        for (const auto& d : s.demands) out.sinks.push_back({s.node, {d}});
    }
    return out;
}

/// In(v): message edges generated at v, then incoming links, both
/// ascending. This is the canonical argument order for every kernel and
/// decoder coefficient vector.
inline std::vector<EdgeRef> in_set(const NetworkProblem& p, int v) {
    if (!p.has_node(v))
        throw std::out_of_range("in_set: unknown node " + std::to_string(v));
    std::vector<EdgeRef> out;
    for (const auto& m : p.messages)
        if (m.node == v) out.push_back(EdgeRef::source(m.k));
    for (const auto& e : p.edges)
        if (e.head == v) out.push_back(EdgeRef::link(e.id));
    std::sort(out.begin(), out.end());
    return out;
}

/// Out(v): outgoing links, then the demand edges of sinks located at v.
inline std::vector<EdgeRef> out_set(const NetworkProblem& p, int v) {
    if (!p.has_node(v))
        throw std::out_of_range("out_set: unknown node " + std::to_string(v));
    std::vector<EdgeRef> out;
    for (const auto& e : p.edges)
        if (e.tail == v) out.push_back(EdgeRef::link(e.id));
    for (std::size_t t = 0; t < p.sinks.size(); ++t)
        if (p.sinks[t].node == v)
            out.push_back(EdgeRef::demand(static_cast<int>(t + 1)));
    std::sort(out.begin(), out.end());
    return out;
}

/// Out'(v) = Out(v) without the demand edges.
inline std::vector<EdgeRef> out_prime(const NetworkProblem& p, int v) {
    std::vector<EdgeRef> out = out_set(p, v);
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const EdgeRef& e) {
                                 return e.kind == EdgeRef::Kind::demand;
                             }),
              out.end());
    return out;
}

/// In(e) = In(tail(e)) for a link edge.
inline std::vector<EdgeRef> in_set_of_edge(const NetworkProblem& p, int edge_id) {
    return in_set(p, p.edge_by_id(edge_id).tail);
}

/// All edges, source edges first, then links topologically (ties broken
/// by ascending id), then demand edges. Every edge appears after the
/// whole In-set of its tail. Throws on a cycle.
inline std::vector<EdgeRef> ancestral_order(const NetworkProblem& p) {
    std::vector<EdgeRef> order;
    order.reserve(p.total_edges());
    for (std::size_t k = 1; k <= p.message_count(); ++k)
        order.push_back(EdgeRef::source(static_cast<int>(k)));

    // a link edge is ready once every incoming link of its tail is out
    std::map<int, std::size_t> pending; // node -> unemitted incoming links
    for (int v : p.nodes) pending[v] = 0;
    for (const auto& e : p.edges) ++pending.at(e.head);

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (const auto& e : p.edges)
        if (pending.at(e.tail) == 0) ready.push(e.id);

    std::size_t emitted = 0;
    while (!ready.empty()) {
        const int id = ready.top();
        ready.pop();
        order.push_back(EdgeRef::link(id));
        ++emitted;
        const int head = p.edge_by_id(id).head;
        if (--pending.at(head) == 0)
            for (const auto& e : p.edges)
                if (e.tail == head) ready.push(e.id);
    }
    if (emitted != p.edges.size())
        throw std::runtime_error("ancestral_order: cycle detected");

    for (std::size_t t = 1; t <= p.sink_count(); ++t)
        order.push_back(EdgeRef::demand(static_cast<int>(t)));
    return order;
}

/// The demand of sink t (1-based) as a coefficient column, when linear.
inline std::optional<Column> demand_column(const NetworkProblem& p, int t) {
    const auto& demands = p.sinks.at(t - 1).demands;
    if (demands.size() != 1)
        throw std::invalid_argument("demand_column: sink not normalized");
    const std::size_t K = p.message_count();
    const DemandSpec& d = demands.front();
    if (const auto* lin = std::get_if<LinearDemand>(&d)) return lin->coeffs;
    if (const auto* named = std::get_if<NamedDemand>(&d)) {
        switch (named->name) {
        case NamedDemand::Name::sum: return Column(K, 1);
        case NamedDemand::Name::identity: return unit_column(named->k, K);
        case NamedDemand::Name::max: return std::nullopt;
        }
    }
    return std::nullopt;
}

/// The demand of sink t as an evaluable function of the message tuple.
inline FunctionTable demand_table(const NetworkProblem& p, int t) {
    const auto& demands = p.sinks.at(t - 1).demands;
    if (demands.size() != 1)
        throw std::invalid_argument("demand_table: sink not normalized");
    const std::size_t K = p.message_count();
    const std::uint32_t q = p.alphabet;
    const DemandSpec& d = demands.front();
    if (const auto* lin = std::get_if<LinearDemand>(&d))
        return FunctionTable::linear(q, lin->coeffs);
    if (const auto* named = std::get_if<NamedDemand>(&d)) {
        switch (named->name) {
        case NamedDemand::Name::max: return FunctionTable::max_of(q, K);
        case NamedDemand::Name::sum: return FunctionTable::sum_mod(q, K);
        case NamedDemand::Name::identity:
            return FunctionTable::coordinate(q, K, named->k);
        }
    }
    return std::get<TableDemand>(d).table;
}

} // namespace netcomp

#endif // NETCOMP_NETGRAPH_HPP
