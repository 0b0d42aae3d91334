#ifndef NETCOMP_LINCODE_HPP
#define NETCOMP_LINCODE_HPP

// Scalar linear network codes: global/local encoding kernels, the
// induction that expands locals into globals along an ancestral ordering,
// and verification of the decoding contract at every sink.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netcomp/galois.hpp"
#include "netcomp/netgraph.hpp"

namespace netcomp {

/// Global encoding vectors per link edge plus per-sink decoding vectors.
/// Source-edge globals are always the unit columns and demand-edge
/// globals default to the demand columns; files may carry the latter
/// explicitly, in which case verify_code cross-checks them.
struct LinearNetworkCode {
    PrimeField field;
    std::size_t message_count = 0;
    std::map<int, Column> link_globals; // edge id -> length-K column
    std::map<int, Column> hat_globals;  // sink t -> length-K column (optional)
    std::map<int, Column> decoders;     // sink t -> |In(t)| coefficients
};

/// Local encoding kernels: one coefficient per In(e) member, in the
/// canonical In ordering.
struct LocalKernelSet {
    std::map<int, Column> locals; // edge id -> |In(e)| coefficients
};

inline Column global_of(const NetworkProblem& p, const LinearNetworkCode& c,
                        const EdgeRef& e) {
    const std::size_t K = p.message_count();
    switch (e.kind) {
    case EdgeRef::Kind::source:
        return unit_column(e.index, K);
    case EdgeRef::Kind::link: {
        auto it = c.link_globals.find(e.index);
        if (it == c.link_globals.end())
            throw std::out_of_range("no global encoding vector for " + e.name());
        return it->second;
    }
    case EdgeRef::Kind::demand: {
        auto it = c.hat_globals.find(e.index);
        if (it != c.hat_globals.end()) return it->second;
        auto g = demand_column(p, e.index);
        if (!g)
            throw std::invalid_argument("demand of sink t" +
                                        std::to_string(e.index) +
                                        " is not linear");
        return *g;
    }
    }
    throw std::logic_error("bad EdgeRef kind");
}

/// Matrix whose j-th column is the global of refs[j].
inline FieldMatrix globals_matrix(const NetworkProblem& p,
                                  const LinearNetworkCode& c,
                                  const std::vector<EdgeRef>& refs) {
    std::vector<Column> cols;
    cols.reserve(refs.size());
    for (const auto& r : refs) cols.push_back(global_of(p, c, r));
    return FieldMatrix::from_columns(c.field, p.message_count(), cols);
}

/// Expands local kernels into global encoding vectors by induction on the
/// ancestral ordering. Decoders are left empty.
inline LinearNetworkCode globals_from_locals(const NetworkProblem& p,
                                             const LocalKernelSet& kernels) {
    PrimeField field(p.alphabet);
    LinearNetworkCode code{field, p.message_count(), {}, {}, {}};
    for (const auto& e : ancestral_order(p)) {
        if (e.kind != EdgeRef::Kind::link) continue;
        const auto ins = in_set_of_edge(p, e.index);
        auto it = kernels.locals.find(e.index);
        if (it == kernels.locals.end())
            throw std::invalid_argument("missing local kernel for " + e.name());
        const Column& coeff = it->second;
        if (coeff.size() != ins.size())
            throw std::invalid_argument("local kernel for " + e.name() + " has " +
                                        std::to_string(coeff.size()) +
                                        " coefficients, expected " +
                                        std::to_string(ins.size()));
        Column g(p.message_count(), 0);
        for (std::size_t j = 0; j < ins.size(); ++j)
            g = add_columns(field, g,
                            scale_column(field, coeff[j], global_of(p, code, ins[j])));
        code.link_globals[e.index] = std::move(g);
    }
    return code;
}

struct CodeViolation {
    std::string condition; // "global" | "span" | "hat-global" | "decoder"
    std::string where;     // edge or sink name
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<CodeViolation> items;

    void fail(std::string condition, std::string where, std::string detail) {
        pass = false;
        items.push_back({std::move(condition), std::move(where), std::move(detail)});
    }
};

/// Span-membership and decoding checks against the problem's demands.
/// Works from global vectors alone, so externally supplied codes (for
/// example, matroid representation columns) are checkable without locals.
inline VerifyReport verify_code(const NetworkProblem& p,
                                const LinearNetworkCode& c) {
    for (std::size_t t = 1; t <= p.sink_count(); ++t)
        if (!demand_column(p, static_cast<int>(t)))
            throw std::invalid_argument("verify_code: demand of t" +
                                        std::to_string(t) + " is not linear");
    VerifyReport report;
    const std::size_t K = p.message_count();
    PrimeField field(p.alphabet);
    if (c.field != field)
        report.fail("global", "code",
                    "code field GF(" + std::to_string(c.field.p()) +
                        ") does not match problem alphabet " +
                        std::to_string(p.alphabet));

    for (const auto& e : p.edges) {
        auto it = c.link_globals.find(e.id);
        if (it == c.link_globals.end()) {
            report.fail("global", "e" + std::to_string(e.id),
                        "no global encoding vector");
            continue;
        }
        if (it->second.size() != K)
            report.fail("global", "e" + std::to_string(e.id),
                        "global has length " + std::to_string(it->second.size()) +
                            ", expected " + std::to_string(K));
    }
    if (!report.pass) return report;

    // every link-edge global must lie in the span of its In-set globals
    for (const auto& e : p.edges) {
        const auto ins = in_set_of_edge(p, e.id);
        FieldMatrix a = globals_matrix(p, c, ins);
        if (!solve_right(a, c.link_globals.at(e.id)))
            report.fail("span", "e" + std::to_string(e.id),
                        "global " + to_string(c.link_globals.at(e.id)) +
                            " is not a combination of In(e) globals");
    }

    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        const std::string where = "t" + std::to_string(t);
        const auto g = demand_column(p, static_cast<int>(t));
        auto hat = c.hat_globals.find(static_cast<int>(t));
        if (hat != c.hat_globals.end() && hat->second != *g)
            report.fail("hat-global", where,
                        "stored demand-edge global " + to_string(hat->second) +
                            " differs from demand " + to_string(*g));
        const auto ins = in_set(p, p.sinks[t - 1].node);
        auto d = c.decoders.find(static_cast<int>(t));
        if (d == c.decoders.end()) {
            report.fail("decoder", where, "no decoding vector");
            continue;
        }
        if (d->second.size() != ins.size()) {
            report.fail("decoder", where,
                        "decoder has length " + std::to_string(d->second.size()) +
                            ", expected " + std::to_string(ins.size()));
            continue;
        }
        FieldMatrix a = globals_matrix(p, c, ins);
        FieldMatrix dx = FieldMatrix::from_columns(c.field, ins.size(), {d->second});
        FieldMatrix got = matmul(a, dx);
        FieldMatrix want = FieldMatrix::from_columns(c.field, K, {*g});
        if (got != want)
            report.fail("decoder", where,
                        "In(t) globals times decoder is " + to_string(got.column(1)) +
                            ", demand is " + to_string(*g));
    }
    return report;
}

/// One decoding vector per sink, solved from the In-set globals; absent
/// if any sink demand is outside its span.
inline std::optional<std::map<int, Column>> solve_decoders(
    const NetworkProblem& p, const LinearNetworkCode& c) {
    std::map<int, Column> out;
    for (std::size_t t = 1; t <= p.sink_count(); ++t) {
        auto g = demand_column(p, static_cast<int>(t));
        if (!g)
            throw std::invalid_argument("solve_decoders: demand of t" +
                                        std::to_string(t) + " is not linear");
        const auto ins = in_set(p, p.sinks[t - 1].node);
        FieldMatrix a = globals_matrix(p, c, ins);
        auto x = solve_right(a, *g);
        if (!x) return std::nullopt;
        out[static_cast<int>(t)] = std::move(*x);
    }
    return out;
}

struct LocalsResult {
    std::optional<LocalKernelSet> kernels; // present iff no edge failed
    std::vector<int> failed_edges;         // edges whose global leaves the span
};

/// Recovers a set of local kernels expressing every global over its
/// In-set (deterministic via solve_right). Round trips on globals, not
/// necessarily on coefficients.
inline LocalsResult locals_from_globals(const NetworkProblem& p,
                                        const LinearNetworkCode& c) {
    LocalsResult result;
    LocalKernelSet kernels;
    for (const auto& e : p.edges) {
        const auto ins = in_set_of_edge(p, e.id);
        FieldMatrix a = globals_matrix(p, c, ins);
        auto x = solve_right(a, c.link_globals.at(e.id));
        if (!x) {
            result.failed_edges.push_back(e.id);
            continue;
        }
        kernels.locals[e.id] = std::move(*x);
    }
    if (result.failed_edges.empty()) result.kernels = std::move(kernels);
    return result;
}

} // namespace netcomp

#endif // NETCOMP_LINCODE_HPP
