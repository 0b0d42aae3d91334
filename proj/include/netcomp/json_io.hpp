#ifndef NETCOMP_JSON_IO_HPP
#define NETCOMP_JSON_IO_HPP

// JSON readers and writers for every file format the tools speak:
// problems, codes, matrices, matroids, network-matroid maps and phi
// tables. Parse failures throw ParseError naming the file, field and
// byte position.

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "netcomp/bridge.hpp"
#include "netcomp/fdrel.hpp"
#include "netcomp/galois.hpp"
#include "netcomp/lincode.hpp"
#include "netcomp/matroid.hpp"
#include "netcomp/netgraph.hpp"

namespace netcomp {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

namespace jdetail {

inline const json& require(const json& j, const std::string& key,
                           const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

template <typename T>
inline T number(const json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ParseError(where + ": expected an integer");
    return j.get<T>();
}

inline Column column(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    Column c;
    for (const auto& v : j) c.push_back(number<std::uint32_t>(v, where));
    return c;
}

inline std::vector<int> int_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(number<int>(v, where));
    return out;
}

/// Keys like "e12" -> EdgeRef, validated against an allowed prefix set.
inline EdgeRef edge_key(const std::string& key, const std::string& prefixes,
                        const std::string& where) {
    auto ref = EdgeRef::parse(key);
    if (!ref || prefixes.find(key[0]) == std::string::npos)
        throw ParseError(where + ": bad key \"" + key + "\"");
    return *ref;
}

} // namespace jdetail

// --- matrices ---------------------------------------------------------

inline FieldMatrix matrix_from_json(const json& j, const std::string& where) {
    const auto p = jdetail::number<std::uint32_t>(jdetail::require(j, "p", where),
                                                  where + ".p");
    const auto rows = jdetail::number<std::size_t>(
        jdetail::require(j, "rows", where), where + ".rows");
    const auto cols = jdetail::number<std::size_t>(
        jdetail::require(j, "cols", where), where + ".cols");
    const json& entries = jdetail::require(j, "entries", where);
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError(where + ".entries: expected " + std::to_string(rows) +
                         " rows");
    PrimeField field(p);
    FieldMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Column row = jdetail::column(entries[i], where + ".entries");
        if (row.size() != cols)
            throw ParseError(where + ".entries: row " + std::to_string(i + 1) +
                             " has " + std::to_string(row.size()) + " columns");
        for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] >= p)
                throw ParseError(where + ".entries: value " +
                                 std::to_string(row[c]) +
                                 " is not a residue mod " + std::to_string(p));
            m.set(i, c, row[c]);
        }
    }
    return m;
}

inline json matrix_to_json(const FieldMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return {{"p", m.field().p()},
            {"rows", m.rows()},
            {"cols", m.cols()},
            {"entries", rows}};
}

// --- function tables (phi entries, table demands) ----------------------

inline FunctionTable table_from_json(const json& j, std::uint32_t q,
                                     std::size_t arity, const std::string& where) {
    if (j.contains("values"))
        return FunctionTable::explicit_table(
            q, arity, jdetail::column(j["values"], where + ".values"));
    if (!j.contains("named"))
        throw ParseError(where + ": table needs \"named\" or \"values\"");
    const std::string name = j["named"].get<std::string>();
    std::vector<int> args;
    if (j.contains("args")) args = jdetail::int_list(j["args"], where + ".args");
    try {
        if (name == "max") return FunctionTable::max_of(q, arity, args);
        if (name == "sum") return FunctionTable::sum_mod(q, arity, args);
        if (name == "coordinate")
            return FunctionTable::coordinate(
                q, arity,
                jdetail::number<int>(jdetail::require(j, "k", where), where + ".k"));
        if (name == "linear")
            return FunctionTable::linear(
                q, jdetail::column(jdetail::require(j, "coeffs", where),
                                   where + ".coeffs"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": unknown named table \"" + name + "\"");
}

inline json table_to_json(const FunctionTable& t) {
    switch (t.kind) {
    case FunctionTable::Kind::explicit_values: return {{"values", t.values}};
    case FunctionTable::Kind::max_of: return {{"named", "max"}, {"args", t.args}};
    case FunctionTable::Kind::sum_mod: return {{"named", "sum"}, {"args", t.args}};
    case FunctionTable::Kind::coordinate:
        return {{"named", "coordinate"}, {"k", t.coord}};
    case FunctionTable::Kind::linear:
        return {{"named", "linear"}, {"coeffs", t.coeffs}};
    }
    throw std::logic_error("table_to_json: bad kind");
}

// --- problems ---------------------------------------------------------

inline DemandSpec demand_from_json(const json& j, std::uint32_t q, std::size_t K,
                                   const std::string& where) {
    if (j.contains("linear"))
        return LinearDemand{jdetail::column(j["linear"], where + ".linear")};
    if (j.contains("named")) {
        const std::string name = j["named"].get<std::string>();
        if (name == "max") return NamedDemand{NamedDemand::Name::max, 0};
        if (name == "sum") return NamedDemand{NamedDemand::Name::sum, 0};
        if (name == "identity")
            return NamedDemand{NamedDemand::Name::identity,
                               jdetail::number<int>(jdetail::require(j, "k", where),
                                                    where + ".k")};
        throw ParseError(where + ": unknown named demand \"" + name + "\"");
    }
    if (j.contains("table")) {
        try {
            return TableDemand{table_from_json(j["table"], q, K, where + ".table")};
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ".table: " + e.what());
        }
    }
    throw ParseError(where + ": demand needs \"linear\", \"named\" or \"table\"");
}

inline json demand_to_json(const DemandSpec& d) {
    if (const auto* lin = std::get_if<LinearDemand>(&d))
        return {{"linear", lin->coeffs}};
    if (const auto* named = std::get_if<NamedDemand>(&d)) {
        switch (named->name) {
        case NamedDemand::Name::max: return {{"named", "max"}};
        case NamedDemand::Name::sum: return {{"named", "sum"}};
        case NamedDemand::Name::identity:
            return {{"named", "identity"}, {"k", named->k}};
        }
    }
    return {{"table", table_to_json(std::get<TableDemand>(d).table)}};
}

inline NetworkProblem problem_from_json(const json& j,
                                        const std::string& where = "problem") {
    NetworkProblem p;
    p.alphabet = jdetail::number<std::uint32_t>(jdetail::require(j, "q", where),
                                                where + ".q");
    for (const auto& v : jdetail::require(j, "nodes", where))
        p.nodes.push_back(jdetail::number<int>(v, where + ".nodes"));
    for (const auto& m : jdetail::require(j, "messages", where)) {
        p.messages.push_back(
            {jdetail::number<int>(jdetail::require(m, "k", where + ".messages"),
                                  where + ".messages.k"),
             jdetail::number<int>(jdetail::require(m, "node", where + ".messages"),
                                  where + ".messages.node")});
    }
    for (const auto& e : jdetail::require(j, "edges", where)) {
        p.edges.push_back(
            {jdetail::number<int>(jdetail::require(e, "id", where + ".edges"),
                                  where + ".edges.id"),
             jdetail::number<int>(jdetail::require(e, "tail", where + ".edges"),
                                  where + ".edges.tail"),
             jdetail::number<int>(jdetail::require(e, "head", where + ".edges"),
                                  where + ".edges.head")});
    }
    const std::size_t K = p.messages.size();
    std::size_t t = 0;
    for (const auto& s : jdetail::require(j, "sinks", where)) {
        ++t;
        const std::string sw = where + ".sinks[" + std::to_string(t) + "]";
        Sink sink;
        sink.node = jdetail::number<int>(jdetail::require(s, "node", sw), sw + ".node");
        if (s.contains("demand"))
            sink.demands.push_back(demand_from_json(s["demand"], p.alphabet, K,
                                                    sw + ".demand"));
        else if (s.contains("demands"))
            for (const auto& d : s["demands"])
                sink.demands.push_back(demand_from_json(d, p.alphabet, K,
                                                        sw + ".demands"));
        else
            throw ParseError(sw + ": needs \"demand\" or \"demands\"");
        p.sinks.push_back(std::move(sink));
    }
    return p;
}

inline json problem_to_json(const NetworkProblem& p) {
    json messages = json::array();
    for (const auto& m : p.messages)
        messages.push_back({{"k", m.k}, {"node", m.node}});
    json edges = json::array();
    for (const auto& e : p.edges)
        edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    json sinks = json::array();
    for (const auto& s : p.sinks) {
        json sink = {{"node", s.node}};
        if (s.demands.size() == 1)
            sink["demand"] = demand_to_json(s.demands.front());
        else {
            json ds = json::array();
            for (const auto& d : s.demands) ds.push_back(demand_to_json(d));
            sink["demands"] = std::move(ds);
        }
        sinks.push_back(std::move(sink));
    }
    return {{"q", p.alphabet}, {"nodes", p.nodes}, {"messages", messages},
            {"edges", edges}, {"sinks", sinks}};
}

inline NetworkProblem load_problem(const std::string& path) {
    return problem_from_json(load_json_file(path), path);
}

// --- linear codes -----------------------------------------------------

inline LinearNetworkCode code_from_json(const json& j,
                                        const std::string& where = "code") {
    const auto q = jdetail::number<std::uint32_t>(jdetail::require(j, "q", where),
                                                  where + ".q");
    const auto K = jdetail::number<std::size_t>(jdetail::require(j, "K", where),
                                                where + ".K");
    PrimeField field(q);
    LinearNetworkCode code{field, K, {}, {}, {}};
    for (const auto& [key, value] :
         jdetail::require(j, "globals", where).items()) {
        const EdgeRef ref = jdetail::edge_key(key, "et", where + ".globals");
        Column col = jdetail::column(value, where + ".globals." + key);
        if (col.size() != K)
            throw ParseError(where + ".globals." + key + ": expected length " +
                             std::to_string(K));
        for (auto v : col)
            if (v >= q)
                throw ParseError(where + ".globals." + key +
                                 ": entry not a residue mod " + std::to_string(q));
        if (ref.kind == EdgeRef::Kind::link)
            code.link_globals[ref.index] = std::move(col);
        else
            code.hat_globals[ref.index] = std::move(col);
    }
    if (j.contains("decoders")) {
        for (const auto& [key, value] : j["decoders"].items()) {
            const EdgeRef ref = jdetail::edge_key(key, "t", where + ".decoders");
            code.decoders[ref.index] =
                jdetail::column(value, where + ".decoders." + key);
        }
    }
    return code;
}

inline json code_to_json(const LinearNetworkCode& c) {
    json globals = json::object();
    for (const auto& [id, col] : c.link_globals)
        globals["e" + std::to_string(id)] = col;
    for (const auto& [t, col] : c.hat_globals)
        globals["t" + std::to_string(t)] = col;
    json out = {{"q", c.field.p()}, {"K", c.message_count}, {"globals", globals}};
    if (!c.decoders.empty()) {
        json decoders = json::object();
        for (const auto& [t, col] : c.decoders)
            decoders["t" + std::to_string(t)] = col;
        out["decoders"] = decoders;
    }
    return out;
}

inline LinearNetworkCode load_code(const std::string& path) {
    return code_from_json(load_json_file(path), path);
}

// --- matroids ---------------------------------------------------------

inline RankOracle matroid_from_json(const json& j,
                                    const std::string& where = "matroid") {
    const std::string kind =
        jdetail::require(j, "kind", where).get<std::string>();
    if (kind == "uniform") {
        const auto n = jdetail::number<std::size_t>(jdetail::require(j, "n", where),
                                                    where + ".n");
        const auto k = jdetail::number<std::size_t>(jdetail::require(j, "k", where),
                                                    where + ".k");
        return RankOracle::uniform(n, k);
    }
    if (kind == "vector")
        return RankOracle::vector_matroid(
            matrix_from_json(jdetail::require(j, "matrix", where), where + ".matrix"));
    if (kind == "explicit") {
        const auto n = jdetail::number<std::size_t>(jdetail::require(j, "n", where),
                                                    where + ".n");
        std::unordered_map<SubsetMask, std::size_t> ranks;
        for (const auto& [key, value] : jdetail::require(j, "ranks", where).items()) {
            SubsetMask mask = 0;
            try {
                mask = static_cast<SubsetMask>(std::stoul(key));
            } catch (const std::exception&) {
                throw ParseError(where + ".ranks: bad bitmask key \"" + key + "\"");
            }
            ranks[mask] = jdetail::number<std::size_t>(value, where + ".ranks." + key);
        }
        return RankOracle::explicit_table(n, std::move(ranks));
    }
    throw ParseError(where + ": unknown matroid kind \"" + kind + "\"");
}

inline json matroid_to_json(const RankOracle& m) {
    switch (m.kind()) {
    case RankOracle::Kind::uniform:
        return {{"kind", "uniform"}, {"n", m.ground_size()}, {"k", m.uniform_k()}};
    case RankOracle::Kind::vector_matroid:
        return {{"kind", "vector"}, {"matrix", matrix_to_json(m.matrix())}};
    case RankOracle::Kind::explicit_table: {
        json ranks = json::object();
        const SubsetMask full = (SubsetMask(1) << m.ground_size()) - 1;
        for (SubsetMask a = 0; a <= full; ++a)
            if (m.has_entry(a)) ranks[std::to_string(a)] = m.rank(a);
        return {{"kind", "explicit"}, {"n", m.ground_size()}, {"ranks", ranks}};
    }
    }
    throw std::logic_error("matroid_to_json: bad kind");
}

// --- network-matroid maps ----------------------------------------------

inline NetworkMatroidMap map_from_json(const json& j,
                                       const std::string& where = "map") {
    NetworkMatroidMap f;
    auto read = [&](const char* key, std::map<int, int>& into) {
        if (!j.contains(key)) return;
        for (const auto& [k, v] : j[key].items()) {
            int index = 0;
            try {
                index = std::stoi(k);
            } catch (const std::exception&) {
                throw ParseError(where + "." + key + ": bad index \"" + k + "\"");
            }
            into[index] =
                jdetail::number<int>(v, where + "." + key + "." + k);
        }
    };
    read("messages", f.messages);
    read("edges", f.edges);
    read("demands", f.demands);
    return f;
}

inline json map_to_json(const NetworkMatroidMap& f) {
    auto write = [](const std::map<int, int>& m) {
        json out = json::object();
        for (const auto& [k, v] : m) out[std::to_string(k)] = v;
        return out;
    };
    return {{"messages", write(f.messages)}, {"edges", write(f.edges)},
            {"demands", write(f.demands)}};
}

// --- phi assignments ----------------------------------------------------

inline PhiAssignment phi_from_json(const json& j, std::size_t K,
                                   const std::string& where = "phi") {
    PhiAssignment phi;
    phi.q = jdetail::number<std::uint32_t>(jdetail::require(j, "q", where),
                                           where + ".q");
    if (j.contains("K") &&
        jdetail::number<std::size_t>(j["K"], where + ".K") != K)
        throw ParseError(where + ".K: does not match the problem's message count");
    for (const auto& [key, value] : jdetail::require(j, "tables", where).items()) {
        const EdgeRef ref = jdetail::edge_key(key, "set", where + ".tables");
        phi.tables.emplace(ref, table_from_json(value, phi.q, K,
                                                where + ".tables." + key));
    }
    return phi;
}

inline json phi_to_json(const PhiAssignment& phi, std::size_t K) {
    json tables = json::object();
    for (const auto& [ref, table] : phi.tables)
        tables[ref.name()] = table_to_json(table);
    return {{"q", phi.q}, {"K", K}, {"tables", tables}};
}

// --- nonlinear codes ----------------------------------------------------

inline json nonlinear_code_to_json(const NonlinearCode& c, std::size_t K) {
    auto kernel = [](const TabulatedKernel& k) {
        json out = {{"arity", k.arity}, {"values", k.values}};
        if (!k.is_total()) {
            std::vector<int> defined(k.defined.size());
            for (std::size_t i = 0; i < k.defined.size(); ++i)
                defined[i] = k.defined[i] ? 1 : 0;
            out["defined"] = defined;
        }
        return out;
    };
    json locals = json::object();
    for (const auto& [id, k] : c.locals) locals["e" + std::to_string(id)] = kernel(k);
    json decoders = json::object();
    for (const auto& [t, k] : c.decoders)
        decoders["t" + std::to_string(t)] = kernel(k);
    return {{"q", c.q}, {"K", K}, {"nonlinear", true}, {"locals", locals},
            {"decoders", decoders}};
}

inline NonlinearCode nonlinear_code_from_json(const json& j,
                                              const std::string& where = "code") {
    NonlinearCode c;
    c.q = jdetail::number<std::uint32_t>(jdetail::require(j, "q", where),
                                         where + ".q");
    auto kernel = [&](const json& k, const std::string& kw) {
        const auto arity = jdetail::number<std::size_t>(
            jdetail::require(k, "arity", kw), kw + ".arity");
        auto values = jdetail::column(jdetail::require(k, "values", kw),
                                      kw + ".values");
        TabulatedKernel out;
        try {
            out = TabulatedKernel::total(c.q, arity, std::move(values));
        } catch (const std::invalid_argument& e) {
            throw ParseError(kw + ": " + e.what());
        }
        if (k.contains("defined")) {
            const auto defined = jdetail::int_list(k["defined"], kw + ".defined");
            if (defined.size() != out.defined.size())
                throw ParseError(kw + ".defined: length mismatch");
            for (std::size_t i = 0; i < defined.size(); ++i)
                out.defined[i] = defined[i] != 0;
        }
        return out;
    };
    for (const auto& [key, value] : jdetail::require(j, "locals", where).items()) {
        const EdgeRef ref = jdetail::edge_key(key, "e", where + ".locals");
        c.locals.emplace(ref.index, kernel(value, where + ".locals." + key));
    }
    for (const auto& [key, value] : jdetail::require(j, "decoders", where).items()) {
        const EdgeRef ref = jdetail::edge_key(key, "t", where + ".decoders");
        c.decoders.emplace(ref.index, kernel(value, where + ".decoders." + key));
    }
    return c;
}

} // namespace netcomp

#endif // NETCOMP_JSON_IO_HPP
