#ifndef NETCOMP_FUNCTABLE_HPP
#define NETCOMP_FUNCTABLE_HPP

// Maps from value tuples in [0,q)^arity to a single symbol in [0,q).
// Used for sink demands, edge kernels Phi_e, local kernels and decoders
// in the nonlinear setting. The alphabet is plain integer residues; only
// the "linear" kind assumes modular arithmetic and "max" only needs the
// natural order.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcomp {

/// q^e with an overflow guard; tuple spaces beyond 2^62 are rejected.
inline std::uint64_t pow_u64(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / (q == 0 ? 1 : q))
            throw std::overflow_error("pow_u64: tuple space too large");
        r *= q;
    }
    return r;
}

/// Canonical tuple index: x_1 is the most significant base-q digit.
inline std::uint64_t tuple_index(std::span<const std::uint32_t> x, std::uint32_t q) {
    std::uint64_t idx = 0;
    for (auto v : x) idx = idx * q + v;
    return idx;
}

inline std::vector<std::uint32_t> decode_tuple(std::uint64_t idx, std::uint32_t q,
                                               std::size_t n) {
    std::vector<std::uint32_t> x(n);
    for (std::size_t i = n; i-- > 0;) {
        x[i] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
    return x;
}

struct FunctionTable {
    enum class Kind { explicit_values, max_of, sum_mod, coordinate, linear };

    Kind kind = Kind::explicit_values;
    std::uint32_t q = 2;
    std::size_t arity = 0;
    std::vector<std::uint32_t> values; // explicit_values: q^arity entries
    std::vector<int> args;             // max_of / sum_mod: 1-based positions
    int coord = 0;                     // coordinate: 1-based position
    std::vector<std::uint32_t> coeffs; // linear: length-arity coefficients

    static FunctionTable explicit_table(std::uint32_t q, std::size_t arity,
                                        std::vector<std::uint32_t> values) {
        FunctionTable t;
        t.kind = Kind::explicit_values;
        t.q = q;
        t.arity = arity;
        t.values = std::move(values);
        if (t.values.size() != pow_u64(q, arity))
            throw std::invalid_argument("FunctionTable: expected q^arity values");
        for (auto v : t.values)
            if (v >= q) throw std::invalid_argument("FunctionTable: value out of alphabet");
        return t;
    }

    /// max over the selected argument positions (all of them if empty).
    static FunctionTable max_of(std::uint32_t q, std::size_t arity,
                                std::vector<int> args = {}) {
        FunctionTable t;
        t.kind = Kind::max_of;
        t.q = q;
        t.arity = arity;
        t.args = normalize_args(std::move(args), arity);
        return t;
    }

    static FunctionTable sum_mod(std::uint32_t q, std::size_t arity,
                                 std::vector<int> args = {}) {
        FunctionTable t;
        t.kind = Kind::sum_mod;
        t.q = q;
        t.arity = arity;
        t.args = normalize_args(std::move(args), arity);
        return t;
    }

    static FunctionTable coordinate(std::uint32_t q, std::size_t arity, int k) {
        FunctionTable t;
        t.kind = Kind::coordinate;
        t.q = q;
        t.arity = arity;
        t.coord = k;
        if (k < 1 || static_cast<std::size_t>(k) > arity)
            throw std::invalid_argument("FunctionTable: coordinate out of range");
        return t;
    }

    static FunctionTable linear(std::uint32_t q, std::vector<std::uint32_t> coeffs) {
        FunctionTable t;
        t.kind = Kind::linear;
        t.q = q;
        t.arity = coeffs.size();
        t.coeffs = std::move(coeffs);
        for (auto& c : t.coeffs) c %= q;
        return t;
    }

    std::uint32_t eval(std::span<const std::uint32_t> x) const {
        if (x.size() != arity)
            throw std::invalid_argument("FunctionTable::eval: arity mismatch");
        switch (kind) {
        case Kind::explicit_values:
            return values[tuple_index(x, q)];
        case Kind::max_of: {
            std::uint32_t m = 0;
            for (int a : args) m = std::max(m, x[a - 1]);
            return m;
        }
        case Kind::sum_mod: {
            std::uint64_t s = 0;
            for (int a : args) s += x[a - 1];
            return static_cast<std::uint32_t>(s % q);
        }
        case Kind::coordinate:
            return x[coord - 1];
        case Kind::linear: {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < arity; ++i)
                s += static_cast<std::uint64_t>(coeffs[i]) * x[i];
            return static_cast<std::uint32_t>(s % q);
        }
        }
        throw std::logic_error("FunctionTable: bad kind");
    }

    /// Tabulated form; the enumeration order is the canonical tuple index.
    std::vector<std::uint32_t> tabulate() const {
        const std::uint64_t total = pow_u64(q, arity);
        std::vector<std::uint32_t> out(total);
        std::vector<std::uint32_t> x(arity, 0);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            out[idx] = eval(x);
            for (std::size_t i = arity; i-- > 0;) {
                if (++x[i] < q) break;
                x[i] = 0;
            }
        }
        return out;
    }

private:
    static std::vector<int> normalize_args(std::vector<int> args, std::size_t arity) {
        if (args.empty()) {
            args.resize(arity);
            for (std::size_t i = 0; i < arity; ++i) args[i] = static_cast<int>(i + 1);
        }
        for (int a : args)
            if (a < 1 || static_cast<std::size_t>(a) > arity)
                throw std::invalid_argument("FunctionTable: argument position out of range");
        return args;
    }
};

} // namespace netcomp

#endif // NETCOMP_FUNCTABLE_HPP
