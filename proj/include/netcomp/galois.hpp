#ifndef NETCOMP_GALOIS_HPP
#define NETCOMP_GALOIS_HPP

// Exact arithmetic and linear algebra over prime fields GF(p).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netcomp {

/// Prime field GF(p). The modulus is capped at 65521 (the largest 16-bit
/// prime) so that products of residues fit comfortably in 64-bit
/// intermediates; every result is reduced before it is stored.
class PrimeField {
public:
    static constexpr std::uint32_t kMaxModulus = 65521;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p > kMaxModulus || !is_prime(p))
            throw std::invalid_argument("PrimeField: " + std::to_string(p) +
                                        " is not a prime in [2, 65521]");
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }

    /// Multiplicative inverse by extended Euclid; throws on 0.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of 0");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a % p_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return reduce(t);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

/// A length-m column of residues; the companion of FieldMatrix.
using Column = std::vector<std::uint32_t>;

/// Dense row-major matrix over a prime field. Values are immutable in
/// spirit: operations return fresh matrices, nothing mutates in place
/// except construction helpers.
class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                std::vector<std::uint32_t> entries)
        : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("FieldMatrix: entry count mismatch");
        for (auto& e : entries_) e %= field_.p();
    }

    /// Convenience literal: rows given as initializer lists.
    static FieldMatrix from_rows(
        PrimeField field,
        std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
        std::size_t m = rows.size();
        std::size_t n = m == 0 ? 0 : rows.begin()->size();
        FieldMatrix a(field, m, n);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n)
                throw std::invalid_argument("FieldMatrix: ragged rows");
            std::size_t j = 0;
            for (auto v : row) a.set(i, j++, v % field.p());
            ++i;
        }
        return a;
    }

    static FieldMatrix from_columns(PrimeField field, std::size_t rows,
                                    const std::vector<Column>& cols) {
        FieldMatrix a(field, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw std::invalid_argument("FieldMatrix: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) a.set(i, j, cols[j][i]);
        }
        return a;
    }

    static FieldMatrix identity(PrimeField field, std::size_t n) {
        FieldMatrix a(field, n, n);
        for (std::size_t i = 0; i < n; ++i) a.set(i, i, 1);
        return a;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// 0-based entry access.
    std::uint32_t at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::uint32_t v) {
        entries_[r * cols_ + c] = v % field_.p();
    }

    /// 1-based column extraction, matching the paper's column labels.
    Column column(std::size_t j) const {
        if (j < 1 || j > cols_)
            throw std::out_of_range("FieldMatrix::column: index out of range");
        Column c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j - 1);
        return c;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
        }
    }

    bool operator==(const FieldMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               entries_ == o.entries_;
    }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> entries_;
};

/// Columns selected by 1-based indices; duplicates and order preserved.
inline FieldMatrix column_submatrix(const FieldMatrix& a,
                                    const std::vector<std::size_t>& idxs) {
    FieldMatrix out(a.field(), a.rows(), idxs.size());
    for (std::size_t j = 0; j < idxs.size(); ++j) {
        if (idxs[j] < 1 || idxs[j] > a.cols())
            throw std::out_of_range("column_submatrix: index " +
                                    std::to_string(idxs[j]) + " out of range");
        for (std::size_t i = 0; i < a.rows(); ++i)
            out.set(i, j, a.at(i, idxs[j] - 1));
    }
    return out;
}

inline FieldMatrix add(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shape or field mismatch");
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
    return out;
}

inline FieldMatrix scale(std::uint32_t c, const FieldMatrix& a) {
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.field().mul(c % a.field().p(), a.at(i, j)));
    return out;
}

inline FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field() != b.field() || a.cols() != b.rows())
        throw std::invalid_argument("matmul: shape or field mismatch");
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            out.set(i, j, static_cast<std::uint32_t>(acc % a.field().p()));
        }
    }
    return out;
}

inline FieldMatrix transpose(const FieldMatrix& a) {
    FieldMatrix out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
    return out;
}

/// Column-span dimension by fraction-free elimination. Pivots are chosen
/// deterministically: columns left to right, first nonzero row below the
/// current pivot row.
inline std::size_t rank(const FieldMatrix& a) {
    FieldMatrix w = a;
    const PrimeField& f = w.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t piv = r;
        while (piv < w.rows() && w.at(piv, c) == 0) ++piv;
        if (piv == w.rows()) continue;
        w.swap_rows(r, piv);
        const std::uint32_t inv = f.inv(w.at(r, c));
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            const std::uint32_t factor = f.mul(w.at(i, c), inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < w.cols(); ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(r, j))));
        }
        ++r;
    }
    return r;
}

/// Some x with A·x = b, or nullopt if b is outside the column span.
/// Free variables (non-pivot columns under left-to-right pivoting) are
/// zero, so the answer is reproducible.
inline std::optional<Column> solve_right(const FieldMatrix& a, const Column& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_right: dimension mismatch");
    const PrimeField& f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    // Augmented working copy [A | b], reduced to RREF over A's columns.
    FieldMatrix w(f, m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.set(i, j, a.at(i, j));
        w.set(i, n, b[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && w.at(piv, c) == 0) ++piv;
        if (piv == m) continue;
        w.swap_rows(r, piv);
        const std::uint32_t inv = f.inv(w.at(r, c));
        for (std::size_t j = c; j <= n; ++j) w.set(r, j, f.mul(w.at(r, j), inv));
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const std::uint32_t factor = w.at(i, c);
            for (std::size_t j = c; j <= n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(r, j))));
        }
        pivot_col.push_back(c);
        ++r;
    }
    // Inconsistent iff a zero row of A maps to a nonzero b entry.
    for (std::size_t i = r; i < m; ++i)
        if (w.at(i, n) != 0) return std::nullopt;
    Column x(n, 0);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = w.at(k, n);
    return x;
}

/// Maximal linearly independent subset of rows, first wins. Column
/// dependencies are untouched, so the result carries the same vector
/// matroid as the input.
inline FieldMatrix full_rank_row_basis(const FieldMatrix& a) {
    const PrimeField& f = a.field();
    const std::size_t n = a.cols();
    std::vector<Column> basis;           // echelon rows, leading entry 1
    std::vector<std::size_t> basis_lead; // leading column of each
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Column v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = a.at(i, j);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::uint32_t factor = v[basis_lead[k]];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.sub(v[j], f.mul(factor, basis[k][j]));
        }
        std::size_t lead = n;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0) { lead = j; break; }
        if (lead == n) continue; // dependent row
        const std::uint32_t inv = f.inv(v[lead]);
        for (std::size_t j = 0; j < n; ++j) v[j] = f.mul(v[j], inv);
        // keep basis rows sorted by leading column so reduction stays simple
        std::size_t pos = 0;
        while (pos < basis_lead.size() && basis_lead[pos] < lead) ++pos;
        basis.insert(basis.begin() + pos, v);
        basis_lead.insert(basis_lead.begin() + pos, lead);
        kept.push_back(i);
    }
    FieldMatrix out(f, kept.size(), n);
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, a.at(kept[i], j));
    return out;
}

inline Column add_columns(const PrimeField& f, const Column& a, const Column& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("add_columns: length mismatch");
    Column out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

inline Column scale_column(const PrimeField& f, std::uint32_t c, const Column& a) {
    Column out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c % f.p(), a[i]);
    return out;
}

/// Unit column epsilon_{k,n} (1-based position k).
inline Column unit_column(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) throw std::out_of_range("unit_column: bad position");
    Column c(n, 0);
    c[k - 1] = 1;
    return c;
}

inline std::string to_string(const Column& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

inline std::string to_string(const FieldMatrix& a) {
    std::string s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) s += " ";
            s += std::to_string(a.at(i, j));
        }
        s += "\n";
    }
    return s;
}

} // namespace netcomp

#endif // NETCOMP_GALOIS_HPP
