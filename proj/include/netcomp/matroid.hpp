#ifndef NETCOMP_MATROID_HPP
#define NETCOMP_MATROID_HPP

// Matroids as rank oracles: uniform matroids, vector matroids of a
// matrix, explicit rank tables, axiom checking and representation
// verification. Ground sets are 1-based; subsets travel as bitmasks
// (bit i-1 for element i) or as sorted element lists.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "netcomp/galois.hpp"

namespace netcomp {

using SubsetMask = std::uint32_t;

inline SubsetMask mask_of(const std::vector<int>& elements, std::size_t n) {
    SubsetMask m = 0;
    for (int e : elements) {
        if (e < 1 || static_cast<std::size_t>(e) > n)
            throw std::out_of_range("subset element " + std::to_string(e) +
                                    " outside ground set [1.." +
                                    std::to_string(n) + "]");
        m |= SubsetMask(1) << (e - 1);
    }
    return m;
}

inline std::vector<int> elements_of(SubsetMask m) {
    std::vector<int> out;
    for (int e = 1; m; ++e, m >>= 1)
        if (m & 1) out.push_back(e);
    return out;
}

inline std::string subset_name(SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

class RankOracle {
public:
    enum class Kind { uniform, vector_matroid, explicit_table };

    static RankOracle uniform(std::size_t n, std::size_t k) {
        RankOracle m;
        m.kind_ = Kind::uniform;
        m.n_ = n;
        m.uniform_k_ = k;
        return m;
    }

    static RankOracle vector_matroid(FieldMatrix matrix) {
        RankOracle m;
        m.kind_ = Kind::vector_matroid;
        m.n_ = matrix.cols();
        m.matrix_ = std::move(matrix);
        return m;
    }

    /// Sparse table keyed by bitmask; must be total over 2^n subsets.
    static RankOracle explicit_table(std::size_t n,
                                     std::unordered_map<SubsetMask, std::size_t> ranks) {
        if (n > 20)
            throw std::invalid_argument("explicit rank table: ground set capped at 20");
        RankOracle m;
        m.kind_ = Kind::explicit_table;
        m.n_ = n;
        m.table_ = std::move(ranks);
        return m;
    }

    Kind kind() const { return kind_; }
    std::size_t ground_size() const { return n_; }
    std::size_t uniform_k() const { return uniform_k_; }
    const FieldMatrix& matrix() const {
        if (kind_ != Kind::vector_matroid)
            throw std::logic_error("RankOracle: not a vector matroid");
        return *matrix_;
    }

    std::size_t rank(SubsetMask a) const {
        if (n_ < 32 && (a >> n_) != 0)
            throw std::out_of_range("rank: subset outside ground set");
        switch (kind_) {
        case Kind::uniform: {
            std::size_t card = static_cast<std::size_t>(__builtin_popcount(a));
            return std::min(card, uniform_k_);
        }
        case Kind::vector_matroid:
            return rank(elements_of(a));
        case Kind::explicit_table: {
            auto it = table_.find(a);
            if (it == table_.end())
                throw std::out_of_range("explicit rank table has no entry for " +
                                        subset_name(a));
            return it->second;
        }
        }
        throw std::logic_error("bad oracle kind");
    }

    /// Element-list entry point; duplicates collapse, so ground sets wider
    /// than the bitmask width still work for uniform and vector kinds.
    std::size_t rank(const std::vector<int>& elements) const {
        std::vector<int> set = elements;
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (int e : set)
            if (e < 1 || static_cast<std::size_t>(e) > n_)
                throw std::out_of_range("rank: element " + std::to_string(e) +
                                        " outside ground set [1.." +
                                        std::to_string(n_) + "]");
        switch (kind_) {
        case Kind::uniform:
            return std::min(set.size(), uniform_k_);
        case Kind::vector_matroid: {
            std::vector<std::size_t> idxs(set.begin(), set.end());
            return netcomp::rank(column_submatrix(*matrix_, idxs));
        }
        case Kind::explicit_table:
            return rank(mask_of(set, n_));
        }
        throw std::logic_error("bad oracle kind");
    }

    bool has_entry(SubsetMask a) const {
        return kind_ != Kind::explicit_table || table_.count(a) > 0;
    }

private:
    Kind kind_ = Kind::uniform;
    std::size_t n_ = 0;
    std::size_t uniform_k_ = 0;
    std::optional<FieldMatrix> matrix_;
    std::unordered_map<SubsetMask, std::size_t> table_;
};

inline std::size_t rank_of(const RankOracle& m, const std::vector<int>& a) {
    return m.rank(a);
}

inline bool is_independent(const RankOracle& m, const std::vector<int>& a) {
    return m.rank(a) == a.size();
}

inline std::size_t matroid_rank(const RankOracle& m) {
    std::vector<int> all(m.ground_size());
    for (std::size_t e = 0; e < all.size(); ++e) all[e] = static_cast<int>(e + 1);
    return m.rank(all);
}

struct AxiomViolation {
    std::string axiom; // "R1" | "R2" | "R3" | "Total"
    SubsetMask a = 0;
    SubsetMask b = 0;
    std::string detail;
};

/// Exhaustive R1-R3 check over all subset pairs; ground sets above 14
/// elements are rejected (the pair space is 4^n). At most the first 100
/// violations are reported, each with its witness subsets.
inline std::vector<AxiomViolation> check_rank_axioms(const RankOracle& m) {
    const std::size_t n = m.ground_size();
    if (n > 14)
        throw std::invalid_argument(
            "check_rank_axioms: ground set too large for exhaustive check");
    constexpr std::size_t kMaxReported = 100;
    std::vector<AxiomViolation> out;
    const SubsetMask full = (SubsetMask(1) << n) - 1;

    if (m.kind() == RankOracle::Kind::explicit_table) {
        for (SubsetMask a = 0; a <= full; ++a) {
            if (!m.has_entry(a)) {
                out.push_back({"Total", a, 0, "no rank for " + subset_name(a)});
                if (out.size() >= kMaxReported) return out;
            }
        }
        if (!out.empty()) return out;
    }

    std::vector<std::size_t> r(static_cast<std::size_t>(full) + 1);
    for (SubsetMask a = 0; a <= full; ++a) r[a] = m.rank(a);

    for (SubsetMask a = 0; a <= full; ++a) {
        const std::size_t card = static_cast<std::size_t>(__builtin_popcount(a));
        if (r[a] > card) {
            out.push_back({"R1", a, 0,
                           "r" + subset_name(a) + " = " + std::to_string(r[a]) +
                               " exceeds |A| = " + std::to_string(card)});
            if (out.size() >= kMaxReported) return out;
        }
    }
    for (SubsetMask a = 0; a <= full; ++a) {
        for (SubsetMask b = 0; b <= full; ++b) {
            if ((a & b) == a && r[a] > r[b]) { // A subset of B
                out.push_back({"R2", a, b,
                               "r" + subset_name(a) + " = " + std::to_string(r[a]) +
                                   " > r" + subset_name(b) + " = " +
                                   std::to_string(r[b])});
                if (out.size() >= kMaxReported) return out;
            }
            if (r[a | b] + r[a & b] > r[a] + r[b]) {
                out.push_back({"R3", a, b,
                               "r(A∪B)+r(A∩B) = " +
                                   std::to_string(r[a | b] + r[a & b]) +
                                   " > r(A)+r(B) = " + std::to_string(r[a] + r[b])});
                if (out.size() >= kMaxReported) return out;
            }
        }
    }
    return out;
}

/// A claimed representation: matrix columns assigned to ground elements
/// through the bijection phi (phi[e-1] = 1-based column index).
struct RepresentationClaim {
    RankOracle matroid;
    FieldMatrix matrix;
    std::vector<std::size_t> phi;

    static std::vector<std::size_t> identity_map(std::size_t n) {
        std::vector<std::size_t> phi(n);
        for (std::size_t i = 0; i < n; ++i) phi[i] = i + 1;
        return phi;
    }
};

struct RepresentationVerdict {
    bool ok = true;
    SubsetMask witness = 0; // first mismatching subset when !ok
    std::size_t matrix_rank = 0;
    std::size_t matroid_rank = 0;
    std::string detail;
};

/// Checks rank[v_phi(A)] = r(A) for every subset, enumerating by
/// ascending cardinality and then ascending bitmask, short-circuiting at
/// the first mismatch.
inline RepresentationVerdict is_representation(const RepresentationClaim& claim) {
    const std::size_t n = claim.matroid.ground_size();
    if (n > 20)
        throw std::invalid_argument(
            "is_representation: ground set too large for exhaustive check");
    if (claim.matrix.cols() != n)
        throw std::invalid_argument("is_representation: matrix has " +
                                    std::to_string(claim.matrix.cols()) +
                                    " columns for a ground set of " +
                                    std::to_string(n));
    if (claim.phi.size() != n)
        throw std::invalid_argument("is_representation: phi is not total");
    std::vector<bool> hit(n, false);
    for (auto c : claim.phi) {
        if (c < 1 || c > n || hit[c - 1])
            throw std::invalid_argument("is_representation: phi is not a bijection");
        hit[c - 1] = true;
    }

    RepresentationVerdict verdict;
    verdict.matrix_rank = rank(claim.matrix);
    verdict.matroid_rank = matroid_rank(claim.matroid);
    const SubsetMask full = n >= 32 ? ~SubsetMask(0) : (SubsetMask(1) << n) - 1;
    for (std::size_t card = 0; card <= n; ++card) {
        for (SubsetMask a = 0; a <= full; ++a) {
            if (static_cast<std::size_t>(__builtin_popcount(a)) != card) continue;
            std::vector<std::size_t> cols;
            for (std::size_t e = 1; e <= n; ++e)
                if (a & (SubsetMask(1) << (e - 1))) cols.push_back(claim.phi[e - 1]);
            const std::size_t matrix_r = rank(column_submatrix(claim.matrix, cols));
            const std::size_t matroid_r = claim.matroid.rank(a);
            if (matrix_r != matroid_r) {
                verdict.ok = false;
                verdict.witness = a;
                verdict.detail = "columns of " + subset_name(a) + " have rank " +
                                 std::to_string(matrix_r) + ", matroid says " +
                                 std::to_string(matroid_r);
                return verdict;
            }
        }
    }
    return verdict;
}

} // namespace netcomp

#endif // NETCOMP_MATROID_HPP
