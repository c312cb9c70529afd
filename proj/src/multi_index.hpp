#ifndef SEMIWAVE_MULTI_INDEX_HPP
#define SEMIWAVE_MULTI_INDEX_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace semiwave {

/// A d-tuple of non-negative integers with the usual conventions
/// |j| = sum of entries, j! = product of factorials.
using MultiIndex = std::vector<int>;

int grade(const MultiIndex& j);
double factorial_of(const MultiIndex& j);

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& j) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ j.size();
        for (int e : j) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// All multi-indices of dimension d with |j| <= N, ordered by grade and
/// lexicographically (largest first) within a grade. Ordinal 0 is the zero
/// index. The order is deterministic across runs.
class BasisIndexSet {
public:
    static BasisIndexSet upto(int dim, int cap);

    int dim() const { return dim_; }
    int cap() const { return cap_; }
    int size() const { return static_cast<int>(indices_.size()); }

    const MultiIndex& at(int ordinal) const { return indices_[static_cast<std::size_t>(ordinal)]; }

    /// Ordinal of j, or -1 when |j| > cap (or j has a negative entry).
    int find(const MultiIndex& j) const;

    /// First ordinal of grade g (== size() when g == cap+1).
    int grade_begin(int g) const { return grade_begin_[static_cast<std::size_t>(g)]; }
    int grade_end(int g) const { return grade_begin_[static_cast<std::size_t>(g) + 1]; }

private:
    BasisIndexSet() = default;
    int dim_ = 0;
    int cap_ = 0;
    std::vector<MultiIndex> indices_;
    std::vector<int> grade_begin_;
    std::unordered_map<MultiIndex, int, MultiIndexHash> ordinal_;
};

/// Number of compositions n = m_1 + ... + m_q with integer parts 1 <= m_i <= p.
/// Zero when n < q or n > q*p. Overflow of 64-bit intermediate values is a
/// hard error, never silent.
std::uint64_t count_G(int p, int n, int q);

/// d-dimensional analogue: compositions of n into q multi-index factors with
/// 1 <= |m_i| <= p, each factor counted with the number of d-dimensional
/// multi-indices of its order.
std::uint64_t count_F(int d, int p, int n, int q);

/// Binomial coefficient with overflow detection.
std::uint64_t binomial_checked(int n, int k);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

} // namespace semiwave

#endif
