#include "multi_index.hpp"

#include "errors.hpp"

#include <algorithm>
#include <string>

namespace semiwave {

int grade(const MultiIndex& j) {
    int s = 0;
    for (int e : j) s += e;
    return s;
}

double factorial_of(const MultiIndex& j) {
    double f = 1.0;
    for (int e : j)
        for (int k = 2; k <= e; ++k) f *= k;
    return f;
}

namespace {

// Emit all multi-indices of dimension d and exact grade g, lexicographically
// largest first: the leading entry runs from g down to 0.
void emit_grade(int d, int g, MultiIndex& scratch, int pos, std::vector<MultiIndex>& out) {
    if (pos == d - 1) {
        scratch[static_cast<std::size_t>(pos)] = g;
        out.push_back(scratch);
        return;
    }
    for (int e = g; e >= 0; --e) {
        scratch[static_cast<std::size_t>(pos)] = e;
        emit_grade(d, g - e, scratch, pos + 1, out);
    }
}

} // namespace

BasisIndexSet BasisIndexSet::upto(int dim, int cap) {
    if (dim < 1) throw_invalid("BasisIndexSet: dimension must be >= 1");
    if (cap < 0) throw_invalid("BasisIndexSet: cap must be >= 0");
    BasisIndexSet s;
    s.dim_ = dim;
    s.cap_ = cap;
    MultiIndex scratch(static_cast<std::size_t>(dim), 0);
    s.grade_begin_.reserve(static_cast<std::size_t>(cap) + 2);
    for (int g = 0; g <= cap; ++g) {
        s.grade_begin_.push_back(static_cast<int>(s.indices_.size()));
        emit_grade(dim, g, scratch, 0, s.indices_);
    }
    s.grade_begin_.push_back(static_cast<int>(s.indices_.size()));
    s.ordinal_.reserve(s.indices_.size());
    for (std::size_t i = 0; i < s.indices_.size(); ++i)
        s.ordinal_.emplace(s.indices_[i], static_cast<int>(i));
    return s;
}

int BasisIndexSet::find(const MultiIndex& j) const {
    auto it = ordinal_.find(j);
    return it == ordinal_.end() ? -1 : it->second;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw_numeric("integer overflow in combinatorial counter (add)");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw_numeric("integer overflow in combinatorial counter (mul)");
    return r;
}

std::uint64_t binomial_checked(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        r = checked_mul(r, static_cast<std::uint64_t>(n - k + i));
        r /= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t count_G(int p, int n, int q) {
    if (p < 1) throw_invalid("count_G: p must be >= 1");
    if (q < 1) throw_invalid("count_G: q must be >= 1");
    if (n < 0) throw_invalid("count_G: n must be >= 0");
    if (n < q || static_cast<long long>(n) > static_cast<long long>(q) * p) return 0;
    // DP over the number of parts.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int parts = 1; parts <= q; ++parts) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n) + 1, 0);
        for (int s = parts; s <= n; ++s) {
            std::uint64_t acc = 0;
            for (int m = 1; m <= std::min(p, s); ++m)
                acc = checked_add(acc, row[static_cast<std::size_t>(s - m)]);
            next[static_cast<std::size_t>(s)] = acc;
        }
        row.swap(next);
    }
    return row[static_cast<std::size_t>(n)];
}

std::uint64_t count_F(int d, int p, int n, int q) {
    if (d < 1) throw_invalid("count_F: d must be >= 1");
    if (p < 1) throw_invalid("count_F: p must be >= 1");
    if (q < 1) throw_invalid("count_F: q must be >= 1");
    if (n < 0) throw_invalid("count_F: n must be >= 0");
    if (n < q || static_cast<long long>(n) > static_cast<long long>(q) * p) return 0;
    // Number of d-dimensional multi-indices of order w is C(w+d-1, d-1).
    std::vector<std::uint64_t> mult(static_cast<std::size_t>(p) + 1, 0);
    for (int w = 1; w <= p; ++w) mult[static_cast<std::size_t>(w)] = binomial_checked(w + d - 1, d - 1);
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int parts = 1; parts <= q; ++parts) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n) + 1, 0);
        for (int s = parts; s <= n; ++s) {
            std::uint64_t acc = 0;
            for (int w = 1; w <= std::min(p, s); ++w)
                acc = checked_add(acc,
                                  checked_mul(mult[static_cast<std::size_t>(w)],
                                              row[static_cast<std::size_t>(s - w)]));
            next[static_cast<std::size_t>(s)] = acc;
        }
        row.swap(next);
    }
    return row[static_cast<std::size_t>(n)];
}

} // namespace semiwave
