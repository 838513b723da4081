#include "hl/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hl {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)), degree_(0) {
    if (entries_.empty()) {
        throw std::invalid_argument("Exponent: dimension must be >= 1");
    }
    for (int e : entries_) {
        if (e < 0) {
            throw std::invalid_argument("Exponent: entries must be nonnegative");
        }
        degree_ += e;
    }
}

IndexTuple::IndexTuple(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
    if (n_ < 1) {
        throw std::invalid_argument("IndexTuple: dimension must be >= 1");
    }
    for (int v : indices_) {
        if (v < 1 || v > n_) {
            throw std::invalid_argument("IndexTuple: index out of range [1, n]");
        }
    }
}

bool IndexTuple::is_canonical() const {
    return std::is_sorted(indices_.begin(), indices_.end());
}

IndexTuple IndexTuple::canonical() const {
    std::vector<int> sorted = indices_;
    std::sort(sorted.begin(), sorted.end());
    return IndexTuple(std::move(sorted), n_);
}

std::int64_t factorial(int k) {
    static constexpr std::int64_t table[21] = {
        1LL, 1LL, 2LL, 6LL, 24LL, 120LL, 720LL, 5040LL, 40320LL, 362880LL,
        3628800LL, 39916800LL, 479001600LL, 6227020800LL, 87178291200LL,
        1307674368000LL, 20922789888000LL, 355687428096000LL,
        6402373705728000LL, 121645100408832000LL, 2432902008176640000LL};
    if (k < 0 || k > 20) {
        throw std::overflow_error("factorial: argument outside exact 64-bit range [0, 20]");
    }
    return table[k];
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    __int128 r = 1;
    for (std::int64_t j = 1; j <= b; ++j) {
        r = r * (a - b + j) / j;
        if (r > static_cast<__int128>(INT64_MAX)) {
            throw std::overflow_error("binomial: value exceeds 64 bits");
        }
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t multinomial(int m, const Exponent& alpha) {
    if (alpha.degree() != m) {
        throw std::invalid_argument("multinomial: |alpha| = " + std::to_string(alpha.degree()) +
                                    " does not match m = " + std::to_string(m));
    }
    if (m > 20) {
        throw std::overflow_error("multinomial: m > 20 exceeds exact 64-bit range; "
                                  "use log_multinomial");
    }
    std::int64_t r = factorial(m);
    for (int e : alpha.entries()) r /= factorial(e);
    return r;
}

double log_multinomial(int m, const Exponent& alpha) {
    if (alpha.degree() != m) {
        throw std::invalid_argument("log_multinomial: degree mismatch");
    }
    double r = std::lgamma(static_cast<double>(m) + 1.0);
    for (int e : alpha.entries()) r -= std::lgamma(static_cast<double>(e) + 1.0);
    return r;
}

std::int64_t exponent_count(int m, int n) {
    if (m < 0 || n < 1) {
        throw std::invalid_argument("exponent_count: need m >= 0, n >= 1");
    }
    // C(n+m-1, m) with saturation so callers can compare against a cap.
    __int128 r = 1;
    for (int j = 1; j <= m; ++j) {
        r = r * (n - 1 + j) / j;
        if (r > static_cast<__int128>(INT64_MAX)) return INT64_MAX;
    }
    return static_cast<std::int64_t>(r);
}

std::vector<Exponent> enumerate_exponents(int m, int n, std::int64_t cap) {
    if (m < 0 || n < 1) {
        throw std::invalid_argument("enumerate_exponents: need m >= 0, n >= 1");
    }
    const std::int64_t count = exponent_count(m, n);
    if (count > cap) {
        throw std::length_error("enumerate_exponents: C(n+m-1,m) = " + std::to_string(count) +
                                " exceeds cap " + std::to_string(cap));
    }
    std::vector<Exponent> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[0] = m;
    while (true) {
        out.emplace_back(a);
        // Move one unit leftward past the rightmost positive entry before
        // the last slot, dumping everything to its right onto the next slot.
        int j = n - 2;
        while (j >= 0 && a[static_cast<std::size_t>(j)] == 0) --j;
        if (j < 0) break;
        int tail = 0;
        for (int t = j + 1; t < n; ++t) {
            tail += a[static_cast<std::size_t>(t)];
            a[static_cast<std::size_t>(t)] = 0;
        }
        a[static_cast<std::size_t>(j)] -= 1;
        a[static_cast<std::size_t>(j + 1)] = tail + 1;
    }
    return out;
}

std::int64_t orbit_size(const IndexTuple& i) {
    const int m = i.order();
    std::vector<int> counts(static_cast<std::size_t>(i.dimension()), 0);
    for (int k = 0; k < m; ++k) counts[static_cast<std::size_t>(i[k] - 1)]++;
    std::int64_t r = factorial(m);
    for (int c : counts) r /= factorial(c);
    return r;
}

Exponent exponent_of(const IndexTuple& i) {
    std::vector<int> counts(static_cast<std::size_t>(i.dimension()), 0);
    for (int k = 0; k < i.order(); ++k) counts[static_cast<std::size_t>(i[k] - 1)]++;
    return Exponent(std::move(counts));
}

IndexTuple canonical_index(const Exponent& alpha) {
    std::vector<int> indices;
    indices.reserve(static_cast<std::size_t>(alpha.degree()));
    for (int v = 0; v < alpha.dimension(); ++v) {
        for (int c = 0; c < alpha[v]; ++c) indices.push_back(v + 1);
    }
    return IndexTuple(std::move(indices), alpha.dimension());
}

}  // namespace hl
