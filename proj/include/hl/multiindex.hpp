#pragma once

#include <cstdint>
#include <vector>

namespace hl {

// Multi-index alpha = (a_1,...,a_n) of nonnegative integers with cached
// total degree m = |alpha|.  Immutable after construction.
class Exponent {
public:
    explicit Exponent(std::vector<int> entries);

    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Exponent& other) const { return entries_ == other.entries_; }
    bool operator<(const Exponent& other) const { return entries_ < other.entries_; }

private:
    std::vector<int> entries_;
    int degree_;
};

// Tuple i = (i_1,...,i_m) of variable indices, 1-based, each in {1,...,n}.
// Canonical form is nondecreasing.
class IndexTuple {
public:
    IndexTuple(std::vector<int> indices, int n);

    int order() const { return static_cast<int>(indices_.size()); }
    int dimension() const { return n_; }
    int operator[](int k) const { return indices_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& indices() const { return indices_; }

    bool is_canonical() const;
    IndexTuple canonical() const;

    bool operator==(const IndexTuple& other) const {
        return n_ == other.n_ && indices_ == other.indices_;
    }

private:
    std::vector<int> indices_;
    int n_;
};

// Exact 64-bit factorial, k <= 20.
std::int64_t factorial(int k);

// Exact binomial coefficient; throws std::overflow_error if the value does
// not fit in 64 bits.
std::int64_t binomial(std::int64_t a, std::int64_t b);

// m! / (a_1! ... a_n!), exact for m <= 20.  Requires |alpha| = m.
std::int64_t multinomial(int m, const Exponent& alpha);

// log of the multinomial coefficient via lgamma; valid for any m where the
// exact form would overflow.
double log_multinomial(int m, const Exponent& alpha);

// Number of exponents of degree m in n variables, C(n+m-1, m).
std::int64_t exponent_count(int m, int n);

// All exponents of degree m in n variables, first-variable-heavy order:
// (m,0,...,0), ..., (0,...,0,m).  Throws std::length_error when the count
// exceeds cap.
std::vector<Exponent> enumerate_exponents(int m, int n,
                                          std::int64_t cap = 10'000'000);

// |i|: number of distinct permutations of the tuple, m!/prod(mult_v!).
std::int64_t orbit_size(const IndexTuple& i);

// Occurrence counts of each variable in i.
Exponent exponent_of(const IndexTuple& i);

// Nondecreasing tuple with alpha_v copies of v.  Inverse of exponent_of on
// canonical tuples.
IndexTuple canonical_index(const Exponent& alpha);

}  // namespace hl
