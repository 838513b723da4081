#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hl/multiindex.hpp"

namespace hl {

enum class Field { real, complex };

// m-homogeneous polynomial in n variables, sparse map from exponent to
// coefficient.  Complex scalars are stored as double pairs; a real-field
// polynomial has all imaginary parts exactly zero.  Immutable after
// construction and safe to share across threads.
class HomoPoly {
public:
    struct Term {
        std::vector<int> alpha;       // length n, entries sum to m
        std::complex<double> coeff;   // never exactly zero in stored form
    };

    HomoPoly(Field field, int n, int m, std::vector<Term> terms);

    Field field() const { return field_; }
    bool is_real() const { return field_ == Field::real; }
    int dimension() const { return n_; }
    int degree() const { return m_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient at alpha, zero when absent.
    std::complex<double> coefficient(const std::vector<int>& alpha) const;

    // Real-field evaluation at a real point.
    double evaluate(std::span<const double> x) const;

    // Complex-field evaluation.  Real-field polynomials reject complex
    // points; complexify first.
    std::complex<double> evaluate(std::span<const std::complex<double>> z) const;

    // Value and gradient in one pass (real field).
    double evaluate_gradient(std::span<const double> x, std::vector<double>& grad) const;

    // Value and holomorphic gradient dP/dz_i (complex field).
    std::complex<double> evaluate_gradient(std::span<const std::complex<double>> z,
                                           std::vector<std::complex<double>>& grad) const;

    bool operator==(const HomoPoly& other) const;

private:
    std::complex<double> eval_impl(std::span<const std::complex<double>> z) const;

    Field field_;
    int n_;
    int m_;
    std::vector<Term> terms_;  // sorted by exponent
};

// Symmetric m-linear form associated with a polynomial, realized as an
// accessor over the sparse coefficients (never materialized as a tensor).
class MultilinearView {
public:
    explicit MultilinearView(const HomoPoly& p) : poly_(&p) {}

    const HomoPoly& source() const { return *poly_; }
    int order() const { return poly_->degree(); }

    // L(e_{i_1}, ..., e_{i_m}) = a_alpha / multinomial(m, alpha) with
    // alpha = exponent_of(i).  Invariant under permutations of i.
    std::complex<double> coefficient(const IndexTuple& i) const;

private:
    const HomoPoly* poly_;
};

std::complex<double> polar_coefficient(const HomoPoly& p, const IndexTuple& i);

// Diagonal restriction x -> L(x,...,x); exact inverse of the polar map.
HomoPoly restrict_diagonal(const MultilinearView& view);

// L evaluated at k distinct points with multiplicities (m_1,...,m_k),
// sum m_j = m.  Expands each sparse term of the source polynomial in
// auxiliary variables and extracts one mixed coefficient, so the cost is
// O(term_count * poly(m)) rather than n^m.
std::complex<double> polar_at_repeated(const HomoPoly& p,
                                       std::span<const int> multiplicities,
                                       const std::vector<std::vector<std::complex<double>>>& points);

// Same coefficient map retagged as a complex polynomial.
HomoPoly complexify(const HomoPoly& p);

struct RandomDist {
    enum class Kind { uniform_pm1, gaussian, sparse };
    Kind kind = Kind::gaussian;
    int sparse_terms = 0;

    static RandomDist uniform_pm1() { return {Kind::uniform_pm1, 0}; }
    static RandomDist gaussian() { return {Kind::gaussian, 0}; }
    static RandomDist sparse(int k) { return {Kind::sparse, k}; }
};

// Deterministic for fixed (seed, parameters).  sparse(k) yields exactly
// min(k, C(n+m-1,m)) terms.
HomoPoly random_polynomial(int m, int n, Field field, std::uint64_t seed,
                           RandomDist dist = RandomDist::gaussian());

}  // namespace hl
