#include "hl/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "hl/rng.hpp"

namespace hl {

namespace {

// Canonical sparse form drops magnitudes below this to keep norm sums free
// of denormal noise.
constexpr double kDropThreshold = 1e-300;

void check_alpha(const std::vector<int>& alpha, int n, int m) {
    if (static_cast<int>(alpha.size()) != n) {
        throw std::invalid_argument("HomoPoly: exponent length does not match dimension");
    }
    int deg = 0;
    for (int e : alpha) {
        if (e < 0) throw std::invalid_argument("HomoPoly: negative exponent entry");
        deg += e;
    }
    if (deg != m) {
        throw std::invalid_argument("HomoPoly: exponent degree " + std::to_string(deg) +
                                    " does not match m = " + std::to_string(m));
    }
}

// Per-term value/gradient accumulation with exact zero-coordinate handling:
// two zero factors kill the term everywhere, a single zero factor of
// exponent one leaves only that partial derivative alive.
template <typename S>
void accumulate_term(const HomoPoly::Term& t, S coeff, std::span<const S> x, int n, S& value,
                     std::vector<S>& grad) {
    S prod = coeff;
    int zero_var = -1;
    int zero_count = 0;
    for (int i = 0; i < n && zero_count < 2; ++i) {
        const int e = t.alpha[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        const S xi = x[static_cast<std::size_t>(i)];
        if (xi == S(0.0)) {
            zero_count += 1;
            zero_var = i;
            continue;
        }
        for (int r = 0; r < e; ++r) prod *= xi;
    }
    if (zero_count >= 2) return;
    if (zero_count == 1) {
        if (t.alpha[static_cast<std::size_t>(zero_var)] == 1) {
            grad[static_cast<std::size_t>(zero_var)] += prod;
        }
        return;
    }
    value += prod;
    for (int i = 0; i < n; ++i) {
        const int e = t.alpha[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        grad[static_cast<std::size_t>(i)] += S(static_cast<double>(e)) * prod / x[static_cast<std::size_t>(i)];
    }
}

}  // namespace

HomoPoly::HomoPoly(Field field, int n, int m, std::vector<Term> terms)
    : field_(field), n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("HomoPoly: dimension must be >= 1");
    if (m < 0) throw std::invalid_argument("HomoPoly: degree must be >= 0");
    std::map<std::vector<int>, std::complex<double>> merged;
    for (auto& t : terms) {
        check_alpha(t.alpha, n, m);
        if (field == Field::real && t.coeff.imag() != 0.0) {
            throw std::invalid_argument("HomoPoly: real-field coefficient with nonzero imaginary part");
        }
        merged[t.alpha] += t.coeff;
    }
    terms_.reserve(merged.size());
    for (auto& [alpha, c] : merged) {
        if (std::abs(c) < kDropThreshold) continue;
        terms_.push_back(Term{alpha, c});
    }
}

std::complex<double> HomoPoly::coefficient(const std::vector<int>& alpha) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                               [](const Term& t, const std::vector<int>& a) { return t.alpha < a; });
    if (it != terms_.end() && it->alpha == alpha) return it->coeff;
    return {0.0, 0.0};
}

double HomoPoly::evaluate(std::span<const double> x) const {
    if (field_ != Field::real) {
        throw std::invalid_argument("HomoPoly::evaluate: complex-field polynomial requires a "
                                    "complex point");
    }
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("HomoPoly::evaluate: point dimension mismatch");
    }
    double acc = 0.0;
    for (const Term& t : terms_) {
        double prod = t.coeff.real();
        for (int i = 0; i < n_; ++i) {
            const int e = t.alpha[static_cast<std::size_t>(i)];
            const double xi = x[static_cast<std::size_t>(i)];
            for (int r = 0; r < e; ++r) prod *= xi;
        }
        acc += prod;
    }
    return acc;
}

std::complex<double> HomoPoly::evaluate(std::span<const std::complex<double>> z) const {
    if (field_ != Field::complex) {
        throw std::invalid_argument("HomoPoly::evaluate: real-field polynomial cannot take a "
                                    "complex point; complexify first");
    }
    if (static_cast<int>(z.size()) != n_) {
        throw std::invalid_argument("HomoPoly::evaluate: point dimension mismatch");
    }
    std::complex<double> acc{0.0, 0.0};
    for (const Term& t : terms_) {
        std::complex<double> prod = t.coeff;
        for (int i = 0; i < n_; ++i) {
            const int e = t.alpha[static_cast<std::size_t>(i)];
            const std::complex<double> zi = z[static_cast<std::size_t>(i)];
            for (int r = 0; r < e; ++r) prod *= zi;
        }
        acc += prod;
    }
    return acc;
}

double HomoPoly::evaluate_gradient(std::span<const double> x, std::vector<double>& grad) const {
    if (field_ != Field::real) {
        throw std::invalid_argument("HomoPoly::evaluate_gradient: field mismatch");
    }
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("HomoPoly::evaluate_gradient: point dimension mismatch");
    }
    grad.assign(static_cast<std::size_t>(n_), 0.0);
    double value = 0.0;
    for (const Term& t : terms_) {
        accumulate_term<double>(t, t.coeff.real(), x, n_, value, grad);
    }
    return value;
}

std::complex<double> HomoPoly::evaluate_gradient(std::span<const std::complex<double>> z,
                                                 std::vector<std::complex<double>>& grad) const {
    if (field_ != Field::complex) {
        throw std::invalid_argument("HomoPoly::evaluate_gradient: field mismatch");
    }
    if (static_cast<int>(z.size()) != n_) {
        throw std::invalid_argument("HomoPoly::evaluate_gradient: point dimension mismatch");
    }
    grad.assign(static_cast<std::size_t>(n_), std::complex<double>{0.0, 0.0});
    std::complex<double> value{0.0, 0.0};
    for (const Term& t : terms_) {
        accumulate_term<std::complex<double>>(t, 0.0, z, n_, false, value, grad);
    }
    return value;
}

bool HomoPoly::operator==(const HomoPoly& other) const {
    if (field_ != other.field_ || n_ != other.n_ || m_ != other.m_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].alpha != other.terms_[i].alpha) return false;
        if (terms_[i].coeff != other.terms_[i].coeff) return false;
    }
    return true;
}

std::complex<double> MultilinearView::coefficient(const IndexTuple& i) const {
    return polar_coefficient(*poly_, i);
}

std::complex<double> polar_coefficient(const HomoPoly& p, const IndexTuple& i) {
    if (i.order() != p.degree() || i.dimension() != p.dimension()) {
        throw std::invalid_argument("polar_coefficient: tuple shape does not match polynomial");
    }
    const Exponent alpha = exponent_of(i);
    const std::complex<double> a = p.coefficient(alpha.entries());
    if (a == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
    return a / static_cast<double>(multinomial(p.degree(), alpha));
}

HomoPoly restrict_diagonal(const MultilinearView& view) {
    const HomoPoly& src = view.source();
    std::vector<HomoPoly::Term> terms;
    terms.reserve(src.term_count());
    for (const auto& t : src.terms()) {
        const Exponent alpha(t.alpha);
        const IndexTuple i = canonical_index(alpha);
        const std::complex<double> c =
            view.coefficient(i) * static_cast<double>(multinomial(src.degree(), alpha));
        terms.push_back(HomoPoly::Term{t.alpha, c});
    }
    return HomoPoly(src.field(), src.dimension(), src.degree(), std::move(terms));
}

std::complex<double> polar_at_repeated(const HomoPoly& p, std::span<const int> multiplicities,
                                       const std::vector<std::vector<std::complex<double>>>& points) {
    const int m = p.degree();
    const int n = p.dimension();
    const int k = static_cast<int>(multiplicities.size());
    if (static_cast<int>(points.size()) != k) {
        throw std::invalid_argument("polar_at_repeated: one point per multiplicity required");
    }
    int total = 0;
    for (int j = 0; j < k; ++j) {
        if (multiplicities[static_cast<std::size_t>(j)] < 0) {
            throw std::invalid_argument("polar_at_repeated: negative multiplicity");
        }
        total += multiplicities[static_cast<std::size_t>(j)];
        if (static_cast<int>(points[static_cast<std::size_t>(j)].size()) != n) {
            throw std::invalid_argument("polar_at_repeated: point dimension mismatch");
        }
    }
    if (total != m) {
        throw std::invalid_argument("polar_at_repeated: multiplicities must sum to the degree");
    }

    // Working array over the box beta <= multiplicities of auxiliary-variable
    // exponents, mixed-radix layout.  For each sparse term we expand
    // prod_i (sum_j points[j][i] t_j)^(alpha_i) and keep the one mixed
    // coefficient at beta = multiplicities.
    std::vector<std::size_t> stride(static_cast<std::size_t>(k));
    std::size_t box = 1;
    for (int j = 0; j < k; ++j) {
        stride[static_cast<std::size_t>(j)] = box;
        box *= static_cast<std::size_t>(multiplicities[static_cast<std::size_t>(j)] + 1);
    }
    std::vector<std::complex<double>> acc(box), next(box);
    std::vector<int> beta(static_cast<std::size_t>(k), 0);

    std::complex<double> result{0.0, 0.0};
    for (const auto& term : p.terms()) {
        std::fill(acc.begin(), acc.end(), std::complex<double>{0.0, 0.0});
        acc[0] = term.coeff;
        for (int i = 0; i < n; ++i) {
            const int e = term.alpha[static_cast<std::size_t>(i)];
            for (int rep = 0; rep < e; ++rep) {
                std::fill(next.begin(), next.end(), std::complex<double>{0.0, 0.0});
                std::fill(beta.begin(), beta.end(), 0);
                std::size_t idx = 0;
                for (;;) {
                    const std::complex<double> cur = acc[idx];
                    if (cur != std::complex<double>{0.0, 0.0}) {
                        for (int j = 0; j < k; ++j) {
                            if (beta[static_cast<std::size_t>(j)] <
                                multiplicities[static_cast<std::size_t>(j)]) {
                                next[idx + stride[static_cast<std::size_t>(j)]] +=
                                    cur *
                                    points[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                            }
                        }
                    }
                    int j = 0;
                    for (; j < k; ++j) {
                        idx += stride[static_cast<std::size_t>(j)];
                        if (++beta[static_cast<std::size_t>(j)] <=
                            multiplicities[static_cast<std::size_t>(j)]) {
                            break;
                        }
                        idx -= stride[static_cast<std::size_t>(j)] *
                               static_cast<std::size_t>(beta[static_cast<std::size_t>(j)]);
                        beta[static_cast<std::size_t>(j)] = 0;
                    }
                    if (j == k) break;
                }
                std::swap(acc, next);
            }
        }
        result += acc[box - 1];
    }

    std::vector<int> positive;
    for (int j = 0; j < k; ++j) {
        if (multiplicities[static_cast<std::size_t>(j)] > 0) {
            positive.push_back(multiplicities[static_cast<std::size_t>(j)]);
        }
    }
    if (positive.empty()) return result;  // degree-zero edge
    const Exponent pattern(positive);
    const double weight = m <= 20 ? static_cast<double>(multinomial(m, pattern))
                                  : std::exp(log_multinomial(m, pattern));
    return result / weight;
}

HomoPoly complexify(const HomoPoly& p) {
    if (p.field() == Field::complex) {
        throw std::invalid_argument("complexify: polynomial is already complex");
    }
    return HomoPoly(Field::complex, p.dimension(), p.degree(), p.terms());
}

HomoPoly random_polynomial(int m, int n, Field field, std::uint64_t seed, RandomDist dist) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("random_polynomial: need m >= 1, n >= 1");
    }
    Rng rng(stream_seed(seed, 0x52504F4CULL));
    std::vector<Exponent> alphas = enumerate_exponents(m, n);
    std::vector<HomoPoly::Term> terms;

    auto draw = [&](Rng& r) -> std::complex<double> {
        switch (dist.kind) {
            case RandomDist::Kind::uniform_pm1:
                if (field == Field::real) return {r.sign(), 0.0};
                return {r.sign(), r.sign()};
            case RandomDist::Kind::gaussian:
            case RandomDist::Kind::sparse:
                if (field == Field::real) return {r.gaussian(), 0.0};
                return r.complex_gaussian();
        }
        return {0.0, 0.0};
    };

    if (dist.kind == RandomDist::Kind::sparse) {
        const auto want = static_cast<int>(std::min<std::int64_t>(
            dist.sparse_terms, static_cast<std::int64_t>(alphas.size())));
        // Fisher-Yates prefix over the exponent list.
        std::vector<std::size_t> order(alphas.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        for (int i = 0; i < want; ++i) {
            const int j = rng.uniform_int(i, static_cast<int>(order.size()) - 1);
            std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
        }
        for (int i = 0; i < want; ++i) {
            std::complex<double> c = draw(rng);
            while (std::abs(c) < 1e-12) c = draw(rng);
            terms.push_back(HomoPoly::Term{alphas[order[static_cast<std::size_t>(i)]].entries(), c});
        }
    } else {
        terms.reserve(alphas.size());
        for (const auto& a : alphas) {
            std::complex<double> c = draw(rng);
            while (std::abs(c) < 1e-12) c = draw(rng);  // keep the dense term count exact
            terms.push_back(HomoPoly::Term{a.entries(), c});
        }
    }
    return HomoPoly(field, n, m, std::move(terms));
}

}  // namespace hl
