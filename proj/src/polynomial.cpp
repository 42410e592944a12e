#include "monconv/polynomial.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "monconv/parallel.hpp"
#include "monconv/rng.hpp"

namespace monconv {

namespace {

Eigen::MatrixXcd power_table(const Eigen::VectorXcd& z, unsigned m) {
    Eigen::MatrixXcd pw(z.size(), m + 1);
    for (Index i = 0; i < z.size(); ++i) {
        pw(i, 0) = 1.0;
        for (unsigned k = 1; k <= m; ++k) pw(i, k) = pw(i, k - 1) * z[i];
    }
    return pw;
}

void require_dimension(const HomogeneousPolynomial& P, Index size) {
    if (size != Index(P.dimension())) throw dimension_error("vector dimension differs from P");
}

double r_norm(const Eigen::VectorXcd& z, Exponent r) {
    if (r.is_infinite()) return z.cwiseAbs().maxCoeff();
    if (r.value() == 2.0) return z.norm();
    return ell_norm(MagnitudeVector(z.cwiseAbs()), r);
}

// Unit-ℓ_r vector w maximizing Re Σ a_i w_i; empty when a = 0.
Eigen::VectorXcd dual_point(const Eigen::VectorXcd& a, Exponent r) {
    const Index n = a.size();
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
    const double amax = a.cwiseAbs().maxCoeff();
    if (amax == 0.0) return {};
    if (r.value() == 1.0) {
        Index i = 0;
        a.cwiseAbs().maxCoeff(&i);
        w[i] = std::conj(a[i]) / std::abs(a[i]);
        return w;
    }
    const double rc = r.is_infinite() ? 1.0 : r.conjugate().value();
    for (Index i = 0; i < n; ++i) {
        const double m = std::abs(a[i]);
        if (m > 0.0) w[i] = std::conj(a[i]) / m * std::pow(m / amax, rc - 1.0);
    }
    return w / r_norm(w, r);
}

struct AscentResult {
    Eigen::VectorXcd z;
    double value = 0.0;  // |P(z)|
    long iterations = 0;
};

// Projected gradient ascent of |P|^2 on the ℓ_r sphere from one random start.
AscentResult ascend(const HomogeneousPolynomial& P, Exponent r, int max_iters, std::uint64_t seed) {
    const Index n = Index(P.dimension());
    CounterRng rng(seed);
    Eigen::VectorXcd z(n);
    for (Index i = 0; i < n; ++i) z[i] = rng.complex_normal();
    if (z.cwiseAbs().maxCoeff() == 0.0) z[0] = 1.0;
    z /= r_norm(z, r);

    double f = std::norm(eval(P, z));
    double step = 0.25;
    long it = 0;
    for (; it < max_iters; ++it) {
        const Complex p = eval(P, z);
        const Eigen::VectorXcd g = gradient(P, z);
        // Steepest ascent of |P|^2 in the real 2n-dimensional coordinates.
        Eigen::VectorXcd d = p * g.conjugate();
        const double dn = d.norm();
        if (dn == 0.0 || f == 0.0) break;
        d /= dn;

        bool accepted = false;
        double f_new = f;
        Eigen::VectorXcd z_new;
        for (double t = std::min(2.0 * step, 1.0); t > 1e-15; t *= 0.5) {
            z_new = z + t * d;
            z_new /= r_norm(z_new, r);
            f_new = std::norm(eval(P, z_new));
            if (f_new > f) {
                step = t;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
        const double gain = (f_new - f) / f;
        z = std::move(z_new);
        f = f_new;
        if (gain < 1e-12) {
            ++it;
            break;
        }
    }
    // Polish toward w = argmax over the ball of Re(e^{-iθ} ∇P(z)·w), damped until |P| increases.
    for (int k = 0; k < 1000 && f > 0.0; ++k, ++it) {
        const Complex p = eval(P, z);
        const Eigen::VectorXcd a = (std::conj(p) / std::abs(p)) * gradient(P, z);
        const Eigen::VectorXcd w = dual_point(a, r);
        if (w.size() == 0) break;
        Eigen::VectorXcd z_new;
        double f_new = f;
        for (double t = 1.0; t > 1e-6; t *= 0.5) {
            z_new = z + t * (w - z);
            z_new /= r_norm(z_new, r);
            f_new = std::norm(eval(P, z_new));
            if (f_new > f) break;
        }
        if (!(f_new > f)) break;
        const double gain = (f_new - f) / f;
        z = z_new;
        f = f_new;
        if (gain < 1e-15) break;
    }
    z /= r_norm(z, r);
    return {z, std::abs(eval(P, z)), it};
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(unsigned m, std::size_t n) : m_(m), n_(n) {
    if (n == 0) throw dimension_error("dimension must be at least 1");
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(unsigned m, std::size_t n, std::vector<Term> terms) {
    HomogeneousPolynomial P(m, n);
    std::map<MultiIndex, Complex, ColexLess> merged;
    for (auto& t : terms) {
        if (t.alpha.dimension() != n) throw dimension_error("multi-index dimension differs from n");
        if (t.alpha.order() != m) throw precondition_error("multi-index order differs from the degree");
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
            throw precondition_error("coefficients must be finite");
        merged[t.alpha] += t.coeff;
    }
    for (auto& [alpha, c] : merged) {
        if (c == Complex(0.0)) continue;
        std::vector<Factor> f;
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i] > 0) f.push_back({std::uint32_t(i), alpha[i]});
        P.factors_.push_back(std::move(f));
        P.terms_.push_back({alpha, c});
    }
    return P;
}

Complex HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                               [](const Term& t, const MultiIndex& a) { return colex_less(t.alpha, a); });
    if (it != terms_.end() && it->alpha == alpha) return it->coeff;
    return 0.0;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(Complex lambda) const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff *= lambda;
    return from_terms(m_, n_, std::move(t));
}

Complex eval(const HomogeneousPolynomial& P, const Eigen::VectorXcd& z) {
    require_dimension(P, z.size());
    const Eigen::MatrixXcd pw = power_table(z, P.degree());
    Complex sum = 0.0;
    const auto& terms = P.terms();
    const auto& factors = P.factors();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        Complex prod = terms[t].coeff;
        for (const auto& f : factors[t]) prod *= pw(f.var, f.power);
        sum += prod;
    }
    return sum;
}

Complex eval(const HomogeneousPolynomial& P, const ComplexVector& z) {
    require_dimension(P, z.ambient_dim());
    return eval(P, Eigen::VectorXcd(z.dense()));
}

Eigen::VectorXcd gradient(const HomogeneousPolynomial& P, const Eigen::VectorXcd& z) {
    require_dimension(P, z.size());
    const Eigen::MatrixXcd pw = power_table(z, P.degree());
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(z.size());
    const auto& terms = P.terms();
    const auto& factors = P.factors();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& fs = factors[t];
        for (std::size_t a = 0; a < fs.size(); ++a) {
            Complex prod = terms[t].coeff * double(fs[a].power) * pw(fs[a].var, fs[a].power - 1);
            for (std::size_t b = 0; b < fs.size(); ++b)
                if (b != a) prod *= pw(fs[b].var, fs[b].power);
            g[fs[a].var] += prod;
        }
    }
    return g;
}

ComplexVector gradient(const HomogeneousPolynomial& P, const ComplexVector& z) {
    require_dimension(P, z.ambient_dim());
    return ComplexVector(gradient(P, Eigen::VectorXcd(z.dense())));
}

HomogeneousPolynomial extract_coefficients(const Evaluator& f, unsigned m, std::size_t n,
                                           std::uint64_t grid_budget) {
    if (n == 0) throw dimension_error("dimension must be at least 1");
    const std::size_t base = m + 1;
    double grid = 1.0;
    for (std::size_t i = 0; i < n; ++i) grid *= double(base);
    if (grid > double(grid_budget)) throw budget_error("coefficient grid (m+1)^n", grid, double(grid_budget));
    const std::size_t G = std::size_t(grid);

    std::vector<Complex> roots(base);
    for (std::size_t k = 0; k < base; ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(base));

    // Samples indexed by Σ d_i base^i.
    std::vector<Complex> values(G);
    Eigen::VectorXcd w(static_cast<Index>(n));
    std::vector<std::size_t> d(n, 0);
    for (std::size_t idx = 0; idx < G; ++idx) {
        for (std::size_t i = 0; i < n; ++i) w[Index(i)] = roots[d[i]];
        values[idx] = f(w);
        for (std::size_t i = 0; i < n && ++d[i] == base; ++i) d[i] = 0;
    }

    // Separable inverse DFT along each axis.
    std::vector<Complex> line(base);
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < n; ++axis, stride *= base) {
        for (std::size_t start = 0; start < G; ++start) {
            if ((start / stride) % base != 0) continue;
            for (std::size_t k = 0; k < base; ++k) {
                Complex acc = 0.0;
                for (std::size_t j = 0; j < base; ++j)
                    acc += values[start + j * stride] * roots[(base - (k * j) % base) % base];
                line[k] = acc / double(base);
            }
            for (std::size_t k = 0; k < base; ++k) values[start + k * stride] = line[k];
        }
    }

    std::vector<HomogeneousPolynomial::Term> terms;
    double peak = 0.0;
    for (LambdaStream s(m, n); !s.done(); s.advance()) {
        std::size_t idx = 0;
        for (std::size_t i = n; i-- > 0;) idx = idx * base + s.current()[i];
        terms.push_back({s.current(), values[idx]});
        peak = std::max(peak, std::abs(values[idx]));
    }
    // Entries at roundoff level relative to the largest coefficient are zeros.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * peak;
    std::erase_if(terms, [&](const auto& t) { return std::abs(t.coeff) <= floor; });
    return HomogeneousPolynomial::from_terms(m, n, std::move(terms));
}

double monomial_abs_sum(const HomogeneousPolynomial& P, const Eigen::VectorXd& a) {
    require_dimension(P, a.size());
    double sum = 0.0;
    const auto& terms = P.terms();
    const auto& factors = P.factors();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        double prod = std::abs(terms[t].coeff);
        for (const auto& f : factors[t]) prod *= std::pow(a[f.var], double(f.power));
        sum += prod;
    }
    return sum;
}

double mixed_abs_sum(const HomogeneousPolynomial& P, const std::vector<ComplexVector>& vectors,
                     unsigned star_from) {
    const unsigned m = P.degree();
    if (vectors.size() != m) throw dimension_error("mixed sum needs exactly m vectors");
    if (star_from > m) throw precondition_error("star_from must lie in [0, m]");
    std::vector<Eigen::VectorXd> a;
    for (unsigned i = 0; i < m; ++i) {
        require_dimension(P, vectors[i].ambient_dim());
        a.push_back(i < star_from ? modulus(vectors[i]).dense() : decreasing_rearrangement(vectors[i]).dense());
    }
    double sum = 0.0;
    for (const auto& t : P.terms()) {
        const JTuple j = alpha_to_j(t.alpha);
        double prod = std::abs(t.coeff);
        for (unsigned i = 0; i < m; ++i) prod *= a[i][Index(j[i] - 1)];
        sum += prod;
    }
    return sum;
}

double coeff_tail_norm(const HomogeneousPolynomial& P, const JTuple& i, Exponent r) {
    const unsigned m = P.degree();
    if (m == 0 || i.size() != m - 1) throw dimension_error("tail index must lie in J(m-1, n)");
    const std::size_t n = P.dimension();
    MultiIndex base = j_to_alpha(i, n);
    const Exponent rc = r.conjugate();
    double peak = 0.0;
    double acc = 0.0;
    for (std::size_t k = i.last(); k <= n; ++k) {
        std::vector<unsigned> e = base.exponents();
        ++e[k - 1];
        const double c = std::abs(P.coefficient(MultiIndex(std::move(e))));
        peak = std::max(peak, c);
        if (!rc.is_infinite()) acc += std::pow(c, rc.value());
    }
    return rc.is_infinite() ? peak : std::pow(acc, 1.0 / rc.value());
}

double lagrange_upper_bound(const HomogeneousPolynomial& P, Exponent r) {
    const double m = P.degree();
    double sum = 0.0;
    for (const auto& t : P.terms()) {
        double log_peak = 0.0;
        for (unsigned a : t.alpha.exponents())
            if (a > 0) log_peak += double(a) * std::log(double(a) / m);
        sum += std::abs(t.coeff) * std::exp(r.reciprocal() * log_peak);
    }
    return sum;
}

double spectral_upper_bound(const HomogeneousPolynomial& P, Exponent r, std::uint64_t entry_budget) {
    const unsigned m = P.degree();
    const std::size_t n = P.dimension();
    if (m == 0) return P.size() ? std::abs(P.terms()[0].coeff) : 0.0;
    if (std::pow(double(n), double(m)) > double(entry_budget))
        return std::numeric_limits<double>::infinity();

    const unsigned ra = m / 2;
    const unsigned cb = m - ra;
    const auto rows = Index(std::pow(double(n), double(ra)) + 0.5);
    const auto cols = Index(std::pow(double(n), double(cb)) + 0.5);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(rows, cols);
    std::vector<std::size_t> tuple(m, 0);
    std::vector<unsigned> counts(n);
    for (Index cell = 0; cell < rows * cols; ++cell) {
        std::fill(counts.begin(), counts.end(), 0u);
        for (unsigned k = 0; k < m; ++k) ++counts[tuple[k]];
        const MultiIndex alpha(counts);
        const Complex c = P.coefficient(alpha);
        if (c != Complex(0.0)) {
            Index row = 0;
            Index col = 0;
            for (unsigned k = 0; k < ra; ++k) row = row * Index(n) + Index(tuple[k]);
            for (unsigned k = ra; k < m; ++k) col = col * Index(n) + Index(tuple[k]);
            M(row, col) = c / multinomial_card(alpha).value();
        }
        for (unsigned k = 0; k < m && ++tuple[k] == n; ++k) tuple[k] = 0;
    }
    const double sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(M).singularValues()(0);
    const double excess = 0.5 - r.reciprocal();
    return excess > 0 ? sigma * std::pow(double(n), double(m) * excess) : sigma;
}

double certified_upper_bound(const HomogeneousPolynomial& P, Exponent r) {
    double upper = std::min(lagrange_upper_bound(P, r), spectral_upper_bound(P, r));
    if (P.degree() == 1) {
        // Linear forms: the norm is exactly the dual ℓ_{r'} norm of the coefficients.
        Eigen::VectorXd c = Eigen::VectorXd::Zero(Index(P.dimension()));
        for (std::size_t t = 0; t < P.size(); ++t) c[P.factors()[t][0].var] = std::abs(P.terms()[t].coeff);
        upper = std::min(upper, ell_norm(MagnitudeVector(c), r.conjugate()));
    }
    return upper;
}

NormEstimate sup_norm_estimate(const HomogeneousPolynomial& P, Exponent r, const OptimizerOptions& options) {
    if (options.restarts < 1) throw precondition_error("sup_norm_estimate needs restarts >= 1");
    std::vector<AscentResult> runs(std::size_t(options.restarts));
    parallel_for(runs.size(), options.threads, [&](std::size_t k) {
        runs[k] = ascend(P, r, options.max_iters, options.seed + k);
    });

    NormEstimate est;
    std::size_t best = 0;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        est.iterations += runs[k].iterations;
        if (runs[k].value > runs[best].value) best = k;
    }
    est.restarts_used = options.restarts;
    est.lower = runs[best].value;
    est.witness = ComplexVector(runs[best].z);

    const double upper = certified_upper_bound(P, r);
    // Only roundoff can push the witness value past a valid bound.
    est.upper = std::max(upper, est.lower);
    return est;
}

HomogeneousPolynomial random_sign_polynomial(unsigned m, std::size_t n, std::uint64_t seed, SignMode mode,
                                             std::uint64_t budget) {
    CounterRng rng(seed);
    std::vector<HomogeneousPolynomial::Term> terms;
    for (LambdaStream s(m, n, budget); !s.done(); s.advance()) {
        const double sign = (mode == SignMode::all_plus || rng.coin()) ? 1.0 : -1.0;
        terms.push_back({s.current(), sign * multinomial_card(s.current()).value()});
    }
    return HomogeneousPolynomial::from_terms(m, n, std::move(terms));
}

HomogeneousPolynomial random_polynomial(unsigned m, std::size_t n, CoefficientDistribution distribution,
                                        std::uint64_t seed, std::uint64_t budget) {
    CounterRng rng(seed);
    std::vector<HomogeneousPolynomial::Term> terms;
    for (LambdaStream s(m, n, budget); !s.done(); s.advance()) {
        Complex c = distribution == CoefficientDistribution::complex_gaussian
                        ? rng.complex_normal()
                        : std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        terms.push_back({s.current(), c});
    }
    return HomogeneousPolynomial::from_terms(m, n, std::move(terms));
}

}  // namespace monconv
