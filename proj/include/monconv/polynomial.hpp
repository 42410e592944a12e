#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "monconv/multiindex.hpp"
#include "monconv/seqspace.hpp"

namespace monconv {

using Complex = std::complex<double>;

// m-homogeneous polynomial in n variables, terms kept in colex order of α.
class HomogeneousPolynomial {
public:
    struct Term {
        MultiIndex alpha;
        Complex coeff;
    };

    HomogeneousPolynomial(unsigned m, std::size_t n);

    // Duplicate keys are summed and zero coefficients dropped.
    static HomogeneousPolynomial from_terms(unsigned m, std::size_t n, std::vector<Term> terms);

    unsigned degree() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    Complex coefficient(const MultiIndex& alpha) const;
    Complex coefficient(const JTuple& j) const { return coefficient(j_to_alpha(j, n_)); }

    HomogeneousPolynomial scaled(Complex lambda) const;

    // Sparse (variable, power) view of each term for evaluation loops.
    struct Factor {
        std::uint32_t var;
        std::uint32_t power;
    };
    const std::vector<std::vector<Factor>>& factors() const noexcept { return factors_; }

private:
    unsigned m_;
    std::size_t n_;
    std::vector<Term> terms_;
    std::vector<std::vector<Factor>> factors_;
};

Complex eval(const HomogeneousPolynomial& P, const Eigen::VectorXcd& z);
Complex eval(const HomogeneousPolynomial& P, const ComplexVector& z);

Eigen::VectorXcd gradient(const HomogeneousPolynomial& P, const Eigen::VectorXcd& z);
ComplexVector gradient(const HomogeneousPolynomial& P, const ComplexVector& z);

using Evaluator = std::function<Complex(const Eigen::VectorXcd&)>;

// c_α = mean over the torus grid of (m+1)-th roots of unity of f(w) w^{-α}.
HomogeneousPolynomial extract_coefficients(const Evaluator& f, unsigned m, std::size_t n,
                                           std::uint64_t grid_budget = 10'000'000);

// S(P, z) = Σ |c_α| |z|^α.
double monomial_abs_sum(const HomogeneousPolynomial& P, const Eigen::VectorXd& magnitudes);
template <typename Scalar>
double monomial_abs_sum(const HomogeneousPolynomial& P, const Sequence<Scalar>& z) {
    if (z.ambient_dim() != Index(P.dimension())) throw dimension_error("vector dimension differs from P");
    return monomial_abs_sum(P, modulus(z).dense());
}

// Σ_{j ∈ J(m,n)} |c_j| Π_{i≤k} |z^(i)_{j_i}| Π_{i>k} z^(i)*_{j_i}.
double mixed_abs_sum(const HomogeneousPolynomial& P, const std::vector<ComplexVector>& vectors,
                     unsigned star_from);

// (Σ_{k = i_last}^{n} |c_{(i,k)}|^{r'})^{1/r'} for i ∈ J(m-1, n).
double coeff_tail_norm(const HomogeneousPolynomial& P, const JTuple& i, Exponent r);

struct NormEstimate {
    double lower = 0.0;
    double upper = 0.0;
    ComplexVector witness;
    int restarts_used = 0;
    long iterations = 0;
};

struct OptimizerOptions {
    int restarts = 50;
    int max_iters = 2000;
    std::uint64_t seed = 42;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Σ_α |c_α| (α^α/m^m)^{1/r}.
double lagrange_upper_bound(const HomogeneousPolynomial& P, Exponent r);

// Largest singular value of the symmetric coefficient tensor flattened to
// n^{⌊m/2⌋} × n^{⌈m/2⌉}, times n^{m(1/2-1/r)} when r > 2. Infinity when over budget.
double spectral_upper_bound(const HomogeneousPolynomial& P, Exponent r,
                            std::uint64_t entry_budget = 4'000'000);

// min of the Lagrange and spectral bounds, exact dual norm when m = 1.
double certified_upper_bound(const HomogeneousPolynomial& P, Exponent r);

// ‖P‖ on the unit ball of ℓ_r^n, bracketed by an ascent witness and certified bounds.
NormEstimate sup_norm_estimate(const HomogeneousPolynomial& P, Exponent r,
                               const OptimizerOptions& options = {});

enum class SignMode { random, all_plus };

// c_α = ε_α m!/α!, one sign per α drawn in colex order.
HomogeneousPolynomial random_sign_polynomial(unsigned m, std::size_t n, std::uint64_t seed,
                                             SignMode mode = SignMode::random,
                                             std::uint64_t budget = default_budget());

enum class CoefficientDistribution { complex_gaussian, uniform_modulus };

HomogeneousPolynomial random_polynomial(unsigned m, std::size_t n, CoefficientDistribution distribution,
                                        std::uint64_t seed, std::uint64_t budget = default_budget());

}  // namespace monconv
