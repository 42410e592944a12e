#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monconv/io.hpp"
#include "monconv/polynomial.hpp"

namespace monconv {

enum class Status { verified, inconclusive, violated };

std::string to_string(Status s);
Status parse_status(const std::string& text);

// Relative slack absorbed before a comparison counts as a pass or a violation.
inline constexpr double kCheckTolerance = 1e-9;

struct InequalityReport {
    std::string check_name;
    Json params = Json::object();
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    std::string constant_note;
    std::optional<double> norm_lower;
    std::optional<double> norm_upper;
    Status status = Status::inconclusive;
    Json witness;  // null when absent
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

Json report_to_json(const InequalityReport& report);
InequalityReport report_from_json(const Json& doc);

// lhs ≤ rhs(1+tol) → verified, otherwise violated.
Status classify_exact(double lhs, double rhs);
// Verified against constant·lower, violated only past constant·upper.
Status classify_norm_mediated(double lhs, double constant, double norm_lower, double norm_upper);

namespace constants {

// e·m·((m-1)^{m-1}/α(i)^{α(i)})^{1/r}, α(i) ∈ Λ(m-1, n).
double bds(unsigned m, const MultiIndex& alpha_i, double r);
// m·e^{1+(m-1)/r}·|i|^{1/r}.
double bds_weak(unsigned m, const MultiIndex& alpha_i, double r);

double tetra_rhs(double mpsi_norm, unsigned M, std::size_t N, double r, double eps);
double general_rhs(double mpsi_norm, unsigned M, std::size_t N, double r, double eps, double id_upper);

// A_r = e^{1-1/r}·2^{r+3}·r/(r-1)^2.
double hyper_A(double r);
// Uniform bound on Σ_{k≤M} 2^{k(1-2/r)}/(M+1): 1 at r = 2, 2^{2/r}/(2^{2/r}-2) below.
double hyper_K(double r);
// 2·A_r·K_r·Σ_k log(k+1)^{2/r'}/k^{1+ε/((1+ε)r')}, series taken at its certified upper end.
double hyper_C(double r, double eps);
// C_r(ε)·m^{2+1/r}·((1+ε)2e)^{m/r}·‖id‖^m.
double hypercontractive(unsigned m, double r, double eps, double id_upper);

// (m-1)!^{1/r}·m·e^{1+(m-1)/r}·2^{r/q}·q/(r-q)·(q'+1)^{m-2}.
double mixed_multilinear(unsigned m, double r);

}  // namespace constants

// Exact sums over Λ_T(M,N), Λ_E(M,N), Λ(M,N) of z^α |[α]|^{1/r}, by generating-function products.
double tetra_sum(const Eigen::VectorXd& z, unsigned M, double r);
double even_sum(const Eigen::VectorXd& z, unsigned M, double r);
double full_sum(const Eigen::VectorXd& z, unsigned M, double r);

std::vector<InequalityReport> check_bds(const HomogeneousPolynomial& P, double r, const NormEstimate& norm);
std::vector<InequalityReport> check_bds(const HomogeneousPolynomial& P, double r,
                                        const OptimizerOptions& options = {});

InequalityReport check_tetra_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r, double eps);
InequalityReport check_even_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r);
InequalityReport check_general_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r, double eps);

InequalityReport check_hypercontractive(const HomogeneousPolynomial& P, const ComplexVector& z, double r,
                                        double eps, const NormEstimate& norm);

inline constexpr double kDefaultEllqCap = 2.0;
inline constexpr double kDefaultHyperQ2Cap = 4.0;

InequalityReport check_ellq_sum(const HomogeneousPolynomial& P, const ComplexVector& z, double r,
                                const NormEstimate& norm, double cap = kDefaultEllqCap);

InequalityReport check_mixed_multilinear(const HomogeneousPolynomial& P, const std::vector<ComplexVector>& vectors,
                                         unsigned k, double r, const NormEstimate& norm);

InequalityReport check_hyper_q2(const HomogeneousPolynomial& P, const ComplexVector& z, double r,
                                const NormEstimate& norm, double cap = kDefaultHyperQ2Cap);

struct ImpossibilityPoint {
    std::size_t n = 0;
    unsigned m = 0;
    double q = 0.0;
    double ratio = 0.0;
};

struct TrendSummary {
    bool strictly_increasing = false;
    double growth = 0.0;  // last / first
};

TrendSummary summarize_trend(const std::vector<double>& values);

// Σ_{j≤n} z_j / (‖z‖_{q, log m} log(n+1)^{1-1/r}) for z_j = j^{-1/q} log(j+1)^{-2/log m},
// m = ⌊log(n+1)⌋, q = (mr')'.
std::vector<ImpossibilityPoint> hyper_q2_impossibility(double r, const std::vector<std::size_t>& n_grid);

struct SignSearchResult {
    unsigned m = 0;
    std::size_t n = 0;
    double r = 0.0;
    std::size_t trials = 0;
    double min_upper = 0.0;  // certified: some sign pattern has norm at most this
    double min_lower = 0.0;
    double bound = 0.0;      // (log m · m!)^{1-1/r} n^{1-1/r}
    double ratio_upper = 0.0;
    double ratio_lower = 0.0;
    std::uint64_t best_seed = 0;
};

SignSearchResult sign_polynomial_search(unsigned m, std::size_t n, double r, std::size_t trials,
                                        std::uint64_t seed, const OptimizerOptions& options = {4, 400, 0, 0});

enum class Verdict { inside, outside, boundary_inconclusive };

std::string to_string(Verdict v);

struct MembershipVerdict {
    std::string space;
    double value = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::boundary_inconclusive;
    std::vector<std::pair<std::size_t, double>> trend;
};

// Closed-form term generator z_n, n ≥ 1.
struct SequenceFamily {
    std::string label;
    std::function<double(std::size_t)> term;

    // log(n+1)^{1/r'} - log(n)^{1/r'}
    static SequenceFamily telescoping(double r);
    static SequenceFamily harmonic();
    // n^{-1/r} log(n+1)^{-2/r}
    static SequenceFamily log_damped(double r);
};

inline const std::vector<std::size_t> kDefaultGrid = {2, 4, 8, 16, 32};

MembershipVerdict hb_membership(const MagnitudeVector& z, double r);
MembershipVerdict hb_membership(const SequenceFamily& family, double r,
                                const std::vector<std::size_t>& n_grid = kDefaultGrid,
                                double growth_threshold = 1.5);

struct HinfMembership {
    MembershipVerdict lower;
    MembershipVerdict upper;
    double K = 0.0;             // (2e‖id‖^r + 1)^{1/r}
    double weighted_norm = 0.0; // ‖(z_n K n^{1/r'})‖_r
    bool in_weighted_ball = false;
};

// Predicates for mon H_∞(radius·B_{ℓ_r}), evaluated on z/radius.
HinfMembership hinf_membership(const MagnitudeVector& z, double r, double limsup_value, double embedding_bound,
                               double radius = 1.0);

}  // namespace monconv
