#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monconv/harness.hpp"

namespace monconv {

enum class Region { I, II, III };

std::string to_string(Region region);

struct RegionLabel {
    Region region = Region::I;
    double predicted_exponent = 0.0;
};

struct RegionConditions {
    bool I = false;
    bool II = false;
    bool III = false;
};

// The three condition blocks for χ_{r,s}(P(^m C^n)), with 1/r = 1 folded into block III.
RegionConditions region_conditions(Exponent r, Exponent s, unsigned m);
// First block that holds, in the listed order I, II, III.
RegionLabel region_classify(Exponent r, Exponent s, unsigned m);

struct ChiRatio {
    double numerator_lower = 0.0;   // lower bound for sup over B_{ℓ_s} of Σ |c_α| |z^α|
    double denominator_upper = 0.0; // upper bound for ‖P‖ on B_{ℓ_r}
    double ratio = 0.0;
};

ChiRatio chi_ratio(const HomogeneousPolynomial& P, Exponent r, Exponent s, const OptimizerOptions& options = {});

struct ChiEstimate {
    double value = 0.0;
    std::string witness_kind;
    std::uint64_t witness_seed = 0;
    HomogeneousPolynomial witness{0, 1};
    std::vector<double> running;  // best ratio after each candidate
};

// Candidates in order: z_1^m, all-plus, then per trial t a random-sign and a Gaussian polynomial
// with seed + t.
ChiEstimate chi_estimate(unsigned m, std::size_t n, Exponent r, Exponent s, std::size_t trials,
                         std::uint64_t seed, const OptimizerOptions& options = {8, 400, 0, 0});

struct FitResult {
    double exponent = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // root mean square in log coordinates
    std::vector<std::pair<double, double>> points;
};

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

struct BohrEstimate {
    double value = 0.0;
    unsigned maximizing_m = 1;
    std::vector<double> chi_roots;  // chi_estimate^{1/m}, m = 1..m_max
};

BohrEstimate bohr_radius_estimate(Exponent p, Exponent q, std::size_t n, unsigned m_max, std::size_t trials,
                                  std::uint64_t seed, const OptimizerOptions& options = {8, 400, 0, 0});

struct MultiplierReport {
    ExponentBundle bundle;
    std::vector<std::pair<std::size_t, double>> positive;    // ‖(z_n / n^{σ_m})_{n≤N}‖_{q,r}
    std::vector<double> positive_increments;
    bool positive_bounded = false;
    std::vector<std::pair<std::size_t, double>> optimality;  // ‖(z_n / n^{σ_m-ε})_{n≤N}‖_{q,∞}
    TrendSummary optimality_trend;
    bool optimality_divergent = false;
};

// Divergence: strict increase over at least five grid points and growth ≥ min_growth.
// Boundedness: Cauchy increments strictly decreasing with the last one below increment_tol.
MultiplierReport multiplier_check(double r, unsigned m, const SequenceFamily& family,
                                  const std::vector<std::size_t>& N_grid, double eps,
                                  double increment_tol = 1e-2, double min_growth = 1.5);

struct ChiTableRow {
    std::size_t n = 0;
    double estimate = 0.0;
    double fitted_exponent = 0.0;
    double predicted_exponent = 0.0;
};

// Header: n,estimate,fitted_exponent,predicted_exponent
std::string chi_table_csv(const std::vector<ChiTableRow>& rows);

}  // namespace monconv
