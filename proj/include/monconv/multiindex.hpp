#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "monconv/errors.hpp"

namespace monconv {

// α ∈ ℕ_0^n with |α| = order().
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> exponents);
    static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }

    unsigned order() const noexcept { return order_; }
    std::size_t dimension() const noexcept { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return e_; }

    bool is_tetrahedral() const noexcept;
    bool is_even() const noexcept;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> e_;
    unsigned order_ = 0;
};

// Colexicographic order: compare the last coordinate first.
bool colex_less(const MultiIndex& a, const MultiIndex& b);

struct ColexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return colex_less(a, b); }
};

// j ∈ J(m, n): 1 ≤ j_1 ≤ ... ≤ j_m ≤ n, stored 1-based.
class JTuple {
public:
    JTuple() = default;
    explicit JTuple(std::vector<std::size_t> indices);

    std::size_t size() const noexcept { return j_.size(); }
    std::size_t operator[](std::size_t i) const { return j_[i]; }
    const std::vector<std::size_t>& indices() const noexcept { return j_; }
    std::size_t last() const noexcept { return j_.empty() ? 1 : j_.back(); }

    friend bool operator==(const JTuple&, const JTuple&) = default;

private:
    std::vector<std::size_t> j_;
};

// Saturating binomial coefficient; returns UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// |Λ(m, n)| = C(m+n-1, m), saturating.
std::uint64_t lambda_count(unsigned m, std::size_t n);

// Walks Λ(m, n) in colex order, starting at (m, 0, ..., 0) and ending at (0, ..., 0, m).
class LambdaStream {
public:
    LambdaStream(unsigned m, std::size_t n, std::uint64_t budget = default_budget());

    const MultiIndex& current() const noexcept { return current_; }
    bool done() const noexcept { return done_; }
    void advance();
    void restart();

private:
    unsigned m_;
    std::size_t n_;
    std::vector<unsigned> e_;
    MultiIndex current_;
    bool done_ = false;
};

std::vector<MultiIndex> enumerate_lambda(unsigned m, std::size_t n,
                                         std::uint64_t budget = default_budget());
std::vector<MultiIndex> enumerate_lambda_T(unsigned m, std::size_t n,
                                           std::uint64_t budget = default_budget());
std::vector<MultiIndex> enumerate_lambda_E(unsigned m, std::size_t n,
                                           std::uint64_t budget = default_budget());

// J(m, n) in lexicographic order.
std::vector<JTuple> enumerate_J(unsigned m, std::size_t n, std::uint64_t budget = default_budget());

JTuple alpha_to_j(const MultiIndex& alpha);
MultiIndex j_to_alpha(const JTuple& j, std::size_t n);

// |[α]| = m!/α!.
struct Multinomial {
    std::optional<std::uint64_t> exact;  // present when m ≤ 20
    double log_value = 0.0;

    double value() const;
};

Multinomial multinomial_card(const MultiIndex& alpha);

// α = αT + αE with αT ∈ {0,1}^n and αE even.
std::pair<MultiIndex, MultiIndex> tetra_even_split(const MultiIndex& alpha);

// max over partitions of m of (m^{m/r}/m!) Π n_i!/n_i^{n_i/r}.
double composition_sup(unsigned m, double r, unsigned max_m = 40);

struct ExponentBundle {
    unsigned m = 1;
    double r = 2.0;
    double r_conj = 2.0;
    double q = 2.0;
    double q_conj = 2.0;
    double sigma = 0.0;
    std::optional<double> s;  // absent for m ≤ 2
    double theta = 0.0;
    // θ used for the interpolation step: 1/2 (m=3), (3-√5)/2 (m=4), theta otherwise.
    double interpolation_theta = 0.0;
};

ExponentBundle exponent_bundle(unsigned m, double r);

struct ThetaCheck {
    double theta = 0.0;
    double inverse_theta = 0.0;         // 1/θ
    double power = 0.0;                 // (1/(1-θ))^{m-2}
    double target = 0.0;                // m / log m
    bool holds = false;
};

ThetaCheck theta_inequality_check(unsigned m);

}  // namespace monconv
