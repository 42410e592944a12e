#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <vector>

#include "monconv/errors.hpp"
#include "monconv/exponent.hpp"

namespace monconv {

using Index = Eigen::Index;

// Finite section of a sequence. Entries past size() and up to ambient_dim() are zero.
// Real sequences are magnitudes and must be nonnegative.
template <typename Scalar>
class Sequence {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    Sequence() = default;

    explicit Sequence(Vector entries) : Sequence(std::move(entries), 0) {}

    Sequence(Vector entries, Index ambient_dim)
        : entries_(std::move(entries)),
          ambient_(std::max<Index>({ambient_dim, entries_.size(), 1})) {
        if (ambient_dim != 0 && ambient_dim < entries_.size())
            throw dimension_error("ambient dimension smaller than the number of entries");
        for (Index i = 0; i < entries_.size(); ++i) {
            if (!std::isfinite(std::abs(entries_[i])))
                throw precondition_error("sequence entries must be finite");
            if constexpr (std::is_floating_point_v<Scalar>) {
                if (entries_[i] < 0) throw precondition_error("magnitudes must be nonnegative");
            }
        }
    }

    Sequence(std::initializer_list<Scalar> values)
        : Sequence(Eigen::Map<const Vector>(values.begin(), Index(values.size()))) {}

    const Vector& entries() const noexcept { return entries_; }
    Index size() const noexcept { return entries_.size(); }
    Index ambient_dim() const noexcept { return ambient_; }

    // 0-based; reads zero past the stored entries.
    Scalar operator[](Index i) const { return i < entries_.size() ? entries_[i] : Scalar(0); }

    // Entries padded with zeros to the ambient dimension.
    Vector dense() const {
        Vector out = Vector::Zero(ambient_);
        out.head(entries_.size()) = entries_;
        return out;
    }

private:
    Vector entries_;
    Index ambient_ = 1;
};

using MagnitudeVector = Sequence<double>;
using ComplexVector = Sequence<std::complex<double>>;

template <typename Scalar>
MagnitudeVector modulus(const Sequence<Scalar>& v) {
    return MagnitudeVector(v.entries().cwiseAbs().template cast<double>(), v.ambient_dim());
}

// |v| sorted nonincreasing, same ambient dimension.
template <typename Scalar>
MagnitudeVector decreasing_rearrangement(const Sequence<Scalar>& v) {
    Eigen::VectorXd a = v.entries().cwiseAbs().template cast<double>();
    std::sort(a.begin(), a.end(), std::greater<>());
    return MagnitudeVector(std::move(a), v.ambient_dim());
}

bool is_nonincreasing(const MagnitudeVector& v);

// Injection σ: ℕ → ℕ restricted to {1, ..., size()}; values are 1-based.
class InjectionMap {
public:
    explicit InjectionMap(std::vector<Index> values);

    const std::vector<Index>& values() const noexcept { return values_; }
    Index size() const noexcept { return Index(values_.size()); }
    Index max_value() const noexcept { return max_; }
    Index operator()(Index k) const { return values_.at(std::size_t(k - 1)); }

private:
    std::vector<Index> values_;
    Index max_ = 0;
};

// (T_σ v)_k = v_{σ(k)}.
template <typename Scalar>
Sequence<Scalar> apply_T_sigma(const Sequence<Scalar>& v, const InjectionMap& sigma) {
    typename Sequence<Scalar>::Vector out(sigma.size());
    for (Index k = 0; k < sigma.size(); ++k) out[k] = v[sigma.values()[std::size_t(k)] - 1];
    return Sequence<Scalar>(std::move(out));
}

// (S_σ v)_{σ(i)} = v_i, zero elsewhere; σ must cover every stored entry.
template <typename Scalar>
Sequence<Scalar> apply_S_sigma(const Sequence<Scalar>& v, const InjectionMap& sigma) {
    if (sigma.size() < v.size())
        throw dimension_error("S_sigma needs sigma defined on every entry of v");
    typename Sequence<Scalar>::Vector out = Sequence<Scalar>::Vector::Zero(sigma.max_value());
    for (Index i = 0; i < v.size(); ++i) out[sigma.values()[std::size_t(i)] - 1] = v.entries()[i];
    return Sequence<Scalar>(std::move(out));
}

struct LorentzParams {
    Exponent p;
    Exponent q;
};

// Value of a convergent series with its certified truncation radius.
struct SeriesValue {
    double value = 0.0;
    double radius = 0.0;
};

struct SeriesBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct MarcinkiewiczSymbol {
    std::function<double(Index)> evaluator;
    std::string label;

    double operator()(Index n) const { return evaluator(n); }

    // Ψ_r(n) = log(n+1)^{1-1/r}.
    static MarcinkiewiczSymbol psi(double r);
};

double ell_norm(const MagnitudeVector& v, Exponent r);
double lorentz_quasinorm(const MagnitudeVector& v, const LorentzParams& params);
SeriesValue lorentz_maximal_norm(const MagnitudeVector& v, const LorentzParams& params,
                                 double tol = 1e-9);
double marcinkiewicz_norm(const MagnitudeVector& v, const MarcinkiewiczSymbol& symbol);

template <typename Scalar>
double ell_norm(const Sequence<Scalar>& v, Exponent r) {
    return ell_norm(modulus(v), r);
}
template <typename Scalar>
double lorentz_quasinorm(const Sequence<Scalar>& v, const LorentzParams& params) {
    return lorentz_quasinorm(modulus(v), params);
}
template <typename Scalar>
double marcinkiewicz_norm(const Sequence<Scalar>& v, const MarcinkiewiczSymbol& symbol) {
    return marcinkiewicz_norm(modulus(v), symbol);
}

double psi_r(Index n, double r);

// Bounds on Σ_{j≥1} log(j+1)^a / j^b for 0 ≤ a ≤ 1 < b, width at most tol.
SeriesBounds log_power_series(double a, double b, double tol);

// Upper bound for ‖id: m_{Ψ_r} → ℓ_r‖ via (Σ_j log(j+1)^{r-1}/j^r)^{1/r}.
SeriesBounds embedding_constant_bounds(double r, double tol = 1e-9);
double embedding_constant_upper(double r, double tol = 1e-9);

}  // namespace monconv
