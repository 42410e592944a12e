#include "monconv/seqspace.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <limits>
#include <unordered_set>

namespace monconv {

namespace {

// Neumaier compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

Eigen::VectorXd sorted_desc(const MagnitudeVector& v) {
    Eigen::VectorXd a = v.entries();
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

Index support_length(const Eigen::VectorXd& sorted) {
    Index len = sorted.size();
    while (len > 0 && sorted[len - 1] == 0.0) --len;
    return len;
}

// ∫_N^∞ log(x)^a x^{-b} dx for N > 1, b > 1.
double log_power_integral(double a, double b, double N) {
    const double c = b - 1.0;
    return boost::math::tgamma(a + 1.0, c * std::log(N)) / std::pow(c, a + 1.0);
}

}  // namespace

bool is_nonincreasing(const MagnitudeVector& v) {
    for (Index i = 1; i < v.size(); ++i)
        if (v.entries()[i] > v.entries()[i - 1]) return false;
    return true;
}

InjectionMap::InjectionMap(std::vector<Index> values) : values_(std::move(values)) {
    std::unordered_set<Index> seen;
    for (Index v : values_) {
        if (v < 1) throw precondition_error("injection values are 1-based positive integers");
        if (!seen.insert(v).second) throw precondition_error("injection values must be distinct");
        max_ = std::max(max_, v);
    }
}

MarcinkiewiczSymbol MarcinkiewiczSymbol::psi(double r) {
    return {[r](Index n) { return psi_r(n, r); }, "psi_r(r=" + Exponent(r).to_string() + ")"};
}

double psi_r(Index n, double r) {
    if (n < 1) throw precondition_error("psi_r needs n >= 1");
    return std::pow(std::log(double(n) + 1.0), 1.0 - 1.0 / r);
}

double ell_norm(const MagnitudeVector& v, Exponent r) {
    const auto& a = v.entries();
    if (a.size() == 0) return 0.0;
    const double peak = a.maxCoeff();
    if (peak == 0.0 || r.is_infinite()) return peak;
    const double p = r.value();
    Accumulator acc;
    for (Index i = 0; i < a.size(); ++i) acc.add(std::pow(a[i] / peak, p));
    return peak * std::pow(acc.value(), 1.0 / p);
}

double lorentz_quasinorm(const MagnitudeVector& v, const LorentzParams& params) {
    const Eigen::VectorXd z = sorted_desc(v);
    const Index len = support_length(z);
    const double ip = params.p.reciprocal();
    if (params.q.is_infinite()) {
        double best = 0.0;
        for (Index n = 1; n <= len; ++n) best = std::max(best, z[n - 1] * std::pow(double(n), ip));
        return best;
    }
    const double q = params.q.value();
    const double w = ip - 1.0 / q;
    Accumulator acc;
    for (Index n = 1; n <= len; ++n) acc.add(std::pow(z[n - 1] * std::pow(double(n), w), q));
    return std::pow(acc.value(), 1.0 / q);
}

SeriesValue lorentz_maximal_norm(const MagnitudeVector& v, const LorentzParams& params, double tol) {
    if (params.q.is_infinite()) throw precondition_error("maximal Lorentz norm needs q < inf");
    if (!(tol > 0)) throw precondition_error("tol must be positive");
    const Eigen::VectorXd z = sorted_desc(v);
    const Index len = support_length(z);
    if (len == 0) return {};

    const double q = params.q.value();
    const double ip = params.p.reciprocal();
    const double e = q * ip - 1.0 - q;  // exponent of n past the support
    if (e >= -1.0) throw divergent_series_error("maximal Lorentz series diverges for these (p, q)");

    Accumulator partial;
    double running = 0.0;
    for (Index n = 1; n <= len; ++n) {
        running += z[n - 1];
        partial.add(std::pow(double(n), q * ip - 1.0) * std::pow(running / double(n), q));
    }
    const double head = std::pow(running, q);  // S^q
    Index N = std::max<Index>(4 * len, 1);
    for (Index n = len + 1; n <= N; ++n) partial.add(head * std::pow(double(n), e));

    // Σ_{n>N} n^e by Euler-Maclaurin; n^e is completely monotone, so consecutive truncations
    // after the B_2 and B_4 terms bracket the sum.
    const double k = -e - 1.0;
    auto tail = [&](double x) {
        const double f = std::pow(x, e);
        const double base = std::pow(x, -k) / k - f / 2.0;
        const double d1 = e * f / x;
        const double d3 = e * (e - 1.0) * (e - 2.0) * f / (x * x * x);
        const double s2 = base - d1 / 12.0;
        return std::pair{s2, s2 + d3 / 720.0};
    };
    const Index cap = Index(1) << 31;
    for (;;) {
        const auto [t2, t4] = tail(double(N));
        const double lo = std::pow(partial.value() + head * std::min(t2, t4), 1.0 / q);
        const double hi = std::pow(partial.value() + head * std::max(t2, t4), 1.0 / q);
        if (hi - lo <= 2.0 * tol || N >= cap) return {0.5 * (lo + hi), 0.5 * (hi - lo)};
        for (Index n = N + 1; n <= 2 * N; ++n) partial.add(head * std::pow(double(n), e));
        N *= 2;
    }
}

double marcinkiewicz_norm(const MagnitudeVector& v, const MarcinkiewiczSymbol& symbol) {
    const Eigen::VectorXd z = sorted_desc(v);
    const Index len = std::min(support_length(z), v.ambient_dim());
    double best = 0.0;
    double running = 0.0;
    for (Index n = 1; n <= len; ++n) {
        running += z[n - 1];
        best = std::max(best, running / symbol(n));
    }
    return best;
}

SeriesBounds log_power_series(double a, double b, double tol) {
    if (!(a >= 0.0 && a <= 1.0 && b > 1.0))
        throw precondition_error("log_power_series needs 0 <= a <= 1 < b");
    if (!(tol > 0)) throw precondition_error("tol must be positive");

    auto term = [&](Index j) {
        return std::pow(std::log(double(j) + 1.0), a) * std::pow(double(j), -b);
    };
    Accumulator partial;
    Index N = 16;
    for (Index j = 1; j <= N; ++j) partial.add(term(j));

    // The terms decrease from j = 2 on, so for N >= 3
    //   ∫_{N+1}^∞ log(x)^a x^{-b} ≤ Σ_{j>N} ≤ ∫_N^∞ log(x)^a x^{-b} + a N^{-b} / b.
    double best_lo = 0.0;
    double best_hi = std::numeric_limits<double>::infinity();
    const Index cap = Index(1) << 32;
    for (;;) {
        const double s = partial.value();
        const double tail_lo = log_power_integral(a, b, double(N + 1));
        const double tail_hi = log_power_integral(a, b, double(N)) + a * std::pow(double(N), -b) / b;
        best_lo = std::max(best_lo, s + tail_lo);
        best_hi = std::min(best_hi, s + tail_hi);
        if (best_hi - best_lo <= tol || N >= cap) return {best_lo, best_hi};
        for (Index j = N + 1; j <= 2 * N; ++j) partial.add(term(j));
        N *= 2;
    }
}

SeriesBounds embedding_constant_bounds(double r, double tol) {
    if (!(r > 1.0 && r <= 2.0)) throw precondition_error("embedding constant needs 1 < r <= 2");
    // The root map has slope at most 1.2 on sums >= log 2.
    const SeriesBounds s = log_power_series(r - 1.0, r, tol / 1.25);
    return {std::pow(s.lower, 1.0 / r), std::pow(s.upper, 1.0 / r)};
}

double embedding_constant_upper(double r, double tol) {
    return embedding_constant_bounds(r, tol).upper;
}

}  // namespace monconv
