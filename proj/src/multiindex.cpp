#include "monconv/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace monconv {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

void check_budget(const char* what, std::uint64_t count, std::uint64_t budget) {
    if (count > budget) throw budget_error(what, double(count), double(budget));
}

}  // namespace

std::uint64_t default_budget() {
    static const std::uint64_t value = [] {
        if (const char* env = std::getenv("MONCONV_BUDGET")) {
            char* end = nullptr;
            const unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0) return std::uint64_t(parsed);
        }
        return std::uint64_t(100'000'000);
    }();
    return value;
}

MultiIndex::MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {
    order_ = std::accumulate(e_.begin(), e_.end(), 0u);
}

bool MultiIndex::is_tetrahedral() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](unsigned a) { return a <= 1; });
}

bool MultiIndex::is_even() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](unsigned a) { return a % 2 == 0; });
}

bool colex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    if (a.order() != b.order()) return a.order() < b.order();
    for (std::size_t i = a.dimension(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

JTuple::JTuple(std::vector<std::size_t> indices) : j_(std::move(indices)) {
    for (std::size_t i = 0; i < j_.size(); ++i) {
        if (j_[i] < 1) throw dimension_error("j-tuple entries are 1-based");
        if (i > 0 && j_[i] < j_[i - 1]) throw dimension_error("j-tuple must be nondecreasing");
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > kSaturated) return kSaturated;
    }
    return std::uint64_t(result);
}

std::uint64_t lambda_count(unsigned m, std::size_t n) {
    if (n == 0) return m == 0 ? 1 : 0;
    return binomial(std::uint64_t(m) + n - 1, m);
}

LambdaStream::LambdaStream(unsigned m, std::size_t n, std::uint64_t budget) : m_(m), n_(n) {
    if (n == 0) throw dimension_error("dimension must be at least 1");
    check_budget("|Lambda(m,n)|", lambda_count(m, n), budget);
    restart();
}

void LambdaStream::restart() {
    e_.assign(n_, 0);
    e_[0] = m_;
    current_ = MultiIndex(e_);
    done_ = false;
}

void LambdaStream::advance() {
    if (done_) return;
    std::size_t j = 0;
    while (j < n_ && e_[j] == 0) ++j;
    if (j + 1 >= n_) {
        done_ = true;
        return;
    }
    const unsigned t = e_[j] - 1;
    e_[j] = 0;
    e_[j + 1] += 1;
    e_[0] = t;
    current_ = MultiIndex(e_);
}

std::vector<MultiIndex> enumerate_lambda(unsigned m, std::size_t n, std::uint64_t budget) {
    std::vector<MultiIndex> out;
    out.reserve(std::size_t(lambda_count(m, n) <= budget ? lambda_count(m, n) : 0));
    for (LambdaStream s(m, n, budget); !s.done(); s.advance()) out.push_back(s.current());
    return out;
}

std::vector<MultiIndex> enumerate_lambda_T(unsigned m, std::size_t n, std::uint64_t budget) {
    if (n == 0) throw dimension_error("dimension must be at least 1");
    if (m > n) return {};
    check_budget("|Lambda_T(m,n)|", binomial(n, m), budget);
    std::vector<MultiIndex> out;
    // Colex walk over m-subsets {c_0 < ... < c_{m-1}} of {0, ..., n-1}.
    std::vector<std::size_t> c(m);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        std::vector<unsigned> e(n, 0);
        for (auto i : c) e[i] = 1;
        out.emplace_back(std::move(e));
        std::size_t i = 0;
        while (i < m && c[i] + 1 == (i + 1 < m ? c[i + 1] : n)) ++i;
        if (i == m) break;
        ++c[i];
        for (std::size_t k = 0; k < i; ++k) c[k] = k;
    }
    return out;
}

std::vector<MultiIndex> enumerate_lambda_E(unsigned m, std::size_t n, std::uint64_t budget) {
    if (m % 2 != 0) return {};
    std::vector<MultiIndex> out;
    for (LambdaStream s(m / 2, n, budget); !s.done(); s.advance()) {
        std::vector<unsigned> e = s.current().exponents();
        for (auto& a : e) a *= 2;
        out.emplace_back(std::move(e));
    }
    return out;
}

std::vector<JTuple> enumerate_J(unsigned m, std::size_t n, std::uint64_t budget) {
    if (n == 0) throw dimension_error("dimension must be at least 1");
    check_budget("|J(m,n)|", lambda_count(m, n), budget);
    std::vector<JTuple> out;
    std::vector<std::size_t> j(m, 1);
    for (;;) {
        out.emplace_back(j);
        std::size_t i = m;
        while (i > 0 && j[i - 1] == n) --i;
        if (i == 0) break;
        const std::size_t v = j[i - 1] + 1;
        std::fill(j.begin() + std::ptrdiff_t(i - 1), j.end(), v);
    }
    return out;
}

JTuple alpha_to_j(const MultiIndex& alpha) {
    std::vector<std::size_t> j;
    j.reserve(alpha.order());
    for (std::size_t i = 0; i < alpha.dimension(); ++i) j.insert(j.end(), alpha[i], i + 1);
    return JTuple(std::move(j));
}

MultiIndex j_to_alpha(const JTuple& j, std::size_t n) {
    std::vector<unsigned> e(n, 0);
    for (std::size_t k : j.indices()) {
        if (k > n) throw dimension_error("j-tuple entry exceeds the dimension");
        ++e[k - 1];
    }
    return MultiIndex(std::move(e));
}

double Multinomial::value() const {
    return exact ? double(*exact) : std::exp(log_value);
}

Multinomial multinomial_card(const MultiIndex& alpha) {
    Multinomial out;
    out.log_value = std::lgamma(double(alpha.order()) + 1.0);
    for (unsigned a : alpha.exponents()) out.log_value -= std::lgamma(double(a) + 1.0);
    if (alpha.order() <= 20) {
        std::uint64_t value = 1;
        std::uint64_t partial = 0;
        for (unsigned a : alpha.exponents()) {
            partial += a;
            value *= binomial(partial, a);
        }
        out.exact = value;
    }
    return out;
}

std::pair<MultiIndex, MultiIndex> tetra_even_split(const MultiIndex& alpha) {
    std::vector<unsigned> t(alpha.dimension());
    std::vector<unsigned> e(alpha.dimension());
    for (std::size_t i = 0; i < alpha.dimension(); ++i) {
        t[i] = alpha[i] % 2;
        e[i] = alpha[i] - t[i];
    }
    return {MultiIndex(std::move(t)), MultiIndex(std::move(e))};
}

double composition_sup(unsigned m, double r, unsigned max_m) {
    if (m < 1) throw precondition_error("composition_sup needs m >= 1");
    if (!(r > 1.0)) throw precondition_error("composition_sup needs r > 1");
    if (m > max_m) throw budget_error("composition_sup order", m, max_m);

    auto part_log = [r](unsigned k) {
        return std::lgamma(double(k) + 1.0) - (double(k) / r) * std::log(double(k));
    };
    double best = -std::numeric_limits<double>::infinity();
    // Partitions of `rest` into parts ≤ cap, carrying the running log-product.
    std::function<void(unsigned, unsigned, double)> walk = [&](unsigned rest, unsigned cap, double acc) {
        if (rest == 0) {
            best = std::max(best, acc);
            return;
        }
        for (unsigned p = std::min(rest, cap); p >= 1; --p) walk(rest - p, p, acc + part_log(p));
    };
    walk(m, m, 0.0);
    const double lead = (double(m) / r) * std::log(double(m)) - std::lgamma(double(m) + 1.0);
    return std::exp(lead + best);
}

ExponentBundle exponent_bundle(unsigned m, double r) {
    if (m < 1) throw precondition_error("exponent bundle needs m >= 1");
    if (!(r > 1.0) || !std::isfinite(r)) throw precondition_error("exponent bundle needs 1 < r < inf");
    ExponentBundle b;
    b.m = m;
    b.r = r;
    b.r_conj = r / (r - 1.0);
    b.q = double(m) * r / (r * double(m - 1) + 1.0);
    b.q_conj = b.q / (b.q - 1.0);
    b.sigma = (double(m - 1) / double(m)) * (1.0 - 1.0 / r);
    if (m == 3)
        b.s = 2.0;
    else if (m == 4)
        b.s = (3.0 + std::sqrt(5.0)) / 2.0;
    else if (m >= 5)
        b.s = double(m) / std::log(double(m));
    const double l = std::log(double(m) + 1.5);
    b.theta = l / (double(m) - 1.0 + l);
    if (m == 3)
        b.interpolation_theta = 0.5;
    else if (m == 4)
        b.interpolation_theta = (3.0 - std::sqrt(5.0)) / 2.0;
    else
        b.interpolation_theta = b.theta;
    return b;
}

ThetaCheck theta_inequality_check(unsigned m) {
    if (m < 5) throw precondition_error("theta inequality is stated for m >= 5");
    ThetaCheck c;
    const double l = std::log(double(m) + 1.5);
    c.theta = l / (double(m) - 1.0 + l);
    c.inverse_theta = 1.0 / c.theta;
    c.power = std::pow(1.0 / (1.0 - c.theta), double(m - 2));
    c.target = double(m) / std::log(double(m));
    c.holds = c.inverse_theta >= c.target && c.power >= c.target;
    return c;
}

}  // namespace monconv
