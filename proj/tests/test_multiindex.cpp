#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "monconv/multiindex.hpp"

using namespace monconv;

namespace {

MultiIndex mi(std::vector<unsigned> e) { return MultiIndex(std::move(e)); }

std::uint64_t factorial(unsigned k) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

// m!/α! by direct factorials.
std::uint64_t multinomial_oracle(const MultiIndex& a) {
    std::uint64_t v = factorial(a.order());
    for (unsigned x : a.exponents()) v /= factorial(x);
    return v;
}

// Brute-force Λ(m, n): all tuples in {0..m}^n with sum m.
std::set<std::vector<unsigned>> lambda_oracle(unsigned m, std::size_t n) {
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            e[i] = left;
            out.insert(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, m);
    return out;
}

// Partition enumeration oracle in plain double arithmetic.
double composition_oracle(unsigned m, double r) {
    double best = 0.0;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
        if (left == 0) {
            double v = std::pow(double(m), double(m) / r) / std::tgamma(double(m) + 1);
            for (unsigned p : parts) v *= std::tgamma(double(p) + 1) / std::pow(double(p), double(p) / r);
            best = std::max(best, v);
            return;
        }
        for (unsigned p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(m, m);
    return best;
}

}  // namespace

TEST_CASE("binomial and lambda counts") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
    for (unsigned m = 0; m <= 8; ++m)
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto all = enumerate_lambda(m, n);
            REQUIRE(all.size() == lambda_count(m, n));
            REQUIRE(all.size() == binomial(m + n - 1, m));
            REQUIRE(enumerate_J(m, n).size() == all.size());
        }
}

TEST_CASE("Λ(m, n) matches brute force and is in colex order") {
    for (unsigned m = 0; m <= 5; ++m)
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto all = enumerate_lambda(m, n);
            std::set<std::vector<unsigned>> got;
            for (std::size_t i = 0; i < all.size(); ++i) {
                got.insert(all[i].exponents());
                if (i) REQUIRE(colex_less(all[i - 1], all[i]));
            }
            REQUIRE(got == lambda_oracle(m, n));
        }
    const auto small = enumerate_lambda(2, 2);
    REQUIRE(small.size() == 3);
    CHECK(small[0] == mi({2, 0}));
    CHECK(small[1] == mi({1, 1}));
    CHECK(small[2] == mi({0, 2}));
    CHECK(enumerate_lambda(0, 4) == std::vector<MultiIndex>{MultiIndex::zero(4)});
    CHECK(enumerate_lambda(5, 1) == std::vector<MultiIndex>{mi({5})});
}

TEST_CASE("lambda stream restarts") {
    LambdaStream s(3, 3);
    std::size_t count = 0;
    for (; !s.done(); s.advance()) ++count;
    CHECK(count == 10);
    s.restart();
    CHECK(s.current() == mi({3, 0, 0}));
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(enumerate_lambda(10, 10, 100), budget_error);
    try {
        enumerate_lambda(4, 4, 10);
    } catch (const budget_error& e) {
        CHECK(e.count() == 35);
        CHECK(e.budget() == 10);
    }
}

TEST_CASE("alpha and j are inverse bijections") {
    CHECK(alpha_to_j(mi({2, 1})) == JTuple({1, 1, 2}));
    for (unsigned m = 0; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n)
            for (const auto& a : enumerate_lambda(m, n)) REQUIRE(j_to_alpha(alpha_to_j(a), n) == a);
    for (const auto& j : enumerate_J(4, 4)) REQUIRE(alpha_to_j(j_to_alpha(j, 4)) == j);
    CHECK_THROWS_AS(JTuple({2, 1}), dimension_error);
    CHECK_THROWS_AS(j_to_alpha(JTuple({1, 5}), 4), dimension_error);
}

TEST_CASE("multinomial cardinality") {
    CHECK(*multinomial_card(mi({4, 0, 0})).exact == 1);
    CHECK(*multinomial_card(mi({2, 1})).exact == 3);
    CHECK(*multinomial_card(mi({1, 1, 1})).exact == 6);
    for (const auto& a : enumerate_lambda(6, 4)) REQUIRE(*multinomial_card(a).exact == multinomial_oracle(a));
    const Multinomial big = multinomial_card(mi({15, 15}));
    CHECK_FALSE(big.exact.has_value());
    CHECK(big.log_value == doctest::Approx(std::lgamma(31.0) - 2 * std::lgamma(16.0)));
}

TEST_CASE("tetrahedral / even split") {
    auto [t, e] = tetra_even_split(mi({3, 2, 1}));
    CHECK(t == mi({1, 0, 1}));
    CHECK(e == mi({2, 2, 0}));
    auto [t2, e2] = tetra_even_split(mi({2, 4}));
    CHECK(t2 == mi({0, 0}));
    auto [t3, e3] = tetra_even_split(mi({1, 1}));
    CHECK(t3 == mi({1, 1}));
    CHECK(e3 == mi({0, 0}));

    for (unsigned m = 0; m <= 6; ++m)
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& a : enumerate_lambda(m, n)) {
                auto [aT, aE] = tetra_even_split(a);
                REQUIRE(aT.is_tetrahedral());
                REQUIRE(aE.is_even());
                for (std::size_t i = 0; i < n; ++i) REQUIRE(aT[i] + aE[i] == a[i]);
                REQUIRE(multinomial_oracle(a) <=
                        (std::uint64_t(1) << m) * multinomial_oracle(aT) * multinomial_oracle(aE));
            }
}

TEST_CASE("|[2β]| against |[β]|²") {
    // The squared bound fails once two coordinates are nonzero: |[(2,2)]| = 6 > 4 = |[(1,1)]|².
    CHECK(multinomial_oracle(mi({2, 2})) == 6);
    CHECK(multinomial_oracle(mi({1, 1})) == 2);
    std::size_t violations = 0;
    for (unsigned k = 0; k <= 5; ++k)
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& b : enumerate_lambda(k, n)) {
                std::vector<unsigned> d = b.exponents();
                for (auto& x : d) x *= 2;
                const std::uint64_t c = multinomial_oracle(b);
                const std::uint64_t doubled = multinomial_oracle(mi(d));
                violations += doubled > c * c;
                // C(2k,k) ≤ 2^{2k} and C(2b,b) ≥ 2^b give the extra 2^{|β|}.
                REQUIRE(doubled <= (std::uint64_t(1) << k) * c * c);
                if (std::count_if(d.begin(), d.end(), [](unsigned x) { return x > 0; }) <= 1)
                    REQUIRE(doubled <= c * c);
            }
    CHECK(violations > 0);
}

TEST_CASE("tetrahedral and even subsets") {
    const auto t = enumerate_lambda_T(2, 3);
    REQUIRE(t.size() == 3);
    for (const auto& a : t) CHECK(a.is_tetrahedral());
    CHECK(enumerate_lambda_E(2, 2) == std::vector<MultiIndex>{mi({2, 0}), mi({0, 2})});
    CHECK(enumerate_lambda_E(3, 5).empty());
    for (unsigned m = 0; m <= 6; ++m)
        for (std::size_t n = 1; n <= 5; ++n) {
            std::size_t nt = 0, ne = 0;
            for (const auto& a : enumerate_lambda(m, n)) {
                nt += a.is_tetrahedral();
                ne += a.is_even();
            }
            REQUIRE(enumerate_lambda_T(m, n).size() == nt);
            REQUIRE(enumerate_lambda_E(m, n).size() == ne);
        }
}

TEST_CASE("composition sup") {
    CHECK(composition_sup(1, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(composition_sup(2, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double r : {1.25, 1.5, 2.0, 3.0})
        for (unsigned m = 1; m <= 14; ++m)
            REQUIRE(composition_sup(m, r) == doctest::Approx(composition_oracle(m, r)).epsilon(1e-12));
    CHECK_THROWS_AS(composition_sup(41, 2.0), budget_error);
}

TEST_CASE("exponent bundle") {
    const ExponentBundle b = exponent_bundle(2, 2.0);
    CHECK(b.q == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(b.sigma == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_FALSE(b.s.has_value());
    CHECK(exponent_bundle(1, 1.7).q == doctest::Approx(1.7));
    const ExponentBundle b3 = exponent_bundle(3, 2.0);
    CHECK(b3.q == doctest::Approx(6.0 / 5.0));
    CHECK(b3.sigma == doctest::Approx(1.0 / 3.0));
    CHECK(*b3.s == doctest::Approx(2.0));
    CHECK(*exponent_bundle(4, 2.0).s == doctest::Approx((3 + std::sqrt(5.0)) / 2));
    CHECK(*exponent_bundle(5, 2.0).s == doctest::Approx(5 / std::log(5.0)));
    for (unsigned m = 1; m <= 30; ++m)
        for (double r = 1.05; r < 8; r += 0.37) {
            const auto e = exponent_bundle(m, r);
            REQUIRE(std::abs(e.sigma - (1 / e.q - 1 / r)) <= 1e-15);
            REQUIRE(std::abs(e.sigma - (double(m) - 1) / m * (1 - 1 / r)) <= 1e-15);
        }
    CHECK_THROWS_AS(exponent_bundle(0, 2.0), precondition_error);
    CHECK_THROWS_AS(exponent_bundle(2, 1.0), precondition_error);
}

TEST_CASE("theta inequality") {
    const ThetaCheck c5 = theta_inequality_check(5);
    CHECK(c5.power == doctest::Approx(3.163).epsilon(1e-3));
    CHECK(c5.inverse_theta == doctest::Approx(3.137).epsilon(1e-3));
    CHECK(c5.target == doctest::Approx(3.107).epsilon(1e-3));
    for (unsigned m = 5; m <= 200; ++m) REQUIRE(theta_inequality_check(m).holds);
    CHECK_THROWS_AS(theta_inequality_check(4), precondition_error);
}
