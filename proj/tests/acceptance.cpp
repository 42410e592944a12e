// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                  run all criteria
//   acceptance --criterion N    run criterion N only (1..12)

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "cli.hpp"
#include "monconv/asymptotics.hpp"
#include "monconv/harness.hpp"
#include "monconv/rng.hpp"

using namespace monconv;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::pair<std::string, std::size_t>> failures;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        auto it = std::find_if(failures.begin(), failures.end(), [&](const auto& f) { return f.first == what; });
        if (it == failures.end()) failures.emplace_back(what, 1);
        else ++it->second;
    }

    std::string summary() const {
        std::string s = detail.str();
        if (failures.empty()) return s;
        s += " | failed:";
        for (const auto& [what, count] : failures) {
            s += " " + what;
            if (count > 1) s += " (x" + std::to_string(count) + ")";
            s += ";";
        }
        s.pop_back();
        return s;
    }
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(Outcome&)> body;
};

std::uint64_t factorial(unsigned k) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

std::uint64_t multinomial_exact(const MultiIndex& a) {
    std::uint64_t v = factorial(a.order());
    for (unsigned x : a.exponents()) v /= factorial(x);
    return v;
}

Eigen::VectorXd random_magnitudes(CounterRng& rng, Index len) {
    Eigen::VectorXd v(len);
    for (Index i = 0; i < len; ++i) v[i] = rng.uniform() < 0.2 ? 0.0 : rng.uniform() * 3.0;
    return v;
}

std::vector<Json> run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    std::vector<Json> recs;
    std::istringstream is(out.str());
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) recs.push_back(Json::parse(line));
    if (code == cli::kExitUsage) std::cerr << err.str();
    return recs;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// ---- criteria ----

void exact_combinatorics(Outcome& o) {
    for (unsigned m = 0; m <= 8; ++m)
        for (std::size_t n = 1; n <= 8; ++n)
            o.require(enumerate_lambda(m, n).size() == binomial(m + n - 1, m) && lambda_count(m, n) == binomial(m + n - 1, m),
                      "|Λ(" + std::to_string(m) + "," + std::to_string(n) + ")|");
    std::size_t roundtrips = 0;
    for (unsigned m = 0; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n)
            for (const auto& a : enumerate_lambda(m, n)) {
                o.require(j_to_alpha(alpha_to_j(a), n) == a, "alpha/j round trip");
                ++roundtrips;
            }
    std::size_t splits = 0;
    for (unsigned m = 0; m <= 6; ++m)
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& a : enumerate_lambda(m, n)) {
                const auto [t, e] = tetra_even_split(a);
                bool sum_ok = t.is_tetrahedral() && e.is_even();
                for (std::size_t i = 0; i < n; ++i) sum_ok = sum_ok && t[i] + e[i] == a[i];
                o.require(sum_ok, "α = αT + αE");
                o.require(multinomial_exact(a) <= (std::uint64_t(1) << m) * multinomial_exact(t) * multinomial_exact(e),
                          "|[α]| ≤ 2^m |[αT]| |[αE]|");
                ++splits;
            }
    std::size_t doubles = 0;
    for (unsigned k = 0; k <= 5; ++k)
        for (std::size_t n = 1; n <= 5; ++n)
            for (const auto& b : enumerate_lambda(k, n)) {
                std::vector<unsigned> d = b.exponents();
                for (auto& x : d) x *= 2;
                const std::uint64_t c = multinomial_exact(b);
                o.require(multinomial_exact(MultiIndex(d)) <= c * c, "|[2β]| ≤ |[β]|²");
                o.require(*multinomial_card(b).exact == c, "multinomial_card");
                ++doubles;
            }
    o.detail << roundtrips << " round trips, " << splits << " splits, " << doubles << " doublings";
}

void rearrangement_suite(Outcome& o) {
    CounterRng rng(1);
    std::size_t fails = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Index len = 1 + Index(rng.uniform() * 16);
        const MagnitudeVector v(random_magnitudes(rng, len));
        std::vector<Index> pool(std::size_t(3 * len));
        std::iota(pool.begin(), pool.end(), 1);
        for (std::size_t i = pool.size() - 1; i > 0; --i)
            std::swap(pool[i], pool[std::size_t(rng.uniform() * double(i + 1))]);
        const auto vs = decreasing_rearrangement(v).entries();

        const InjectionMap sigma(std::vector<Index>(pool.begin(), pool.begin() + len));
        const auto s = decreasing_rearrangement(apply_S_sigma(v, sigma)).entries();
        bool ok = (s.head(len).array() == vs.array()).all() && (s.tail(s.size() - len).array() == 0).all();

        const Index k = 1 + Index(rng.uniform() * double(len));
        const MagnitudeVector padded(v.entries(), 3 * len);
        const InjectionMap tau(std::vector<Index>(pool.end() - k, pool.end()));
        const auto t = decreasing_rearrangement(apply_T_sigma(padded, tau)).entries();
        for (Index i = 0; i < t.size(); ++i) ok = ok && t[i] <= (i < vs.size() ? vs[i] : 0.0);

        const MagnitudeVector w(random_magnitudes(rng, len));
        const double lhs = v.entries().dot(w.entries());
        const double rhs = vs.dot(decreasing_rearrangement(w).entries());
        ok = ok && lhs <= rhs * (1 + 1e-15) + 1e-15;
        fails += !ok;
    }
    o.require(fails == 0, std::to_string(fails) + " trials");
    o.detail << "1000 trials, " << fails << " failures";
}

void norm_suite(Outcome& o) {
    CounterRng rng(3);
    std::size_t fails = 0;
    double worst_collapse = 0;
    for (int t = 0; t < 500; ++t) {
        const MagnitudeVector v(random_magnitudes(rng, 1 + Index(rng.uniform() * 20)));
        const double p = 1.1 + 3.0 * rng.uniform();
        const double q = 1.0 + 3.0 * rng.uniform();
        const SeriesValue mx = lorentz_maximal_norm(v, {p, q}, 1e-9);
        fails += !(lorentz_quasinorm(v, {p, q}) <= mx.value + mx.radius + 1e-12);
        const double ell = ell_norm(v, p);
        if (ell > 0) worst_collapse = std::max(worst_collapse, std::abs(lorentz_quasinorm(v, {p, p}) - ell) / ell);
    }
    o.require(fails == 0, "quasi-norm above maximal norm");
    o.require(worst_collapse <= 1e-12, "p=q collapse " + fmt(worst_collapse));
    const auto psi = MarcinkiewiczSymbol::psi(2.0);
    const double e1 = marcinkiewicz_norm(MagnitudeVector{1.0}, psi);
    const double e2 = marcinkiewicz_norm(MagnitudeVector{1.0, 1.0}, psi);
    o.require(std::abs(e1 - 1 / std::sqrt(std::log(2.0))) <= 1e-9, "1/√log 2");
    o.require(std::abs(e2 - 2 / std::sqrt(std::log(3.0))) <= 1e-9, "2/√log 3");
    o.detail << "500 Lorentz trials, collapse error " << fmt(worst_collapse);
}

void exact_inequalities(Outcome& o) {
    std::size_t total = 0, verified = 0;
    auto batch = [&](const std::string& check, const std::string& r, const std::string& eps, unsigned M,
                     std::size_t N, std::uint64_t seed) {
        int code = 0;
        const auto recs = run_cli({"verify", "--check", check, "--r", r, "--eps", eps, "--M", std::to_string(M), "--N",
                                   std::to_string(N), "--trials", "200", "--seed", std::to_string(seed)},
                                  code);
        std::size_t ok = 0;
        for (const auto& j : recs) ok += j["status"] == "Verified";
        total += recs.size();
        verified += ok;
        o.require(code == cli::kExitOk && ok == recs.size() && recs.size() == 200,
                  check + " r=" + r + " M=" + std::to_string(M) + " has " + std::to_string(recs.size() - ok) +
                      " not Verified");
    };
    std::uint64_t seed = 100;
    for (const std::string r : {"1.25", "1.5", "2"}) {
        for (const std::string eps : {"0.5", "1"})
            for (auto [M, N] : std::vector<std::pair<unsigned, std::size_t>>{{6, 32}, {3, 12}}) {
                batch("tetra", r, eps, M, N, seed++);
                batch("general", r, eps, M, N, seed++);
            }
        for (unsigned M : {2u, 4u, 6u}) batch("even", r, "1", M, 32, seed++);
    }
    o.detail << verified << "/" << total << " Verified";
}

void norm_mediated(Outcome& o) {
    std::size_t total = 0, verified = 0, violated = 0;
    auto batch = [&](const std::string& check, unsigned m, std::size_t n, const std::string& extra_key,
                     const std::string& extra) {
        int code = 0;
        std::vector<std::string> args = {"verify", "--check", check, "--r", "1.5", "--m", std::to_string(m),
                                         "--n", std::to_string(n), "--trials", "100", "--restarts", "50",
                                         "--seed", "7"};
        if (!extra_key.empty()) args.insert(args.end(), {extra_key, extra});
        for (const auto& j : run_cli(args, code)) {
            ++total;
            verified += j["status"] == "Verified";
            violated += j["status"] == "Violated";
        }
        o.require(code != cli::kExitUsage, check + " usage error");
    };
    for (auto [m, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 6}, {3, 6}}) {
        batch("bds", m, n, "", "");
        batch("hyper", m, n, "--eps", "1");
        batch("mixed", m, n, "--k", std::to_string(m - 1));
    }
    const double share = total ? double(verified) / double(total) : 0.0;
    o.require(violated == 0, std::to_string(violated) + " Violated");
    o.require(share >= 0.9, "Verified share " + fmt(share));
    o.detail << total << " reports, " << violated << " Violated, Verified share " << fmt(share);
}

void optimizer_oracle(Outcome& o) {
    double worst_mono = 0;
    for (auto r : {1.5, 2.0, 3.0})
        for (const auto& e : std::vector<std::vector<unsigned>>{{1, 1}, {2, 1}, {1, 1, 1}, {3, 1, 2}, {2, 2, 0, 1}}) {
            const MultiIndex a(e);
            const auto P = HomogeneousPolynomial::from_terms(a.order(), a.dimension(), {{a, 1.0}});
            double l = 0;
            for (unsigned x : e)
                if (x) l += x * std::log(double(x));
            l -= a.order() * std::log(double(a.order()));
            const double closed = std::exp(l / r);
            const NormEstimate est = sup_norm_estimate(P, r, {20, 2000, 11, 0});
            worst_mono = std::max(worst_mono, std::abs(est.lower - closed) / closed);
        }
    o.require(worst_mono <= 1e-6, "monomial error " + fmt(worst_mono));
    double worst_plus = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto P = random_sign_polynomial(2, n, 0, SignMode::all_plus);
        const NormEstimate est = sup_norm_estimate(P, 2.0, {20, 2000, 5, 0});
        worst_plus = std::max(worst_plus, std::abs(est.lower - double(n)) / double(n));
    }
    o.require(worst_plus <= 1e-4, "all-plus error " + fmt(worst_plus));
    o.detail << "monomial rel. error " << fmt(worst_mono) << ", all-plus rel. error " << fmt(worst_plus);
}

void exponent_calculus(Outcome& o) {
    o.require(exponent_bundle(2, 2.0).q == 4.0 / 3.0, "q(2,2)");
    double worst = 0;
    for (unsigned m = 1; m <= 40; ++m)
        for (double r = 1.05; r < 10; r += 0.13) {
            const auto e = exponent_bundle(m, r);
            worst = std::max(worst, std::abs(e.sigma - (1 / e.q - 1 / r)));
        }
    o.require(worst <= 1e-15, "σ identity " + fmt(worst));
    o.require(*exponent_bundle(3, 2.0).s == 2.0, "s(3)");
    o.require(std::abs(*exponent_bundle(4, 2.0).s - (3 + std::sqrt(5.0)) / 2) <= 1e-15, "s(4)");
    o.require(std::abs(*exponent_bundle(5, 2.0).s - 5 / std::log(5.0)) <= 1e-15, "s(5)");
    bool theta = true;
    for (unsigned m = 5; m <= 200; ++m) theta = theta && theta_inequality_check(m).holds;
    o.require(theta, "θ inequality");
    o.detail << "σ identity error " << fmt(worst);
}

// Ratio cap for composition_sup / m^{(e^{1/(r-1)}-1)/2}, frozen from the m ≤ 20 table.
constexpr double kCompositionRatioCap = 1.0;

void composition(Outcome& o) {
    const double v1 = composition_sup(1, 2.0), v2 = composition_sup(2, 2.0), v3 = composition_sup(3, 2.0);
    o.require(std::abs(v1 - 1) <= 1e-12, "(1,·) = " + fmt(v1));
    o.require(std::abs(v2 - 1) <= 1e-12, "(2,2) = " + fmt(v2));
    o.require(std::abs(v3 - std::sqrt(1.5)) <= 1e-12, "(3,2) = " + fmt(v3) + ", expected 1.22474");
    double worst = 0;
    for (double r : {1.5, 2.0})
        for (unsigned m = 1; m <= 20; ++m)
            worst = std::max(worst, composition_sup(m, r) / std::pow(double(m), (std::exp(1 / (r - 1)) - 1) / 2));
    o.require(worst <= kCompositionRatioCap * (1 + 1e-12), "ratio " + fmt(worst));
    o.detail << "max ratio " << fmt(worst);
}

// Cap for min-norm / ((log m · m!)^{1/2} n^{1/2}), frozen from a 200-trial calibration run.
constexpr double kSignSearchCap = 1.5;

void sign_trend(Outcome& o) {
    double worst = 0;
    for (std::size_t n : {2, 4, 8, 16, 32}) {
        const SignSearchResult s = sign_polynomial_search(2, n, 2.0, 200, 2024);
        worst = std::max(worst, s.ratio_upper);
        o.detail << "n=" << n << ":" << fmt(s.ratio_upper) << " ";
    }
    o.require(worst <= kSignSearchCap, "max ratio " + fmt(worst) + " above " + fmt(kSignSearchCap));
}

void chi_trend(Outcome& o) {
    auto fit = [](Exponent r, Exponent s) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t n : {4, 8, 16, 32, 64}) pts.emplace_back(double(n), chi_estimate(2, n, r, s, 4, 42).value);
        return fit_exponent(pts).exponent;
    };
    const double two = fit(2.0, Exponent::infinity());
    const double one = fit(2.0, 1.0);
    o.require(std::abs(two - 1.5) <= 0.5, "(2,∞,2) exponent " + fmt(two));
    o.require(std::abs(one) <= 0.25, "(2,1,2) exponent " + fmt(one));
    o.detail << "(2,∞,2) " << fmt(two) << " vs 1.5, (2,1,2) " << fmt(one) << " vs 0";
}

void membership(Outcome& o) {
    std::vector<std::size_t> grid;
    for (int k = 4; k <= 14; ++k) grid.push_back(std::size_t(1) << k);
    const MembershipVerdict tele = hb_membership(SequenceFamily::telescoping(2.0), 2.0, grid);
    o.require(std::abs(tele.value - 1.0) <= 1e-9, "telescoping norm " + fmt(tele.value));
    const MembershipVerdict harm =
        hb_membership(SequenceFamily::harmonic(), 2.0, {16, 128, 1024, 8192, 65536}, 1.5);
    const double growth = harm.trend.back().second / harm.trend.front().second;
    o.require(growth >= 1.5, "harmonic growth " + fmt(growth));
    std::vector<std::size_t> ngrid;
    for (int k = 6; k <= 14; ++k) ngrid.push_back(std::size_t(1) << k);
    const MultiplierReport rep = multiplier_check(2.0, 3, SequenceFamily::log_damped(2.0), ngrid, 0.05);
    o.require(rep.optimality_trend.strictly_increasing,
              "optimality quasi-norm not strictly increasing (growth " + fmt(rep.optimality_trend.growth) + ")");
    o.detail << "telescoping " << fmt(tele.value) << ", harmonic growth " << fmt(growth)
             << ", optimality growth " << fmt(rep.optimality_trend.growth);
}

void impossibility(Outcome& o) {
    const auto pts = hyper_q2_impossibility(2.0, {16, 64, 256, 1024, 4096});
    std::vector<double> ratios;
    for (const auto& p : pts) {
        ratios.push_back(p.ratio);
        o.detail << "n=" << p.n << ":" << fmt(p.ratio) << " ";
    }
    o.require(summarize_trend(ratios).strictly_increasing, "ratio not strictly increasing");
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"exact combinatorics", 10, exact_combinatorics},
        {"rearrangement suite", 5, rearrangement_suite},
        {"norm suite", 5, norm_suite},
        {"exact inequality checks", 60, exact_inequalities},
        {"norm-mediated checks", 600, norm_mediated},
        {"optimizer oracle", 60, optimizer_oracle},
        {"exponent calculus", 1, exponent_calculus},
        {"composition_sup", 10, composition},
        {"sign-search trend", 300, sign_trend},
        {"chi trend", 600, chi_trend},
        {"membership predicates", 60, membership},
        {"impossibility demonstration", 60, impossibility},
    };
    return all;
}

bool run_one(std::size_t id) {
    const Criterion& c = criteria().at(id - 1);
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.budget_seconds, "runtime " + fmt(secs) + " s over " + fmt(c.budget_seconds) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << c.name << " (" << fmt(secs) << " s): "
              << o.summary() << std::endl;
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::size_t only = 0;
    app.add_option("--criterion", only, "criterion number")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    if (only) {
        ok = run_one(only);
    } else {
        for (std::size_t id = 1; id <= criteria().size(); ++id) ok = run_one(id) && ok;
    }
    return ok ? 0 : 1;
}
