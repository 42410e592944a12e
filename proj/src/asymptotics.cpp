#include "monconv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monconv {

namespace {

constexpr double kRegionTol = 1e-12;

bool le(double a, double b) { return a <= b + kRegionTol; }
bool lt(double a, double b) { return a < b - kRegionTol; }

double inv(Exponent e) { return e.reciprocal(); }

void require_unit_range(Exponent e, const char* what) {
    if (!e.is_infinite() && e.value() < 1.0) throw precondition_error(std::string(what) + " must lie in [1, inf]");
}

}  // namespace

std::string to_string(Region region) {
    switch (region) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
    }
    return "?";
}

RegionConditions region_conditions(Exponent r, Exponent s, unsigned m) {
    require_unit_range(r, "r");
    require_unit_range(s, "s");
    if (m == 0) throw precondition_error("degree m must be at least 1");
    const double x = inv(r);
    const double y = inv(s);
    const double md = double(m);
    RegionConditions c;
    c.I = (le(x + (md - 1.0) / (2.0 * md), y) && le(x, 0.5)) ||
          (lt((md - 1.0) / md + x / md, y) && le(0.5, x));
    c.II = le(y, x + (md - 1.0) / (2.0 * md)) && le(x, 0.5);
    c.III = le(y, 1.0 - 1.0 / md + x / md) && lt(0.5, x) && le(x, 1.0);
    return c;
}

RegionLabel region_classify(Exponent r, Exponent s, unsigned m) {
    const RegionConditions c = region_conditions(r, s, m);
    const double x = inv(r);
    const double y = inv(s);
    const double md = double(m);
    if (c.I) return {Region::I, 0.0};
    if (c.II) return {Region::II, md * (x - y + 0.5) - 0.5};
    if (c.III) return {Region::III, (md - 1.0) * (1.0 - y) + x - y};
    throw precondition_error("no region matches (r, s, m)");
}

ChiRatio chi_ratio(const HomogeneousPolynomial& P, Exponent r, Exponent s, const OptimizerOptions& options) {
    std::vector<HomogeneousPolynomial::Term> abs_terms = P.terms();
    for (auto& t : abs_terms) t.coeff = std::abs(t.coeff);
    const HomogeneousPolynomial absP = HomogeneousPolynomial::from_terms(P.degree(), P.dimension(), abs_terms);

    ChiRatio out;
    if (P.size() == 0) return out;
    const std::size_t n = P.dimension();
    if (P.degree() == 1) {
        out.numerator_lower = certified_upper_bound(absP, s);  // exact for linear forms
    } else {
        const Eigen::VectorXd uniform =
            Eigen::VectorXd::Constant(Index(n), s.is_infinite() ? 1.0 : std::pow(double(n), -inv(s)));
        out.numerator_lower =
            std::max(sup_norm_estimate(absP, s, options).lower, monomial_abs_sum(absP, uniform));
    }
    out.denominator_upper = certified_upper_bound(P, r);
    out.ratio = out.numerator_lower / out.denominator_upper;
    return out;
}

ChiEstimate chi_estimate(unsigned m, std::size_t n, Exponent r, Exponent s, std::size_t trials,
                         std::uint64_t seed, const OptimizerOptions& options) {
    if (m == 0) throw precondition_error("degree m must be at least 1");
    if (n == 0) throw dimension_error("dimension must be at least 1");
    ChiEstimate est;
    std::uint64_t candidate = 0;
    auto consider = [&](const HomogeneousPolynomial& P, const std::string& kind, std::uint64_t cand_seed) {
        OptimizerOptions o = options;
        o.seed = options.seed + candidate++;
        const double ratio = chi_ratio(P, r, s, o).ratio;
        if (est.running.empty() || ratio > est.value) {
            est.value = ratio;
            est.witness_kind = kind;
            est.witness_seed = cand_seed;
            est.witness = P;
        }
        est.running.push_back(est.value);
    };

    std::vector<unsigned> e(n, 0);
    e[0] = m;
    consider(HomogeneousPolynomial::from_terms(m, n, {{MultiIndex(e), 1.0}}), "monomial", seed);
    consider(random_sign_polynomial(m, n, seed, SignMode::all_plus), "all_plus", seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s_t = seed + t;
        consider(random_sign_polynomial(m, n, s_t, SignMode::random), "random_sign", s_t);
        consider(random_polynomial(m, n, CoefficientDistribution::complex_gaussian, s_t), "gaussian", s_t);
    }
    return est;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw precondition_error("fit needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0))
            throw precondition_error("fit needs positive n and values");
        if (i > 0 && !(points[i].first > points[i - 1].first))
            throw precondition_error("fit needs strictly increasing n");
    }
    const Index k = Index(points.size());
    Eigen::VectorXd x(k), y(k);
    for (Index i = 0; i < k; ++i) {
        x[i] = std::log(points[std::size_t(i)].first);
        y[i] = std::log(points[std::size_t(i)].second);
    }
    const double mx = x.mean();
    const double my = y.mean();
    const Eigen::VectorXd dx = x.array() - mx;
    const Eigen::VectorXd dy = y.array() - my;
    FitResult f;
    f.exponent = dx.dot(dy) / dx.squaredNorm();
    f.intercept = my - f.exponent * mx;
    const Eigen::VectorXd res = y.array() - (f.intercept + f.exponent * x.array());
    f.residual = std::sqrt(res.squaredNorm() / double(k));
    f.points = points;
    return f;
}

BohrEstimate bohr_radius_estimate(Exponent p, Exponent q, std::size_t n, unsigned m_max, std::size_t trials,
                                  std::uint64_t seed, const OptimizerOptions& options) {
    if (m_max == 0) throw precondition_error("m_max must be at least 1");
    BohrEstimate b;
    double best = 0.0;
    for (unsigned m = 1; m <= m_max; ++m) {
        const double root = std::pow(chi_estimate(m, n, p, q, trials, seed, options).value, 1.0 / double(m));
        b.chi_roots.push_back(root);
        if (root > best) {
            best = root;
            b.maximizing_m = m;
        }
    }
    b.value = 1.0 / best;
    return b;
}

MultiplierReport multiplier_check(double r, unsigned m, const SequenceFamily& family,
                                  const std::vector<std::size_t>& N_grid, double eps, double increment_tol,
                                  double min_growth) {
    if (N_grid.empty()) throw precondition_error("N grid must not be empty");
    for (std::size_t i = 0; i < N_grid.size(); ++i)
        if (N_grid[i] == 0 || (i > 0 && N_grid[i] <= N_grid[i - 1]))
            throw precondition_error("N grid must be positive and strictly increasing");
    if (!(eps > 0.0)) throw precondition_error("eps must be positive");

    MultiplierReport rep;
    rep.bundle = exponent_bundle(m, r);
    const double q = rep.bundle.q;
    const double sigma = rep.bundle.sigma;
    const std::size_t N_max = N_grid.back();
    const SequenceFamily optimal = SequenceFamily::log_damped(r);

    Eigen::VectorXd w(static_cast<Index>(N_max)), u(static_cast<Index>(N_max));
    for (std::size_t k = 1; k <= N_max; ++k) {
        const double nk = double(k);
        w[Index(k - 1)] = family.term(k) * std::pow(nk, -sigma);
        u[Index(k - 1)] = optimal.term(k) * std::pow(nk, eps - sigma);
    }

    std::vector<double> opt_values;
    for (std::size_t N : N_grid) {
        const double pos = lorentz_quasinorm(MagnitudeVector(Eigen::VectorXd(w.head(Index(N)))), {q, r});
        const double opt =
            lorentz_quasinorm(MagnitudeVector(Eigen::VectorXd(u.head(Index(N)))), {q, Exponent::infinity()});
        rep.positive.emplace_back(N, pos);
        rep.optimality.emplace_back(N, opt);
        opt_values.push_back(opt);
    }
    for (std::size_t i = 1; i < rep.positive.size(); ++i)
        rep.positive_increments.push_back(rep.positive[i].second - rep.positive[i - 1].second);

    rep.positive_bounded = true;
    for (std::size_t i = 1; i < rep.positive_increments.size(); ++i)
        if (!(rep.positive_increments[i] < rep.positive_increments[i - 1])) rep.positive_bounded = false;
    if (!rep.positive_increments.empty() && !(rep.positive_increments.back() < increment_tol))
        rep.positive_bounded = false;

    rep.optimality_trend = summarize_trend(opt_values);
    rep.optimality_divergent = opt_values.size() >= 5 && rep.optimality_trend.strictly_increasing &&
                               rep.optimality_trend.growth >= min_growth;
    return rep;
}

std::string chi_table_csv(const std::vector<ChiTableRow>& rows) {
    std::ostringstream os;
    os << "n,estimate,fitted_exponent,predicted_exponent\n";
    for (const auto& row : rows)
        os << row.n << ',' << format_double(row.estimate) << ',' << format_double(row.fitted_exponent) << ','
           << format_double(row.predicted_exponent) << '\n';
    return os.str();
}

}  // namespace monconv
