#include "monconv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "monconv/parallel.hpp"

namespace monconv {

namespace {

constexpr double kE = std::numbers::e;

// Series evaluations are reused across whole batches.
double cached_embedding_upper(double r) {
    static std::mutex mu;
    static std::map<double, double> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    return cache[r] = embedding_constant_upper(r, 1e-6);
}

double cached_hyper_series(double r, double eps) {
    static std::mutex mu;
    static std::map<std::pair<double, double>, double> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(r, eps);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double rc = r / (r - 1.0);
    return cache[key] = log_power_series(2.0 / rc, 1.0 + eps / ((1.0 + eps) * rc), 1e-6).upper;
}

void require_r(double r) {
    if (!(r > 1.0 && r <= 2.0)) throw precondition_error("r must lie in (1, 2]");
}

void require_eps(double eps) {
    if (!(eps > 0.0)) throw precondition_error("eps must be positive");
}

// z as a decreasing element of C^N.
Eigen::VectorXd decreasing_section(const MagnitudeVector& z, std::size_t N) {
    if (Index(N) < z.size()) throw dimension_error("vector longer than N");
    if (!is_nonincreasing(z)) throw precondition_error("z must be nonincreasing");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(Index(N));
    out.head(z.size()) = z.entries();
    return out;
}

Json vector_json(const Eigen::VectorXd& v) {
    return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

Json complex_json(const ComplexVector& v) {
    Json re = Json::array();
    Json im = Json::array();
    for (Index i = 0; i < v.size(); ++i) {
        re.push_back(v.entries()[i].real());
        im.push_back(v.entries()[i].imag());
    }
    return Json{{"re", re}, {"im", im}};
}

// Σ over α with |α| = M and allowed exponents of Π z_i^{α_i}/(α_i!)^{1/r}, times (M!)^{1/r}.
template <typename Allowed>
double weighted_sum(const Eigen::VectorXd& z, unsigned M, double r, Allowed allowed) {
    std::vector<double> acc(M + 1, 0.0);
    acc[0] = 1.0;
    std::vector<double> w(M + 1);
    for (Index i = 0; i < z.size(); ++i) {
        for (unsigned j = 0; j <= M; ++j)
            w[j] = allowed(j) ? std::pow(z[i], double(j)) * std::exp(-std::lgamma(double(j) + 1.0) / r) : 0.0;
        for (unsigned k = M + 1; k-- > 0;) {
            double s = 0.0;
            for (unsigned j = 0; j <= k; ++j) s += acc[k - j] * w[j];
            acc[k] = s;
        }
    }
    return acc[M] * std::exp(std::lgamma(double(M) + 1.0) / r);
}

InequalityReport base_report(std::string name, double lhs, double constant, std::string note) {
    InequalityReport rep;
    rep.check_name = std::move(name);
    rep.lhs = lhs;
    rep.constant = constant;
    rep.constant_note = std::move(note);
    return rep;
}

void attach_norm(InequalityReport& rep, const NormEstimate& norm) {
    rep.norm_lower = norm.lower;
    rep.norm_upper = norm.upper;
    rep.rhs = rep.constant * norm.lower;
    rep.status = classify_norm_mediated(rep.lhs, rep.constant, norm.lower, norm.upper);
}

void check_vector_dimension(const HomogeneousPolynomial& P, const ComplexVector& z) {
    if (z.ambient_dim() != Index(P.dimension())) throw dimension_error("vector dimension differs from P");
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::verified: return "Verified";
        case Status::inconclusive: return "Inconclusive";
        case Status::violated: return "Violated";
    }
    return "Inconclusive";
}

Status parse_status(const std::string& text) {
    if (text == "Verified") return Status::verified;
    if (text == "Violated") return Status::violated;
    if (text == "Inconclusive") return Status::inconclusive;
    throw precondition_error("unknown status '" + text + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::inside: return "inside";
        case Verdict::outside: return "outside";
        case Verdict::boundary_inconclusive: return "boundary-inconclusive";
    }
    return "boundary-inconclusive";
}

Json report_to_json(const InequalityReport& r) {
    Json doc;
    doc["schema"] = "monconv-report-1";
    doc["check_name"] = r.check_name;
    doc["params"] = r.params;
    doc["lhs"] = r.lhs;
    doc["rhs"] = r.rhs;
    doc["constant"] = r.constant;
    doc["constant_note"] = r.constant_note;
    doc["norm_lower"] = r.norm_lower ? Json(*r.norm_lower) : Json();
    doc["norm_upper"] = r.norm_upper ? Json(*r.norm_upper) : Json();
    doc["status"] = to_string(r.status);
    doc["witness"] = r.witness;
    doc["seed"] = r.seed;
    doc["trial"] = r.trial;
    return doc;
}

InequalityReport report_from_json(const Json& doc) {
    if (doc.value("schema", std::string()) != "monconv-report-1")
        throw precondition_error("report schema mismatch");
    InequalityReport r;
    auto num = [&](const char* key) {
        const auto& v = doc.at(key);
        return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    r.check_name = doc.at("check_name").get<std::string>();
    r.params = doc.at("params");
    r.lhs = num("lhs");
    r.rhs = num("rhs");
    r.constant = num("constant");
    r.constant_note = doc.at("constant_note").get<std::string>();
    if (!doc.at("norm_lower").is_null()) r.norm_lower = doc.at("norm_lower").get<double>();
    if (!doc.at("norm_upper").is_null()) r.norm_upper = doc.at("norm_upper").get<double>();
    r.status = parse_status(doc.at("status").get<std::string>());
    r.witness = doc.at("witness");
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.trial = doc.at("trial").get<std::uint64_t>();
    return r;
}

Status classify_exact(double lhs, double rhs) {
    return lhs <= rhs * (1.0 + kCheckTolerance) ? Status::verified : Status::violated;
}

Status classify_norm_mediated(double lhs, double constant, double norm_lower, double norm_upper) {
    if (lhs <= constant * norm_lower * (1.0 + kCheckTolerance)) return Status::verified;
    if (lhs > constant * norm_upper * (1.0 + kCheckTolerance)) return Status::violated;
    return Status::inconclusive;
}

namespace constants {

double bds(unsigned m, const MultiIndex& alpha_i, double r) {
    double log_ratio = m > 1 ? double(m - 1) * std::log(double(m - 1)) : 0.0;
    for (unsigned a : alpha_i.exponents())
        if (a > 0) log_ratio -= double(a) * std::log(double(a));
    return kE * double(m) * std::exp(log_ratio / r);
}

double bds_weak(unsigned m, const MultiIndex& alpha_i, double r) {
    return double(m) * std::exp(1.0 + double(m - 1) / r) * std::pow(multinomial_card(alpha_i).value(), 1.0 / r);
}

double tetra_rhs(double mpsi_norm, unsigned M, std::size_t N, double r, double eps) {
    const double rc = r / (r - 1.0);
    return 2.0 * std::pow(1.0 + eps, double(M) / rc) * std::pow(mpsi_norm, double(M)) *
           std::pow(double(N), 1.0 / ((1.0 + eps) * rc));
}

double general_rhs(double mpsi_norm, unsigned M, std::size_t N, double r, double eps, double id_upper) {
    const double rc = r / (r - 1.0);
    double geometric = 0.0;
    for (unsigned k = 0; k <= M; ++k) geometric += std::pow(2.0, double(k) * (1.0 - 2.0 / r));
    return std::pow(2.0, double(M) / r + 1.0) * std::pow(1.0 + eps, double(M)) * std::pow(id_upper, double(M)) *
           std::pow(mpsi_norm, double(M)) * std::pow(double(N), 1.0 / ((1.0 + eps) * rc)) * geometric;
}

double hyper_A(double r) {
    return std::exp(1.0 - 1.0 / r) * std::pow(2.0, r + 3.0) * r / ((r - 1.0) * (r - 1.0));
}

double hyper_K(double r) {
    if (r >= 2.0) return 1.0;
    const double t = std::pow(2.0, 2.0 / r);
    return t / (t - 2.0);
}

double hyper_C(double r, double eps) {
    require_r(r);
    require_eps(eps);
    return 2.0 * hyper_A(r) * hyper_K(r) * cached_hyper_series(r, eps);
}

double hypercontractive(unsigned m, double r, double eps, double id_upper) {
    const double md = m;
    return hyper_C(r, eps) * std::pow(md, 2.0 + 1.0 / r) * std::pow((1.0 + eps) * 2.0 * kE, md / r) *
           std::pow(id_upper, md);
}

double mixed_multilinear(unsigned m, double r) {
    const ExponentBundle b = exponent_bundle(m, r);
    const double md = m;
    return std::exp(std::lgamma(md) / r) * md * std::exp(1.0 + (md - 1.0) / r) * std::pow(2.0, r / b.q) * b.q /
           (r - b.q) * std::pow(b.q_conj + 1.0, md - 2.0);
}

}  // namespace constants

double tetra_sum(const Eigen::VectorXd& z, unsigned M, double r) {
    return weighted_sum(z, M, r, [](unsigned j) { return j <= 1; });
}

double even_sum(const Eigen::VectorXd& z, unsigned M, double r) {
    return weighted_sum(z, M, r, [](unsigned j) { return j % 2 == 0; });
}

double full_sum(const Eigen::VectorXd& z, unsigned M, double r) {
    return weighted_sum(z, M, r, [](unsigned) { return true; });
}

std::vector<InequalityReport> check_bds(const HomogeneousPolynomial& P, double r, const NormEstimate& norm) {
    require_r(r);
    std::vector<InequalityReport> out;
    const unsigned m = P.degree();
    if (m == 0) return out;
    const std::size_t n = P.dimension();
    std::uint64_t trial = 0;
    for (const JTuple& i : enumerate_J(m - 1, n)) {
        const MultiIndex ai = j_to_alpha(i, n);
        auto rep = base_report("bds", coeff_tail_norm(P, i, r), constants::bds(m, ai, r),
                               "e*m*((m-1)^(m-1)/alpha(i)^alpha(i))^(1/r)");
        rep.params = {{"m", m}, {"n", n}, {"r", r}, {"i", i.indices()},
                      {"weak_constant", constants::bds_weak(m, ai, r)}};
        attach_norm(rep, norm);
        rep.trial = trial++;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<InequalityReport> check_bds(const HomogeneousPolynomial& P, double r, const OptimizerOptions& options) {
    auto out = check_bds(P, r, sup_norm_estimate(P, r, options));
    for (auto& rep : out) rep.seed = options.seed;
    return out;
}

InequalityReport check_tetra_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r, double eps) {
    require_r(r);
    require_eps(eps);
    const Eigen::VectorXd zN = decreasing_section(z, N);
    const double mpsi = marcinkiewicz_norm(MagnitudeVector(zN), MarcinkiewiczSymbol::psi(r));
    const double rhs = constants::tetra_rhs(mpsi, M, N, r, eps);
    auto rep = base_report("tetra", tetra_sum(zN, M, r), rhs, "2(1+eps)^(M/r')|z|_mPsi^M N^(1/((1+eps)r'))");
    rep.params = {{"M", M}, {"N", N}, {"r", r}, {"eps", eps}, {"mpsi_norm", mpsi}};
    rep.rhs = rhs;
    rep.status = classify_exact(rep.lhs, rhs);
    rep.witness = {{"z", vector_json(zN)}};
    return rep;
}

InequalityReport check_even_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r) {
    require_r(r);
    if (M % 2 != 0) throw precondition_error("even bound needs even M");
    const Eigen::VectorXd zN = decreasing_section(z, N);
    const double rhs = std::pow(ell_norm(MagnitudeVector(zN), r), double(M));
    auto rep = base_report("even", even_sum(zN, M, r), rhs, "|z|_r^M");
    rep.params = {{"M", M}, {"N", N}, {"r", r}};
    rep.rhs = rhs;
    rep.status = classify_exact(rep.lhs, rhs);
    rep.witness = {{"z", vector_json(zN)}};
    return rep;
}

InequalityReport check_general_bound(const MagnitudeVector& z, unsigned M, std::size_t N, double r, double eps) {
    require_r(r);
    require_eps(eps);
    const Eigen::VectorXd zN = decreasing_section(z, N);
    const double mpsi = marcinkiewicz_norm(MagnitudeVector(zN), MarcinkiewiczSymbol::psi(r));
    const double id = cached_embedding_upper(r);
    const double rhs = constants::general_rhs(mpsi, M, N, r, eps, id);
    auto rep = base_report("general", full_sum(zN, M, r), rhs,
                           "2^(M/r+1)(1+eps)^M |id|^M |z|_mPsi^M N^(1/((1+eps)r')) sum_k 2^(k(1-2/r))");
    rep.params = {{"M", M}, {"N", N}, {"r", r}, {"eps", eps}, {"mpsi_norm", mpsi}, {"id_upper", id}};
    rep.rhs = rhs;
    rep.status = classify_exact(rep.lhs, rhs);
    rep.witness = {{"z", vector_json(zN)}};
    return rep;
}

InequalityReport check_hypercontractive(const HomogeneousPolynomial& P, const ComplexVector& z, double r, double eps,
                                        const NormEstimate& norm) {
    require_r(r);
    require_eps(eps);
    if (P.degree() < 1) throw precondition_error("hypercontractive bound needs m >= 1");
    check_vector_dimension(P, z);
    const unsigned m = P.degree();
    const double lhs = monomial_abs_sum(P, decreasing_rearrangement(z));
    const double mpsi = marcinkiewicz_norm(z, MarcinkiewiczSymbol::psi(r));
    const double id = cached_embedding_upper(r);
    const double c = constants::hypercontractive(m, r, eps, id) * std::pow(mpsi, double(m));
    auto rep = base_report("hyper", lhs, c, "C_r(eps) m^(2+1/r) ((1+eps)2e)^(m/r) |id|^m |z|_mPsi^m");
    rep.params = {{"m", m}, {"n", P.dimension()}, {"r", r}, {"eps", eps}, {"mpsi_norm", mpsi},
                  {"id_upper", id}, {"C_r", constants::hyper_C(r, eps)}};
    attach_norm(rep, norm);
    rep.witness = {{"z", complex_json(z)}, {"polynomial", polynomial_to_json(P)}};
    return rep;
}

InequalityReport check_ellq_sum(const HomogeneousPolynomial& P, const ComplexVector& z, double r,
                                const NormEstimate& norm, double cap) {
    const unsigned m = P.degree();
    if (m < 2) throw precondition_error("exponent ratio needs m >= 2");
    check_vector_dimension(P, z);
    const ExponentBundle b = exponent_bundle(m, r);
    const double zq = std::pow(ell_norm(z, b.q), double(m));
    const double lhs = monomial_abs_sum(P, z);
    auto rep = base_report("ellq", lhs, std::pow(double(m), cap) * zq, "m^cap |z|_q^m");
    rep.rhs = rep.constant * norm.lower;
    rep.norm_lower = norm.lower;
    rep.norm_upper = norm.upper;
    const double denom = norm.lower * zq;
    const double ratio = (lhs > 0 && denom > 0) ? std::log(lhs / denom) / std::log(double(m))
                                                : -std::numeric_limits<double>::infinity();
    rep.params = {{"m", m}, {"n", P.dimension()}, {"r", r}, {"q", b.q}, {"cap", cap}, {"ratio", ratio}};
    rep.status = (lhs == 0.0 || ratio <= cap) ? Status::verified : Status::inconclusive;
    rep.witness = {{"z", complex_json(z)}};
    return rep;
}

InequalityReport check_mixed_multilinear(const HomogeneousPolynomial& P, const std::vector<ComplexVector>& vectors,
                                         unsigned k, double r, const NormEstimate& norm) {
    require_r(r);
    const unsigned m = P.degree();
    if (k < 1 || k + 1 > m) throw index_range_error("k must satisfy 1 <= k <= m-1");
    const ExponentBundle b = exponent_bundle(m, r);
    const double lhs = mixed_abs_sum(P, vectors, k);
    double factor = 1.0;
    for (unsigned i = 1; i <= m; ++i) {
        const LorentzParams lp{b.q, i == k ? Exponent(1.0) : Exponent::infinity()};
        factor *= lorentz_quasinorm(vectors[i - 1], lp);
    }
    const double cm = constants::mixed_multilinear(m, r);
    auto rep = base_report("mixed", lhs, cm * factor, "C_{m,r} |z^(k)|_{q,1} prod_{i!=k} |z^(i)|_{q,inf}");
    rep.params = {{"m", m}, {"n", P.dimension()}, {"r", r}, {"k", k}, {"q", b.q}, {"C_mr", cm}};
    attach_norm(rep, norm);
    Json vs = Json::array();
    for (const auto& v : vectors) vs.push_back(complex_json(v));
    rep.witness = {{"vectors", vs}};
    return rep;
}

InequalityReport check_hyper_q2(const HomogeneousPolynomial& P, const ComplexVector& z, double r,
                                const NormEstimate& norm, double cap) {
    const unsigned m = P.degree();
    if (m < 3) throw precondition_error("the l_{q,2} bound is stated for m >= 3");
    check_vector_dimension(P, z);
    const ExponentBundle b = exponent_bundle(m, r);
    const double zq2 = std::pow(lorentz_quasinorm(z, {b.q, 2.0}), double(m));
    const double lhs = monomial_abs_sum(P, decreasing_rearrangement(z));
    auto rep = base_report("hyperq2", lhs, cap * zq2, "cap |z|_{q,2}^m");
    rep.rhs = rep.constant * norm.lower;
    rep.norm_lower = norm.lower;
    rep.norm_upper = norm.upper;
    const double denom = norm.lower * zq2;
    const double ratio = denom > 0 ? lhs / denom : (lhs == 0 ? 0.0 : std::numeric_limits<double>::infinity());
    rep.params = {{"m", m}, {"n", P.dimension()}, {"r", r}, {"q", b.q}, {"cap", cap}, {"ratio", ratio}};
    rep.status = ratio <= cap ? Status::verified : Status::inconclusive;
    rep.witness = {{"z", complex_json(z)}};
    return rep;
}

TrendSummary summarize_trend(const std::vector<double>& values) {
    TrendSummary t;
    if (values.size() < 2) return t;
    t.strictly_increasing = true;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1])) t.strictly_increasing = false;
    t.growth = values.back() / values.front();
    return t;
}

std::vector<ImpossibilityPoint> hyper_q2_impossibility(double r, const std::vector<std::size_t>& n_grid) {
    require_r(r);
    std::vector<ImpossibilityPoint> out;
    for (std::size_t n : n_grid) {
        const auto m = unsigned(std::floor(std::log(double(n) + 1.0)));
        if (m < 2) throw precondition_error("impossibility grid needs n >= 7 so that m >= 2");
        const ExponentBundle b = exponent_bundle(m, r);
        const double s = std::log(double(m));
        double sum = 0.0;
        double lorentz = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double jd = double(j);
            const double zj = std::pow(jd, -1.0 / b.q) * std::pow(std::log(jd + 1.0), -2.0 / s);
            sum += zj;
            lorentz += std::pow(zj * std::pow(jd, 1.0 / b.q - 1.0 / s), s);
        }
        const double norm = std::pow(lorentz, 1.0 / s);
        out.push_back({n, m, b.q, sum / (norm * std::pow(std::log(double(n) + 1.0), 1.0 - 1.0 / r))});
    }
    return out;
}

SignSearchResult sign_polynomial_search(unsigned m, std::size_t n, double r, std::size_t trials, std::uint64_t seed,
                                        const OptimizerOptions& options) {
    if (trials < 1) throw precondition_error("sign search needs at least one trial");
    std::vector<NormEstimate> est(trials);
    parallel_for(trials, options.threads, [&](std::size_t t) {
        OptimizerOptions o = options;
        o.seed = seed + t;
        o.threads = 1;
        est[t] = sup_norm_estimate(random_sign_polynomial(m, n, seed + t), r, o);
    });
    SignSearchResult res;
    res.m = m;
    res.n = n;
    res.r = r;
    res.trials = trials;
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t)
        if (est[t].upper < est[best].upper) best = t;
    res.min_upper = est[best].upper;
    res.best_seed = seed + best;
    res.min_lower = est[0].lower;
    for (const auto& e : est) res.min_lower = std::min(res.min_lower, e.lower);
    const double md = m;
    res.bound = std::pow(std::log(md) * std::exp(std::lgamma(md + 1.0)), 1.0 - 1.0 / r) *
                std::pow(double(n), 1.0 - 1.0 / r);
    const double inf = std::numeric_limits<double>::infinity();
    res.ratio_upper = res.bound > 0 ? res.min_upper / res.bound : inf;
    res.ratio_lower = res.bound > 0 ? res.min_lower / res.bound : inf;
    return res;
}

SequenceFamily SequenceFamily::telescoping(double r) {
    const double a = 1.0 - 1.0 / r;
    return {"telescoping", [a](std::size_t n) {
                return std::pow(std::log(double(n) + 1.0), a) - std::pow(std::log(double(n)), a);
            }};
}

SequenceFamily SequenceFamily::harmonic() {
    return {"harmonic", [](std::size_t n) { return 1.0 / double(n); }};
}

SequenceFamily SequenceFamily::log_damped(double r) {
    return {"log_damped", [r](std::size_t n) {
                return std::pow(double(n), -1.0 / r) * std::pow(std::log(double(n) + 1.0), -2.0 / r);
            }};
}

MembershipVerdict hb_membership(const MagnitudeVector& z, double r) {
    require_r(r);
    MembershipVerdict v;
    v.space = "m_Psi_r";
    v.value = marcinkiewicz_norm(z, MarcinkiewiczSymbol::psi(r));
    v.threshold = std::numeric_limits<double>::infinity();
    v.verdict = Verdict::inside;
    return v;
}

MembershipVerdict hb_membership(const SequenceFamily& family, double r, const std::vector<std::size_t>& n_grid,
                                double growth_threshold) {
    require_r(r);
    if (n_grid.empty() || !std::is_sorted(n_grid.begin(), n_grid.end()) || n_grid.front() < 1)
        throw precondition_error("n-grid must be nonempty, positive and increasing");
    const std::size_t N = n_grid.back();
    std::vector<double> z(N);
    for (std::size_t n = 1; n <= N; ++n) z[n - 1] = std::abs(family.term(n));
    std::sort(z.begin(), z.end(), std::greater<>());

    MembershipVerdict v;
    v.space = "m_Psi_r";
    v.threshold = growth_threshold;
    double partial = 0.0;
    double best = 0.0;
    std::size_t g = 0;
    std::vector<double> values;
    for (std::size_t n = 1; n <= N; ++n) {
        partial += z[n - 1];
        best = std::max(best, partial / psi_r(Index(n), r));
        if (n == n_grid[g]) {
            v.trend.emplace_back(n, best);
            values.push_back(best);
            ++g;
        }
    }
    v.value = best;
    const TrendSummary t = summarize_trend(values);
    v.verdict = (t.strictly_increasing && t.growth >= growth_threshold) ? Verdict::outside : Verdict::inside;
    return v;
}

HinfMembership hinf_membership(const MagnitudeVector& z, double r, double limsup_value, double embedding_bound,
                               double radius) {
    require_r(r);
    if (!(radius > 0)) throw precondition_error("radius must be positive");
    const double L = limsup_value / radius;
    const double zr = ell_norm(z, r) / radius;
    constexpr double tol = 1e-12;
    auto decide = [&](double value, double threshold, bool strict_inside) {
        if (value < threshold * (1 - tol)) return Verdict::inside;
        if (value > threshold * (1 + tol)) return Verdict::outside;
        return strict_inside ? Verdict::boundary_inconclusive : Verdict::inside;
    };

    HinfMembership h;
    const double scale = 2.0 * kE * std::pow(embedding_bound, r);
    h.lower.space = "Hinf_lower_set";
    h.lower.value = scale * std::pow(L, r) + std::pow(zr, r);
    h.lower.threshold = 1.0;
    h.lower.verdict = decide(h.lower.value, 1.0, true);

    h.upper.space = "Hinf_upper_set";
    h.upper.value = zr;
    h.upper.threshold = 1.0;
    const Verdict ball = decide(zr, 1.0, true);
    const Verdict lim = decide(L, 1.0, false);
    if (ball == Verdict::outside || lim == Verdict::outside)
        h.upper.verdict = Verdict::outside;
    else if (ball == Verdict::inside && lim == Verdict::inside)
        h.upper.verdict = Verdict::inside;
    else
        h.upper.verdict = Verdict::boundary_inconclusive;
    h.upper.trend = {};

    h.K = std::pow(scale + 1.0, 1.0 / r);
    const double rc = r / (r - 1.0);
    Eigen::VectorXd w = z.entries() / radius;
    for (Index n = 0; n < w.size(); ++n) w[n] *= h.K * std::pow(double(n + 1), 1.0 / rc);
    h.weighted_norm = ell_norm(MagnitudeVector(w), r);
    h.in_weighted_ball = h.weighted_norm < 1.0;
    return h;
}

}  // namespace monconv
