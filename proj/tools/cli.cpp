#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "monconv/asymptotics.hpp"
#include "monconv/rng.hpp"

namespace monconv::cli {

namespace {

enum class Format { json_lines, csv, pretty };

// Ordered record writer. Streams to `out` unless an output path is set,
// in which case the whole artifact is written atomically at the end.
class Sink {
public:
    Sink(Format format, std::string path, std::ostream& out) : format_(format), path_(std::move(path)), out_(out) {}

    void record(const Json& rec) {
        switch (format_) {
            case Format::json_lines: line(dump_json(rec)); break;
            case Format::csv: csv_row(rec); break;
            case Format::pretty: line(pretty(rec)); break;
        }
    }

    // Pre-rendered text (e.g. a CSV table), bypasses the record formatter.
    void raw(const std::string& text) {
        if (path_.empty()) {
            out_ << text;
            out_.flush();
        } else {
            buffer_ += text;
        }
    }

    void finish() {
        if (!path_.empty()) write_file_atomic(path_, buffer_);
    }

private:
    void line(const std::string& text) { raw(text + "\n"); }

    static std::string cell(const Json& v) {
        std::string s;
        if (v.is_string())
            s = v.get<std::string>();
        else if (v.is_number_float())
            s = format_double(v.get<double>());
        else
            s = dump_json(v);
        if (s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        return s;
    }

    void csv_row(const Json& rec) {
        if (columns_.empty()) {
            std::string header;
            for (auto it = rec.begin(); it != rec.end(); ++it) {
                columns_.push_back(it.key());
                header += (header.empty() ? "" : ",") + it.key();
            }
            line(header);
        }
        std::string row;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (i) row += ',';
            if (rec.contains(columns_[i])) row += cell(rec[columns_[i]]);
        }
        line(row);
    }

    static std::string pretty(const Json& rec) {
        std::string s;
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            if (!s.empty()) s += "  ";
            const Json& v = it.value();
            s += it.key() + "=" + (v.is_string() ? v.get<std::string>()
                                   : v.is_number_float() ? format_double(v.get<double>())
                                                         : dump_json(v));
        }
        return s;
    }

    Format format_;
    std::string path_;
    std::ostream& out_;
    std::string buffer_;
    std::vector<std::string> columns_;
};

struct Common {
    std::uint64_t seed = 42;
    std::string format = "json-lines";
    std::string output;
    std::optional<int> restarts;
    std::optional<int> max_iters;
    unsigned threads = 0;

    // Defaults differ per command: sup-norm checks use 50 x 2000, estimators 8 x 400.
    OptimizerOptions optimizer(std::uint64_t s, int default_restarts = 50, int default_iters = 2000) const {
        return {restarts.value_or(default_restarts), max_iters.value_or(default_iters), s, threads};
    }
};

Format parse_format(const std::string& f) {
    if (f == "json-lines") return Format::json_lines;
    if (f == "csv") return Format::csv;
    if (f == "pretty") return Format::pretty;
    throw precondition_error("unknown format '" + f + "' (expected json-lines, csv or pretty)");
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "base seed; trial t uses seed + t")->capture_default_str();
    sub->add_option("--format", c.format, "json-lines | csv | pretty")->capture_default_str();
    sub->add_option("--output,-o", c.output, "write the report atomically to this path");
    sub->add_option("--restarts", c.restarts, "optimizer restarts");
    sub->add_option("--max-iters", c.max_iters, "optimizer iterations per restart");
    sub->add_option("--threads", c.threads, "worker threads, 0 = hardware concurrency")->capture_default_str();
}

Json json_vector(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

// Whitespace or comma separated numbers, or a JSON array.
Eigen::VectorXd read_vector_file(const std::string& path) {
    const std::string text = read_text_file(path);
    std::vector<double> values;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        for (const auto& v : Json::parse(text)) values.push_back(v.get<double>());
    } else {
        std::string cleaned = text;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream is(cleaned);
        std::string tok;
        while (is >> tok) {
            std::size_t used = 0;
            double x = 0;
            try {
                x = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw precondition_error("vector file: cannot parse '" + tok + "'");
            values.push_back(x);
        }
    }
    if (values.empty()) throw precondition_error("vector file is empty: " + path);
    return Eigen::Map<Eigen::VectorXd>(values.data(), Index(values.size()));
}

Eigen::VectorXd random_decreasing(std::size_t N, std::uint64_t seed) {
    CounterRng rng(seed);
    Eigen::VectorXd v(static_cast<Index>(N));
    for (std::size_t i = 0; i < N; ++i) v[Index(i)] = rng.uniform();
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

ComplexVector random_complex(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    Eigen::VectorXcd v(static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) v[Index(i)] = rng.complex_normal();
    return ComplexVector(v);
}

double to_double(Exponent e) { return e.is_infinite() ? std::numeric_limits<double>::infinity() : e.value(); }

// ---- verify ----

struct VerifyArgs {
    std::string check;
    std::string r = "2";
    double eps = 1.0;
    unsigned m = 2;
    std::size_t n = 4;
    unsigned M = 4;
    std::size_t N = 16;
    unsigned k = 1;
    std::size_t trials = 100;
    std::string vector_file;
    std::vector<std::size_t> n_grid{2, 4, 8, 16, 32};
    double cap = std::numeric_limits<double>::quiet_NaN();
};

int run_verify(const VerifyArgs& a, const Common& c, Sink& sink) {
    const double r = parse_exponent(a.r).value();
    bool violated = false;
    auto emit = [&](const InequalityReport& rep) {
        if (rep.status == Status::violated) violated = true;
        sink.record(report_to_json(rep));
    };

    if (a.check == "signs") {
        for (std::size_t n : a.n_grid) {
            const SignSearchResult s = sign_polynomial_search(a.m, n, r, a.trials, c.seed, c.optimizer(c.seed, 4, 400));
            Json rec;
            rec["check_name"] = "signs";
            rec["m"] = s.m;
            rec["n"] = s.n;
            rec["r"] = s.r;
            rec["trials"] = s.trials;
            rec["min_upper"] = s.min_upper;
            rec["min_lower"] = s.min_lower;
            rec["bound"] = s.bound;
            rec["ratio_upper"] = s.ratio_upper;
            rec["ratio_lower"] = s.ratio_lower;
            rec["best_seed"] = s.best_seed;
            sink.record(rec);
        }
        return kExitOk;
    }

    const bool vector_check = a.check == "tetra" || a.check == "even" || a.check == "general";
    if (vector_check) {
        std::vector<Eigen::VectorXd> inputs;
        if (!a.vector_file.empty())
            inputs.push_back(read_vector_file(a.vector_file));
        else
            for (std::size_t t = 0; t < a.trials; ++t) inputs.push_back(random_decreasing(a.N, c.seed + t));
        for (std::size_t t = 0; t < inputs.size(); ++t) {
            const MagnitudeVector z(inputs[t]);
            InequalityReport rep = a.check == "tetra"  ? check_tetra_bound(z, a.M, a.N, r, a.eps)
                                   : a.check == "even" ? check_even_bound(z, a.M, a.N, r)
                                                       : check_general_bound(z, a.M, a.N, r, a.eps);
            rep.seed = c.seed + t;
            rep.trial = t;
            emit(rep);
        }
        return violated ? kExitViolated : kExitOk;
    }

    static const std::vector<std::string> poly_checks = {"bds", "hyper", "ellq", "mixed", "hyperq2"};
    if (std::find(poly_checks.begin(), poly_checks.end(), a.check) == poly_checks.end())
        throw precondition_error("unknown check '" + a.check +
                                 "' (expected bds, tetra, even, general, hyper, ellq, mixed, hyperq2 or signs)");

    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::uint64_t s = c.seed + t;
        const HomogeneousPolynomial P = random_polynomial(a.m, a.n, CoefficientDistribution::complex_gaussian, s);
        const NormEstimate norm = sup_norm_estimate(P, r, c.optimizer(s));
        if (a.check == "bds") {
            for (auto& rep : check_bds(P, r, norm)) {
                rep.seed = s;
                emit(rep);
            }
            continue;
        }
        InequalityReport rep;
        const ComplexVector z = random_complex(a.n, s + 0x5eed);
        if (a.check == "hyper") {
            rep = check_hypercontractive(P, z, r, a.eps, norm);
        } else if (a.check == "ellq") {
            rep = check_ellq_sum(P, z, r, norm, std::isnan(a.cap) ? kDefaultEllqCap : a.cap);
        } else if (a.check == "hyperq2") {
            rep = check_hyper_q2(P, z, r, norm, std::isnan(a.cap) ? kDefaultHyperQ2Cap : a.cap);
        } else {
            std::vector<ComplexVector> vs;
            for (unsigned i = 0; i < a.m; ++i) vs.push_back(random_complex(a.n, s + 0x5eed + i));
            rep = check_mixed_multilinear(P, vs, a.k, r, norm);
        }
        rep.seed = s;
        rep.trial = t;
        emit(rep);
    }
    return violated ? kExitViolated : kExitOk;
}

// ---- other subcommands ----

Json membership_json(const MembershipVerdict& v) {
    Json rec;
    rec["space"] = v.space;
    rec["value"] = v.value;
    rec["threshold"] = v.threshold;
    rec["verdict"] = to_string(v.verdict);
    Json trend = Json::array();
    for (const auto& [n, x] : v.trend) trend.push_back(Json::array({n, x}));
    rec["trend"] = trend;
    return rec;
}

SequenceFamily family_by_name(const std::string& name, double r) {
    if (name == "telescoping") return SequenceFamily::telescoping(r);
    if (name == "harmonic") return SequenceFamily::harmonic();
    if (name == "log_damped") return SequenceFamily::log_damped(r);
    throw precondition_error("unknown family '" + name + "' (expected telescoping, harmonic or log_damped)");
}

std::vector<std::pair<double, double>> parse_points(const std::string& spec, const std::string& file) {
    std::string text = spec;
    if (!file.empty()) text = read_text_file(file);
    std::vector<std::pair<double, double>> pts;
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',' || ch == ':' || ch == ';' || ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
    std::istringstream is(cleaned);
    std::vector<double> flat;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const double x = std::stod(tok, &used);
            if (used == tok.size()) flat.push_back(x);
        } catch (const std::exception&) {
            // header words such as "n value" are skipped
        }
    }
    if (flat.size() % 2 != 0) throw precondition_error("points must come in (n, value) pairs");
    for (std::size_t i = 0; i < flat.size(); i += 2) pts.emplace_back(flat[i], flat[i + 1]);
    return pts;
}

std::vector<Json> read_report_file(const std::string& path) {
    std::istringstream is(read_text_file(path));
    std::vector<Json> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json doc = Json::parse(line);
        report_from_json(doc);  // schema check
        out.push_back(std::move(doc));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"monconv: monomial convergence numerics"};
    app.require_subcommand(1);
    Common common;

    // norms
    auto* norms = app.add_subcommand("norms", "sequence norms, or a polynomial sup-norm estimate");
    std::string norms_vec, norms_poly, norms_r = "2", norms_p = "2", norms_q = "2";
    norms->add_option("--vector-file", norms_vec, "magnitudes (whitespace, comma or JSON array)");
    norms->add_option("--poly-file", norms_poly, "polynomial JSON {m, n, entries}");
    norms->add_option("--r", norms_r, "ℓ_r exponent")->capture_default_str();
    norms->add_option("--p", norms_p, "Lorentz p")->capture_default_str();
    norms->add_option("--q", norms_q, "Lorentz q")->capture_default_str();
    add_common(norms, common);

    // verify
    auto* verify = app.add_subcommand("verify", "run inequality checks and emit reports");
    VerifyArgs va;
    verify->add_option("--check", va.check, "bds|tetra|even|general|hyper|ellq|mixed|hyperq2|signs")->required();
    verify->add_option("--r", va.r, "domain exponent")->capture_default_str();
    verify->add_option("--eps", va.eps, "ε > 0")->capture_default_str();
    verify->add_option("--m", va.m, "degree")->capture_default_str();
    verify->add_option("--n", va.n, "number of variables")->capture_default_str();
    verify->add_option("--M", va.M, "order for tetra/even/general")->capture_default_str();
    verify->add_option("--N", va.N, "section length for tetra/even/general")->capture_default_str();
    verify->add_option("--k", va.k, "split position for mixed")->capture_default_str();
    verify->add_option("--trials", va.trials, "number of trials")->capture_default_str();
    verify->add_option("--vector-file", va.vector_file, "decreasing magnitudes for tetra/even/general");
    verify->add_option("--n-grid", va.n_grid, "dimensions for signs")->delimiter(',')->capture_default_str();
    verify->add_option("--cap", va.cap, "exponent cap for ellq / ratio cap for hyperq2");
    add_common(verify, common);

    // membership
    auto* membership = app.add_subcommand("membership", "membership predicates for sequences");
    std::string mem_space = "hb", mem_family, mem_vec;
    double mem_r = 2.0, mem_limsup = 0.0, mem_radius = 1.0, mem_threshold = 1.5;
    std::vector<std::size_t> mem_grid = kDefaultGrid;
    membership->add_option("--space", mem_space, "hb | hinf")->capture_default_str();
    membership->add_option("--family", mem_family, "telescoping | harmonic | log_damped");
    membership->add_option("--vector-file", mem_vec, "finite magnitude vector");
    membership->add_option("--r", mem_r, "exponent r in (1, inf)")->capture_default_str();
    membership->add_option("--grid", mem_grid, "truncation grid")->delimiter(',')->capture_default_str();
    membership->add_option("--growth", mem_threshold, "growth threshold for outside")->capture_default_str();
    membership->add_option("--limsup", mem_limsup, "limsup of the Marcinkiewicz ratio (hinf)")->capture_default_str();
    membership->add_option("--radius", mem_radius, "ball radius (hinf)")->capture_default_str();
    add_common(membership, common);

    // chi
    auto* chi = app.add_subcommand("chi", "lower estimates of the mixed unconditionality constant");
    std::string chi_r = "2", chi_s = "inf";
    unsigned chi_m = 2;
    std::size_t chi_trials = 4;
    std::vector<std::size_t> chi_grid{4, 8, 16, 32, 64};
    chi->add_option("--r", chi_r)->capture_default_str();
    chi->add_option("--s", chi_s)->capture_default_str();
    chi->add_option("--m", chi_m)->capture_default_str();
    chi->add_option("--n-grid", chi_grid)->delimiter(',')->capture_default_str();
    chi->add_option("--trials", chi_trials)->capture_default_str();
    add_common(chi, common);

    // bohr
    auto* bohr = app.add_subcommand("bohr", "mixed Bohr radius proxy");
    std::string bohr_p = "2", bohr_q = "1";
    unsigned bohr_mmax = 3;
    std::size_t bohr_trials = 2;
    std::vector<std::size_t> bohr_grid{2, 4, 8};
    bohr->add_option("--p", bohr_p)->capture_default_str();
    bohr->add_option("--q", bohr_q)->capture_default_str();
    bohr->add_option("--m-max", bohr_mmax)->capture_default_str();
    bohr->add_option("--n-grid", bohr_grid)->delimiter(',')->capture_default_str();
    bohr->add_option("--trials", bohr_trials)->capture_default_str();
    add_common(bohr, common);

    // multiplier
    auto* mult = app.add_subcommand("multiplier", "multiplier boundedness and optimality trends");
    double mult_r = 2.0, mult_eps = 0.05;
    unsigned mult_m = 3;
    std::string mult_family = "log_damped";
    std::vector<std::size_t> mult_grid{64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    mult->add_option("--r", mult_r)->capture_default_str();
    mult->add_option("--m", mult_m)->capture_default_str();
    mult->add_option("--eps", mult_eps)->capture_default_str();
    mult->add_option("--family", mult_family)->capture_default_str();
    mult->add_option("--grid", mult_grid)->delimiter(',')->capture_default_str();
    add_common(mult, common);

    // exponents
    auto* expo = app.add_subcommand("exponents", "q, σ_m, s(m), θ(m) for given m and r");
    unsigned expo_m = 3;
    double expo_r = 2.0;
    expo->add_option("--m", expo_m)->capture_default_str();
    expo->add_option("--r", expo_r)->capture_default_str();
    add_common(expo, common);

    // fit
    auto* fit = app.add_subcommand("fit", "least-squares exponent of value ~ n^a");
    std::string fit_points, fit_file;
    fit->add_option("--points", fit_points, "pairs n:value separated by commas");
    fit->add_option("--file", fit_file, "two-column file of n and value");
    add_common(fit, common);

    // merge
    auto* merge = app.add_subcommand("merge", "merge json-lines reports ordered by (check_name, seed, trial)");
    std::vector<std::string> merge_paths;
    merge->add_option("paths", merge_paths, "report files")->required();
    add_common(merge, common);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        Sink sink(parse_format(common.format), common.output, out);
        int code = kExitOk;

        if (norms->parsed()) {
            if (!norms_poly.empty()) {
                const HomogeneousPolynomial P = polynomial_from_json(Json::parse(read_text_file(norms_poly)));
                const Exponent r = parse_exponent(norms_r);
                const NormEstimate e = sup_norm_estimate(P, r, common.optimizer(common.seed));
                Json rec;
                rec["r"] = to_double(r);
                rec["lower"] = e.lower;
                rec["upper"] = e.upper;
                rec["lagrange"] = lagrange_upper_bound(P, r);
                rec["spectral"] = spectral_upper_bound(P, r);
                rec["restarts"] = e.restarts_used;
                rec["iterations"] = e.iterations;
                sink.record(rec);
            } else if (!norms_vec.empty()) {
                const MagnitudeVector z(read_vector_file(norms_vec));
                const Exponent r = parse_exponent(norms_r);
                const LorentzParams lp{parse_exponent(norms_p), parse_exponent(norms_q)};
                Json rec;
                rec["ell_r"] = ell_norm(z, r);
                rec["lorentz"] = lorentz_quasinorm(z, lp);
                try {
                    rec["lorentz_maximal"] = lorentz_maximal_norm(z, lp).value;
                } catch (const divergent_series_error&) {
                    rec["lorentz_maximal"] = "divergent";
                }
                if (!r.is_infinite() && r.value() > 1.0)
                    rec["marcinkiewicz_psi_r"] = marcinkiewicz_norm(z, MarcinkiewiczSymbol::psi(r.value()));
                rec["rearranged"] = json_vector(decreasing_rearrangement(z).entries());
                sink.record(rec);
            } else {
                throw precondition_error("norms needs --vector-file or --poly-file");
            }
        } else if (verify->parsed()) {
            code = run_verify(va, common, sink);
        } else if (membership->parsed()) {
            if (mem_space == "hb") {
                if (!mem_vec.empty())
                    sink.record(membership_json(hb_membership(MagnitudeVector(read_vector_file(mem_vec)), mem_r)));
                else if (!mem_family.empty())
                    sink.record(membership_json(
                        hb_membership(family_by_name(mem_family, mem_r), mem_r, mem_grid, mem_threshold)));
                else
                    throw precondition_error("membership needs --vector-file or --family");
            } else if (mem_space == "hinf") {
                if (mem_vec.empty()) throw precondition_error("hinf membership needs --vector-file");
                const double U = embedding_constant_upper(mem_r, 1e-6);
                const HinfMembership h =
                    hinf_membership(MagnitudeVector(read_vector_file(mem_vec)), mem_r, mem_limsup, U, mem_radius);
                Json rec;
                rec["lower"] = membership_json(h.lower);
                rec["upper"] = membership_json(h.upper);
                rec["K"] = h.K;
                rec["weighted_norm"] = h.weighted_norm;
                rec["in_weighted_ball"] = h.in_weighted_ball;
                sink.record(rec);
            } else {
                throw precondition_error("unknown space '" + mem_space + "' (expected hb or hinf)");
            }
        } else if (chi->parsed()) {
            const Exponent r = parse_exponent(chi_r), s = parse_exponent(chi_s);
            const RegionLabel label = region_classify(r, s, chi_m);
            std::vector<ChiTableRow> rows;
            std::vector<std::pair<double, double>> pts;
            std::vector<ChiEstimate> ests;
            const OptimizerOptions o = common.optimizer(common.seed, 8, 400);
            for (std::size_t n : chi_grid) {
                ests.push_back(chi_estimate(chi_m, n, r, s, chi_trials, common.seed, o));
                pts.emplace_back(double(n), ests.back().value);
            }
            const double fitted =
                pts.size() >= 3 ? fit_exponent(pts).exponent : std::numeric_limits<double>::quiet_NaN();
            for (std::size_t i = 0; i < chi_grid.size(); ++i)
                rows.push_back({chi_grid[i], ests[i].value, fitted, label.predicted_exponent});
            if (parse_format(common.format) == Format::csv) {
                sink.raw(chi_table_csv(rows));
            } else {
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    Json rec;
                    rec["n"] = rows[i].n;
                    rec["estimate"] = rows[i].estimate;
                    rec["fitted_exponent"] = rows[i].fitted_exponent;
                    rec["predicted_exponent"] = rows[i].predicted_exponent;
                    rec["region"] = to_string(label.region);
                    rec["witness_kind"] = ests[i].witness_kind;
                    rec["witness_seed"] = ests[i].witness_seed;
                    rec["witness"] = polynomial_to_json(ests[i].witness);
                    sink.record(rec);
                }
            }
        } else if (bohr->parsed()) {
            const Exponent p = parse_exponent(bohr_p), q = parse_exponent(bohr_q);
            const OptimizerOptions o = common.optimizer(common.seed, 8, 400);
            for (std::size_t n : bohr_grid) {
                const BohrEstimate b = bohr_radius_estimate(p, q, n, bohr_mmax, bohr_trials, common.seed, o);
                Json rec;
                rec["n"] = n;
                rec["estimate"] = b.value;
                rec["maximizing_m"] = b.maximizing_m;
                Json roots = Json::array();
                for (double x : b.chi_roots) roots.push_back(x);
                rec["chi_roots"] = roots;
                sink.record(rec);
            }
        } else if (mult->parsed()) {
            const MultiplierReport rep =
                multiplier_check(mult_r, mult_m, family_by_name(mult_family, mult_r), mult_grid, mult_eps);
            for (std::size_t i = 0; i < mult_grid.size(); ++i) {
                Json rec;
                rec["N"] = mult_grid[i];
                rec["q"] = rep.bundle.q;
                rec["sigma"] = rep.bundle.sigma;
                rec["positive_norm"] = rep.positive[i].second;
                rec["optimality_quasinorm"] = rep.optimality[i].second;
                sink.record(rec);
            }
            Json summary;
            summary["positive_bounded"] = rep.positive_bounded;
            summary["optimality_strictly_increasing"] = rep.optimality_trend.strictly_increasing;
            summary["optimality_growth"] = rep.optimality_trend.growth;
            summary["optimality_divergent"] = rep.optimality_divergent;
            if (parse_format(common.format) == Format::csv)
                err << dump_json(summary) << "\n";
            else
                sink.record(summary);
        } else if (expo->parsed()) {
            const ExponentBundle b = exponent_bundle(expo_m, expo_r);
            Json rec;
            rec["m"] = b.m;
            rec["r"] = b.r;
            rec["r_conj"] = b.r_conj;
            rec["q"] = b.q;
            rec["q_conj"] = b.q_conj;
            rec["sigma"] = b.sigma;
            rec["s"] = b.s ? Json(*b.s) : Json(nullptr);
            rec["theta"] = b.theta;
            rec["interpolation_theta"] = b.interpolation_theta;
            sink.record(rec);
        } else if (fit->parsed()) {
            const FitResult f = fit_exponent(parse_points(fit_points, fit_file));
            Json rec;
            rec["exponent"] = f.exponent;
            rec["intercept"] = f.intercept;
            rec["residual"] = f.residual;
            rec["points"] = f.points.size();
            sink.record(rec);
        } else if (merge->parsed()) {
            std::vector<Json> all;
            for (const auto& p : merge_paths)
                for (auto& doc : read_report_file(p)) all.push_back(std::move(doc));
            std::stable_sort(all.begin(), all.end(), [](const Json& a, const Json& b) {
                const auto ka = std::make_tuple(a["check_name"].get<std::string>(), a["seed"].get<std::uint64_t>(),
                                                a["trial"].get<std::uint64_t>());
                const auto kb = std::make_tuple(b["check_name"].get<std::string>(), b["seed"].get<std::uint64_t>(),
                                                b["trial"].get<std::uint64_t>());
                return ka < kb;
            });
            for (const auto& doc : all) {
                if (parse_status(doc["status"].get<std::string>()) == Status::violated) code = kExitViolated;
                sink.record(doc);
            }
        }
        sink.finish();
        return code;
    } catch (const budget_error& e) {
        err << "budget exceeded: " << e.what() << " (raise MONCONV_BUDGET to allow it)\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace monconv::cli
