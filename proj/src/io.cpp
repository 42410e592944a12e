#include "monconv/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace monconv {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void write_json(std::string& out, const Json& v) {
    switch (v.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                write_json(out, it.value());
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                write_json(out, v[i]);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double x = v.get<double>();
            out += std::isfinite(x) ? format_double(x) : "null";
            break;
        }
        default:
            out += v.dump();
    }
}

}  // namespace

std::string dump_json(const Json& value) {
    std::string out;
    write_json(out, value);
    return out;
}

Json polynomial_to_json(const HomogeneousPolynomial& P) {
    Json doc;
    doc["m"] = P.degree();
    doc["n"] = P.dimension();
    Json entries = Json::array();
    for (const auto& t : P.terms()) {
        Json e;
        e["alpha"] = t.alpha.exponents();
        e["re"] = t.coeff.real();
        e["im"] = t.coeff.imag();
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

HomogeneousPolynomial polynomial_from_json(const Json& doc) {
    try {
        const auto m = doc.at("m").get<unsigned>();
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<HomogeneousPolynomial::Term> terms;
        for (const auto& e : doc.at("entries")) {
            terms.push_back({MultiIndex(e.at("alpha").get<std::vector<unsigned>>()),
                             Complex(e.at("re").get<double>(), e.value("im", 0.0))});
        }
        return HomogeneousPolynomial::from_terms(m, n, std::move(terms));
    } catch (const nlohmann::json::exception& ex) {
        throw precondition_error(std::string("malformed polynomial document: ") + ex.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace monconv
