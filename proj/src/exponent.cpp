#include "monconv/exponent.hpp"

#include <limits>
#include <cmath>
#include <sstream>

#include "monconv/errors.hpp"

namespace monconv {

Exponent::Exponent(double value) : value_(value) {
    if (std::isinf(value) && value > 0) {
        infinite_ = true;
        value_ = 1.0;
    } else if (!(value > 0) || !std::isfinite(value)) {
        throw precondition_error("exponent must be positive");
    }
}

Exponent Exponent::infinity() noexcept {
    Exponent e;
    e.infinite_ = true;
    return e;
}

double Exponent::value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

Exponent Exponent::conjugate() const {
    if (infinite_) return Exponent(1.0);
    if (value_ < 1.0) throw precondition_error("conjugate exponent needs r >= 1");
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
}

std::string Exponent::to_string() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

Exponent parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf" || text == "oo")
        return Exponent::infinity();
    auto parse_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw precondition_error("cannot parse exponent '" + text + "'");
        }
        if (used != s.size()) throw precondition_error("cannot parse exponent '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Exponent(parse_double(text));
    return Exponent(parse_double(text.substr(0, slash)) / parse_double(text.substr(slash + 1)));
}

}  // namespace monconv
