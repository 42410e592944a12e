#pragma once

#include <string>

namespace monconv {

// An exponent in (0, ∞], with ∞ carried as a flag rather than a sentinel value.
class Exponent {
public:
    Exponent(double value);  // NOLINT(google-explicit-constructor)

    static Exponent infinity() noexcept;

    bool is_infinite() const noexcept { return infinite_; }
    double value() const;
    double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

    // Hölder conjugate: 1 ↔ ∞, r ↦ r/(r-1).
    Exponent conjugate() const;

    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    Exponent() = default;
    double value_ = 1.0;
    bool infinite_ = false;
};

// Accepts a decimal, a ratio "4/3", or "inf".
Exponent parse_exponent(const std::string& text);

}  // namespace monconv
