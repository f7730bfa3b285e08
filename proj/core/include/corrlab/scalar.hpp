#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "corrlab/error.hpp"

namespace corrlab {

/// Exact rational a/b, always stored reduced with b > 0.
/// Arithmetic goes through 128-bit intermediates and throws on 64-bit
/// overflow of the reduced result.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);
    Rational(std::int64_t num) : Rational(num, 1) {} // NOLINT: implicit by design

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Distance from a/b to the nearest integer, as an exact rational.
    Rational dist_to_integer() const;

    /// Accepts "a/b", a plain integer, or a decimal literal such as "0.25"
    /// (decimals are exact: 0.25 -> 1/4).
    static std::optional<Rational> parse(std::string_view text);

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// A scalar that is either an exact rational or a plain real. A real carries
/// no rationality claim; integrality arguments treat it as irrational.
class Scalar {
public:
    Scalar() : Scalar(Rational(0)) {}
    Scalar(Rational r) : rational_(r), is_rational_(true) {} // NOLINT: implicit by design
    static Scalar real(double v) {
        Scalar s;
        s.is_rational_ = false;
        s.real_ = v;
        return s;
    }

    bool is_rational() const { return is_rational_; }
    const Rational& rational() const {
        if (!is_rational_) fail_invalid("scalar: exact rational required");
        return rational_;
    }
    double value() const { return is_rational_ ? rational_.value() : real_; }

    std::string str() const;

    /// Parses the CLI syntax: "a/b" and decimal literals are exact rationals;
    /// with declare_irrational the value is kept as a real.
    static Scalar parse(std::string_view text, bool declare_irrational = false);

private:
    Rational rational_;
    double real_ = 0.0;
    bool is_rational_ = true;
};

/// n * s, exact when s is rational.
Scalar scale_by_int(const Scalar& s, std::int64_t n);

} // namespace corrlab
