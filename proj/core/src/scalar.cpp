#include "corrlab/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace corrlab {

namespace {

using I128 = __int128;

std::int64_t checked_narrow(I128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        fail_invalid(std::string("rational overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(I128 num, I128 den, const char* what) {
    if (den == 0) fail_invalid("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    I128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(checked_narrow(num, what), checked_narrow(den, what));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) fail_invalid("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(I128(a.num_) * b.den_ + I128(b.num_) * a.den_,
                        I128(a.den_) * b.den_, "+");
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(I128(a.num_) * b.den_ - I128(b.num_) * a.den_,
                        I128(a.den_) * b.den_, "-");
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(I128(a.num_) * b.num_, I128(a.den_) * b.den_, "*");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail_invalid("rational: division by zero");
    return make_reduced(I128(a.num_) * b.den_, I128(a.den_) * b.num_, "/");
}

bool operator<(const Rational& a, const Rational& b) {
    return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
}

Rational Rational::dist_to_integer() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    // r/den vs (den-r)/den, whichever is closer to 0
    if (2 * r <= den_) return Rational(r, den_);
    return Rational(den_ - r, den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, std::int64_t& out) {
        if (s.empty()) return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t a = 0, b = 0;
        if (!parse_int(text.substr(0, slash), a)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), b)) return std::nullopt;
        if (b == 0) return std::nullopt;
        return Rational(a, b);
    }

    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        bool neg = false;
        std::string_view body = text;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            neg = body.front() == '-';
            body.remove_prefix(1);
            --dot;
        }
        std::string_view head = body.substr(0, dot);
        std::string_view tail = body.substr(dot + 1);
        if (tail.size() > 17) return std::nullopt; // denominator overflow
        std::int64_t ipart = 0, frac = 0;
        if (!head.empty() && !parse_int(head, ipart)) return std::nullopt;
        if (!tail.empty() && !parse_int(tail, frac)) return std::nullopt;
        if (ipart < 0 || frac < 0) return std::nullopt;
        std::int64_t den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        I128 num = I128(ipart) * den + I128(frac);
        return make_reduced(neg ? -num : num, den, "decimal");
    }

    std::int64_t a = 0;
    if (!parse_int(text, a)) return std::nullopt;
    return Rational(a, 1);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Scalar::str() const {
    if (is_rational_) return rational_.str();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", real_);
    return buf;
}

Scalar Scalar::parse(std::string_view text, bool declare_irrational) {
    if (declare_irrational) {
        char* end = nullptr;
        std::string owned(text);
        double v = std::strtod(owned.c_str(), &end);
        if (end != owned.c_str() + owned.size())
            fail_invalid("scalar: cannot parse real '" + owned + "'");
        return Scalar::real(v);
    }
    auto r = Rational::parse(text);
    if (!r) fail_invalid("scalar: cannot parse '" + std::string(text) +
                         "' (use a/b, an integer, or a decimal)");
    return Scalar(*r);
}

Scalar scale_by_int(const Scalar& s, std::int64_t n) {
    if (s.is_rational()) return Scalar(s.rational() * Rational(n));
    return Scalar::real(s.value() * static_cast<double>(n));
}

} // namespace corrlab
