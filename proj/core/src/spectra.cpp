#include "corrlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace corrlab::spectra {

namespace {

using I128 = __int128;

bool alpha_in_bounds(const Rational& a, int n) {
    return a >= Rational(0) && a <= Rational(n);
}

} // namespace

const char* to_string(Membership m) {
    switch (m) {
        case Membership::in: return "in";
        case Membership::out: return "out";
        case Membership::unknown_discrete: return "unknown-discrete";
    }
    return "?";
}

const char* to_string(Component c) {
    switch (c) {
        case Component::interval: return "interval";
        case Component::listed_point: return "listed-point";
        case Component::symmetric_image: return "symmetric-image";
        case Component::none: return "none";
    }
    return "?";
}

std::pair<double, double> scalar_sum_interval(int n) {
    if (n < 5) fail_invalid("scalar_sum_interval: requires n >= 5");
    double root = std::sqrt(static_cast<double>(n) * (n - 4.0));
    return {0.5 * (n - root), 0.5 * (n + root)};
}

std::pair<double, double> pi_interval(int n) {
    if (n <= 4)
        fail_invalid("pi_interval: requires n >= 5 (the interval is degenerate at n = 4)");
    double root = std::sqrt(1.0 - 4.0 / static_cast<double>(n));
    return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

std::int64_t dim_lower_bound(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) fail_invalid("dim_lower_bound: a and b must be positive");
    if (std::gcd(a, b) != 1) fail_invalid("dim_lower_bound: a/b must be reduced");
    return b;
}

bool rational_in_interval(const Rational& alpha, int n) {
    if (n < 5) return false;
    // alpha in [ (n - sqrt(n(n-4)))/2, (n + sqrt(n(n-4)))/2 ]
    // <=> (2 alpha - n)^2 <= n(n-4), cleared of denominators.
    I128 lhs = I128(2) * alpha.num() - I128(n) * alpha.den();
    lhs *= lhs;
    I128 rhs = I128(n) * (n - 4) * alpha.den() * alpha.den();
    return lhs <= rhs;
}

std::vector<Rational> listed_points(int n, bool& full) {
    full = false;
    switch (n) {
        case 2:
            full = true;
            return {Rational(0), Rational(1), Rational(2)};
        case 3:
            full = true;
            return {Rational(0), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
        case 4:
            return {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)};
        default: {
            // 0, 1, n/(n-1) and their reflections n, n-1, n - n/(n-1).
            std::vector<Rational> pts = {Rational(0), Rational(1), Rational(n, n - 1)};
            std::vector<Rational> out = pts;
            for (const auto& p : pts) out.push_back(Rational(n) - p);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
    }
}

SigmaVerdict sigma_membership(const SigmaQuery& q) {
    if (q.n < 2) fail_invalid("sigma_membership: n must be >= 2");
    const int n = q.n;
    SigmaVerdict v;

    if (q.alpha.is_rational()) {
        const Rational a = q.alpha.rational();
        if (!alpha_in_bounds(a, n)) return v; // out / none

        bool full = false;
        auto pts = listed_points(n, full);

        auto set_bound = [&] { v.dim_lower_bound = a.num() == 0 ? 1 : a.den(); };

        if (std::find(pts.begin(), pts.end(), a) != pts.end()) {
            v.member = Membership::in;
            v.component = Component::listed_point;
            set_bound();
            return v;
        }
        Rational mirrored = Rational(n) - a;
        if (std::find(pts.begin(), pts.end(), mirrored) != pts.end()) {
            v.member = Membership::in;
            v.component = Component::symmetric_image;
            set_bound();
            return v;
        }
        if (n >= 5 && rational_in_interval(a, n)) {
            v.member = Membership::in;
            v.component = Component::interval;
            set_bound();
            return v;
        }
        if (full) return v; // n = 2, 3: fully enumerated, so out
        v.member = Membership::unknown_discrete;
        v.component = Component::none;
        set_bound();
        return v;
    }

    // Real alpha: no rationality claim, so only the interval can admit it.
    const double a = q.alpha.value();
    const double tol = q.endpoint_tol;
    if (a < -tol || a > n + tol) return v;
    if (n >= 5) {
        auto [lo, hi] = scalar_sum_interval(n);
        if (a >= lo - tol && a <= hi + tol) {
            v.member = Membership::in;
            v.component = Component::interval;
            v.endpoint_tol_used = std::abs(a - lo) <= tol || std::abs(a - hi) <= tol;
            return v;
        }
    }
    return v; // irrational values outside the interval are not in the set
}

} // namespace corrlab::spectra
