#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrlab/scalar.hpp"

namespace corrlab::spectra {

/// Tri-state membership in the scalar-sum spectrum. `unknown_discrete`
/// means the value is a rational outside the interval and outside the
/// tabulated points, where the discrete part is only partially known.
enum class Membership { in, out, unknown_discrete };

enum class Component { interval, listed_point, symmetric_image, none };

struct SigmaQuery {
    int n = 2;
    Scalar alpha;
    /// Absolute tolerance for real alpha at the interval endpoints.
    double endpoint_tol = 1e-12;
};

struct SigmaVerdict {
    Membership member = Membership::out;
    Component component = Component::none;
    /// Present iff alpha is rational and member != out: a reduced a/b
    /// realization needs dimension at least b.
    std::optional<std::int64_t> dim_lower_bound;
    /// True when a real alpha was admitted into the interval only within
    /// endpoint_tol of an endpoint.
    bool endpoint_tol_used = false;
};

const char* to_string(Membership m);
const char* to_string(Component c);

/// Decides membership of alpha in the n-projection scalar spectrum.
/// n = 2, 3 are fully enumerated; n = 4 has the integers plus an
/// accumulation point at 2 and an otherwise unresolved discrete part;
/// n >= 5 is the closed interval [ (n - sqrt(n^2-4n))/2, (n + sqrt(n^2-4n))/2 ]
/// together with tabulated discrete points, closed under alpha <-> n - alpha.
SigmaVerdict sigma_membership(const SigmaQuery& q);

/// Interval endpoints [ (n - sqrt(n^2-4n))/2, (n + sqrt(n^2-4n))/2 ], n >= 5.
std::pair<double, double> scalar_sum_interval(int n);

/// Normalized interval [ (1 - sqrt(1-4/n))/2, (1 + sqrt(1-4/n))/2 ], n >= 5.
/// Rejects n <= 4: the radicand is zero at n = 4 (a point, not an interval).
std::pair<double, double> pi_interval(int n);

/// For reduced a/b with a, b >= 1: any realization space has dimension >= b.
/// Rejects non-reduced or non-positive input.
std::int64_t dim_lower_bound(std::int64_t a, std::int64_t b);

/// Exact test of a/b against the closed n >= 5 interval:
/// (2a - nb)^2 <= n(n-4) b^2.
bool rational_in_interval(const Rational& alpha, int n);

/// The tabulated discrete points of the spectrum for this n (symmetric set).
/// `full` reports whether the list is the entire spectrum (n = 2, 3).
std::vector<Rational> listed_points(int n, bool& full);

} // namespace corrlab::spectra
