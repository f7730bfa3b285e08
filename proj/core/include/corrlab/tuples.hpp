#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "corrlab/linalg.hpp"
#include "corrlab/scalar.hpp"

namespace corrlab::tuples {

enum class Provenance {
    seed,
    functor_T,
    functor_S,
    solver,
    symmetrized,
    direct_sum,
    bridge,
    external,
};

const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// An n-tuple of k x k complex projections with an optional weighted trace.
/// Weights, when present, are strictly positive and sum to 1 (a faithful
/// trace); absent means the normalized trace tr/k.
struct ProjectionTuple {
    int n = 0;
    int k = 0;
    std::vector<Matrix> projections;
    TraceWeights trace_weights;
    Provenance provenance = Provenance::external;
    /// Nominal scalar sum: sum_i p_i ~ alpha * I.
    double alpha = 0.0;
    /// Tolerance the invariants were last checked at, and the recorded
    /// worst deviation (Hermiticity / idempotency / sum, whichever is max).
    double tol = 1e-10;
    double residual = 0.0;
};

/// Structural validation: shapes, weights positivity, Hermiticity and
/// idempotency within t.tol. Throws on violation.
void validate_tuple(const ProjectionTuple& t);

struct TupleReport {
    double herm_dev = 0.0;
    double idem_dev = 0.0;
    double sum_dev = 0.0;
    bool pass = false;
};

enum class SeedKind { integer_cover, planar_half };

/// integer-cover: alpha in {0,...,n}; diagonal 0/1 projections in dimension
/// n, projection i covering coordinates i..i+alpha-1 cyclically, so the sum
/// is exactly alpha * I.
/// planar-half: n rank-1 projections in dimension 2 onto the lines at
/// angles j*pi/n; the sum is (n/2) * I.
ProjectionTuple seed(SeedKind kind, int n, const Scalar& alpha);

/// p_i -> 1 - p_i. Maps a sum-alpha tuple to a sum-(n-alpha) tuple and is
/// an involution.
ProjectionTuple linear_reflection(const ProjectionTuple& t);

/// The hyperbolic reflection alpha -> alpha/(alpha-1), built from the
/// partial isometries V_i = (alpha^2-alpha)^{-1/2} P_i [ -P_1 .. alpha-P_i
/// .. -P_n ] and the compression of Q_i = V_i* V_i to the range of the
/// projection Q = diag(P) - alpha^{-1} [P_i P_j]. Requires alpha > 1.
ProjectionTuple hyperbolic_reflection(const ProjectionTuple& t, double tol = 1e-8);

struct RankVector {
    std::vector<int> r;
    long long sum() const;
};

struct Infeasibility {
    int n = 0;
    double alpha = 0.0;
    std::int64_t k = 0;
    /// dist(alpha * k, Z); exact for rational alpha.
    double dist = 0.0;
    std::string reason;
};

using RankFeasibility = std::variant<std::vector<RankVector>, Infeasibility>;

/// Rank vectors r with entries in [0, k] and sum r = alpha * k, or an
/// infeasibility certificate when alpha * k is not an integer in [0, n*k].
/// Real (irrational) alpha is infeasible for every k.
RankFeasibility rank_feasible(int n, const Scalar& alpha, std::int64_t k);

/// Scans k = 1..k_max and records the smallest distance from alpha * k to
/// the integers: a finite-dimension obstruction certificate for values that
/// never become feasible.
struct ObstructionScan {
    double alpha = 0.0;
    std::int64_t k_max = 0;
    double min_dist = 0.0;
    std::int64_t argmin_k = 0;
    /// Any exact realization needs dimension beyond this scan:
    /// floor(1 / (2 * min_dist)) when min_dist > 0.
    std::int64_t denominator_bound = 0;
};
ObstructionScan trace_obstruction_scan(const Scalar& alpha, std::int64_t k_max);

struct SolverConfig {
    int max_iterations = 2000;
    int restarts = 20;
    std::uint64_t rng_seed = 1;
    double residual_target = 1e-8;
    double tol = 1e-10;
};

struct SolveOutcome {
    ProjectionTuple tuple;
    double residual = 0.0;
    bool success = false;
    int iterations = 0;
    int restart_index = 0;
};

/// Alternating spectral-projection solver: cyclically replace p_i by the
/// projection onto the top-r_i eigenspace of alpha*I - sum_{j != i} p_j,
/// restarted from deterministic random tuples. Each sweep cannot increase
/// ||sum p - alpha I||_F. Ties at the rank cut follow the eigensolver's
/// ascending order, which is deterministic for a fixed seed.
SolveOutcome solve(int n, const Scalar& alpha, int k, const RankVector& ranks,
                   const SolverConfig& cfg);

/// Direct sum over all permutations sigma of p_{sigma(j)}, in dimension
/// n! * k. The output moment matrix is constant on and off the diagonal.
/// Refuses n > max_n (the dimension grows as n! * k).
ProjectionTuple symmetrize(const ProjectionTuple& t, int max_n = 8);

TupleReport verify_tuple(const ProjectionTuple& t, double alpha, double tol);

/// max |i - j| over entries with modulus > threshold; 0 for diagonal
/// matrices.
int propagation(const Matrix& x, double threshold);

/// Writes y = sum_{m=-l}^{l} f_m z^m with z the cyclic shift
/// z(i, i+1 mod k) = 1 and f_m diagonal. Requires cyclic bandwidth <= l and
/// 2l+1 <= k; returns the 2l+1 diagonals f_{-l}..f_l.
std::vector<CVector> shift_decompose(const Matrix& y, int l,
                                     double threshold = 1e-12);

/// The cyclic shift matrix used by shift_decompose.
Matrix cyclic_shift(int k);

/// Two tuples glued as a block direct sum with trace weights
/// (lambda * w1, (1-lambda) * w2). Requires matching n and lambda in (0,1).
ProjectionTuple direct_sum(const ProjectionTuple& a, const ProjectionTuple& b,
                           double lambda);

} // namespace corrlab::tuples
