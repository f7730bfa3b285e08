#include "corrlab/tuples.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace corrlab::tuples {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sum_deviation(const ProjectionTuple& t, double alpha) {
    Matrix s = Matrix::Zero(t.k, t.k);
    for (const auto& p : t.projections) s += p;
    s -= alpha * Matrix::Identity(t.k, t.k);
    return s.norm();
}

int rank_of(const Matrix& p) {
    return static_cast<int>(std::llround(p.real().trace()));
}

} // namespace

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::seed: return "seed";
        case Provenance::functor_T: return "functor-T";
        case Provenance::functor_S: return "functor-S";
        case Provenance::solver: return "solver";
        case Provenance::symmetrized: return "symmetrized";
        case Provenance::direct_sum: return "direct-sum";
        case Provenance::bridge: return "bridge";
        case Provenance::external: return "external";
    }
    return "?";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "seed") return Provenance::seed;
    if (s == "functor-T") return Provenance::functor_T;
    if (s == "functor-S") return Provenance::functor_S;
    if (s == "solver") return Provenance::solver;
    if (s == "symmetrized") return Provenance::symmetrized;
    if (s == "direct-sum") return Provenance::direct_sum;
    if (s == "bridge") return Provenance::bridge;
    return Provenance::external;
}

void validate_tuple(const ProjectionTuple& t) {
    if (t.n < 1 || t.k < 1) fail_invalid("tuple: n and k must be positive");
    if (static_cast<int>(t.projections.size()) != t.n)
        fail_invalid("tuple: wrong number of projections");
    for (const auto& p : t.projections)
        if (p.rows() != t.k || p.cols() != t.k)
            fail_invalid("tuple: projection dimension mismatch");
    if (t.trace_weights) {
        if (t.trace_weights->size() != t.k)
            fail_invalid("tuple: trace weight length mismatch");
        if ((t.trace_weights->array() <= 0.0).any())
            fail_invalid("tuple: trace weights must be strictly positive");
        if (std::abs(t.trace_weights->sum() - 1.0) > 1e-10)
            fail_invalid("tuple: trace weights must sum to 1");
    }
    for (int i = 0; i < t.n; ++i) {
        double h = herm_deviation(t.projections[i]);
        double q = idem_deviation(t.projections[i]);
        if (h > t.tol || q > t.tol)
            fail_invalid("tuple: member " + std::to_string(i + 1) +
                         " is not a projection within tol (herm " +
                         std::to_string(h) + ", idem " + std::to_string(q) + ")");
    }
}

ProjectionTuple seed(SeedKind kind, int n, const Scalar& alpha) {
    if (n < 1) fail_invalid("seed: n must be positive");
    ProjectionTuple t;
    t.n = n;
    t.provenance = Provenance::seed;

    if (kind == SeedKind::integer_cover) {
        if (!alpha.is_rational() || !alpha.rational().is_integer())
            fail_invalid("seed integer-cover: alpha must be an integer");
        std::int64_t a = alpha.rational().num();
        if (a < 0 || a > n)
            fail_invalid("seed integer-cover: alpha must lie in {0,...,n}");
        t.k = n;
        t.alpha = static_cast<double>(a);
        for (int i = 0; i < n; ++i) {
            Matrix p = Matrix::Zero(n, n);
            for (std::int64_t s = 0; s < a; ++s) p((i + s) % n, (i + s) % n) = 1.0;
            t.projections.push_back(std::move(p));
        }
        t.residual = 0.0; // the cover hits each coordinate exactly alpha times
        return t;
    }

    // planar-half: rank-1 projections onto the lines at angles j*pi/n.
    if (n < 2) fail_invalid("seed planar-half: n must be >= 2");
    t.k = 2;
    t.alpha = n / 2.0;
    for (int j = 0; j < n; ++j) {
        double c = std::cos(j * kPi / n);
        double s = std::sin(j * kPi / n);
        Matrix p(2, 2);
        p << c * c, c * s, c * s, s * s;
        t.projections.push_back(std::move(p));
    }
    t.residual = sum_deviation(t, t.alpha);
    return t;
}

ProjectionTuple linear_reflection(const ProjectionTuple& t) {
    validate_tuple(t);
    ProjectionTuple out = t;
    out.provenance = Provenance::functor_T;
    out.alpha = t.n - t.alpha;
    Matrix id = Matrix::Identity(t.k, t.k);
    for (auto& p : out.projections) p = id - p;
    out.residual = sum_deviation(out, out.alpha);
    return out;
}

ProjectionTuple hyperbolic_reflection(const ProjectionTuple& t, double tol) {
    validate_tuple(t);
    const double alpha = t.alpha;
    if (alpha <= 1.0)
        fail_invalid("hyperbolic reflection: requires alpha > 1");
    const int n = t.n;
    const int k = t.k;
    const double scale = 1.0 / std::sqrt(alpha * alpha - alpha);

    // V_i as a 1 x n block row; block j is scale * P_i (alpha d_ij - P_j).
    std::vector<std::vector<Matrix>> vrows(n);
    for (int i = 0; i < n; ++i) {
        vrows[i].resize(n);
        for (int j = 0; j < n; ++j) {
            if (i == j)
                vrows[i][j] = scale * (alpha * t.projections[i] -
                                       t.projections[i] * t.projections[i]);
            else
                vrows[i][j] = -scale * (t.projections[i] * t.projections[j]);
        }
    }

    // V_i V_i* must reproduce P_i, otherwise the input does not sum to
    // alpha * I and the construction is meaningless.
    for (int i = 0; i < n; ++i) {
        Matrix vv = Matrix::Zero(k, k);
        for (int j = 0; j < n; ++j) vv += vrows[i][j] * vrows[i][j].adjoint();
        double dev = (vv - t.projections[i]).norm();
        if (dev > tol)
            fail_certificate("hyperbolic reflection: V_" + std::to_string(i + 1) +
                             " V* deviates from P by " + std::to_string(dev));
    }

    // Q_i = V_i* V_i in the n k x n k algebra; Q = diag(P) - alpha^{-1} [P_i P_j].
    const int big = n * k;
    std::vector<Matrix> qis(n);
    for (int i = 0; i < n; ++i) {
        Matrix qi = Matrix::Zero(big, big);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                qi.block(a * k, b * k, k, k) = vrows[i][a].adjoint() * vrows[i][b];
        qis[i] = std::move(qi);
    }
    Matrix q = Matrix::Zero(big, big);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Matrix blockab = -(1.0 / alpha) * (t.projections[a] * t.projections[b]);
            if (a == b) blockab += t.projections[a];
            q.block(a * k, b * k, k, k) = blockab;
        }
    }

    double qdev = idem_deviation(q);
    if (qdev > tol)
        fail_certificate("hyperbolic reflection: Q is not idempotent (dev " +
                         std::to_string(qdev) + "); input tuple invalid");

    // rank(Q) must match the trace identity (1 - 1/alpha) * sum rank(p_i).
    long long rank_sum = 0;
    for (const auto& p : t.projections) rank_sum += rank_of(p);
    double predicted = (1.0 - 1.0 / alpha) * static_cast<double>(rank_sum);

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (q + q.adjoint()));
    int rank = 0;
    for (int i = 0; i < big; ++i)
        if (es.eigenvalues()(i) > 0.5) ++rank;
    if (std::abs(rank - predicted) > 0.5)
        fail_certificate("hyperbolic reflection: rank(Q) = " + std::to_string(rank) +
                         " does not match the trace identity " +
                         std::to_string(predicted));

    // Orthonormal basis of range(Q): eigenvectors with eigenvalue near 1.
    Matrix w(big, rank);
    int col = 0;
    for (int i = 0; i < big; ++i)
        if (es.eigenvalues()(i) > 0.5) w.col(col++) = es.eigenvectors().col(i);

    ProjectionTuple out;
    out.n = n;
    out.k = rank;
    out.provenance = Provenance::functor_S;
    out.alpha = alpha / (alpha - 1.0);
    out.tol = t.tol;
    for (int i = 0; i < n; ++i) out.projections.push_back(w.adjoint() * qis[i] * w);
    out.residual = sum_deviation(out, out.alpha);
    return out;
}

long long RankVector::sum() const {
    return std::accumulate(r.begin(), r.end(), 0LL);
}

RankFeasibility rank_feasible(int n, const Scalar& alpha, std::int64_t k) {
    if (n < 1 || k < 1) fail_invalid("rank_feasible: n and k must be positive");

    Infeasibility cert;
    cert.n = n;
    cert.alpha = alpha.value();
    cert.k = k;

    std::int64_t target = 0;
    if (alpha.is_rational()) {
        const Rational& a = alpha.rational();
        Rational total = a * Rational(k);
        if (!total.is_integer()) {
            cert.dist = total.dist_to_integer().value();
            cert.reason = "alpha * k = " + total.str() + " is not an integer";
            return cert;
        }
        target = total.num();
    } else {
        double total = alpha.value() * static_cast<double>(k);
        double dist = std::abs(total - std::nearbyint(total));
        cert.dist = dist;
        cert.reason = "alpha is not rational: alpha * k is never an integer";
        return cert;
    }

    if (target < 0 || target > static_cast<std::int64_t>(n) * k) {
        cert.reason = "alpha * k = " + std::to_string(target) +
                      " is outside [0, n*k]";
        return cert;
    }

    // Balanced vector: distribute target over n entries, each at most k.
    RankVector rv;
    rv.r.assign(n, static_cast<int>(target / n));
    std::int64_t extra = target % n;
    for (std::int64_t i = 0; i < extra; ++i) rv.r[static_cast<size_t>(i)] += 1;
    return std::vector<RankVector>{rv};
}

ObstructionScan trace_obstruction_scan(const Scalar& alpha, std::int64_t k_max) {
    if (k_max < 1) fail_invalid("trace_obstruction_scan: k_max must be >= 1");
    ObstructionScan scan;
    scan.alpha = alpha.value();
    scan.k_max = k_max;
    scan.min_dist = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 1; k <= k_max; ++k) {
        double d = 0.0;
        if (alpha.is_rational()) {
            d = (alpha.rational() * Rational(k)).dist_to_integer().value();
        } else {
            double total = alpha.value() * static_cast<double>(k);
            d = std::abs(total - std::nearbyint(total));
        }
        if (d < scan.min_dist) {
            scan.min_dist = d;
            scan.argmin_k = k;
        }
        if (d == 0.0) break;
    }
    scan.denominator_bound =
        scan.min_dist > 0.0
            ? static_cast<std::int64_t>(std::floor(1.0 / (2.0 * scan.min_dist)))
            : 0;
    return scan;
}

SolveOutcome solve(int n, const Scalar& alpha, int k, const RankVector& ranks,
                   const SolverConfig& cfg) {
    if (n < 1 || k < 1) fail_invalid("solve: n and k must be positive");
    if (static_cast<int>(ranks.r.size()) != n)
        fail_invalid("solve: rank vector length must equal n");
    for (int r : ranks.r)
        if (r < 0 || r > k) fail_invalid("solve: ranks must lie in [0, k]");
    if (cfg.restarts < 1) fail_invalid("solve: restarts must be >= 1");
    if (cfg.residual_target <= 0) fail_invalid("solve: residual_target must be > 0");

    const double a = alpha.value();
    if (alpha.is_rational()) {
        Rational total = alpha.rational() * Rational(k);
        if (!total.is_integer() || total.num() != ranks.sum())
            fail_infeasible("solve: sum of ranks " + std::to_string(ranks.sum()) +
                            " != alpha * k = " + (alpha.rational() * Rational(k)).str());
    } else {
        fail_infeasible("solve: irrational alpha admits no finite-dimensional tuple");
    }

    const Matrix id = Matrix::Identity(k, k);
    SolveOutcome best;
    best.residual = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(cfg.rng_seed + static_cast<std::uint64_t>(restart));
        std::vector<Matrix> p(n);
        for (int i = 0; i < n; ++i) p[i] = rng.random_projection(k, ranks.r[i]);

        Matrix sum = Matrix::Zero(k, k);
        for (const auto& m : p) sum += m;

        double residual = (sum - a * id).norm();
        int iter = 0;
        double prev = residual;
        for (iter = 1; iter <= cfg.max_iterations && residual > cfg.residual_target;
             ++iter) {
            for (int i = 0; i < n; ++i) {
                if (ranks.r[i] == 0) {
                    sum -= p[i];
                    p[i].setZero();
                    continue;
                }
                if (ranks.r[i] == k) {
                    sum -= p[i];
                    p[i] = id;
                    sum += p[i];
                    continue;
                }
                Matrix h = a * id - (sum - p[i]);
                h = 0.5 * (h + h.adjoint());
                Eigen::SelfAdjointEigenSolver<Matrix> es(h);
                Matrix v = es.eigenvectors().rightCols(ranks.r[i]);
                sum -= p[i];
                p[i] = v * v.adjoint();
                sum += p[i];
            }
            residual = (sum - a * id).norm();
            if (iter % 25 == 0) {
                if (prev - residual < 1e-15) break; // stalled
                prev = residual;
            }
        }

        if (residual < best.residual) {
            best.residual = residual;
            best.iterations = iter;
            best.restart_index = restart;
            best.tuple.projections = p;
        }
        if (best.residual <= cfg.residual_target) break;
    }

    best.tuple.n = n;
    best.tuple.k = k;
    best.tuple.provenance = Provenance::solver;
    best.tuple.alpha = a;
    best.tuple.tol = cfg.tol;
    best.tuple.residual = best.residual;
    best.success = best.residual <= cfg.residual_target;
    return best;
}

ProjectionTuple symmetrize(const ProjectionTuple& t, int max_n) {
    validate_tuple(t);
    if (t.n > max_n)
        fail_invalid("symmetrize: n = " + std::to_string(t.n) +
                     " exceeds the dimension guard n <= " + std::to_string(max_n) +
                     " (output dimension is n! * k)");

    std::vector<int> perm(t.n);
    std::iota(perm.begin(), perm.end(), 0);
    long long fact = 1;
    for (int i = 2; i <= t.n; ++i) fact *= i;
    const int big = static_cast<int>(fact) * t.k;

    ProjectionTuple out;
    out.n = t.n;
    out.k = big;
    out.provenance = Provenance::symmetrized;
    out.alpha = t.alpha;
    out.tol = t.tol;
    for (int j = 0; j < t.n; ++j) out.projections.emplace_back(Matrix::Zero(big, big));

    int block = 0;
    do {
        for (int j = 0; j < t.n; ++j)
            out.projections[j].block(block * t.k, block * t.k, t.k, t.k) =
                t.projections[perm[j]];
        ++block;
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (t.trace_weights) {
        RVector w(big);
        for (long long b = 0; b < fact; ++b)
            w.segment(b * t.k, t.k) = *t.trace_weights / static_cast<double>(fact);
        out.trace_weights = w;
    }
    out.residual = t.residual; // block-diagonal sum reproduces the input deviation
    return out;
}

TupleReport verify_tuple(const ProjectionTuple& t, double alpha, double tol) {
    TupleReport rep;
    if (t.n < 1 || t.k < 1 || static_cast<int>(t.projections.size()) != t.n)
        fail_invalid("verify_tuple: malformed tuple");
    Matrix sum = Matrix::Zero(t.k, t.k);
    for (const auto& p : t.projections) {
        rep.herm_dev = std::max(rep.herm_dev, herm_deviation(p));
        rep.idem_dev = std::max(rep.idem_dev, idem_deviation(p));
        sum += p;
    }
    rep.sum_dev = (sum - alpha * Matrix::Identity(t.k, t.k)).norm();
    rep.pass = rep.herm_dev <= tol && rep.idem_dev <= tol && rep.sum_dev <= tol;
    return rep;
}

int propagation(const Matrix& x, double threshold) {
    if (threshold < 0) fail_invalid("propagation: threshold must be >= 0");
    int band = 0;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (std::abs(x(i, j)) > threshold) band = std::max(band, std::abs(i - j));
    return band;
}

Matrix cyclic_shift(int k) {
    Matrix z = Matrix::Zero(k, k);
    for (int i = 0; i < k; ++i) z(i, (i + 1) % k) = 1.0;
    return z;
}

std::vector<CVector> shift_decompose(const Matrix& y, int l, double threshold) {
    if (y.rows() != y.cols()) fail_invalid("shift_decompose: square matrix required");
    const int k = static_cast<int>(y.rows());
    if (l < 0) fail_invalid("shift_decompose: l must be >= 0");
    if (2 * l + 1 > k)
        fail_invalid("shift_decompose: 2l+1 > k, band decomposition not unique");

    // Cyclic bandwidth check: every entry beyond cyclic distance l must
    // vanish (up to the modulus threshold).
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int d = std::abs(i - j);
            int cyc = std::min(d, k - d);
            if (cyc > l && std::abs(y(i, j)) > threshold)
                fail_invalid("shift_decompose: cyclic propagation " +
                             std::to_string(cyc) + " at (" + std::to_string(i) +
                             "," + std::to_string(j) + ") exceeds l = " +
                             std::to_string(l));
        }
    }

    std::vector<CVector> f;
    f.reserve(2 * l + 1);
    for (int m = -l; m <= l; ++m) {
        CVector fm(k);
        for (int i = 0; i < k; ++i) fm(i) = y(i, ((i + m) % k + k) % k);
        f.push_back(std::move(fm));
    }
    return f;
}

ProjectionTuple direct_sum(const ProjectionTuple& a, const ProjectionTuple& b,
                           double lambda) {
    if (a.n != b.n) fail_invalid("direct_sum: mismatched tuple lengths");
    if (!(lambda > 0.0 && lambda < 1.0))
        fail_invalid("direct_sum: lambda must lie in (0, 1)");
    ProjectionTuple out;
    out.n = a.n;
    out.k = a.k + b.k;
    out.provenance = Provenance::direct_sum;
    out.alpha = a.alpha; // meaningful when both summands share the scalar
    out.tol = std::max(a.tol, b.tol);
    for (int j = 0; j < a.n; ++j) {
        Matrix p = Matrix::Zero(out.k, out.k);
        p.topLeftCorner(a.k, a.k) = a.projections[j];
        p.bottomRightCorner(b.k, b.k) = b.projections[j];
        out.projections.push_back(std::move(p));
    }
    RVector w(out.k);
    RVector wa = a.trace_weights ? *a.trace_weights
                                 : RVector::Constant(a.k, 1.0 / a.k);
    RVector wb = b.trace_weights ? *b.trace_weights
                                 : RVector::Constant(b.k, 1.0 / b.k);
    w.head(a.k) = lambda * wa;
    w.tail(b.k) = (1.0 - lambda) * wb;
    out.trace_weights = w;
    out.residual = std::max(a.residual, b.residual);
    return out;
}

} // namespace corrlab::tuples
