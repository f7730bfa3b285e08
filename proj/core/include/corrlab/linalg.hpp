#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace corrlab {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Trace weights attached to a tuple; absent means the normalized trace.
using TraceWeights = std::optional<RVector>;

/// tau_w(x): weighted trace, or tr(x)/k when no weights are given.
Cplx traced(const Matrix& x, const TraceWeights& w);

/// tau_w(a b) without forming the product (O(k^2)).
Cplx traced_product(const Matrix& a, const Matrix& b, const TraceWeights& w);

/// tau_w(a* b) without forming the product (O(k^2)).
Cplx traced_adj_product(const Matrix& a, const Matrix& b, const TraceWeights& w);

/// sqrt(Re tau_w(x* x)): the 2-norm induced by the trace.
double trace_norm2(const Matrix& x, const TraceWeights& w);

double frobenius(const Matrix& x);
double herm_deviation(const Matrix& x);  // ||x - x*||_F
double idem_deviation(const Matrix& x);  // ||x^2 - x||_F
double op_norm(const Matrix& x);         // largest singular value

/// Smallest eigenvalue of the Hermitian part of x.
double min_hermitian_eigenvalue(const Matrix& x);

/// Deterministic random source. Gaussians come from an explicit Box-Muller
/// over mt19937_64 so that streams do not depend on the standard library's
/// normal_distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform();  // [0, 1)
    double gaussian();
    Cplx complex_gaussian();

    Matrix gaussian_matrix(int rows, int cols);
    Matrix haar_unitary(int k);
    /// Random rank-r orthogonal projection in dimension k.
    Matrix random_projection(int k, int r);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace corrlab
