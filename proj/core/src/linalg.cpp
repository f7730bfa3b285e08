#include "corrlab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "corrlab/error.hpp"

namespace corrlab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void check_weights(const Matrix& x, const TraceWeights& w) {
    if (w && w->size() != x.rows())
        fail_invalid("trace weights do not match matrix dimension");
}

} // namespace

Cplx traced(const Matrix& x, const TraceWeights& w) {
    check_weights(x, w);
    if (!w) return x.trace() / static_cast<double>(x.rows());
    return (w->template cast<Cplx>().array() * x.diagonal().array()).sum();
}

Cplx traced_product(const Matrix& a, const Matrix& b, const TraceWeights& w) {
    check_weights(a, w);
    // sum_{i,j} w_i a(i,j) b(j,i)
    if (!w)
        return (a.transpose().cwiseProduct(b)).sum() / static_cast<double>(a.rows());
    Matrix wa = w->asDiagonal() * a;
    return (wa.transpose().cwiseProduct(b)).sum();
}

Cplx traced_adj_product(const Matrix& a, const Matrix& b, const TraceWeights& w) {
    check_weights(a, w);
    // (a* b)_{jj} = sum_i conj(a(i,j)) b(i,j), so the weight sits on the
    // column index of the entrywise product.
    Matrix h = a.conjugate().cwiseProduct(b);
    if (!w) return h.sum() / static_cast<double>(a.rows());
    return (h * w->template cast<Cplx>()).sum();
}

double trace_norm2(const Matrix& x, const TraceWeights& w) {
    return std::sqrt(std::abs(traced_adj_product(x, x, w)));
}

double frobenius(const Matrix& x) { return x.norm(); }

double herm_deviation(const Matrix& x) { return (x - x.adjoint()).norm(); }

double idem_deviation(const Matrix& x) { return (x * x - x).norm(); }

double op_norm(const Matrix& x) {
    if (x.rows() == 0 || x.cols() == 0) return 0.0;
    if (x.rows() <= 32 && x.cols() <= 32) {
        Eigen::JacobiSVD<Matrix> svd(x);
        return svd.singularValues()(0);
    }
    Eigen::BDCSVD<Matrix> svd(x);
    return svd.singularValues()(0);
}

double min_hermitian_eigenvalue(const Matrix& x) {
    Matrix h = 0.5 * (x + x.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Cplx Rng::complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
    return m;
}

Matrix Rng::haar_unitary(int k) {
    Matrix g = gaussian_matrix(k, k);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase convention so the distribution is Haar.
    CVector phases(k);
    for (int i = 0; i < k; ++i) {
        Cplx d = r(i, i);
        phases(i) = std::abs(d) > 0 ? d / std::abs(d) : Cplx(1, 0);
    }
    return q * phases.asDiagonal();
}

Matrix Rng::random_projection(int k, int r) {
    if (r <= 0) return Matrix::Zero(k, k);
    if (r >= k) return Matrix::Identity(k, k);
    Matrix g = gaussian_matrix(k, r);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(k, r);
    return q * q.adjoint();
}

} // namespace corrlab
