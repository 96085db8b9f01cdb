#include "ktorus/funcalc.hpp"

namespace ktorus {

Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols()) throw InputError("sqrt_psd: square matrix required");
    if ((h - h.adjoint()).norm() > 1e-10) throw InputError("sqrt_psd: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd lam = es.eigenvalues();
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        if (lam[k] < -1e-10) throw InputError("sqrt_psd: negative eigenvalue");
        lam[k] = std::sqrt(std::max(0.0, lam[k]));
    }
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

FuncalcResult apply_isely(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    const auto m = u.rows();
    if (u.cols() != m || v.rows() != m || v.cols() != m)
        throw InputError("apply_isely: U and V must be square of equal size");
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
    FuncalcResult out;
    out.unitary_residual = std::max((u * u.adjoint() - id).norm(), (v * v.adjoint() - id).norm());
    if (out.unitary_residual > 1e-10) throw InputError("apply_isely: inputs are not unitary");
    out.commutator_norm = (u * v - v * u).norm();
    if (out.commutator_norm > 1e-10) throw InputError("apply_isely: U and V do not commute");

    const std::complex<double> i(0.0, 1.0);
    Eigen::MatrixXcd du = 2.0 * id - u - u.adjoint();
    Eigen::MatrixXcd dv = 2.0 * id - v - v.adjoint();
    Eigen::MatrixXcd root = sqrt_psd(du);

    Eigen::MatrixXcd p(2 * m, 2 * m);
    p.topLeftCorner(m, m) = 16.0 * id - du * dv;
    p.topRightCorner(m, m) = 2.0 * root * (v - v.adjoint()) + i * (u.adjoint() - u) * dv;
    p.bottomLeftCorner(m, m) = 2.0 * root * (v.adjoint() - v) + i * (u - u.adjoint()) * dv;
    p.bottomRightCorner(m, m) = du * dv;
    p /= 16.0;

    out.projection_residual = (p * p - p).norm();
    out.adjoint_residual = (p - p.adjoint()).norm();
    out.P = std::move(p);
    return out;
}

}  // namespace ktorus
