#pragma once

#include <Eigen/Dense>

#include "ktorus/errors.hpp"

namespace ktorus {

/// Unique positive-semidefinite square root by spectral decomposition.
/// Requires H = H* to 1e-10 and eigenvalues >= -1e-10 (small negatives are
/// clamped to 0).
Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& h);

struct FuncalcResult {
    Eigen::MatrixXcd P;          // 2m x 2m
    double unitary_residual = 0;     // max of ||U U* - 1||, ||V V* - 1||
    double commutator_norm = 0;      // ||U V - V U||
    double projection_residual = 0;  // ||P^2 - P||
    double adjoint_residual = 0;     // ||P - P*||
};

/// The block-matrix projection
///   1/16 [ 16 - (2-U-U*)(2-V-V*)            2(2-U-U*)^{1/2}(V-V*) + i(U*-U)(2-V-V*) ]
///        [ 2(2-U-U*)^{1/2}(V*-V) + i(U-U*)(2-V-V*)            (2-U-U*)(2-V-V*)      ]
/// for commuting unitaries U, V.  Throws InputError when the inputs are not
/// unitary or do not commute to 1e-10.
FuncalcResult apply_isely(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace ktorus
