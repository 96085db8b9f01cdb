#pragma once

#include <complex>
#include <vector>

#include "ktorus/errors.hpp"

namespace ktorus {

/// Finitely supported Laurent coefficient sequence sum_k c_k s^k with real
/// double coefficients; index k runs over [lo, lo + c.size() - 1].
struct CoeffSeq {
    int lo = 0;
    std::vector<double> c;

    static CoeffSeq delta(int k, double v = 1.0) { return {k, {v}}; }
    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    double at(int k) const {
        return (k < lo || k > hi()) ? 0.0 : c[static_cast<std::size_t>(k - lo)];
    }
    /// Drops zero margins so equal sequences compare equal.
    CoeffSeq trimmed() const;
};

/// Submultiplicative weight w(k) = alpha^|k|, alpha >= 1.
struct Weight {
    double alpha = 1.0;
    explicit Weight(double a) : alpha(a) {
        if (!(a >= 1.0)) throw InputError("Weight: alpha must be >= 1");
    }
    double operator()(int k) const;
};

CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b);
/// The involution on real sequences: coefficient reflection k -> -k.
CoeffSeq reflect(const CoeffSeq& a);

double l1_norm(const CoeffSeq& a);
double weighted_l1_norm(const CoeffSeq& a, const Weight& w);
double sup_norm_estimate(const CoeffSeq& a, int grid);

std::complex<double> eval_seq(const CoeffSeq& a, double theta);
/// Termwise derivative evaluated at theta (exact differentiation of the
/// trigonometric polynomial, then sampling).
std::complex<double> eval_seq_deriv(const CoeffSeq& a, double theta);

/// Partial sum S_N of the cosine expansion of |sin(pi theta)|:
/// c_0 = 2/pi, c_{+-k} = -2 / (pi (4k^2 - 1)).
CoeffSeq sin_fourier_partial(int n);
double sin_fourier_coeff(int k);
/// l1 distance from S_N to the full series, closed form 2 / (pi (2N + 1)).
double sin_fourier_tail_l1(int n);
/// Same tail by brute summation of `terms` coefficients plus the exact
/// telescoped remainder; agrees with the closed form to rounding.
double sin_fourier_tail_l1_summed(int n, int terms);
/// Weighted norm of the degree-k term of the series (both coefficients).
double sin_fourier_term_norm(int k, const Weight& w);

/// || S_N * S_N - (2 d_0 - d_1 - d_{-1}) / 4 ||_1: the convolution square of
/// the partial sum against the exact square of the limit.
double square_residual(int n);

struct SpectralRadiusEstimate {
    std::vector<double> root_norms;   // ||x^k||_w^{1/k}, k = 1..K
    std::vector<double> running_min;  // Gelfand upper bound
};
/// Power-norm sequence by repeated convolution; overflow falls back to
/// log-domain accumulation.
SpectralRadiusEstimate spectral_radius_estimate(const CoeffSeq& x, const Weight& w, int k_max);

/// max_theta |d/dtheta (S_2N - S_N)(theta)| over a uniform grid: stays
/// bounded away from 0, witnessing that S_N is not Cauchy in the C^1 norm
/// (while ||S_2N - S_N||_inf <= the l1 tail).
double c1_gap(int n, int grid);

}  // namespace ktorus
