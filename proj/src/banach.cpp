#include "ktorus/banach.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ktorus {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

CoeffSeq CoeffSeq::trimmed() const {
    std::size_t first = 0, last = c.size();
    while (first < last && c[first] == 0.0) ++first;
    while (last > first && c[last - 1] == 0.0) --last;
    if (first == last) return {0, {}};
    return {lo + static_cast<int>(first),
            std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(first),
                                c.begin() + static_cast<std::ptrdiff_t>(last))};
}

double Weight::operator()(int k) const { return std::pow(alpha, std::abs(k)); }

CoeffSeq convolve(const CoeffSeq& a, const CoeffSeq& b) {
    if (a.c.empty() || b.c.empty()) return {0, {}};
    CoeffSeq out{a.lo + b.lo, std::vector<double>(a.c.size() + b.c.size() - 1, 0.0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

CoeffSeq reflect(const CoeffSeq& a) {
    CoeffSeq out{-a.hi(), a.c};
    std::reverse(out.c.begin(), out.c.end());
    return out;
}

double l1_norm(const CoeffSeq& a) {
    double s = 0;
    for (double v : a.c) s += std::abs(v);
    return s;
}

double weighted_l1_norm(const CoeffSeq& a, const Weight& w) {
    double s = 0;
    for (int k = a.lo; k <= a.hi(); ++k) s += std::abs(a.at(k)) * w(k);
    return s;
}

double sup_norm_estimate(const CoeffSeq& a, int grid) {
    double m = 0;
    for (int j = 0; j < grid; ++j)
        m = std::max(m, std::abs(eval_seq(a, static_cast<double>(j) / grid)));
    return m;
}

std::complex<double> eval_seq(const CoeffSeq& a, double theta) {
    std::complex<double> s = 0;
    for (int k = a.lo; k <= a.hi(); ++k) s += a.at(k) * std::polar(1.0, kTwoPi * k * theta);
    return s;
}

std::complex<double> eval_seq_deriv(const CoeffSeq& a, double theta) {
    std::complex<double> s = 0;
    for (int k = a.lo; k <= a.hi(); ++k) {
        std::complex<double> factor(0.0, kTwoPi * k);
        s += a.at(k) * factor * std::polar(1.0, kTwoPi * k * theta);
    }
    return s;
}

double sin_fourier_coeff(int k) {
    if (k == 0) return 2.0 / kPi;
    double kk = static_cast<double>(k);
    return -2.0 / (kPi * (4.0 * kk * kk - 1.0));
}

CoeffSeq sin_fourier_partial(int n) {
    if (n < 0) throw InputError("sin_fourier_partial: N >= 0 required");
    CoeffSeq out{-n, std::vector<double>(static_cast<std::size_t>(2 * n + 1), 0.0)};
    for (int k = -n; k <= n; ++k) out.c[static_cast<std::size_t>(k + n)] = sin_fourier_coeff(k);
    return out;
}

double sin_fourier_tail_l1(int n) { return 2.0 / (kPi * (2.0 * n + 1.0)); }

double sin_fourier_tail_l1_summed(int n, int terms) {
    double s = 0;
    long long last = static_cast<long long>(n) + terms;
    // sum smallest terms first
    for (long long k = last; k > n; --k) s += 1.0 / (4.0 * static_cast<double>(k) * k - 1.0);
    // exact telescoped remainder: sum_{k > K} 1/(4k^2-1) = 1/(2(2K+1))
    s += 0.5 / (2.0 * static_cast<double>(last) + 1.0);
    return 4.0 / kPi * s;
}

double sin_fourier_term_norm(int k, const Weight& w) {
    return 2.0 * std::abs(sin_fourier_coeff(k)) * w(k);
}

double square_residual(int n) {
    if (n < 1) throw InputError("square_residual: N >= 1 required");
    CoeffSeq sq = convolve(sin_fourier_partial(n), sin_fourier_partial(n));
    sq.c[static_cast<std::size_t>(0 - sq.lo)] -= 0.5;
    sq.c[static_cast<std::size_t>(1 - sq.lo)] += 0.25;
    sq.c[static_cast<std::size_t>(-1 - sq.lo)] += 0.25;
    return l1_norm(sq);
}

namespace {

// log of the weighted l1 norm, stable against overflow
double weighted_log_norm(const CoeffSeq& a, const Weight& w) {
    double lmax = -INFINITY;
    double lalpha = std::log(w.alpha);
    for (int k = a.lo; k <= a.hi(); ++k) {
        double v = a.at(k);
        if (v == 0) continue;
        lmax = std::max(lmax, std::log(std::abs(v)) + std::abs(k) * lalpha);
    }
    if (lmax == -INFINITY) return -INFINITY;
    double s = 0;
    for (int k = a.lo; k <= a.hi(); ++k) {
        double v = a.at(k);
        if (v == 0) continue;
        s += std::exp(std::log(std::abs(v)) + std::abs(k) * lalpha - lmax);
    }
    return lmax + std::log(s);
}

}  // namespace

SpectralRadiusEstimate spectral_radius_estimate(const CoeffSeq& x, const Weight& w, int k_max) {
    if (k_max < 1) throw InputError("spectral_radius_estimate: K >= 1 required");
    SpectralRadiusEstimate out;
    CoeffSeq power = CoeffSeq::delta(0);
    for (int k = 1; k <= k_max; ++k) {
        power = convolve(power, x).trimmed();
        double norm = weighted_l1_norm(power, w);
        double root;
        if (std::isfinite(norm) && norm > 0) {
            root = std::exp2(std::log2(norm) / k);
        } else {
            root = std::exp(weighted_log_norm(power, w) / k);
        }
        out.root_norms.push_back(root);
        out.running_min.push_back(out.running_min.empty()
                                      ? root
                                      : std::min(out.running_min.back(), root));
    }
    return out;
}

double c1_gap(int n, int grid) {
    if (n < 1) throw InputError("c1_gap: N >= 1 required");
    CoeffSeq g = sin_fourier_partial(2 * n);
    CoeffSeq s_n = sin_fourier_partial(n);
    for (int k = -n; k <= n; ++k)
        g.c[static_cast<std::size_t>(k - g.lo)] -= s_n.at(k);
    double m = 0;
    for (int j = 0; j < grid; ++j)
        m = std::max(m, std::abs(eval_seq_deriv(g, static_cast<double>(j) / grid)));
    return m;
}

}  // namespace ktorus
