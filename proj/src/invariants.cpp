#include "ktorus/invariants.hpp"

#include <cmath>
#include <numbers>

#include "ktorus/parallel.hpp"

namespace ktorus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int round_to_int(double x, double* distance) {
    double r = std::round(x);
    if (distance) *distance = std::abs(x - r);
    return static_cast<int>(r);
}

}  // namespace

WindingResult winding_number(const ScalarField& curve) {
    if (curve.grid.dims() != 1) throw InputError("winding_number: 1D field required");
    const auto& v = curve.values;
    const std::size_t n = v.size();
    WindingResult out;
    out.min_abs = std::abs(v[0]);
    for (const auto& z : v) out.min_abs = std::min(out.min_abs, std::abs(z));
    if (out.min_abs < 1e-12)
        throw InputError("winding_number: curve vanishes (|value| < 1e-12)");
    double total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double step = std::arg(v[(j + 1) % n] / v[j]);
        out.max_step = std::max(out.max_step, std::abs(step));
        total += step;
    }
    if (out.max_step >= kPi * (1.0 - 1e-9))
        throw ResolutionError("winding_number: phase step reached pi, refine the grid");
    out.winding = round_to_int(total / kTwoPi, &out.integer_distance);
    return out;
}

ChernResult chern_number(const MatrixField& P) {
    if (P.grid.dims() != 2) throw InputError("chern_number: 2D field required");
    const int nx = P.grid.sizes[0], ny = P.grid.sizes[1];
    ChernResult out;
    out.min_link_modulus = 1.0;
    out.min_plaquette_margin = kPi;

    // Per-node validation + range eigenvectors.
    std::vector<Eigen::Vector2cd> psi(P.values.size());
    std::vector<double> proj_res(P.values.size()), eig_dev(P.values.size());
    detail::parallel_chunks(P.values.size(), [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const Eigen::Matrix2cd& p = P.values[k];
            proj_res[k] = (p * p - p).cwiseAbs().maxCoeff();
            Eigen::Matrix2cd h = 0.5 * (p + p.adjoint());
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
            eig_dev[k] = std::max(std::abs(es.eigenvalues()[0]),
                                  std::abs(es.eigenvalues()[1] - 1.0));
            psi[k] = es.eigenvectors().col(1);
        }
    });
    for (std::size_t k = 0; k < P.values.size(); ++k) {
        out.max_projection_residual = std::max(out.max_projection_residual, proj_res[k]);
        out.max_eigen_deviation = std::max(out.max_eigen_deviation, eig_dev[k]);
    }
    if (out.max_eigen_deviation > 1e-8)
        throw InputError("chern_number: field is not a rank-1 projection to 1e-8");

    auto node = [&](int j, int k) -> const Eigen::Vector2cd& {
        return psi[static_cast<std::size_t>(P.grid.wrap(0, j)) * static_cast<std::size_t>(ny) +
                   static_cast<std::size_t>(P.grid.wrap(1, k))];
    };
    auto link = [&](int j, int k, int dj, int dk) {
        std::complex<double> u = node(j, k).adjoint() * node(j + dj, k + dk);
        out.min_link_modulus = std::min(out.min_link_modulus, std::abs(u));
        return u;
    };

    double total = 0;
    for (int j = 0; j < nx; ++j) {
        for (int k = 0; k < ny; ++k) {
            std::complex<double> loop = link(j, k, 1, 0) * link(j + 1, k, 0, 1) /
                                        (link(j, k + 1, 1, 0) * link(j, k, 0, 1));
            double f = std::arg(loop);
            out.min_plaquette_margin = std::min(out.min_plaquette_margin, kPi - std::abs(f));
            total += f;
        }
    }
    if (out.min_link_modulus < 1e-3)
        throw ResolutionError("chern_number: near-orthogonal neighbors, refine the grid");
    if (out.min_plaquette_margin < 1e-6)
        throw ResolutionError("chern_number: plaquette phase within 1e-6 of pi, refine the grid");
    out.chern = round_to_int(total / kTwoPi, &out.integer_distance);
    return out;
}

ScalarDataField::ScalarDataField(TorusGrid g) : grid(std::move(g)) {
    if (grid.dims() != 1) throw InputError("ScalarDataField: circle grid required");
    auto n = grid.node_count();
    a.resize(n);
    b.resize(n);
    alpha.resize(n);
    beta.resize(n);
    gamma.resize(n);
}

ScalarDataField sample_scalar_data(const ScalarData& d, int nodes) {
    if (d.a.vars() != 1) throw InputError("sample_scalar_data: one-variable data required");
    ScalarDataField out{TorusGrid({nodes})};
    for (int j = 0; j < nodes; ++j) {
        double t = out.grid.coord(0, j);
        std::array<double, 1> pt{t};
        out.a[static_cast<std::size_t>(j)] = eval(d.a, pt);
        out.b[static_cast<std::size_t>(j)] = eval(d.b, pt);
        out.alpha[static_cast<std::size_t>(j)] = eval(d.alpha, pt);
        out.beta[static_cast<std::size_t>(j)] = eval(d.beta, pt);
        out.gamma[static_cast<std::size_t>(j)] = eval(d.gamma, pt);
    }
    return out;
}

MatrixField assemble_field(const ScalarDataField& d, int nodes_phi) {
    const int ny = d.grid.sizes[0];
    MatrixField out{TorusGrid({ny, nodes_phi})};
    for (int j = 0; j < ny; ++j) {
        const auto J = static_cast<std::size_t>(j);
        Eigen::Matrix2cd x0, x1;
        x0 << d.a[J], d.b[J], std::conj(d.b[J]), 1.0 - d.a[J];
        x1 << d.alpha[J], d.beta[J], d.gamma[J], -d.alpha[J];
        Eigen::Matrix2cd x1a = x1.adjoint();
        for (int k = 0; k < nodes_phi; ++k) {
            std::complex<double> v = std::polar(1.0, kTwoPi * k / nodes_phi);
            out.values[J * static_cast<std::size_t>(nodes_phi) + static_cast<std::size_t>(k)] =
                x0 + v * x1 + std::conj(v) * x1a;
        }
    }
    return out;
}

ScalarDataField loring_scalar_data(int nodes) {
    ScalarDataField out{TorusGrid({nodes})};
    for (int j = 0; j < nodes; ++j) {
        double t = out.grid.coord(0, j);
        double c = std::cos(kPi * t);
        double a = c * c;
        double root = std::sqrt(std::max(0.0, a - a * a));
        const auto J = static_cast<std::size_t>(j);
        out.a[J] = a;
        out.b[J] = (t <= 0.5) ? root : 0.0;
        out.beta[J] = (t > 0.5) ? root : 0.0;
        out.alpha[J] = 0.0;
        out.gamma[J] = 0.0;
    }
    return out;
}

SupportF support_f(const ScalarDataField& d, double eps_supp, double branch_tol) {
    const std::size_t n = d.grid.node_count();
    SupportF out;
    out.f.assign(n, 0.0);
    out.in_support.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        bool sb = std::abs(d.beta[j]) > eps_supp;
        bool sg = std::abs(d.gamma[j]) > eps_supp;
        if (!sb && !sg) continue;
        out.in_support[j] = 1;
        ++out.support_nodes;
        std::complex<double> fb, fg;
        if (sb) fb = d.a[j] - d.alpha[j] * d.b[j] / d.beta[j];
        if (sg) fg = 1.0 - d.a[j] + d.alpha[j] * std::conj(d.b[j]) / d.gamma[j];
        std::complex<double> f = sb ? fb : fg;
        double mismatch = std::abs(f.imag());
        if (sb && sg) mismatch = std::max(mismatch, std::abs(fb - fg));
        out.max_branch_mismatch = std::max(out.max_branch_mismatch, mismatch);
        out.f[j] = f.real();
    }
    if (out.max_branch_mismatch > branch_tol)
        throw InputError("support_f: branch formulas disagree (not a Rieffel pair?)");
    return out;
}

BoundaryResult boundary_class(const ScalarDataField& d) {
    const std::size_t n = d.grid.node_count();
    BoundaryResult out;

    // scalar projection conditions, pointwise
    for (std::size_t j = 0; j < n; ++j) {
        auto a = d.a[j], b = d.b[j], al = d.alpha[j], be = d.beta[j], ga = d.gamma[j];
        double r = std::abs(a.imag());
        r = std::max(r, std::abs(be * ga + al * al));
        r = std::max(r, std::abs((2.0 * a - 1.0) * al + b * ga + std::conj(b) * be));
        double q = std::norm(b) + 2.0 * std::norm(al) + std::norm(be) + std::norm(ga);
        r = std::max(r, std::abs(a * a + q - a));
        out.max_main1_residual = std::max(out.max_main1_residual, r);
    }
    if (out.max_main1_residual > 1e-9)
        throw InputError("boundary_class: data fails the scalar projection conditions");

    SupportF sf = support_f(d);
    out.max_branch_mismatch = sf.max_branch_mismatch;

    // left support projection and self-adjointness of X0 l
    std::vector<Eigen::Matrix2cd> ell(n, Eigen::Matrix2cd::Zero());
    std::optional<Eigen::Matrix2cd> first_ell;
    out.l_constant_on_support = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!sf.in_support[j]) continue;
        Eigen::Vector2cd v;
        if (std::abs(d.beta[j]) > std::abs(d.gamma[j]))
            v << d.beta[j], -d.alpha[j];
        else
            v << d.alpha[j], d.gamma[j];
        v.normalize();
        ell[j] = v * v.adjoint();
        Eigen::Matrix2cd x0;
        x0 << d.a[j], d.b[j], std::conj(d.b[j]), 1.0 - d.a[j];
        Eigen::Matrix2cd m = x0 * ell[j];
        out.max_selfadjoint_residual = std::max(out.max_selfadjoint_residual,
                                                (m - m.adjoint()).cwiseAbs().maxCoeff());
        if (!first_ell)
            first_ell = ell[j];
        else if ((ell[j] - *first_ell).cwiseAbs().maxCoeff() > 1e-8)
            out.l_constant_on_support = false;
    }
    if (out.max_selfadjoint_residual > 1e-9)
        throw InputError("boundary_class: X0 l_X1 is not self-adjoint to 1e-9");

    // support topology on the circle
    out.support_entire = sf.support_nodes == n;
    std::size_t arcs = 0;
    for (std::size_t j = 0; j < n; ++j) {
        bool cur = sf.in_support[j] != 0;
        bool prev = sf.in_support[(j + n - 1) % n] != 0;
        if (cur && !prev) ++arcs;
    }
    out.support_single_arc = arcs == 1;

    // u = exp(2 pi i f) must be continuous across the support boundary
    ScalarField u{d.grid};
    for (std::size_t j = 0; j < n; ++j) u.values[j] = std::polar(1.0, kTwoPi * sf.f[j]);
    out.u_jump_tol = 64.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
        out.max_u_jump = std::max(out.max_u_jump, std::abs(u.values[(j + 1) % n] - u.values[j]));
    if (out.max_u_jump > out.u_jump_tol)
        throw InputError("boundary_class: exp(2 pi i f) is discontinuous on this grid");

    out.winding = winding_number(u).winding;
    return out;
}

MatrixField evaluation_map(const MatrixField& f3, Face face) {
    if (f3.grid.dims() != 3) throw InputError("evaluation_map: 3D field required");
    const auto& s = f3.grid.sizes;
    auto get = [&](int a, int b, int c) -> const Eigen::Matrix2cd& {
        std::array<int, 3> idx{a, b, c};
        return f3.values[f3.grid.flat(idx)];
    };
    auto make = [&](int n0, int n1, auto&& pick) {
        MatrixField out{TorusGrid({n0, n1})};
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n1; ++k)
                out.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(n1) +
                           static_cast<std::size_t>(k)] = pick(j, k);
        return out;
    };
    switch (face) {
        case Face::ThetaPhi:
            return make(s[0], s[1], [&](int j, int k) { return get(j, k, 0); });
        case Face::PhiPsi:
            return make(s[1], s[2], [&](int j, int k) { return get(0, j, k); });
        case Face::PsiTheta:
            return make(s[2], s[0], [&](int j, int k) { return get(k, 0, j); });
    }
    throw InputError("evaluation_map: unknown face");
}

double u3_invariant_direct(const MatrixField& u) {
    if (u.grid.dims() != 3) throw InputError("u3_invariant_direct: 3D field required");
    const auto& s = u.grid.sizes;
    auto get = [&](int a, int b, int c) -> const Eigen::Matrix2cd& {
        std::array<int, 3> idx{u.grid.wrap(0, a), u.grid.wrap(1, b), u.grid.wrap(2, c)};
        return u.values[u.grid.flat(idx)];
    };
    double sum = 0;
    for (int a = 0; a < s[0]; ++a) {
        for (int b = 0; b < s[1]; ++b) {
            for (int c = 0; c < s[2]; ++c) {
                const Eigen::Matrix2cd& here = get(a, b, c);
                Eigen::Matrix2cd ua = here.adjoint();
                Eigen::Matrix2cd a1 = ua * (get(a + 1, b, c) - get(a - 1, b, c)) * (s[0] / 2.0);
                Eigen::Matrix2cd a2 = ua * (get(a, b + 1, c) - get(a, b - 1, c)) * (s[1] / 2.0);
                Eigen::Matrix2cd a3 = ua * (get(a, b, c + 1) - get(a, b, c - 1)) * (s[2] / 2.0);
                sum += (a1 * (a2 * a3 - a3 * a2)).trace().real();
            }
        }
    }
    double mean = sum / static_cast<double>(u.grid.node_count());
    // orientation sign matches chern_number's plaquette convention
    return mean / (8.0 * kPi * kPi);
}

K3Report k3_report(int face_nodes, int line_nodes, std::optional<int> direct_nodes) {
    K3Report out;
    Matrix2Alg p2 = build_isely().P;
    const std::array<std::array<int, 2>, 3> placements{{{0, 1}, {1, 2}, {2, 0}}};
    const std::array<Face, 3> faces{Face::ThetaPhi, Face::PhiPsi, Face::PsiTheta};
    TorusGrid g3({face_nodes, face_nodes, face_nodes});
    for (int i = 0; i < 3; ++i) {
        Matrix2Alg p3 = embed(p2, 3, placements[static_cast<std::size_t>(i)]);
        MatrixField field = sample_matrix(g3, p3);
        for (int j = 0; j < 3; ++j) {
            MatrixField restricted = evaluation_map(field, faces[static_cast<std::size_t>(j)]);
            ChernResult c = chern_number(restricted);
            out.beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.chern;
            out.max_projection_residual =
                std::max(out.max_projection_residual, c.max_projection_residual);
        }
    }
    TorusGrid line({line_nodes});
    ScalarField coord{line};
    for (int j = 0; j < line_nodes; ++j)
        coord.values[static_cast<std::size_t>(j)] = std::polar(1.0, kTwoPi * line.coord(0, j));
    int w = winding_number(coord).winding;
    out.coordinate_windings = {w, w, w};
    out.u_product_invariant = out.beta[0][0] * w;
    if (direct_nodes) {
        TorusGrid gd({*direct_nodes, *direct_nodes, *direct_nodes});
        MatrixField uf = sample_matrix(gd, build_U_I());
        out.direct_integral = u3_invariant_direct(uf);
    }
    return out;
}

}  // namespace ktorus
