#pragma once

#include <optional>

#include "ktorus/grid.hpp"

namespace ktorus {

struct WindingResult {
    int winding = 0;
    double min_abs = 0;        // smallest |value| seen (zero-crossing guard)
    double max_step = 0;       // largest phase increment, must stay below pi
    double integer_distance = 0;
};

/// Total principal-branch phase increment around a closed sampled curve,
/// divided by 2*pi.  Throws InputError on a (near) zero crossing and
/// ResolutionError when a phase step reaches pi.
WindingResult winding_number(const ScalarField& curve);

struct ChernResult {
    int chern = 0;
    double max_projection_residual = 0;  // ||P^2 - P||_inf over nodes
    double max_eigen_deviation = 0;      // distance of spectra from {0,1}
    double min_link_modulus = 0;
    double min_plaquette_margin = 0;     // pi - |F|, ambiguity guard
    double integer_distance = 0;
};

/// First Chern number of the rank-1 range bundle of a sampled projection
/// field on the 2-torus, by plaquette phases of normalized range
/// eigenvectors.  Orientation: axis order (first, second) with the
/// convention that the standard degree-1 projections score +1.
ChernResult chern_number(const MatrixField& P);

/// Pointwise samples of (a, b, alpha, beta, gamma) on a circle grid.
struct ScalarDataField {
    TorusGrid grid;
    std::vector<std::complex<double>> a, b, alpha, beta, gamma;

    explicit ScalarDataField(TorusGrid g);
};

ScalarDataField sample_scalar_data(const ScalarData& d, int nodes);

/// X0(y) + exp(2 pi i phi) X1(y) + exp(-2 pi i phi) X1(y)* on an
/// (nodes_y x nodes_phi) grid.
MatrixField assemble_field(const ScalarDataField& d, int nodes_phi);

/// Loring's circle data with a(y) = cos^2(pi y): b = sqrt(a - a^2) on the
/// first half period, beta on the second.
ScalarDataField loring_scalar_data(int nodes);

struct SupportF {
    std::vector<double> f;
    std::vector<std::uint8_t> in_support;
    double max_branch_mismatch = 0;  // includes any imaginary leakage
    std::size_t support_nodes = 0;
};

/// f = a - alpha b / beta on supp(beta), f = 1 - a + alpha conj(b) / gamma on
/// supp(gamma), 0 elsewhere; the two branches must agree on the overlap.
SupportF support_f(const ScalarDataField& d, double eps_supp = 1e-9,
                   double branch_tol = 1e-9);

struct BoundaryResult {
    int winding = 0;
    double max_main1_residual = 0;
    double max_selfadjoint_residual = 0;  // || X0 l - (X0 l)* ||_inf
    double max_branch_mismatch = 0;
    double max_u_jump = 0;
    double u_jump_tol = 0;
    bool support_entire = false;
    bool support_single_arc = false;
    bool l_constant_on_support = false;
};

/// The boundary-map class of the assembled projection, computed as the
/// winding of u = exp(2 pi i f); equals the determinant winding of
/// (1 - l) + u l, which detects the class on the circle.
BoundaryResult boundary_class(const ScalarDataField& d);

enum class Face { ThetaPhi, PhiPsi, PsiTheta };

/// Restriction of a 3-torus field to a coordinate 2-torus through 0:
/// ThetaPhi fixes psi = 0, PhiPsi fixes theta = 0, PsiTheta fixes phi = 0.
/// Output axes follow the face name's order.
MatrixField evaluation_map(const MatrixField& f3, Face face);

struct K3Report {
    // beta[i][j]: chern of face j of projection i; projections and faces are
    // both ordered (theta,phi), (phi,psi), (psi,theta)
    std::array<std::array<int, 3>, 3> beta{};
    std::array<int, 3> coordinate_windings{};
    int u_product_invariant = 0;
    std::optional<double> direct_integral;
    double max_projection_residual = 0;
};

/// K-theory generator report for the 3-torus: the 3x3 face/projection Chern
/// matrix, the circle windings, and the invariant of U_I via the product
/// decomposition; optionally the direct winding-form integral on an
/// n^3 grid.
K3Report k3_report(int face_nodes, int line_nodes, std::optional<int> direct_nodes = {});

/// (1/(8 pi^2)) * integral of tr(A_theta [A_phi, A_psi]) over the 3-torus,
/// A = U* dU by central differences; sign fixed to match the plaquette
/// orientation of chern_number.
double u3_invariant_direct(const MatrixField& u);

}  // namespace ktorus
