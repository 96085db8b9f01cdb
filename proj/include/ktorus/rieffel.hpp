#pragma once

#include <array>
#include <string>
#include <vector>

#include "ktorus/torus_algebra.hpp"

namespace ktorus {

/// 2x2 matrix over AlgebraElement (all entries share the variable count).
struct Matrix2Alg {
    std::array<AlgebraElement, 4> e;  // row-major

    explicit Matrix2Alg(int vars = 1)
        : e{AlgebraElement(vars), AlgebraElement(vars), AlgebraElement(vars),
            AlgebraElement(vars)} {}
    Matrix2Alg(AlgebraElement a11, AlgebraElement a12, AlgebraElement a21, AlgebraElement a22);

    static Matrix2Alg identity(int vars);
    static Matrix2Alg zero(int vars) { return Matrix2Alg(vars); }

    int vars() const { return e[0].vars(); }
    const AlgebraElement& operator()(int row, int col) const { return e[2 * row + col]; }
    AlgebraElement& operator()(int row, int col) { return e[2 * row + col]; }

    friend Matrix2Alg operator+(const Matrix2Alg& a, const Matrix2Alg& b);
    friend Matrix2Alg operator-(const Matrix2Alg& a, const Matrix2Alg& b);
    friend Matrix2Alg operator*(const Matrix2Alg& a, const Matrix2Alg& b);
    friend Matrix2Alg operator*(const AlgebraElement& c, const Matrix2Alg& a);
    friend Matrix2Alg operator*(const GaussRational& c, const Matrix2Alg& a);
    friend bool operator==(const Matrix2Alg&, const Matrix2Alg&) = default;
};

/// Conjugate transpose (entrywise star, then transpose).
Matrix2Alg adjoint(const Matrix2Alg& m);
AlgebraElement trace(const Matrix2Alg& m);
AlgebraElement det(const Matrix2Alg& m);
Matrix2Alg embed(const Matrix2Alg& m, int new_vars, std::span<const int> var_map);

/// One exact identity check: residual is the canonical form of lhs - rhs.
struct CheckItem {
    std::string equation;
    bool exact = false;
    std::string residual;  // "0" when exact
};

struct Verdict {
    std::vector<CheckItem> items;
    bool pass() const {
        for (const auto& it : items)
            if (!it.exact) return false;
        return !items.empty();
    }
    void add(std::string equation, const AlgebraElement& residual);
    void add(std::string equation, const Matrix2Alg& residual);
    void add_flag(std::string equation, bool ok, std::string note = "");
};

/// Degree-1 Fourier pair: X0 self-adjoint, candidate for
/// X1^2 = 0, X1 = X0 X1 + X1 X0, X0 = X0^2 + X1*X1 + X1X1*.
struct RieffelPair {
    Matrix2Alg X0;
    Matrix2Alg X1;
};

/// Scalar form of a trace-1/traceless pair:
/// X0 = [[a, b], [conj b, 1-a]], X1 = [[alpha, beta], [gamma, -alpha]].
struct ScalarData {
    AlgebraElement a, b, alpha, beta, gamma;
};

RieffelPair pair_from_scalar(const ScalarData& d);
ScalarData scalar_from_pair(const RieffelPair& p);

/// M = M*, M^2 = M, and with rank1 also tr(M) = 1, det(M) = 0.
Verdict check_projection(const Matrix2Alg& m, bool rank1);

/// The three defining equations plus the nilpotent identity
/// X1*X1 + X1X1* = tr(X1*X1) 1.  Requires X0 self-adjoint (checked).
Verdict check_rieffel(const RieffelPair& p);

/// beta*gamma = -alpha^2; (2a-1)alpha + b*gamma + conj(b)*beta = 0;
/// a = a^2 + |b|^2 + 2|alpha|^2 + |beta|^2 + |gamma|^2; beta, gamma not both 0.
Verdict check_prop_main1(const ScalarData& d);

/// U U* = U* U = 1.
Verdict check_unitary(const Matrix2Alg& u);

/// P = v^{-1} X1* + X0 + v X1 with v the appended last circle variable.
Matrix2Alg assemble_P(const RieffelPair& p);

/// The trigonometric-plus-root pair on the theta circle (vars: s1, r1) and
/// its assembled two-torus projection P_I (vars: theta, phi).
struct IselyData {
    RieffelPair pair;
    Matrix2Alg P;  // 2 variables
};
IselyData build_isely();
ScalarData isely_scalar_data();

/// Exact trivial-type pair on the circle: a = (2 - s - s^{-1})/4,
/// beta = r(1 + s)/4, which satisfies a = a^2 + |beta|^2 exactly.
ScalarData trivial_scalar_data();

/// U_I = P_I psi + (1 - P_I) with psi the third circle variable; unitary.
Matrix2Alg build_U_I();

/// (U X0 U*, U X1 U*); throws InputError unless U U* = 1 exactly.
RieffelPair conjugate_pair(const RieffelPair& p, const Matrix2Alg& u);

}  // namespace ktorus
