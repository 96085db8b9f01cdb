#include "ktorus/rieffel.hpp"

namespace ktorus {

Matrix2Alg::Matrix2Alg(AlgebraElement a11, AlgebraElement a12, AlgebraElement a21,
                       AlgebraElement a22)
    : e{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
    if (e[1].vars() != e[0].vars() || e[2].vars() != e[0].vars() || e[3].vars() != e[0].vars())
        throw InputError("Matrix2Alg: entries disagree on variable count");
}

Matrix2Alg Matrix2Alg::identity(int vars) {
    Matrix2Alg m(vars);
    m(0, 0) = AlgebraElement::one(vars);
    m(1, 1) = AlgebraElement::one(vars);
    return m;
}

Matrix2Alg operator+(const Matrix2Alg& a, const Matrix2Alg& b) {
    Matrix2Alg out(a.vars());
    for (int k = 0; k < 4; ++k) out.e[k] = a.e[k] + b.e[k];
    return out;
}

Matrix2Alg operator-(const Matrix2Alg& a, const Matrix2Alg& b) {
    Matrix2Alg out(a.vars());
    for (int k = 0; k < 4; ++k) out.e[k] = a.e[k] - b.e[k];
    return out;
}

Matrix2Alg operator*(const Matrix2Alg& a, const Matrix2Alg& b) {
    Matrix2Alg out(a.vars());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

Matrix2Alg operator*(const AlgebraElement& c, const Matrix2Alg& a) {
    Matrix2Alg out(a.vars());
    for (int k = 0; k < 4; ++k) out.e[k] = c * a.e[k];
    return out;
}

Matrix2Alg operator*(const GaussRational& c, const Matrix2Alg& a) {
    Matrix2Alg out(a.vars());
    for (int k = 0; k < 4; ++k) out.e[k] = c * a.e[k];
    return out;
}

Matrix2Alg adjoint(const Matrix2Alg& m) {
    return Matrix2Alg(star(m(0, 0)), star(m(1, 0)), star(m(0, 1)), star(m(1, 1)));
}

AlgebraElement trace(const Matrix2Alg& m) { return m(0, 0) + m(1, 1); }

AlgebraElement det(const Matrix2Alg& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Matrix2Alg embed(const Matrix2Alg& m, int new_vars, std::span<const int> var_map) {
    Matrix2Alg out(new_vars);
    for (int k = 0; k < 4; ++k) out.e[k] = embed(m.e[k], new_vars, var_map);
    return out;
}

void Verdict::add(std::string equation, const AlgebraElement& residual) {
    items.push_back({std::move(equation), residual.is_zero(),
                     residual.is_zero() ? "0" : to_string(residual)});
}

void Verdict::add(std::string equation, const Matrix2Alg& residual) {
    bool zero = true;
    std::string text;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (residual(i, j).is_zero()) continue;
            zero = false;
            if (!text.empty()) text += "; ";
            text += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                    "): " + to_string(residual(i, j));
        }
    items.push_back({std::move(equation), zero, zero ? "0" : text});
}

void Verdict::add_flag(std::string equation, bool ok, std::string note) {
    items.push_back({std::move(equation), ok, ok ? "0" : std::move(note)});
}

RieffelPair pair_from_scalar(const ScalarData& d) {
    int n = d.a.vars();
    AlgebraElement one = AlgebraElement::one(n);
    Matrix2Alg x0(d.a, d.b, star(d.b), one - d.a);
    Matrix2Alg x1(d.alpha, d.beta, d.gamma, -d.alpha);
    return {x0, x1};
}

ScalarData scalar_from_pair(const RieffelPair& p) {
    return {p.X0(0, 0), p.X0(0, 1), p.X1(0, 0), p.X1(0, 1), p.X1(1, 0)};
}

Verdict check_projection(const Matrix2Alg& m, bool rank1) {
    Verdict v;
    int n = m.vars();
    v.add("P = P*", m - adjoint(m));
    v.add("P^2 = P", m * m - m);
    if (rank1) {
        v.add("tr(P) = 1", trace(m) - AlgebraElement::one(n));
        v.add("det(P) = 0", det(m));
    }
    return v;
}

Verdict check_rieffel(const RieffelPair& p) {
    Verdict v;
    int n = p.X0.vars();
    v.add("X0 = X0*", p.X0 - adjoint(p.X0));
    v.add("X1^2 = 0", p.X1 * p.X1);
    v.add("X1 = X0 X1 + X1 X0", p.X0 * p.X1 + p.X1 * p.X0 - p.X1);
    Matrix2Alg x1ax1 = adjoint(p.X1) * p.X1;
    Matrix2Alg x1x1a = p.X1 * adjoint(p.X1);
    v.add("X0 = X0^2 + X1*X1 + X1 X1*", p.X0 * p.X0 + x1ax1 + x1x1a - p.X0);
    v.add("X1*X1 + X1 X1* = tr(X1*X1) 1",
          x1ax1 + x1x1a - trace(x1ax1) * Matrix2Alg::identity(n));
    return v;
}

Verdict check_prop_main1(const ScalarData& d) {
    Verdict v;
    int n = d.a.vars();
    auto norm2 = [](const AlgebraElement& x) { return x * star(x); };
    v.add("a = a*", d.a - star(d.a));
    v.add("beta gamma = -alpha^2", d.beta * d.gamma + d.alpha * d.alpha);
    v.add("(2a-1) alpha + b gamma + conj(b) beta = 0",
          (GaussRational(2) * d.a - AlgebraElement::one(n)) * d.alpha + d.b * d.gamma +
              star(d.b) * d.beta);
    v.add("a = a^2 + |b|^2 + 2|alpha|^2 + |beta|^2 + |gamma|^2",
          d.a * d.a + norm2(d.b) + GaussRational(2) * norm2(d.alpha) + norm2(d.beta) +
              norm2(d.gamma) - d.a);
    v.add_flag("beta, gamma not both 0", !(d.beta.is_zero() && d.gamma.is_zero()),
               "X1 = 0 (trivial)");
    return v;
}

Verdict check_unitary(const Matrix2Alg& u) {
    Verdict v;
    Matrix2Alg id = Matrix2Alg::identity(u.vars());
    v.add("U U* = 1", u * adjoint(u) - id);
    v.add("U* U = 1", adjoint(u) * u - id);
    return v;
}

Matrix2Alg assemble_P(const RieffelPair& p) {
    int n = p.X0.vars();
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) map[i] = i;
    Matrix2Alg x0 = embed(p.X0, n + 1, map);
    Matrix2Alg x1 = embed(p.X1, n + 1, map);
    AlgebraElement v = AlgebraElement::s(n + 1, n + 1, 1);
    AlgebraElement vinv = AlgebraElement::s(n + 1, n + 1, -1);
    return vinv * adjoint(x1) + x0 + v * x1;
}

ScalarData isely_scalar_data() {
    int n = 1;
    AlgebraElement one = AlgebraElement::one(n);
    AlgebraElement c = cos_elem(n, 1);
    AlgebraElement s = sin_elem(n, 1);
    AlgebraElement r = AlgebraElement::r(n, 1);
    GaussRational q4(Rational(1, 4)), q8(Rational(1, 8));
    return {
        q4 * (GaussRational(3) * one + c),  // a
        q4 * s,                             // b
        q8 * (one - c),                     // alpha
        q8 * (r - s),                       // beta
        q8 * (-(r + s)),                    // gamma
    };
}

IselyData build_isely() {
    RieffelPair pair = pair_from_scalar(isely_scalar_data());
    return {pair, assemble_P(pair)};
}

ScalarData trivial_scalar_data() {
    int n = 1;
    AlgebraElement zero = AlgebraElement::zero(n);
    AlgebraElement one = AlgebraElement::one(n);
    AlgebraElement s = AlgebraElement::s(n, 1);
    AlgebraElement r = AlgebraElement::r(n, 1);
    GaussRational q4(Rational(1, 4));
    AlgebraElement a = q4 * (GaussRational(2) * one - s - invert_unit(s));
    AlgebraElement beta = q4 * (r * (one + s));
    return {a, zero, zero, beta, zero};
}

Matrix2Alg build_U_I() {
    Matrix2Alg p2 = build_isely().P;
    Matrix2Alg p = embed(p2, 3, std::array<int, 2>{0, 1});
    AlgebraElement psi = AlgebraElement::s(3, 3, 1);
    return psi * p + (Matrix2Alg::identity(3) - p);
}

RieffelPair conjugate_pair(const RieffelPair& p, const Matrix2Alg& u) {
    if (!check_unitary(u).pass()) throw InputError("conjugate_pair: U is not unitary");
    Matrix2Alg ua = adjoint(u);
    return {u * p.X0 * ua, u * p.X1 * ua};
}

}  // namespace ktorus
