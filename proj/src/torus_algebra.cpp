#include "ktorus/torus_algebra.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ktorus {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace {

std::string part_string(const Rational& v, bool imag) {
    std::string s;
    if (imag) {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        s = to_string(v) + "*i";
    } else {
        s = to_string(v);
    }
    return s;
}

}  // namespace

std::string to_string(const GaussRational& c) {
    if (c.is_zero()) return "0";
    if (c.im == 0) return part_string(c.re, false);
    if (c.re == 0) return part_string(c.im, true);
    std::string s = "(" + part_string(c.re, false);
    s += (c.im > 0) ? "+" : "-";
    Rational a = abs(c.im);
    s += part_string(a, true) + ")";
    return s;
}

AlgebraElement::AlgebraElement(int vars) : n_(vars) {
    if (vars < 1 || vars > 30) throw InputError("AlgebraElement: variable count out of range");
}

AlgebraElement AlgebraElement::constant(int vars, GaussRational c) {
    AlgebraElement e(vars);
    e.add_term(Monomial{std::vector<int>(vars, 0), 0}, c);
    return e;
}

AlgebraElement AlgebraElement::s(int vars, int i, int power) {
    if (i < 1 || i > vars) throw InputError("s index out of range");
    AlgebraElement e(vars);
    Monomial m{std::vector<int>(vars, 0), 0};
    m.exponents[i - 1] = power;
    e.add_term(m, GaussRational(1));
    return e;
}

AlgebraElement AlgebraElement::r(int vars, int i) {
    if (i < 1 || i > vars) throw InputError("r index out of range");
    AlgebraElement e(vars);
    Monomial m{std::vector<int>(vars, 0), 0};
    m.roots = 1u << (i - 1);
    e.add_term(m, GaussRational(1));
    return e;
}

void AlgebraElement::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
    if (n_ != b.n_) throw InputError("AlgebraElement: variable-count mismatch");
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
    if (n_ != b.n_) throw InputError("AlgebraElement: variable-count mismatch");
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement out(a.n_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

AlgebraElement operator*(const GaussRational& c, const AlgebraElement& a) {
    AlgebraElement out(a.vars());
    if (c.is_zero()) return out;
    for (const auto& [m, v] : a.terms()) out.add_term(m, c * v);
    return out;
}

namespace {

// Accumulates c * s^exps * roots into out, rewriting r_i^2 -> 2 - s_i - s_i^{-1}
// for every i in squared (the set of doubled roots).
void reduce_into(AlgebraElement& out, std::vector<int> exps, std::uint32_t roots,
                 std::uint32_t squared, const GaussRational& c) {
    if (squared == 0) {
        out.add_term(Monomial{std::move(exps), roots}, c);
        return;
    }
    int i = std::countr_zero(squared);
    std::uint32_t rest = squared & (squared - 1);
    // factor 2
    reduce_into(out, exps, roots, rest, c * GaussRational(2));
    // factor -s_i
    auto up = exps;
    up[i] += 1;
    reduce_into(out, std::move(up), roots, rest, -c);
    // factor -s_i^{-1}
    exps[i] -= 1;
    reduce_into(out, std::move(exps), roots, rest, -c);
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.vars() != b.vars()) throw InputError("AlgebraElement: variable-count mismatch");
    AlgebraElement out(a.vars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<int> exps(static_cast<std::size_t>(a.vars()));
            for (int i = 0; i < a.vars(); ++i) exps[i] = ma.exponents[i] + mb.exponents[i];
            std::uint32_t squared = ma.roots & mb.roots;
            std::uint32_t roots = ma.roots ^ mb.roots;
            reduce_into(out, std::move(exps), roots, squared, ca * cb);
        }
    }
    return out;
}

AlgebraElement star(const AlgebraElement& e) {
    AlgebraElement out(e.vars());
    for (const auto& [m, c] : e.terms()) {
        Monomial ms = m;
        for (int& p : ms.exponents) p = -p;
        out.add_term(ms, c.conj());
    }
    return out;
}

std::complex<double> eval(const AlgebraElement& e, std::span<const double> point) {
    if (std::ssize(point) != e.vars()) throw InputError("eval: point dimension mismatch");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : e.terms()) {
        double phase = 0.0;
        for (int i = 0; i < e.vars(); ++i) phase += m.exponents[i] * point[i];
        double rfac = 1.0;
        for (std::uint32_t bits = m.roots; bits != 0; bits &= bits - 1) {
            int i = std::countr_zero(bits);
            rfac *= 2.0 * std::abs(std::sin(std::numbers::pi * point[i]));
        }
        sum += c.to_complex() * std::polar(rfac, two_pi * phase);
    }
    return sum;
}

std::complex<double> eval(const AlgebraElement& e, std::initializer_list<double> point) {
    return eval(e, std::span<const double>(point.begin(), point.size()));
}

AlgebraElement pow(const AlgebraElement& e, int k) {
    if (k < 0) throw InputError("pow: negative exponent needs a monomial unit");
    AlgebraElement acc = AlgebraElement::one(e.vars());
    AlgebraElement base = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool is_monomial_unit(const AlgebraElement& e) {
    return e.term_count() == 1 && e.terms().begin()->first.roots == 0;
}

AlgebraElement invert_unit(const AlgebraElement& e) {
    if (!is_monomial_unit(e))
        throw InputError("negative power of a non-invertible element (only c*s^k terms are units)");
    const auto& [m, c] = *e.terms().begin();
    Monomial mi = m;
    for (int& p : mi.exponents) p = -p;
    AlgebraElement out(e.vars());
    out.add_term(mi, GaussRational(1) / c);
    return out;
}

AlgebraElement embed(const AlgebraElement& e, int new_vars, std::span<const int> var_map) {
    if (std::ssize(var_map) != e.vars()) throw InputError("embed: map size mismatch");
    AlgebraElement out(new_vars);
    for (const auto& [m, c] : e.terms()) {
        Monomial mm{std::vector<int>(static_cast<std::size_t>(new_vars), 0), 0};
        for (int i = 0; i < e.vars(); ++i) {
            int j = var_map[i];
            if (j < 0 || j >= new_vars) throw InputError("embed: target index out of range");
            mm.exponents[j] = m.exponents[i];
            if (m.roots & (1u << i)) mm.roots |= 1u << j;
        }
        out.add_term(mm, c);
    }
    return out;
}

AlgebraElement embed(const AlgebraElement& e, int new_vars, std::initializer_list<int> var_map) {
    return embed(e, new_vars, std::span<const int>(var_map.begin(), var_map.size()));
}

std::string to_string(const AlgebraElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        GaussRational coeff = c;
        if (!first) {
            // pull the sign out for purely real or purely imaginary coefficients
            bool neg = (coeff.im == 0 && coeff.re < 0) || (coeff.re == 0 && coeff.im < 0);
            out += neg ? " - " : " + ";
            if (neg) coeff = -coeff;
        }
        std::string mono;
        for (int i = 0; i < e.vars(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "s" + std::to_string(i + 1);
            if (m.exponents[i] != 1) mono += "^" + std::to_string(m.exponents[i]);
        }
        for (std::uint32_t bits = m.roots; bits != 0; bits &= bits - 1) {
            if (!mono.empty()) mono += "*";
            mono += "r" + std::to_string(std::countr_zero(bits) + 1);
        }
        if (mono.empty()) {
            out += to_string(coeff);
        } else if (coeff == GaussRational(1)) {
            out += mono;
        } else if (coeff == GaussRational(-1)) {
            out += "-" + mono;
        } else {
            out += to_string(coeff) + "*" + mono;
        }
        first = false;
    }
    return out;
}

AlgebraElement cos_elem(int vars, int i) {
    GaussRational half(Rational(1, 2));
    return half * (AlgebraElement::s(vars, i, 1) + AlgebraElement::s(vars, i, -1));
}

AlgebraElement sin_elem(int vars, int i) {
    GaussRational minus_half_i(Rational(0), Rational(-1, 2));
    return minus_half_i * (AlgebraElement::s(vars, i, 1) - AlgebraElement::s(vars, i, -1));
}

}  // namespace ktorus
