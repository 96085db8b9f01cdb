#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ktorus/rational.hpp"

namespace ktorus {

/// s_1^{e_1}...s_n^{e_n} * prod_{i in roots} r_i, with each r_i to power 0 or 1.
/// r_i^2 is never stored; multiplication reduces it to 2 - s_i - s_i^{-1}.
struct Monomial {
    std::vector<int> exponents;   // length n, negative powers allowed
    std::uint32_t roots = 0;      // bit i-1 set <=> factor r_i present

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.exponents <=> b.exponents; c != 0) return c;
        return a.roots <=> b.roots;
    }
};

/// Element of the commutative *-ring C[Z^n][r_1..r_n] / (r_i^2 - (2 - s_i - s_i^{-1})),
/// coefficients in Q(i).  Canonical form: term map with no zero coefficients,
/// every r_i multilinear.  Equality is structural equality of canonical forms.
class AlgebraElement {
public:
    using TermMap = std::map<Monomial, GaussRational>;

    explicit AlgebraElement(int vars = 1);

    static AlgebraElement zero(int vars) { return AlgebraElement(vars); }
    static AlgebraElement constant(int vars, GaussRational c);
    static AlgebraElement one(int vars) { return constant(vars, GaussRational(1)); }
    /// s_i^power (1-based i)
    static AlgebraElement s(int vars, int i, int power = 1);
    /// r_i, the self-adjoint square root of 2 - s_i - s_i^{-1}
    static AlgebraElement r(int vars, int i);

    int vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    AlgebraElement& operator+=(const AlgebraElement& b);
    AlgebraElement& operator-=(const AlgebraElement& b);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(const AlgebraElement& a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const GaussRational& c, const AlgebraElement& a);

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    void add_term(const Monomial& m, const GaussRational& c);

private:
    int n_;
    TermMap terms_;
};

/// The involution: conjugates coefficients, inverts s_i, fixes r_i.
AlgebraElement star(const AlgebraElement& e);

/// Point evaluation; coordinates in turns, s_i -> exp(2*pi*i*t_i),
/// r_i -> 2|sin(pi*t_i)| (the nonnegative square root of 2 - 2cos(2*pi*t_i)).
std::complex<double> eval(const AlgebraElement& e, std::span<const double> point);
std::complex<double> eval(const AlgebraElement& e, std::initializer_list<double> point);

/// Nonnegative integer power by repeated squaring.
AlgebraElement pow(const AlgebraElement& e, int k);

/// True iff e is a single root-free term c*s^e (a unit of the ring).
bool is_monomial_unit(const AlgebraElement& e);
/// Inverse of a monomial unit; throws InputError otherwise.
AlgebraElement invert_unit(const AlgebraElement& e);

/// Re-index into a ring with more variables: variable i of e becomes
/// var_map[i] (0-based) of the result.  Used to append the circle variable
/// of an assembled projection and to permute torus coordinates.
AlgebraElement embed(const AlgebraElement& e, int new_vars, std::span<const int> var_map);
AlgebraElement embed(const AlgebraElement& e, int new_vars, std::initializer_list<int> var_map);

/// Canonical text form in the expression grammar; parse(to_string(e)) == e.
std::string to_string(const AlgebraElement& e);

// Trigonometric shorthand: cos(2*pi*t_i) = (s_i + s_i^{-1})/2,
// sin(2*pi*t_i) = (s_i - s_i^{-1})/(2i).
AlgebraElement cos_elem(int vars, int i);
AlgebraElement sin_elem(int vars, int i);

}  // namespace ktorus
