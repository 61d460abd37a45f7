#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "thetacalc/vars.hpp"

namespace tc {

using Rat = mpq_class;

// Monomial: sorted vector of (variable id, exponent), exponents > 0,
// sorted by the canonical variable order.
struct Mono {
    std::vector<std::pair<int, int>> factors;

    bool is_one() const { return factors.empty(); }
    int total_degree() const;
    int degree_in(int var) const;
    bool contains(int var) const { return degree_in(var) > 0; }

    static Mono one() { return {}; }
    static Mono var(int id, int exp = 1) { return Mono{{{id, exp}}}; }

    Mono operator*(const Mono& o) const;
    // exact division; caller guarantees divisibility
    Mono operator/(const Mono& o) const;
    bool divisible_by(const Mono& o) const;

    bool operator==(const Mono& o) const { return factors == o.factors; }
};

// graded lexicographic order, u-variables before jet symbols
bool mono_less(const Mono& a, const Mono& b);

// Sparse multivariate polynomial over Q; terms sorted descending in grlex.
class Poly {
public:
    std::vector<std::pair<Mono, Rat>> terms;

    Poly() = default;
    explicit Poly(const Rat& c)
    {
        if (c != 0) terms.push_back({Mono::one(), c});
    }
    explicit Poly(long c) : Poly(Rat(c)) {}
    static Poly variable(int id, int exp = 1)
    {
        Poly p;
        p.terms.push_back({Mono::var(id, exp), Rat(1)});
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const
    {
        return terms.empty() || (terms.size() == 1 && terms[0].first.is_one());
    }
    bool is_one() const
    {
        return terms.size() == 1 && terms[0].first.is_one() && terms[0].second == 1;
    }
    Rat constant_value() const;  // requires is_constant()
    int total_degree() const;    // max over terms; -1 for zero
    int degree_in(int var) const;
    bool contains(int var) const { return degree_in(var) > 0; }
    std::vector<int> variables() const;  // sorted by canonical order

    const Mono& leading_mono() const { return terms.front().first; }
    const Rat& leading_coeff() const { return terms.front().second; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return terms == o.terms; }

    Poly pow(int e) const;

    // plain polynomial derivative with respect to a single variable id
    Poly derivative(int var) const;
    // total derivative d/du^j: d u^i = delta_ij, d f^i_J = f^i_{J+e_j}
    Poly d_du(int j) const;

    // view as univariate in `var`: coefficient of var^k for k = 0..deg
    std::vector<Poly> coeffs_in(int var) const;
    static Poly from_coeffs(const std::vector<Poly>& cs, int var);

    // exact division (throws if not exact)
    Poly divexact(const Poly& b) const;

    // scale so coefficients are coprime integers with positive leading
    // coefficient; returns the extracted rational factor (poly = factor * result)
    Rat make_primitive();

    std::string str() const;
};

// gcd normalized to integer-primitive with positive leading coefficient;
// gcd(0,0) = 0, gcd of nonzero constants = 1
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace tc
