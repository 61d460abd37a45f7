#pragma once

#include <string>
#include <vector>

#include "thetacalc/poly.hpp"

namespace tc {

// Exact rational function over Q in the u-coordinates and f-jet symbols.
// Canonical form: gcd(num, den) = 1, den integer-primitive with positive
// leading coefficient in the graded-lex order.
class CoeffRat {
public:
    Poly num, den;

    CoeffRat() : num(), den(1) {}
    explicit CoeffRat(const Rat& c) : num(c), den(1) {}
    explicit CoeffRat(long c) : num(c), den(1) {}
    explicit CoeffRat(Poly p) : num(std::move(p)), den(1) {}
    CoeffRat(Poly n, Poly d);  // normalizes

    static CoeffRat variable(int id) { return CoeffRat(Poly::variable(id)); }
    static CoeffRat u(int i) { return variable(VarPool::u(i)); }
    static CoeffRat f(int i) { return variable(VarPool::f(i)); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool is_polynomial() const { return den.is_one(); }
    bool is_rational_constant() const { return num.is_constant() && den.is_constant(); }
    Rat rational_value() const { return num.constant_value() / den.constant_value(); }

    CoeffRat operator-() const;
    CoeffRat operator+(const CoeffRat& o) const;
    CoeffRat operator-(const CoeffRat& o) const;
    CoeffRat operator*(const CoeffRat& o) const;
    CoeffRat operator/(const CoeffRat& o) const;  // throws on division by zero
    CoeffRat& operator+=(const CoeffRat& o) { return *this = *this + o; }
    CoeffRat& operator-=(const CoeffRat& o) { return *this = *this - o; }
    CoeffRat& operator*=(const CoeffRat& o) { return *this = *this * o; }
    CoeffRat& operator/=(const CoeffRat& o) { return *this = *this / o; }
    bool operator==(const CoeffRat& o) const { return num == o.num && den == o.den; }
    bool operator<(const CoeffRat& o) const;  // arbitrary total order for containers

    CoeffRat inverse() const;
    std::string str() const;

private:
    void normalize();
};

// total derivative d/du^j acting on the coefficient field (quotient rule;
// jet symbols chain through f^i_J -> f^i_{J+e_j})
CoeffRat d_du(int j, const CoeffRat& a);

// multi-index derivative d^J/du^J
CoeffRat d_du_multi(const std::vector<int>& J, const CoeffRat& a);

// replace every jet symbol f^i_J by the J-th derivative of concrete[i-1];
// concrete must be free of jet symbols
CoeffRat substitute_f(const CoeffRat& a, const std::vector<CoeffRat>& concrete);

// Polynomial in lambda with CoeffRat coefficients, trailing zeros stripped.
class LambdaCoeff {
public:
    std::vector<CoeffRat> c;  // c[k] multiplies lambda^k

    LambdaCoeff() = default;
    explicit LambdaCoeff(CoeffRat c0) { set(0, std::move(c0)); }

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const CoeffRat& coeff(int k) const;
    void set(int k, CoeffRat v);

    LambdaCoeff operator+(const LambdaCoeff& o) const;
    LambdaCoeff operator*(const LambdaCoeff& o) const;
    bool operator==(const LambdaCoeff& o) const { return c == o.c; }

    // evaluation at lambda = u^i
    CoeffRat eval_at_u(int i) const;
};

// (p(lambda) - p(u^i)) / (lambda - u^i), exact synthetic division
LambdaCoeff polar_free_divide(const LambdaCoeff& p, int i);

} // namespace tc
