#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetacalc/coeff.hpp"

using namespace tc;

namespace {

CoeffRat U(int i) { return CoeffRat::u(i); }
CoeffRat F(int i) { return CoeffRat::f(i); }
CoeffRat FJ(int i, std::vector<int> J) { return CoeffRat::variable(VarPool::fjet(i, std::move(J))); }
CoeffRat Q(long n, long d = 1) { return CoeffRat(Rat(n, d)); }

// random small rational function in u1, u2, f1, f2
CoeffRat random_coeff(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, 3), expo(0, 2);
    CoeffRat num;
    for (int t = 0; t < 3; ++t) {
        CoeffRat term = Q(coef(rng));
        for (int rep = 0; rep < 2; ++rep) {
            switch (pick(rng)) {
                case 0: term *= U(1); break;
                case 1: term *= U(2); break;
                case 2: term *= F(1); break;
                default: break;
            }
        }
        num += term;
    }
    int d = expo(rng);
    CoeffRat den = d == 0 ? Q(1) : (d == 1 ? F(1) : U(1) - U(2));
    if (den.is_zero()) den = Q(1);
    return num / den;
}

} // namespace

TEST_CASE("field identities")
{
    CHECK((U(1) - U(2)) / (U(1) - U(2)) == Q(1));
    CHECK(F(1) * F(1).inverse() == Q(1));
    CHECK((U(1) * U(1) - U(2) * U(2)) / (U(1) - U(2)) == U(1) + U(2));
}

TEST_CASE("division by zero is an error")
{
    CHECK_THROWS_AS(U(1) / CoeffRat(), std::domain_error);
    CHECK_THROWS_AS(CoeffRat(Poly(1), Poly()), std::domain_error);
}

TEST_CASE("canonical forms are equal as values")
{
    CoeffRat a = (U(1) + U(2)) * (U(1) - U(2));
    CoeffRat b = U(1) * U(1) - U(2) * U(2);
    CHECK(a == b);
    // scale invariance of the normal form
    CoeffRat c = CoeffRat(Poly(Rat(2, 3))) * U(1) / (CoeffRat(Poly(Rat(2, 3))) * F(1));
    CHECK(c == U(1) / F(1));
}

TEST_CASE("d_du basics")
{
    // Leibniz on u1*f2
    CoeffRat lhs = d_du(1, U(1) * F(2));
    CHECK(lhs == F(2) + U(1) * FJ(2, {1}));
    // independent variable
    CHECK(d_du(2, U(1)).is_zero());
    // quotient rule on 1/f1
    CHECK(d_du(1, F(1).inverse()) == -FJ(1, {1}) / (F(1) * F(1)));
}

TEST_CASE("d_du Leibniz and mixed partials on random inputs")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        CoeffRat a = random_coeff(rng), b = random_coeff(rng);
        for (int j = 1; j <= 2; ++j) {
            CHECK(d_du(j, a * b) == d_du(j, a) * b + a * d_du(j, b));
        }
        CHECK(d_du(1, d_du(2, a)) == d_du(2, d_du(1, a)));
    }
}

TEST_CASE("substitute_f replaces jets by derivatives")
{
    // f1 := u1^2, then f1_d{1} -> 2 u1, f1_d{1,1} -> 2
    std::vector<CoeffRat> conc{U(1) * U(1)};
    CHECK(substitute_f(FJ(1, {1}), conc) == Q(2) * U(1));
    CHECK(substitute_f(FJ(1, {2}), conc) == Q(2));
    CHECK(substitute_f(F(1) * FJ(1, {1}), conc) == Q(2) * U(1) * U(1) * U(1));
}

TEST_CASE("polar_free_divide")
{
    LambdaCoeff p;
    SUBCASE("lambda^2 at i=1")
    {
        p.set(2, Q(1));
        LambdaCoeff q = polar_free_divide(p, 1);
        LambdaCoeff expect;
        expect.set(1, Q(1));
        expect.set(0, U(1));
        CHECK(q == expect);
    }
    SUBCASE("constant")
    {
        p.set(0, Q(7));
        CHECK(polar_free_divide(p, 1).is_zero());
    }
    SUBCASE("lambda - u2 at i=1")
    {
        p.set(1, Q(1));
        p.set(0, -U(2));
        LambdaCoeff q = polar_free_divide(p, 1);
        LambdaCoeff expect;
        expect.set(0, Q(1));
        CHECK(q == expect);
    }
}

TEST_CASE("polar_free_divide division property and derivative limit")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        LambdaCoeff p;
        for (int k = 0; k <= 3; ++k) p.set(k, random_coeff(rng));
        for (int i = 1; i <= 2; ++i) {
            LambdaCoeff q = polar_free_divide(p, i);
            // q * (lambda - u^i) == p(lambda) - p(u^i)
            LambdaCoeff lin;
            lin.set(1, Q(1));
            lin.set(0, -U(i));
            LambdaCoeff lhs = q * lin;
            LambdaCoeff rhs = p;
            rhs.set(0, p.coeff(0) - p.eval_at_u(i));
            CHECK(lhs == rhs);
            // q(u^i) = p'(u^i)
            CoeffRat deriv;
            CoeffRat ui = U(i);
            CoeffRat pw = Q(1);
            for (int k = 1; k <= p.degree(); ++k) {
                deriv += Q(k) * p.coeff(k) * pw;
                pw *= ui;
            }
            CHECK(q.eval_at_u(i) == deriv);
        }
    }
}

TEST_CASE("gcd exercise")
{
    // multivariate gcd with jets in denominators
    CoeffRat a = (F(1) * F(1) - F(2) * F(2)) / (F(1) - F(2));
    CHECK(a == F(1) + F(2));
    CoeffRat b = (U(1) * F(1) + U(1) * U(1)) / U(1);
    CHECK(b == F(1) + U(1));
    // gcd across three variables
    Poly x = Poly::variable(VarPool::u(1)), y = Poly::variable(VarPool::u(2)),
         z = Poly::variable(VarPool::f(1));
    Poly p1 = (x + y) * (x + z) * (x + z);
    Poly p2 = (x + z) * (y + z);
    Poly g = poly_gcd(p1, p2);
    CHECK(g == x + z);
}
