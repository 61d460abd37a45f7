#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetacalc/derivation.hpp"

using namespace tc;

namespace {

ThetaElement U(int i, int s) { return ThetaElement::u_gen(i, s); }
ThetaElement TH(int i, int s) { return ThetaElement::th_gen(i, s); }
ThetaElement C(CoeffRat c) { return ThetaElement(std::move(c)); }
CoeffRat Q(long a, long b = 1) { return CoeffRat(Rat(a, b)); }

ThetaElement random_element(std::mt19937_64& rng, int n, int nterms = 4)
{
    std::uniform_int_distribution<int> coef(-3, 3), idx(1, n), ord(0, 3), kind(0, 2),
        nfac(1, 3);
    ThetaElement out;
    for (int t = 0; t < nterms; ++t) {
        ThetaElement term = C(Q(coef(rng)));
        if (term.is_zero()) continue;
        int k = nfac(rng);
        for (int r = 0; r < k; ++r) {
            switch (kind(rng)) {
                case 0: term = multiply(term, U(idx(rng), 1 + ord(rng) % 3)); break;
                case 1: term = multiply(term, TH(idx(rng), ord(rng))); break;
                default:
                    term = multiply(term, C(CoeffRat::u(idx(rng)) * Q(coef(rng) ? coef(rng) : 1)));
                    break;
            }
        }
        out += term;
    }
    return out;
}

} // namespace

TEST_CASE("supercommutativity")
{
    CHECK(multiply(TH(1, 0), TH(1, 0)).is_zero());
    CHECK(multiply(TH(1, 0), TH(1, 1)) == -multiply(TH(1, 1), TH(1, 0)));
    CHECK(multiply(U(1, 1), TH(2, 0)) == multiply(TH(2, 0), U(1, 1)));
    // associativity spot check
    ThetaElement a = TH(1, 0) + U(1, 1), b = TH(2, 1), c = TH(1, 2) + C(Q(3));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("gradings")
{
    ThetaElement m = multiply(multiply(U(1, 1), U(1, 1)), multiply(TH(1, 0), TH(2, 3)));
    auto& mono = m.terms.begin()->first;
    CHECK(mono.degree() == 5);
    CHECK(mono.super() == 2);
    CHECK(mono.deg_u() == 2);
    CHECK(mono.deg_theta1() == 0);
}

TEST_CASE("d_x on generators and coefficients")
{
    CHECK(d_x(U(1, 1), 1) == U(1, 2));
    CHECK(d_x(multiply(U(1, 1), TH(1, 0)), 1) ==
          multiply(U(1, 2), TH(1, 0)) + multiply(U(1, 1), TH(1, 1)));
    // chain rule on a jet coefficient: d(f1) = sum_j u^{j,1} f1_{e_j}
    ThetaElement f1 = C(CoeffRat::f(1));
    ThetaElement expect;
    for (int j = 1; j <= 2; ++j) {
        std::vector<int> J(j, 0);
        J[j - 1] = 1;
        expect += ThetaElement::u_gen(j, 1, CoeffRat::variable(VarPool::fjet(1, J)));
    }
    CHECK(d_x(f1, 2) == expect);
    // d_x raises the standard degree by one and keeps the super degree
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        ThetaElement a = random_element(rng, 2);
        ThetaElement da = d_x(a, 2);
        for (auto& [m, c] : da.terms) {
            bool found = false;
            for (auto& [m0, c0] : a.terms)
                if (m.degree() == m0.degree() + 1 && m.super() == m0.super()) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("partial derivatives")
{
    // left derivative
    CHECK(partial_odd(1, 0, multiply(TH(1, 0), TH(1, 1))) == TH(1, 1));
    CHECK(partial_odd(1, 1, multiply(TH(1, 0), TH(1, 1))) == -TH(1, 0));
    CHECK(partial_even(1, 1, multiply(U(1, 1), U(1, 1))) == U(1, 1) * Q(2));
    // same-generator second odd derivative vanishes
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        ThetaElement a = random_element(rng, 2);
        CHECK(partial_odd(1, 1, partial_odd(1, 1, a)).is_zero());
    }
}

TEST_CASE("variational derivatives")
{
    // delta_u(u' u') = -2 u''
    CHECK(variational_u(1, multiply(U(1, 1), U(1, 1)), 1) == U(1, 2) * Q(-2));
    // annihilates total derivatives
    CHECK(variational_u(1, d_x(multiply(U(1, 1), TH(1, 0)), 1), 1).is_zero());
    // delta_theta(th0 th1) = 2 th1
    CHECK(variational_theta(1, multiply(TH(1, 0), TH(1, 1)), 1) == TH(1, 1) * Q(2));
}

TEST_CASE("variational derivatives kill d_x images (property)")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 15; ++t) {
        ThetaElement a = random_element(rng, 2);
        ThetaElement da = d_x(a, 2);
        for (int i = 1; i <= 2; ++i) {
            CHECK(variational_u(i, da, 2).is_zero());
            CHECK(variational_theta(i, da, 2).is_zero());
        }
    }
}

TEST_CASE("apply super-derivation")
{
    // derivation with image th1^1 in the u^1 direction, applied to (u^1)^2
    SuperDerivation D = SuperDerivation::zero(1, 1);
    D.coeff_image = [](int i) { return i == 1 ? LambdaElement(TH(1, 1)) : LambdaElement(); };
    ThetaElement usq = C(CoeffRat::u(1) * CoeffRat::u(1));
    CHECK(apply(D, usq) == LambdaElement(ThetaElement::th_gen(1, 1, Q(2) * CoeffRat::u(1))));
    // any derivation kills the unit
    CHECK(apply(D, C(Q(1))).is_zero());
    // graded Leibniz with odd parity: D(th a) = D(th) a - th D(a)
    SuperDerivation E = SuperDerivation::zero(1, 1);
    E.odd_image = [](Gen g) { return g.s == 0 ? LambdaElement(U(1, 1)) : LambdaElement(); };
    E.even_image = [](Gen g) { return g.s == 1 ? LambdaElement(TH(1, 2)) : LambdaElement(); };
    ThetaElement prod = multiply(TH(1, 0), U(1, 1));
    LambdaElement lhs = apply(E, prod);
    LambdaElement expect = LambdaElement(multiply(U(1, 1), U(1, 1))) -
                           LambdaElement(multiply(TH(1, 0), TH(1, 2)));
    CHECK(lhs == expect);
}

TEST_CASE("lambda element arithmetic")
{
    LambdaElement a(TH(1, 0));
    LambdaElement b(TH(2, 0), 1);
    LambdaElement s = a + b;
    CHECK(s.coeff(0) == TH(1, 0));
    CHECK(s.coeff(1) == TH(2, 0));
    CHECK(s.eval_at_u(2) == TH(1, 0) + TH(2, 0) * CoeffRat::u(2));
    // polar-free division property
    LambdaElement p;
    p.set(0, TH(1, 0));
    p.set(2, multiply(U(1, 1), TH(1, 1)));
    LambdaElement q = polar_free_divide(p, 1);
    LambdaElement lin;
    lin.set(1, C(Q(1)));
    lin.set(0, C(-CoeffRat::u(1)));
    LambdaElement back = multiply(q, lin);
    LambdaElement rhs = p;
    rhs.set(0, p.coeff(0) - p.eval_at_u(1));
    CHECK(back == rhs);
}

TEST_CASE("degree and theta1 splits of a derivation")
{
    SuperDerivation D = SuperDerivation::zero(1, 1);
    D.even_image = [](Gen g) {
        if (!(g == Gen{1, 1})) return LambdaElement();
        return LambdaElement(TH(1, 2) + multiply(U(1, 1), TH(1, 1)));
    };
    SuperDerivation Dm1 = degree_split(D, -1), D0 = degree_split(D, 0);
    CHECK(apply(Dm1, LambdaElement(U(1, 1))) == LambdaElement(TH(1, 2)));
    CHECK(apply(D0, LambdaElement(U(1, 1))) == LambdaElement(multiply(U(1, 1), TH(1, 1))));
    SuperDerivation T1 = theta1_split(D, 1);
    CHECK(apply(T1, LambdaElement(U(1, 1))) == LambdaElement(multiply(U(1, 1), TH(1, 1))));
}
