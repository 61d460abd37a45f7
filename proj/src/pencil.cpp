#include "thetacalc/pencil.hpp"

#include <stdexcept>

namespace tc {

Pencil Pencil::make_generic(int n)
{
    if (n < 1) throw std::domain_error("Pencil: n must be >= 1");
    Pencil p;
    p.n = n;
    p.generic = true;
    for (int i = 1; i <= n; ++i) p.f.push_back(CoeffRat::f(i));
    return p;
}

Pencil Pencil::make_concrete(std::vector<CoeffRat> f)
{
    if (f.empty()) throw std::domain_error("Pencil: n must be >= 1");
    for (auto& fi : f)
        if (fi.is_zero()) throw std::domain_error("Pencil: f^i must be nonzero");
    Pencil p;
    p.n = (int)f.size();
    p.f = std::move(f);
    p.generic = false;
    return p;
}

std::vector<CoeffRat> Pencil::f2() const
{
    std::vector<CoeffRat> g;
    for (int i = 1; i <= n; ++i) g.push_back(CoeffRat::u(i) * f[i - 1]);
    return g;
}

Christoffel christoffel(const std::vector<CoeffRat>& g, int n)
{
    for (auto& gi : g)
        if (gi.is_zero()) throw std::domain_error("christoffel: zero metric entry");
    CoeffRat half(Rat(1, 2));
    Christoffel G(n, std::vector<std::vector<CoeffRat>>(n, std::vector<CoeffRat>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                CoeffRat v;
                if (i == j) v += d_du(k, g[i - 1]);
                if (j == k) v += g[i - 1] / g[j - 1] * d_du(i, g[j - 1]);
                if (i == k) v -= g[j - 1] / g[i - 1] * d_du(j, g[i - 1]);
                G[i - 1][j - 1][k - 1] = half * v;
            }
    return G;
}

namespace {

HydroBivector build_bivector(const std::vector<CoeffRat>& g, int n)
{
    HydroBivector B;
    B.metric = g;
    B.gamma = christoffel(g, n);
    CoeffRat half(Rat(1, 2));
    ThetaElement rho;
    for (int i = 1; i <= n; ++i)
        rho += multiply(ThetaElement::th_gen(i, 0, half * g[i - 1]), ThetaElement::th_gen(i, 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                CoeffRat c = half * B.gamma[i - 1][j - 1][k - 1];
                if (c.is_zero()) continue;
                rho += multiply(ThetaElement::u_gen(k, 1, c),
                                multiply(ThetaElement::th_gen(i, 0), ThetaElement::th_gen(j, 0)));
            }
    B.density = std::move(rho);
    return B;
}

} // namespace

HydroBivector build_P1(const Pencil& p)
{
    return build_bivector(p.f, p.n);
}

HydroBivector build_P2(const Pencil& p)
{
    return build_bivector(p.f2(), p.n);
}

SuperDerivation build_D(const std::vector<CoeffRat>& f, int n)
{
    for (auto& fi : f)
        if (fi.is_zero()) throw std::domain_error("build_D: zero f entry");
    CoeffRat half(Rat(1, 2));

    // base image of the d/du^i direction (all of the closed form's groups
    // that feed d/du^{i,s}); j (and k) are summed, i is the direction index
    std::vector<ThetaElement> ebase(n), obase(n);
    for (int i = 1; i <= n; ++i) {
        ThetaElement E = ThetaElement::th_gen(i, 1, f[i - 1]);
        for (int j = 1; j <= n; ++j) {
            CoeffRat dj_fi = d_du(j, f[i - 1]);
            CoeffRat di_fj = d_du(i, f[j - 1]);
            E += multiply(ThetaElement::u_gen(j, 1, half * dj_fi), ThetaElement::th_gen(i, 0));
            E += multiply(ThetaElement::u_gen(j, 1, half * f[i - 1] * di_fj / f[j - 1]),
                          ThetaElement::th_gen(j, 0));
            E -= multiply(ThetaElement::u_gen(i, 1, half * f[j - 1] * dj_fi / f[i - 1]),
                          ThetaElement::th_gen(j, 0));
        }
        ebase[i - 1] = E;

        // base image of the d/dth_i^0 direction; j (and k) are summed
        ThetaElement O;
        for (int j = 1; j <= n; ++j) {
            CoeffRat dj_fi = d_du(j, f[i - 1]);
            CoeffRat di_fj = d_du(i, f[j - 1]);
            CoeffRat ratio = f[j - 1] * dj_fi / f[i - 1];
            O += multiply(ThetaElement::th_gen(j, 0, half * di_fj), ThetaElement::th_gen(j, 1));
            O += multiply(ThetaElement::th_gen(i, 0, half * ratio), ThetaElement::th_gen(j, 1));
            O -= multiply(ThetaElement::th_gen(j, 0, half * ratio), ThetaElement::th_gen(i, 1));
        }
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                CoeffRat a = d_du(i, f[k - 1] * d_du(k, f[j - 1]) / f[j - 1]);
                CoeffRat b = d_du(j, f[k - 1] * d_du(k, f[i - 1]) / f[i - 1]);
                if (!a.is_zero())
                    O += multiply(ThetaElement::u_gen(j, 1, half * a),
                                  multiply(ThetaElement::th_gen(k, 0), ThetaElement::th_gen(j, 0)));
                if (!b.is_zero())
                    O -= multiply(ThetaElement::u_gen(j, 1, half * b),
                                  multiply(ThetaElement::th_gen(k, 0), ThetaElement::th_gen(i, 0)));
            }
        obase[i - 1] = O;
    }

    struct Cache {
        int n;
        std::vector<std::vector<ThetaElement>> epow, opow;  // [i-1][s] = d^s(base)
        const ThetaElement& even(int i, int s)
        {
            auto& v = epow[i - 1];
            while ((int)v.size() <= s) v.push_back(d_x(v.back(), n));
            return v[s];
        }
        const ThetaElement& odd(int i, int s)
        {
            auto& v = opow[i - 1];
            while ((int)v.size() <= s) v.push_back(d_x(v.back(), n));
            return v[s];
        }
    };
    auto cache = std::make_shared<Cache>();
    cache->n = n;
    for (int i = 0; i < n; ++i) {
        cache->epow.push_back({ebase[i]});
        cache->opow.push_back({obase[i]});
    }

    SuperDerivation D;
    D.n = n;
    D.parity = 1;
    D.even_image = [cache](Gen g) { return LambdaElement(cache->even(g.i, g.s)); };
    D.odd_image = [cache](Gen g) { return LambdaElement(cache->odd(g.i, g.s)); };
    D.coeff_image = [cache](int i) { return LambdaElement(cache->even(i, 0)); };
    return D;
}

SuperDerivation build_D1(const Pencil& p)
{
    return build_D(p.f, p.n);
}

SuperDerivation build_D2(const Pencil& p)
{
    return build_D(p.f2(), p.n);
}

SuperDerivation build_D_lambda(const Pencil& p)
{
    SuperDerivation D1 = build_D1(p), D2 = build_D2(p);
    SuperDerivation D;
    D.n = p.n;
    D.parity = 1;
    auto combine = [](const LambdaElement& a2, const LambdaElement& a1) {
        return a2 - a1.shifted(1);
    };
    D.even_image = [D1, D2, combine](Gen g) {
        return combine(D2.even_image(g), D1.even_image(g));
    };
    D.odd_image = [D1, D2, combine](Gen g) {
        return combine(D2.odd_image(g), D1.odd_image(g));
    };
    D.coeff_image = [D1, D2, combine](int i) {
        return combine(D2.coeff_image(i), D1.coeff_image(i));
    };
    return D;
}

SuperDerivation derivation_from_density(const LambdaElement& P, int n)
{
    struct Cache {
        int n;
        std::vector<std::vector<LambdaElement>> epow, opow;
        const LambdaElement& even(int i, int s)
        {
            auto& v = epow[i - 1];
            while ((int)v.size() <= s) v.push_back(d_x(v.back(), n));
            return v[s];
        }
        const LambdaElement& odd(int i, int s)
        {
            auto& v = opow[i - 1];
            while ((int)v.size() <= s) v.push_back(d_x(v.back(), n));
            return v[s];
        }
    };
    auto cache = std::make_shared<Cache>();
    cache->n = n;
    for (int i = 1; i <= n; ++i) {
        LambdaElement vtheta, vu;
        for (int k = P.degree(); k >= 0; --k) {
            vtheta.set(k, variational_theta(i, P.coeff(k), n));
            vu.set(k, variational_u(i, P.coeff(k), n));
        }
        cache->epow.push_back({vtheta});
        cache->opow.push_back({vu});
    }

    SuperDerivation D;
    D.n = n;
    D.parity = 1;
    D.even_image = [cache](Gen g) { return cache->even(g.i, g.s); };
    D.odd_image = [cache](Gen g) { return cache->odd(g.i, g.s); };
    D.coeff_image = [cache](int i) { return cache->even(i, 0); };
    return D;
}

} // namespace tc
