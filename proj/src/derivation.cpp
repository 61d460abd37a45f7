#include "thetacalc/derivation.hpp"

#include <map>

namespace tc {

SuperDerivation SuperDerivation::zero(int n, int parity)
{
    SuperDerivation D;
    D.n = n;
    D.parity = parity;
    D.even_image = [](Gen) { return LambdaElement(); };
    D.odd_image = [](Gen) { return LambdaElement(); };
    D.coeff_image = [](int) { return LambdaElement(); };
    return D;
}

LambdaElement apply(const SuperDerivation& D, const ThetaElement& a)
{
    LambdaElement out;
    for (auto& [m, c] : a.terms) {
        // action on the coefficient
        for (int j = 1; j <= D.n; ++j) {
            CoeffRat dc = d_du(j, c);
            if (dc.is_zero()) continue;
            LambdaElement im = D.coeff_image(j);
            if (im.is_zero()) continue;
            ThetaElement rest;
            rest.add_term(m, std::move(dc));
            out += multiply(im, LambdaElement(std::move(rest)));
        }
        // even generator directions (evens are parity 0, no sign)
        for (auto& [g, e] : m.evens) {
            LambdaElement im = D.even_image(g);
            if (im.is_zero()) continue;
            ThetaMono rest = m;
            for (auto it = rest.evens.begin(); it != rest.evens.end(); ++it)
                if (it->first == g) {
                    if (--it->second == 0) rest.evens.erase(it);
                    break;
                }
            ThetaElement re;
            re.add_term(std::move(rest), c * CoeffRat((long)e));
            out += multiply(im, LambdaElement(std::move(re)));
        }
        // odd generator directions: sign (-1)^{parity * (number of odd
        // factors to the left)}
        for (size_t j = 0; j < m.odds.size(); ++j) {
            LambdaElement im = D.odd_image(m.odds[j]);
            if (im.is_zero()) continue;
            ThetaMono prefix, suffix;
            prefix.evens = m.evens;
            prefix.odds.assign(m.odds.begin(), m.odds.begin() + j);
            suffix.odds.assign(m.odds.begin() + j + 1, m.odds.end());
            CoeffRat cc = (D.parity && (j % 2)) ? -c : c;
            ThetaElement pre, suf;
            pre.add_term(std::move(prefix), cc);
            suf.add_term(std::move(suffix), CoeffRat(1));
            out += multiply(multiply(LambdaElement(std::move(pre)), im),
                            LambdaElement(std::move(suf)));
        }
    }
    return out;
}

LambdaElement apply(const SuperDerivation& D, const LambdaElement& a)
{
    LambdaElement out;
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k).is_zero()) continue;
        out += apply(D, a.coeff(k)).shifted(k);
    }
    return out;
}

SuperDerivation operator+(const SuperDerivation& A, const SuperDerivation& B)
{
    SuperDerivation D;
    D.n = A.n;
    D.parity = A.parity;
    D.even_image = [A, B](Gen g) { return A.even_image(g) + B.even_image(g); };
    D.odd_image = [A, B](Gen g) { return A.odd_image(g) + B.odd_image(g); };
    D.coeff_image = [A, B](int i) { return A.coeff_image(i) + B.coeff_image(i); };
    return D;
}

LambdaElement graded_commutator_apply(const SuperDerivation& A, const SuperDerivation& B,
                                      const LambdaElement& a)
{
    LambdaElement ab = apply(A, apply(B, a));
    LambdaElement ba = apply(B, apply(A, a));
    if (A.parity && B.parity) return ab + ba;
    return ab - ba;
}

namespace {

LambdaElement filter_deg_u(const LambdaElement& e, int want)
{
    LambdaElement out;
    for (int k = e.degree(); k >= 0; --k) {
        ThetaElement t;
        for (auto& [m, c] : e.coeff(k).terms)
            if (m.deg_u() == want) t.terms.emplace(m, c);
        out.set(k, std::move(t));
    }
    return out;
}

LambdaElement filter_deg_theta1(const LambdaElement& e, int want)
{
    LambdaElement out;
    for (int k = e.degree(); k >= 0; --k) {
        ThetaElement t;
        for (auto& [m, c] : e.coeff(k).terms)
            if (m.deg_theta1() == want) t.terms.emplace(m, c);
        out.set(k, std::move(t));
    }
    return out;
}

} // namespace

SuperDerivation degree_split(const SuperDerivation& D, int k)
{
    SuperDerivation S;
    S.n = D.n;
    S.parity = D.parity;
    // the d/du^{i,s} direction removes one u-generator
    S.even_image = [D, k](Gen g) { return filter_deg_u(D.even_image(g), k + 1); };
    S.odd_image = [D, k](Gen g) { return filter_deg_u(D.odd_image(g), k); };
    S.coeff_image = [D, k](int i) { return filter_deg_u(D.coeff_image(i), k); };
    return S;
}

SuperDerivation theta1_split(const SuperDerivation& D, int k)
{
    SuperDerivation S;
    S.n = D.n;
    S.parity = D.parity;
    S.even_image = [D, k](Gen g) { return filter_deg_theta1(D.even_image(g), k); };
    // the d/dth_i^1 direction removes one theta^1
    S.odd_image = [D, k](Gen g) {
        return filter_deg_theta1(D.odd_image(g), g.s == 1 ? k + 1 : k);
    };
    S.coeff_image = [D, k](int i) { return filter_deg_theta1(D.coeff_image(i), k); };
    return S;
}

SuperDerivation memoized(SuperDerivation D)
{
    struct Cache {
        std::map<Gen, LambdaElement> even, odd;
        std::map<int, LambdaElement> coeff;
    };
    auto cache = std::make_shared<Cache>();
    SuperDerivation M;
    M.n = D.n;
    M.parity = D.parity;
    M.even_image = [D, cache](Gen g) {
        auto it = cache->even.find(g);
        if (it != cache->even.end()) return it->second;
        LambdaElement v = D.even_image(g);
        cache->even.emplace(g, v);
        return v;
    };
    M.odd_image = [D, cache](Gen g) {
        auto it = cache->odd.find(g);
        if (it != cache->odd.end()) return it->second;
        LambdaElement v = D.odd_image(g);
        cache->odd.emplace(g, v);
        return v;
    };
    M.coeff_image = [D, cache](int i) {
        auto it = cache->coeff.find(i);
        if (it != cache->coeff.end()) return it->second;
        LambdaElement v = D.coeff_image(i);
        cache->coeff.emplace(i, v);
        return v;
    };
    return M;
}

} // namespace tc
