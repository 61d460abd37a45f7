#include "thetacalc/theta.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tc {

int ThetaMono::degree() const
{
    int d = 0;
    for (auto& [g, e] : evens) d += g.s * e;
    for (auto& g : odds) d += g.s;
    return d;
}

int ThetaMono::deg_u() const
{
    int d = 0;
    for (auto& [g, e] : evens) d += e;
    return d;
}

int ThetaMono::deg_theta1() const
{
    int d = 0;
    for (auto& g : odds) d += (g.s == 1);
    return d;
}

int ThetaMono::even_exp(Gen g) const
{
    for (auto& [h, e] : evens)
        if (h == g) return e;
    return 0;
}

bool ThetaMono::has_odd(Gen g) const
{
    return std::find(odds.begin(), odds.end(), g) != odds.end();
}

namespace {

// descending list of (order, kind, index); kind: even = 1, odd = 0
std::vector<std::array<int, 3>> order_profile(const ThetaMono& m)
{
    std::vector<std::array<int, 3>> v;
    for (auto& [g, e] : m.evens)
        for (int k = 0; k < e; ++k) v.push_back({g.s, 1, g.i});
    for (auto& g : m.odds) v.push_back({g.s, 0, g.i});
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

} // namespace

bool theta_mono_less(const ThetaMono& a, const ThetaMono& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto pa = order_profile(a), pb = order_profile(b);
    if (pa != pb) return pa < pb;
    return false;
}

int sort_odds(std::vector<Gen>& v)
{
    int sign = 1;
    // insertion sort counting transpositions
    for (size_t k = 1; k < v.size(); ++k) {
        Gen g = v[k];
        size_t j = k;
        while (j > 0 && g < v[j - 1]) {
            v[j] = v[j - 1];
            --j;
            sign = -sign;
        }
        v[j] = g;
    }
    for (size_t k = 1; k < v.size(); ++k)
        if (v[k] == v[k - 1]) return 0;
    return sign;
}

ThetaElement ThetaElement::u_gen(int i, int s, CoeffRat c)
{
    if (s < 1) throw std::logic_error("u_gen: s must be >= 1");
    ThetaElement r;
    ThetaMono m;
    m.evens.push_back({Gen{i, s}, 1});
    r.add_term(std::move(m), std::move(c));
    return r;
}

ThetaElement ThetaElement::th_gen(int i, int s, CoeffRat c)
{
    ThetaElement r;
    ThetaMono m;
    m.odds.push_back(Gen{i, s});
    r.add_term(std::move(m), std::move(c));
    return r;
}

void ThetaElement::add_term(ThetaMono m, CoeffRat c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CoeffRat ThetaElement::coeff_of(const ThetaMono& m) const
{
    auto it = terms.find(m);
    return it == terms.end() ? CoeffRat() : it->second;
}

ThetaElement ThetaElement::operator-() const
{
    ThetaElement r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

ThetaElement& ThetaElement::operator+=(const ThetaElement& o)
{
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

ThetaElement ThetaElement::operator+(const ThetaElement& o) const
{
    ThetaElement r = *this;
    r += o;
    return r;
}

ThetaElement ThetaElement::operator-(const ThetaElement& o) const
{
    ThetaElement r = *this;
    r += -o;
    return r;
}

ThetaElement ThetaElement::operator*(const CoeffRat& c) const
{
    ThetaElement r;
    if (c.is_zero()) return r;
    for (auto& [m, cc] : terms) r.terms.emplace(m, cc * c);
    return r;
}

bool ThetaElement::homogeneous(int* p, int* d) const
{
    if (terms.empty()) {
        if (p) *p = 0;
        if (d) *d = 0;
        return true;
    }
    int p0 = terms.begin()->first.super(), d0 = terms.begin()->first.degree();
    for (auto& [m, c] : terms)
        if (m.super() != p0 || m.degree() != d0) return false;
    if (p) *p = p0;
    if (d) *d = d0;
    return true;
}

ThetaElement ThetaElement::part_of_bidegree(int p, int d) const
{
    ThetaElement r;
    for (auto& [m, c] : terms)
        if (m.super() == p && m.degree() == d) r.terms.emplace(m, c);
    return r;
}

int ThetaElement::max_degree() const
{
    int d = -1;
    for (auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
}

ThetaElement multiply(const ThetaElement& a, const ThetaElement& b)
{
    ThetaElement r;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            // odd parts: concatenate then sort with Koszul sign
            std::vector<Gen> odds = ma.odds;
            odds.insert(odds.end(), mb.odds.begin(), mb.odds.end());
            int sign = sort_odds(odds);
            if (sign == 0) continue;
            ThetaMono m;
            m.odds = std::move(odds);
            // even parts: merge multiplicities
            size_t i = 0, j = 0;
            while (i < ma.evens.size() && j < mb.evens.size()) {
                if (ma.evens[i].first == mb.evens[j].first) {
                    m.evens.push_back({ma.evens[i].first, ma.evens[i].second + mb.evens[j].second});
                    ++i, ++j;
                } else if (ma.evens[i].first < mb.evens[j].first) {
                    m.evens.push_back(ma.evens[i++]);
                } else {
                    m.evens.push_back(mb.evens[j++]);
                }
            }
            while (i < ma.evens.size()) m.evens.push_back(ma.evens[i++]);
            while (j < mb.evens.size()) m.evens.push_back(mb.evens[j++]);
            CoeffRat c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(std::move(m), std::move(c));
        }
    return r;
}

namespace {

ThetaMono without_even_power(const ThetaMono& m, Gen g)
{
    ThetaMono r = m;
    for (auto it = r.evens.begin(); it != r.evens.end(); ++it)
        if (it->first == g) {
            if (--it->second == 0) r.evens.erase(it);
            return r;
        }
    throw std::logic_error("without_even_power: generator absent");
}

} // namespace

ThetaElement d_x(const ThetaElement& a, int n)
{
    ThetaElement r;
    for (auto& [m, c] : a.terms) {
        // coefficient part: sum_j u^{j,1} d/du^j
        for (int j = 1; j <= n; ++j) {
            CoeffRat dc = d_du(j, c);
            if (dc.is_zero()) continue;
            ThetaElement t;
            t.add_term(m, std::move(dc));
            r += multiply(ThetaElement::u_gen(j, 1), t);
        }
        // even generators
        for (auto& [g, e] : m.evens) {
            ThetaMono rest = without_even_power(m, g);
            ThetaElement t;
            t.add_term(rest, c * CoeffRat((long)e));
            r += multiply(ThetaElement::u_gen(g.i, g.s + 1), t);
        }
        // odd generators: even derivation, raise in place and resort
        for (size_t j = 0; j < m.odds.size(); ++j) {
            ThetaMono m2 = m;
            m2.odds[j] = Gen{m.odds[j].i, m.odds[j].s + 1};
            int sign = sort_odds(m2.odds);
            if (sign == 0) continue;
            r.add_term(std::move(m2), sign < 0 ? -c : c);
        }
    }
    return r;
}

ThetaElement partial_even(int i, int s, const ThetaElement& a)
{
    if (s < 1) throw std::logic_error("partial_even: s must be >= 1");
    Gen g{i, s};
    ThetaElement r;
    for (auto& [m, c] : a.terms) {
        int e = m.even_exp(g);
        if (e == 0) continue;
        r.add_term(without_even_power(m, g), c * CoeffRat((long)e));
    }
    return r;
}

ThetaElement partial_odd(int i, int s, const ThetaElement& a)
{
    Gen g{i, s};
    ThetaElement r;
    for (auto& [m, c] : a.terms) {
        auto it = std::find(m.odds.begin(), m.odds.end(), g);
        if (it == m.odds.end()) continue;
        int pos = (int)(it - m.odds.begin());
        ThetaMono m2 = m;
        m2.odds.erase(m2.odds.begin() + pos);
        r.add_term(std::move(m2), (pos % 2) ? -c : c);
    }
    return r;
}

ThetaElement partial_u0(int i, const ThetaElement& a)
{
    ThetaElement r;
    for (auto& [m, c] : a.terms) r.add_term(m, d_du(i, c));
    return r;
}

ThetaElement variational_u(int i, const ThetaElement& a, int n)
{
    ThetaElement acc = partial_u0(i, a);
    int dmax = a.max_degree();
    for (int s = 1; s <= dmax; ++s) {
        ThetaElement t = partial_even(i, s, a);
        if (t.is_zero()) continue;
        for (int k = 0; k < s; ++k) t = d_x(t, n);
        if (s % 2) t = -t;
        acc += t;
    }
    return acc;
}

ThetaElement variational_theta(int i, const ThetaElement& a, int n)
{
    ThetaElement acc;
    int dmax = a.max_degree();
    for (int s = 0; s <= dmax; ++s) {
        ThetaElement t = partial_odd(i, s, a);
        if (t.is_zero()) continue;
        for (int k = 0; k < s; ++k) t = d_x(t, n);
        if (s % 2) t = -t;
        acc += t;
    }
    return acc;
}

std::string ThetaElement::str() const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        bool shown = cs != "1" || m.is_one();
        bool need_star = false;
        if (shown) {
            bool wrap = (c.num.terms.size() > 1 && !m.is_one());
            out += wrap ? "(" + cs + ")" : cs;
            need_star = true;
        }
        for (auto& [g, e] : m.evens) {
            if (need_star) out += "*";
            out += "u" + std::to_string(g.i) + "_" + std::to_string(g.s);
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
        for (auto& g : m.odds) {
            if (need_star) out += "*";
            out += "th" + std::to_string(g.i) + "_" + std::to_string(g.s);
            need_star = true;
        }
    }
    return out;
}

const ThetaElement& LambdaElement::coeff(int k) const
{
    static const ThetaElement zero;
    if (k < 0 || k >= (int)comp.size()) return zero;
    return comp[k];
}

void LambdaElement::set(int k, ThetaElement t)
{
    if ((int)comp.size() <= k) comp.resize(k + 1);
    comp[k] = std::move(t);
    while (!comp.empty() && comp.back().is_zero()) comp.pop_back();
}

LambdaElement LambdaElement::operator-() const
{
    LambdaElement r = *this;
    for (auto& t : r.comp) t = -t;
    return r;
}

LambdaElement LambdaElement::operator+(const LambdaElement& o) const
{
    LambdaElement r;
    int d = std::max(degree(), o.degree());
    for (int k = d; k >= 0; --k) r.set(k, coeff(k) + o.coeff(k));
    return r;
}

LambdaElement LambdaElement::operator-(const LambdaElement& o) const
{
    return *this + (-o);
}

LambdaElement LambdaElement::operator*(const CoeffRat& c) const
{
    LambdaElement r;
    for (int k = degree(); k >= 0; --k) r.set(k, coeff(k) * c);
    return r;
}

LambdaElement LambdaElement::shifted(int k) const
{
    LambdaElement r;
    for (int j = degree(); j >= 0; --j) r.set(j + k, coeff(j));
    return r;
}

ThetaElement LambdaElement::eval_at_u(int i) const
{
    ThetaElement r;
    CoeffRat ui = CoeffRat::u(i), pw(1);
    for (int k = 0; k <= degree(); ++k) {
        r += coeff(k) * pw;
        pw *= ui;
    }
    return r;
}

int LambdaElement::max_degree() const
{
    int d = -1;
    for (auto& t : comp) d = std::max(d, t.max_degree());
    return d;
}

std::string LambdaElement::str() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (coeff(k).is_zero()) continue;
        std::string part = coeff(k).str();
        std::string lam = (k == 1) ? "L" : "L^" + std::to_string(k);
        if (k > 0) {
            if (coeff(k).terms.size() > 1) part = "(" + part + ")*" + lam;
            else if (part == "1") part = lam;
            else if (part == "-1") part = "-" + lam;
            else part += "*" + lam;
        }
        if (out.empty()) {
            out = part;
        } else if (!part.empty() && part[0] == '-') {
            out += " - " + part.substr(1);
        } else {
            out += " + " + part;
        }
    }
    return out;
}

LambdaElement multiply(const LambdaElement& a, const LambdaElement& b)
{
    LambdaElement r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<ThetaElement> acc(a.comp.size() + b.comp.size() - 1);
    for (int i = 0; i < (int)a.comp.size(); ++i)
        for (int j = 0; j < (int)b.comp.size(); ++j)
            acc[i + j] += multiply(a.comp[i], b.comp[j]);
    for (int k = (int)acc.size() - 1; k >= 0; --k) r.set(k, std::move(acc[k]));
    return r;
}

LambdaElement d_x(const LambdaElement& a, int n)
{
    LambdaElement r;
    for (int k = a.degree(); k >= 0; --k) r.set(k, d_x(a.coeff(k), n));
    return r;
}

LambdaElement polar_free_divide(const LambdaElement& p, int i)
{
    LambdaElement q;
    CoeffRat ui = CoeffRat::u(i);
    ThetaElement carry;
    for (int k = p.degree() - 1; k >= 0; --k) {
        carry = p.coeff(k + 1) + carry * ui;
        q.set(k, carry);
    }
    return q;
}

} // namespace tc
