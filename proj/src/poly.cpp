#include "thetacalc/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tc {

int Mono::total_degree() const
{
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

int Mono::degree_in(int var) const
{
    for (auto& [v, e] : factors)
        if (v == var) return e;
    return 0;
}

Mono Mono::operator*(const Mono& o) const
{
    Mono r;
    r.factors.reserve(factors.size() + o.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
        if (factors[i].first == o.factors[j].first) {
            r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
            ++i, ++j;
        } else if (VarPool::less(factors[i].first, o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else {
            r.factors.push_back(o.factors[j++]);
        }
    }
    while (i < factors.size()) r.factors.push_back(factors[i++]);
    while (j < o.factors.size()) r.factors.push_back(o.factors[j++]);
    return r;
}

bool Mono::divisible_by(const Mono& o) const
{
    for (auto& [v, e] : o.factors)
        if (degree_in(v) < e) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const
{
    Mono r;
    size_t j = 0;
    for (auto& [v, e] : factors) {
        int sub = 0;
        if (j < o.factors.size() && o.factors[j].first == v) {
            sub = o.factors[j].second;
            ++j;
        }
        if (e - sub > 0) r.factors.push_back({v, e - sub});
        else if (e - sub < 0)
            throw std::logic_error("Mono: division not exact");
    }
    if (j != o.factors.size()) throw std::logic_error("Mono: division not exact");
    return r;
}

bool mono_less(const Mono& a, const Mono& b)
{
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // lexicographic scan along the canonical variable order; the variable
    // appearing with higher exponent earlier wins
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int va = a.factors[i].first, vb = b.factors[j].first;
        if (va == vb) {
            if (a.factors[i].second != b.factors[j].second)
                return a.factors[i].second < b.factors[j].second;
            ++i, ++j;
        } else if (VarPool::less(va, vb)) {
            return false;  // a has an earlier variable with positive exponent
        } else {
            return true;
        }
    }
    if (i < a.factors.size()) return false;
    if (j < b.factors.size()) return true;
    return false;
}

namespace {
struct MonoGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_less(b, a); }
};
} // namespace

Rat Poly::constant_value() const
{
    if (terms.empty()) return Rat(0);
    return terms[0].second;
}

int Poly::total_degree() const
{
    int d = -1;
    for (auto& [m, c] : terms) d = std::max(d, m.total_degree());
    return d;
}

int Poly::degree_in(int var) const
{
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, m.degree_in(var));
    return d;
}

std::vector<int> Poly::variables() const
{
    std::vector<int> vs;
    for (auto& [m, c] : terms)
        for (auto& [v, e] : m.factors) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), VarPool::less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() && j < o.terms.size()) {
        if (terms[i].first == o.terms[j].first) {
            Rat c = terms[i].second + o.terms[j].second;
            if (c != 0) r.terms.push_back({terms[i].first, c});
            ++i, ++j;
        } else if (mono_less(o.terms[j].first, terms[i].first)) {
            r.terms.push_back(terms[i++]);
        } else {
            r.terms.push_back(o.terms[j++]);
        }
    }
    while (i < terms.size()) r.terms.push_back(terms[i++]);
    while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    if (is_zero() || o.is_zero()) return Poly();
    std::map<Mono, Rat, MonoGreater> acc;
    for (auto& [ma, ca] : terms)
        for (auto& [mb, cb] : o.terms) {
            Mono m = ma * mb;
            auto [it, inserted] = acc.try_emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    Poly r;
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms.push_back({m, c});
    return r;
}

Poly Poly::operator*(const Rat& c) const
{
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& [m, cc] : r.terms) cc *= c;
    return r;
}

Poly Poly::pow(int e) const
{
    Poly r(1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(int var) const
{
    Poly r;
    for (auto& [m, c] : terms) {
        int e = m.degree_in(var);
        if (e == 0) continue;
        Mono m2 = m / Mono::var(var);
        r += Poly(c * e) * [&] {
            Poly p;
            p.terms.push_back({m2, Rat(1)});
            return p;
        }();
    }
    return r;
}

Poly Poly::d_du(int j) const
{
    Poly r;
    for (auto& [m, c] : terms) {
        for (auto& [v, e] : m.factors) {
            Mono rest = m / Mono::var(v);
            const JetVar& jv = VarPool::var(v);
            if (jv.kind == JetVar::U) {
                if (jv.index != j) continue;
                Poly t;
                t.terms.push_back({rest, c * e});
                r += t;
            } else {
                Mono nm = rest * Mono::var(VarPool::raise(v, j));
                Poly t;
                t.terms.push_back({nm, c * e});
                r += t;
            }
        }
    }
    return r;
}

std::vector<Poly> Poly::coeffs_in(int var) const
{
    std::vector<Poly> cs(degree_in(var) + 1);
    for (auto& [m, c] : terms) {
        int e = m.degree_in(var);
        Mono rest = e ? m / Mono::var(var, e) : m;
        Poly t;
        t.terms.push_back({rest, c});
        cs[e] += t;
    }
    return cs;
}

Poly Poly::from_coeffs(const std::vector<Poly>& cs, int var)
{
    Poly r;
    for (int k = 0; k < (int)cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        Poly xk = Poly::variable(var, k);
        if (k == 0) xk = Poly(1);
        r += cs[k] * xk;
    }
    return r;
}

Poly Poly::divexact(const Poly& b) const
{
    if (b.is_zero()) throw std::logic_error("Poly: division by zero");
    Poly rem = *this, q;
    while (!rem.is_zero()) {
        const Mono& lm = rem.leading_mono();
        if (!lm.divisible_by(b.leading_mono()))
            throw std::logic_error("Poly: division not exact");
        Mono qm = lm / b.leading_mono();
        Rat qc = rem.leading_coeff() / b.leading_coeff();
        Poly t;
        t.terms.push_back({qm, qc});
        q += t;
        rem -= t * b;
    }
    return q;
}

Rat Poly::make_primitive()
{
    if (is_zero()) return Rat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : terms) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat factor(num_gcd, den_lcm);
    factor.canonicalize();
    if (terms[0].second < 0) factor = -factor;
    for (auto& [m, c] : terms) {
        c /= factor;
        c.canonicalize();
    }
    return factor;
}

std::string Poly::str() const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms) {
        Rat cc = c;
        if (first) {
            if (cc < 0) {
                out += "-";
                cc = -cc;
            }
        } else {
            out += (cc < 0) ? " - " : " + ";
            if (cc < 0) cc = -cc;
        }
        first = false;
        bool coef_shown = (cc != 1) || m.is_one();
        if (coef_shown) out += cc.get_str();
        bool need_star = coef_shown;
        for (auto& [v, e] : m.factors) {
            if (need_star) out += "*";
            out += VarPool::name(v);
            if (e > 1) out += "^" + std::to_string(e);
            need_star = true;
        }
    }
    return out;
}

namespace {

// pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b of univariate (in x)
// polynomials with Poly coefficients
std::vector<Poly> pseudo_rem(std::vector<Poly> a, const std::vector<Poly>& b)
{
    int db = (int)b.size() - 1;
    const Poly& lb = b.back();
    int scale = (int)a.size() - 1 - db + 1;
    while ((int)a.size() - 1 >= db && !a.empty()) {
        int da = (int)a.size() - 1;
        Poly la = a.back();
        // a = lb * a - la * x^(da-db) * b
        for (auto& c : a) c = lb * c;
        for (int k = 0; k <= db; ++k) a[da - db + k] -= la * b[k];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        --scale;
    }
    for (; scale > 0; --scale)
        for (auto& c : a) c = lb * c;
    return a;
}

std::vector<Poly> scale_div(std::vector<Poly> v, const Poly& d)
{
    for (auto& c : v) c = c.divexact(d);
    return v;
}

Poly content_of(const std::vector<Poly>& cs)
{
    Poly g;
    for (auto& c : cs) g = poly_gcd(g, c);
    return g;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) {
        Poly r = b;
        r.make_primitive();
        return r;
    }
    if (b.is_zero()) {
        Poly r = a;
        r.make_primitive();
        return r;
    }
    if (a.is_constant() || b.is_constant()) return Poly(1);

    // main variable: the canonically largest variable present in either
    std::vector<int> va = a.variables(), vb = b.variables();
    int x = va.back();
    if (!vb.empty() && VarPool::less(x, vb.back())) x = vb.back();

    std::vector<Poly> A = a.coeffs_in(x), B = b.coeffs_in(x);
    if ((int)A.size() - 1 == 0 || (int)B.size() - 1 == 0) {
        // one of them free of x after all (x belongs to the other):
        // gcd divides the content in x
        Poly ca = content_of(A), cb = content_of(B);
        return poly_gcd(ca, cb);
    }

    Poly ca = content_of(A), cb = content_of(B);
    A = scale_div(A, ca);
    B = scale_div(B, cb);
    Poly cont = poly_gcd(ca, cb);

    if (A.size() < B.size()) std::swap(A, B);

    // subresultant polynomial remainder sequence
    Poly g(1), h(1);
    while (true) {
        int d = (int)A.size() - (int)B.size();
        std::vector<Poly> R = pseudo_rem(A, B);
        if (R.empty()) break;
        if ((int)R.size() - 1 == 0) {
            // gcd is trivial in x
            std::vector<Poly> one{Poly(1)};
            B = one;
            break;
        }
        Poly divisor = g * h.pow(d);
        A = B;
        B = scale_div(R, divisor);
        g = A.back();
        if (d == 0)
            h = h;  // h unchanged when degree gap is zero
        else {
            Poly gd = g.pow(d);
            h = (d == 1) ? gd : gd.divexact(h.pow(d - 1));
        }
    }

    Poly pp = Poly::from_coeffs(B, x);
    if ((int)B.size() - 1 > 0) {
        Poly c = content_of(B);
        pp = pp.divexact(c);
    } else {
        pp = Poly(1);
    }
    Poly r = cont * pp;
    r.make_primitive();
    return r;
}

} // namespace tc
