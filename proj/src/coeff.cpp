#include "thetacalc/coeff.hpp"

#include <stdexcept>

namespace tc {

CoeffRat::CoeffRat(Poly n, Poly d) : num(std::move(n)), den(std::move(d))
{
    if (den.is_zero()) throw std::domain_error("CoeffRat: zero denominator");
    normalize();
}

void CoeffRat::normalize()
{
    if (num.is_zero()) {
        den = Poly(1);
        return;
    }
    if (!den.is_one()) {
        Poly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = num.divexact(g);
            den = den.divexact(g);
        }
    }
    // unique scale: den integer-primitive with positive leading coefficient
    Rat t = den.make_primitive();
    if (t != 1) num = num * (Rat(1) / t);
}

CoeffRat CoeffRat::operator-() const
{
    CoeffRat r = *this;
    r.num = -r.num;
    return r;
}

CoeffRat CoeffRat::operator+(const CoeffRat& o) const
{
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return CoeffRat(num + o.num, den);
    return CoeffRat(num * o.den + o.num * den, den * o.den);
}

CoeffRat CoeffRat::operator-(const CoeffRat& o) const
{
    return *this + (-o);
}

CoeffRat CoeffRat::operator*(const CoeffRat& o) const
{
    if (is_zero() || o.is_zero()) return CoeffRat();
    return CoeffRat(num * o.num, den * o.den);
}

CoeffRat CoeffRat::operator/(const CoeffRat& o) const
{
    if (o.is_zero()) throw std::domain_error("CoeffRat: division by zero");
    if (is_zero()) return CoeffRat();
    return CoeffRat(num * o.den, den * o.num);
}

CoeffRat CoeffRat::inverse() const
{
    if (is_zero()) throw std::domain_error("CoeffRat: inverse of zero");
    return CoeffRat(den, num);
}

bool CoeffRat::operator<(const CoeffRat& o) const
{
    auto poly_less = [](const Poly& a, const Poly& b) {
        if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
        for (size_t k = 0; k < a.terms.size(); ++k) {
            if (!(a.terms[k].first == b.terms[k].first))
                return mono_less(a.terms[k].first, b.terms[k].first);
            if (a.terms[k].second != b.terms[k].second)
                return a.terms[k].second < b.terms[k].second;
        }
        return false;
    };
    if (!(den == o.den)) return poly_less(den, o.den);
    if (!(num == o.num)) return poly_less(num, o.num);
    return false;
}

std::string CoeffRat::str() const
{
    if (is_polynomial()) return num.str();
    std::string n = num.str(), d = den.str();
    if (num.terms.size() > 1) n = "(" + n + ")";
    if (den.terms.size() > 1 || (den.terms.size() == 1 && !den.terms[0].first.is_one()))
        d = "(" + d + ")";
    return n + "/" + d;
}

CoeffRat d_du(int j, const CoeffRat& a)
{
    Poly dn = a.num.d_du(j);
    if (a.den.is_one()) return CoeffRat(std::move(dn));
    Poly dd = a.den.d_du(j);
    return CoeffRat(dn * a.den - a.num * dd, a.den * a.den);
}

CoeffRat d_du_multi(const std::vector<int>& J, const CoeffRat& a)
{
    CoeffRat r = a;
    for (int dir = 0; dir < (int)J.size(); ++dir)
        for (int k = 0; k < J[dir]; ++k) r = d_du(dir + 1, r);
    return r;
}

namespace {

CoeffRat substitute_f_poly(const Poly& p, const std::vector<CoeffRat>& concrete)
{
    CoeffRat out;
    for (auto& [m, c] : p.terms) {
        CoeffRat t{Rat(c)};
        for (auto& [v, e] : m.factors) {
            const JetVar& jv = VarPool::var(v);
            CoeffRat base;
            if (jv.kind == JetVar::U) {
                base = CoeffRat::variable(v);
            } else {
                if (jv.index > (int)concrete.size())
                    throw std::domain_error("substitute_f: no value for f" + std::to_string(jv.index));
                base = d_du_multi(jv.jet, concrete[jv.index - 1]);
            }
            for (int k = 0; k < e; ++k) t *= base;
        }
        out += t;
    }
    return out;
}

} // namespace

CoeffRat substitute_f(const CoeffRat& a, const std::vector<CoeffRat>& concrete)
{
    CoeffRat n = substitute_f_poly(a.num, concrete);
    CoeffRat d = substitute_f_poly(a.den, concrete);
    return n / d;
}

const CoeffRat& LambdaCoeff::coeff(int k) const
{
    static const CoeffRat zero;
    if (k < 0 || k >= (int)c.size()) return zero;
    return c[k];
}

void LambdaCoeff::set(int k, CoeffRat v)
{
    if ((int)c.size() <= k) c.resize(k + 1);
    c[k] = std::move(v);
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

LambdaCoeff LambdaCoeff::operator+(const LambdaCoeff& o) const
{
    LambdaCoeff r;
    int d = std::max(degree(), o.degree());
    for (int k = d; k >= 0; --k) r.set(k, coeff(k) + o.coeff(k));
    return r;
}

LambdaCoeff LambdaCoeff::operator*(const LambdaCoeff& o) const
{
    LambdaCoeff r;
    if (is_zero() || o.is_zero()) return r;
    std::vector<CoeffRat> acc(c.size() + o.c.size() - 1);
    for (int a = 0; a < (int)c.size(); ++a)
        for (int b = 0; b < (int)o.c.size(); ++b) acc[a + b] += c[a] * o.c[b];
    for (int k = (int)acc.size() - 1; k >= 0; --k) r.set(k, std::move(acc[k]));
    return r;
}

CoeffRat LambdaCoeff::eval_at_u(int i) const
{
    CoeffRat ui = CoeffRat::u(i);
    CoeffRat r;
    for (int k = degree(); k >= 0; --k) r = r * ui + coeff(k);
    return r;
}

LambdaCoeff polar_free_divide(const LambdaCoeff& p, int i)
{
    // synthetic division: q_k = p_{k+1} + u^i q_{k+1}
    LambdaCoeff q;
    CoeffRat ui = CoeffRat::u(i);
    CoeffRat carry;
    for (int k = p.degree() - 1; k >= 0; --k) {
        carry = p.coeff(k + 1) + ui * carry;
        q.set(k, carry);
    }
    return q;
}

} // namespace tc
