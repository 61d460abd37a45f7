#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetacalc/coeff.hpp"

namespace tc {

// generator label (i, s): u^{i,s} for even (s >= 1), th_i^s for odd (s >= 0)
struct Gen {
    int i = 1;
    int s = 0;
    bool operator==(const Gen& o) const { return i == o.i && s == o.s; }
    // total order: by s, then i
    bool operator<(const Gen& o) const { return s != o.s ? s < o.s : i < o.i; }
};

// Monomial in the u-jet and theta generators.  Evens are stored as
// (generator, exponent) pairs, odds as a strictly increasing list; building
// from an unsorted odd list carries the Koszul sign of the permutation.
struct ThetaMono {
    std::vector<std::pair<Gen, int>> evens;
    std::vector<Gen> odds;

    bool is_one() const { return evens.empty() && odds.empty(); }
    int degree() const;      // standard degree: sum of all s
    int super() const { return (int)odds.size(); }
    int deg_u() const;       // number of even generators with multiplicity
    int deg_theta1() const;  // number of odd generators with s == 1
    int even_exp(Gen g) const;
    bool has_odd(Gen g) const;

    bool operator==(const ThetaMono& o) const { return evens == o.evens && odds == o.odds; }
};

// canonical total order (also drives the integration-by-parts reduction):
// by standard degree, then by the descending multiset of generator orders,
// then by the descending generator lists themselves
bool theta_mono_less(const ThetaMono& a, const ThetaMono& b);

struct ThetaMonoGreater {
    bool operator()(const ThetaMono& a, const ThetaMono& b) const
    {
        return theta_mono_less(b, a);
    }
};

// sorts an odd generator list, returning the Koszul sign (0 on a repeat)
int sort_odds(std::vector<Gen>& v);

class ThetaElement {
public:
    std::map<ThetaMono, CoeffRat, ThetaMonoGreater> terms;

    ThetaElement() = default;
    explicit ThetaElement(CoeffRat c)
    {
        if (!c.is_zero()) terms.emplace(ThetaMono{}, std::move(c));
    }

    static ThetaElement u_gen(int i, int s, CoeffRat c = CoeffRat(1));
    static ThetaElement th_gen(int i, int s, CoeffRat c = CoeffRat(1));

    bool is_zero() const { return terms.empty(); }
    void add_term(ThetaMono m, CoeffRat c);
    CoeffRat coeff_of(const ThetaMono& m) const;

    ThetaElement operator-() const;
    ThetaElement operator+(const ThetaElement& o) const;
    ThetaElement operator-(const ThetaElement& o) const;
    ThetaElement& operator+=(const ThetaElement& o);
    ThetaElement& operator-=(const ThetaElement& o) { return *this += -o; }
    ThetaElement operator*(const CoeffRat& c) const;
    bool operator==(const ThetaElement& o) const { return terms == o.terms; }

    // bidegree queries; homogeneous parts
    bool homogeneous(int* p = nullptr, int* d = nullptr) const;
    ThetaElement part_of_bidegree(int p, int d) const;
    int max_degree() const;  // max standard degree over terms, -1 if zero

    std::string str() const;
};

ThetaElement multiply(const ThetaElement& a, const ThetaElement& b);

// the derivation: d = sum_{i<=n, s>=0} (u^{i,s+1} d/du^{i,s} + th_i^{s+1} d/dth_i^s),
// acting on coefficients through sum_i u^{i,1} d/du^i
ThetaElement d_x(const ThetaElement& a, int n);

// monomial-direction partial derivatives
ThetaElement partial_even(int i, int s, const ThetaElement& a);  // s >= 1
ThetaElement partial_odd(int i, int s, const ThetaElement& a);   // s >= 0, left derivative
// derivative of the coefficients with respect to u^i
ThetaElement partial_u0(int i, const ThetaElement& a);

// variational derivatives: sum_s (-d)^s applied to the partials
ThetaElement variational_u(int i, const ThetaElement& a, int n);
ThetaElement variational_theta(int i, const ThetaElement& a, int n);

// Element of A^[lambda]: polynomial in lambda with ThetaElement coefficients.
class LambdaElement {
public:
    std::vector<ThetaElement> comp;  // comp[k] multiplies lambda^k

    LambdaElement() = default;
    explicit LambdaElement(ThetaElement t, int lpow = 0) { set(lpow, std::move(t)); }

    bool is_zero() const { return comp.empty(); }
    int degree() const { return (int)comp.size() - 1; }
    const ThetaElement& coeff(int k) const;
    void set(int k, ThetaElement t);

    LambdaElement operator-() const;
    LambdaElement operator+(const LambdaElement& o) const;
    LambdaElement operator-(const LambdaElement& o) const;
    LambdaElement& operator+=(const LambdaElement& o) { return *this = *this + o; }
    LambdaElement& operator-=(const LambdaElement& o) { return *this = *this - o; }
    LambdaElement operator*(const CoeffRat& c) const;
    LambdaElement shifted(int k) const;  // multiply by lambda^k
    bool operator==(const LambdaElement& o) const { return comp == o.comp; }

    ThetaElement eval_at_u(int i) const;  // lambda -> u^i
    int max_degree() const;               // max standard degree over components

    std::string str() const;
};

LambdaElement multiply(const LambdaElement& a, const LambdaElement& b);
LambdaElement d_x(const LambdaElement& a, int n);
// (P(lambda) - P(u^i)) / (lambda - u^i)
LambdaElement polar_free_divide(const LambdaElement& p, int i);

} // namespace tc
