#pragma once

#include <vector>

#include "thetacalc/derivation.hpp"

namespace tc {

// Semisimple hydrodynamic pencil in canonical coordinates: g1 = diag(f^i),
// g2 = diag(u^i f^i).  Generic mode keeps the f^i as jet symbols.
struct Pencil {
    int n = 1;
    std::vector<CoeffRat> f;
    bool generic = true;

    static Pencil make_generic(int n);
    static Pencil make_concrete(std::vector<CoeffRat> f);

    std::vector<CoeffRat> f2() const;  // u^i f^i
};

// Gamma^{ij}_k for a diagonal metric with entries g[i-1]; indices 1-based
using Christoffel = std::vector<std::vector<std::vector<CoeffRat>>>;
Christoffel christoffel(const std::vector<CoeffRat>& g, int n);

struct HydroBivector {
    std::vector<CoeffRat> metric;  // diagonal entries
    Christoffel gamma;
    ThetaElement density;  // bidegree (2,1)
};

HydroBivector build_P1(const Pencil& p);
HydroBivector build_P2(const Pencil& p);

// the super-derivation D(f^1,...,f^n) attached to a diagonal hydrodynamic
// bivector, transcribed term by term from its closed form
SuperDerivation build_D(const std::vector<CoeffRat>& f, int n);
SuperDerivation build_D1(const Pencil& p);
SuperDerivation build_D2(const Pencil& p);
// D_lambda = D2 - lambda D1
SuperDerivation build_D_lambda(const Pencil& p);

// independent route: D_P from a density via variational derivatives,
// D_P = sum_s d^s(dP/dth_i) d/du^{i,s} + d^s(dP/du^i) d/dth_i^s
SuperDerivation derivation_from_density(const LambdaElement& P, int n);

} // namespace tc
