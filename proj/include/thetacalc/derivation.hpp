#pragma once

#include <functional>
#include <memory>

#include "thetacalc/theta.hpp"

namespace tc {

// A super-derivation of A^[lambda], described by its images on the
// generator directions.  coeff_image(i) is the image of the d/du^i
// direction, acting on coefficients through the total derivative d_du.
struct SuperDerivation {
    int n = 1;
    int parity = 1;  // 0 even, 1 odd
    std::function<LambdaElement(Gen)> even_image;   // d/du^{i,s}, s >= 1
    std::function<LambdaElement(Gen)> odd_image;    // d/dth_i^s, s >= 0
    std::function<LambdaElement(int)> coeff_image;  // d/du^i

    static SuperDerivation zero(int n, int parity = 1);
};

LambdaElement apply(const SuperDerivation& D, const LambdaElement& a);
LambdaElement apply(const SuperDerivation& D, const ThetaElement& a);

// sum and composition-bracket helpers used by the verification drivers
SuperDerivation operator+(const SuperDerivation& A, const SuperDerivation& B);

// graded commutator [A,B] = A B - (-1)^{p(A) p(B)} B A applied to a
LambdaElement graded_commutator_apply(const SuperDerivation& A, const SuperDerivation& B,
                                      const LambdaElement& a);

// part of D shifting deg_u by exactly k
SuperDerivation degree_split(const SuperDerivation& D, int k);
// part of D shifting deg_theta1 by exactly k
SuperDerivation theta1_split(const SuperDerivation& D, int k);

// wraps D with a per-generator memo cache
SuperDerivation memoized(SuperDerivation D);

} // namespace tc
