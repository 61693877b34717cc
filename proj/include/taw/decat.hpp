// Central classes in the Hecke algebra: the theta-expansion weighted by
// restricted weight multiplicities, the weight-filtration polynomial computed
// two independent ways, the kernel-dimension count, the even-pairing check
// for quasi-minuscule weights, and the antispherical Euler vector.
#pragma once

#include "taw/hecke.hpp"
#include "taw/rep.hpp"

namespace taw {

struct Fixture;

struct CentralClass {
  Vec source;          // the dominant weight upstairs
  Character restricted;  // its restricted character on Y_I
  HeckeElement element;  // sum of dim . theta terms
};

CentralClass central_class(const Fixture& fx, const Vec& lambda);

struct WeightPolynomial {
  LaurentInt poly;
};

// computed through the Hecke algebra and as a direct weight sum; the two
// routes must agree
WeightPolynomial weight_poly(const Fixture& fx, const Vec& lambda);

Int ker_dim(const Fixture& fx, const Vec& lambda);

// requires classify(project(lambda)) == quasi_minuscule; true iff every
// nonzero restricted weight pairs evenly with 2rho
bool check_parity(const Fixture& fx, const Vec& lambda);

// N_0 . central_class at v = 1, indexed by Y_I; asserts the magnitudes
// against the restricted multiplicities
std::map<Vec, BigInt> euler_vector(const Fixture& fx, const Vec& lambda);

}  // namespace taw
