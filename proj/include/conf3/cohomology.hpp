#pragma once

#include "conf3/kriz_model.hpp"
#include "conf3/poly.hpp"
#include "conf3/symmetry.hpp"

namespace conf3 {

int betti(const KrizComplex& cx, int q, int k);
int betti_isotypic(const KrizComplex& cx, Irrep r, int q, int k);

// t tracks the degree, s the generator count
Poly2 poincare(const KrizComplex& cx);
Poly2 poincare_isotypic(const KrizComplex& cx, Irrep r);

int cocycle_dim(const KrizComplex& cx, int q, int k);
int cocycle_dim_isotypic(const KrizComplex& cx, Irrep r, int q, int k);

// True iff the Betti numbers through max_k (default: one below twice the
// truncation order) match the coefficients of the rank-3 stable series.
bool stable_range_check(const KrizComplex& cx, int max_k);
bool stable_range_check(const KrizComplex& cx);

bool d_squared_is_zero(const KrizComplex& cx);
bool d_injective_on_top(const KrizComplex& cx);
bool euler_chains_match(const KrizComplex& cx);

bool is_cocycle(const KrizComplex& cx, const ModelElement& z, int q, int k);
// Requires a cocycle; true when it is not a coboundary.
bool class_is_nonzero(const KrizComplex& cx, const ModelElement& z, int q, int k);

}  // namespace conf3
