#pragma once

#include "conf3/poly.hpp"

namespace conf3::closed_forms {

// Truncated even geometric series 1 + t^2 + ... + t^{2m}.
Poly1 c_poly(int m);

// Two-variable Poincare polynomial of the ordered three-point configuration
// space: C_{m-1}(t)^3 + s t^{4m-1} C_{m-1}(t). Requires m >= 1.
Poly2 total_poincare(int m);

// Isotypic pieces, dimension-weighted so the three of them sum to
// total_poincare. All require m >= 2.
Poly2 invariant_poincare(int m);
Poly2 standard_poincare(int m);
Poly2 sign_poincare(int m);

// Collinear triples: (1 + t^{2m+1}) C_{m-1}(t), cross-checked against its
// rational form. Requires m >= 2; a failed cross-check throws.
Poly1 collinear_poincare(int m);

// Non-collinear triples: C_{m-2} C_{m-1} C_m, same cross-check and domain.
Poly1 noncollinear_poincare(int m);

// Projective space minus two points: C_{m-1}(t) + t^{2m-1}. Requires m >= 2.
Poly1 doubly_punctured_proj_poincare(int m);

// Ordered pairs of distinct points in the once-punctured space. m >= 2.
Poly1 conf2_punctured_poincare(int m);

// Ordered pairs of distinct points: C_{m-1} C_m. Requires m >= 2.
Poly1 conf2_poincare(int m);

// (1 + t^2 + t^4 + ...)^n truncated past max_deg. n >= 1, max_deg >= 0.
Poly1 stable_series(int n, int max_deg);

// Expands the inclusion-exclusion count of the model's cohomology (free part
// cubed, minus the truncation correction, plus the odd cocycle line) and
// compares it with the product form. Requires m >= 2.
bool total_expansion_consistent(int m);

}  // namespace conf3::closed_forms
