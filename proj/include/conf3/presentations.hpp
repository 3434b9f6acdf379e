#pragma once

#include "conf3/poly.hpp"
#include "conf3/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace conf3::presentations {

struct GradedGenerator {
    std::string name;
    int degree = 0;
    bool odd = false;  // odd generators anticommute and square to zero
};

// Exponent vector over a fixed generator list; odd exponents are 0 or 1.
using Mono = std::vector<int>;

// Rational linear combination of monomials.
using GradedPoly = std::map<Mono, Rat>;

void gp_add_term(GradedPoly& p, const Mono& mono, const Rat& c);
GradedPoly gp_add(GradedPoly a, const GradedPoly& b);
GradedPoly gp_sub(GradedPoly a, const GradedPoly& b);
GradedPoly gp_scale(GradedPoly p, const Rat& c);

// A free graded-commutative algebra on finitely many generators: even ones
// commute, odd ones anticommute with each other and square to zero.
class GradedAlgebra {
public:
    explicit GradedAlgebra(std::vector<GradedGenerator> gens);

    const std::vector<GradedGenerator>& gens() const { return gens_; }
    int degree(const Mono& mono) const;
    bool is_homogeneous(const GradedPoly& p, int& degree_out) const;

    // Product with the sign from reordering odd factors; zero when an odd
    // generator repeats.
    GradedPoly mul(const GradedPoly& a, const GradedPoly& b) const;
    GradedPoly mul_mono(const Mono& mono, const GradedPoly& p) const;

    // All monomials of the exact degree, lexicographic in exponent vectors.
    std::vector<Mono> monomials(int degree) const;

    // Substitute a numeric value per generator (commutative use only).
    Rat eval(const GradedPoly& p, const std::vector<Rat>& values) const;

    std::string str(const GradedPoly& p) const;

private:
    std::vector<GradedGenerator> gens_;
};

struct Presentation {
    GradedAlgebra algebra;
    std::vector<GradedPoly> relations;  // homogeneous
};

// Power sum of three variables written in the first three power sums
// p1, p2, p3 (an algebra on three even generators of degrees 2, 4, 6).
// P_0 = 3 and P_k follows the three-term Newton recursion.
const GradedAlgebra& power_sum_algebra();
GradedPoly newton_p(int k);

// Cohomology presentation of the ordered configuration space: three degree-2
// classes, one odd class of degree 4m-1, eight relations. Requires m >= 2.
Presentation ordered_presentation(int m);

// Presentation of the unordered quotient on power-sum generators, including
// the quadratic closures of the truncation ideal. Requires m >= 2.
Presentation unordered_presentation(int m);

// Presentation of the full cocycle algebra: three degree-2 classes and three
// odd cocycle lines with the scalar-multiplication matrix rows. m >= 2.
Presentation cocycle_presentation(int m);

// Presentation of the invariant cocycle algebra; its relation list is the
// unordered one minus the quadratic closures. Requires m >= 2.
Presentation invariant_cocycle_presentation(int m);

// Selects one of the four named presentations: ordered, unordered, cocycle,
// invariant-cocycle. Unknown names throw.
Presentation presentation_by_name(const std::string& which, int m);

// Dimension of degree d in the quotient by the relation ideal, for each
// d <= max_deg: monomial count minus the rank of the relation span.
Poly1 hilbert(const Presentation& pres, int max_deg);

// True iff hilbert agrees with expected through max_deg and vanishes on the
// window of degrees just past it.
bool verify_presentation(const Presentation& pres, const Poly1& expected, int max_deg,
                         int window);

std::string str(const Presentation& pres);

}  // namespace conf3::presentations
