#pragma once

#include "conf3/kriz_model.hpp"

#include <array>

namespace conf3 {

// p[i-1] is the image of slot i.
using Perm = std::array<int, 3>;

const std::array<Perm, 6>& all_perms();
Perm compose(const Perm& a, const Perm& b);
// 0 identity, 1 transpositions, 2 three-cycles
int conj_class(const Perm& p);

enum class Irrep { Trivial, Standard, Sign };
inline constexpr std::array<Irrep, 3> kIrreps{Irrep::Trivial, Irrep::Standard, Irrep::Sign};
int irrep_dim(Irrep r);
int character(Irrep r, int cls);
const char* irrep_name(Irrep r);

ModelElement act(const Perm& s, const ModelElement& a);

SparseMatrixQ action_matrix(const KrizComplex& cx, const Perm& s, int q, int k);
Int multiplicity(const KrizComplex& cx, Irrep r, int q, int k);
SparseMatrixQ projector(const KrizComplex& cx, Irrep r, int q, int k);

struct IsotypicBlock {
    SparseMatrixQ basis;  // columns span the component inside the block
    SparseMatrixQ d;      // differential in the component bases
};

// Throws if the differential fails to preserve a component.
std::map<std::pair<int, int>, IsotypicBlock> isotypic_complex(const KrizComplex& cx, Irrep r);

}  // namespace conf3
