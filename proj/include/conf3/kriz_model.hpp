#pragma once

#include "conf3/rational.hpp"
#include "conf3/sparse_matrix.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace conf3 {

using IndexPair = std::pair<int, int>;
using PairList = std::vector<IndexPair>;

// Canonical monomial: pairs strictly increasing, each with first < second,
// and no exponent left on the trailing slot of any pair.
struct BasisMonomial {
    PairList pairs;
    std::array<int, 3> exps{0, 0, 0};

    int q() const { return static_cast<int>(pairs.size()); }
    int exp_sum() const { return exps[0] + exps[1] + exps[2]; }
    auto operator<=>(const BasisMonomial&) const = default;
};

int degree(const BasisMonomial& b, int m);

// Unreduced summand: pairs in arbitrary order and orientation.
struct RawTerm {
    PairList pairs;
    std::array<int, 3> exps{0, 0, 0};
    Rat coeff = 1;
};

class ModelElement {
  public:
    ModelElement() = default;
    explicit ModelElement(int m) : m_(m) {}

    int trunc_order() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisMonomial, Rat>& terms() const { return terms_; }
    Rat coeff(const BasisMonomial& b) const;
    void add(const BasisMonomial& b, const Rat& c);

    ModelElement& operator+=(const ModelElement& o);
    ModelElement& operator-=(const ModelElement& o);
    friend ModelElement operator+(ModelElement a, const ModelElement& b) { return a += b; }
    friend ModelElement operator-(ModelElement a, const ModelElement& b) { return a -= b; }
    ModelElement scaled(const Rat& c) const;
    bool operator==(const ModelElement&) const = default;

    std::string str() const;

  private:
    int m_ = 0;
    std::map<BasisMonomial, Rat> terms_;
};

ModelElement normal_form(int m, const RawTerm& t);
ModelElement multiply(const ModelElement& a, const ModelElement& b);
ModelElement diff(const ModelElement& a);

ModelElement unit_elem(int m);
ModelElement x_slot(int m, int slot, int k);
ModelElement t_elem(int m, int k);
ModelElement g_elem(int m, int i, int j);
ModelElement frame_vector(int m, int a);
ModelElement w_elem(int m);
ModelElement v_elem(int m, int which);
ModelElement b_elem(int m, int i, int j);
ModelElement gamma_elem(int m, int k);

// Bigraded complex with the canonical monomial basis per (q, degree) block.
// The differential lowers q by one and raises the degree by one; its matrix
// for a block has shape dim(q-1, k+1) x dim(q, k).
class KrizComplex {
  public:
    explicit KrizComplex(int m);

    int trunc_order() const { return m_; }
    int dim(int q, int k) const;
    const std::vector<BasisMonomial>& basis(int q, int k) const;
    std::vector<int> degrees(int q) const;
    int max_degree(int q) const { return 6 * m_ - q; }
    const SparseMatrixQ& diff_matrix(int q, int k) const;
    std::vector<Rat> coords(const ModelElement& e, int q, int k) const;
    ModelElement from_coords(int q, int k, const std::vector<Rat>& v) const;

  private:
    int m_;
    std::map<std::pair<int, int>, std::vector<BasisMonomial>> bases_;
    std::map<BasisMonomial, int> index_;
    mutable std::map<std::pair<int, int>, SparseMatrixQ> diffs_;
};

}  // namespace conf3
