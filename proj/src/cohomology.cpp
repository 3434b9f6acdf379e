#include "conf3/cohomology.hpp"

#include "conf3/closed_forms.hpp"

#include <stdexcept>

namespace conf3 {

int betti(const KrizComplex& cx, int q, int k) {
    if (q < 0 || q > 2) return 0;
    int n = cx.dim(q, k);
    int rank_out = cx.diff_matrix(q, k).rank();
    int rank_in = cx.diff_matrix(q + 1, k - 1).rank();
    int b = n - rank_out - rank_in;
    if (b < 0) throw std::logic_error("negative betti number");
    return b;
}

int betti_isotypic(const KrizComplex& cx, Irrep r, int q, int k) {
    if (q < 0 || q > 2) return 0;
    int rank_pi = 0, rank_out = 0, rank_in = 0;
    if (cx.dim(q, k) > 0) {
        SparseMatrixQ pi = projector(cx, r, q, k);
        rank_pi = pi.rank();
        rank_out = (cx.diff_matrix(q, k) * pi).rank();
    }
    if (q + 1 <= 2 && cx.dim(q + 1, k - 1) > 0)
        rank_in = (cx.diff_matrix(q + 1, k - 1) * projector(cx, r, q + 1, k - 1)).rank();
    int b = rank_pi - rank_out - rank_in;
    if (b < 0) throw std::logic_error("negative betti number");
    return b;
}

Poly2 poincare(const KrizComplex& cx) {
    Poly2 out;
    for (int q = 0; q <= 2; ++q)
        for (int k = 0; k <= cx.max_degree(q) + 1; ++k) {
            int b = betti(cx, q, k);
            if (b != 0) out.add_term(k, q, b);
        }
    return out;
}

Poly2 poincare_isotypic(const KrizComplex& cx, Irrep r) {
    Poly2 out;
    for (int q = 0; q <= 2; ++q)
        for (int k = 0; k <= cx.max_degree(q) + 1; ++k) {
            int b = betti_isotypic(cx, r, q, k);
            if (b != 0) out.add_term(k, q, b);
        }
    return out;
}

int cocycle_dim(const KrizComplex& cx, int q, int k) {
    if (q < 0 || q > 2) return 0;
    return cx.dim(q, k) - cx.diff_matrix(q, k).rank();
}

int cocycle_dim_isotypic(const KrizComplex& cx, Irrep r, int q, int k) {
    if (q < 0 || q > 2 || cx.dim(q, k) == 0) return 0;
    SparseMatrixQ pi = projector(cx, r, q, k);
    return pi.rank() - (cx.diff_matrix(q, k) * pi).rank();
}

bool d_squared_is_zero(const KrizComplex& cx) {
    for (int k : cx.degrees(2))
        if (!(cx.diff_matrix(1, k + 1) * cx.diff_matrix(2, k)).is_zero()) return false;
    return true;
}

bool d_injective_on_top(const KrizComplex& cx) {
    for (int k : cx.degrees(2))
        if (cx.diff_matrix(2, k).rank() != cx.dim(2, k)) return false;
    return true;
}

bool euler_chains_match(const KrizComplex& cx) {
    for (int j = 0; j <= cx.max_degree(0) + 2; ++j) {
        int lhs = 0, rhs = 0;
        for (int q = 0; q <= 2; ++q) {
            int sign = q % 2 == 0 ? 1 : -1;
            lhs += sign * cx.dim(q, j - q);
            rhs += sign * betti(cx, q, j - q);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool stable_range_check(const KrizComplex& cx, int max_k) {
    const Poly1 series = closed_forms::stable_series(3, max_k);
    for (int k = 0; k <= max_k; ++k) {
        Int total = 0;
        for (int q = 0; q <= 2; ++q) total += betti(cx, q, k);
        if (total != series.coeff(k)) return false;
    }
    return true;
}

bool stable_range_check(const KrizComplex& cx) {
    return stable_range_check(cx, 2 * cx.trunc_order() - 1);
}

bool is_cocycle(const KrizComplex& cx, const ModelElement& z, int q, int k) {
    auto v = cx.coords(z, q, k);
    for (const auto& c : cx.diff_matrix(q, k).apply(v))
        if (c != 0) return false;
    return true;
}

bool class_is_nonzero(const KrizComplex& cx, const ModelElement& z, int q, int k) {
    if (!is_cocycle(cx, z, q, k)) throw std::invalid_argument("not a cocycle");
    if (z.is_zero()) return false;
    if (q == 2) return true;
    return !cx.diff_matrix(q + 1, k - 1).in_column_span(cx.coords(z, q, k));
}

}  // namespace conf3
