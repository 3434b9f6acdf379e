#include "conf3/symmetry.hpp"

#include <stdexcept>

namespace conf3 {

const std::array<Perm, 6>& all_perms() {
    static const std::array<Perm, 6> perms{{{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};
    return perms;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c;
    for (size_t i = 0; i < 3; ++i) c[i] = a[static_cast<size_t>(b[i] - 1)];
    return c;
}

int conj_class(const Perm& p) {
    int fixed = 0;
    for (size_t i = 0; i < 3; ++i)
        if (p[i] == static_cast<int>(i) + 1) ++fixed;
    if (fixed == 3) return 0;
    if (fixed == 1) return 1;
    return 2;
}

int irrep_dim(Irrep r) { return r == Irrep::Standard ? 2 : 1; }

int character(Irrep r, int cls) {
    static const int table[3][3] = {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
    if (cls < 0 || cls > 2) throw std::invalid_argument("bad class index");
    return table[static_cast<size_t>(r)][static_cast<size_t>(cls)];
}

const char* irrep_name(Irrep r) {
    switch (r) {
        case Irrep::Trivial: return "trivial";
        case Irrep::Standard: return "standard";
        case Irrep::Sign: return "sign";
    }
    throw std::invalid_argument("bad irrep");
}

ModelElement act(const Perm& s, const ModelElement& a) {
    int m = a.trunc_order();
    ModelElement out(m);
    for (const auto& [b, c] : a.terms()) {
        RawTerm t;
        t.coeff = c;
        for (size_t i = 0; i < 3; ++i) t.exps[static_cast<size_t>(s[i] - 1)] = b.exps[i];
        for (const auto& [i, j] : b.pairs)
            t.pairs.push_back({s[static_cast<size_t>(i - 1)], s[static_cast<size_t>(j - 1)]});
        out += normal_form(m, t);
    }
    return out;
}

SparseMatrixQ action_matrix(const KrizComplex& cx, const Perm& s, int q, int k) {
    const auto& blk = cx.basis(q, k);
    int n = static_cast<int>(blk.size());
    SparseMatrixQ a(n, n);
    for (int col = 0; col < n; ++col) {
        ModelElement e(cx.trunc_order());
        e.add(blk[static_cast<size_t>(col)], 1);
        auto v = cx.coords(act(s, e), q, k);
        for (int row = 0; row < n; ++row)
            if (v[static_cast<size_t>(row)] != 0) a.set(row, col, v[static_cast<size_t>(row)]);
    }
    return a;
}

Int multiplicity(const KrizComplex& cx, Irrep r, int q, int k) {
    Rat acc(0);
    for (const auto& s : all_perms()) {
        SparseMatrixQ a = action_matrix(cx, s, q, k);
        Rat tr(0);
        for (int i = 0; i < a.rows(); ++i) tr += a.at(i, i);
        acc += Rat(character(r, conj_class(s))) * tr;
    }
    acc /= 6;
    if (acc.get_den() != 1 || acc < 0) throw std::logic_error("multiplicity must be a non-negative integer");
    return acc.get_num();
}

SparseMatrixQ projector(const KrizComplex& cx, Irrep r, int q, int k) {
    int n = cx.dim(q, k);
    SparseMatrixQ p(n, n);
    for (const auto& s : all_perms())
        p = p + action_matrix(cx, s, q, k).scaled(Rat(character(r, conj_class(s))));
    return p.scaled(Rat(irrep_dim(r)) / 6);
}

std::map<std::pair<int, int>, IsotypicBlock> isotypic_complex(const KrizComplex& cx, Irrep r) {
    std::map<std::pair<int, int>, IsotypicBlock> out;
    for (int q = 0; q <= 2; ++q)
        for (int k : cx.degrees(q)) {
            SparseMatrixQ p = projector(cx, r, q, k);
            auto piv = p.pivot_columns();
            if (piv.empty()) continue;
            IsotypicBlock blk;
            blk.basis = p.select_columns(piv);
            out.emplace(std::make_pair(q, k), std::move(blk));
        }
    for (auto& [qk, blk] : out) {
        SparseMatrixQ image = cx.diff_matrix(qk.first, qk.second) * blk.basis;
        auto target = out.find({qk.first - 1, qk.second + 1});
        if (target == out.end()) {
            if (!image.is_zero()) throw std::logic_error("differential leaves the component");
            blk.d = SparseMatrixQ(0, blk.basis.cols());
        } else if (!target->second.basis.solve(image, blk.d)) {
            throw std::logic_error("differential leaves the component");
        }
    }
    return out;
}

}  // namespace conf3
