#include "conf3/symmetry.hpp"

#include "conf3/cohomology.hpp"
#include "conf3/partitions.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace conf3;

namespace {

ModelElement random_element(std::mt19937& rng, int m, int q) {
    const std::array<PairList, 6> pools{
        PairList{}, PairList{{1, 2}}, PairList{{1, 3}}, PairList{{2, 3}},
        PairList{{1, 2}, {1, 3}}, PairList{{1, 2}, {2, 3}}};
    std::uniform_int_distribution<int> exp(0, m);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<size_t> pick(q == 0 ? 0 : (q == 1 ? 1 : 4), q == 0 ? 0 : (q == 1 ? 3 : 5));
    ModelElement e(m);
    for (int t = 0; t < 4; ++t) {
        RawTerm r;
        r.pairs = pools[pick(rng)];
        r.exps = {exp(rng), exp(rng), exp(rng)};
        r.coeff = coeff(rng);
        e += normal_form(m, r);
    }
    return e;
}

}  // namespace

TEST_CASE("permutation table") {
    const auto& perms = all_perms();
    CHECK(std::set<Perm>(perms.begin(), perms.end()).size() == 6);
    int counts[3] = {0, 0, 0};
    for (const auto& p : perms) ++counts[conj_class(p)];
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 3);
    CHECK(counts[2] == 2);
    Perm swap12{2, 1, 3}, swap13{3, 2, 1};
    CHECK(compose(swap12, swap13) == Perm{3, 1, 2});
    CHECK(compose(swap13, swap12) == Perm{2, 3, 1});
    for (const auto& a : perms)
        for (const auto& b : perms) {
            Perm c = compose(a, b);
            CHECK(std::count(perms.begin(), perms.end(), c) == 1);
        }
}

TEST_CASE("character table orthogonality") {
    const int sizes[3] = {1, 3, 2};
    for (Irrep r : kIrreps)
        for (Irrep s : kIrreps) {
            int acc = 0;
            for (int cls = 0; cls < 3; ++cls) acc += sizes[cls] * character(r, cls) * character(s, cls);
            CHECK(acc == (r == s ? 6 : 0));
        }
    CHECK(irrep_dim(Irrep::Trivial) == 1);
    CHECK(irrep_dim(Irrep::Standard) == 2);
    CHECK(irrep_dim(Irrep::Sign) == 1);
}

TEST_CASE("slot relabeling fixtures") {
    const int m = 2;
    Perm swap12{2, 1, 3};
    auto moved = act(swap12, x_slot(m, 1, 2));
    CHECK(moved == x_slot(m, 2, 2));
    CHECK(act(swap12, g_elem(m, 1, 2)) == g_elem(m, 1, 2));
    auto g13 = act(swap12, g_elem(m, 2, 3));
    CHECK(g13 == g_elem(m, 1, 3));
    Perm cyc{2, 3, 1};
    CHECK(act(cyc, x_slot(m, 1, 1)) == x_slot(m, 2, 1));
    CHECK(act(cyc, g_elem(m, 1, 2)) == g_elem(m, 2, 3));
}

TEST_CASE("slot relabeling is a left action") {
    std::mt19937 rng(17);
    for (int m = 1; m <= 3; ++m)
        for (int q = 0; q <= 2; ++q) {
            auto e = random_element(rng, m, q);
            for (const auto& a : all_perms())
                for (const auto& b : all_perms())
                    CHECK(act(a, act(b, e)) == act(compose(a, b), e));
        }
}

TEST_CASE("slot relabeling commutes with the differential and multiplication") {
    std::mt19937 rng(19);
    for (int m = 1; m <= 3; ++m)
        for (int trial = 0; trial < 6; ++trial) {
            auto a = random_element(rng, m, trial % 3);
            auto b = random_element(rng, m, trial % 2);
            for (const auto& s : all_perms()) {
                CHECK(act(s, diff(a)) == diff(act(s, a)));
                CHECK(act(s, multiply(a, b)) == multiply(act(s, a), act(s, b)));
            }
        }
}

TEST_CASE("action matrices form a representation") {
    for (int m = 1; m <= 2; ++m) {
        KrizComplex cx(m);
        for (int q = 0; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                CHECK(action_matrix(cx, {1, 2, 3}, q, k) == SparseMatrixQ::identity(cx.dim(q, k)));
                for (const auto& a : all_perms())
                    for (const auto& b : all_perms())
                        CHECK(action_matrix(cx, a, q, k) * action_matrix(cx, b, q, k) ==
                              action_matrix(cx, compose(a, b), q, k));
            }
    }
}

TEST_CASE("action matrices intertwine the differential") {
    for (int m = 1; m <= 3; ++m) {
        KrizComplex cx(m);
        for (int q = 1; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                const auto& d = cx.diff_matrix(q, k);
                for (const auto& s : all_perms())
                    CHECK(action_matrix(cx, s, q - 1, k + 1) * d == d * action_matrix(cx, s, q, k));
            }
    }
}

TEST_CASE("multiplicities match the counting formulas") {
    for (int m = 1; m <= 5; ++m) {
        KrizComplex cx(m);
        for (int K = 0; K <= 3 * m; ++K) {
            auto row = partitions::multiplicities(m, K);
            CHECK(multiplicity(cx, Irrep::Trivial, 0, 2 * K) == row.mu3);
            CHECK(multiplicity(cx, Irrep::Standard, 0, 2 * K) == row.mu21);
            CHECK(multiplicity(cx, Irrep::Sign, 0, 2 * K) == row.mu111);
        }
        for (int K = 0; K <= 2 * m; ++K) {
            int k = 2 * K + 2 * m - 1;
            Int n2 = K <= m ? K + 1 : 2 * m - K + 1;
            CHECK(multiplicity(cx, Irrep::Trivial, 1, k) == n2);
            CHECK(multiplicity(cx, Irrep::Standard, 1, k) == n2);
            CHECK(multiplicity(cx, Irrep::Sign, 1, k) == 0);
        }
        for (int K = 0; K <= m; ++K) {
            int k = 2 * K + 4 * m - 2;
            CHECK(multiplicity(cx, Irrep::Trivial, 2, k) == 0);
            CHECK(multiplicity(cx, Irrep::Standard, 2, k) == 1);
            CHECK(multiplicity(cx, Irrep::Sign, 2, k) == 0);
        }
    }
}

TEST_CASE("multiplicities account for every block dimension") {
    for (int m = 1; m <= 4; ++m) {
        KrizComplex cx(m);
        for (int q = 0; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                Int total = 0;
                for (Irrep r : kIrreps) total += multiplicity(cx, r, q, k) * irrep_dim(r);
                CHECK(total == cx.dim(q, k));
            }
    }
}

TEST_CASE("projectors decompose the identity") {
    for (int m = 1; m <= 3; ++m) {
        KrizComplex cx(m);
        for (int q = 0; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                SparseMatrixQ sum(cx.dim(q, k), cx.dim(q, k));
                for (Irrep r : kIrreps) {
                    SparseMatrixQ p = projector(cx, r, q, k);
                    CHECK(p * p == p);
                    CHECK(p.rank() == multiplicity(cx, r, q, k) * irrep_dim(r));
                    for (Irrep s : kIrreps)
                        if (s != r) CHECK((p * projector(cx, s, q, k)).is_zero());
                    sum = sum + p;
                }
                CHECK(sum == SparseMatrixQ::identity(cx.dim(q, k)));
            }
    }
}

TEST_CASE("projectors commute with the differential") {
    for (int m = 1; m <= 3; ++m) {
        KrizComplex cx(m);
        for (int q = 1; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                const auto& d = cx.diff_matrix(q, k);
                for (Irrep r : kIrreps)
                    CHECK(projector(cx, r, q - 1, k + 1) * d == d * projector(cx, r, q, k));
            }
    }
}

TEST_CASE("component complexes reproduce the component cohomology") {
    for (int m = 1; m <= 3; ++m) {
        KrizComplex cx(m);
        for (Irrep r : kIrreps) {
            auto blocks = isotypic_complex(cx, r);
            for (const auto& [qk, blk] : blocks) {
                auto [q, k] = qk;
                CHECK(blk.basis.rank() == blk.basis.cols());
                CHECK(blk.basis.cols() == multiplicity(cx, r, q, k) * irrep_dim(r));
                CHECK(blk.d.cols() == blk.basis.cols());
                auto above = blocks.find({q + 1, k - 1});
                if (above != blocks.end()) CHECK((blk.d * above->second.d).is_zero());
                int dim_here = blk.basis.cols();
                int rank_out = blk.d.rank();
                int rank_in = above != blocks.end() ? above->second.d.rank() : 0;
                CHECK(dim_here - rank_out - rank_in == betti_isotypic(cx, r, q, k));
            }
        }
    }
}
