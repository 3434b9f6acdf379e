#include "conf3/verify.hpp"

#include "conf3/closed_forms.hpp"
#include "conf3/cohomology.hpp"
#include "conf3/kriz_model.hpp"
#include "conf3/partitions.hpp"
#include "conf3/presentations.hpp"
#include "conf3/symmetry.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace conf3::verify {

namespace {

// Accumulates assertion outcomes; keeps the first few mismatch descriptions.
struct Recorder {
    bool ok = true;
    int failures = 0;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures < 5) {
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
        ++failures;
    }

    Check finish(std::string name, std::string anchor, std::string summary) const {
        Check c;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.pass = ok;
        c.expected = std::move(summary);
        c.computed = ok ? c.expected : detail;
        return c;
    }
};

std::string istr(const Int& v) { return v.get_str(); }

std::vector<Int> even_seq(const Poly1& p, int through_deg) {
    std::vector<Int> out;
    for (int d = 0; d <= through_deg; d += 2) out.push_back(p.coeff(d));
    return out;
}

std::vector<Int> odd_seq(const Poly1& p, int through_deg) {
    std::vector<Int> out;
    for (int d = 1; d <= through_deg; d += 2) out.push_back(p.coeff(d));
    return out;
}

Check partitions_check(int m) {
    Recorder r;
    for (int k = 0; k <= 3 * m; ++k) {
        const Int closed = partitions::p3_bounded(m, k);
        const Int brute = Int(static_cast<unsigned long>(partitions::enumerate_p3_bounded(m, k).size()));
        r.expect(closed == brute, "bounded count k=" + std::to_string(k) + ": closed " +
                                      istr(closed) + ", enumerated " + istr(brute));
        r.expect(closed == partitions::p3_bounded(m, 3 * m - k),
                 "symmetry fails at k=" + std::to_string(k));
        r.expect(partitions::p3(k) == partitions::p3_bounded(k, k),
                 "unbounded count k=" + std::to_string(k));
    }
    std::vector<Int> seq;
    for (int k = 0; k <= 3 * m; ++k) seq.push_back(partitions::p3_bounded(m, k));
    r.expect(partitions::is_unimodal(seq), "bounded counts not unimodal");
    r.expect(partitions::is_symmetric(seq), "bounded counts not symmetric");
    return r.finish("partitions m=" + std::to_string(m),
                    "partitions of k into at most three parts of size at most m: closed form "
                    "equals enumeration, symmetric under k <-> 3m-k, unimodal",
                    "counts agree for k = 0.." + std::to_string(3 * m));
}

Check multiplicities_check(int m) {
    Recorder r;
    KrizComplex cx(m);
    for (int q = 0; q <= 2; ++q)
        for (int k : cx.degrees(q)) {
            const Int mu3 = multiplicity(cx, Irrep::Trivial, q, k);
            const Int mu21 = multiplicity(cx, Irrep::Standard, q, k);
            const Int mu111 = multiplicity(cx, Irrep::Sign, q, k);
            const std::string where = " at q=" + std::to_string(q) + " k=" + std::to_string(k);
            if (q == 0) {
                const auto row = partitions::multiplicities(m, k / 2);
                r.expect(mu3 == row.mu3 && mu21 == row.mu21 && mu111 == row.mu111,
                         "closed row disagrees with traces" + where);
            } else if (q == 1) {
                const int n2 = cx.dim(1, k) / 3;
                r.expect(mu3 == n2 && mu21 == n2 && mu111 == 0,
                         "exterior-degree-one row is not (N,N,0)" + where);
            } else {
                r.expect(mu3 == 0 && mu21 == 1 && mu111 == 0,
                         "exterior-degree-two row is not (0,1,0)" + where);
            }
            r.expect(mu3 * irrep_dim(Irrep::Trivial) + mu21 * irrep_dim(Irrep::Standard) +
                             mu111 * irrep_dim(Irrep::Sign) ==
                         cx.dim(q, k),
                     "multiplicities do not fill the block" + where);
        }
    // Duality pairing on the top exterior blocks.
    for (int k = 0; k <= m; ++k) {
        const int lo = 2 * (2 * m - 1) + 2 * k, hi = 2 * (3 * m - 1) - 2 * k;
        for (Irrep rr : kIrreps)
            r.expect(multiplicity(cx, rr, 2, lo) == multiplicity(cx, rr, 2, hi),
                     "duality pairing fails at k=" + std::to_string(k));
    }
    return r.finish("multiplicities m=" + std::to_string(m),
                    "character traces reproduce the closed multiplicity rows; the exterior "
                    "blocks carry (N,N,0) and (0,1,0)",
                    "trace and closed multiplicities agree on every block");
}

Check invariants_check(int m) {
    Recorder r;
    KrizComplex cx(m);
    r.expect(d_squared_is_zero(cx), "d^2 != 0");
    r.expect(euler_chains_match(cx), "Euler characteristics drift under d");
    const auto& perms = all_perms();
    for (int q = 0; q <= 2; ++q)
        for (int k : cx.degrees(q)) {
            const std::string where = " at q=" + std::to_string(q) + " k=" + std::to_string(k);
            std::vector<SparseMatrixQ> actions;
            actions.reserve(6);
            for (const Perm& s : perms) actions.push_back(action_matrix(cx, s, q, k));
            for (size_t a = 0; a < perms.size(); ++a)
                for (size_t b = 0; b < perms.size(); ++b) {
                    const Perm ab = compose(perms[a], perms[b]);
                    size_t ci = 0;
                    while (perms[ci] != ab) ++ci;
                    r.expect(actions[a] * actions[b] == actions[ci],
                             "action is not a homomorphism" + where);
                }
            if (q >= 1)
                for (const Perm& s : perms)
                    r.expect(action_matrix(cx, s, q - 1, k + 1) * cx.diff_matrix(q, k) ==
                                 cx.diff_matrix(q, k) * action_matrix(cx, s, q, k),
                             "action does not commute with d" + where);
            SparseMatrixQ sum(cx.dim(q, k), cx.dim(q, k));
            for (Irrep rr : kIrreps) {
                const SparseMatrixQ p = projector(cx, rr, q, k);
                r.expect(p * p == p, "projector not idempotent" + where);
                r.expect(Int(p.rank()) == multiplicity(cx, rr, q, k) * irrep_dim(rr),
                         "projector rank mismatch" + where);
                sum = sum + p;
            }
            r.expect(sum == SparseMatrixQ::identity(cx.dim(q, k)),
                     "projectors do not sum to the identity" + where);
        }
    return r.finish("invariants m=" + std::to_string(m),
                    "d^2 = 0; the slot permutation action is a representation commuting with "
                    "d; its character projectors resolve the identity",
                    "all structural identities hold on every block");
}

Check poincare_check(int m) {
    Recorder r;
    KrizComplex cx(m);
    const Poly2 computed = poincare(cx);
    const Poly2 closed = closed_forms::total_poincare(m);
    r.expect(computed == closed, "total: computed " + computed.str() + ", closed " + closed.str());
    if (m >= 2) {
        const std::pair<Irrep, Poly2> pieces[] = {
            {Irrep::Trivial, closed_forms::invariant_poincare(m)},
            {Irrep::Standard, closed_forms::standard_poincare(m)},
            {Irrep::Sign, closed_forms::sign_poincare(m)}};
        Poly2 sum;
        for (const auto& [rr, expected] : pieces) {
            const Poly2 piece = poincare_isotypic(cx, rr);
            r.expect(piece == expected, std::string(irrep_name(rr)) + ": computed " +
                                            piece.str() + ", closed " + expected.str());
            sum = sum + piece;
        }
        r.expect(sum == computed, "isotypic pieces do not sum to the total");
    }
    return r.finish("poincare m=" + std::to_string(m),
                    "P(t,s) = C_{m-1}(t)^3 + s t^{4m-1} C_{m-1}(t), refined by isotypic "
                    "component",
                    closed.str());
}

Check elements_check(int m) {
    Recorder r;
    KrizComplex cx(m);
    const ModelElement w = w_elem(m);
    r.expect(diff(w).is_zero(), "dW != 0");
    r.expect(is_cocycle(cx, w, 1, 4 * m - 1) && class_is_nonzero(cx, w, 1, 4 * m - 1),
             "[W] = 0 in cohomology");
    for (int k = 1; k < m; ++k)
        r.expect(!multiply(t_elem(m, k), w).is_zero(),
                 "t_k W = 0 early at k=" + std::to_string(k));
    r.expect(multiply(t_elem(m, m), w).is_zero(), "t_m W != 0");
    for (int which : {1, 2})
        r.expect(diff(v_elem(m, which)).is_zero(), "dV" + std::to_string(which) + " != 0");

    // Kernel tables per component against the closed cocycle lines.
    for (int k : cx.degrees(1)) {
        const bool in_band = k >= 4 * m - 1 && k <= 6 * m - 3;
        const bool in_wide_band = k >= 4 * m - 1 && k <= 6 * m - 1;
        const std::string where = " at k=" + std::to_string(k);
        r.expect(cocycle_dim_isotypic(cx, Irrep::Trivial, 1, k) == (in_band ? 1 : 0),
                 "invariant kernel line" + where);
        r.expect(cocycle_dim_isotypic(cx, Irrep::Standard, 1, k) == (in_wide_band ? 2 : 0),
                 "standard kernel line" + where);
        r.expect(cocycle_dim_isotypic(cx, Irrep::Sign, 1, k) == 0, "sign kernel line" + where);
    }
    for (int k : cx.degrees(0))
        r.expect(cocycle_dim(cx, 0, k) == cx.dim(0, k),
                 "kernel at exterior degree 0, k=" + std::to_string(k));
    for (int k : cx.degrees(2))
        r.expect(cocycle_dim(cx, 2, k) == 0,
                 "kernel at exterior degree 2, k=" + std::to_string(k));
    return r.finish("elements m=" + std::to_string(m),
                    "dW = 0 with [W] nonzero; t_k W dies exactly at k = m; kernel dimensions "
                    "match the closed cocycle lines",
                    "explicit cocycles and kernel tables as expected");
}

Check presentation_check(int m, const std::string& which) {
    Recorder r;
    const presentations::Presentation pres = presentations::presentation_by_name(which, m);
    const Poly1 expected = presentation_target(which, m);
    const Poly1 h = presentations::hilbert(pres, 6 * m + 4);
    r.expect(presentations::verify_presentation(pres, expected, 6 * m, 4),
             "hilbert " + h.str() + ", expected " + expected.str());
    return r.finish("presentations " + which + " m=" + std::to_string(m),
                    "the presented algebra's Hilbert series equals its target table through "
                    "degree 6m and vanishes on the next four degrees",
                    expected.str());
}

Check unimodality_check(int m) {
    Recorder r;
    const Poly2 closed_polys[] = {closed_forms::total_poincare(m),
                                  closed_forms::invariant_poincare(m),
                                  closed_forms::standard_poincare(m),
                                  closed_forms::sign_poincare(m)};
    const char* names[] = {"total", "invariant", "standard", "sign"};
    for (int i = 0; i < 4; ++i) {
        const Poly1 at1 = closed_polys[i].at_s1();
        r.expect(partitions::is_unimodal(even_seq(at1, 6 * m)),
                 std::string(names[i]) + " even sequence not unimodal");
        r.expect(partitions::is_unimodal(odd_seq(at1, 6 * m - 1)),
                 std::string(names[i]) + " odd sequence not unimodal");
    }
    KrizComplex cx(m);
    const Poly1 computed = poincare(cx).at_s1();
    r.expect(partitions::is_unimodal(even_seq(computed, 6 * m)),
             "computed even sequence not unimodal");
    r.expect(partitions::is_unimodal(odd_seq(computed, 6 * m - 1)),
             "computed odd sequence not unimodal");
    return r.finish("unimodality m=" + std::to_string(m),
                    "even-degree and odd-degree Betti sequences rise to a single peak and fall",
                    "closed and computed sequences unimodal");
}

Check newton_check() {
    Recorder r;
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const auto& alg = presentations::power_sum_algebra();
    for (int trial = 0; trial < 50; ++trial) {
        const Rat x[3] = {make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)),
                          make_rat(num(rng), den(rng))};
        std::vector<Rat> tau(3, Rat(0));
        for (int k = 1; k <= 3; ++k)
            for (const Rat& xi : x) {
                Rat p(1);
                for (int i = 0; i < k; ++i) p *= xi;
                tau[k - 1] += p;
            }
        for (int k = 0; k <= 12; ++k) {
            Rat expected(0);
            for (const Rat& xi : x) {
                Rat p(1);
                for (int i = 0; i < k; ++i) p *= xi;
                expected += p;
            }
            r.expect(alg.eval(presentations::newton_p(k), tau) == expected,
                     "substitution fails at k=" + std::to_string(k) + " trial " +
                         std::to_string(trial));
        }
    }
    return r.finish("stable newton substitution",
                    "p_k rewritten in p_1, p_2, p_3 recovers the k-th power sum under "
                    "substitution",
                    "identity holds for 50 rational triples, k <= 12");
}

Check stable_check(int m) {
    Recorder r;
    KrizComplex cx(m);
    r.expect(stable_range_check(cx), "Betti numbers leave the stable series below degree 2m");
    return r.finish("stable m=" + std::to_string(m),
                    "below degree 2m the Betti numbers equal the coefficients of (1-t^2)^{-3}",
                    "stable range matches");
}

Check collinear_check(int m) {
    Recorder r;
    const Poly1 col = closed_forms::collinear_poincare(m);
    const Poly1 noncol = closed_forms::noncollinear_poincare(m);
    r.expect(col.max_degree() == 4 * m - 1, "collinear top degree");
    r.expect(noncol.max_degree() == 6 * m - 6, "non-collinear top degree");
    if (m == 2) {
        Poly1 col2, noncol2;
        for (int d : {0, 2, 5, 7}) col2.add_term(d, 1);
        noncol2.add_term(0, 1);
        noncol2.add_term(2, 2);
        noncol2.add_term(4, 2);
        noncol2.add_term(6, 1);
        r.expect(col == col2, "collinear expansion at m=2");
        r.expect(noncol == noncol2, "non-collinear expansion at m=2");
    }
    return r.finish("collinear m=" + std::to_string(m),
                    "the product and rational forms of the collinear and non-collinear "
                    "series agree as polynomial identities",
                    col.str() + " / " + noncol.str());
}

}  // namespace

Poly1 presentation_target(const std::string& which, int m) {
    if (which == "ordered") return closed_forms::total_poincare(m).at_s1();
    if (which == "unordered") return closed_forms::invariant_poincare(m).at_s1();
    if (which != "cocycle" && which != "invariant-cocycle")
        throw std::invalid_argument("unknown presentation: " + which);
    const bool invariant_only = which == "invariant-cocycle";
    Poly1 expected;
    KrizComplex cx(m);
    for (int q = 0; q <= 2; ++q)
        for (int k : cx.degrees(q)) {
            const int z = invariant_only ? cocycle_dim_isotypic(cx, Irrep::Trivial, q, k)
                                         : cocycle_dim(cx, q, k);
            if (z != 0) expected.add_term(k, z);
        }
    return expected;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "partitions", "multiplicities", "invariants", "poincare",    "elements",
        "presentations", "unimodality",  "stable",     "collinear"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

std::vector<Check> run_suites(const std::vector<std::string>& suites, int m_lo, int m_hi,
                              int parallelism) {
    if (suites.empty()) throw std::invalid_argument("run_suites: no suites selected");
    if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("run_suites: bad m range");
    if (parallelism < 1) throw std::invalid_argument("run_suites: parallelism must be >= 1");
    for (const auto& s : suites)
        if (!is_suite(s)) throw std::invalid_argument("run_suites: unknown suite " + s);

    using Task = std::function<Check()>;
    std::vector<Task> tasks;
    for (const std::string& suite : suite_names()) {
        bool selected = false;
        for (const auto& s : suites) selected = selected || s == suite;
        if (!selected) continue;
        if (suite == "stable") tasks.emplace_back(newton_check);
        for (int m = m_lo; m <= m_hi; ++m) {
            if (suite == "partitions") tasks.emplace_back([m] { return partitions_check(m); });
            if (suite == "multiplicities")
                tasks.emplace_back([m] { return multiplicities_check(m); });
            if (suite == "invariants") tasks.emplace_back([m] { return invariants_check(m); });
            if (suite == "poincare") tasks.emplace_back([m] { return poincare_check(m); });
            if (suite == "elements" && m >= 2)
                tasks.emplace_back([m] { return elements_check(m); });
            if (suite == "presentations" && m >= 2)
                for (const char* which : {"ordered", "unordered", "cocycle", "invariant-cocycle"})
                    tasks.emplace_back([m, which] { return presentation_check(m, which); });
            if (suite == "unimodality" && m >= 2)
                tasks.emplace_back([m] { return unimodality_check(m); });
            if (suite == "stable") tasks.emplace_back([m] { return stable_check(m); });
            if (suite == "collinear" && m >= 2)
                tasks.emplace_back([m] { return collinear_check(m); });
        }
    }

    std::vector<Check> results(tasks.size());
    auto run_one = [&](size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (const std::exception& e) {
            results[i].name = "task " + std::to_string(i);
            results[i].anchor = "internal consistency";
            results[i].pass = false;
            results[i].expected = "no exception";
            results[i].computed = std::string("exception: ") + e.what();
        }
    };
    if (parallelism == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min<int>(parallelism, static_cast<int>(tasks.size()));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    return results;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

}  // namespace conf3::verify
