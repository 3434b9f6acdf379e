// Acceptance gate: each criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include "conf3/closed_forms.hpp"
#include "conf3/cohomology.hpp"
#include "conf3/kriz_model.hpp"
#include "conf3/partitions.hpp"
#include "conf3/poly.hpp"
#include "conf3/presentations.hpp"
#include "conf3/rational.hpp"
#include "conf3/symmetry.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace conf3;

struct TermTSC {
    int t, s;
    long c;
};

Poly2 poly2_of(const std::vector<TermTSC>& terms) {
    Poly2 p;
    for (const auto& [t, s, c] : terms) p.add_term(t, s, c);
    return p;
}

Poly1 poly1_of(const std::vector<std::pair<int, long>>& terms) {
    Poly1 p;
    for (const auto& [t, c] : terms) p.add_term(t, c);
    return p;
}

std::vector<Int> even_part(const Poly1& p, int through) {
    std::vector<Int> seq;
    for (int d = 0; d <= through; d += 2) seq.push_back(p.coeff(d));
    return seq;
}

std::vector<Int> odd_part(const Poly1& p, int through) {
    std::vector<Int> seq;
    for (int d = 1; d <= through; d += 2) seq.push_back(p.coeff(d));
    return seq;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// The printed two-variable series of the invariant and standard components.
bool criterion_printed_fixtures(std::string& detail) {
    const std::vector<std::pair<Poly2, Poly2>> fixtures = {
        {poly2_of({{0, 0, 1}, {2, 0, 1}, {4, 0, 1}, {7, 1, 1}, {9, 1, 1}}),
         poly2_of({{2, 0, 2}, {4, 0, 2}})},
        {poly2_of({{0, 0, 1},
                   {2, 0, 1},
                   {4, 0, 2},
                   {6, 0, 2},
                   {8, 0, 1},
                   {11, 1, 1},
                   {13, 1, 1},
                   {15, 1, 1}}),
         poly2_of({{2, 0, 2}, {4, 0, 4}, {6, 0, 4}, {8, 0, 4}, {10, 0, 2}})},
        {poly2_of({{0, 0, 1},
                   {2, 0, 1},
                   {4, 0, 2},
                   {6, 0, 3},
                   {8, 0, 3},
                   {10, 0, 2},
                   {12, 0, 2},
                   {15, 1, 1},
                   {17, 1, 1},
                   {19, 1, 1},
                   {21, 1, 1}}),
         poly2_of({{2, 0, 2},
                   {4, 0, 4},
                   {6, 0, 6},
                   {8, 0, 8},
                   {10, 0, 8},
                   {12, 0, 6},
                   {14, 0, 4},
                   {16, 0, 2}})}};
    bool ok = true;
    for (int m = 2; m <= 4; ++m) {
        const auto& [inv, std_part] = fixtures[m - 2];
        KrizComplex cx(m);
        ok &= expect(poincare_isotypic(cx, Irrep::Trivial) == inv,
                     "invariant series differs from the printed fixture at m=" +
                         std::to_string(m),
                     detail);
        ok &= expect(poincare_isotypic(cx, Irrep::Standard) == std_part,
                     "standard series differs from the printed fixture at m=" +
                         std::to_string(m),
                     detail);
    }
    return ok;
}

bool criterion_total_poincare(std::string& detail) {
    bool ok = true;
    for (int m = 1; m <= 6; ++m) {
        KrizComplex cx(m);
        ok &= expect(poincare(cx) == closed_forms::total_poincare(m),
                     "total series differs from the closed product form at m=" +
                         std::to_string(m),
                     detail);
    }
    return ok;
}

bool criterion_multiplicities(std::string& detail) {
    bool ok = true;
    for (int m = 2; m <= 6; ++m) {
        KrizComplex cx(m);
        for (int k = 0; k <= 3 * m; ++k) {
            // The closed row evaluates both printed formulas internally.
            const auto row = partitions::multiplicities(m, k);
            const std::string where = " at m=" + std::to_string(m) + " k=" + std::to_string(k);
            ok &= expect(multiplicity(cx, Irrep::Trivial, 0, 2 * k) == row.mu3 &&
                             multiplicity(cx, Irrep::Standard, 0, 2 * k) == row.mu21 &&
                             multiplicity(cx, Irrep::Sign, 0, 2 * k) == row.mu111,
                         "trace row differs from the closed table" + where, detail);
            // Duality pairing k <-> 3m-k.
            const auto dual = partitions::multiplicities(m, 3 * m - k);
            ok &= expect(row.mu3 == dual.mu3 && row.mu21 == dual.mu21 && row.mu111 == dual.mu111,
                         "duality pairing fails" + where, detail);
        }
        for (int k = 0; k <= m; ++k) {
            const int lo = 2 * (2 * m - 1) + 2 * k, hi = 2 * (3 * m - 1) - 2 * k;
            for (Irrep rr : kIrreps)
                ok &= expect(multiplicity(cx, rr, 2, lo) == multiplicity(cx, rr, 2, hi),
                             "top-block duality pairing fails at m=" + std::to_string(m) +
                                 " k=" + std::to_string(k),
                             detail);
        }
    }
    return ok;
}

bool criterion_structural(std::string& detail) {
    bool ok = true;
    const auto& perms = all_perms();
    for (int m = 1; m <= 6; ++m) {
        KrizComplex cx(m);
        ok &= expect(d_squared_is_zero(cx), "d^2 != 0 at m=" + std::to_string(m), detail);
        for (int q = 0; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                const std::string where = " at m=" + std::to_string(m) +
                                          " q=" + std::to_string(q) + " k=" + std::to_string(k);
                std::vector<SparseMatrixQ> actions;
                actions.reserve(6);
                for (const Perm& s : perms) actions.push_back(action_matrix(cx, s, q, k));
                for (size_t a = 0; a < perms.size(); ++a)
                    for (size_t b = 0; b < perms.size(); ++b) {
                        const Perm ab = compose(perms[a], perms[b]);
                        size_t ci = 0;
                        while (perms[ci] != ab) ++ci;
                        ok &= expect(actions[a] * actions[b] == actions[ci],
                                     "action is not a homomorphism" + where, detail);
                    }
                if (q >= 1)
                    for (const Perm& s : perms)
                        ok &= expect(action_matrix(cx, s, q - 1, k + 1) * cx.diff_matrix(q, k) ==
                                         cx.diff_matrix(q, k) * action_matrix(cx, s, q, k),
                                     "action does not commute with d" + where, detail);
                SparseMatrixQ sum(cx.dim(q, k), cx.dim(q, k));
                for (Irrep rr : kIrreps) {
                    const SparseMatrixQ p = projector(cx, rr, q, k);
                    ok &= expect(p * p == p, "projector not idempotent" + where, detail);
                    sum = sum + p;
                }
                ok &= expect(sum == SparseMatrixQ::identity(cx.dim(q, k)),
                             "projectors do not sum to the identity" + where, detail);
            }
    }
    return ok;
}

bool criterion_elements(std::string& detail) {
    bool ok = true;
    for (int m = 2; m <= 5; ++m) {
        KrizComplex cx(m);
        const std::string at_m = " at m=" + std::to_string(m);
        const ModelElement w = w_elem(m);
        ok &= expect(diff(w).is_zero(), "dW != 0" + at_m, detail);
        ok &= expect(is_cocycle(cx, w, 1, 4 * m - 1) && class_is_nonzero(cx, w, 1, 4 * m - 1),
                     "[W] = 0 in cohomology" + at_m, detail);
        for (int k = 1; k < m; ++k)
            ok &= expect(!multiply(t_elem(m, k), w).is_zero(),
                         "t_k W vanishes early at k=" + std::to_string(k) + at_m, detail);
        ok &= expect(multiply(t_elem(m, m), w).is_zero(), "t_m W != 0" + at_m, detail);

        // Kernel tables against the closed cocycle lines.
        for (int k : cx.degrees(0))
            ok &= expect(cocycle_dim(cx, 0, k) == cx.dim(0, k),
                         "exterior-degree-zero kernel" + at_m, detail);
        for (int k : cx.degrees(2))
            ok &= expect(cocycle_dim(cx, 2, k) == 0, "exterior-degree-two kernel" + at_m, detail);
        for (int k : cx.degrees(1)) {
            const int band = (k >= 4 * m - 1 && k <= 6 * m - 3) ? 1 : 0;
            const int wide = (k >= 4 * m - 1 && k <= 6 * m - 1) ? 2 : 0;
            ok &= expect(cocycle_dim_isotypic(cx, Irrep::Trivial, 1, k) == band,
                         "invariant kernel line" + at_m, detail);
            ok &= expect(cocycle_dim_isotypic(cx, Irrep::Standard, 1, k) == wide,
                         "standard kernel line" + at_m, detail);
            ok &= expect(cocycle_dim_isotypic(cx, Irrep::Sign, 1, k) == 0,
                         "sign kernel line" + at_m, detail);
        }
    }
    return ok;
}

bool criterion_partitions(std::string& detail) {
    bool ok = true;
    for (long k = 0; k <= 60 && ok; ++k)
        ok &= expect(partitions::p3(k) ==
                         Int(static_cast<unsigned long>(
                             partitions::enumerate_p3_bounded(60, k).size())),
                     "p3 differs from enumeration at k=" + std::to_string(k), detail);
    for (long m = 0; m <= 20; ++m)
        for (long k = 0; k <= 60; ++k) {
            if (partitions::p3_bounded(m, k) !=
                Int(static_cast<unsigned long>(partitions::enumerate_p3_bounded(m, k).size())))
                return expect(false,
                              "bounded count differs from enumeration at m=" + std::to_string(m) +
                                  " k=" + std::to_string(k),
                              detail);
        }
    for (long m = 1; m <= 20; ++m) {
        std::vector<Int> seq;
        for (long k = 0; k <= 3 * m; ++k) seq.push_back(partitions::p3_bounded(m, k));
        ok &= expect(partitions::is_symmetric(seq),
                     "bounded counts not symmetric at m=" + std::to_string(m), detail);
        ok &= expect(partitions::is_unimodal(seq),
                     "bounded counts not unimodal at m=" + std::to_string(m), detail);
    }
    for (int m = 2; m <= 10; ++m) {
        const Poly1 closed = closed_forms::total_poincare(m).at_s1();
        ok &= expect(partitions::is_unimodal(even_part(closed, 6 * m)) &&
                         partitions::is_unimodal(odd_part(closed, 6 * m)),
                     "closed Betti sequences not unimodal at m=" + std::to_string(m), detail);
    }
    for (int m = 2; m <= 6; ++m) {
        KrizComplex cx(m);
        const Poly1 computed = poincare(cx).at_s1();
        ok &= expect(partitions::is_unimodal(even_part(computed, 6 * m)) &&
                         partitions::is_unimodal(odd_part(computed, 6 * m)),
                     "computed Betti sequences not unimodal at m=" + std::to_string(m), detail);
    }
    return ok;
}

bool criterion_presentations(std::string& detail) {
    bool ok = true;
    for (int m = 2; m <= 4; ++m) {
        KrizComplex cx(m);
        Poly1 cocycle_table, invariant_table;
        for (int q = 0; q <= 2; ++q)
            for (int k : cx.degrees(q)) {
                if (const int z = cocycle_dim(cx, q, k); z != 0) cocycle_table.add_term(k, z);
                if (const int z = cocycle_dim_isotypic(cx, Irrep::Trivial, q, k); z != 0)
                    invariant_table.add_term(k, z);
            }
        const std::vector<std::pair<std::string, Poly1>> targets = {
            {"ordered", closed_forms::total_poincare(m).at_s1()},
            {"unordered", closed_forms::invariant_poincare(m).at_s1()},
            {"cocycle", cocycle_table},
            {"invariant-cocycle", invariant_table}};
        for (const auto& [which, target] : targets)
            ok &= expect(
                presentations::verify_presentation(presentations::presentation_by_name(which, m),
                                                   target, 6 * m, 4),
                which + " presentation misses its Hilbert table at m=" + std::to_string(m),
                detail);
    }
    return ok;
}

bool criterion_stable(std::string& detail) {
    bool ok = true;
    for (int m = 2; m <= 6; ++m) {
        KrizComplex cx(m);
        ok &= expect(stable_range_check(cx),
                     "Betti numbers leave the stable series at m=" + std::to_string(m), detail);
    }
    const auto& alg = presentations::power_sum_algebra();
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const Rat a = make_rat(num(rng), den(rng));
        const Rat b = make_rat(num(rng), den(rng));
        const Rat c = make_rat(num(rng), den(rng));
        const std::vector<Rat> ps{a + b + c, a * a + b * b + c * c, a * a * a + b * b * b + c * c * c};
        Rat pa = 1, pb = 1, pc = 1;
        for (int k = 0; k <= 12; ++k) {
            const Rat direct = pa + pb + pc;
            if (alg.eval(presentations::newton_p(k), ps) != direct)
                return expect(false,
                              "power-sum substitution fails at k=" + std::to_string(k) +
                                  " trial " + std::to_string(trial),
                              detail);
            pa *= a;
            pb *= b;
            pc *= c;
        }
    }
    return ok;
}

bool criterion_collinear(std::string& detail) {
    bool ok = true;
    for (int m = 2; m <= 8; ++m) {
        try {
            // Both builders cross-check their product and rational forms.
            closed_forms::collinear_poincare(m);
            closed_forms::noncollinear_poincare(m);
        } catch (const std::exception& e) {
            return expect(false,
                          "factorization identity fails at m=" + std::to_string(m) + ": " +
                              e.what(),
                          detail);
        }
    }
    ok &= expect(closed_forms::collinear_poincare(2) ==
                     poly1_of({{0, 1}, {2, 1}, {5, 1}, {7, 1}}),
                 "collinear expansion differs at m=2", detail);
    ok &= expect(closed_forms::noncollinear_poincare(2) ==
                     poly1_of({{0, 1}, {2, 2}, {4, 2}, {6, 1}}),
                 "non-collinear expansion differs at m=2", detail);
    return ok;
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = CONF3_BIN " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool criterion_determinism(std::string& detail) {
    const CliRun serial = run_cli("verify --suite all --m-range 2..4 --parallelism 1");
    const CliRun parallel = run_cli("verify --suite all --m-range 2..4 --parallelism 8");
    bool ok = expect(serial.exit_code == 0, "serial run exited " +
                                                std::to_string(serial.exit_code),
                     detail);
    ok &= expect(parallel.exit_code == 0,
                 "parallel run exited " + std::to_string(parallel.exit_code), detail);
    ok &= expect(!serial.out.empty(), "serial run produced no output", detail);
    ok &= expect(serial.out == parallel.out, "outputs differ between parallelism 1 and 8",
                 detail);
    return ok;
}

struct Criterion {
    std::string label;
    double limit_sec;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"printed isotypic Poincare fixtures (m=2..4)", 10.0, criterion_printed_fixtures},
        {"total Poincare equals the closed product form (m=1..6)", 60.0,
         criterion_total_poincare},
        {"trace multiplicities match the closed table with duality (m=2..6)", 0.0,
         criterion_multiplicities},
        {"differential, action and projector identities on every block (m=1..6)", 0.0,
         criterion_structural},
        {"explicit cocycles and kernel tables (m=2..5)", 0.0, criterion_elements},
        {"partition counts, symmetry and unimodality (m<=20, k<=60)", 0.0, criterion_partitions},
        {"presentations realize their Hilbert tables (m=2..4)", 60.0, criterion_presentations},
        {"stable range and power-sum substitution", 0.0, criterion_stable},
        {"collinear and non-collinear factorizations (m=2..8)", 0.0, criterion_collinear},
        {"verification CLI determinism across parallelism", 120.0, criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.limit_sec > 0 && sec > c.limit_sec) {
            ok = false;
            detail = "runtime " + std::to_string(sec) + "s exceeds " +
                     std::to_string(c.limit_sec) + "s";
        }
        std::printf("%s  criterion %2zu: %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    c.label.c_str(), sec, detail.empty() ? "" : "  -- ",
                    detail.c_str());
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
