#include "conf3/presentations.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace conf3::presentations {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Merges exponent vectors with the sign from moving b's odd factors left past
// a's higher-indexed odd factors; false when an odd generator repeats.
bool merge(const std::vector<GradedGenerator>& gens, const Mono& a, const Mono& b, Mono& out,
           int& sign) {
    const size_t n = gens.size();
    out.assign(n, 0);
    int crossings = 0;
    int odd_suffix = 0;  // odd factors of a at indices past the current one
    for (size_t i = n; i-- > 0;) {
        if (gens[i].odd) {
            if (b[i]) {
                if (a[i]) return false;
                crossings += odd_suffix;
            }
            if (a[i]) ++odd_suffix;
        }
        out[i] = a[i] + b[i];
    }
    sign = (crossings % 2) ? -1 : 1;
    return true;
}

Rat rat_pow(const Rat& base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Maintains a fully reduced row basis; rank queries are exact at every step.
class RankAccumulator {
public:
    explicit RankAccumulator(size_t ncols) : ncols_(ncols) {}

    bool insert(std::vector<Rat> v) {
        for (const auto& [pc, row] : rows_) {
            if (v[pc] == 0) continue;
            const Rat f = v[pc];
            for (size_t c = 0; c < ncols_; ++c)
                if (row[c] != 0) v[c] -= f * row[c];
        }
        size_t p = ncols_;
        for (size_t c = 0; c < ncols_; ++c)
            if (v[c] != 0) {
                p = c;
                break;
            }
        if (p == ncols_) return false;
        const Rat inv = Rat(1) / v[p];
        for (auto& x : v) x *= inv;
        for (auto& [pc, row] : rows_) {
            if (row[p] == 0) continue;
            const Rat f = row[p];
            for (size_t c = 0; c < ncols_; ++c)
                if (v[c] != 0) row[c] -= f * v[c];
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    size_t rank() const { return rows_.size(); }

private:
    size_t ncols_;
    std::map<size_t, std::vector<Rat>> rows_;
};

}  // namespace

void gp_add_term(GradedPoly& p, const Mono& mono, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = p.try_emplace(mono, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) p.erase(it);
}

GradedPoly gp_add(GradedPoly a, const GradedPoly& b) {
    for (const auto& [mo, c] : b) gp_add_term(a, mo, c);
    return a;
}

GradedPoly gp_sub(GradedPoly a, const GradedPoly& b) {
    for (const auto& [mo, c] : b) gp_add_term(a, mo, -c);
    return a;
}

GradedPoly gp_scale(GradedPoly p, const Rat& c) {
    if (c == 0) return {};
    for (auto& [mo, coef] : p) coef *= c;
    return p;
}

GradedAlgebra::GradedAlgebra(std::vector<GradedGenerator> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_)
        require(g.degree >= 1, "GradedAlgebra: generator degrees must be positive");
}

int GradedAlgebra::degree(const Mono& mono) const {
    require(mono.size() == gens_.size(), "degree: exponent count mismatch");
    int d = 0;
    for (size_t i = 0; i < gens_.size(); ++i) d += mono[i] * gens_[i].degree;
    return d;
}

bool GradedAlgebra::is_homogeneous(const GradedPoly& p, int& degree_out) const {
    degree_out = p.empty() ? 0 : degree(p.begin()->first);
    for (const auto& [mo, c] : p)
        if (degree(mo) != degree_out) return false;
    return true;
}

GradedPoly GradedAlgebra::mul(const GradedPoly& a, const GradedPoly& b) const {
    GradedPoly out;
    Mono merged;
    int sign = 1;
    for (const auto& [am, ac] : a)
        for (const auto& [bm, bc] : b) {
            if (!merge(gens_, am, bm, merged, sign)) continue;
            gp_add_term(out, merged, sign > 0 ? Rat(ac * bc) : Rat(-ac * bc));
        }
    return out;
}

GradedPoly GradedAlgebra::mul_mono(const Mono& mono, const GradedPoly& p) const {
    GradedPoly out;
    Mono merged;
    int sign = 1;
    for (const auto& [bm, bc] : p) {
        if (!merge(gens_, mono, bm, merged, sign)) continue;
        gp_add_term(out, merged, sign > 0 ? bc : Rat(-bc));
    }
    return out;
}

std::vector<Mono> GradedAlgebra::monomials(int degree) const {
    std::vector<Mono> out;
    if (degree < 0) return out;
    Mono cur(gens_.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
        if (i == gens_.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        const int cap = gens_[i].odd ? 1 : rem / gens_[i].degree;
        for (int e = 0; e <= cap && e * gens_[i].degree <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e * gens_[i].degree);
        }
        cur[i] = 0;
    };
    rec(0, degree);
    return out;
}

Rat GradedAlgebra::eval(const GradedPoly& p, const std::vector<Rat>& values) const {
    require(values.size() == gens_.size(), "eval: value count mismatch");
    Rat out(0);
    for (const auto& [mo, c] : p) {
        Rat term = c;
        for (size_t i = 0; i < gens_.size(); ++i) term *= rat_pow(values[i], mo[i]);
        out += term;
    }
    return out;
}

std::string GradedAlgebra::str(const GradedPoly& p) const {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mo, c] : p) {
        const bool neg = sgn(c) < 0;
        const Rat mag = neg ? Rat(-c) : c;
        std::string mono_str;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (!mo[i]) continue;
            if (!mono_str.empty()) mono_str += "*";
            mono_str += gens_[i].name;
            if (mo[i] > 1) mono_str += "^" + std::to_string(mo[i]);
        }
        std::string term;
        if (mono_str.empty())
            term = mag.get_str();
        else if (mag == 1)
            term = mono_str;
        else
            term = mag.get_str() + "*" + mono_str;
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

const GradedAlgebra& power_sum_algebra() {
    static const GradedAlgebra alg(
        {{"p1", 2, false}, {"p2", 4, false}, {"p3", 6, false}});
    return alg;
}

GradedPoly newton_p(int k) {
    require(k >= 0, "newton_p: k must be >= 0");
    static std::mutex mu;
    const std::scoped_lock lock(mu);
    static std::vector<GradedPoly> cache;
    static GradedPoly e1, e2, e3;
    if (cache.empty()) {
        cache.resize(4);
        gp_add_term(cache[0], {0, 0, 0}, 3);
        gp_add_term(cache[1], {1, 0, 0}, 1);
        gp_add_term(cache[2], {0, 1, 0}, 1);
        gp_add_term(cache[3], {0, 0, 1}, 1);
        gp_add_term(e1, {1, 0, 0}, 1);
        gp_add_term(e2, {2, 0, 0}, Rat(1, 2));
        gp_add_term(e2, {0, 1, 0}, Rat(-1, 2));
        gp_add_term(e3, {3, 0, 0}, Rat(1, 6));
        gp_add_term(e3, {1, 1, 0}, Rat(-1, 2));
        gp_add_term(e3, {0, 0, 1}, Rat(1, 3));
    }
    const GradedAlgebra& alg = power_sum_algebra();
    while (cache.size() <= static_cast<size_t>(k)) {
        const size_t n = cache.size();
        cache.push_back(gp_add(gp_sub(alg.mul(e1, cache[n - 1]), alg.mul(e2, cache[n - 2])),
                               alg.mul(e3, cache[n - 3])));
    }
    return cache[k];
}

Presentation ordered_presentation(int m) {
    require(m >= 2, "ordered_presentation: m must be >= 2");
    GradedAlgebra alg({{"x1", 2, false},
                       {"x2", 2, false},
                       {"x3", 2, false},
                       {"eta", 4 * m - 1, true}});
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<GradedPoly> rels;

    GradedPoly trunc;
    gp_add_term(trunc, {m + 1, 0, 0, 0}, 1);
    rels.push_back(trunc);

    for (const auto& [i, j] : pairs) {
        GradedPoly r;
        for (int u = 0; u <= m; ++u) {
            Mono mo(4, 0);
            mo[i] = u;
            mo[j] = m - u;
            gp_add_term(r, mo, 1);
        }
        rels.push_back(r);
    }

    for (const auto& [i, j] : pairs) {
        GradedPoly r;
        Mono mi(4, 0), mj(4, 0);
        mi[i] = mi[3] = 1;
        mj[j] = mj[3] = 1;
        gp_add_term(r, mi, 1);
        gp_add_term(r, mj, -1);
        rels.push_back(r);
    }

    GradedPoly top;
    gp_add_term(top, {m, 0, 0, 1}, 1);
    rels.push_back(top);

    return {std::move(alg), std::move(rels)};
}

namespace {

// Widens a power-sum polynomial to the four-generator algebra, optionally
// multiplying by eta (even factors pass eta without sign).
GradedPoly lift_to_eta(const GradedPoly& p, bool with_eta) {
    GradedPoly out;
    for (const auto& [mo, c] : p) gp_add_term(out, {mo[0], mo[1], mo[2], with_eta ? 1 : 0}, c);
    return out;
}

std::vector<GradedPoly> invariant_cocycle_relations(int m) {
    std::vector<GradedPoly> rels;
    rels.push_back(lift_to_eta(newton_p(m + 1), false));
    rels.push_back(lift_to_eta(newton_p(m + 2), false));
    rels.push_back(lift_to_eta(newton_p(m + 3), false));
    GradedPoly q1;  // (tau1^2 - 3 tau2) eta
    gp_add_term(q1, {2, 0, 0, 1}, 1);
    gp_add_term(q1, {0, 1, 0, 1}, -3);
    rels.push_back(q1);
    GradedPoly q2;  // (tau1 tau2 - 3 tau3) eta
    gp_add_term(q2, {1, 1, 0, 1}, 1);
    gp_add_term(q2, {0, 0, 1, 1}, -3);
    rels.push_back(q2);
    rels.push_back(lift_to_eta(newton_p(m), true));
    return rels;
}

GradedAlgebra tau_eta_algebra(int m) {
    return GradedAlgebra({{"tau1", 2, false},
                          {"tau2", 4, false},
                          {"tau3", 6, false},
                          {"eta", 4 * m - 1, true}});
}

}  // namespace

Presentation unordered_presentation(int m) {
    require(m >= 2, "unordered_presentation: m must be >= 2");
    const GradedAlgebra& ps = power_sum_algebra();
    std::vector<GradedPoly> rels = invariant_cocycle_relations(m);

    // Quadratic closures of the truncation ideal in the power sums.
    GradedPoly qr0, qr1, qr2;
    for (int i = 0; i <= m; ++i) qr0 = gp_add(qr0, ps.mul(newton_p(i), newton_p(m - i)));
    qr0 = gp_sub(qr0, gp_scale(newton_p(m), m + 1));
    for (int i = 1; i <= m; ++i) qr1 = gp_add(qr1, ps.mul(newton_p(i), newton_p(m + 1 - i)));
    for (int i = 2; i <= m; ++i) qr2 = gp_add(qr2, ps.mul(newton_p(i), newton_p(m + 2 - i)));
    rels.push_back(lift_to_eta(qr0, false));
    rels.push_back(lift_to_eta(qr1, false));
    rels.push_back(lift_to_eta(qr2, false));

    return {tau_eta_algebra(m), std::move(rels)};
}

Presentation invariant_cocycle_presentation(int m) {
    require(m >= 2, "invariant_cocycle_presentation: m must be >= 2");
    return {tau_eta_algebra(m), invariant_cocycle_relations(m)};
}

Presentation cocycle_presentation(int m) {
    require(m >= 2, "cocycle_presentation: m must be >= 2");
    GradedAlgebra alg({{"a1", 2, false},
                       {"a2", 2, false},
                       {"a3", 2, false},
                       {"w", 4 * m - 1, true},
                       {"v1", 4 * m - 1, true},
                       {"v2", 4 * m - 1, true}});
    const auto gen = [](int idx) {
        GradedPoly p;
        Mono mo(6, 0);
        mo[idx] = 1;
        gp_add_term(p, mo, 1);
        return p;
    };
    const auto power_sum = [](int k) {
        GradedPoly p;
        for (int i = 0; i < 3; ++i) {
            Mono mo(6, 0);
            mo[i] = k;
            gp_add_term(p, mo, 1);
        }
        return p;
    };
    const GradedPoly w = gen(3), v1 = gen(4), v2 = gen(5);
    std::vector<GradedPoly> rels;

    for (int i = 0; i < 3; ++i) {
        GradedPoly r;
        Mono mo(6, 0);
        mo[i] = m + 1;
        gp_add_term(r, mo, 1);
        rels.push_back(r);
    }
    rels.push_back(alg.mul(power_sum(m), w));
    const std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    for (const GradedPoly& v : {v1, v2})
        for (const auto& [i, j] : pairs)
            rels.push_back(alg.mul(gp_sub(gen(i), gen(j)), v));
    rels.push_back(alg.mul(v1, v2));
    rels.push_back(alg.mul(v1, w));
    rels.push_back(alg.mul(v2, w));
    const GradedPoly s1 = power_sum(1), s2 = power_sum(2), s3 = power_sum(3);
    rels.push_back(alg.mul(gp_sub(alg.mul(s1, s1), gp_scale(s2, 3)), w));
    rels.push_back(alg.mul(gp_sub(alg.mul(s1, s2), gp_scale(s3, 3)), w));

    // Scalar multiplication rows: a_i w in terms of s1 w and a1 v_j.
    const GradedPoly s1w_third = gp_scale(alg.mul(s1, w), Rat(1, 3));
    const GradedPoly a1v1 = alg.mul(gen(0), v1), a1v2 = alg.mul(gen(0), v2);
    rels.push_back(gp_add(gp_sub(alg.mul(gen(0), w), s1w_third),
                          gp_sub(a1v1, gp_scale(a1v2, 2))));
    rels.push_back(gp_add(gp_sub(alg.mul(gen(1), w), s1w_third),
                          gp_sub(a1v2, gp_scale(a1v1, 2))));
    rels.push_back(gp_add(gp_sub(alg.mul(gen(2), w), s1w_third), gp_add(a1v1, a1v2)));

    return {std::move(alg), std::move(rels)};
}

Presentation presentation_by_name(const std::string& which, int m) {
    if (which == "ordered") return ordered_presentation(m);
    if (which == "unordered") return unordered_presentation(m);
    if (which == "cocycle") return cocycle_presentation(m);
    if (which == "invariant-cocycle") return invariant_cocycle_presentation(m);
    throw std::invalid_argument("unknown presentation: " + which);
}

Poly1 hilbert(const Presentation& pres, int max_deg) {
    require(max_deg >= 0, "hilbert: max_deg must be >= 0");
    const GradedAlgebra& alg = pres.algebra;
    std::vector<std::pair<const GradedPoly*, int>> rels;
    for (const auto& r : pres.relations) {
        if (r.empty()) continue;
        int deg = 0;
        if (!alg.is_homogeneous(r, deg))
            throw std::invalid_argument("hilbert: relations must be homogeneous");
        rels.emplace_back(&r, deg);
    }
    Poly1 out;
    for (int d = 0; d <= max_deg; ++d) {
        const std::vector<Mono> monos = alg.monomials(d);
        if (monos.empty()) continue;
        std::map<Mono, size_t> index;
        for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
        RankAccumulator acc(monos.size());
        bool saturated = false;
        for (const auto& [r, rdeg] : rels) {
            if (rdeg > d) continue;
            for (const Mono& u : alg.monomials(d - rdeg)) {
                const GradedPoly prod = alg.mul_mono(u, *r);
                if (prod.empty()) continue;
                std::vector<Rat> row(monos.size(), Rat(0));
                for (const auto& [mo, c] : prod) row[index.at(mo)] = c;
                if (acc.insert(std::move(row)) && acc.rank() == monos.size()) {
                    saturated = true;
                    break;
                }
            }
            if (saturated) break;
        }
        const Int dim = Int(static_cast<unsigned long>(monos.size())) -
                        Int(static_cast<unsigned long>(acc.rank()));
        if (dim != 0) out.add_term(d, dim);
    }
    return out;
}

bool verify_presentation(const Presentation& pres, const Poly1& expected, int max_deg,
                         int window) {
    require(window >= 0, "verify_presentation: window must be >= 0");
    const Poly1 h = hilbert(pres, max_deg + window);
    for (int d = 0; d <= max_deg; ++d)
        if (h.coeff(d) != expected.coeff(d)) return false;
    for (int d = max_deg + 1; d <= max_deg + window; ++d)
        if (h.coeff(d) != 0) return false;
    return true;
}

std::string str(const Presentation& pres) {
    std::string out = "generators:";
    for (const auto& g : pres.algebra.gens()) {
        out += " " + g.name + "(" + std::to_string(g.degree) + (g.odd ? ", odd)" : ")");
    }
    out += "\nrelations:\n";
    for (const auto& r : pres.relations) out += "  " + pres.algebra.str(r) + "\n";
    return out;
}

}  // namespace conf3::presentations
