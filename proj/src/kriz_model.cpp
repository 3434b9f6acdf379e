#include "conf3/kriz_model.hpp"

#include <sstream>
#include <stdexcept>

namespace conf3 {

int degree(const BasisMonomial& b, int m) { return 2 * b.exp_sum() + b.q() * (2 * m - 1); }

Rat ModelElement::coeff(const BasisMonomial& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ModelElement::add(const BasisMonomial& b, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ModelElement& ModelElement::operator+=(const ModelElement& o) {
    if (m_ != o.m_) throw std::invalid_argument("mixed truncation orders");
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

ModelElement& ModelElement::operator-=(const ModelElement& o) {
    if (m_ != o.m_) throw std::invalid_argument("mixed truncation orders");
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

ModelElement ModelElement::scaled(const Rat& c) const {
    ModelElement out(m_);
    if (c == 0) return out;
    for (const auto& [b, v] : terms_) out.terms_.emplace(b, v * c);
    return out;
}

std::string ModelElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::vector<std::string> parts;
        for (int i = 0; i < 3; ++i) {
            if (b.exps[static_cast<size_t>(i)] == 0) continue;
            std::string p = "x" + std::to_string(i + 1);
            if (b.exps[static_cast<size_t>(i)] > 1) p += "^" + std::to_string(b.exps[static_cast<size_t>(i)]);
            parts.push_back(p);
        }
        for (const auto& [i, j] : b.pairs) parts.push_back("G" + std::to_string(i) + std::to_string(j));
        if (parts.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
        }
        first = false;
    }
    return os.str();
}

namespace {

void validate_pairs(const PairList& pairs) {
    for (const auto& [i, j] : pairs) {
        if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw std::invalid_argument("pair indices must be distinct and within 1..3");
    }
}

}  // namespace

ModelElement normal_form(int m, const RawTerm& t0) {
    validate_pairs(t0.pairs);
    for (int e : t0.exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
    ModelElement out(m);
    std::vector<RawTerm> work{t0};
    while (!work.empty()) {
        RawTerm t = std::move(work.back());
        work.pop_back();
        if (t.coeff == 0) continue;
        for (auto& p : t.pairs)
            if (p.first > p.second) std::swap(p.first, p.second);
        size_t n = t.pairs.size();
        for (size_t i = 0; i + 1 < n; ++i)
            for (size_t j = 0; j + 1 < n - i; ++j)
                if (t.pairs[j + 1] < t.pairs[j]) {
                    std::swap(t.pairs[j], t.pairs[j + 1]);
                    t.coeff = -t.coeff;
                }
        bool dup = false;
        for (size_t i = 0; i + 1 < n; ++i)
            if (t.pairs[i] == t.pairs[i + 1]) dup = true;
        if (dup) continue;
        // adjacent G13 G23 rewrites to G12 G23 - G12 G13
        bool rewritten = false;
        for (size_t i = 0; i + 1 < n; ++i) {
            if (t.pairs[i] == IndexPair{1, 3} && t.pairs[i + 1] == IndexPair{2, 3}) {
                RawTerm u = t;
                u.pairs[i] = {1, 2};
                work.push_back(std::move(u));
                RawTerm v = t;
                v.pairs[i] = {1, 2};
                v.pairs[i + 1] = {1, 3};
                v.coeff = -v.coeff;
                work.push_back(std::move(v));
                rewritten = true;
                break;
            }
        }
        if (rewritten) continue;
        bool moved = true;
        while (moved) {
            moved = false;
            for (const auto& [i, j] : t.pairs) {
                if (t.exps[static_cast<size_t>(j - 1)] != 0) {
                    t.exps[static_cast<size_t>(i - 1)] += t.exps[static_cast<size_t>(j - 1)];
                    t.exps[static_cast<size_t>(j - 1)] = 0;
                    moved = true;
                }
            }
        }
        if (t.exps[0] > m || t.exps[1] > m || t.exps[2] > m) continue;
        out.add(BasisMonomial{std::move(t.pairs), t.exps}, t.coeff);
    }
    return out;
}

ModelElement multiply(const ModelElement& a, const ModelElement& b) {
    if (a.trunc_order() != b.trunc_order()) throw std::invalid_argument("mixed truncation orders");
    int m = a.trunc_order();
    ModelElement out(m);
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            RawTerm t;
            t.pairs = ba.pairs;
            t.pairs.insert(t.pairs.end(), bb.pairs.begin(), bb.pairs.end());
            for (size_t i = 0; i < 3; ++i) t.exps[i] = ba.exps[i] + bb.exps[i];
            t.coeff = ca * cb;
            out += normal_form(m, t);
        }
    return out;
}

ModelElement diff(const ModelElement& a) {
    int m = a.trunc_order();
    ModelElement out(m);
    for (const auto& [b, c] : a.terms()) {
        for (size_t pos = 0; pos < b.pairs.size(); ++pos) {
            auto [i, j] = b.pairs[pos];
            PairList rest;
            for (size_t u = 0; u < b.pairs.size(); ++u)
                if (u != pos) rest.push_back(b.pairs[u]);
            Rat sign = (pos % 2 == 0) ? c : -c;
            for (int x = 0; x <= m; ++x) {
                RawTerm r;
                r.pairs = rest;
                r.exps = b.exps;
                r.exps[static_cast<size_t>(i - 1)] += x;
                r.exps[static_cast<size_t>(j - 1)] += m - x;
                r.coeff = sign;
                out += normal_form(m, r);
            }
        }
    }
    return out;
}

ModelElement unit_elem(int m) {
    ModelElement e(m);
    e.add(BasisMonomial{}, 1);
    return e;
}

ModelElement x_slot(int m, int slot, int k) {
    if (slot < 1 || slot > 3 || k < 0) throw std::invalid_argument("bad slot or exponent");
    ModelElement e(m);
    if (k > m) return e;
    BasisMonomial b;
    b.exps[static_cast<size_t>(slot - 1)] = k;
    e.add(b, 1);
    return e;
}

ModelElement t_elem(int m, int k) {
    ModelElement e(m);
    for (int slot = 1; slot <= 3; ++slot) e += x_slot(m, slot, k);
    return e;
}

ModelElement g_elem(int m, int i, int j) { return normal_form(m, RawTerm{{{i, j}}, {0, 0, 0}, 1}); }

ModelElement frame_vector(int m, int a) {
    if (a < 0 || a > m) throw std::invalid_argument("frame index out of range");
    ModelElement e(m);
    e += normal_form(m, RawTerm{{{1, 2}}, {m - a, 0, a}, 1});
    e += normal_form(m, RawTerm{{{1, 3}}, {m - a, a, 0}, 1});
    e += normal_form(m, RawTerm{{{2, 3}}, {a, m - a, 0}, 1});
    return e;
}

ModelElement w_elem(int m) {
    ModelElement e(m);
    for (int a = 0; a <= m; ++a) e += frame_vector(m, a).scaled(Rat(2 * m - 3 * a));
    return e;
}

ModelElement v_elem(int m, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("bad index");
    ModelElement e(m);
    IndexPair plus = which == 1 ? IndexPair{1, 3} : IndexPair{2, 3};
    for (int a = 0; a <= m; ++a) {
        e += normal_form(m, RawTerm{{plus}, {m - a, a, 0}, 1});
        e += normal_form(m, RawTerm{{{1, 2}}, {m - a, 0, a}, -1});
    }
    return e;
}

ModelElement b_elem(int m, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    ModelElement e(m);
    e += normal_form(m, RawTerm{{{1, 2}}, {i, 0, j}, 1});
    e += normal_form(m, RawTerm{{{1, 3}}, {i, j, 0}, 1});
    e += normal_form(m, RawTerm{{{2, 3}}, {j, i, 0}, 1});
    return e;
}

ModelElement gamma_elem(int m, int k) { return b_elem(m, k, 0); }

KrizComplex::KrizComplex(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("truncation order must be positive");
    for (int e1 = 0; e1 <= m; ++e1)
        for (int e2 = 0; e2 <= m; ++e2)
            for (int e3 = 0; e3 <= m; ++e3) {
                BasisMonomial b{{}, {e1, e2, e3}};
                bases_[{0, degree(b, m)}].push_back(b);
            }
    const std::array<IndexPair, 3> single{{{1, 2}, {1, 3}, {2, 3}}};
    for (const auto& p : single) {
        for (int e1 = 0; e1 <= m; ++e1)
            for (int e2 = 0; e2 <= m; ++e2)
                for (int e3 = 0; e3 <= m; ++e3) {
                    std::array<int, 3> e{e1, e2, e3};
                    if (e[static_cast<size_t>(p.second - 1)] != 0) continue;
                    BasisMonomial b{{p}, e};
                    bases_[{1, degree(b, m)}].push_back(b);
                }
    }
    const std::array<PairList, 2> doubles{{{{1, 2}, {1, 3}}, {{1, 2}, {2, 3}}}};
    for (const auto& pl : doubles)
        for (int K = 0; K <= m; ++K) {
            BasisMonomial b{pl, {K, 0, 0}};
            bases_[{2, degree(b, m)}].push_back(b);
        }
    for (const auto& [qk, blk] : bases_)
        for (int i = 0; i < static_cast<int>(blk.size()); ++i) index_.emplace(blk[static_cast<size_t>(i)], i);
}

int KrizComplex::dim(int q, int k) const {
    auto it = bases_.find({q, k});
    return it == bases_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<BasisMonomial>& KrizComplex::basis(int q, int k) const {
    static const std::vector<BasisMonomial> empty;
    auto it = bases_.find({q, k});
    return it == bases_.end() ? empty : it->second;
}

std::vector<int> KrizComplex::degrees(int q) const {
    std::vector<int> out;
    for (const auto& [qk, blk] : bases_)
        if (qk.first == q && !blk.empty()) out.push_back(qk.second);
    return out;
}

const SparseMatrixQ& KrizComplex::diff_matrix(int q, int k) const {
    if (q < 0 || q > 3) throw std::invalid_argument("q out of range");
    auto key = std::make_pair(q, k);
    auto it = diffs_.find(key);
    if (it != diffs_.end()) return it->second;
    SparseMatrixQ d(dim(q - 1, k + 1), dim(q, k));
    const auto& src = basis(q, k);
    for (int col = 0; col < static_cast<int>(src.size()); ++col) {
        ModelElement e(m_);
        e.add(src[static_cast<size_t>(col)], 1);
        ModelElement de = diff(e);
        for (const auto& [b, c] : de.terms()) d.set(index_.at(b), col, c);
    }
    return diffs_.emplace(key, std::move(d)).first->second;
}

std::vector<Rat> KrizComplex::coords(const ModelElement& e, int q, int k) const {
    if (e.trunc_order() != m_) throw std::invalid_argument("mixed truncation orders");
    std::vector<Rat> v(static_cast<size_t>(dim(q, k)), Rat(0));
    for (const auto& [b, c] : e.terms()) {
        if (b.q() != q || degree(b, m_) != k) throw std::invalid_argument("element does not lie in the requested block");
        v[static_cast<size_t>(index_.at(b))] = c;
    }
    return v;
}

ModelElement KrizComplex::from_coords(int q, int k, const std::vector<Rat>& v) const {
    const auto& blk = basis(q, k);
    if (v.size() != blk.size()) throw std::invalid_argument("coordinate length mismatch");
    ModelElement e(m_);
    for (size_t i = 0; i < v.size(); ++i) e.add(blk[i], v[i]);
    return e;
}

}  // namespace conf3
