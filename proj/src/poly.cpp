#include "conf3/poly.hpp"

#include <sstream>

namespace conf3 {

namespace {

// One monomial like "3t^4", "t", "-x^2", "7"; sign handled by the caller for
// all but the leading term.
void append_term(std::ostringstream& out, bool leading, const Int& c, const std::string& var,
                 int deg) {
    Int a = abs(c);
    if (leading) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || deg == 0) out << a.get_str();
    if (deg > 0) {
        out << var;
        if (deg > 1) out << "^" << deg;
    }
}

}  // namespace

Poly1 Poly1::term(int deg, const Int& c) {
    Poly1 p;
    p.add_term(deg, c);
    return p;
}

void Poly1::add_term(int deg, const Int& c) {
    if (c == 0) return;
    Int& slot = coeffs_[deg];
    slot += c;
    if (slot == 0) coeffs_.erase(deg);
}

Int Poly1::coeff(int deg) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int Poly1::max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Poly1 Poly1::operator+(const Poly1& o) const {
    Poly1 r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
    return r;
}

Poly1 Poly1::operator-(const Poly1& o) const {
    Poly1 r = *this;
    for (const auto& [d, c] : o.coeffs_) r.add_term(d, -c);
    return r;
}

Poly1 Poly1::operator*(const Poly1& o) const {
    Poly1 r;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

Poly1 Poly1::truncated(int max_deg) const {
    Poly1 r;
    for (const auto& [d, c] : coeffs_)
        if (d <= max_deg) r.add_term(d, c);
    return r;
}

std::vector<Int> Poly1::coeff_list(int through_deg) const {
    std::vector<Int> out(static_cast<size_t>(through_deg) + 1, Int(0));
    for (const auto& [d, c] : coeffs_)
        if (d >= 0 && d <= through_deg) out[static_cast<size_t>(d)] = c;
    return out;
}

std::string Poly1::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [d, c] : coeffs_) {
        append_term(out, leading, c, var, d);
        leading = false;
    }
    return out.str();
}

Poly2::Poly2(const Poly1& p) {
    for (const auto& [d, c] : p.coeffs()) coeffs_[{0, d}] = c;
}

Poly2 Poly2::term(int t_deg, int s_deg, const Int& c) {
    Poly2 p;
    p.add_term(t_deg, s_deg, c);
    return p;
}

void Poly2::add_term(int t_deg, int s_deg, const Int& c) {
    if (c == 0) return;
    Int& slot = coeffs_[{s_deg, t_deg}];
    slot += c;
    if (slot == 0) coeffs_.erase({s_deg, t_deg});
}

Int Poly2::coeff(int t_deg, int s_deg) const {
    auto it = coeffs_.find({s_deg, t_deg});
    return it == coeffs_.end() ? Int(0) : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.second, k.first, c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k.second, k.first, -c);
    return r;
}

Poly1 Poly2::s_slice(int s_deg) const {
    Poly1 r;
    for (const auto& [k, c] : coeffs_)
        if (k.first == s_deg) r.add_term(k.second, c);
    return r;
}

Poly1 Poly2::at_s1() const {
    Poly1 r;
    for (const auto& [k, c] : coeffs_) r.add_term(k.second, c);
    return r;
}

int Poly2::max_s_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.first; }

std::string Poly2::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first_group = true;
    for (int s = 0; s <= max_s_degree(); ++s) {
        Poly1 slice = s_slice(s);
        if (slice.is_zero()) continue;
        if (s == 0) {
            out << slice.str();
        } else {
            if (!first_group) out << " + ";
            out << "s";
            if (s > 1) out << "^" << s;
            out << "(" << slice.str() << ")";
        }
        first_group = false;
    }
    return out.str();
}

}  // namespace conf3
