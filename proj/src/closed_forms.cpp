#include "conf3/closed_forms.hpp"

#include "conf3/partitions.hpp"

#include <stdexcept>

namespace conf3::closed_forms {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Even-step geometric block t^lo + t^{lo+2} + ... + t^hi (empty if hi < lo).
Poly1 even_block(int lo, int hi) {
    Poly1 p;
    for (int d = lo; d <= hi; d += 2) p.add_term(d, 1);
    return p;
}

}  // namespace

Poly1 c_poly(int m) {
    require(m >= 0, "c_poly: m must be >= 0");
    return even_block(0, 2 * m);
}

Poly2 total_poincare(int m) {
    require(m >= 1, "total_poincare: m must be >= 1");
    const Poly1 c = c_poly(m - 1);
    Poly2 out(c * c * c);
    for (const auto& [d, coef] : c.coeffs()) out.add_term(4 * m - 1 + d, 1, coef);
    return out;
}

Poly2 invariant_poincare(int m) {
    require(m >= 2, "invariant_poincare: m must be >= 2");
    Poly2 out;
    for (int k = 0; k <= m - 1; ++k) out.add_term(2 * k, 0, partitions::p3_bounded(m, k));
    for (int k = m; k <= 2 * m - 1; ++k)
        out.add_term(2 * k, 0, partitions::p3_bounded(m, k) + (m - k - 1));
    for (int k = 2 * m; k <= 3 * m - 1; ++k)
        out.add_term(2 * k, 0, partitions::p3_bounded(m, k) + (k - 3 * m));
    for (int k = 2 * m; k <= 3 * m - 1; ++k) out.add_term(2 * k - 1, 1, 1);
    return out;
}

Poly2 standard_poincare(int m) {
    require(m >= 2, "standard_poincare: m must be >= 2");
    const auto mu21 = [m](int k) { return partitions::multiplicities(m, k).mu21; };
    const int lo = (3 * m) / 2;       // floor(3m/2)
    const int hi = (3 * m + 1) / 2;   // ceil(3m/2)
    Poly2 out;
    for (int k = 1; k <= m - 1; ++k) out.add_term(2 * k, 0, 2 * mu21(k));
    for (int k = m; k <= lo; ++k) out.add_term(2 * k, 0, 2 * (mu21(k) - k + m - 1));
    // For even m the k = 3m/2 term belongs to both middle sums; count it once.
    for (int k = (lo == hi ? hi + 1 : hi); k <= 2 * m - 1; ++k)
        out.add_term(2 * k, 0, 2 * (mu21(3 * m - k) - k + m - 1));
    for (int k = 2 * m; k <= 3 * m - 1; ++k)
        out.add_term(2 * k, 0, 2 * (mu21(3 * m - k) - 3 * m + k));
    return out;
}

Poly2 sign_poincare(int m) {
    require(m >= 2, "sign_poincare: m must be >= 2");
    const auto mu111 = [m](int k) { return partitions::multiplicities(m, k).mu111; };
    const int lo = (3 * m) / 2;
    const int hi = (3 * m + 1) / 2;
    Poly2 out;
    for (int k = 3; k <= lo; ++k) out.add_term(2 * k, 0, mu111(k));
    for (int k = (lo == hi ? hi + 1 : hi); k <= 3 * m - 3; ++k)
        out.add_term(2 * k, 0, mu111(3 * m - k));
    return out;
}

Poly1 collinear_poincare(int m) {
    require(m >= 2, "collinear_poincare: m must be >= 2");
    Poly1 product = (Poly1::term(0) + Poly1::term(2 * m + 1)) * c_poly(m - 1);
    // Rational form: (1 + t^{2m+1})(1 - t^{2m}) / (1 - t^2).
    Poly1 one_minus_t2 = Poly1::term(0) - Poly1::term(2);
    Poly1 numerator = (Poly1::term(0) + Poly1::term(2 * m + 1)) *
                      (Poly1::term(0) - Poly1::term(2 * m));
    if (product * one_minus_t2 != numerator)
        throw std::logic_error("collinear_poincare: product and rational forms disagree");
    return product;
}

Poly1 noncollinear_poincare(int m) {
    require(m >= 2, "noncollinear_poincare: m must be >= 2");
    Poly1 product = c_poly(m - 2) * c_poly(m - 1) * c_poly(m);
    Poly1 one_minus_t2 = Poly1::term(0) - Poly1::term(2);
    Poly1 numerator = (Poly1::term(0) - Poly1::term(2 * m - 2)) *
                      (Poly1::term(0) - Poly1::term(2 * m)) *
                      (Poly1::term(0) - Poly1::term(2 * m + 2));
    if (product * one_minus_t2 * one_minus_t2 * one_minus_t2 != numerator)
        throw std::logic_error("noncollinear_poincare: product and rational forms disagree");
    return product;
}

Poly1 doubly_punctured_proj_poincare(int m) {
    require(m >= 2, "doubly_punctured_proj_poincare: m must be >= 2");
    return c_poly(m - 1) + Poly1::term(2 * m - 1);
}

Poly1 conf2_punctured_poincare(int m) {
    require(m >= 2, "conf2_punctured_poincare: m must be >= 2");
    Poly1 out;
    for (int j = 0; j <= m - 1; ++j) out.add_term(2 * j, j + 1);
    for (int j = m; j <= 2 * m - 3; ++j) out.add_term(2 * j, 2 * m - 2 - j);
    out.add_term(4 * m - 3, 1);
    return out;
}

Poly1 conf2_poincare(int m) {
    require(m >= 2, "conf2_poincare: m must be >= 2");
    return c_poly(m - 1) * c_poly(m);
}

Poly1 stable_series(int n, int max_deg) {
    require(n >= 1, "stable_series: n must be >= 1");
    require(max_deg >= 0, "stable_series: max_deg must be >= 0");
    const Poly1 factor = even_block(0, max_deg + 1);
    Poly1 out = Poly1::term(0);
    for (int i = 0; i < n; ++i) out = (out * factor).truncated(max_deg);
    return out;
}

bool total_expansion_consistent(int m) {
    require(m >= 2, "total_expansion_consistent: m must be >= 2");
    const Poly1 full = c_poly(m);  // 1 + t^2 + ... + t^{2m}
    const Poly1 cube = full * full * full;
    Poly1 correction = Poly1::term(2 * m, 3) * full * full -
                       even_block(4 * m, 6 * m - 2) -
                       even_block(4 * m, 6 * m) - even_block(4 * m, 6 * m);
    Poly2 expansion(cube - correction);
    for (int d = 4 * m - 1; d <= 6 * m - 3; d += 2) expansion.add_term(d, 1, 1);
    return expansion == total_poincare(m);
}

}  // namespace conf3::closed_forms
