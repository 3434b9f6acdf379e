#pragma once

#include "conf3/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace conf3 {

// Integer-coefficient polynomial in t; zero coefficients are never stored.
class Poly1 {
public:
    Poly1() = default;

    static Poly1 term(int deg, const Int& c = 1);

    void add_term(int deg, const Int& c);
    Int coeff(int deg) const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_degree() const;  // -1 for the zero polynomial

    Poly1 operator+(const Poly1&) const;
    Poly1 operator-(const Poly1&) const;
    Poly1 operator*(const Poly1&) const;
    bool operator==(const Poly1&) const = default;

    Poly1 truncated(int max_deg) const;
    std::vector<Int> coeff_list(int through_deg) const;  // dense, degrees 0..through_deg
    std::string str(const std::string& var = "t") const;

private:
    std::map<int, Int> coeffs_;
};

// Integer-coefficient polynomial in t and s; s tracks exterior degree.
// Keys are (s-degree, t-degree) so iteration groups the s-slices.
class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(const Poly1& p);  // s^0 slice

    static Poly2 term(int t_deg, int s_deg, const Int& c = 1);

    void add_term(int t_deg, int s_deg, const Int& c);
    Int coeff(int t_deg, int s_deg) const;
    const std::map<std::pair<int, int>, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Poly2 operator+(const Poly2&) const;
    Poly2 operator-(const Poly2&) const;
    bool operator==(const Poly2&) const = default;

    Poly1 s_slice(int s_deg) const;
    Poly1 at_s1() const;  // substitute s = 1
    int max_s_degree() const;
    std::string str() const;  // e.g. "1 + 3t^2 + s(t^7 + t^9)"

private:
    std::map<std::pair<int, int>, Int> coeffs_;  // (s, t) -> coefficient
};

}  // namespace conf3
