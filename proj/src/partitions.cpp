#include "conf3/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conf3::partitions {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_agreement(const char* which, long m, long k, const Int& lhs, const Int& rhs) {
    if (lhs == rhs) return;
    std::ostringstream msg;
    msg << "multiplicity formulas disagree for " << which << " at m=" << m << " k=" << k << ": "
        << lhs.get_str() << " vs " << rhs.get_str();
    throw std::logic_error(msg.str());
}

}  // namespace

Int nearest_integer(const Rat& q) {
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (den == 1) return num;
    if (den == 2) throw std::invalid_argument("nearest_integer: exact half-integer " + q.get_str());
    return floor_div(2 * num + den, 2 * den);
}

Int p3(long k) {
    if (k < 0) return 0;
    Int t = Int(k) + 3;
    return nearest_integer(make_rat(t * t, Int(12)));
}

Int p3_bounded(long m, long k) {
    if (m < 0 || k < 0 || k > 3 * m) return 0;
    if (k <= m) return p3(k);
    if (2 * k > 3 * m) return p3_bounded(m, 3 * m - k);
    // m+1 <= k <= floor(3m/2)
    Int d = Int(k - m - 1);
    return p3(k) - nearest_integer(make_rat(d * d, Int(4))) + Int(m - k);
}

std::vector<PartitionTriple> enumerate_p3_bounded(long m, long k) {
    std::vector<PartitionTriple> out;
    if (m < 0 || k < 0) return out;
    for (long a = m; a >= 0; --a) {
        if (3 * a < k) break;  // a is the largest part
        for (long b = a; b >= 0; --b) {
            long c = k - a - b;
            if (c > b) break;
            if (c >= 0) out.push_back({a, b, c});
        }
    }
    return out;  // decreasing lexicographic: largest triple first
}

int r3(long k) { return k % 3 == 0 ? 1 : 0; }

MultiplicityRow multiplicities(long m, long k) {
    if (m < 1 || k < 0 || k > 3 * m) throw std::invalid_argument("multiplicities: k out of range");
    if (2 * k > 3 * m) return multiplicities(m, 3 * m - k);

    const Int p = p3_bounded(m, k);
    const Int p_inner = p3_bounded(m - 2, k - 3);

    // max{0, ceil((k-m)/2)}
    Int corr = k > m ? ceil_div(Int(k - m), Int(2)) : Int(0);
    Int half = Int(k / 2);  // floor, k >= 0

    Int mu21_a = 2 * p - (half + 1 + r3(k) - corr);
    Int mu21_b = p + p_inner - r3(k);
    check_agreement("mu_{2,1}", m, k, mu21_a, mu21_b);

    Int mu111_a = p - (half + 1 - corr);
    Int mu111_b = p_inner;
    check_agreement("mu_{1,1,1}", m, k, mu111_a, mu111_b);

    if (mu21_b < 0 || mu111_b < 0)
        throw std::logic_error("multiplicities: negative multiplicity computed");
    return {p, mu21_b, mu111_b};
}

bool is_unimodal(const std::vector<Int>& seq) {
    if (seq.empty()) throw std::invalid_argument("is_unimodal: empty sequence");
    size_t i = 1;
    while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
    return i == seq.size();
}

bool is_symmetric(const std::vector<Int>& seq) {
    if (seq.empty()) throw std::invalid_argument("is_symmetric: empty sequence");
    return std::equal(seq.begin(), seq.end(), seq.rbegin());
}

}  // namespace conf3::partitions
