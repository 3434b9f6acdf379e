#pragma once

#include "conf3/rational.hpp"

#include <vector>

namespace conf3::partitions {

struct PartitionTriple {
    long a, b, c;  // a >= b >= c >= 0
    bool operator==(const PartitionTriple&) const = default;
};

// Multiplicities of the three irreducible S3 modules inside one even block of
// the model's exterior-degree-zero part. mu3 + 2*mu21 + mu111 equals the
// block dimension.
struct MultiplicityRow {
    Int mu3, mu21, mu111;
    bool operator==(const MultiplicityRow&) const = default;
};

// Rounds to the nearest integer; exact half-integers are a formula-misuse
// signal and throw.
Int nearest_integer(const Rat& q);

// Number of partitions of k into at most three parts: round((k+3)^2 / 12).
Int p3(long k);

// Number of partitions of k into three parts each <= m. Piecewise closed
// form; k in the upper half range is reduced through the k <-> 3m-k symmetry.
// Negative or out-of-range arguments count zero.
Int p3_bounded(long m, long k);

// Brute-force oracle: all triples m >= a >= b >= c >= 0 with a+b+c = k, in
// decreasing lexicographic order.
std::vector<PartitionTriple> enumerate_p3_bounded(long m, long k);

int r3(long k);  // 1 if 3 | k else 0

// Closed multiplicity formulas, evaluated through both printed forms with an
// internal agreement check. Valid for 0 <= k <= 3m; the upper half reduces
// through duality.
MultiplicityRow multiplicities(long m, long k);

bool is_unimodal(const std::vector<Int>& seq);   // throws on empty input
bool is_symmetric(const std::vector<Int>& seq);  // throws on empty input

}  // namespace conf3::partitions
