#pragma once

#include <gmpxx.h>

namespace conf3 {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class's (num, den) constructor does not canonicalize; this one does.
inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace conf3
