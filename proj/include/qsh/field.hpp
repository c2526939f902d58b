#pragma once
#include <string>
#include "qsh/rational.hpp"

namespace qsh {

/* Coefficient field: the rationals (l == 0) or a prime field F_l.  Elements
   are Rat values; over F_l the canonical representative is the integer
   residue 0..l-1.  Reducing a rational whose denominator is divisible by l
   is an error and throws. */
struct Field {
    long l = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(long l);

    bool is_rational() const { return l == 0; }

    /* canonical representative; identity over Q */
    Rat reduce(const Rat& x) const;

    Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
    Rat neg(const Rat& a) const { return reduce(-a); }
    Rat inv(const Rat& a) const;

    bool is_zero(const Rat& x) const { return qsh::is_zero(reduce(x)); }

    std::string name() const { return l == 0 ? "Q" : "F" + std::to_string(l); }
    bool operator==(const Field& o) const { return l == o.l; }
};

}  // namespace qsh
