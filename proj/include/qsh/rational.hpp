#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace qsh {

/* All exact scalars are GMP rationals; prime-field elements are carried as
   canonical integer representatives 0..l-1 inside the same type. */
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/* mpq_class(n, d) does not canonicalize; route integer-pair construction
   through here. */
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

using Vec = std::vector<Rat>;

inline Vec zero_vec(int n) { return Vec(n, Rat(0)); }

inline bool is_zero_vec(const Vec& v) {
    for (const Rat& x : v)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace qsh
