#include "qsh/field.hpp"
#include <stdexcept>

namespace qsh {

Field Field::prime(long l) {
    if (l < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
    for (long d = 2; d * d <= l; ++d)
        if (l % d == 0) throw std::invalid_argument("field characteristic must be prime");
    return Field{l};
}

Rat Field::reduce(const Rat& x) const {
    if (l == 0) return x;
    mpz_class p(l);
    mpz_class den = x.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw std::domain_error("denominator not invertible mod " + std::to_string(l));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class num = (x.get_num() % p) * dinv % p;
    if (num < 0) num += p;
    return Rat(num);
}

Rat Field::inv(const Rat& a) const {
    Rat r = reduce(a);
    if (qsh::is_zero(r)) throw std::domain_error("division by zero in " + name());
    if (l == 0) return 1 / r;
    mpz_class p(l), ainv;
    mpz_invert(ainv.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t());
    if (ainv < 0) ainv += p;
    return Rat(ainv);
}

}  // namespace qsh
