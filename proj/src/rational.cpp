#include "vtl/rational.hpp"

#include <ostream>

namespace vtl {

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.str();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class odd_double_factorial(long m) {
    mpz_class r(1);
    for (long i = m; i >= 3; i -= 2) r *= i;
    return r;
}

}  // namespace vtl
