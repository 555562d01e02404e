#include "vtl/scalars.hpp"

#include <stdexcept>
#include <string>

namespace vtl {

namespace {

void require_nonnegative(long i, const char* what) {
    if (i < 0) throw std::domain_error(std::string(what) + ": index must be nonnegative");
}

}  // namespace

RationalFunction coeff_x(long i) {
    require_nonnegative(i, "coeff_x");
    return RationalFunction(BigRational(1, i + 1));
}

RationalFunction coeff_y(long i) {
    require_nonnegative(i, "coeff_y");
    if (i == 0) return RationalFunction();
    // -2i / ((i+1)(d + 2i - 2)); denominator expanded as (i+1)d + (i+1)(2i-2).
    return RationalFunction(
        Polynomial(BigRational(-2 * i)),
        Polynomial::linear(BigRational((i + 1) * (2 * i - 2)), BigRational(i + 1)));
}

RationalFunction coeff_z(long i) {
    require_nonnegative(i, "coeff_z");
    return RationalFunction(BigRational(i, i + 1));
}

RationalFunction alpha(long i) {
    require_nonnegative(i, "alpha");
    return coeff_x(i) * RationalFunction::variable() + coeff_y(i) + coeff_z(i);
}

Polynomial chebyshev_delta(long i) {
    if (i < -1) throw std::domain_error("chebyshev_delta: index must be >= -1");
    Polynomial prev;                   // delta_{-1}
    Polynomial cur(BigRational(1));    // delta_0
    if (i == -1) return prev;
    const Polynomial d = Polynomial::variable();
    for (long k = 1; k <= i; ++k) {
        Polynomial next = d * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace vtl
