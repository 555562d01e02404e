#pragma once

#include "vtl/rational_function.hpp"

namespace vtl {

// Recurring scalar sequences, defined for i >= 0:
//   x_i = 1/(i+1)
//   y_i = -2i / ((i+1)(d + 2i - 2))
//   z_i = i/(i+1)
// x_0 = 1 and y_0 = z_0 = 0 fall out of the formulas.
RationalFunction coeff_x(long i);
RationalFunction coeff_y(long i);
RationalFunction coeff_z(long i);

// alpha_i = x_i d + y_i + z_i; alpha_0 = d, alpha_1 = (d^2 + d - 2)/(2d).
RationalFunction alpha(long i);

// Chebyshev-style ladder: delta_{-1} = 0, delta_0 = 1,
// delta_i = d delta_{i-1} - delta_{i-2}. Defined for i >= -1.
Polynomial chebyshev_delta(long i);

}  // namespace vtl
