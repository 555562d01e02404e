#pragma once

#include "vtl/element.hpp"
#include "vtl/scalars.hpp"

namespace vtl {

// Classical planar projector P_n in the n-strand algebra: P_1 = 1_1,
// P_{k+1} = P_k - (delta_{k-1}/delta_k) P_k e_k P_k. Planar support.
const Element& jones_wenzl(int n);

// The projector f_n via the full three-term recursion
// f_{k+1} = x_k f_k + y_k f_k e_k f_k + z_k f_k v_k f_k, f_1 = 1_1.
const Element& f_recursive(int n);

// The kernel factor f_n^K = x_{n-1} 1_n + y_{n-1} e_{n-1} f_{n-1}^K
//                         + z_{n-1} v_{n-1} f_{n-1}^K, base f_2^K; n >= 2.
// Support is contained in the chain set A_n (at most 2^n - 1 diagrams).
const Element& f_kernel(int n);

// f_n by iterated kernel products f_k = f_{k-1} * f_k^K; equals f_recursive.
const Element& f_simplified(int n);

// Closed-form class coefficient (-2)^l l! / (n! prod_{i=1..l}(d+2n-2-2i)),
// defined for 0 <= l <= n/2; coeff_explicit(n, 0) = 1/n!.
RationalFunction coeff_explicit(int n, int l);

// The closed form as a ClassTable: l -> coeff_explicit(n, l).
ClassTable f_explicit(int n);

// The same class coefficient through the step recursion
//   coeff(n, n) = 1/n!,
//   coeff(n, k) = ((n-k)/2) * (-2/(n(d+2n-4))) * coeff(n-1, k+1),
// indexed by through-strand count k with k = n (mod 2).
RationalFunction coeff_ce_recursive(int n, int k);

// Closed forms for the Markov trace of f_n. The two variants differ by a
// factor d^{n-1}: d_power is
//   d^{n-1} (d+2n-2) prod_{i=1..n-1}(d+i-2) / n!,
// alpha_product is prod_{i=1..n-1} alpha_i * d. Which one matches the closure
// oracle is adjudicated in the verify module, not assumed here.
enum class TraceVariant { d_power, alpha_product };
RationalFunction trace_closed_form(int n, TraceVariant variant);

// The chain diagram set A_n = {1_n} union {U_{n-1}...U_i : U_j in {e_j, v_j},
// 1 <= i <= n-1} in a pinned deterministic order: identity first, then i
// descending, words in e-before-v binary order. Chains compose with zero
// loops. May contain duplicates only if two chains coincide as matchings;
// distinctness is checked in the verify module.
std::vector<Diagram> kernel_support(int n);

// The chain subset U^i = {U_n ... U_{i+1} e_i} of A_{n+1} for the step
// n -> n+1, in the same word order; 2^{n-i} diagrams in the (n+1)-strand
// algebra, for 1 <= i <= n.
std::vector<Diagram> u_set(int n, int i);

}  // namespace vtl
