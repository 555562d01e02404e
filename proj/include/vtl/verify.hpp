#pragma once

#include "vtl/element.hpp"
#include "vtl/projector.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vtl {

// One verified claim. A failed check always carries a witness; note holds
// auxiliary findings (adjudication results, counts) that are not failures.
struct Check {
    std::string id;
    bool pass = true;
    std::string witness;
    std::string note;
};

// Outcome of one suite run. Exact mode leaves samples empty; evaluated mode
// records at least three admissible sample points and the seed they came from.
struct Report {
    std::string suite;
    int n = 0;
    bool evaluated = false;
    std::vector<BigRational> samples;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<Check> checks;

    bool all_pass() const;
};

inline constexpr std::uint64_t kDefaultSeed = 7352946130113747ULL;

// count distinct rationals strictly greater than 2, deterministic in seed.
// Everything there is admissible: the evaluation-excluded set and every
// denominator root arising in this library lie in (-infinity, 2].
std::vector<BigRational> sample_points(int count, std::uint64_t seed);

// The eleven defining relation families, exact, all admissible sites; n >= 2.
Report check_relations(int n);

// candidate^2 = candidate, candidate e_k = e_k candidate = 0, and
// candidate v_k = v_k candidate = candidate for all k < n. Exact for n <= 5;
// for n in {6, 7} the idempotence check is evaluated at >= 3 sample points
// (generator checks stay exact). candidate.n() must equal n.
Report check_characterization(int n, const Element& candidate,
                              std::uint64_t seed = kDefaultSeed);

// (a) class_decompose(f_recursive(n)) succeeds; (b) for n <= 4, every ordered
// pair x, y in the same through-strand class admits permutation diagrams
// alpha, beta with alpha x beta = y and zero loops; (c) for n <= 5 the
// permutation action preserves through-strand counts. n >= 2.
Report check_class_invariance(int n);

// Step n -> n+1 structure of the kernel factor, 3 <= n <= 6: every chain in
// U^i has n-1 through strands and its one cap on site i; for each admissible
// k and each i in {k+1, k+3, ..., n} every Y in U^i pairs with exactly one
// (k+1)-element X of the n-strand algebra such that X Y is the canonical
// k-element with zero loops; and the U^i coefficient sums in f_kernel(n+1)
// all equal -2/((n+1)(d+2n-2)).
Report check_structural_lemmas(int n);

// Markov trace of f_n by the closure oracle, 1 <= n <= 5: consistency of the
// closure count with single-strand partial closure, the step recursion
// tr(f_n) = alpha_{n-1} tr(f_{n-1}), and adjudication of the two closed-form
// variants (the note records which variant matches; a variant mismatch is
// never a failure).
Report check_trace(int n);

// Basis size (2n-1)!!, planar count Catalan(n), chain set size 2^n - 1 with
// pairwise-distinct diagrams, and through-strand class sizes
// C(n,2l)^2 ((2l-1)!!)^2 (n-2l)!; n <= 7.
Report check_dimensions(int n);

// Support of f_kernel(n) equals the chain set exactly (all coefficients
// nonzero), plus the step-(n -> n+1) coefficient sums; 2 <= n <= 8.
Report check_kernel_support(int n);

// Exact scalar-sequence identities for i = 1..i_max: the collapse identity
// (x_i + y_i alpha_{i-1})/(-z_i) = (d-2)/(i(d+2i-4)) = x_{i-1} + y_{i-1},
// the product laws z_i x_{i-1} = x_i and (y_i + z_i) y_{i-1} = y_i z_{i-1},
// and a numeric anchor for the Chebyshev ladder.
Report check_scalar_identities(int i_max);

// The seven projector properties for 2 <= i <= n <= n_max, each in every
// ambient strand count where it fits, plus the ambient n_max + 1 pass that
// realizes the cap/crossing properties at i = n_max.
Report check_projector_properties(int n_max);

// Classical planar projector baseline at strand count n: idempotence,
// annihilation by every cap, planar support, commutation with caps strictly
// above its strands, and non-commutation at the boundary site.
Report check_jones_wenzl(int n);

// coeff_ce_recursive agrees with coeff_explicit for all admissible k, the
// l = 1 value is -2/(n!(d+2n-4)), and the l = 0 value is 1/n!; n = 1..n_max.
Report check_coefficient_laws(int n_max);

// f_recursive(n) = f_simplified(n) = class_expand(f_explicit(n)) and
// class_decompose(f_recursive(n)) = f_explicit(n), term by term; 1 <= n <= 6.
Report check_construction_agreement(int n);

// Human-readable rendering, one check per line.
std::string report_text(const Report& r);

}  // namespace vtl
