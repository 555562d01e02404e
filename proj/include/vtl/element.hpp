#pragma once

#include "vtl/diagram.hpp"
#include "vtl/rational_function.hpp"

#include <concepts>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace vtl {

// Raised by class_decompose when two diagrams of the same through-strand
// class carry different coefficients.
class ClassUniformityError : public std::domain_error {
public:
    ClassUniformityError(const Diagram& a, const Diagram& b)
        : std::domain_error("class decomposition: coefficients differ between " + a.str() +
                            " and " + b.str()),
          first_(a),
          second_(b) {}

    const Diagram& first() const { return first_; }
    const Diagram& second() const { return second_; }

private:
    Diagram first_, second_;
};

// Compressed class form: one coefficient per through-strand class n - 2l,
// l = 0..n/2, zeros kept explicitly.
struct ClassTable {
    int n = 0;
    std::vector<RationalFunction> coeff;

    ClassTable() = default;
    explicit ClassTable(int n_) : n(n_), coeff(static_cast<std::size_t>(n_ / 2 + 1)) {}

    bool operator==(const ClassTable&) const = default;
};

template <typename K>
concept CoefficientField =
    std::same_as<K, RationalFunction> || std::same_as<K, BigRational>;

// A linear combination of diagrams on n strands with coefficients in K.
// d_value is the image of the loop parameter in K: the indeterminate for
// symbolic elements, the evaluation point for numeric ones. No zero
// coefficients are stored; the term map is canonical, so results never depend
// on accumulation order.
template <CoefficientField K>
class ElementT {
public:
    ElementT(int n, K d_value);
    explicit ElementT(int n)
        requires std::same_as<K, RationalFunction>
        : ElementT(n, RationalFunction::variable()) {}

    static ElementT from_diagram(const Diagram& a, K d_value);
    static ElementT from_diagram(const Diagram& a)
        requires std::same_as<K, RationalFunction>
    {
        return from_diagram(a, RationalFunction::variable());
    }

    int n() const { return n_; }
    const K& d_value() const { return d_; }
    const std::map<Diagram, K>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    // Zero when the diagram is absent.
    K coeff(const Diagram& a) const;

    // Accumulates c into the coefficient of a, dropping the term when the sum
    // vanishes.
    void add_term(const Diagram& a, const K& c);

    ElementT operator-() const;
    ElementT& operator+=(const ElementT& o);
    ElementT& operator-=(const ElementT& o);
    ElementT& operator*=(const K& s);

    friend ElementT operator+(ElementT a, const ElementT& b) { return a += b; }
    friend ElementT operator-(ElementT a, const ElementT& b) { return a -= b; }
    friend ElementT operator*(const K& s, ElementT a) { return a *= s; }
    friend ElementT operator*(ElementT a, const K& s) { return a *= s; }

    friend bool operator==(const ElementT& a, const ElementT& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ElementT& a, const ElementT& b) { return !(a == b); }

    // Class-grouped form when class-uniform (symbolic elements, n <= 7),
    // otherwise a plain sum of terms.
    std::string str() const;

    void check_compatible(const ElementT& o, const char* what) const;

private:
    int n_;
    K d_;
    std::map<Diagram, K> terms_;
};

using Element = ElementT<RationalFunction>;
using NumericElement = ElementT<BigRational>;

// s*a + t*b.
template <CoefficientField K>
ElementT<K> combine(const ElementT<K>& a, const ElementT<K>& b, const K& s, const K& t);

// Bilinear extension of diagram composition; each composition contributes
// coeff_a * coeff_b * d^loops. Large workloads with few distinct coefficient
// values run through a counting engine; small ones take the direct path. Both
// give identical results.
template <CoefficientField K>
ElementT<K> operator*(const ElementT<K>& a, const ElementT<K>& b);

// Testing and tuning hook for the product: force the direct term-pair path or
// the counting engine instead of the size-based dispatch. The counting path
// throws std::invalid_argument when the workload does not fit its limits
// (n <= 8, bounded distinct-value table).
enum class MulPath { automatic, direct, counting };
template <CoefficientField K>
ElementT<K> mul_with_path(const ElementT<K>& a, const ElementT<K>& b, MulPath path);

// Sum over terms of coeff * d^closure_loops(diagram).
template <CoefficientField K>
K markov_trace(const ElementT<K>& a);

// Coefficient-wise evaluation at d = v; throws PoleError naming the term when
// a coefficient has a pole at v.
NumericElement eval_at(const Element& a, const BigRational& v);

// Image of a in the algebra on m >= a.n() strands, adding vertical strands.
template <CoefficientField K>
ElementT<K> embedded(const ElementT<K>& a, int m);

// Compression to one coefficient per through-strand class; throws
// ClassUniformityError with a witness pair when a is not class-uniform.
ClassTable class_decompose(const Element& a);
Element class_expand(const ClassTable& t);

// The full diagram basis of strand count n in the pinned enumeration order,
// computed once per n and shared; safe to call concurrently.
const std::vector<Diagram>& cached_basis(int n);

// One loop-parameter-independent counting pass over the product a*b, reusable
// for exact assembly and for any number of evaluation points. Requires the
// counting engine's limits (n <= 8, bounded distinct-value table); throws
// std::invalid_argument otherwise.
class ProductCounts {
public:
    ProductCounts(const Element& a, const Element& b);
    ~ProductCounts();
    ProductCounts(ProductCounts&&) noexcept;
    ProductCounts& operator=(ProductCounts&&) noexcept;

    // The exact symbolic product.
    Element exact() const;
    // The product of the two operands evaluated at d = v.
    NumericElement at(const BigRational& v) const;

private:
    struct Impl;
    std::unique_ptr<const Impl> impl_;
};

template <CoefficientField K>
std::ostream& operator<<(std::ostream& os, const ElementT<K>& a);

}  // namespace vtl
