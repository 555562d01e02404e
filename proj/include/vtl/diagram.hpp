#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace vtl {

struct CompositionResult;

// A Brauer diagram on n top and n bottom points, stored as a fixed-point-free
// involution. Indices 0..n-1 are top points left to right, n..2n-1 are bottom
// points left to right. Equality, ordering, and hashing all go through the
// partner array, which is canonical by construction.
class Diagram {
public:
    // Validates that partner is a fixed-point-free involution on 2n points.
    explicit Diagram(std::vector<std::uint16_t> partner);

    static Diagram identity(int n);
    // Cup on top sites i, i+1 and cap on bottom sites i, i+1 (1-based sites).
    static Diagram e(int n, int i);
    // Transposition of strands i, i+1 (1-based sites).
    static Diagram v(int n, int i);

    int n() const { return static_cast<int>(partner_.size() / 2); }
    const std::vector<std::uint16_t>& partner() const { return partner_; }
    int partner_of(int x) const { return partner_[static_cast<std::size_t>(x)]; }

    // Number of arcs joining a top point to a bottom point.
    int through_strands() const;
    // Closed curves after joining top k to bottom k outside the rectangle.
    int closure_loops() const;
    // True iff the matching is crossingless in the rectangle boundary order.
    bool is_planar() const;

    Diagram transpose() const;       // swap top and bottom boundaries
    Diagram mirror() const;          // reflect left to right
    Diagram embedded(int m) const;   // extend by vertical strands to m >= n

    // Bracket pair list, e.g. "(T1 T2)(B1 B2)" for e_1 at n = 2.
    std::string str() const;

    bool operator==(const Diagram& o) const { return partner_ == o.partner_; }
    bool operator!=(const Diagram& o) const { return partner_ != o.partner_; }
    bool operator<(const Diagram& o) const { return partner_ < o.partner_; }

private:
    struct Trusted {};
    Diagram(std::vector<std::uint16_t> partner, Trusted) : partner_(std::move(partner)) {}

    std::vector<std::uint16_t> partner_;

    friend struct CompositionResult;
    friend CompositionResult compose(const Diagram& a, const Diagram& b);
    friend std::vector<Diagram> enumerate_diagrams(int n);
    friend Diagram canonical_k_element(int n, int k);
};

struct CompositionResult {
    Diagram diagram;
    int loops;
};

// Stacks a above b (a's bottom glued to b's top); loops counts the closed
// curves removed from the middle.
CompositionResult compose(const Diagram& a, const Diagram& b);

// All (2n-1)!! diagrams in lexicographic partner-array order.
std::vector<Diagram> enumerate_diagrams(int n);
// The k-elements only (k must have the parity of n and 0 <= k <= n).
std::vector<Diagram> enumerate_diagrams(int n, int k);

// First k strands vertical, then cups and caps on sites k+1, k+3, ..., n-1.
Diagram canonical_k_element(int n, int k);

std::ostream& operator<<(std::ostream& os, const Diagram& a);

}  // namespace vtl

template <>
struct std::hash<vtl::Diagram> {
    std::size_t operator()(const vtl::Diagram& a) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto x : a.partner()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};
