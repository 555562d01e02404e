#include "vtl/projector.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace vtl {

namespace {

enum CacheKind : int { kJonesWenzl, kRecursive, kKernel, kSimplified };

// One shared memo for all four families. Builders recurse through the public
// accessors, so the mutex must be re-entrant.
const Element& memoized(CacheKind kind, int n, Element (*build)(int)) {
    static std::recursive_mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<const Element>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find({kind, n});
    if (it == cache.end()) {
        it = cache.emplace(std::pair<int, int>{kind, n},
                           std::make_unique<const Element>(build(n)))
                 .first;
    }
    return *it->second;
}

void require_strands(int n, int least, const char* what) {
    if (n < least) {
        throw std::domain_error(std::string(what) + ": strand count " + std::to_string(n) +
                                " is below " + std::to_string(least));
    }
}

Element build_jones_wenzl(int n) {
    if (n == 1) return Element::from_diagram(Diagram::identity(1));
    Element p = embedded(jones_wenzl(n - 1), n);
    RationalFunction ratio(chebyshev_delta(n - 2), chebyshev_delta(n - 1));
    Element cap = Element::from_diagram(Diagram::e(n, n - 1));
    return p - ratio * (p * cap * p);
}

Element build_recursive(int n) {
    if (n == 1) return Element::from_diagram(Diagram::identity(1));
    const int i = n - 1;
    Element p = embedded(f_recursive(i), n);
    Element cap = Element::from_diagram(Diagram::e(n, i));
    Element cross = Element::from_diagram(Diagram::v(n, i));
    return coeff_x(i) * p + coeff_y(i) * (p * cap * p) + coeff_z(i) * (p * cross * p);
}

Element build_kernel(int n) {
    const int i = n - 1;
    Element prev = (n == 2) ? Element::from_diagram(Diagram::identity(2))
                            : embedded(f_kernel(n - 1), n);
    Element cap = Element::from_diagram(Diagram::e(n, i));
    Element cross = Element::from_diagram(Diagram::v(n, i));
    Element out = coeff_x(i) * Element::from_diagram(Diagram::identity(n));
    out += coeff_y(i) * (cap * prev);
    out += coeff_z(i) * (cross * prev);
    return out;
}

Element build_simplified(int n) {
    if (n == 1) return Element::from_diagram(Diagram::identity(1));
    return embedded(f_simplified(n - 1), n) * f_kernel(n);
}

}  // namespace

const Element& jones_wenzl(int n) {
    require_strands(n, 1, "jones_wenzl");
    return memoized(kJonesWenzl, n, build_jones_wenzl);
}

const Element& f_recursive(int n) {
    require_strands(n, 1, "f_recursive");
    return memoized(kRecursive, n, build_recursive);
}

const Element& f_kernel(int n) {
    require_strands(n, 2, "f_kernel");
    return memoized(kKernel, n, build_kernel);
}

const Element& f_simplified(int n) {
    require_strands(n, 1, "f_simplified");
    return memoized(kSimplified, n, build_simplified);
}

RationalFunction coeff_explicit(int n, int l) {
    require_strands(n, 1, "coeff_explicit");
    if (l < 0 || 2 * l > n) {
        throw std::domain_error("coeff_explicit: class index " + std::to_string(l) +
                                " out of range for " + std::to_string(n) + " strands");
    }
    BigRational scale = BigRational(-2).pow(static_cast<unsigned long>(l)) *
                        BigRational(factorial(static_cast<unsigned long>(l)),
                                    factorial(static_cast<unsigned long>(n)));
    Polynomial den(1);
    for (int i = 1; i <= l; ++i) {
        den = den * Polynomial::linear(BigRational(2L * n - 2 - 2 * i), BigRational(1));
    }
    return RationalFunction(Polynomial(scale), den);
}

ClassTable f_explicit(int n) {
    require_strands(n, 1, "f_explicit");
    ClassTable t(n);
    for (int l = 0; 2 * l <= n; ++l) {
        t.coeff[static_cast<std::size_t>(l)] = coeff_explicit(n, l);
    }
    return t;
}

RationalFunction coeff_ce_recursive(int n, int k) {
    require_strands(n, 1, "coeff_ce_recursive");
    if (k < 0 || k > n || (n - k) % 2 != 0) {
        throw std::domain_error("coeff_ce_recursive: through-strand count " + std::to_string(k) +
                                " invalid for " + std::to_string(n) + " strands");
    }
    if (k == n) {
        return RationalFunction(BigRational(mpz_class(1), factorial(static_cast<unsigned long>(n))));
    }
    RationalFunction step(Polynomial(BigRational(-(n - k))),
                          Polynomial::linear(BigRational(n * (2L * n - 4)), BigRational(n)));
    return step * coeff_ce_recursive(n - 1, k + 1);
}

RationalFunction trace_closed_form(int n, TraceVariant variant) {
    require_strands(n, 1, "trace_closed_form");
    if (variant == TraceVariant::d_power) {
        Polynomial num = Polynomial::monomial(1, static_cast<std::size_t>(n - 1)) *
                         Polynomial::linear(BigRational(2L * n - 2), 1);
        for (int i = 1; i <= n - 1; ++i) {
            num = num * Polynomial::linear(BigRational(i - 2L), 1);
        }
        return RationalFunction(num, Polynomial(BigRational(factorial(static_cast<unsigned long>(n)))));
    }
    RationalFunction out = RationalFunction::variable();
    for (int i = 1; i <= n - 1; ++i) out *= alpha(i);
    return out;
}

std::vector<Diagram> kernel_support(int n) {
    require_strands(n, 1, "kernel_support");
    std::vector<Diagram> out;
    out.reserve((static_cast<std::size_t>(1) << n) - 1);
    out.push_back(Diagram::identity(n));
    for (int i = n - 1; i >= 1; --i) {
        const int len = n - i;
        for (unsigned long w = 0; w < (1UL << len); ++w) {
            Diagram chain = Diagram::identity(n);
            for (int t = 0; t < len; ++t) {
                const int j = n - 1 - t;
                const bool crossing = (w >> (len - 1 - t)) & 1UL;
                Diagram g = crossing ? Diagram::v(n, j) : Diagram::e(n, j);
                CompositionResult r = compose(chain, g);
                if (r.loops != 0) throw std::logic_error("kernel_support: chain closed a loop");
                chain = r.diagram;
            }
            out.push_back(chain);
        }
    }
    return out;
}

std::vector<Diagram> u_set(int n, int i) {
    require_strands(n, 1, "u_set");
    if (i < 1 || i > n) {
        throw std::domain_error("u_set: site " + std::to_string(i) + " out of range for step " +
                                std::to_string(n) + " -> " + std::to_string(n + 1));
    }
    const int m = n + 1;
    std::vector<Diagram> out;
    const int len = n - i;
    out.reserve(static_cast<std::size_t>(1) << len);
    for (unsigned long w = 0; w < (1UL << len); ++w) {
        Diagram chain = Diagram::identity(m);
        for (int t = 0; t < len; ++t) {
            const int j = n - t;
            const bool crossing = (w >> (len - 1 - t)) & 1UL;
            Diagram g = crossing ? Diagram::v(m, j) : Diagram::e(m, j);
            CompositionResult r = compose(chain, g);
            if (r.loops != 0) throw std::logic_error("u_set: chain closed a loop");
            chain = r.diagram;
        }
        CompositionResult r = compose(chain, Diagram::e(m, i));
        if (r.loops != 0) throw std::logic_error("u_set: chain closed a loop");
        out.push_back(r.diagram);
    }
    return out;
}

}  // namespace vtl
