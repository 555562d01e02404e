#include "vtl/diagram.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vtl {

namespace {

void require_site(int n, int i, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
    if (i < 1 || i > n - 1)
        throw std::invalid_argument(std::string(what) + ": site index out of range 1..n-1");
}

}  // namespace

Diagram::Diagram(std::vector<std::uint16_t> partner) : partner_(std::move(partner)) {
    const std::size_t m = partner_.size();
    if (m == 0 || m % 2 != 0)
        throw std::invalid_argument("Diagram: partner length must be a positive even number");
    for (std::size_t x = 0; x < m; ++x) {
        const std::uint16_t p = partner_[x];
        if (p >= m) throw std::invalid_argument("Diagram: partner index out of range");
        if (p == x) throw std::invalid_argument("Diagram: fixed point in partner");
        if (partner_[p] != x) throw std::invalid_argument("Diagram: partner is not an involution");
    }
}

Diagram Diagram::identity(int n) {
    if (n < 1) throw std::invalid_argument("Diagram::identity: n must be positive");
    std::vector<std::uint16_t> p(2 * static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        p[t] = static_cast<std::uint16_t>(n + t);
        p[n + t] = static_cast<std::uint16_t>(t);
    }
    return Diagram(std::move(p), Trusted{});
}

Diagram Diagram::e(int n, int i) {
    require_site(n, i, "Diagram::e");
    Diagram a = identity(n);
    const int t = i - 1;
    a.partner_[t] = static_cast<std::uint16_t>(t + 1);
    a.partner_[t + 1] = static_cast<std::uint16_t>(t);
    a.partner_[n + t] = static_cast<std::uint16_t>(n + t + 1);
    a.partner_[n + t + 1] = static_cast<std::uint16_t>(n + t);
    return a;
}

Diagram Diagram::v(int n, int i) {
    require_site(n, i, "Diagram::v");
    Diagram a = identity(n);
    const int t = i - 1;
    a.partner_[t] = static_cast<std::uint16_t>(n + t + 1);
    a.partner_[t + 1] = static_cast<std::uint16_t>(n + t);
    a.partner_[n + t] = static_cast<std::uint16_t>(t + 1);
    a.partner_[n + t + 1] = static_cast<std::uint16_t>(t);
    return a;
}

int Diagram::through_strands() const {
    const int nn = n();
    int k = 0;
    for (int t = 0; t < nn; ++t)
        if (partner_[t] >= static_cast<std::uint16_t>(nn)) ++k;
    return k;
}

int Diagram::closure_loops() const {
    const int nn = n();
    const int m = 2 * nn;
    std::vector<char> seen(m, 0);
    int loops = 0;
    for (int x0 = 0; x0 < m; ++x0) {
        if (seen[x0]) continue;
        ++loops;
        int x = x0;
        do {
            seen[x] = 1;
            const int y = partner_[x];       // diagram arc
            seen[y] = 1;
            x = (y + nn) % m;                // closure arc joins top k to bottom k
        } while (x != x0);
    }
    return loops;
}

bool Diagram::is_planar() const {
    const int nn = n();
    const int m = 2 * nn;
    // Boundary order: top left to right, then bottom right to left.
    std::vector<int> at(m), pos(m);
    for (int t = 0; t < nn; ++t) at[t] = t;
    for (int j = 0; j < nn; ++j) at[m - 1 - j] = nn + j;
    for (int p = 0; p < m; ++p) pos[at[p]] = p;
    std::vector<int> open;
    for (int p = 0; p < m; ++p) {
        const int x = at[p];
        const int q = pos[partner_[x]];
        if (q > p) {
            open.push_back(x);
        } else {
            if (open.empty() || open.back() != partner_[x]) return false;
            open.pop_back();
        }
    }
    return true;
}

Diagram Diagram::transpose() const {
    const int m = 2 * n();
    std::vector<std::uint16_t> p(m);
    for (int x = 0; x < m; ++x)
        p[(x + n()) % m] = static_cast<std::uint16_t>((partner_[x] + n()) % m);
    return Diagram(std::move(p), Trusted{});
}

Diagram Diagram::mirror() const {
    const int nn = n();
    auto mir = [nn](int x) { return x < nn ? nn - 1 - x : nn + (2 * nn - 1 - x); };
    std::vector<std::uint16_t> p(2 * nn);
    for (int x = 0; x < 2 * nn; ++x)
        p[mir(x)] = static_cast<std::uint16_t>(mir(partner_[x]));
    return Diagram(std::move(p), Trusted{});
}

Diagram Diagram::embedded(int m) const {
    const int nn = n();
    if (m < nn) throw std::invalid_argument("Diagram::embedded: target strand count too small");
    std::vector<std::uint16_t> p(2 * static_cast<std::size_t>(m));
    auto remap = [nn, m](int x) { return x < nn ? x : m + (x - nn); };
    for (int x = 0; x < 2 * nn; ++x)
        p[remap(x)] = static_cast<std::uint16_t>(remap(partner_[x]));
    for (int t = nn; t < m; ++t) {
        p[t] = static_cast<std::uint16_t>(m + t);
        p[m + t] = static_cast<std::uint16_t>(t);
    }
    return Diagram(std::move(p), Trusted{});
}

std::string Diagram::str() const {
    const int nn = n();
    auto label = [nn](int x) {
        return (x < nn ? "T" + std::to_string(x + 1) : "B" + std::to_string(x - nn + 1));
    };
    std::ostringstream os;
    for (int x = 0; x < 2 * nn; ++x) {
        const int p = partner_[x];
        if (p < x) continue;
        os << "(" << label(x) << " " << label(p) << ")";
    }
    return os.str();
}

CompositionResult compose(const Diagram& a, const Diagram& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: strand counts differ");
    const int n = a.n();
    std::vector<std::uint16_t> out(2 * static_cast<std::size_t>(n));
    std::vector<char> done(2 * static_cast<std::size_t>(n), 0);
    std::vector<char> mid(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < 2 * n; ++p) {
        if (done[p]) continue;
        // Walk from external point p through the glued middle boundary.
        bool in_a = p < n;
        int cur = in_a ? a.partner_[p] : b.partner_[p];
        while (true) {
            if (in_a) {
                if (cur < n) break;          // reached a's top: external
                const int m = cur - n;
                mid[m] = 1;
                cur = b.partner_[m];
                in_a = false;
            } else {
                if (cur >= n) break;         // reached b's bottom: external
                mid[cur] = 1;
                cur = a.partner_[n + cur];
                in_a = true;
            }
        }
        out[p] = static_cast<std::uint16_t>(cur);
        out[cur] = static_cast<std::uint16_t>(p);
        done[p] = done[cur] = 1;
    }
    // Unvisited middle points lie on closed curves; each alternates between
    // an arc of a and an arc of b.
    int loops = 0;
    for (int m0 = 0; m0 < n; ++m0) {
        if (mid[m0]) continue;
        ++loops;
        int m = m0;
        do {
            mid[m] = 1;
            const int t = b.partner_[m];
            mid[t] = 1;
            m = a.partner_[n + t] - n;
        } while (m != m0);
    }
    return CompositionResult{Diagram(std::move(out), Diagram::Trusted{}), loops};
}

namespace {

void build_matchings(std::vector<std::uint16_t>& partner, std::vector<char>& used,
                     std::size_t first_free, std::vector<Diagram>& out) {
    const std::size_t m = partner.size();
    while (first_free < m && used[first_free]) ++first_free;
    if (first_free == m) {
        out.emplace_back(partner);
        return;
    }
    used[first_free] = 1;
    for (std::size_t j = first_free + 1; j < m; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        partner[first_free] = static_cast<std::uint16_t>(j);
        partner[j] = static_cast<std::uint16_t>(first_free);
        build_matchings(partner, used, first_free + 1, out);
        used[j] = 0;
    }
    used[first_free] = 0;
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_diagrams: n must be positive");
    std::vector<std::uint16_t> partner(2 * static_cast<std::size_t>(n), 0);
    std::vector<char> used(2 * static_cast<std::size_t>(n), 0);
    std::vector<Diagram> out;
    build_matchings(partner, used, 0, out);
    return out;
}

std::vector<Diagram> enumerate_diagrams(int n, int k) {
    if (k < 0 || k > n || (n - k) % 2 != 0)
        throw std::invalid_argument("enumerate_diagrams: k must match the parity of n and lie in 0..n");
    std::vector<Diagram> out;
    for (auto& a : enumerate_diagrams(n))
        if (a.through_strands() == k) out.push_back(std::move(a));
    return out;
}

Diagram canonical_k_element(int n, int k) {
    if (k < 0 || k > n || (n - k) % 2 != 0)
        throw std::invalid_argument("canonical_k_element: k must match the parity of n and lie in 0..n");
    std::vector<std::uint16_t> p(2 * static_cast<std::size_t>(n));
    for (int t = 0; t < k; ++t) {
        p[t] = static_cast<std::uint16_t>(n + t);
        p[n + t] = static_cast<std::uint16_t>(t);
    }
    for (int t = k; t < n; t += 2) {
        p[t] = static_cast<std::uint16_t>(t + 1);
        p[t + 1] = static_cast<std::uint16_t>(t);
        p[n + t] = static_cast<std::uint16_t>(n + t + 1);
        p[n + t + 1] = static_cast<std::uint16_t>(n + t);
    }
    return Diagram(std::move(p), Diagram::Trusted{});
}

std::ostream& operator<<(std::ostream& os, const Diagram& a) {
    return os << a.str();
}

}  // namespace vtl
