#include "vtl/element.hpp"

#include <bit>
#include <cstring>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace vtl {

namespace {

int class_of(int n, const Diagram& a) { return (n - a.through_strands()) / 2; }

}  // namespace

const std::vector<Diagram>& cached_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<Diagram>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto built = std::make_unique<const std::vector<Diagram>>(enumerate_diagrams(n));
        it = cache.emplace(n, std::move(built)).first;
    }
    return *it->second;
}

// ---------------------------------------------------------------------------
// Basis index: packed keys, an open-addressing lookup table, and the index
// permutations induced by transpose and mirror. Built once per strand count.
// Packing uses one nibble per boundary point, so it requires n <= 8.

namespace {

constexpr int kMaxPackedStrands = 8;

std::uint64_t pack_key(const std::vector<std::uint16_t>& partner) {
    std::uint64_t key = 0;
    for (std::size_t x = 0; x < partner.size(); ++x)
        key |= static_cast<std::uint64_t>(partner[x]) << (4 * x);
    return key;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

struct BasisIndex {
    int n = 0;
    std::uint32_t dim = 0;
    std::vector<std::uint8_t> bytes;       // 2n bytes per diagram, basis order
    std::vector<std::uint64_t> keys;       // packed partner arrays
    std::vector<std::uint32_t> table;      // open addressing, stores idx + 1
    std::uint64_t mask = 0;
    std::vector<std::uint32_t> tau;        // index map of transpose
    std::vector<std::uint32_t> mu;         // index map of mirror

    std::uint32_t index_of_key(std::uint64_t key) const {
        std::uint64_t h = mix64(key) & mask;
        while (true) {
            const std::uint32_t e = table[h];
            if (e == 0) throw std::logic_error("basis index: diagram not found");
            if (keys[e - 1] == key) return e - 1;
            h = (h + 1) & mask;
        }
    }

    std::uint32_t index_of(const Diagram& a) const { return index_of_key(pack_key(a.partner())); }
};

const BasisIndex& basis_index(int n) {
    if (n < 1 || n > kMaxPackedStrands)
        throw std::invalid_argument("basis index: strand count outside packable range");
    static std::mutex mu_;
    static std::map<int, std::unique_ptr<const BasisIndex>> cache;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    const auto& basis = cached_basis(n);
    auto bi = std::make_unique<BasisIndex>();
    bi->n = n;
    bi->dim = static_cast<std::uint32_t>(basis.size());
    bi->bytes.resize(basis.size() * 2 * static_cast<std::size_t>(n));
    bi->keys.resize(basis.size());
    std::size_t table_bits = 4;
    while ((1ull << table_bits) < 2 * basis.size()) ++table_bits;
    bi->table.assign(1ull << table_bits, 0);
    bi->mask = (1ull << table_bits) - 1;
    for (std::uint32_t idx = 0; idx < bi->dim; ++idx) {
        const auto& partner = basis[idx].partner();
        for (int x = 0; x < 2 * n; ++x)
            bi->bytes[idx * 2 * static_cast<std::size_t>(n) + x] =
                static_cast<std::uint8_t>(partner[x]);
        const std::uint64_t key = pack_key(partner);
        bi->keys[idx] = key;
        std::uint64_t h = mix64(key) & bi->mask;
        while (bi->table[h] != 0) h = (h + 1) & bi->mask;
        bi->table[h] = idx + 1;
    }
    bi->tau.resize(bi->dim);
    bi->mu.resize(bi->dim);
    for (std::uint32_t idx = 0; idx < bi->dim; ++idx) {
        bi->tau[idx] = bi->index_of(basis[idx].transpose());
        bi->mu[idx] = bi->index_of(basis[idx].mirror());
    }
    const BasisIndex& ref = *bi;
    cache.emplace(n, std::move(bi));
    return ref;
}

// Composes two diagrams given as raw partner byte arrays, returning the basis
// index of the result and the count of closed middle curves. Mirrors
// compose() in diagram.cpp, specialized for n <= 8 with bitmask bookkeeping.
inline std::uint32_t compose_indexed(const std::uint8_t* a, const std::uint8_t* b, int n,
                                     const BasisIndex& bi, int& loops_out) {
    std::uint8_t out[2 * kMaxPackedStrands];
    unsigned done = 0;
    unsigned mid = 0;
    for (int p = 0; p < 2 * n; ++p) {
        if (done & (1u << p)) continue;
        bool in_a = p < n;
        int cur = in_a ? a[p] : b[p];
        while (true) {
            if (in_a) {
                if (cur < n) break;
                const int m = cur - n;
                mid |= 1u << m;
                cur = b[m];
                in_a = false;
            } else {
                if (cur >= n) break;
                mid |= 1u << cur;
                cur = a[n + cur];
                in_a = true;
            }
        }
        out[p] = static_cast<std::uint8_t>(cur);
        out[cur] = static_cast<std::uint8_t>(p);
        done |= (1u << p) | (1u << cur);
    }
    int loops = 0;
    unsigned rem = ((1u << n) - 1) & ~mid;
    while (rem) {
        ++loops;
        const int m0 = std::countr_zero(rem);
        int m = m0;
        do {
            rem &= ~(1u << m);
            const int t = b[m];
            rem &= ~(1u << t);
            m = a[n + t] - n;
        } while (m != m0);
    }
    loops_out = loops;
    std::uint64_t key = 0;
    for (int x = 0; x < 2 * n; ++x) key |= static_cast<std::uint64_t>(out[x]) << (4 * x);
    return bi.index_of_key(key);
}

// ---------------------------------------------------------------------------
// Counting engine. Compositions are tallied as integer counts indexed by
// (result index, value id of a's coefficient, value id of b's coefficient,
// loop count); the counts are independent of the coefficient field, and one
// counting pass serves exact and numeric assembly alike. Count updates are
// buffered into per-bucket record queues so the drain touches the count table
// in cache-sized slices instead of at random.

constexpr std::uint32_t kCellBits = 10;        // cells = va * vb * (n/2 + 1) <= 1024
constexpr std::uint32_t kMaxCells = 1u << kCellBits;
constexpr std::size_t kBucketCap = 1u << 14;   // records per bucket before a drain
constexpr std::size_t kEnginePairMin = 1u << 18;
constexpr std::size_t kEngineMemoryMax = 600u << 20;  // count table bytes

template <CoefficientField K>
struct EnginePlan {
    const BasisIndex* bi = nullptr;
    int L = 0;                       // loop slots: n/2 + 1
    std::uint32_t cells = 0;
    std::vector<K> va, vb;           // distinct coefficient values
    std::vector<std::uint16_t> id_a, id_b;  // value id per basis index, 0xFFFF absent
    std::vector<std::uint32_t> la, lb;      // basis indices carrying a term
    bool tau_ok = false;             // a == b and ids transpose-invariant
    bool mu_ok = false;              // ids mirror-invariant on both sides
};

template <CoefficientField K>
void fill_side(const ElementT<K>& e, const BasisIndex& bi, std::vector<K>& values,
               std::vector<std::uint16_t>& ids, std::vector<std::uint32_t>& list) {
    ids.assign(bi.dim, 0xFFFF);
    list.reserve(e.term_count());
    std::map<K, std::uint16_t> seen;
    for (const auto& [dg, c] : e.terms()) {
        auto [it, fresh] = seen.try_emplace(c, static_cast<std::uint16_t>(seen.size()));
        const std::uint32_t idx = bi.index_of(dg);
        ids[idx] = it->second;
        list.push_back(idx);
    }
    values.resize(seen.size());
    for (const auto& [value, id] : seen) values[id] = value;
}

template <CoefficientField K>
bool build_plan(const ElementT<K>& a, const ElementT<K>& b, EnginePlan<K>& plan,
                std::string* why) {
    const int n = a.n();
    if (n > kMaxPackedStrands) {
        if (why) *why = "strand count exceeds the packable range";
        return false;
    }
    const BasisIndex& bi = basis_index(n);
    plan.bi = &bi;
    plan.L = n / 2 + 1;
    fill_side(a, bi, plan.va, plan.id_a, plan.la);
    fill_side(b, bi, plan.vb, plan.id_b, plan.lb);
    const std::size_t cells = plan.va.size() * plan.vb.size() * static_cast<std::size_t>(plan.L);
    if (cells == 0 || cells > kMaxCells) {
        if (why) *why = "distinct-value table too large";
        return false;
    }
    if (static_cast<std::size_t>(bi.dim) * cells * sizeof(std::uint32_t) > kEngineMemoryMax) {
        if (why) *why = "count table would exceed the memory budget";
        return false;
    }
    plan.cells = static_cast<std::uint32_t>(cells);
    const bool same = a.terms() == b.terms();
    plan.tau_ok = same;
    if (plan.tau_ok)
        for (const std::uint32_t z : plan.la)
            if (plan.id_a[bi.tau[z]] != plan.id_a[z]) {
                plan.tau_ok = false;
                break;
            }
    plan.mu_ok = true;
    for (const std::uint32_t z : plan.la)
        if (plan.id_a[bi.mu[z]] != plan.id_a[z]) {
            plan.mu_ok = false;
            break;
        }
    if (plan.mu_ok)
        for (const std::uint32_t z : plan.lb)
            if (plan.id_b[bi.mu[z]] != plan.id_b[z]) {
                plan.mu_ok = false;
                break;
            }
    return true;
}

class CountBuckets {
public:
    CountBuckets(std::uint32_t dim, std::uint32_t cells) : cells_(cells) {
        counts_.assign(static_cast<std::size_t>(dim) * cells, 0);
        // Aim each bucket's count slice at roughly 2 MiB.
        std::size_t nbbits = 0;
        while (nbbits < 8 &&
               (static_cast<std::size_t>(dim) * cells * sizeof(std::uint32_t)) >> nbbits >
                   (2u << 20))
            ++nbbits;
        zbits_ = std::bit_width(dim == 0 ? 1u : dim - 1);
        if (nbbits > zbits_) nbbits = zbits_;
        shift_ = zbits_ - nbbits;
        buckets_ = 1u << nbbits;
        buf_.resize(buckets_ * kBucketCap);
        len_.assign(buckets_, 0);
    }

    void add(std::uint32_t z, std::uint32_t cell) {
        const std::uint32_t bkt = z >> shift_;
        std::size_t& len = len_[bkt];
        buf_[bkt * kBucketCap + len] = (static_cast<std::uint64_t>(z) << kCellBits) | cell;
        if (++len == kBucketCap) drain(bkt);
    }

    std::vector<std::uint32_t> finish() {
        for (std::uint32_t b = 0; b < buckets_; ++b) drain(b);
        return std::move(counts_);
    }

private:
    void drain(std::uint32_t bkt) {
        const std::uint64_t* rec = buf_.data() + static_cast<std::size_t>(bkt) * kBucketCap;
        const std::size_t len = len_[bkt];
        for (std::size_t r = 0; r < len; ++r) {
            const std::uint64_t v = rec[r];
            std::uint32_t& c =
                counts_[static_cast<std::size_t>(v >> kCellBits) * cells_ + (v & (kMaxCells - 1))];
            if (++c == 0) throw std::overflow_error("product counting: cell count overflow");
        }
        len_[bkt] = 0;
    }

    std::uint32_t cells_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::uint64_t> buf_;
    std::vector<std::size_t> len_;
    std::uint32_t buckets_ = 1, zbits_ = 0, shift_ = 0;
};

template <CoefficientField K>
std::vector<std::uint32_t> run_counting(const EnginePlan<K>& plan) {
    const BasisIndex& bi = *plan.bi;
    const int n = bi.n;
    const std::size_t stride = 2 * static_cast<std::size_t>(n);
    const std::uint8_t* bytes = bi.bytes.data();
    const std::uint32_t* tau = bi.tau.data();
    const std::uint32_t* mu = bi.mu.data();
    const std::uint16_t* id_a = plan.id_a.data();
    const std::uint16_t* id_b = plan.id_b.data();
    const std::uint32_t L = static_cast<std::uint32_t>(plan.L);
    const std::uint32_t vbn = static_cast<std::uint32_t>(plan.vb.size());
    const bool use_tau = plan.tau_ok, use_mu = plan.mu_ok;

    CountBuckets buckets(bi.dim, plan.cells);
    auto cell_of = [L, vbn](std::uint32_t ia, std::uint32_t ib, std::uint32_t lam) {
        return (ia * vbn + ib) * L + lam;
    };

    for (const std::uint32_t i : plan.la) {
        const std::uint8_t* arow = bytes + static_cast<std::size_t>(i) * stride;
        const std::uint32_t ti = use_tau ? tau[i] : 0;
        const std::uint32_t mi = use_mu ? mu[i] : 0;
        const std::uint32_t ida = id_a[i];
        const std::uint64_t ihigh = static_cast<std::uint64_t>(i) << 32;
        for (const std::uint32_t j : plan.lb) {
            const std::uint64_t self = ihigh | j;
            std::uint64_t mem_t = self, mem_m = self, mem_tm = self;
            if (use_tau) {
                mem_t = (static_cast<std::uint64_t>(tau[j]) << 32) | ti;
                if (mem_t < self) continue;
            }
            if (use_mu) {
                mem_m = (static_cast<std::uint64_t>(mi) << 32) | mu[j];
                if (mem_m < self) continue;
                if (use_tau) {
                    mem_tm = (static_cast<std::uint64_t>(tau[mu[j]]) << 32) | tau[mi];
                    if (mem_tm < self) continue;
                }
            }
            int loops = 0;
            const std::uint32_t z =
                compose_indexed(arow, bytes + static_cast<std::size_t>(j) * stride, n, bi, loops);
            const std::uint32_t lam = static_cast<std::uint32_t>(loops);
            const std::uint32_t idb = id_b[j];
            buckets.add(z, cell_of(ida, idb, lam));
            // Emit every distinct orbit member exactly once. The transpose
            // member swaps the value ids; the mirror member keeps them.
            if (use_tau && mem_t != self) buckets.add(tau[z], cell_of(id_a[j], ida, lam));
            if (use_mu && mem_m != self && !(use_tau && mem_m == mem_t))
                buckets.add(mu[z], cell_of(ida, idb, lam));
            if (use_tau && use_mu && mem_tm != self && mem_tm != mem_t && mem_tm != mem_m)
                buckets.add(mu[tau[z]], cell_of(id_a[j], ida, lam));
        }
    }
    return buckets.finish();
}

template <CoefficientField K>
ElementT<K> assemble_counts(const BasisIndex& bi, int L, std::uint32_t cells,
                            const std::vector<K>& va, const std::vector<K>& vb,
                            const K& d_value, const std::vector<std::uint32_t>& counts) {
    const auto& basis = cached_basis(bi.n);
    const std::size_t van = va.size(), vbn = vb.size();
    std::vector<K> vp(van * vbn);
    for (std::size_t ia = 0; ia < van; ++ia)
        for (std::size_t ib = 0; ib < vbn; ++ib) vp[ia * vbn + ib] = va[ia] * vb[ib];
    std::vector<K> dpow(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) dpow[l] = d_value.pow(static_cast<unsigned long>(l));

    ElementT<K> out(bi.n, d_value);
    for (std::uint32_t z = 0; z < bi.dim; ++z) {
        const std::uint32_t* row = counts.data() + static_cast<std::size_t>(z) * cells;
        K acc{};
        bool any = false;
        std::uint32_t cell = 0;
        for (std::size_t ia = 0; ia < van; ++ia)
            for (std::size_t ib = 0; ib < vbn; ++ib) {
                const K& pv = vp[ia * vbn + ib];
                for (int l = 0; l < L; ++l, ++cell) {
                    const std::uint32_t c = row[cell];
                    if (c == 0) continue;
                    acc += pv * dpow[static_cast<std::size_t>(l)] * K(static_cast<long>(c));
                    any = true;
                }
            }
        if (any) out.add_term(basis[z], acc);
    }
    return out;
}

template <CoefficientField K>
ElementT<K> mul_direct(const ElementT<K>& a, const ElementT<K>& b) {
    ElementT<K> out(a.n(), a.d_value());
    std::vector<K> dpow(static_cast<std::size_t>(a.n() / 2 + 1));
    for (std::size_t l = 0; l < dpow.size(); ++l)
        dpow[l] = a.d_value().pow(static_cast<unsigned long>(l));
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [dz, loops] = compose(da, db);
            out.add_term(dz, ca * cb * dpow[static_cast<std::size_t>(loops)]);
        }
    return out;
}

template <CoefficientField K>
ElementT<K> mul_counting(const ElementT<K>& a, const ElementT<K>& b) {
    EnginePlan<K> plan;
    std::string why;
    if (!build_plan(a, b, plan, &why))
        throw std::invalid_argument("counting product: " + why);
    return assemble_counts(*plan.bi, plan.L, plan.cells, plan.va, plan.vb, a.d_value(),
                           run_counting(plan));
}

}  // namespace

// ---------------------------------------------------------------------------
// ElementT members.

template <CoefficientField K>
ElementT<K>::ElementT(int n, K d_value) : n_(n), d_(std::move(d_value)) {
    if (n < 1) throw std::invalid_argument("Element: strand count must be positive");
}

template <CoefficientField K>
ElementT<K> ElementT<K>::from_diagram(const Diagram& a, K d_value) {
    ElementT out(a.n(), std::move(d_value));
    out.terms_.emplace(a, K(1));
    return out;
}

template <CoefficientField K>
K ElementT<K>::coeff(const Diagram& a) const {
    const auto it = terms_.find(a);
    return it == terms_.end() ? K{} : it->second;
}

template <CoefficientField K>
void ElementT<K>::add_term(const Diagram& a, const K& c) {
    if (c.is_zero()) return;
    if (a.n() != n_) throw std::invalid_argument("Element: term strand count mismatch");
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <CoefficientField K>
void ElementT<K>::check_compatible(const ElementT& o, const char* what) const {
    if (n_ != o.n_) throw std::invalid_argument(std::string(what) + ": strand counts differ");
    if (!(d_ == o.d_))
        throw std::invalid_argument(std::string(what) + ": loop parameter values differ");
}

template <CoefficientField K>
ElementT<K> ElementT<K>::operator-() const {
    ElementT out(n_, d_);
    for (const auto& [dg, c] : terms_) out.terms_.emplace(dg, -c);
    return out;
}

template <CoefficientField K>
ElementT<K>& ElementT<K>::operator+=(const ElementT& o) {
    check_compatible(o, "element add");
    for (const auto& [dg, c] : o.terms_) add_term(dg, c);
    return *this;
}

template <CoefficientField K>
ElementT<K>& ElementT<K>::operator-=(const ElementT& o) {
    check_compatible(o, "element subtract");
    for (const auto& [dg, c] : o.terms_) add_term(dg, -c);
    return *this;
}

template <CoefficientField K>
ElementT<K>& ElementT<K>::operator*=(const K& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [dg, c] : terms_) c *= s;
    return *this;
}

namespace {

// "1/2" stays "1/2"; a leading minus moves into the separator.
void append_signed(std::ostream& os, bool first, const std::string& piece,
                   const std::string& tail) {
    const bool negative = !piece.empty() && piece[0] == '-';
    const std::string body = negative ? piece.substr(1) : piece;
    if (first) os << (negative ? "-" : "") << body << tail;
    else os << (negative ? " - " : " + ") << body << tail;
}

}  // namespace

template <CoefficientField K>
std::string ElementT<K>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    if constexpr (std::same_as<K, RationalFunction>) {
        if (n_ <= 7) {
            try {
                const ClassTable t = class_decompose(*this);
                bool first = true;
                for (std::size_t l = 0; l < t.coeff.size(); ++l) {
                    if (t.coeff[l].is_zero()) continue;
                    append_signed(os, first, t.coeff[l].str(),
                                  " [" + std::to_string(n_ - 2 * static_cast<int>(l)) + "]_" +
                                      std::to_string(n_));
                    first = false;
                }
                return os.str();
            } catch (const ClassUniformityError&) {
                // fall through to the term-by-term form
            }
        }
    }
    bool first = true;
    for (const auto& [dg, c] : terms_) {
        append_signed(os, first, c.str(), " " + dg.str());
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Free operations.

template <CoefficientField K>
ElementT<K> combine(const ElementT<K>& a, const ElementT<K>& b, const K& s, const K& t) {
    a.check_compatible(b, "combine");
    ElementT<K> out(a.n(), a.d_value());
    if (!s.is_zero())
        for (const auto& [dg, c] : a.terms()) out.add_term(dg, c * s);
    if (!t.is_zero())
        for (const auto& [dg, c] : b.terms()) out.add_term(dg, c * t);
    return out;
}

template <CoefficientField K>
ElementT<K> mul_with_path(const ElementT<K>& a, const ElementT<K>& b, MulPath path) {
    a.check_compatible(b, "element product");
    switch (path) {
        case MulPath::direct:
            return mul_direct(a, b);
        case MulPath::counting:
            return mul_counting(a, b);
        case MulPath::automatic:
            break;
    }
    const std::size_t pairs = a.term_count() * b.term_count();
    if (pairs >= kEnginePairMin && a.n() <= kMaxPackedStrands) {
        EnginePlan<K> plan;
        if (build_plan(a, b, plan, nullptr))
            return assemble_counts(*plan.bi, plan.L, plan.cells, plan.va, plan.vb, a.d_value(),
                                   run_counting(plan));
    }
    return mul_direct(a, b);
}

template <CoefficientField K>
ElementT<K> operator*(const ElementT<K>& a, const ElementT<K>& b) {
    return mul_with_path(a, b, MulPath::automatic);
}

template <CoefficientField K>
K markov_trace(const ElementT<K>& a) {
    K total{};
    std::vector<K> dpow(static_cast<std::size_t>(a.n()) + 1);
    bool have = false;
    for (const auto& [dg, c] : a.terms()) {
        const auto loops = static_cast<std::size_t>(dg.closure_loops());
        if (!have) {
            for (std::size_t l = 0; l < dpow.size(); ++l)
                dpow[l] = a.d_value().pow(static_cast<unsigned long>(l));
            have = true;
        }
        total += c * dpow[loops];
    }
    return total;
}

template <CoefficientField K>
ElementT<K> embedded(const ElementT<K>& a, int m) {
    ElementT<K> out(m, a.d_value());
    for (const auto& [dg, c] : a.terms()) out.add_term(dg.embedded(m), c);
    return out;
}

NumericElement eval_at(const Element& a, const BigRational& v) {
    NumericElement out(a.n(), v);
    for (const auto& [dg, c] : a.terms()) {
        try {
            out.add_term(dg, c.eval(v));
        } catch (const PoleError& e) {
            throw PoleError(e.factor(), v, "coefficient of " + dg.str());
        }
    }
    return out;
}

ClassTable class_decompose(const Element& a) {
    ClassTable t(a.n());
    std::vector<const Diagram*> rep(t.coeff.size(), nullptr);
    for (const Diagram& dg : cached_basis(a.n())) {
        const auto l = static_cast<std::size_t>(class_of(a.n(), dg));
        const RationalFunction c = a.coeff(dg);
        if (rep[l] == nullptr) {
            rep[l] = &dg;
            t.coeff[l] = c;
        } else if (t.coeff[l] != c) {
            throw ClassUniformityError(*rep[l], dg);
        }
    }
    return t;
}

Element class_expand(const ClassTable& t) {
    if (t.n < 1) throw std::invalid_argument("class_expand: strand count must be positive");
    if (t.coeff.size() != static_cast<std::size_t>(t.n / 2 + 1))
        throw std::invalid_argument("class_expand: coefficient table has the wrong size");
    Element out(t.n);
    for (const Diagram& dg : cached_basis(t.n)) {
        const auto l = static_cast<std::size_t>(class_of(t.n, dg));
        out.add_term(dg, t.coeff[l]);
    }
    return out;
}

template <CoefficientField K>
std::ostream& operator<<(std::ostream& os, const ElementT<K>& a) {
    return os << a.str();
}

// ---------------------------------------------------------------------------
// ProductCounts: a retained counting pass.

struct ProductCounts::Impl {
    EnginePlan<RationalFunction> plan;
    std::vector<std::uint32_t> counts;
    RationalFunction d;
};

ProductCounts::ProductCounts(const Element& a, const Element& b) {
    a.check_compatible(b, "product counts");
    auto impl = std::make_unique<Impl>();
    std::string why;
    if (!build_plan(a, b, impl->plan, &why))
        throw std::invalid_argument("product counts: " + why);
    impl->counts = run_counting(impl->plan);
    impl->d = a.d_value();
    impl_ = std::move(impl);
}

ProductCounts::~ProductCounts() = default;
ProductCounts::ProductCounts(ProductCounts&&) noexcept = default;
ProductCounts& ProductCounts::operator=(ProductCounts&&) noexcept = default;

Element ProductCounts::exact() const {
    const Impl& im = *impl_;
    return assemble_counts(*im.plan.bi, im.plan.L, im.plan.cells, im.plan.va, im.plan.vb, im.d,
                           im.counts);
}

NumericElement ProductCounts::at(const BigRational& v) const {
    const Impl& im = *impl_;
    std::vector<BigRational> va(im.plan.va.size()), vb(im.plan.vb.size());
    for (std::size_t i = 0; i < va.size(); ++i) va[i] = im.plan.va[i].eval(v);
    for (std::size_t i = 0; i < vb.size(); ++i) vb[i] = im.plan.vb[i].eval(v);
    return assemble_counts(*im.plan.bi, im.plan.L, im.plan.cells, va, vb, v, im.counts);
}

// ---------------------------------------------------------------------------
// Explicit instantiations for the two coefficient fields.

template class ElementT<RationalFunction>;
template class ElementT<BigRational>;

template Element combine(const Element&, const Element&, const RationalFunction&,
                         const RationalFunction&);
template NumericElement combine(const NumericElement&, const NumericElement&,
                                const BigRational&, const BigRational&);
template Element mul_with_path(const Element&, const Element&, MulPath);
template NumericElement mul_with_path(const NumericElement&, const NumericElement&, MulPath);
template Element operator*(const Element&, const Element&);
template NumericElement operator*(const NumericElement&, const NumericElement&);
template RationalFunction markov_trace(const Element&);
template BigRational markov_trace(const NumericElement&);
template Element embedded(const Element&, int);
template NumericElement embedded(const NumericElement&, int);
template std::ostream& operator<<(std::ostream&, const Element&);
template std::ostream& operator<<(std::ostream&, const NumericElement&);

}  // namespace vtl
