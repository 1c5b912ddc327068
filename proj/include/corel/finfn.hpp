#pragma once

// Finite sets as ordinals {0..n-1}, total functions between them, and the
// colimit machinery everything else is built from: coproducts, copairings,
// pushouts, and the three factorisation systems on finite sets.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace corel {

/// A total function between finite ordinals, stored as a lookup table.
/// table[i] is the image of i; every entry must be < cod.
struct FinFn {
    std::size_t dom = 0;
    std::size_t cod = 0;
    std::vector<std::size_t> table;

    FinFn() = default;
    FinFn(std::size_t d, std::size_t c, std::vector<std::size_t> t)
        : dom(d), cod(c), table(std::move(t)) {
        if (table.size() != dom)
            throw std::invalid_argument("FinFn: table length != dom");
        for (std::size_t v : table)
            if (v >= cod) throw std::invalid_argument("FinFn: entry out of codomain");
    }

    std::size_t operator()(std::size_t i) const { return table[i]; }

    bool operator==(const FinFn&) const = default;

    static FinFn identity(std::size_t n) {
        std::vector<std::size_t> t(n);
        std::iota(t.begin(), t.end(), std::size_t{0});
        return FinFn(n, n, std::move(t));
    }

    /// The unique map !: 0 -> n from the empty ordinal.
    static FinFn initial(std::size_t n) { return FinFn(0, n, {}); }

    /// The constant map n -> 1 (or more generally onto a chosen point).
    static FinFn constant(std::size_t n, std::size_t cod, std::size_t value) {
        return FinFn(n, cod, std::vector<std::size_t>(n, value));
    }

    bool is_injective() const {
        std::vector<char> seen(cod, 0);
        for (std::size_t v : table) {
            if (seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    bool is_surjective() const {
        std::vector<char> seen(cod, 0);
        std::size_t hit = 0;
        for (std::size_t v : table)
            if (!seen[v]) { seen[v] = 1; ++hit; }
        return hit == cod;
    }

    bool is_bijective() const { return dom == cod && is_injective(); }
};

/// g after f.
inline FinFn compose(const FinFn& g, const FinFn& f) {
    if (f.cod != g.dom)
        throw std::invalid_argument("compose: codomain/domain mismatch");
    std::vector<std::size_t> t(f.dom);
    for (std::size_t i = 0; i < f.dom; ++i) t[i] = g.table[f.table[i]];
    return FinFn(f.dom, g.cod, std::move(t));
}

struct Coproduct {
    std::size_t size;
    FinFn inl, inr;
};

/// n + m with the two injections: inl is the identity shift 0..n-1, inr
/// shifts by n.
inline Coproduct coproduct(std::size_t n, std::size_t m) {
    std::vector<std::size_t> l(n), r(m);
    for (std::size_t i = 0; i < n; ++i) l[i] = i;
    for (std::size_t j = 0; j < m; ++j) r[j] = n + j;
    return Coproduct{n + m, FinFn(n, n + m, std::move(l)), FinFn(m, n + m, std::move(r))};
}

/// The copairing [f,g]: dom f + dom g -> common codomain.
inline FinFn copair(const FinFn& f, const FinFn& g) {
    if (f.cod != g.cod)
        throw std::invalid_argument("copair: codomain mismatch");
    std::vector<std::size_t> t;
    t.reserve(f.dom + g.dom);
    t.insert(t.end(), f.table.begin(), f.table.end());
    t.insert(t.end(), g.table.begin(), g.table.end());
    return FinFn(f.dom + g.dom, f.cod, std::move(t));
}

/// f + g acting blockwise between coproducts.
inline FinFn tensor(const FinFn& f, const FinFn& g) {
    std::vector<std::size_t> t;
    t.reserve(f.dom + g.dom);
    for (std::size_t v : f.table) t.push_back(v);
    for (std::size_t v : g.table) t.push_back(f.cod + v);
    return FinFn(f.dom + g.dom, f.cod + g.cod, std::move(t));
}

/// The block swap n + m -> m + n.
inline FinFn block_swap(std::size_t n, std::size_t m) {
    std::vector<std::size_t> t(n + m);
    for (std::size_t i = 0; i < n; ++i) t[i] = m + i;
    for (std::size_t j = 0; j < m; ++j) t[n + j] = j;
    return FinFn(n + m, m + n, std::move(t));
}

namespace detail {

// Small union-find over 0..n-1.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

struct Pushout {
    std::size_t size;   // apex of the pushout
    FinFn into_left;    // j_N : N -> P
    FinFn into_right;   // j_M : M -> P
};

/// Pushout of N <-f- Y -g-> M, computed as the quotient of N + M by the
/// equivalence generated by f(y) ~ g(y). Class representatives are
/// renumbered in order of first appearance so the result is deterministic.
inline Pushout pushout(const FinFn& f, const FinFn& g) {
    if (f.dom != g.dom)
        throw std::invalid_argument("pushout: legs must share their domain");
    const std::size_t n = f.cod, m = g.cod;
    detail::UnionFind uf(n + m);
    for (std::size_t y = 0; y < f.dom; ++y) uf.unite(f.table[y], n + g.table[y]);

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cls(n + m, unset);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n + m; ++i) {
        std::size_t r = uf.find(i);
        if (cls[r] == unset) cls[r] = next++;
    }
    std::vector<std::size_t> jn(n), jm(m);
    for (std::size_t i = 0; i < n; ++i) jn[i] = cls[uf.find(i)];
    for (std::size_t j = 0; j < m; ++j) jm[j] = cls[uf.find(n + j)];
    return Pushout{next, FinFn(n, next, std::move(jn)), FinFn(m, next, std::move(jm))};
}

/// The three factorisation systems available on finite sets: the epi-mono
/// system plus the two trivial ones (all, iso) and (iso, all).
enum class SystemKind { EpiMono, AllIso, IsoAll };

struct FactorisationSystem {
    SystemKind kind = SystemKind::EpiMono;

    bool in_E(const FinFn& f) const {
        switch (kind) {
            case SystemKind::EpiMono: return f.is_surjective();
            case SystemKind::AllIso: return true;
            case SystemKind::IsoAll: return f.is_bijective();
        }
        return false;
    }
    bool in_M(const FinFn& f) const {
        switch (kind) {
            case SystemKind::EpiMono: return f.is_injective();
            case SystemKind::AllIso: return f.is_bijective();
            case SystemKind::IsoAll: return true;
        }
        return false;
    }

    bool operator==(const FactorisationSystem&) const = default;

    std::string name() const {
        switch (kind) {
            case SystemKind::EpiMono: return "epi-mono";
            case SystemKind::AllIso: return "all-iso";
            case SystemKind::IsoAll: return "iso-all";
        }
        return "?";
    }
};

inline constexpr FactorisationSystem epi_mono{SystemKind::EpiMono};
inline constexpr FactorisationSystem all_iso{SystemKind::AllIso};
inline constexpr FactorisationSystem iso_all{SystemKind::IsoAll};

/// Position in the M-inclusion order: isos < injections < all maps.
inline int m_rank(FactorisationSystem sys) {
    switch (sys.kind) {
        case SystemKind::AllIso: return 0;
        case SystemKind::EpiMono: return 1;
        case SystemKind::IsoAll: return 2;
    }
    return -1;
}

/// True when every M-map of `a` is an M-map of `b`.
inline bool m_contained(FactorisationSystem a, FactorisationSystem b) {
    return m_rank(a) <= m_rank(b);
}

struct Factorisation {
    FinFn e, m; // f = m . e
};

/// Factor f as m . e with e in E and m in M. For the epi-mono system the
/// intermediate ordinal lists image elements by least preimage index, which
/// makes the result a pure function rather than a choice up to iso.
inline Factorisation factor(FactorisationSystem sys, const FinFn& f) {
    switch (sys.kind) {
        case SystemKind::AllIso:
            return Factorisation{f, FinFn::identity(f.cod)};
        case SystemKind::IsoAll:
            return Factorisation{FinFn::identity(f.dom), f};
        case SystemKind::EpiMono: {
            constexpr std::size_t unset = static_cast<std::size_t>(-1);
            std::vector<std::size_t> index(f.cod, unset);
            std::vector<std::size_t> image;
            std::vector<std::size_t> e(f.dom);
            for (std::size_t i = 0; i < f.dom; ++i) {
                std::size_t v = f.table[i];
                if (index[v] == unset) {
                    index[v] = image.size();
                    image.push_back(v);
                }
                e[i] = index[v];
            }
            const std::size_t k = image.size();
            return Factorisation{FinFn(f.dom, k, std::move(e)), FinFn(k, f.cod, std::move(image))};
        }
    }
    throw std::logic_error("factor: unknown system");
}

} // namespace corel
