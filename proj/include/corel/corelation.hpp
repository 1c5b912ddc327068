#pragma once

// (E,M)-corelations over finite sets: E-part reduction of cospans,
// corelation composition, the functor from cospans to corelations, and the
// functors down the poset of factorisation systems.

#include "corel/cospan.hpp"

namespace corel {

/// A cospan whose copairing X + Y -> N lies in E ("jointly E-like"), tagged
/// with the factorisation system it is reduced under. For the epi-mono
/// system this is equivalently a partition of X + Y.
struct Corelation {
    FactorisationSystem sys;
    Cospan cospan;

    std::size_t left_foot() const { return cospan.left_foot(); }
    std::size_t right_foot() const { return cospan.right_foot(); }
    std::size_t apex() const { return cospan.apex(); }
};

/// Factor the copairing [left,right] = m . e and keep the E side: the
/// corelation has legs e . iota_X and e . iota_Y into the intermediate
/// object.
inline Corelation e_part(FactorisationSystem sys, const Cospan& c) {
    Factorisation f = factor(sys, copair(c.left, c.right));
    const std::size_t x = c.left_foot();
    std::vector<std::size_t> l(f.e.table.begin(), f.e.table.begin() + static_cast<std::ptrdiff_t>(x));
    std::vector<std::size_t> r(f.e.table.begin() + static_cast<std::ptrdiff_t>(x), f.e.table.end());
    return Corelation{sys, Cospan(FinFn(x, f.e.cod, std::move(l)),
                                  FinFn(c.right_foot(), f.e.cod, std::move(r)))};
}

/// The M-factor of the copairing, i.e. the map from the reduced apex back
/// into the original one. Needed when decorations ride along.
inline FinFn m_part(FactorisationSystem sys, const Cospan& c) {
    return factor(sys, copair(c.left, c.right)).m;
}

inline Corelation identity_corelation(FactorisationSystem sys, std::size_t n) {
    return e_part(sys, Cospan::identity(n));
}

/// Compose as cospans, then reduce to the E-part.
inline Corelation compose(const Corelation& f, const Corelation& g) {
    if (f.sys != g.sys)
        throw std::invalid_argument("compose: corelations use different factorisation systems");
    return e_part(f.sys, compose(f.cospan, g.cospan));
}

/// Monoidal product. E is closed under +, so the coproduct of jointly
/// E-like cospans is again jointly E-like; we re-reduce anyway to keep the
/// apex ordering canonical.
inline Corelation tensor(const Corelation& f, const Corelation& g) {
    return e_part(f.sys, tensor(f.cospan, g.cospan));
}

/// The functor Cospan -> Corel: identity on objects, E-part on morphisms.
inline Corelation box_functor(FactorisationSystem sys, const Cospan& c) {
    return e_part(sys, c);
}

/// Hypergraph functor between corelation categories along the poset of
/// factorisation systems; defined when M(from) is contained in M(to).
inline Corelation poset_functor(FactorisationSystem from, FactorisationSystem to,
                                const Corelation& f) {
    if (f.sys != from)
        throw std::invalid_argument("poset_functor: corelation not reduced under the source system");
    if (!m_contained(from, to))
        throw std::invalid_argument("poset_functor: systems are not comparable (need M(from) <= M(to))");
    return e_part(to, f.cospan);
}

/// Equality of corelations as isomorphism classes.
inline bool isomorphic(const Corelation& a, const Corelation& b) {
    return a.sys == b.sys && isomorphic(a.cospan, b.cospan);
}

/// Epi-mono corelations X -> Y are exactly partitions of X + Y: block k is
/// the set of elements of X + Y hitting apex point k. Blocks come out sorted
/// internally; the list is sorted by smallest element.
inline std::vector<std::vector<std::size_t>> partition_blocks(const Corelation& c) {
    std::vector<std::vector<std::size_t>> blocks(c.apex());
    const std::size_t x = c.left_foot();
    for (std::size_t i = 0; i < x; ++i) blocks[c.cospan.left(i)].push_back(i);
    for (std::size_t j = 0; j < c.right_foot(); ++j) blocks[c.cospan.right(j)].push_back(x + j);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// Rebuild the epi-mono corelation from a partition of X + Y.
inline Corelation from_partition(std::size_t left, std::size_t right,
                                 const std::vector<std::vector<std::size_t>>& blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> apex_of(left + right, unset);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].empty())
            throw std::invalid_argument("from_partition: empty block");
        for (std::size_t e : blocks[k]) {
            if (e >= left + right || apex_of[e] != unset)
                throw std::invalid_argument("from_partition: not a partition of X+Y");
            apex_of[e] = k;
        }
    }
    for (std::size_t e = 0; e < left + right; ++e)
        if (apex_of[e] == unset)
            throw std::invalid_argument("from_partition: element missing from all blocks");
    std::vector<std::size_t> l(apex_of.begin(), apex_of.begin() + static_cast<std::ptrdiff_t>(left));
    std::vector<std::size_t> r(apex_of.begin() + static_cast<std::ptrdiff_t>(left), apex_of.end());
    Cospan c(FinFn(left, blocks.size(), std::move(l)), FinFn(right, blocks.size(), std::move(r)));
    return e_part(epi_mono, c);
}

} // namespace corel
