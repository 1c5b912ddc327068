#pragma once

// Generic decorated cospans and decorated corelations over finite sets.
//
// A decoration functor is supplied at runtime as a DecorationContract: a
// bundle of closures giving the carrier, the covariant action (push), the
// contravariant action along M-maps (pull), the lax monoidal coherence, and
// the unit. Decorations themselves are type-erased. Contracts must be pure:
// none of the closures may mutate observable state.

#include <any>
#include <cstdint>
#include <functional>
#include <random>
#include <variant>

#include "corel/corelation.hpp"

namespace corel {

using Decoration = std::any;

/// Raised when a contract cannot transport a decoration along the requested
/// map (e.g. circuit decorations do not descend along every injection).
struct DecorationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecorationContract {
    std::string name;

    /// Covariant action along f: n -> m.
    std::function<Decoration(const FinFn&, const Decoration&)> push;
    /// Contravariant action along an M-map m: p -> n, moving a decoration on
    /// n back to p. Only required for M-maps of the supported systems.
    std::function<Decoration(const FinFn&, const Decoration&)> pull;
    /// Lax coherence: decorations on n and m to a decoration on n + m.
    std::function<Decoration(std::size_t, const Decoration&, std::size_t, const Decoration&)>
        coherence;
    /// The unit decoration on the monoidal unit object.
    std::function<Decoration()> unit;
    /// The empty decoration on n (the unit pushed forward along !).
    std::function<Decoration(std::size_t)> empty;
    std::function<bool(const Decoration&, const Decoration&)> equal;
    /// Random decoration on n, for law checking.
    std::function<Decoration(std::size_t, std::mt19937_64&)> sample;
    std::function<std::string(const Decoration&)> show;
    /// Whether pull handles every M-map of the given system.
    std::function<bool(FactorisationSystem)> supports;
};

struct DecoratedCospan {
    Cospan cospan;
    Decoration dec; // an element of carrier(apex)
};

struct DecoratedCorelation {
    Corelation corel;
    Decoration dec;
};

inline Decoration empty_decoration(const DecorationContract& F, std::size_t n) {
    return F.empty ? F.empty(n) : F.push(FinFn::initial(n), F.unit());
}

inline DecoratedCospan dcospan_identity(const DecorationContract& F, std::size_t n) {
    return DecoratedCospan{Cospan::identity(n), empty_decoration(F, n)};
}

inline DecoratedCospan dcospan_frobenius(const DecorationContract& F, std::size_t n, Frob which) {
    Cospan c = frobenius(n, which);
    return DecoratedCospan{c, empty_decoration(F, c.apex())};
}

inline DecoratedCospan dcospan_braiding(const DecorationContract& F, std::size_t x, std::size_t y) {
    Cospan c = Cospan::braiding(x, y);
    return DecoratedCospan{c, empty_decoration(F, c.apex())};
}

/// Compose the cospans by pushout and the decorations by the chain
///   coherence, then push along the copairing [j_N, j_M].
inline DecoratedCospan dcospan_compose(const DecorationContract& F, const DecoratedCospan& f,
                                       const DecoratedCospan& g) {
    if (f.cospan.right_foot() != g.cospan.left_foot())
        throw std::invalid_argument("dcospan_compose: middle feet do not match");
    Pushout p = pushout(f.cospan.right, g.cospan.left);
    Cospan c(compose(p.into_left, f.cospan.left), compose(p.into_right, g.cospan.right));
    Decoration both = F.coherence(f.cospan.apex(), f.dec, g.cospan.apex(), g.dec);
    Decoration dec = F.push(copair(p.into_left, p.into_right), both);
    return DecoratedCospan{std::move(c), std::move(dec)};
}

inline DecoratedCospan dcospan_tensor(const DecorationContract& F, const DecoratedCospan& f,
                                      const DecoratedCospan& g) {
    return DecoratedCospan{tensor(f.cospan, g.cospan),
                           F.coherence(f.cospan.apex(), f.dec, g.cospan.apex(), g.dec)};
}

/// Reduce a decorated cospan to a decorated corelation: take the E-part of
/// the cospan and pull the decoration back along the M-factor of the
/// copairing (the restricted decoration).
inline DecoratedCorelation restrict_decorated(const DecorationContract& F,
                                              FactorisationSystem sys,
                                              const DecoratedCospan& f) {
    Corelation reduced = e_part(sys, f.cospan);
    FinFn m = m_part(sys, f.cospan);
    return DecoratedCorelation{std::move(reduced), F.pull(m, f.dec)};
}

/// The functor FCospan -> FCorel.
inline DecoratedCorelation blackbox(const DecorationContract& F, FactorisationSystem sys,
                                    const DecoratedCospan& f) {
    return restrict_decorated(F, sys, f);
}

inline DecoratedCorelation dcorel_identity(const DecorationContract& F, FactorisationSystem sys,
                                           std::size_t n) {
    return blackbox(F, sys, dcospan_identity(F, n));
}

inline DecoratedCorelation dcorel_frobenius(const DecorationContract& F, FactorisationSystem sys,
                                            std::size_t n, Frob which) {
    return blackbox(F, sys, dcospan_frobenius(F, n, which));
}

inline DecoratedCorelation dcorel_braiding(const DecorationContract& F, FactorisationSystem sys,
                                           std::size_t x, std::size_t y) {
    return blackbox(F, sys, dcospan_braiding(F, x, y));
}

/// Compose as decorated cospans, then restrict.
inline DecoratedCorelation dcorel_compose(const DecorationContract& F, const DecoratedCorelation& f,
                                          const DecoratedCorelation& g) {
    if (f.corel.sys != g.corel.sys)
        throw std::invalid_argument("dcorel_compose: factorisation systems differ");
    DecoratedCospan composite =
        dcospan_compose(F, DecoratedCospan{f.corel.cospan, f.dec}, DecoratedCospan{g.corel.cospan, g.dec});
    return restrict_decorated(F, f.corel.sys, composite);
}

inline DecoratedCorelation dcorel_tensor(const DecorationContract& F, const DecoratedCorelation& f,
                                         const DecoratedCorelation& g) {
    DecoratedCospan t =
        dcospan_tensor(F, DecoratedCospan{f.corel.cospan, f.dec}, DecoratedCospan{g.corel.cospan, g.dec});
    return restrict_decorated(F, f.corel.sys, t);
}

namespace detail {

// Enumerate the apex bijections of b onto a that commute with both legs.
// Apex points are grouped by their fiber pair; only points with identical
// fibers are interchangeable, so the search is a product of per-group
// permutations. Groups larger than the cap make the search infeasible and
// raise an error.
inline constexpr std::size_t kIsoGroupCap = 8;

template <class Try>
bool for_each_apex_bijection(const Cospan& a, const Cospan& b, Try&& attempt) {
    if (a.left_foot() != b.left_foot() || a.right_foot() != b.right_foot() || a.apex() != b.apex())
        return false;

    const std::size_t n = a.apex();
    std::vector<CanonicalCospan::Fiber> fa(n), fb(n);
    for (std::size_t x = 0; x < a.left.dom; ++x) fa[a.left(x)].first.push_back(x);
    for (std::size_t y = 0; y < a.right.dom; ++y) fa[a.right(y)].second.push_back(y);
    for (std::size_t x = 0; x < b.left.dom; ++x) fb[b.left(x)].first.push_back(x);
    for (std::size_t y = 0; y < b.right.dom; ++y) fb[b.right(y)].second.push_back(y);

    // Group apex points by fiber signature.
    std::vector<std::size_t> order_a(n), order_b(n);
    std::iota(order_a.begin(), order_a.end(), std::size_t{0});
    std::iota(order_b.begin(), order_b.end(), std::size_t{0});
    auto by_fiber = [](const auto& fibers) {
        return [&fibers](std::size_t i, std::size_t j) { return fibers[i] < fibers[j]; };
    };
    std::sort(order_a.begin(), order_a.end(), by_fiber(fa));
    std::sort(order_b.begin(), order_b.end(), by_fiber(fb));
    for (std::size_t k = 0; k < n; ++k)
        if (fa[order_a[k]] != fb[order_b[k]]) return false; // different canonical forms

    // Group boundaries in the sorted order.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t k = 0; k < n;) {
        std::size_t j = k;
        while (j < n && fa[order_a[j]] == fa[order_a[k]]) ++j;
        if (j - k > kIsoGroupCap)
            throw DecorationError(
                "decorated isomorphism search: more than 8 interchangeable apex points");
        groups.emplace_back(k, j);
        k = j;
    }

    std::vector<std::size_t> sigma(n); // apex of b -> apex of a
    std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
        if (gi == groups.size()) return attempt(sigma);
        auto [lo, hi] = groups[gi];
        std::vector<std::size_t> perm(order_a.begin() + static_cast<std::ptrdiff_t>(lo),
                                      order_a.begin() + static_cast<std::ptrdiff_t>(hi));
        std::sort(perm.begin(), perm.end());
        do {
            for (std::size_t k = lo; k < hi; ++k) sigma[order_b[k]] = perm[k - lo];
            if (rec(gi + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    return rec(0);
}

} // namespace detail

/// Isomorphism of decorated cospans: an apex bijection commuting with the
/// legs that carries one decoration to the other.
inline bool isomorphic(const DecorationContract& F, const DecoratedCospan& a,
                       const DecoratedCospan& b) {
    return detail::for_each_apex_bijection(
        a.cospan, b.cospan, [&](const std::vector<std::size_t>& sigma) {
            FinFn s(b.cospan.apex(), a.cospan.apex(), sigma);
            return F.equal(a.dec, F.push(s, b.dec));
        });
}

inline bool isomorphic(const DecorationContract& F, const DecoratedCorelation& a,
                       const DecoratedCorelation& b) {
    if (a.corel.sys != b.corel.sys) return false;
    return isomorphic(F, DecoratedCospan{a.corel.cospan, a.dec},
                      DecoratedCospan{b.corel.cospan, b.dec});
}

/// An arrow in the poset of factorisation systems (source above target:
/// M(from) must be contained in M(to)).
struct PosetArrow {
    FactorisationSystem from, to;
};

/// Hypergraph functor between decorated corelation categories induced by a
/// monoidal natural transformation theta between the decorating functors.
/// The corelation is re-reduced under the target system, and the image
/// decoration is theta(dec) pulled back along the new M-factor.
inline DecoratedCorelation transform_functor(
    const DecorationContract& target, PosetArrow arrow,
    const std::function<Decoration(std::size_t, const Decoration&)>& theta,
    const DecoratedCorelation& f) {
    if (f.corel.sys != arrow.from)
        throw std::invalid_argument("transform_functor: corelation not reduced under source system");
    if (!m_contained(arrow.from, arrow.to))
        throw std::invalid_argument("transform_functor: poset arrow requires M(from) <= M(to)");
    Corelation reduced = e_part(arrow.to, f.corel.cospan);
    FinFn m = m_part(arrow.to, f.corel.cospan);
    Decoration translated = theta(f.corel.apex(), f.dec);
    return DecoratedCorelation{std::move(reduced), target.pull(m, translated)};
}

/// The constant {*} decoration: decorated corelations over it are plain
/// corelations.
inline DecorationContract trivial_contract() {
    DecorationContract F;
    F.name = "trivial";
    F.push = [](const FinFn&, const Decoration&) { return Decoration{std::monostate{}}; };
    F.pull = F.push;
    F.coherence = [](std::size_t, const Decoration&, std::size_t, const Decoration&) {
        return Decoration{std::monostate{}};
    };
    F.unit = [] { return Decoration{std::monostate{}}; };
    F.empty = [](std::size_t) { return Decoration{std::monostate{}}; };
    F.equal = [](const Decoration&, const Decoration&) { return true; };
    F.sample = [](std::size_t, std::mt19937_64&) { return Decoration{std::monostate{}}; };
    F.show = [](const Decoration&) { return std::string("*"); };
    F.supports = [](FactorisationSystem) { return true; };
    return F;
}

} // namespace corel
