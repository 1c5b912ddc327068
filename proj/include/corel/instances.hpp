#pragma once

// Category instances for the law-checking harness: cospans, corelations,
// decorated cospans/corelations over any contract, rig spans and matrices,
// and linear relations. Also the functor maps between them that the
// checker exercises.

#include "corel/circuits.hpp"
#include "corel/lawcheck.hpp"
#include "corel/linrel.hpp"
#include "corel/rigmat.hpp"

namespace corel {

namespace detail {

/// Random cospan x -> n <- y with apex bounded by the budget.
inline Cospan sample_cospan(std::size_t x, std::size_t y, std::size_t budget,
                            std::mt19937_64& rng) {
    std::size_t lo = (x + y > 0) ? 1 : 0;
    std::size_t hi = std::max<std::size_t>(budget, lo);
    std::uniform_int_distribution<std::size_t> apex_dist(lo, hi);
    std::size_t n = apex_dist(rng);
    auto leg = [&](std::size_t foot) {
        std::vector<std::size_t> t(foot);
        if (n > 0) {
            std::uniform_int_distribution<std::size_t> point(0, n - 1);
            for (auto& v : t) v = point(rng);
        }
        return FinFn(foot, n, std::move(t));
    };
    return Cospan(leg(x), leg(y));
}

} // namespace detail

inline CategoryInstance cospan_instance() {
    CategoryInstance inst;
    inst.name = "cospan";
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a + b; };
    inst.unit_obj = 0;
    inst.identity = [](std::size_t n) { return Cospan::identity(n); };
    inst.frobenius = [](std::size_t n, Frob k) { return frobenius(n, k); };
    inst.braiding = [](std::size_t x, std::size_t y) { return Cospan::braiding(x, y); };
    inst.compose = [](const std::any& f, const std::any& g) {
        return compose(std::any_cast<const Cospan&>(f), std::any_cast<const Cospan&>(g));
    };
    inst.tensor = [](const std::any& f, const std::any& g) {
        return tensor(std::any_cast<const Cospan&>(f), std::any_cast<const Cospan&>(g));
    };
    inst.equal = [](const std::any& f, const std::any& g) {
        return isomorphic(std::any_cast<const Cospan&>(f), std::any_cast<const Cospan&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& c = std::any_cast<const Cospan&>(f);
        return std::array<std::size_t, 2>{c.left_foot(), c.right_foot()};
    };
    inst.sample = [](std::size_t x, std::size_t y, std::size_t budget, std::mt19937_64& rng) {
        return detail::sample_cospan(x, y, budget, rng);
    };
    inst.show = [](const std::any& f) { return canonicalize(std::any_cast<const Cospan&>(f)).str(); };
    return inst;
}

/// The fixture with mu twisted by a transposition: commutativity survives,
/// the Frobenius law does not. Used to demonstrate counterexample reports.
inline CategoryInstance corrupted_cospan_instance() {
    CategoryInstance inst = cospan_instance();
    inst.name = "broken-cospan";
    inst.frobenius = [](std::size_t n, Frob k) {
        Cospan gen = frobenius(n, k);
        if (k == Frob::Mu && n >= 2) {
            std::vector<std::size_t> swap_first(n);
            std::iota(swap_first.begin(), swap_first.end(), std::size_t{0});
            std::swap(swap_first[0], swap_first[1]);
            gen = compose(gen, Cospan::of_map(FinFn(n, n, std::move(swap_first))));
        }
        return gen;
    };
    return inst;
}

inline CategoryInstance corel_instance(FactorisationSystem sys) {
    CategoryInstance inst;
    inst.name = sys.name() + "-corel";
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a + b; };
    inst.unit_obj = 0;
    inst.identity = [sys](std::size_t n) { return identity_corelation(sys, n); };
    inst.frobenius = [sys](std::size_t n, Frob k) { return e_part(sys, frobenius(n, k)); };
    inst.braiding = [sys](std::size_t x, std::size_t y) {
        return e_part(sys, Cospan::braiding(x, y));
    };
    inst.compose = [](const std::any& f, const std::any& g) {
        return compose(std::any_cast<const Corelation&>(f), std::any_cast<const Corelation&>(g));
    };
    inst.tensor = [](const std::any& f, const std::any& g) {
        return tensor(std::any_cast<const Corelation&>(f), std::any_cast<const Corelation&>(g));
    };
    inst.equal = [](const std::any& f, const std::any& g) {
        return isomorphic(std::any_cast<const Corelation&>(f), std::any_cast<const Corelation&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& c = std::any_cast<const Corelation&>(f);
        return std::array<std::size_t, 2>{c.left_foot(), c.right_foot()};
    };
    inst.sample = [sys](std::size_t x, std::size_t y, std::size_t budget, std::mt19937_64& rng) {
        return e_part(sys, detail::sample_cospan(x, y, budget, rng));
    };
    inst.show = [](const std::any& f) {
        return canonicalize(std::any_cast<const Corelation&>(f).cospan).str();
    };
    return inst;
}

/// Decorated cospans over an arbitrary contract (composition never pulls,
/// so any contract works here).
inline CategoryInstance decorated_cospan_instance(DecorationContract F) {
    auto contract = std::make_shared<DecorationContract>(std::move(F));
    CategoryInstance inst;
    inst.name = contract->name + "-cospan";
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a + b; };
    inst.unit_obj = 0;
    inst.identity = [contract](std::size_t n) { return dcospan_identity(*contract, n); };
    inst.frobenius = [contract](std::size_t n, Frob k) { return dcospan_frobenius(*contract, n, k); };
    inst.braiding = [contract](std::size_t x, std::size_t y) {
        return dcospan_braiding(*contract, x, y);
    };
    inst.compose = [contract](const std::any& f, const std::any& g) {
        return dcospan_compose(*contract, std::any_cast<const DecoratedCospan&>(f),
                               std::any_cast<const DecoratedCospan&>(g));
    };
    inst.tensor = [contract](const std::any& f, const std::any& g) {
        return dcospan_tensor(*contract, std::any_cast<const DecoratedCospan&>(f),
                              std::any_cast<const DecoratedCospan&>(g));
    };
    inst.equal = [contract](const std::any& f, const std::any& g) {
        return isomorphic(*contract, std::any_cast<const DecoratedCospan&>(f),
                          std::any_cast<const DecoratedCospan&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& c = std::any_cast<const DecoratedCospan&>(f);
        return std::array<std::size_t, 2>{c.cospan.left_foot(), c.cospan.right_foot()};
    };
    inst.sample = [contract](std::size_t x, std::size_t y, std::size_t budget,
                             std::mt19937_64& rng) {
        Cospan c = detail::sample_cospan(x, y, budget, rng);
        Decoration d = contract->sample(c.apex(), rng);
        return DecoratedCospan{std::move(c), std::move(d)};
    };
    inst.show = [contract](const std::any& f) {
        const auto& c = std::any_cast<const DecoratedCospan&>(f);
        return canonicalize(c.cospan).str() + " / " + contract->show(c.dec);
    };
    return inst;
}

/// Decorated corelations over a contract and system (the contract must
/// support pulls along the system's M-maps).
inline CategoryInstance decorated_corel_instance(DecorationContract F, FactorisationSystem sys) {
    auto contract = std::make_shared<DecorationContract>(std::move(F));
    CategoryInstance inst;
    inst.name = contract->name + "-" + sys.name() + "-corel";
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a + b; };
    inst.unit_obj = 0;
    inst.identity = [contract, sys](std::size_t n) { return dcorel_identity(*contract, sys, n); };
    inst.frobenius = [contract, sys](std::size_t n, Frob k) {
        return dcorel_frobenius(*contract, sys, n, k);
    };
    inst.braiding = [contract, sys](std::size_t x, std::size_t y) {
        return dcorel_braiding(*contract, sys, x, y);
    };
    inst.compose = [contract](const std::any& f, const std::any& g) {
        return dcorel_compose(*contract, std::any_cast<const DecoratedCorelation&>(f),
                              std::any_cast<const DecoratedCorelation&>(g));
    };
    inst.tensor = [contract](const std::any& f, const std::any& g) {
        return dcorel_tensor(*contract, std::any_cast<const DecoratedCorelation&>(f),
                             std::any_cast<const DecoratedCorelation&>(g));
    };
    inst.equal = [contract](const std::any& f, const std::any& g) {
        return isomorphic(*contract, std::any_cast<const DecoratedCorelation&>(f),
                          std::any_cast<const DecoratedCorelation&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& c = std::any_cast<const DecoratedCorelation&>(f);
        return std::array<std::size_t, 2>{c.corel.left_foot(), c.corel.right_foot()};
    };
    inst.sample = [contract, sys](std::size_t x, std::size_t y, std::size_t budget,
                                  std::mt19937_64& rng) {
        Cospan c = detail::sample_cospan(x, y, budget, rng);
        Decoration d = contract->sample(c.apex(), rng);
        return blackbox(*contract, sys, DecoratedCospan{std::move(c), std::move(d)});
    };
    inst.show = [contract](const std::any& f) {
        const auto& c = std::any_cast<const DecoratedCorelation&>(f);
        return canonicalize(c.corel.cospan).str() + " / " + contract->show(c.dec);
    };
    return inst;
}

/// LinCorel: linear relations as subspace-decorated iso-all corelations.
/// Morphisms are sampled directly as subspaces of k^{x+y}.
inline CategoryInstance lincorel_instance() {
    CategoryInstance inst = decorated_corel_instance(lin_contract(), iso_all);
    inst.name = "lincorel";
    static const DecorationContract F = lin_contract();
    inst.sample = [](std::size_t x, std::size_t y, std::size_t, std::mt19937_64& rng) {
        std::uniform_int_distribution<std::size_t> dims(0, std::min<std::size_t>(x + y, 2));
        std::uniform_int_distribution<int> entry(-2, 2);
        QMatrix rows(dims(rng), x + y);
        for (auto& e : rows.a) e = entry(rng);
        return lincorel_of(x, y, Subspace(x + y, rows));
    };
    inst.show = [](const std::any& f) {
        const auto& c = std::any_cast<const DecoratedCorelation&>(f);
        return F.show(c.dec);
    };
    return inst;
}

namespace detail {

template <class R>
DecoratedSpan<R> sample_span(std::size_t x, std::size_t y, std::size_t budget,
                             std::mt19937_64& rng) {
    std::size_t n = 0;
    if (x > 0 && y > 0) {
        std::uniform_int_distribution<std::size_t> apex_dist(0, std::max<std::size_t>(budget, 1));
        n = apex_dist(rng);
    }
    std::vector<std::size_t> li(n), ri(n);
    std::vector<typename R::value_type> dec(n, R::zero());
    if (n > 0) {
        std::uniform_int_distribution<std::size_t> lx(0, x - 1), ly(0, y - 1);
        for (std::size_t k = 0; k < n; ++k) {
            li[k] = lx(rng);
            ri[k] = ly(rng);
            dec[k] = R::sample(rng);
        }
    }
    return DecoratedSpan<R>(FinFn(n, x, std::move(li)), FinFn(n, y, std::move(ri)),
                            std::move(dec));
}

} // namespace detail

/// Multivalued matrices: rig-decorated spans composed by pullback, no
/// reduction. Equality is channel-multiset equality.
template <class R>
CategoryInstance rig_span_instance() {
    CategoryInstance inst;
    inst.name = std::string("rigspan:") + R::name;
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a * b; };
    inst.unit_obj = 1;
    inst.identity = [](std::size_t n) { return span_identity<R>(n); };
    inst.frobenius = [](std::size_t n, Frob k) { return span_frobenius<R>(n, k); };
    inst.braiding = [](std::size_t x, std::size_t y) { return span_braiding<R>(x, y); };
    inst.compose = [](const std::any& f, const std::any& g) {
        return span_compose(std::any_cast<const DecoratedSpan<R>&>(f),
                            std::any_cast<const DecoratedSpan<R>&>(g));
    };
    inst.tensor = [](const std::any& f, const std::any& g) {
        return span_tensor(std::any_cast<const DecoratedSpan<R>&>(f),
                           std::any_cast<const DecoratedSpan<R>&>(g));
    };
    inst.equal = [](const std::any& f, const std::any& g) {
        return isomorphic_spans(std::any_cast<const DecoratedSpan<R>&>(f),
                                std::any_cast<const DecoratedSpan<R>&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& s = std::any_cast<const DecoratedSpan<R>&>(f);
        return std::array<std::size_t, 2>{s.left_foot(), s.right_foot()};
    };
    inst.sample = [](std::size_t x, std::size_t y, std::size_t budget, std::mt19937_64& rng) {
        return detail::sample_span<R>(x, y, budget, rng);
    };
    inst.show = [](const std::any& f) {
        const auto& s = std::any_cast<const DecoratedSpan<R>&>(f);
        std::string out = "span{";
        for (std::size_t k = 0; k < s.apex(); ++k)
            out += (k ? " " : "") + std::to_string(s.into_left(k)) + "->" +
                   std::to_string(s.into_right(k)) + ":" + R::str(s.dec[k]);
        return out + "}";
    };
    return inst;
}

/// Matrices over R: rig-decorated corelations in canonical (one channel per
/// cell) form. Composition reduces the span composite, which is exactly
/// matrix multiplication.
template <class R>
CategoryInstance rig_matrix_instance() {
    CategoryInstance inst;
    inst.name = std::string("rigmat:") + R::name;
    inst.tensor_obj = [](std::size_t a, std::size_t b) { return a * b; };
    inst.unit_obj = 1;
    inst.identity = [](std::size_t n) { return mat_identity<R>(n); };
    inst.frobenius = [](std::size_t n, Frob k) { return to_matrix(span_frobenius<R>(n, k)); };
    inst.braiding = [](std::size_t x, std::size_t y) { return to_matrix(span_braiding<R>(x, y)); };
    inst.compose = [](const std::any& f, const std::any& g) {
        return mat_compose(std::any_cast<const RigMatrix<R>&>(f),
                           std::any_cast<const RigMatrix<R>&>(g));
    };
    inst.tensor = [](const std::any& f, const std::any& g) {
        return kronecker(std::any_cast<const RigMatrix<R>&>(f),
                         std::any_cast<const RigMatrix<R>&>(g));
    };
    inst.equal = [](const std::any& f, const std::any& g) {
        return mat_equal(std::any_cast<const RigMatrix<R>&>(f),
                         std::any_cast<const RigMatrix<R>&>(g));
    };
    inst.feet = [](const std::any& f) {
        const auto& m = std::any_cast<const RigMatrix<R>&>(f);
        return std::array<std::size_t, 2>{m.rows, m.cols};
    };
    inst.sample = [](std::size_t x, std::size_t y, std::size_t, std::mt19937_64& rng) {
        RigMatrix<R> m(x, y);
        for (auto& v : m.entries) v = R::sample(rng);
        return m;
    };
    inst.show = [](const std::any& f) {
        const auto& m = std::any_cast<const RigMatrix<R>&>(f);
        std::string out = "[";
        for (std::size_t i = 0; i < m.rows; ++i) {
            out += i ? "; " : "";
            for (std::size_t j = 0; j < m.cols; ++j) out += (j ? "," : "") + R::str(m.at(i, j));
        }
        return out + "]";
    };
    return inst;
}

/// The functor from cospans to epi-mono corelations (E-part on morphisms).
inline FunctorMap box_functor_map(const CategoryInstance& src, const CategoryInstance& dst,
                                  FactorisationSystem sys) {
    FunctorMap F;
    F.name = "box:" + sys.name();
    F.src = &src;
    F.dst = &dst;
    F.obj = [](std::size_t n) { return n; };
    F.map = [sys](const std::any& f) {
        return box_functor(sys, std::any_cast<const Cospan&>(f));
    };
    return F;
}

/// Corelation re-reduction down the factorisation-system poset.
inline FunctorMap poset_functor_map(const CategoryInstance& src, const CategoryInstance& dst,
                                    FactorisationSystem from, FactorisationSystem to) {
    FunctorMap F;
    F.name = "poset:" + from.name() + "->" + to.name();
    F.src = &src;
    F.dst = &dst;
    F.obj = [](std::size_t n) { return n; };
    F.map = [from, to](const std::any& f) {
        return poset_functor(from, to, std::any_cast<const Corelation&>(f));
    };
    return F;
}

/// Blackboxing multivalued matrices to matrices.
template <class R>
FunctorMap rig_blackbox_map(const CategoryInstance& src, const CategoryInstance& dst) {
    FunctorMap F;
    F.name = std::string("blackbox:rig:") + R::name;
    F.src = &src;
    F.dst = &dst;
    F.obj = [](std::size_t n) { return n; };
    F.map = [](const std::any& f) {
        return to_matrix(std::any_cast<const DecoratedSpan<R>&>(f));
    };
    return F;
}

/// Entrywise rig homomorphism on matrices (e.g. the support map from
/// naturals to booleans).
template <class RA, class RB, class H>
FunctorMap rig_hom_map(std::string name, const CategoryInstance& src, const CategoryInstance& dst,
                       H hom) {
    FunctorMap F;
    F.name = std::move(name);
    F.src = &src;
    F.dst = &dst;
    F.obj = [](std::size_t n) { return n; };
    F.map = [hom](const std::any& f) {
        return mat_map<RB>(hom, std::any_cast<const RigMatrix<RA>&>(f));
    };
    return F;
}

} // namespace corel
