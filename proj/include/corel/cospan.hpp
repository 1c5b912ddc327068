#pragma once

// The hypergraph category Cospan(FinSet): composition by pushout, monoidal
// product by coproduct, the Frobenius generators, and a canonical form that
// decides isomorphism of cospans.

#include <algorithm>
#include <sstream>

#include "corel/finfn.hpp"

namespace corel {

/// A cospan X -> N <- Y of finite sets. Feet are the domains of the legs,
/// the shared codomain is the apex.
struct Cospan {
    FinFn left;  // X -> N
    FinFn right; // Y -> N

    Cospan() = default;
    Cospan(FinFn l, FinFn r) : left(std::move(l)), right(std::move(r)) {
        if (left.cod != right.cod)
            throw std::invalid_argument("Cospan: legs must share their codomain");
    }

    std::size_t left_foot() const { return left.dom; }
    std::size_t right_foot() const { return right.dom; }
    std::size_t apex() const { return left.cod; }

    bool operator==(const Cospan&) const = default;

    static Cospan identity(std::size_t n) {
        return Cospan(FinFn::identity(n), FinFn::identity(n));
    }
    /// f: X -> Y as the cospan X -f-> Y <-1- Y.
    static Cospan of_map(const FinFn& f) { return Cospan(f, FinFn::identity(f.cod)); }
    /// f^op: Y -1-> Y <-f- X.
    static Cospan of_op(const FinFn& f) { return Cospan(FinFn::identity(f.cod), f); }
    /// The braiding X + Y -> Y + X.
    static Cospan braiding(std::size_t x, std::size_t y) {
        return of_map(block_swap(x, y));
    }
};

enum class Frob { Mu, Eta, Delta, Epsilon };

/// The Frobenius generators on the object n:
///   mu = [1,1], eta = !, delta = [1,1]^op, epsilon = !^op.
inline Cospan frobenius(std::size_t n, Frob which) {
    const FinFn fold = copair(FinFn::identity(n), FinFn::identity(n));
    switch (which) {
        case Frob::Mu: return Cospan(fold, FinFn::identity(n));
        case Frob::Eta: return Cospan(FinFn::initial(n), FinFn::identity(n));
        case Frob::Delta: return Cospan(FinFn::identity(n), fold);
        case Frob::Epsilon: return Cospan(FinFn::identity(n), FinFn::initial(n));
    }
    throw std::logic_error("frobenius: unknown generator");
}

/// Composition by pushout over the shared foot.
inline Cospan compose(const Cospan& f, const Cospan& g) {
    if (f.right_foot() != g.left_foot())
        throw std::invalid_argument("compose: middle feet do not match");
    Pushout p = pushout(f.right, g.left);
    return Cospan(compose(p.into_left, f.left), compose(p.into_right, g.right));
}

/// Monoidal product: coproducts of feet, apices and legs.
inline Cospan tensor(const Cospan& f, const Cospan& g) {
    return Cospan(tensor(f.left, g.left), tensor(f.right, g.right));
}

/// Isomorphism-class canonical form. Each apex element contributes the pair
/// of its preimages in the feet; the sorted multiset of these fiber pairs,
/// together with the feet, determines the cospan up to an apex bijection
/// commuting with both legs.
struct CanonicalCospan {
    using Fiber = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
    std::size_t left_foot = 0;
    std::size_t right_foot = 0;
    std::vector<Fiber> fibers; // sorted; empty pairs (isolated apex points) retained

    bool operator==(const CanonicalCospan&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << left_foot << "->" << right_foot << " {";
        bool first_fiber = true;
        for (const auto& [xs, ys] : fibers) {
            if (!first_fiber) os << ", ";
            first_fiber = false;
            os << "(";
            for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
            os << "|";
            for (std::size_t i = 0; i < ys.size(); ++i) os << (i ? " " : "") << ys[i];
            os << ")";
        }
        os << "}";
        return os.str();
    }
};

inline CanonicalCospan canonicalize(const Cospan& c) {
    CanonicalCospan out;
    out.left_foot = c.left_foot();
    out.right_foot = c.right_foot();
    out.fibers.resize(c.apex());
    for (std::size_t x = 0; x < c.left.dom; ++x) out.fibers[c.left(x)].first.push_back(x);
    for (std::size_t y = 0; y < c.right.dom; ++y) out.fibers[c.right(y)].second.push_back(y);
    std::sort(out.fibers.begin(), out.fibers.end());
    return out;
}

inline bool isomorphic(const Cospan& a, const Cospan& b) {
    return canonicalize(a) == canonicalize(b);
}

} // namespace corel
