#pragma once

// Multivalued matrices over a commutative rig as decorated spans of finite
// sets, and their reduction to genuine matrices. Spans compose by pullback
// with pointwise-multiplied decorations; reducing a span sums the entries
// over each (row, column) cell. The constructions here mirror the decorated
// cospan machinery with the arrows reversed: the monoidal product of
// objects is the cartesian product with row-major pairing, and the unit
// object is the one-element set.

#include "corel/decoration.hpp"
#include "corel/rig.hpp"

namespace corel {

/// A span X <-i- N -o-> Y of finite sets decorated by a value of R on each
/// apex element: a device with |X| inputs, |Y| outputs, and one weighted
/// channel per apex point.
template <class R>
struct DecoratedSpan {
    using value_type = typename R::value_type;
    FinFn into_left;  // i : N -> X
    FinFn into_right; // o : N -> Y
    std::vector<value_type> dec;

    DecoratedSpan() = default;
    DecoratedSpan(FinFn i, FinFn o, std::vector<value_type> d)
        : into_left(std::move(i)), into_right(std::move(o)), dec(std::move(d)) {
        if (into_left.dom != into_right.dom)
            throw std::invalid_argument("DecoratedSpan: legs must share their domain");
        if (dec.size() != into_left.dom)
            throw std::invalid_argument("DecoratedSpan: decoration must cover the apex");
    }

    std::size_t left_foot() const { return into_left.cod; }
    std::size_t right_foot() const { return into_right.cod; }
    std::size_t apex() const { return into_left.dom; }
};

template <class R>
struct RigMatrix {
    using value_type = typename R::value_type;
    std::size_t rows = 0, cols = 0;
    std::vector<value_type> entries; // row-major, length rows*cols

    RigMatrix() = default;
    RigMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c, R::zero()) {}
    RigMatrix(std::size_t r, std::size_t c, std::vector<value_type> e)
        : rows(r), cols(c), entries(std::move(e)) {
        if (entries.size() != rows * cols)
            throw std::invalid_argument("RigMatrix: entry count != rows*cols");
    }

    value_type& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const value_type& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

template <class R>
bool mat_equal(const RigMatrix<R>& a, const RigMatrix<R>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (!R::eq(a.entries[k], b.entries[k])) return false;
    return true;
}

template <class R>
RigMatrix<R> mat_identity(std::size_t n) {
    RigMatrix<R> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R::one();
    return m;
}

template <class R>
RigMatrix<R> mat_compose(const RigMatrix<R>& a, const RigMatrix<R>& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("mat_compose: inner dimensions do not match");
    RigMatrix<R> out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = R::add(out.at(i, j), R::mul(a.at(i, k), b.at(k, j)));
    return out;
}

/// Kronecker product with row-major pairing of indices:
/// entry((x,x'),(y,y')) = a(x,y) * b(x',y').
template <class R>
RigMatrix<R> kronecker(const RigMatrix<R>& a, const RigMatrix<R>& b) {
    RigMatrix<R> out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t x = 0; x < a.rows; ++x)
        for (std::size_t xp = 0; xp < b.rows; ++xp)
            for (std::size_t y = 0; y < a.cols; ++y)
                for (std::size_t yp = 0; yp < b.cols; ++yp)
                    out.at(x * b.rows + xp, y * b.cols + yp) = R::mul(a.at(x, y), b.at(xp, yp));
    return out;
}

/// Apply a rig homomorphism entrywise.
template <class RB, class RA, class H>
RigMatrix<RB> mat_map(H&& hom, const RigMatrix<RA>& m) {
    RigMatrix<RB> out(m.rows, m.cols);
    for (std::size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = hom(m.entries[k]);
    return out;
}

/// The identity span on n: every point connected to itself with weight one.
template <class R>
DecoratedSpan<R> span_identity(std::size_t n) {
    return DecoratedSpan<R>(FinFn::identity(n), FinFn::identity(n),
                            std::vector<typename R::value_type>(n, R::one()));
}

/// Frobenius generators. mu: X*X -> X has one unit channel from (x,x) to x;
/// eta: 1 -> X one unit channel to each x; delta and epsilon are mirrors.
template <class R>
DecoratedSpan<R> span_frobenius(std::size_t n, Frob which) {
    std::vector<std::size_t> diag(n);
    for (std::size_t x = 0; x < n; ++x) diag[x] = x * n + x;
    FinFn to_pairs(n, n * n, std::move(diag));
    FinFn to_point = FinFn::constant(n, 1, 0);
    std::vector<typename R::value_type> ones(n, R::one());
    switch (which) {
        case Frob::Mu: return DecoratedSpan<R>(to_pairs, FinFn::identity(n), ones);
        case Frob::Delta: return DecoratedSpan<R>(FinFn::identity(n), to_pairs, ones);
        case Frob::Eta: return DecoratedSpan<R>(to_point, FinFn::identity(n), ones);
        case Frob::Epsilon: return DecoratedSpan<R>(FinFn::identity(n), to_point, ones);
    }
    throw std::logic_error("span_frobenius: unknown generator");
}

/// The braiding X*Y -> Y*X: unit channels along (x,y) -> (y,x).
template <class R>
DecoratedSpan<R> span_braiding(std::size_t x, std::size_t y) {
    std::vector<std::size_t> swap(x * y);
    for (std::size_t a = 0; a < x; ++a)
        for (std::size_t b = 0; b < y; ++b) swap[a * y + b] = b * x + a;
    return DecoratedSpan<R>(FinFn::identity(x * y), FinFn(x * y, y * x, std::move(swap)),
                            std::vector<typename R::value_type>(x * y, R::one()));
}

/// Composition: the apex is the pullback {(n,m) : o(n) = i(m)} ordered
/// lexicographically in (n,m), decorated by the pointwise product.
template <class R>
DecoratedSpan<R> span_compose(const DecoratedSpan<R>& f, const DecoratedSpan<R>& g) {
    if (f.right_foot() != g.left_foot())
        throw std::invalid_argument("span_compose: middle feet do not match");
    std::vector<std::size_t> li, ri;
    std::vector<typename R::value_type> dec;
    for (std::size_t n = 0; n < f.apex(); ++n)
        for (std::size_t m = 0; m < g.apex(); ++m)
            if (f.into_right(n) == g.into_left(m)) {
                li.push_back(f.into_left(n));
                ri.push_back(g.into_right(m));
                dec.push_back(R::mul(f.dec[n], g.dec[m]));
            }
    const std::size_t apex = li.size();
    return DecoratedSpan<R>(FinFn(apex, f.left_foot(), std::move(li)),
                            FinFn(apex, g.right_foot(), std::move(ri)), std::move(dec));
}

/// Monoidal product: product of feet and apices with row-major pairing,
/// pointwise-multiplied decorations.
template <class R>
DecoratedSpan<R> span_tensor(const DecoratedSpan<R>& f, const DecoratedSpan<R>& g) {
    std::vector<std::size_t> li, ri;
    std::vector<typename R::value_type> dec;
    li.reserve(f.apex() * g.apex());
    for (std::size_t n = 0; n < f.apex(); ++n)
        for (std::size_t m = 0; m < g.apex(); ++m) {
            li.push_back(f.into_left(n) * g.left_foot() + g.into_left(m));
            ri.push_back(f.into_right(n) * g.right_foot() + g.into_right(m));
            dec.push_back(R::mul(f.dec[n], g.dec[m]));
        }
    const std::size_t apex = f.apex() * g.apex();
    return DecoratedSpan<R>(FinFn(apex, f.left_foot() * g.left_foot(), std::move(li)),
                            FinFn(apex, f.right_foot() * g.right_foot(), std::move(ri)),
                            std::move(dec));
}

/// Reduce a multivalued matrix to a matrix: entry (x,y) sums the values of
/// all channels from x to y. This is the restricted decoration along the
/// map N -> X*Y identifying channels over the same cell.
template <class R>
RigMatrix<R> to_matrix(const DecoratedSpan<R>& f) {
    RigMatrix<R> out(f.left_foot(), f.right_foot());
    for (std::size_t n = 0; n < f.apex(); ++n) {
        auto& cell = out.at(f.into_left(n), f.into_right(n));
        cell = R::add(cell, f.dec[n]);
    }
    return out;
}

/// A matrix as its canonical decorated-corelation representative: the full
/// product span X <- X*Y -> Y with one channel per cell.
template <class R>
DecoratedSpan<R> from_matrix(const RigMatrix<R>& m) {
    std::vector<std::size_t> li(m.rows * m.cols), ri(m.rows * m.cols);
    for (std::size_t x = 0; x < m.rows; ++x)
        for (std::size_t y = 0; y < m.cols; ++y) {
            li[x * m.cols + y] = x;
            ri[x * m.cols + y] = y;
        }
    return DecoratedSpan<R>(FinFn(m.rows * m.cols, m.rows, std::move(li)),
                            FinFn(m.rows * m.cols, m.cols, std::move(ri)), m.entries);
}

/// Isomorphism of decorated spans: an apex bijection commuting with both
/// legs and matching decorations, i.e. equality of the (input, output,
/// value) channel multisets.
template <class R>
bool isomorphic_spans(const DecoratedSpan<R>& a, const DecoratedSpan<R>& b) {
    if (a.left_foot() != b.left_foot() || a.right_foot() != b.right_foot() || a.apex() != b.apex())
        return false;
    const std::size_t n = a.apex();
    auto cell = [](const DecoratedSpan<R>& s, std::size_t k) {
        return std::pair{s.into_left(k), s.into_right(k)};
    };
    std::vector<std::size_t> ia(n), ib(n);
    std::iota(ia.begin(), ia.end(), std::size_t{0});
    std::iota(ib.begin(), ib.end(), std::size_t{0});
    auto by_cell = [&](const DecoratedSpan<R>& s) {
        return [&s, &cell](std::size_t p, std::size_t q) { return cell(s, p) < cell(s, q); };
    };
    std::sort(ia.begin(), ia.end(), by_cell(a));
    std::sort(ib.begin(), ib.end(), by_cell(b));
    for (std::size_t k = 0; k < n; ++k)
        if (cell(a, ia[k]) != cell(b, ib[k])) return false;
    // Within each cell, match values as multisets (values need only equality).
    std::vector<char> used(n, 0);
    for (std::size_t k = 0; k < n;) {
        std::size_t j = k;
        while (j < n && cell(a, ia[j]) == cell(a, ia[k])) ++j;
        for (std::size_t p = k; p < j; ++p) {
            bool found = false;
            for (std::size_t q = k; q < j && !found; ++q)
                if (!used[q] && R::eq(a.dec[ia[p]], b.dec[ib[q]])) {
                    used[q] = 1;
                    found = true;
                }
            if (!found) return false;
        }
        k = j;
    }
    return true;
}

/// The rig decoration functor R^(-), exposed through the generic contract
/// interface. Because the base category here is the opposite of finite
/// sets, the FinFn handed to push realizes the morphism source <- target,
/// i.e. push along a morphism n -> m takes the underlying function m -> n
/// and acts by precomposition; pull takes the underlying function n -> p
/// and sums over its fibers. Coherence is the pointwise product on the
/// cartesian product of apices, and the unit selects 1_R on the one-point
/// set.
template <class R>
DecorationContract rig_contract() {
    using Vec = std::vector<typename R::value_type>;
    DecorationContract F;
    F.name = std::string("rig:") + R::name;
    F.push = [](const FinFn& f, const Decoration& d) -> Decoration {
        const auto& v = std::any_cast<const Vec&>(d);
        if (v.size() != f.cod)
            throw std::invalid_argument("rig push: decoration does not match the map");
        Vec out(f.dom);
        for (std::size_t i = 0; i < f.dom; ++i) out[i] = v[f(i)];
        return out;
    };
    F.pull = [](const FinFn& f, const Decoration& d) -> Decoration {
        const auto& v = std::any_cast<const Vec&>(d);
        if (v.size() != f.dom)
            throw std::invalid_argument("rig pull: decoration does not match the map");
        Vec out(f.cod, R::zero());
        for (std::size_t i = 0; i < f.dom; ++i) out[f(i)] = R::add(out[f(i)], v[i]);
        return out;
    };
    F.coherence = [](std::size_t n, const Decoration& a, std::size_t m,
                     const Decoration& b) -> Decoration {
        const auto& s = std::any_cast<const Vec&>(a);
        const auto& t = std::any_cast<const Vec&>(b);
        Vec out(n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) out[i * m + j] = R::mul(s[i], t[j]);
        return out;
    };
    F.unit = [] { return Decoration{Vec{R::one()}}; };
    F.empty = [](std::size_t n) { return Decoration{Vec(n, R::one())}; };
    F.equal = [](const Decoration& a, const Decoration& b) {
        const auto& s = std::any_cast<const Vec&>(a);
        const auto& t = std::any_cast<const Vec&>(b);
        if (s.size() != t.size()) return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!R::eq(s[i], t[i])) return false;
        return true;
    };
    F.sample = [](std::size_t n, std::mt19937_64& rng) -> Decoration {
        Vec out(n);
        for (auto& v : out) v = R::sample(rng);
        return out;
    };
    F.show = [](const Decoration& d) {
        const auto& v = std::any_cast<const Vec&>(d);
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + R::str(v[i]);
        return s + "]";
    };
    F.supports = [](FactorisationSystem) { return true; };
    return F;
}

} // namespace corel
