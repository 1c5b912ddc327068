#pragma once

// Linear relations over the exact rationals, built two ways: as jointly
// epic cospans of linear maps composed by pushout in Vect, and as decorated
// corelations over finite sets with subspace decorations (LinCorel). A
// direct intersect-then-project composition serves as the oracle both
// constructions are checked against.

#include "corel/decoration.hpp"
#include "corel/linalg.hpp"

namespace corel {

/// A subspace of k^ambient in canonical form: the basis is the RREF of any
/// spanning set, so equal subspaces have identical representations.
struct Subspace {
    std::size_t ambient = 0;
    QMatrix basis; // RREF rows; rows == dimension

    Subspace() = default;
    explicit Subspace(std::size_t n) : ambient(n), basis(0, n) {}
    Subspace(std::size_t n, const QMatrix& rows) : ambient(n), basis(rref(rows).mat) {
        if (rows.cols != n) throw std::invalid_argument("Subspace: basis width != ambient");
    }

    std::size_t dim() const { return basis.rows; }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) { return Subspace(n, QMatrix::identity(n)); }
};

inline Subspace kernel_subspace(const QMatrix& m) {
    return Subspace{m.cols, kernel(m).mat};
}

/// Rows spanning the annihilator of L: vectors c with c . x = 0 for all x
/// in L. L is recovered as the solution set of these constraints.
inline QMatrix constraints(const Subspace& L) {
    return kernel(L.basis).mat; // kernel of the basis acting on row vectors
}

inline Subspace direct_sum(const Subspace& a, const Subspace& b) {
    QMatrix rows(a.dim() + b.dim(), a.ambient + b.ambient);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient; ++j) rows.at(i, j) = a.basis.at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient; ++j)
            rows.at(a.dim() + i, a.ambient + j) = b.basis.at(i, j);
    return Subspace(a.ambient + b.ambient, rows);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    // Solve p^T s = q^T t: kernel of [basis(a)^T | -basis(b)^T] yields the
    // coefficient pairs; the intersection is spanned by the a-side images.
    QMatrix block = hstack(transpose(a.basis), negate(transpose(b.basis)));
    Rref coeffs = kernel(block);
    QMatrix gens(coeffs.mat.rows, a.ambient);
    for (std::size_t r = 0; r < coeffs.mat.rows; ++r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.ambient; ++j)
                gens.at(r, j) += coeffs.mat.at(r, i) * a.basis.at(i, j);
    return Subspace(a.ambient, gens);
}

/// Image of L under the linear map given by the matrix (rows x ambient).
inline Subspace image_under(const QMatrix& map, const Subspace& L) {
    if (map.cols != L.ambient) throw std::invalid_argument("image_under: dimension mismatch");
    return Subspace(map.rows, mul(L.basis, transpose(map)));
}

/// Preimage {v : map v in L} of L under the map (L.ambient x n).
inline Subspace preimage_under(const QMatrix& map, const Subspace& L) {
    if (map.rows != L.ambient) throw std::invalid_argument("preimage_under: dimension mismatch");
    QMatrix c = constraints(L);
    if (c.rows == 0) return Subspace::full(map.cols);
    return kernel_subspace(mul(c, map));
}

/// A cospan U -f-> A <-g- V of linear maps between rational vector spaces;
/// matrices act on column vectors, so f is dim A x dim U.
struct LinMapCospan {
    QMatrix into_left;  // f : U -> A
    QMatrix into_right; // g : V -> A

    LinMapCospan() = default;
    LinMapCospan(QMatrix f, QMatrix g) : into_left(std::move(f)), into_right(std::move(g)) {
        if (into_left.rows != into_right.rows)
            throw std::invalid_argument("LinMapCospan: legs must share their codomain");
    }

    std::size_t left_dim() const { return into_left.cols; }
    std::size_t right_dim() const { return into_right.cols; }
    std::size_t apex_dim() const { return into_left.rows; }

    static LinMapCospan identity(std::size_t n) {
        return LinMapCospan(QMatrix::identity(n), QMatrix::identity(n));
    }
};

struct VectPushout {
    QMatrix into_left;  // j_A : A -> P
    QMatrix into_right; // j_B : B -> P
};

/// Pushout of A <-f- Y -g-> B in Vect: P = (A (+) B) / Im[f ; -g], realized
/// by the canonical surjection built from the RREF basis of the image. The
/// leg opposite an injective map stays injective (its kernel is the image
/// of the other leg's kernel).
inline VectPushout vect_pushout(const QMatrix& f, const QMatrix& g) {
    if (f.cols != g.cols) throw std::invalid_argument("vect_pushout: legs must share their domain");
    const std::size_t a = f.rows, b = g.rows;
    // Image of [f ; -g] as a row-space: rows are the transposed columns.
    QMatrix gens = hstack(transpose(f), negate(transpose(g)));
    QMatrix q = quotient_map(rref(gens), a + b);
    return VectPushout{columns(q, 0, a), columns(q, a, b)};
}

/// The kernel functor: a cospan U -f-> A <-g- V becomes the subspace
/// ker[f -g] of U (+) V.
inline Subspace corel_to_relation(const LinMapCospan& c) {
    return kernel_subspace(hstack(c.into_left, negate(c.into_right)));
}

inline bool jointly_epic(const LinMapCospan& c) {
    return rref(hstack(c.into_left, c.into_right)).rank() == c.apex_dim();
}

/// Composition in Corel(Vect): pushout over the shared foot, then image
/// factorization of the joint map to restore joint epicness.
inline LinMapCospan corel_compose(const LinMapCospan& c1, const LinMapCospan& c2) {
    if (c1.right_dim() != c2.left_dim())
        throw std::invalid_argument("corel_compose: middle dimensions do not match");
    VectPushout p = vect_pushout(c1.into_right, c2.into_left);
    QMatrix f = mul(p.into_left, c1.into_left);   // U -> P
    QMatrix l = mul(p.into_right, c2.into_right); // W -> P
    // E-part in Vect: factor [f l] through its column space. The image
    // basis is the RREF of the transpose; coefficients are read off at the
    // pivot rows.
    QMatrix joint = hstack(f, l);
    Rref image = rref(transpose(joint));
    QMatrix reduced(image.rank(), joint.cols);
    for (std::size_t i = 0; i < image.rank(); ++i)
        for (std::size_t j = 0; j < joint.cols; ++j)
            reduced.at(i, j) = joint.at(image.pivots[i], j);
    return LinMapCospan(columns(reduced, 0, c1.left_dim()),
                        columns(reduced, c1.left_dim(), c2.right_dim()));
}

/// The inverse of the kernel functor: a subspace L of U (+) V as a jointly
/// epic cospan, via the canonical quotient by L.
inline LinMapCospan subspace_to_corel(const Subspace& L, std::size_t u, std::size_t v) {
    if (L.ambient != u + v) throw std::invalid_argument("subspace_to_corel: ambient != u+v");
    QMatrix q = quotient_map(rref(L.basis), u + v);
    return LinMapCospan(columns(q, 0, u), negate(columns(q, u, v)));
}

/// Relational composition, directly: witnesses v with (u,v) in L1 and
/// (v,w) in L2, computed by intersecting L1 (+) k^W with k^U (+) L2 inside
/// k^{U+V+W} and projecting onto the (u,w) coordinates.
inline Subspace relation_compose_oracle(const Subspace& L1, const Subspace& L2, std::size_t u,
                                        std::size_t v, std::size_t w) {
    if (L1.ambient != u + v || L2.ambient != v + w)
        throw std::invalid_argument("relation_compose_oracle: ambient dimensions incompatible");
    Subspace lhs = direct_sum(L1, Subspace::full(w));
    Subspace rhs = direct_sum(Subspace::full(u), L2);
    Subspace inter = intersect(lhs, rhs);
    QMatrix proj(u + w, u + v + w);
    for (std::size_t i = 0; i < u; ++i) proj.at(i, i) = 1;
    for (std::size_t i = 0; i < w; ++i) proj.at(u + i, u + v + i) = 1;
    return image_under(proj, inter);
}

/// The subspace decoration functor Lin: carrier(n) is the set of subspaces
/// of k^n; push along f is {v : v . f in L}, pull along g is {u . g : u in
/// L}, coherence is direct sum, and the unit is the unique subspace of k^0.
/// Decorated corelations over it, taken with the iso-all system, are
/// exactly linear relations.
inline DecorationContract lin_contract() {
    DecorationContract F;
    F.name = "lin";
    // Matrix of precomposition with f: k^cod -> k^dom, v |-> v . f.
    auto precompose_matrix = [](const FinFn& f) {
        QMatrix m(f.dom, f.cod);
        for (std::size_t i = 0; i < f.dom; ++i) m.at(i, f(i)) = 1;
        return m;
    };
    F.push = [precompose_matrix](const FinFn& f, const Decoration& d) -> Decoration {
        return preimage_under(precompose_matrix(f), std::any_cast<const Subspace&>(d));
    };
    F.pull = [precompose_matrix](const FinFn& m, const Decoration& d) -> Decoration {
        return image_under(precompose_matrix(m), std::any_cast<const Subspace&>(d));
    };
    F.coherence = [](std::size_t, const Decoration& a, std::size_t, const Decoration& b) -> Decoration {
        return direct_sum(std::any_cast<const Subspace&>(a), std::any_cast<const Subspace&>(b));
    };
    F.unit = [] { return Decoration{Subspace(0)}; };
    F.empty = [](std::size_t n) { return Decoration{Subspace::full(n)}; };
    F.equal = [](const Decoration& a, const Decoration& b) {
        return std::any_cast<const Subspace&>(a) == std::any_cast<const Subspace&>(b);
    };
    F.sample = [](std::size_t n, std::mt19937_64& rng) -> Decoration {
        std::uniform_int_distribution<std::size_t> dims(0, std::min<std::size_t>(n, 2));
        std::uniform_int_distribution<int> entry(-2, 2);
        QMatrix rows(dims(rng), n);
        for (auto& e : rows.a) e = entry(rng);
        return Decoration{Subspace(n, rows)};
    };
    F.show = [](const Decoration& d) {
        const auto& s = std::any_cast<const Subspace&>(d);
        std::string out = "span{";
        for (std::size_t i = 0; i < s.dim(); ++i) {
            out += i ? "; (" : "(";
            for (std::size_t j = 0; j < s.ambient; ++j)
                out += (j ? "," : "") + rational_str(s.basis.at(i, j));
            out += ")";
        }
        return out + "} in k^" + std::to_string(s.ambient);
    };
    F.supports = [](FactorisationSystem) { return true; };
    return F;
}

/// A linear relation as a decorated corelation: the coproduct cospan
/// X -> X+Y <- Y with the subspace decoration, reduced under iso-all.
inline DecoratedCorelation lincorel_of(std::size_t x, std::size_t y, const Subspace& L) {
    if (L.ambient != x + y) throw std::invalid_argument("lincorel_of: ambient != x+y");
    Coproduct cp = coproduct(x, y);
    Corelation c{iso_all, Cospan(cp.inl, cp.inr)};
    return DecoratedCorelation{std::move(c), Decoration{L}};
}

inline const Subspace& lincorel_subspace(const DecoratedCorelation& d) {
    return std::any_cast<const Subspace&>(d.dec);
}

/// Composition in LinCorel is decorated corelation composition under the
/// iso-all system; the result subspace is relational composition.
inline DecoratedCorelation lincorel_compose(const DecoratedCorelation& f,
                                            const DecoratedCorelation& g) {
    static const DecorationContract F = lin_contract();
    return dcorel_compose(F, f, g);
}

} // namespace corel
