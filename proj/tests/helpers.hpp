#pragma once

// Shared helpers for the test suites: exhaustive enumeration of functions
// between small ordinals and independent oracles kept deliberately separate
// from the library's implementation paths.

#include <corel/finfn.hpp>

#include <vector>

namespace testutil {

/// Number of functions dom -> cod (cod^dom, with 0^0 = 1).
inline std::size_t fn_count(std::size_t dom, std::size_t cod) {
    if (dom == 0) return 1;
    if (cod == 0) return 0;
    std::size_t n = 1;
    for (std::size_t i = 0; i < dom; ++i) n *= cod;
    return n;
}

/// The k-th function dom -> cod in base-cod digit order.
inline corel::FinFn nth_fn(std::size_t dom, std::size_t cod, std::size_t k) {
    std::vector<std::size_t> t(dom);
    for (std::size_t i = 0; i < dom; ++i) {
        t[i] = k % cod;
        k /= cod;
    }
    return corel::FinFn(dom, cod, std::move(t));
}

/// All functions dom -> cod.
inline std::vector<corel::FinFn> all_fns(std::size_t dom, std::size_t cod) {
    std::vector<corel::FinFn> out;
    for (std::size_t k = 0; k < fn_count(dom, cod); ++k) out.push_back(nth_fn(dom, cod, k));
    return out;
}

/// Brute-force pushout oracle: the quotient of n + m by the relation
/// generated by f(y) ~ g(y), computed as the reflexive-symmetric-transitive
/// closure of an adjacency matrix (a different route from the union-find
/// used by the library).
struct QuotientOracle {
    std::size_t classes = 0;
    std::vector<std::size_t> cls; // class of each element of n + m, first-appearance order
};

inline QuotientOracle quotient_oracle(const corel::FinFn& f, const corel::FinFn& g) {
    const std::size_t n = f.cod, m = g.cod, total = n + m;
    std::vector<std::vector<char>> rel(total, std::vector<char>(total, 0));
    for (std::size_t i = 0; i < total; ++i) rel[i][i] = 1;
    for (std::size_t y = 0; y < f.dom; ++y) {
        rel[f(y)][n + g(y)] = 1;
        rel[n + g(y)][f(y)] = 1;
    }
    for (std::size_t k = 0; k < total; ++k)
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = 1;

    QuotientOracle out;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    out.cls.assign(total, unset);
    for (std::size_t i = 0; i < total; ++i) {
        if (out.cls[i] != unset) continue;
        for (std::size_t j = 0; j < total; ++j)
            if (rel[i][j]) out.cls[j] = out.classes;
        ++out.classes;
    }
    return out;
}

} // namespace testutil
