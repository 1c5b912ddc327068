#pragma once

// Exhaustive/randomized verification of the hypergraph-category axioms and
// of functor laws, over any pluggable category instance. Axioms are encoded
// once, as explicit composition/tensor term trees parameterized by object
// size; the catalogue below is the data to review against the usual string
// diagrams. Failures are reported as data, not errors.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "corel/cospan.hpp"

namespace corel {

/// A formal morphism term over the hypergraph generators. `compose` is in
/// diagrammatic order: compose(f, g) means f followed by g.
struct Term {
    enum class Kind { Id, Frobenius, Braid, Compose, Tensor };
    Kind kind = Kind::Id;
    std::size_t a = 0, b = 0; // object parameters (Id: a; Braid: a,b)
    Frob frob = Frob::Mu;     // for Kind::Frobenius (object a)
    std::vector<Term> children;

    static Term id(std::size_t n) { return Term{Kind::Id, n, 0, Frob::Mu, {}}; }
    static Term frobenius(Frob f, std::size_t n) { return Term{Kind::Frobenius, n, 0, f, {}}; }
    static Term braid(std::size_t x, std::size_t y) { return Term{Kind::Braid, x, y, Frob::Mu, {}}; }
    static Term compose(Term f, Term g) {
        return Term{Kind::Compose, 0, 0, Frob::Mu, {std::move(f), std::move(g)}};
    }
    static Term tensor(Term f, Term g) {
        return Term{Kind::Tensor, 0, 0, Frob::Mu, {std::move(f), std::move(g)}};
    }
    static Term tensor3(Term f, Term g, Term h) {
        return tensor(tensor(std::move(f), std::move(g)), std::move(h));
    }
};

/// A category with chosen Frobenius structure, presented operationally for
/// the harness: objects are sizes, morphisms are opaque values. Instances
/// must be pure; equality must agree with the instance's canonical forms.
struct CategoryInstance {
    using Mor = std::any;

    std::string name;
    /// Object monoid: ordinal sum for cospan-like categories, product for
    /// span-like ones.
    std::function<std::size_t(std::size_t, std::size_t)> tensor_obj;
    std::size_t unit_obj = 0;

    std::function<Mor(std::size_t)> identity;
    std::function<Mor(std::size_t, Frob)> frobenius;
    std::function<Mor(std::size_t, std::size_t)> braiding;
    std::function<Mor(const Mor&, const Mor&)> compose; // diagrammatic order
    std::function<Mor(const Mor&, const Mor&)> tensor;
    std::function<bool(const Mor&, const Mor&)> equal;
    std::function<std::array<std::size_t, 2>(const Mor&)> feet;
    /// Random morphism x -> y; the budget bounds apex size and decoration
    /// complexity (hom-sets are typically infinite).
    std::function<Mor(std::size_t, std::size_t, std::size_t, std::mt19937_64&)> sample;
    std::function<std::string(const Mor&)> show;
};

inline CategoryInstance::Mor eval_term(const CategoryInstance& inst, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Id: return inst.identity(t.a);
        case Term::Kind::Frobenius: return inst.frobenius(t.a, t.frob);
        case Term::Kind::Braid: return inst.braiding(t.a, t.b);
        case Term::Kind::Compose:
            return inst.compose(eval_term(inst, t.children[0]), eval_term(inst, t.children[1]));
        case Term::Kind::Tensor:
            return inst.tensor(eval_term(inst, t.children[0]), eval_term(inst, t.children[1]));
    }
    throw std::logic_error("eval_term: unknown kind");
}

/// One law of the special commutative Frobenius structure, as a pair of
/// term trees in a single object size.
struct Axiom {
    std::string name;
    std::function<std::pair<Term, Term>(std::size_t)> make;
};

/// One hypergraph coherence condition, in two object sizes. The caller
/// supplies the size of the composite object x(x)y, since the object monoid
/// belongs to the instance.
struct CoherenceAxiom {
    std::string name;
    std::function<std::pair<Term, Term>(std::size_t, std::size_t, std::size_t)> make;
};

/// The 12 single-object axioms: commutative monoid (3+1 unit variants),
/// cocommutative comonoid (3+1), the two Frobenius equations, the special
/// law, and invertibility of the braiding.
inline const std::vector<Axiom>& frobenius_axioms() {
    using T = Term;
    auto mu = [](std::size_t n) { return T::frobenius(Frob::Mu, n); };
    auto eta = [](std::size_t n) { return T::frobenius(Frob::Eta, n); };
    auto delta = [](std::size_t n) { return T::frobenius(Frob::Delta, n); };
    auto eps = [](std::size_t n) { return T::frobenius(Frob::Epsilon, n); };
    static const std::vector<Axiom> axioms = {
        {"associativity",
         [=](std::size_t n) {
             return std::pair{T::compose(T::tensor(mu(n), T::id(n)), mu(n)),
                              T::compose(T::tensor(T::id(n), mu(n)), mu(n))};
         }},
        {"left-unitality",
         [=](std::size_t n) {
             return std::pair{T::compose(T::tensor(eta(n), T::id(n)), mu(n)), T::id(n)};
         }},
        {"right-unitality",
         [=](std::size_t n) {
             return std::pair{T::compose(T::tensor(T::id(n), eta(n)), mu(n)), T::id(n)};
         }},
        {"commutativity",
         [=](std::size_t n) { return std::pair{T::compose(T::braid(n, n), mu(n)), mu(n)}; }},
        {"coassociativity",
         [=](std::size_t n) {
             return std::pair{T::compose(delta(n), T::tensor(delta(n), T::id(n))),
                              T::compose(delta(n), T::tensor(T::id(n), delta(n)))};
         }},
        {"left-counitality",
         [=](std::size_t n) {
             return std::pair{T::compose(delta(n), T::tensor(eps(n), T::id(n))), T::id(n)};
         }},
        {"right-counitality",
         [=](std::size_t n) {
             return std::pair{T::compose(delta(n), T::tensor(T::id(n), eps(n))), T::id(n)};
         }},
        {"cocommutativity",
         [=](std::size_t n) { return std::pair{T::compose(delta(n), T::braid(n, n)), delta(n)}; }},
        {"frobenius-left",
         [=](std::size_t n) {
             return std::pair{T::compose(T::tensor(delta(n), T::id(n)), T::tensor(T::id(n), mu(n))),
                              T::compose(mu(n), delta(n))};
         }},
        {"frobenius-right",
         [=](std::size_t n) {
             return std::pair{T::compose(T::tensor(T::id(n), delta(n)), T::tensor(mu(n), T::id(n))),
                              T::compose(mu(n), delta(n))};
         }},
        {"special",
         [=](std::size_t n) { return std::pair{T::compose(delta(n), mu(n)), T::id(n)}; }},
        {"braid-involution",
         [](std::size_t n) {
             return std::pair{T::compose(T::braid(n, n), T::braid(n, n)),
                              T::tensor(T::id(n), T::id(n))};
         }},
    };
    return axioms;
}

/// The 4 coherence conditions tying the Frobenius structure to the monoidal
/// product: the generator on X(x)Y against its expansion through the
/// structure on X and Y.
inline const std::vector<CoherenceAxiom>& coherence_axioms() {
    using T = Term;
    auto mu = [](std::size_t n) { return T::frobenius(Frob::Mu, n); };
    auto eta = [](std::size_t n) { return T::frobenius(Frob::Eta, n); };
    auto delta = [](std::size_t n) { return T::frobenius(Frob::Delta, n); };
    auto eps = [](std::size_t n) { return T::frobenius(Frob::Epsilon, n); };
    static const std::vector<CoherenceAxiom> axioms = {
        {"mu-coherence",
         [=](std::size_t x, std::size_t y, std::size_t xy) {
             return std::pair{mu(xy),
                              T::compose(T::tensor3(T::id(x), T::braid(y, x), T::id(y)),
                                         T::tensor(mu(x), mu(y)))};
         }},
        {"eta-coherence",
         [=](std::size_t x, std::size_t y, std::size_t xy) {
             return std::pair{eta(xy), T::tensor(eta(x), eta(y))};
         }},
        {"delta-coherence",
         [=](std::size_t x, std::size_t y, std::size_t xy) {
             return std::pair{delta(xy),
                              T::compose(T::tensor(delta(x), delta(y)),
                                         T::tensor3(T::id(x), T::braid(x, y), T::id(y)))};
         }},
        {"epsilon-coherence",
         [=](std::size_t x, std::size_t y, std::size_t xy) {
             return std::pair{eps(xy), T::tensor(eps(x), eps(y))};
         }},
    };
    return axioms;
}

struct CheckResult {
    std::string axiom;
    std::string object;
    bool pass = true;
    std::string counterexample; // empty when passing

    nlohmann::json to_json() const {
        nlohmann::json j{{"axiom", axiom}, {"object", object}, {"status", pass ? "pass" : "fail"}};
        if (!pass) j["counterexample"] = counterexample;
        return j;
    }
};

struct Report {
    std::string instance;
    std::vector<CheckResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    nlohmann::json to_json() const {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : results) list.push_back(r.to_json());
        return nlohmann::json{{"instance", instance}, {"results", list},
                              {"all_pass", all_pass()}};
    }
};

namespace detail {

inline CheckResult compare(const CategoryInstance& inst, const std::string& axiom,
                           const std::string& object, const CategoryInstance::Mor& lhs,
                           const CategoryInstance::Mor& rhs) {
    CheckResult res{axiom, object, true, ""};
    if (!inst.equal(lhs, rhs)) {
        res.pass = false;
        res.counterexample = inst.show(lhs) + "  !=  " + inst.show(rhs);
    }
    return res;
}

} // namespace detail

/// Evaluate every Frobenius axiom for every object size <= max_size, and
/// the coherence conditions for every pair of sizes (whose product of
/// evaluation cost stays tiny at desk scale).
inline Report check_frobenius(const CategoryInstance& inst, std::size_t max_size) {
    Report report{inst.name, {}};
    for (std::size_t n = 0; n <= max_size; ++n) {
        for (const Axiom& ax : frobenius_axioms()) {
            auto [lhs, rhs] = ax.make(n);
            report.results.push_back(detail::compare(inst, ax.name, std::to_string(n),
                                                     eval_term(inst, lhs), eval_term(inst, rhs)));
        }
    }
    for (std::size_t x = 0; x <= max_size; ++x) {
        for (std::size_t y = 0; y <= max_size; ++y) {
            const std::string obj = std::to_string(x) + "(x)" + std::to_string(y);
            for (const CoherenceAxiom& ax : coherence_axioms()) {
                auto [lhs, rhs] = ax.make(x, y, inst.tensor_obj(x, y));
                report.results.push_back(detail::compare(
                    inst, ax.name, obj, eval_term(inst, lhs), eval_term(inst, rhs)));
            }
        }
    }
    return report;
}

/// A hypergraph functor between two instances, presented operationally.
struct FunctorMap {
    std::string name;
    const CategoryInstance* src = nullptr;
    const CategoryInstance* dst = nullptr;
    std::function<std::size_t(std::size_t)> obj;
    std::function<CategoryInstance::Mor(const CategoryInstance::Mor&)> map;
};

/// Check F(g . f) = F(g) . F(f), F(id) = id, F(f + g) = F(f) + F(g), and
/// preservation of the Frobenius generators, on `cases` sampled morphisms.
inline Report check_functor(const FunctorMap& F, std::size_t cases, std::uint64_t seed,
                            std::size_t max_obj = 3, std::size_t budget = 4) {
    const CategoryInstance& src = *F.src;
    const CategoryInstance& dst = *F.dst;
    Report report{F.name, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> obj(0, max_obj);

    auto run = [&](const std::string& law, auto&& one_case) {
        CheckResult res{law, std::to_string(cases) + " cases", true, ""};
        for (std::size_t k = 0; k < cases; ++k) {
            if (auto failure = one_case(); failure.has_value()) {
                res.pass = false;
                res.counterexample = *failure;
                break;
            }
        }
        report.results.push_back(res);
    };

    run("preserves-composition", [&]() -> std::optional<std::string> {
        std::size_t x = obj(rng), y = obj(rng), z = obj(rng);
        auto f = src.sample(x, y, budget, rng);
        auto g = src.sample(y, z, budget, rng);
        auto lhs = F.map(src.compose(f, g));
        auto rhs = dst.compose(F.map(f), F.map(g));
        if (dst.equal(lhs, rhs)) return std::nullopt;
        return "F(" + src.show(f) + " ; " + src.show(g) + "): " + dst.show(lhs) +
               "  !=  " + dst.show(rhs);
    });
    run("preserves-identities", [&]() -> std::optional<std::string> {
        std::size_t x = obj(rng);
        auto lhs = F.map(src.identity(x));
        auto rhs = dst.identity(F.obj(x));
        if (dst.equal(lhs, rhs)) return std::nullopt;
        return "F(id_" + std::to_string(x) + ") = " + dst.show(lhs) + "  !=  " + dst.show(rhs);
    });
    run("preserves-tensor", [&]() -> std::optional<std::string> {
        std::size_t x = obj(rng), y = obj(rng), z = obj(rng), w = obj(rng);
        auto f = src.sample(x, y, budget, rng);
        auto g = src.sample(z, w, budget, rng);
        auto lhs = F.map(src.tensor(f, g));
        auto rhs = dst.tensor(F.map(f), F.map(g));
        if (dst.equal(lhs, rhs)) return std::nullopt;
        return "F(" + src.show(f) + " (x) " + src.show(g) + "): " + dst.show(lhs) +
               "  !=  " + dst.show(rhs);
    });
    run("preserves-frobenius", [&]() -> std::optional<std::string> {
        std::size_t x = obj(rng);
        for (Frob k : {Frob::Mu, Frob::Eta, Frob::Delta, Frob::Epsilon}) {
            auto lhs = F.map(src.frobenius(x, k));
            auto rhs = dst.frobenius(F.obj(x), k);
            if (!dst.equal(lhs, rhs))
                return "generator on " + std::to_string(x) + ": " + dst.show(lhs) +
                       "  !=  " + dst.show(rhs);
        }
        std::size_t a = obj(rng), b = obj(rng);
        auto lhs = F.map(src.braiding(a, b));
        auto rhs = dst.braiding(F.obj(a), F.obj(b));
        if (!dst.equal(lhs, rhs))
            return "braiding " + std::to_string(a) + "," + std::to_string(b) + ": " +
                   dst.show(lhs) + "  !=  " + dst.show(rhs);
        return std::nullopt;
    });
    return report;
}

} // namespace corel
