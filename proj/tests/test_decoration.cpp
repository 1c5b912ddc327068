#include <catch2/catch_amalgamated.hpp>

#include <corel/circuits.hpp>
#include <corel/decoration.hpp>
#include <corel/rigmat.hpp>

#include <random>

using namespace corel;

namespace {

DecoratedCospan one_resistor(const std::string& label) {
    // a single resistor between the two vertices of the cospan 1 -> 2 <- 1
    Cospan c(FinFn(1, 2, {0}), FinFn(1, 2, {1}));
    LabeledGraph g(2, {GraphEdge(0, 1, EdgeLabel{label})});
    return DecoratedCospan{c, Decoration{g}};
}

Cospan random_cospan(std::size_t x, std::size_t y, std::size_t max_apex, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> apex((x + y > 0) ? 1 : 0, max_apex);
    std::size_t n = apex(rng);
    auto leg = [&](std::size_t foot) {
        std::vector<std::size_t> t(foot);
        std::uniform_int_distribution<std::size_t> v(0, n - 1);
        for (auto& e : t) e = v(rng);
        return FinFn(foot, n, std::move(t));
    };
    return Cospan(leg(x), leg(y));
}

} // namespace

TEST_CASE("labeled graph normalization and ops") {
    LabeledGraph g(3, {GraphEdge(2, 0, EdgeLabel{mpq_class(5)}),
                       GraphEdge(1, 1, EdgeLabel{std::string("r")})});
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 2); // endpoints normalized
    CHECK_THROWS_AS(LabeledGraph(1, {GraphEdge(0, 1, EdgeLabel{mpq_class(1)})}),
                    std::invalid_argument);

    // push along identity leaves the graph unchanged
    CHECK(graph_push(FinFn::identity(3), g) == g);

    // pull along an injection missing an endpoint fails
    FinFn miss(2, 3, {0, 1});
    CHECK_THROWS_AS(graph_pull(miss, g), DecorationError);
    // pull along a full iso relabels
    FinFn flip(3, 3, {2, 1, 0});
    LabeledGraph pulled = graph_pull(flip, g);
    CHECK(pulled == LabeledGraph(3, {GraphEdge(0, 2, EdgeLabel{mpq_class(5)}),
                                     GraphEdge(1, 1, EdgeLabel{std::string("r")})}));
}

TEST_CASE("two single-resistor circuits compose to a path") {
    auto F = circuit_contract();
    DecoratedCospan path = dcospan_compose(F, one_resistor("r1"), one_resistor("r2"));
    CHECK(path.cospan.apex() == 3);
    const auto& g = std::any_cast<const LabeledGraph&>(path.dec);
    CHECK(g == LabeledGraph(3, {GraphEdge(0, 1, EdgeLabel{std::string("r1")}),
                                GraphEdge(1, 2, EdgeLabel{std::string("r2")})}));
}

TEST_CASE("edge count is additive under composition and apex is the pushout") {
    auto F = circuit_contract();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> foot(0, 2);
    for (int k = 0; k < 200; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng);
        Cospan cf = random_cospan(x, y, 3, rng), cg = random_cospan(y, z, 3, rng);
        DecoratedCospan f{cf, F.sample(cf.apex(), rng)};
        DecoratedCospan g{cg, F.sample(cg.apex(), rng)};
        DecoratedCospan fg = dcospan_compose(F, f, g);
        const auto& gf = std::any_cast<const LabeledGraph&>(f.dec);
        const auto& gg = std::any_cast<const LabeledGraph&>(g.dec);
        const auto& gout = std::any_cast<const LabeledGraph&>(fg.dec);
        CHECK(gout.edges.size() == gf.edges.size() + gg.edges.size());
        CHECK(gout.vertices == pushout(cf.right, cg.left).size);
    }
}

TEST_CASE("empty decorations") {
    auto F = circuit_contract();
    const auto& g0 = std::any_cast<const LabeledGraph&>(empty_decoration(F, 4));
    CHECK(g0 == LabeledGraph(4, {}));
    const auto& gz = std::any_cast<const LabeledGraph&>(empty_decoration(F, 0));
    CHECK(gz == LabeledGraph(0, {}));

    auto Q = rig_contract<RationalRig>();
    auto ones = std::any_cast<std::vector<mpq_class>>(empty_decoration(Q, 3));
    CHECK(ones == std::vector<mpq_class>{1, 1, 1});
}

TEST_CASE("composing with empty-decorated cospans only pushes the survivor forward") {
    auto F = circuit_contract();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> foot(0, 2);
    for (int k = 0; k < 150; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng);
        Cospan cf = random_cospan(x, y, 3, rng), cg = random_cospan(y, z, 3, rng);
        DecoratedCospan f{cf, F.sample(cf.apex(), rng)};
        DecoratedCospan g{cg, empty_decoration(F, cg.apex())};
        DecoratedCospan fg = dcospan_compose(F, f, g);
        Pushout p = pushout(cf.right, cg.left);
        Decoration expected = F.push(p.into_left, f.dec);
        CHECK(F.equal(fg.dec, expected));

        // and on the left
        DecoratedCospan gf = dcospan_compose(F, g, f);
        Pushout q = pushout(cg.right, cf.left);
        CHECK(F.equal(gf.dec, F.push(q.into_right, f.dec)));
    }
}

TEST_CASE("dcospan composition is associative and unital up to decorated isomorphism") {
    auto F = circuit_contract();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> foot(0, 2);
    for (int k = 0; k < 150; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng) + 1, w = foot(rng);
        Cospan cf = random_cospan(x, y, 3, rng);
        Cospan cg = random_cospan(y, z, 3, rng);
        Cospan ch = random_cospan(z, w, 3, rng);
        DecoratedCospan f{cf, F.sample(cf.apex(), rng)};
        DecoratedCospan g{cg, F.sample(cg.apex(), rng)};
        DecoratedCospan h{ch, F.sample(ch.apex(), rng)};
        CHECK(isomorphic(F, dcospan_compose(F, dcospan_compose(F, f, g), h),
                         dcospan_compose(F, f, dcospan_compose(F, g, h))));
        CHECK(isomorphic(F, dcospan_compose(F, dcospan_identity(F, x), f), f));
        CHECK(isomorphic(F, dcospan_compose(F, f, dcospan_identity(F, y)), f));
    }
}

TEST_CASE("decorated isomorphism requires matching decorations") {
    auto F = circuit_contract();
    DecoratedCospan a = one_resistor("r1");
    DecoratedCospan b = one_resistor("r2");
    CHECK(isomorphic(F, a, a));
    CHECK_FALSE(isomorphic(F, a, b));

    // same canonical cospan, decoration attached to different apex points:
    // iso must track the legs, not just the shapes
    Cospan c(FinFn(1, 2, {0}), FinFn(1, 2, {0}));
    LabeledGraph loop0(2, {GraphEdge(0, 0, EdgeLabel{std::string("r")})});
    LabeledGraph loop1(2, {GraphEdge(1, 1, EdgeLabel{std::string("r")})});
    CHECK_FALSE(isomorphic(F, DecoratedCospan{c, Decoration{loop0}},
                           DecoratedCospan{c, Decoration{loop1}}));
    // but relabeling the isolated point is still an isomorphism
    Cospan c2(FinFn(1, 2, {1}), FinFn(1, 2, {1}));
    CHECK(isomorphic(F, DecoratedCospan{c, Decoration{loop0}},
                     DecoratedCospan{c2, Decoration{loop1}}));
}

TEST_CASE("restricting under all-iso keeps decorated cospans intact") {
    auto F = circuit_contract();
    DecoratedCospan f = one_resistor("r1");
    DecoratedCorelation r = restrict_decorated(F, all_iso, f);
    CHECK(r.corel.cospan == f.cospan);
    CHECK(F.equal(r.dec, f.dec));
}

TEST_CASE("restriction relabels a jointly E-like cospan's decoration bijectively") {
    auto F = circuit_contract();
    // jointly surjective cospan whose copairing is not in first-appearance
    // order: the epi-mono M-factor is an iso relabeling
    Cospan c(FinFn(1, 2, {1}), FinFn(1, 2, {0}));
    LabeledGraph g(2, {GraphEdge(0, 1, EdgeLabel{std::string("r")})});
    DecoratedCorelation r = restrict_decorated(F, epi_mono, DecoratedCospan{c, Decoration{g}});
    CHECK(r.corel.apex() == 2);
    CHECK(std::any_cast<const LabeledGraph&>(r.dec).edges.size() == 1);

    // circuit decorations fail to descend when an edge leaves the image
    Cospan scalar(FinFn::initial(2), FinFn::initial(2));
    LabeledGraph inner(2, {GraphEdge(0, 1, EdgeLabel{std::string("r")})});
    CHECK_THROWS_AS(restrict_decorated(F, epi_mono, DecoratedCospan{scalar, Decoration{inner}}),
                    DecorationError);
}

TEST_CASE("trivial decorations reduce to plain corelations") {
    auto T = trivial_contract();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> foot(0, 3);
    for (int k = 0; k < 100; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng);
        Cospan cf = random_cospan(x, y, 4, rng), cg = random_cospan(y, z, 4, rng);
        DecoratedCorelation f = blackbox(T, epi_mono, DecoratedCospan{cf, T.unit()});
        DecoratedCorelation g = blackbox(T, epi_mono, DecoratedCospan{cg, T.unit()});
        DecoratedCorelation fg = dcorel_compose(T, f, g);
        Corelation plain = compose(e_part(epi_mono, cf), e_part(epi_mono, cg));
        CHECK(isomorphic(fg.corel, plain));
    }
}

TEST_CASE("transform functor to the trivial contract forgets decorations") {
    auto F = circuit_contract();
    auto T = trivial_contract();
    DecoratedCospan f = one_resistor("r1");
    DecoratedCorelation fc = blackbox(F, all_iso, f);
    auto theta = [&](std::size_t, const Decoration&) { return T.unit(); };
    DecoratedCorelation out = transform_functor(T, PosetArrow{all_iso, epi_mono}, theta, fc);
    CHECK(isomorphic(out.corel, e_part(epi_mono, f.cospan)));
}

TEST_CASE("transform functor with identity arrow and identity theta is the identity") {
    auto F = circuit_contract();
    DecoratedCorelation fc = blackbox(F, all_iso, one_resistor("r1"));
    auto theta = [](std::size_t, const Decoration& d) { return d; };
    DecoratedCorelation out = transform_functor(F, PosetArrow{all_iso, all_iso}, theta, fc);
    CHECK(isomorphic(F, out, fc));
}
