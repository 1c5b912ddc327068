#include <catch2/catch_amalgamated.hpp>

#include <corel/cospan.hpp>

#include <random>

#include "helpers.hpp"

using namespace corel;

namespace {

// The paper's introductory pair of cospans.
Cospan intro_first() { return Cospan(FinFn(2, 4, {2, 2}), FinFn(4, 4, {1, 2, 3, 3})); }
Cospan intro_second() { return Cospan(FinFn(4, 5, {0, 1, 2, 3}), FinFn(2, 5, {1, 4})); }

std::vector<Cospan> all_cospans(std::size_t x, std::size_t y, std::size_t max_apex) {
    std::vector<Cospan> out;
    for (std::size_t n = 0; n <= max_apex; ++n) {
        if (n == 0 && (x > 0 || y > 0)) continue;
        for (const FinFn& l : testutil::all_fns(x, n))
            for (const FinFn& r : testutil::all_fns(y, n)) out.emplace_back(l, r);
    }
    return out;
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

TEST_CASE("intro composite has apex five and the expected legs") {
    Cospan c = compose(intro_first(), intro_second());
    CHECK(c.apex() == 5);
    // x1, x2 both land on the class of C; z1 joins them, z2 is the class of E'.
    CHECK(c.left.table == std::vector<std::size_t>{2, 2});
    CHECK(c.right.table == std::vector<std::size_t>{2, 4});
}

TEST_CASE("composing with identity cospans is neutral up to iso") {
    Cospan f = intro_first();
    CHECK(isomorphic(compose(Cospan::identity(2), f), f));
    CHECK(isomorphic(compose(f, Cospan::identity(4)), f));
    CHECK(isomorphic(compose(Cospan::identity(1), Cospan::identity(1)), Cospan::identity(1)));
}

TEST_CASE("foot mismatch is rejected") {
    CHECK_THROWS_AS(compose(intro_first(), intro_first()), std::invalid_argument);
}

TEST_CASE("tensor of cospans") {
    CHECK(isomorphic(tensor(Cospan::identity(1), Cospan::identity(1)), Cospan::identity(2)));

    Cospan mu_eta = tensor(frobenius(1, Frob::Mu), frobenius(1, Frob::Eta));
    CHECK(mu_eta.left_foot() == 2);
    CHECK(mu_eta.right_foot() == 2);
    CHECK(mu_eta.apex() == 2);
    CHECK(mu_eta.left.table == std::vector<std::size_t>{0, 0});
    CHECK(mu_eta.right.table == std::vector<std::size_t>{0, 1});

    Cospan empty(FinFn::initial(0), FinFn::initial(0));
    CHECK(isomorphic(tensor(intro_first(), empty), intro_first()));
    CHECK(isomorphic(tensor(empty, intro_first()), intro_first()));
}

TEST_CASE("frobenius generator tables") {
    Cospan mu = frobenius(1, Frob::Mu);
    CHECK(mu.left.table == std::vector<std::size_t>{0, 0});
    CHECK(mu.right.table == std::vector<std::size_t>{0});

    Cospan eta = frobenius(2, Frob::Eta);
    CHECK(eta.left.dom == 0);
    CHECK(eta.right == FinFn::identity(2));

    Cospan delta = frobenius(1, Frob::Delta);
    CHECK(delta.left == mu.right);
    CHECK(delta.right == mu.left);

    Cospan eps = frobenius(3, Frob::Epsilon);
    CHECK(eps.left == FinFn::identity(3));
    CHECK(eps.right.dom == 0);
}

TEST_CASE("canonical forms decide isomorphism") {
    // apex relabeled by a permutation gives the same canonical form
    Cospan f = intro_first();
    FinFn perm(4, 4, {3, 0, 2, 1});
    Cospan g(compose(perm, f.left), compose(perm, f.right));
    CHECK(canonicalize(f) == canonicalize(g));

    // an extra isolated apex point is detected
    Cospan one_pt(FinFn(1, 1, {0}), FinFn(1, 1, {0}));
    Cospan padded(FinFn(1, 2, {0}), FinFn(1, 2, {0}));
    CHECK_FALSE(canonicalize(one_pt) == canonicalize(padded));

    // the special law holds in Cospan(FinSet)
    Cospan special = compose(frobenius(1, Frob::Delta), frobenius(1, Frob::Mu));
    CHECK(isomorphic(special, Cospan::identity(1)));
}

TEST_CASE("canonical equality is exactly apex-bijection equivalence, exhaustively") {
    // For small cospans, compare the canonical-form decision against a
    // brute-force search over apex bijections.
    auto bijections = [](std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::vector<FinFn> out;
        do out.emplace_back(n, n, p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    };
    auto cs = all_cospans(1, 2, 2);
    for (const Cospan& a : cs)
        for (const Cospan& b : cs) {
            bool canon = canonicalize(a) == canonicalize(b);
            bool brute = false;
            if (a.apex() == b.apex())
                for (const FinFn& s : bijections(a.apex()))
                    if (compose(s, a.left) == b.left && compose(s, a.right) == b.right) {
                        brute = true;
                        break;
                    }
            REQUIRE(canon == brute);
        }
}

TEST_CASE("composition of canonical classes is associative and unital") {
    // exhaustive over feet and apices <= 2
    for (std::size_t x : {0u, 1u, 2u})
        for (std::size_t y : {0u, 1u, 2u})
            for (std::size_t z : {0u, 1u, 2u})
                for (std::size_t w : {0u, 1u, 2u})
                    for (const Cospan& f : all_cospans(x, y, 2))
                        for (const Cospan& g : all_cospans(y, z, 2)) {
                            if (!isomorphic(compose(f, Cospan::identity(y)), f))
                                FAIL("right identity violated");
                            for (const Cospan& h : all_cospans(z, w, 2))
                                if (!isomorphic(compose(compose(f, g), h),
                                                compose(f, compose(g, h))))
                                    FAIL("associativity violated");
                        }
    SUCCEED("exhaustive associativity holds");

    // randomized beyond
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> foot(0, 4);
    for (int k = 0; k < 300; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng) + 1, w = foot(rng);
        Cospan f = random_cospan(x, y, 5, rng);
        Cospan g = random_cospan(y, z, 5, rng);
        Cospan h = random_cospan(z, w, 5, rng);
        CHECK(isomorphic(compose(compose(f, g), h), compose(f, compose(g, h))));
        CHECK(isomorphic(compose(Cospan::identity(x), f), f));
    }
}

TEST_CASE("tensor is functorial up to canonical form") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> foot(0, 3);
    for (int k = 0; k < 300; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng);
        std::size_t a = foot(rng), b = foot(rng) + 1, c = foot(rng);
        Cospan f = random_cospan(x, y, 4, rng), g = random_cospan(y, z, 4, rng);
        Cospan h = random_cospan(a, b, 4, rng), i = random_cospan(b, c, 4, rng);
        CHECK(isomorphic(tensor(compose(f, g), compose(h, i)),
                         compose(tensor(f, h), tensor(g, i))));
    }
}
