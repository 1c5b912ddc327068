#include <catch2/catch_amalgamated.hpp>

#include <corel/corelation.hpp>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"

using namespace corel;

namespace {

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

// All partitions of {0..n-1}, as sorted block lists.
void partitions_rec(std::size_t next, std::size_t n,
                    std::vector<std::vector<std::size_t>>& current,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
    if (next == n) {
        auto sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(sorted);
        return;
    }
    const std::size_t block_count = current.size();
    for (std::size_t b = 0; b < block_count; ++b) {
        current[b].push_back(next);
        partitions_rec(next + 1, n, current, out);
        current[b].pop_back();
    }
    current.push_back({next});
    partitions_rec(next + 1, n, current, out);
    current.pop_back();
}

std::vector<std::vector<std::vector<std::size_t>>> all_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::vector<std::size_t>> current;
    partitions_rec(0, n, current, out);
    return out;
}

// Independent oracle: compose partitions of X+Y and Y+Z by gluing over Y
// inside X+Y+Z, then restricting the equivalence to X+Z.
std::vector<std::vector<std::size_t>> compose_partitions_oracle(
    std::size_t x, std::size_t y, std::size_t z,
    const std::vector<std::vector<std::size_t>>& p1,
    const std::vector<std::vector<std::size_t>>& p2) {
    const std::size_t total = x + y + z;
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (const auto& block : p1)
        for (std::size_t k = 1; k < block.size(); ++k) unite(block[0], block[k]); // X+Y indices
    for (const auto& block : p2)
        for (std::size_t k = 1; k < block.size(); ++k) unite(x + block[0], x + block[k]); // shift by x
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < x; ++i) classes[find(i)].push_back(i);
    for (std::size_t j = 0; j < z; ++j) classes[find(x + y + j)].push_back(x + j);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [rep, block] : classes) blocks.push_back(block);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace

TEST_CASE("E-part of the intro cospans") {
    Corelation first = e_part(epi_mono, intro_first());
    CHECK(first.apex() == 3);
    Corelation second = e_part(epi_mono, intro_second());
    CHECK(second.apex() == 5); // M is already reduced
    CHECK(isomorphic(second.cospan, intro_second()));

    Corelation as_cospan = e_part(all_iso, intro_first());
    CHECK(as_cospan.cospan == intro_first());
}

TEST_CASE("intro corelation composite is the two-block partition") {
    Corelation c = compose(e_part(epi_mono, intro_first()), e_part(epi_mono, intro_second()));
    CHECK(c.apex() == 2);
    // blocks of X+Z with X = {0,1}, Z shifted to {2,3}
    auto blocks = partition_blocks(c);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<std::size_t>{0, 1, 2}); // {x1, x2, z1}
    CHECK(blocks[1] == std::vector<std::size_t>{3});       // {z2}
}

TEST_CASE("identity corelation is neutral") {
    Corelation f = e_part(epi_mono, intro_first());
    CHECK(isomorphic(compose(identity_corelation(epi_mono, 2), f), f));
    CHECK(isomorphic(compose(f, identity_corelation(epi_mono, 4)), f));
}

TEST_CASE("iso-all corelations are unique between any two feet") {
    std::mt19937_64 rng(3);
    for (const Cospan& a : all_cospans(2, 1, 3))
        for (const Cospan& b : all_cospans(1, 2, 2)) {
            Corelation c = compose(e_part(iso_all, a), e_part(iso_all, b));
            CHECK(isomorphic(c, e_part(iso_all, Cospan(FinFn(2, 4, {0, 1}), FinFn(2, 4, {2, 3})))));
        }
}

TEST_CASE("box functor basics") {
    CHECK(isomorphic(box_functor(epi_mono, Cospan::identity(3)),
                     identity_corelation(epi_mono, 3)));
    Cospan composite = compose(intro_first(), intro_second());
    Corelation boxed = box_functor(epi_mono, composite);
    CHECK(boxed.apex() == 2);

    // scalar cospan reduces to the empty corelation
    Cospan scalar = compose(frobenius(1, Frob::Eta), frobenius(1, Frob::Epsilon));
    CHECK(scalar.left_foot() == 0);
    CHECK(scalar.apex() == 1);
    Corelation empty = box_functor(epi_mono, scalar);
    CHECK(empty.apex() == 0);
}

TEST_CASE("box functor preserves composition on random triples") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> foot(0, 3), apex(1, 4);
    for (int k = 0; k < 400; ++k) {
        std::size_t x = foot(rng), y = foot(rng) + 1, z = foot(rng);
        auto leg = [&](std::size_t f, std::size_t n) {
            std::vector<std::size_t> t(f);
            std::uniform_int_distribution<std::size_t> v(0, n - 1);
            for (auto& e : t) e = v(rng);
            return FinFn(f, n, std::move(t));
        };
        std::size_t n1 = apex(rng), n2 = apex(rng);
        Cospan f(leg(x, n1), leg(y, n1));
        Cospan g(leg(y, n2), leg(z, n2));
        CHECK(isomorphic(box_functor(epi_mono, compose(f, g)),
                         compose(box_functor(epi_mono, f), box_functor(epi_mono, g))));
    }
}

TEST_CASE("E-part commutes with coproducts") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> foot(0, 3), apex(1, 4);
    for (int k = 0; k < 300; ++k) {
        auto leg = [&](std::size_t f, std::size_t n) {
            std::vector<std::size_t> t(f);
            std::uniform_int_distribution<std::size_t> v(0, n - 1);
            for (auto& e : t) e = v(rng);
            return FinFn(f, n, std::move(t));
        };
        std::size_t n1 = apex(rng), n2 = apex(rng);
        Cospan f(leg(foot(rng), n1), leg(foot(rng), n1));
        Cospan g(leg(foot(rng), n2), leg(foot(rng), n2));
        CHECK(isomorphic(e_part(epi_mono, tensor(f, g)),
                         tensor(e_part(epi_mono, f), e_part(epi_mono, g))));
    }
}

TEST_CASE("epi-mono corelations biject with partitions and compose like them") {
    for (std::size_t x = 0; x <= 3; ++x)
        for (std::size_t y = 0; y <= 3 - std::min<std::size_t>(x, 3); ++y) {
            // bijection: every corelation gives a partition and back
            std::set<std::vector<std::vector<std::size_t>>> seen;
            for (const Cospan& c : all_cospans(x, y, x + y)) {
                Corelation r = e_part(epi_mono, c);
                auto blocks = partition_blocks(r);
                seen.insert(blocks);
                CHECK(isomorphic(from_partition(x, y, blocks), r));
            }
            CHECK(seen.size() == all_partitions(x + y).size());
        }

    // composition agrees with the union-find partition oracle, exhaustively
    for (std::size_t x = 0; x <= 2; ++x)
        for (std::size_t y = 0; y <= 2; ++y)
            for (std::size_t z = 0; z <= 2; ++z)
                for (const auto& p1 : all_partitions(x + y))
                    for (const auto& p2 : all_partitions(y + z)) {
                        Corelation c =
                            compose(from_partition(x, y, p1), from_partition(y, z, p2));
                        auto expected = compose_partitions_oracle(x, y, z, p1, p2);
                        REQUIRE(partition_blocks(c) == expected);
                    }
}

TEST_CASE("poset functors") {
    // all-iso (cospans) down to epi-mono: the scalar cospan loses its apex
    Cospan scalar(FinFn::initial(1), FinFn::initial(1));
    Corelation as_allinso = e_part(all_iso, scalar);
    Corelation reduced = poset_functor(all_iso, epi_mono, as_allinso);
    CHECK(reduced.apex() == 0);

    // epi-mono down to iso-all: everything becomes the unique corelation
    Corelation f = e_part(epi_mono, intro_first());
    Corelation collapsed = poset_functor(epi_mono, iso_all, f);
    CHECK(collapsed.apex() == f.left_foot() + f.right_foot());

    // identity arrow
    CHECK(isomorphic(poset_functor(epi_mono, epi_mono, f), f));

    // non-comparable direction is rejected
    CHECK_THROWS_AS(poset_functor(iso_all, epi_mono, collapsed), std::invalid_argument);
}

TEST_CASE("scalar hom-sets: corelations collapse, cospans do not") {
    // in epi-mono Corel there is exactly one morphism 0 -> 0
    std::set<std::string> corel_classes;
    for (std::size_t apex = 0; apex <= 3; ++apex) {
        Cospan scalar(FinFn::initial(apex), FinFn::initial(apex));
        corel_classes.insert(canonicalize(e_part(epi_mono, scalar).cospan).str());
    }
    CHECK(corel_classes.size() == 1);

    // in Cospan the scalars at apex 0, 1, 2 are already pairwise distinct
    std::set<std::string> cospan_classes;
    for (std::size_t apex = 0; apex <= 2; ++apex) {
        Cospan scalar(FinFn::initial(apex), FinFn::initial(apex));
        cospan_classes.insert(canonicalize(scalar).str());
    }
    CHECK(cospan_classes.size() == 3);
}
