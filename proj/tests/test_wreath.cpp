#include <doctest.h>

#include "specht/dmodule.hpp"
#include "specht/group_algebra.hpp"
#include "test_helpers.hpp"

using namespace specht;

TEST_SUITE_BEGIN("wreath");

TEST_CASE("composition follows the displayed product") {
    GroupElement id = GroupElement::identity(2, 2);
    GroupElement g{2, {1, 0}, {0, 1}};
    CHECK(compose(id, g) == g);
    CHECK(compose(g, id) == g);

    GroupElement h{2, {0, 1}, {0, 1}};
    CHECK(compose(g, h) == GroupElement{2, {1, 1}, {0, 1}});

    // ((1,0); swap) ((0,0); swap) = ((1,0); id)
    GroupElement gs{2, {1, 0}, {1, 0}};
    GroupElement hs{2, {0, 0}, {1, 0}};
    CHECK(compose(gs, hs) == GroupElement{2, {1, 0}, {0, 1}});
}

TEST_CASE("inverses") {
    CHECK(inverse(GroupElement::identity(3, 2)) == GroupElement::identity(3, 2));
    GroupElement g{3, {1}, {0}};
    CHECK(inverse(g) == GroupElement{3, {2}, {0}});

    std::mt19937_64 rng(41);
    auto elements = enumerate_group(3, 3, 10000);
    std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
    for (int k = 0; k < 50; ++k) {
        const GroupElement& e = elements[pick(rng)];
        CHECK(compose(e, inverse(e)) == GroupElement::identity(3, 3));
        CHECK(compose(inverse(e), e) == GroupElement::identity(3, 3));
    }
}

TEST_CASE("enumeration is complete, duplicate-free and ordered") {
    CHECK(enumerate_group(1, 3).size() == 6);
    CHECK(enumerate_group(2, 2).size() == 8);
    CHECK(enumerate_group(3, 2).size() == 18);
    auto elements = enumerate_group(3, 2);
    for (size_t i = 1; i < elements.size(); ++i)
        CHECK(elements[i - 1] < elements[i]);
    CHECK_THROWS_AS(enumerate_group(10, 5, 10000), CapExceeded);
}

TEST_CASE("action on polynomials") {
    // r=2, n=1: the twist sends x1 to -x1
    GroupElement g{2, {1}, {0}};
    SparsePoly x1 = SparsePoly::variable(1, 2, 0);
    CHECK(act(g, x1) == -x1);

    // identity acts trivially
    std::mt19937_64 rng(43);
    SparsePoly p = testers::random_poly(2, 2, 4, rng);
    CHECK(act(GroupElement::identity(2, 2), p) == p);
}

TEST_CASE("left action law act(gh) = act(g) act(h)") {
    std::mt19937_64 rng(47);
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}, {3, 2}}) {
        auto elements = enumerate_group(r, n);
        std::vector<SparsePoly> polys;
        for (int k = 0; k < 3; ++k)
            polys.push_back(testers::random_poly(n, r, 3, rng));
        for (const auto& g : elements)
            for (const auto& h : elements)
                for (const auto& p : polys)
                    CHECK(act(compose(g, h), p) == act(g, act(h, p)));
    }
}

TEST_CASE("fundamental invariants are fixed") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}, {3, 2}}) {
        auto y = fundamental_invariants(r, n);
        for (const auto& g : enumerate_group(r, n))
            for (const auto& yj : y)
                CHECK(act(g, yj) == yj);
    }
}

TEST_CASE("algebra application is linear in the element") {
    const unsigned r = 1, n = 2;
    SparsePoly x1 = SparsePoly::variable(n, r, 0);
    SparsePoly x2 = SparsePoly::variable(n, r, 1);

    GroupAlgebraElement one = GroupAlgebraElement::unit(r, n);
    CHECK(one.apply(x1) == x1);

    // id - swap applied to x1 gives x1 - x2
    GroupAlgebraElement diff(r, n);
    diff.add_term(GroupElement::identity(r, n), CycElement::one(r));
    diff.add_term(GroupElement{r, {0, 0}, {1, 0}}, -CycElement::one(r));
    CHECK(diff.apply(x1) == x1 - x2);
}

TEST_CASE("algebra product is associative and unital") {
    std::mt19937_64 rng(53);
    auto elements = enumerate_group(2, 2);
    auto random_elem = [&]() {
        GroupAlgebraElement a(2, 2);
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (const auto& g : elements) {
            long c = coeff(rng);
            if (c != 0)
                a.add_term(g, CycElement::from_long(2, c));
        }
        return a;
    };
    GroupAlgebraElement one = GroupAlgebraElement::unit(2, 2);
    for (int k = 0; k < 10; ++k) {
        GroupAlgebraElement a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(a * one == a);
        CHECK(one * a == a);
        CHECK((a * b) * c == a * (b * c));
        std::mt19937_64 prng(101 + k);
        SparsePoly p = testers::random_poly(2, 2, 3, prng);
        CHECK((a * b).apply(p) == a.apply(b.apply(p)));
    }
}

TEST_SUITE_END();
