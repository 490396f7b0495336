#include <doctest.h>

#include "specht/group.hpp"
#include "specht/tableaux.hpp"

using namespace specht;

TEST_SUITE_BEGIN("tableaux");

namespace {

MultiDiagram shape_of(std::vector<std::vector<uint32_t>> parts) {
    MultiDiagram d;
    for (auto& p : parts)
        d.components.push_back(Partition{std::move(p)});
    return d;
}

RTableau tab(MultiDiagram shape, std::vector<std::vector<std::vector<uint32_t>>> fill) {
    return RTableau{std::move(shape), std::move(fill)};
}

}  // namespace

TEST_CASE("diagram enumeration") {
    auto p13 = enumerate_diagrams(1, 3);
    REQUIRE(p13.size() == 3);
    CHECK(p13[0] == shape_of({{3}}));
    CHECK(p13[1] == shape_of({{2, 1}}));
    CHECK(p13[2] == shape_of({{1, 1, 1}}));

    CHECK(enumerate_diagrams(2, 2).size() == 5);
    CHECK(enumerate_diagrams(3, 1).size() == 3);
    CHECK(enumerate_diagrams(3, 2).size() == 9);

    // no duplicates, deterministic
    auto p22 = enumerate_diagrams(2, 2);
    for (size_t i = 0; i < p22.size(); ++i)
        for (size_t j = i + 1; j < p22.size(); ++j)
            CHECK_FALSE(p22[i] == p22[j]);
    CHECK(p22 == enumerate_diagrams(2, 2));
}

TEST_CASE("standard tableau enumeration") {
    CHECK(enumerate_standard(shape_of({{1}, {1}})).size() == 2);
    CHECK(enumerate_standard(shape_of({{2}, {}})).size() == 1);
    CHECK(enumerate_standard(shape_of({{1, 1}, {}})).size() == 1);
    CHECK(enumerate_standard(shape_of({{2, 1}})).size() == 2);

    for (const auto& t : enumerate_standard(shape_of({{2, 1}, {1}})))
        CHECK(t.is_standard());
}

TEST_CASE("dimension and the regular representation count") {
    CHECK(dimension(shape_of({{1}, {1}})) == 2);
    CHECK(dimension(shape_of({{2, 1}})) == 2);

    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
        uint64_t sum = 0;
        for (const auto& d : enumerate_diagrams(r, n)) {
            uint64_t f = dimension(d);
            sum += f * f;
        }
        CHECK(sum == group_order(r, n));
    }
}

TEST_CASE("reading word") {
    // single row 1 2 3
    CHECK(word(tab(shape_of({{3}}), {{{1, 2, 3}}})) == std::vector<uint32_t>{1, 2, 3});
    // single column reads bottom to top
    CHECK(word(tab(shape_of({{1, 1}}), {{{1}, {2}}})) == std::vector<uint32_t>{2, 1});
    // component order
    CHECK(word(tab(shape_of({{1}, {1}}), {{{1}}, {{2}}})) == std::vector<uint32_t>{1, 2});

    RTableau bad = tab(shape_of({{2}}), {{{2, 1}}});
    CHECK_THROWS_AS(word(bad), NotStandard);

    // words are permutations of 1..n
    for (const auto& d : enumerate_diagrams(2, 3))
        for (const auto& t : enumerate_standard(d)) {
            auto w = word(t);
            std::vector<bool> seen(w.size() + 1, false);
            for (uint32_t v : w) {
                CHECK(!seen[v]);
                seen[v] = true;
            }
        }
}

TEST_CASE("index tableau") {
    // word (1,2,3): all indices 0
    IndexTableau i1 = index_tableau(tab(shape_of({{3}}), {{{1, 2, 3}}}));
    CHECK(i1.entries[0][0] == std::vector<uint32_t>{0, 0, 0});

    // word (2,1): i(1) = 0, i(2) = 1
    IndexTableau i2 = index_tableau(tab(shape_of({{1, 1}}), {{{1}, {2}}}));
    CHECK(i2.entries[0][0][0] == 0);
    CHECK(i2.entries[0][1][0] == 1);

    // 1 in component 2, word (2,1): the component-1 cell (holding 2) gets 1
    IndexTableau i3 = index_tableau(tab(shape_of({{1}, {1}}), {{{2}}, {{1}}}));
    CHECK(i3.entries[0][0][0] == 1);
    CHECK(i3.entries[1][0][0] == 0);

    // i(1) = 0 and non-negative everywhere
    for (const auto& d : enumerate_diagrams(3, 2))
        for (const auto& t : enumerate_standard(d)) {
            IndexTableau idx = index_tableau(t);
            for (size_t v = 0; v < t.fill.size(); ++v)
                for (size_t row = 0; row < t.fill[v].size(); ++row)
                    for (size_t col = 0; col < t.fill[v][row].size(); ++col)
                        if (t.fill[v][row][col] == 1)
                            CHECK(idx.entries[v][row][col] == 0);
        }
}

TEST_CASE("hook products") {
    CHECK(hook_product(Partition{{2, 1}}) == 3);
    CHECK(hook_product(Partition{{4}}) == 24);
    CHECK(hook_product(Partition{{1, 1}}) == 2);
    CHECK(hook_product(Partition{{}}) == 1);
    CHECK(hook_product(Partition{{3, 2}}) == 4 * 3 * 1 * 2 * 1);
}

TEST_SUITE_END();
