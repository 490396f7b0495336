#include <doctest.h>

#include "specht/idempotents.hpp"
#include "test_helpers.hpp"

using namespace specht;

TEST_SUITE_BEGIN("idempotents");

namespace {

MultiDiagram shape_of(std::vector<std::vector<uint32_t>> parts) {
    MultiDiagram d;
    for (auto& p : parts)
        d.components.push_back(Partition{std::move(p)});
    return d;
}

}  // namespace

TEST_CASE("central idempotents, closed forms at r=1, n=2") {
    WedderburnData w = build_wedderburn(1, 2);
    REQUIRE(w.blocks.size() == 2);

    GroupElement id = GroupElement::identity(1, 2);
    GroupElement swap{1, {0, 0}, {1, 0}};
    CycElement half = CycElement::from_rational(1, Rational(1, 2));

    // trivial block: averaging projector (id + swap)/2
    GroupAlgebraElement avg(1, 2);
    avg.add_term(id, half);
    avg.add_term(swap, half);
    CHECK(w.block(shape_of({{2}})).central == avg);

    // sign block: (id - swap)/2
    GroupAlgebraElement sgn(1, 2);
    sgn.add_term(id, half);
    sgn.add_term(swap, -half);
    CHECK(w.block(shape_of({{1, 1}})).central == sgn);

    // with f = 1 the primitive idempotent equals the central one
    CHECK(w.block(shape_of({{2}})).primitive.front() == avg);
}

TEST_CASE("Wedderburn identities across groups up to |G| = 48") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{
             {1, 3}, {2, 2}, {3, 2}, {2, 3}, {12, 1}}) {
        WedderburnData w = build_wedderburn(r, n);

        GroupAlgebraElement sum(r, n);
        for (const auto& block : w.blocks)
            sum += block.central;
        CHECK(sum == GroupAlgebraElement::unit(r, n));

        for (size_t a = 0; a < w.blocks.size(); ++a)
            for (size_t b = 0; b < w.blocks.size(); ++b) {
                GroupAlgebraElement prod = w.blocks[a].central * w.blocks[b].central;
                if (a == b)
                    CHECK(prod == w.blocks[a].central);
                else
                    CHECK(prod.is_zero());
            }

        for (const auto& block : w.blocks) {
            GroupAlgebraElement esum(r, n);
            for (size_t i = 0; i < block.primitive.size(); ++i) {
                esum += block.primitive[i];
                for (size_t j = 0; j < block.primitive.size(); ++j) {
                    GroupAlgebraElement prod = block.primitive[i] * block.primitive[j];
                    if (i == j)
                        CHECK(prod == block.primitive[i]);
                    else
                        CHECK(prod.is_zero());
                }
            }
            CHECK(esum == block.central);
        }
    }
}

TEST_CASE("isotypic projection") {
    WedderburnData w = build_wedderburn(2, 2);

    for (size_t a = 0; a < w.blocks.size(); ++a) {
        for (const auto& rec : w.blocks[a].module.basis) {
            // own shape: identity on the irreducible span
            CHECK(isotypic_project(w, a, rec.poly) == rec.poly);
            // foreign shapes annihilate
            for (size_t b = 0; b < w.blocks.size(); ++b)
                if (b != a)
                    CHECK(isotypic_project(w, b, rec.poly).is_zero());
        }
    }

    // the constant 1 projects to itself on the trivial shape
    size_t trivial = w.shape_index(shape_of({{2}, {}}));
    SparsePoly one = SparsePoly::constant(2, CycElement::one(2));
    CHECK(isotypic_project(w, trivial, one) == one);

    // projection is idempotent and a resolution of the identity on samples
    std::mt19937_64 rng(61);
    for (int k = 0; k < 5; ++k) {
        SparsePoly p = testers::random_poly(2, 2, 6, rng);
        SparsePoly sum(2, 2);
        for (size_t a = 0; a < w.blocks.size(); ++a) {
            SparsePoly proj = isotypic_project(w, a, p);
            CHECK(isotypic_project(w, a, proj) == proj);
            sum += proj;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("eigen witness for primitive idempotents") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}}) {
        WedderburnData w = build_wedderburn(r, n);
        for (size_t b = 0; b < w.blocks.size(); ++b) {
            const ShapeBlock& block = w.blocks[b];
            // every S, not just the S* used to build the idempotents
            for (const RTableau& S : enumerate_standard(block.shape)) {
                for (unsigned i = 0; i < block.dim; ++i) {
                    CycElement c = specht_eigen_check(w, b, S, i, i);
                    CHECK_FALSE(c.is_zero());
                    CHECK(c == CycElement::one(r));
                    for (unsigned j = 0; j < block.dim; ++j)
                        if (j != i)
                            CHECK(specht_eigen_check(w, b, S, i, j).is_zero());
                }
            }
        }
    }
}

TEST_CASE("multiplicity report") {
    auto rows13 = multiplicity_report(1, 3);
    REQUIRE(rows13.size() == 3);
    CHECK(rows13[0].multiplicity == 1);
    CHECK(rows13[1].multiplicity == 2);
    CHECK(rows13[2].multiplicity == 1);

    auto rows22 = multiplicity_report(2, 2);
    REQUIRE(rows22.size() == 5);
    std::vector<uint64_t> dims;
    for (const auto& row : rows22) {
        CHECK(row.dim == row.multiplicity);
        dims.push_back(row.dim);
    }
    CHECK(dims == std::vector<uint64_t>{1, 1, 2, 1, 1});

    uint64_t squares = 0;
    for (const auto& row : multiplicity_report(3, 2)) {
        squares += row.dim * row.dim;
        CHECK_FALSE(row.generator.poly.is_zero());
    }
    CHECK(squares == 18);
    CHECK(multiplicity_report(3, 2).size() == 9);
}

TEST_SUITE_END();
