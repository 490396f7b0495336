#include <doctest.h>

#include "specht/specht_module.hpp"
#include "test_helpers.hpp"

using namespace specht;

TEST_SUITE_BEGIN("specht");

namespace {

MultiDiagram shape_of(std::vector<std::vector<uint32_t>> parts) {
    MultiDiagram d;
    for (auto& p : parts)
        d.components.push_back(Partition{std::move(p)});
    return d;
}

GroupAlgebraElement perm_term(unsigned r, unsigned n, std::vector<uint32_t> perm0, long num,
                              long den) {
    GroupAlgebraElement a(r, n);
    a.add_term(GroupElement::from_permutation(r, std::move(perm0)),
               CycElement::from_rational(r, Rational(num, den)));
    return a;
}

}  // namespace

TEST_CASE("young symmetrizers") {
    // single cell: identity
    CHECK(young_symmetrizer({{1}}, 2, 1) == GroupAlgebraElement::unit(2, 1));

    // row [1 2]: (id + (12)) / 2
    GroupAlgebraElement row = perm_term(1, 2, {0, 1}, 1, 2) + perm_term(1, 2, {1, 0}, 1, 2);
    CHECK(young_symmetrizer({{1, 2}}, 1, 2) == row);

    // column 1/2: (id - (12)) / 2
    GroupAlgebraElement col = perm_term(1, 2, {0, 1}, 1, 2) + perm_term(1, 2, {1, 0}, -1, 2);
    CHECK(young_symmetrizer({{1}, {2}}, 1, 2) == col);

    // idempotent for every component of every shape at (2,3)
    for (const auto& d : enumerate_diagrams(2, 3)) {
        RTableau t = enumerate_standard(d).front();
        for (unsigned v = 0; v < d.r(); ++v) {
            if (d.components[v].rows.empty())
                continue;
            GroupAlgebraElement e = young_symmetrizer(t.fill[v], 2, 3);
            CHECK(e * e == e);
        }
    }
}

TEST_CASE("higher Specht polynomials, small closed forms") {
    // r=1, lambda=(2), S=T=[1 2]: the constant 1
    {
        RTableau t = enumerate_standard(shape_of({{2}})).front();
        SpechtRecord rec = higher_specht(t, t);
        CHECK(rec.poly == SparsePoly::constant(2, CycElement::one(1)));
    }
    // r=1, lambda=(1,1): the normalized Vandermonde (x2 - x1)/2
    {
        RTableau t = enumerate_standard(shape_of({{1, 1}})).front();
        SpechtRecord rec = higher_specht(t, t);
        SparsePoly expect =
            (SparsePoly::variable(2, 1, 1) - SparsePoly::variable(2, 1, 0))
                .scaled(CycElement::from_rational(1, Rational(1, 2)));
        CHECK(rec.poly == expect);
    }
    // r=2, n=1, lambda=((),(1)) under nu_minus_one: x1
    {
        RTableau t = enumerate_standard(shape_of({{}, {1}})).front();
        SpechtRecord rec = higher_specht(t, t);
        CHECK(rec.poly == SparsePoly::variable(1, 2, 0));
    }
    // under the literal nu convention the trivial shape is not constant
    {
        RTableau t = enumerate_standard(shape_of({{2}})).front();
        SpechtRecord rec = higher_specht(t, t, TwistConvention::nu);
        CHECK(rec.poly == SparsePoly::variable(2, 1, 0) * SparsePoly::variable(2, 1, 1));
    }
    CHECK_THROWS_AS(higher_specht(enumerate_standard(shape_of({{2}})).front(),
                                  enumerate_standard(shape_of({{1, 1}})).front()),
                    ShapeMismatch);
}

TEST_CASE("homogeneity with the predicted degree") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {1, 3}}) {
        for (const auto& d : enumerate_diagrams(r, n)) {
            auto stab = enumerate_standard(d);
            for (const auto& S : stab) {
                IndexTableau idx = index_tableau(S);
                unsigned expected = 0;
                for (size_t v = 0; v < idx.entries.size(); ++v) {
                    expected += static_cast<unsigned>(v) * d.components[v].size();
                    for (const auto& row : idx.entries[v])
                        for (uint32_t i : row)
                            expected += r * i;
                }
                for (const auto& T : stab) {
                    SpechtRecord rec = higher_specht(S, T);
                    CHECK(rec.poly.is_homogeneous());
                    CHECK(rec.poly.total_degree() == expected);
                }
            }
        }
    }
}

TEST_CASE("representation matrices") {
    // trivial shape: rho(g) = [1]
    {
        MultiDiagram d = shape_of({{2}});
        SpechtModule mod = build_module(d, enumerate_standard(d).front());
        for (const auto& g : mod.elements)
            CHECK(mod.rho(g) == CMatrix::identity(1, 1));
    }
    // sign module: rho(swap) = [-1]
    {
        MultiDiagram d = shape_of({{1, 1}});
        SpechtModule mod = build_module(d, enumerate_standard(d).front());
        GroupElement swap{1, {0, 0}, {1, 0}};
        CMatrix minus_one(1, 1, 1);
        minus_one.at(0, 0) = -CycElement::one(1);
        CHECK(mod.rho(swap) == minus_one);
    }
    // r=2, n=2, ((1),(1)): 2-dimensional, multiplicative over all 64 pairs
    {
        MultiDiagram d = shape_of({{1}, {1}});
        SpechtModule mod = build_module(d, enumerate_standard(d).front());
        CHECK(mod.dim() == 2);
        for (const auto& g : mod.elements)
            for (const auto& h : mod.elements)
                CHECK(mod.rho(g) * mod.rho(h) == mod.rho(compose(g, h)));
    }
}

TEST_CASE("rep matrices do not depend on the choice of S") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {1, 3}}) {
        for (const auto& d : enumerate_diagrams(r, n)) {
            auto stab = enumerate_standard(d);
            SpechtModule first = build_module(d, stab.front());
            for (size_t s = 1; s < stab.size(); ++s) {
                SpechtModule other = build_module(d, stab[s]);
                for (const auto& g : first.elements)
                    CHECK(first.rho(g) == other.rho(g));
            }
        }
    }
}

TEST_CASE("characters") {
    MultiDiagram d = shape_of({{1}, {1}});
    SpechtModule mod = build_module(d, enumerate_standard(d).front());
    Character chi = character(mod);
    CHECK(chi.at(GroupElement::identity(2, 2)) == CycElement::from_long(2, 2));

    // sum_g chi(g) conj(chi(g)) = |G| = 8
    CycElement sum = CycElement::zero(2);
    for (const auto& [g, v] : chi)
        sum += v * v.conjugate();
    CHECK(sum == CycElement::from_long(2, 8));

    MultiDiagram triv = shape_of({{2}, {}});
    Character chi_triv = character(build_module(triv, enumerate_standard(triv).front()));
    for (const auto& [g, v] : chi_triv)
        CHECK(v == CycElement::one(2));
}

TEST_CASE("shape isomorphism") {
    MultiDiagram d = shape_of({{1}, {1}});
    auto stab = enumerate_standard(d);
    REQUIRE(stab.size() == 2);
    SpechtModule a = build_module(d, stab[0]);
    SpechtModule b = build_module(d, stab[1]);
    CHECK(shape_isomorphism_check(a, b));
    CHECK(shape_isomorphism_check(a, a));

    MultiDiagram left = shape_of({{2}, {}});
    MultiDiagram right = shape_of({{}, {2}});
    CHECK_FALSE(
        shape_isomorphism_check(build_module(left, enumerate_standard(left).front()),
                                build_module(right, enumerate_standard(right).front())));
}

TEST_CASE("free module certificate") {
    // (1,2) at the hand-checked point (2,1): determinant exactly 1
    std::vector<CycElement> p21 = {CycElement::from_long(1, 2), CycElement::from_long(1, 1)};
    CycElement det =
        free_basis_certificate(1, 2, TwistConvention::nu_minus_one, 0, 10000, &p21);
    CHECK(det == CycElement::one(1));

    // degenerate point on the discriminant: determinant vanishes
    std::vector<CycElement> diag = {CycElement::from_long(1, 1), CycElement::from_long(1, 1)};
    CHECK(free_basis_certificate(1, 2, TwistConvention::nu_minus_one, 0, 10000, &diag)
              .is_zero());

    // default generic point, both required sizes
    CHECK_FALSE(free_basis_certificate(1, 2).is_zero());
    CHECK_FALSE(free_basis_certificate(2, 2).is_zero());
}

TEST_CASE("regular representation count of Specht records") {
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}}) {
        size_t count = 0;
        for (const auto& d : enumerate_diagrams(r, n)) {
            auto stab = enumerate_standard(d);
            for (const auto& S : stab)
                for (const auto& T : stab) {
                    higher_specht(S, T);  // must not vanish
                    ++count;
                }
        }
        CHECK(count == group_order(r, n));
    }
}

TEST_SUITE_END();
