#include <doctest.h>

#include "specht/group_algebra.hpp"
#include "specht/kernels.hpp"
#include "test_helpers.hpp"

using namespace specht;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("serial and parallel polynomial products agree exactly") {
    std::mt19937_64 rng(17);
    unsigned saved = SparsePoly::degree_guard();
    SparsePoly::set_degree_guard(256);
    for (int k = 0; k < 10; ++k) {
        SparsePoly a = testers::random_poly(3, 3, 8, rng);
        SparsePoly b = testers::random_poly(3, 3, 8, rng);
        CHECK(kernels::mul_terms_serial(a.terms(), b.terms()) ==
              kernels::mul_terms_parallel(a.terms(), b.terms()));
    }
    // dense case, well past the dispatch threshold
    SparsePoly big_a(2, 2), big_b(2, 2);
    for (uint32_t i = 0; i < 40; ++i)
        for (uint32_t j = 0; j < 3; ++j) {
            big_a.add_term(Monomial{{i, j}}, CycElement::from_long(2, i + j + 1));
            big_b.add_term(Monomial{{j, i}}, CycElement::from_long(2, 2 * i - 3 * j + 1));
        }
    CHECK(kernels::mul_terms_serial(big_a.terms(), big_b.terms()) ==
          kernels::mul_terms_parallel(big_a.terms(), big_b.terms()));
    SparsePoly::set_degree_guard(saved);
}

TEST_CASE("serial and parallel convolution agree exactly") {
    auto elements = enumerate_group(2, 3, 10000);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coeff(-5, 5);
    GroupAlgebraElement::CoeffMap a, b;
    for (const auto& g : elements) {
        long ca = coeff(rng), cb = coeff(rng);
        if (ca != 0)
            a.emplace(g, CycElement::from_long(2, ca));
        if (cb != 0)
            b.emplace(g, CycElement::from_long(2, cb));
    }
    auto compose_fn = [](const GroupElement& g, const GroupElement& h) {
        return compose(g, h);
    };
    CHECK(kernels::convolve_serial(a, b, compose_fn) ==
          kernels::convolve_parallel(a, b, compose_fn));
}

TEST_CASE("serial and parallel weighted sums agree exactly") {
    auto elements = enumerate_group(2, 3, 10000);
    std::mt19937_64 rng(29);
    SparsePoly p = testers::random_poly(3, 2, 4, rng);
    std::vector<CycElement> weights;
    for (size_t i = 0; i < elements.size(); ++i)
        weights.push_back(testers::random_cyc(2, rng));
    auto gen = [&](size_t i) { return act(elements[i], p); };
    CHECK(kernels::weighted_poly_sum_serial(weights, gen, 3, 2) ==
          kernels::weighted_poly_sum_parallel(weights, gen, 3, 2));
}

TEST_CASE("mode switch changes the dispatch, not the result") {
    std::mt19937_64 rng(31);
    SparsePoly a = testers::random_poly(2, 4, 6, rng);
    SparsePoly b = testers::random_poly(2, 4, 6, rng);
    kernels::Mode saved = kernels::mode();
    kernels::set_mode(kernels::Mode::serial);
    SparsePoly serial = a * b;
    kernels::set_mode(kernels::Mode::parallel);
    SparsePoly parallel = a * b;
    kernels::set_mode(saved);
    CHECK(serial == parallel);
}

TEST_SUITE_END();
