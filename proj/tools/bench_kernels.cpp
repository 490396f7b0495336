// Times the serial reference kernels against their OpenMP versions on
// synthetic inputs and verifies they produce identical results.

#include <omp.h>

#include <iomanip>
#include <iostream>
#include <random>

#include "specht/group_algebra.hpp"
#include "specht/kernels.hpp"

using namespace specht;

namespace {

SparsePoly random_poly(unsigned nvars, unsigned order, unsigned max_exp, size_t terms,
                       std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> exp_dist(0, max_exp);
    std::uniform_int_distribution<long> num_dist(-50, 50);
    SparsePoly p(nvars, order);
    while (p.term_count() < terms) {
        Monomial m{std::vector<uint32_t>(nvars, 0)};
        for (unsigned k = 0; k < nvars; ++k)
            m.exps[k] = exp_dist(rng);
        long c = num_dist(rng);
        if (c == 0)
            c = 1;
        p.add_term(m, CycElement::from_long(order, c));
    }
    return p;
}

GroupAlgebraElement random_algebra_element(const std::vector<GroupElement>& elements,
                                           unsigned r, unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_dist(-9, 9);
    GroupAlgebraElement a(r, n);
    for (const auto& g : elements) {
        long c = num_dist(rng);
        if (c != 0)
            a.add_term(g, CycElement::from_long(r, c));
    }
    return a;
}

template <class Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e100;
    for (int k = 0; k < repeats; ++k) {
        double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(26) << name << std::right << std::fixed
              << std::setprecision(4) << std::setw(10) << serial << " s" << std::setw(10)
              << parallel << " s" << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x   "
              << (equal ? "identical" : "MISMATCH") << "\n";
}

// Register-only compute, to show what the machine's threads can deliver at
// all. Exact-arithmetic kernels are allocation- and memory-op dense, so they
// track the machine's memory scaling, not this number.
double compute_scaling() {
    auto spin = [](long iters) {
        double acc = 0;
        for (long i = 0; i < iters; ++i)
            acc += static_cast<double>(i % 1024) * 1e-9;
        return acc;
    };
    const long iters = 100000000;
    double t0 = omp_get_wtime();
    volatile double sink = spin(4 * iters);
    double serial = omp_get_wtime() - t0;
    t0 = omp_get_wtime();
    double acc = 0;
#pragma omp parallel num_threads(omp_get_max_threads()) reduction(+ : acc)
    acc += spin(iters);
    sink = acc;
    (void)sink;
    return serial / (omp_get_wtime() - t0);
}

}  // namespace

int main() {
    std::cout << "threads: " << omp_get_max_threads() << "\n";
    std::cout << "calibration: pure-compute parallel speedup " << std::fixed
              << std::setprecision(2) << compute_scaling() << "x\n";
    std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(12)
              << "serial" << std::setw(12) << "parallel" << std::setw(10) << "speedup"
              << "   check\n";

    std::mt19937_64 rng(20240901);

    {
        SparsePoly a = random_poly(4, 3, 12, 900, rng);
        SparsePoly b = random_poly(4, 3, 12, 900, rng);
        SparsePoly::set_degree_guard(200);
        TermMap rs, rp;
        double ts = time_best_of(3, [&] { rs = kernels::mul_terms_serial(a.terms(), b.terms()); });
        double tp = time_best_of(3, [&] { rp = kernels::mul_terms_parallel(a.terms(), b.terms()); });
        report("poly_mul (900x900 terms)", ts, tp, rs == rp);
    }

    {
        auto elements = enumerate_group(3, 3, 1000);  // |G(3,3)| = 162
        GroupAlgebraElement a = random_algebra_element(elements, 3, 3, rng);
        GroupAlgebraElement b = random_algebra_element(elements, 3, 3, rng);
        auto compose_fn = [](const GroupElement& g, const GroupElement& h) {
            return compose(g, h);
        };
        GroupAlgebraElement::CoeffMap rs, rp;
        double ts = time_best_of(
            3, [&] { rs = kernels::convolve_serial(a.coeffs(), b.coeffs(), compose_fn); });
        double tp = time_best_of(
            3, [&] { rp = kernels::convolve_parallel(a.coeffs(), b.coeffs(), compose_fn); });
        report("algebra_mul (|G|=162)", ts, tp, rs == rp);
    }

    {
        auto elements = enumerate_group(3, 3, 1000);
        GroupAlgebraElement a = random_algebra_element(elements, 3, 3, rng);
        SparsePoly p = random_poly(3, 3, 6, 80, rng);
        std::vector<CycElement> weights;
        std::vector<const GroupElement*> support;
        for (const auto& [g, c] : a.coeffs()) {
            support.push_back(&g);
            weights.push_back(c);
        }
        auto gen = [&](size_t i) { return act(*support[i], p); };
        SparsePoly rs(3, 3), rp(3, 3);
        double ts =
            time_best_of(3, [&] { rs = kernels::weighted_poly_sum_serial(weights, gen, 3, 3); });
        double tp = time_best_of(
            3, [&] { rp = kernels::weighted_poly_sum_parallel(weights, gen, 3, 3); });
        report("algebra_apply (162 terms)", ts, tp, rs == rp);
    }

    return 0;
}
