#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <omp.h>

#include "specht/poly.hpp"

// Hot inner loops, each in a serial reference version and an OpenMP
// version. The undecorated entry points dispatch on the global mode and a
// size threshold. All coefficient arithmetic is exact, so both versions
// produce identical canonical results regardless of scheduling.
//
// The parallel versions avoid shared (or duplicated full-size) accumulator
// maps: each thread sorts and combines its own flat slice of products, the
// sorted slices are merged pairwise, and the result map is built in one
// ordered pass. Weighted sums reduce by halving rounds.
namespace specht::kernels {

enum class Mode { serial, parallel };

void set_mode(Mode m);
Mode mode();

// Work-item count below which the dispatchers stay serial.
inline constexpr size_t kParallelThreshold = 2048;

// --- polynomial term product ------------------------------------------------

TermMap mul_terms_serial(const TermMap& a, const TermMap& b);
TermMap mul_terms_parallel(const TermMap& a, const TermMap& b);
TermMap mul_terms(const TermMap& a, const TermMap& b);

// --- convolution of finite-support coefficient maps -------------------------

namespace detail {

template <class K, class Less>
std::vector<std::pair<K, CycElement>> sort_combine(std::vector<std::pair<K, CycElement>> v,
                                                   Less less) {
    std::sort(v.begin(), v.end(),
              [&](const auto& x, const auto& y) { return less(x.first, y.first); });
    std::vector<std::pair<K, CycElement>> out;
    out.reserve(v.size());
    for (auto& t : v) {
        if (!out.empty() && !less(out.back().first, t.first) &&
            !less(t.first, out.back().first)) {
            out.back().second += t.second;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
}

// both inputs sorted with unique keys
template <class K, class Less>
std::vector<std::pair<K, CycElement>> merge_combine(std::vector<std::pair<K, CycElement>> a,
                                                    std::vector<std::pair<K, CycElement>> b,
                                                    Less less) {
    std::vector<std::pair<K, CycElement>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (less(a[i].first, b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (less(b[j].first, a[i].first)) {
            out.push_back(std::move(b[j++]));
        } else {
            CycElement sum = a[i].second + b[j].second;
            if (!sum.is_zero())
                out.emplace_back(std::move(a[i].first), std::move(sum));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j)
        out.push_back(std::move(b[j]));
    return out;
}

}  // namespace detail

// compose(k1, k2) must be the product in the underlying (semi)group.
template <class K, class Less, class Compose>
std::map<K, CycElement, Less> convolve_serial(const std::map<K, CycElement, Less>& a,
                                              const std::map<K, CycElement, Less>& b,
                                              Compose compose) {
    std::map<K, CycElement, Less> out;
    for (const auto& [ga, ca] : a) {
        for (const auto& [gb, cb] : b) {
            CycElement c = ca * cb;
            if (c.is_zero())
                continue;
            K k = compose(ga, gb);
            auto it = out.find(k);
            if (it == out.end()) {
                out.emplace(std::move(k), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

template <class K, class Less, class Compose>
std::map<K, CycElement, Less> convolve_parallel(const std::map<K, CycElement, Less>& a,
                                                const std::map<K, CycElement, Less>& b,
                                                Compose compose) {
    using Flat = std::vector<std::pair<K, CycElement>>;
    std::vector<const std::pair<const K, CycElement>*> rows;
    rows.reserve(a.size());
    for (const auto& kv : a)
        rows.push_back(&kv);

    Less less{};
    std::vector<Flat> slices(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        Flat local;
        local.reserve((rows.size() / slices.size() + 1) * b.size());
#pragma omp for schedule(static) nowait
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
            const auto& [ga, ca] = *rows[static_cast<size_t>(i)];
            for (const auto& [gb, cb] : b)
                local.emplace_back(compose(ga, gb), ca * cb);
        }
        slices[static_cast<size_t>(omp_get_thread_num())] =
            detail::sort_combine(std::move(local), less);
    }
    Flat merged;
    for (auto& slice : slices)
        merged = detail::merge_combine(std::move(merged), std::move(slice), less);

    std::map<K, CycElement, Less> out;
    for (auto& t : merged)
        out.emplace_hint(out.end(), std::move(t.first), std::move(t.second));
    return out;
}

template <class K, class Less, class Compose>
std::map<K, CycElement, Less> convolve(const std::map<K, CycElement, Less>& a,
                                       const std::map<K, CycElement, Less>& b,
                                       Compose compose) {
    if (mode() == Mode::parallel && a.size() * b.size() >= kParallelThreshold)
        return convolve_parallel(a, b, compose);
    return convolve_serial(a, b, compose);
}

// --- weighted sum of generated polynomials ----------------------------------

// Computes sum_i weights[i] * gen(i) where gen(i) is a pure function.
SparsePoly weighted_poly_sum_serial(const std::vector<CycElement>& weights,
                                    const std::function<SparsePoly(size_t)>& gen,
                                    unsigned nvars, unsigned order);
SparsePoly weighted_poly_sum_parallel(const std::vector<CycElement>& weights,
                                      const std::function<SparsePoly(size_t)>& gen,
                                      unsigned nvars, unsigned order);
SparsePoly weighted_poly_sum(const std::vector<CycElement>& weights,
                             const std::function<SparsePoly(size_t)>& gen, unsigned nvars,
                             unsigned order);

}  // namespace specht::kernels
