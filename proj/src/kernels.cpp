#include "specht/kernels.hpp"

#include <atomic>

namespace specht::kernels {

namespace {
std::atomic<Mode> g_mode{Mode::parallel};
}

void set_mode(Mode m) { g_mode.store(m); }
Mode mode() { return g_mode.load(); }

TermMap mul_terms_serial(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            CycElement c = ca * cb;
            if (c.is_zero())
                continue;
            Monomial m = monomial_mul(ma, mb);
            auto it = out.find(m);
            if (it == out.end()) {
                out.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    }
    return out;
}

TermMap mul_terms_parallel(const TermMap& a, const TermMap& b) {
    using Flat = std::vector<std::pair<Monomial, CycElement>>;
    std::vector<const std::pair<const Monomial, CycElement>*> rows;
    rows.reserve(a.size());
    for (const auto& kv : a)
        rows.push_back(&kv);

    GrlexLess less{};
    std::vector<Flat> slices(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        Flat local;
        local.reserve((rows.size() / slices.size() + 1) * b.size());
#pragma omp for schedule(static) nowait
        for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
            const auto& [ma, ca] = *rows[static_cast<size_t>(i)];
            for (const auto& [mb, cb] : b)
                local.emplace_back(monomial_mul(ma, mb), ca * cb);
        }
        slices[static_cast<size_t>(omp_get_thread_num())] =
            detail::sort_combine(std::move(local), less);
    }
    Flat merged;
    for (auto& slice : slices)
        merged = detail::merge_combine(std::move(merged), std::move(slice), less);

    TermMap out;
    for (auto& t : merged)
        out.emplace_hint(out.end(), std::move(t.first), std::move(t.second));
    return out;
}

TermMap mul_terms(const TermMap& a, const TermMap& b) {
    if (mode() == Mode::parallel && a.size() * b.size() >= kParallelThreshold)
        return mul_terms_parallel(a, b);
    return mul_terms_serial(a, b);
}

SparsePoly weighted_poly_sum_serial(const std::vector<CycElement>& weights,
                                    const std::function<SparsePoly(size_t)>& gen,
                                    unsigned nvars, unsigned order) {
    SparsePoly acc(nvars, order);
    for (size_t i = 0; i < weights.size(); ++i)
        acc += gen(i).scaled(weights[i]);
    return acc;
}

SparsePoly weighted_poly_sum_parallel(const std::vector<CycElement>& weights,
                                      const std::function<SparsePoly(size_t)>& gen,
                                      unsigned nvars, unsigned order) {
    std::vector<SparsePoly> parts(weights.size(), SparsePoly(nvars, order));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(weights.size()); ++i)
        parts[static_cast<size_t>(i)] =
            gen(static_cast<size_t>(i)).scaled(weights[static_cast<size_t>(i)]);

    // halving rounds; exact addition makes the grouping irrelevant
    while (parts.size() > 1) {
        size_t half = (parts.size() + 1) / 2;
        std::vector<SparsePoly> next(half, SparsePoly(nvars, order));
#pragma omp parallel for schedule(static)
        for (long k = 0; k < static_cast<long>(parts.size() / 2); ++k)
            next[static_cast<size_t>(k)] = parts[2 * static_cast<size_t>(k)] +
                                           parts[2 * static_cast<size_t>(k) + 1];
        if (parts.size() % 2 == 1)
            next[half - 1] = std::move(parts.back());
        parts = std::move(next);
    }
    return parts.empty() ? SparsePoly(nvars, order) : std::move(parts.front());
}

SparsePoly weighted_poly_sum(const std::vector<CycElement>& weights,
                             const std::function<SparsePoly(size_t)>& gen, unsigned nvars,
                             unsigned order) {
    if (mode() == Mode::parallel && weights.size() >= 32)
        return weighted_poly_sum_parallel(weights, gen, nvars, order);
    return weighted_poly_sum_serial(weights, gen, nvars, order);
}

}  // namespace specht::kernels
