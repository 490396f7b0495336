#include "specht/dmodule.hpp"

#include <random>

namespace specht {

namespace {

// determinant of a square polynomial matrix by cofactor expansion (n <= 4)
SparsePoly poly_det(const std::vector<std::vector<SparsePoly>>& m, std::vector<unsigned> rows,
                    std::vector<unsigned> cols) {
    const unsigned nv = m[0][0].nvars();
    const unsigned order = m[0][0].order();
    if (rows.size() == 1)
        return m[rows[0]][cols[0]];
    SparsePoly det(nv, order);
    for (size_t k = 0; k < cols.size(); ++k) {
        const SparsePoly& entry = m[rows[0]][cols[k]];
        if (entry.is_zero())
            continue;
        std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
        std::vector<unsigned> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k)
                sub_cols.push_back(cols[j]);
        SparsePoly minor = poly_det(m, sub_rows, sub_cols);
        SparsePoly contrib = entry * minor;
        if (k % 2 == 1)
            contrib = -contrib;
        det += contrib;
    }
    return det;
}

std::vector<unsigned> range_vec(unsigned n) {
    std::vector<unsigned> v(n);
    for (unsigned i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

// elementary symmetric polynomial e_j in the given generators
SparsePoly elementary_symmetric(const std::vector<SparsePoly>& gens, unsigned j) {
    const unsigned nv = gens[0].nvars();
    const unsigned order = gens[0].order();
    // dp over generators: e_j of first k generators
    std::vector<SparsePoly> e(j + 1, SparsePoly(nv, order));
    e[0] = SparsePoly::constant(nv, CycElement::one(order));
    for (const SparsePoly& g : gens)
        for (unsigned d = j; d >= 1; --d)
            e[d] += e[d - 1] * g;
    return e[j];
}

std::vector<SparsePoly> rth_powers(unsigned r, unsigned n) {
    std::vector<SparsePoly> powers;
    for (unsigned i = 0; i < n; ++i) {
        Monomial m{std::vector<uint32_t>(n, 0)};
        m.exps[i] = r;
        powers.push_back(SparsePoly::single_term(n, m, CycElement::one(r)));
    }
    return powers;
}

}  // namespace

std::vector<SparsePoly> fundamental_invariants(unsigned r, unsigned n) {
    std::vector<SparsePoly> powers = rth_powers(r, n);
    std::vector<SparsePoly> y;
    for (unsigned j = 1; j <= n; ++j)
        y.push_back(elementary_symmetric(powers, j));
    return y;
}

InvariantMap build_invariant_map(unsigned r, unsigned n) {
    if (n > 4)
        throw CapExceeded("invariant map capped at n <= 4");
    InvariantMap im;
    im.r = r;
    im.n = n;

    std::vector<SparsePoly> powers = rth_powers(r, n);
    im.y = fundamental_invariants(r, n);

    im.jac.assign(n, std::vector<SparsePoly>(n, SparsePoly(n, r)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            im.jac[i][j] = im.y[j].derivative(i);

    im.delta = poly_det(im.jac, range_vec(n), range_vec(n));
    if (im.delta.is_zero())
        throw SpechtError("Jacobian determinant vanished");

    // closed form check: Delta = c * prod x_i^{r-1} * prod_{i<j} (x_i^r - x_j^r)
    SparsePoly closed = SparsePoly::constant(n, CycElement::one(r));
    for (unsigned i = 0; i < n; ++i) {
        Monomial m{std::vector<uint32_t>(n, 0)};
        m.exps[i] = r - 1;
        closed = closed * SparsePoly::single_term(n, m, CycElement::one(r));
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            closed = closed * (powers[i] - powers[j]);
    auto quot = im.delta.divide_exact(closed);
    if (!quot || quot->term_count() != 1 || quot->total_degree() != 0)
        throw SpechtError("Jacobian does not match its closed form up to a scalar");

    // adjugate via cofactors: adj[j][i] = (-1)^{i+j} minor_{ij}
    im.adj.assign(n, std::vector<SparsePoly>(n, SparsePoly(n, r)));
    if (n == 1) {
        im.adj[0][0] = SparsePoly::constant(n, CycElement::one(r));
    } else {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                std::vector<unsigned> rows, cols;
                for (unsigned k = 0; k < n; ++k) {
                    if (k != i)
                        rows.push_back(k);
                    if (k != j)
                        cols.push_back(k);
                }
                SparsePoly minor = poly_det(im.jac, rows, cols);
                im.adj[j][i] = ((i + j) % 2 == 0) ? minor : -minor;
            }
        }
    }
    return im;
}

LocalizedPoly localize(const InvariantMap& im, SparsePoly num, unsigned delta_power) {
    LocalizedPoly f{std::move(num), delta_power};
    if (f.num.is_zero()) {
        f.delta_power = 0;
        return f;
    }
    while (f.delta_power > 0) {
        auto quot = f.num.divide_exact(im.delta);
        if (!quot)
            break;
        f.num = std::move(*quot);
        --f.delta_power;
    }
    return f;
}

LocalizedPoly localized_add(const InvariantMap& im, const LocalizedPoly& a,
                            const LocalizedPoly& b) {
    unsigned m = std::max(a.delta_power, b.delta_power);
    SparsePoly na = a.num, nb = b.num;
    for (unsigned k = a.delta_power; k < m; ++k)
        na = na * im.delta;
    for (unsigned k = b.delta_power; k < m; ++k)
        nb = nb * im.delta;
    return localize(im, na + nb, m);
}

LocalizedPoly localized_mul(const InvariantMap& im, const LocalizedPoly& a,
                            const LocalizedPoly& b) {
    return localize(im, a.num * b.num, a.delta_power + b.delta_power);
}

LocalizedPoly apply_dy(const InvariantMap& im, unsigned j, const LocalizedPoly& f) {
    if (j >= im.n)
        throw IndexOutOfRange("invariant derivative index out of range");
    const SparsePoly& p = f.num;
    const long m = static_cast<long>(f.delta_power);
    SparsePoly numerator(im.n, im.r);
    SparsePoly mp = p.scaled(CycElement::from_long(im.r, m));
    for (unsigned i = 0; i < im.n; ++i) {
        if (im.adj[j][i].is_zero())
            continue;
        SparsePoly inner = im.delta * p.derivative(i) - mp * im.delta.derivative(i);
        numerator += im.adj[j][i] * inner;
    }
    return localize(im, std::move(numerator), f.delta_power + 2);
}

std::string InvariantOperator::name() const {
    switch (kind) {
        case Kind::euler:
            return "euler";
        case Kind::power_lower:
            return "power_lower(" + std::to_string(param) + ")";
        case Kind::mult_invariant:
            return "mult_invariant(" + std::to_string(param + 1) + ")";
        case Kind::partial_x1:
            return "partial_x1";
    }
    return "?";
}

SparsePoly apply_operator(const InvariantMap& im, const InvariantOperator& op,
                          const SparsePoly& p) {
    switch (op.kind) {
        case InvariantOperator::Kind::euler: {
            SparsePoly out(im.n, im.r);
            for (unsigned i = 0; i < im.n; ++i)
                out += SparsePoly::variable(im.n, im.r, i) * p.derivative(i);
            return out;
        }
        case InvariantOperator::Kind::power_lower: {
            SparsePoly out(im.n, im.r);
            for (unsigned i = 0; i < im.n; ++i)
                out += p.derivative_iterated(i, im.r * op.param);
            return out;
        }
        case InvariantOperator::Kind::mult_invariant: {
            if (op.param >= im.n)
                throw IndexOutOfRange("invariant index out of range");
            return im.y[op.param] * p;
        }
        case InvariantOperator::Kind::partial_x1:
            return p.derivative(0);
    }
    throw SpechtError("unreachable");
}

std::string to_string(SchurVerdict v) {
    return v == SchurVerdict::zero ? "Zero" : "IsomorphicCopy";
}

SchurVerdict schur_image_check(const InvariantMap& im, const SpechtModule& module,
                               const InvariantOperator& op) {
    std::vector<SparsePoly> images;
    bool any_nonzero = false, all_nonzero = true;
    for (const SpechtRecord& rec : module.basis) {
        images.push_back(apply_operator(im, op, rec.poly));
        if (images.back().is_zero())
            all_nonzero = false;
        else
            any_nonzero = true;
    }
    if (!any_nonzero)
        return SchurVerdict::zero;
    if (!all_nonzero)
        throw TheoremViolation("operator " + op.name() +
                               " killed part of the basis of shape " +
                               module.shape.to_string());

    // linear independence
    std::vector<Monomial> support = monomial_support(images);
    CMatrix B = coefficient_matrix(support, images, im.r);
    if (B.rank() != module.dim())
        throw TheoremViolation("operator images linearly dependent for shape " +
                               module.shape.to_string());

    // G-stability and the character of the image span
    for (const GroupElement& g : module.elements) {
        std::vector<SparsePoly> acted;
        acted.reserve(images.size());
        for (const SparsePoly& q : images)
            acted.push_back(act(g, q));
        std::vector<SparsePoly> everything = images;
        everything.insert(everything.end(), acted.begin(), acted.end());
        std::vector<Monomial> full_support = monomial_support(everything);
        CMatrix basis_m = coefficient_matrix(full_support, images, im.r);
        CMatrix acted_m = coefficient_matrix(full_support, acted, im.r);
        auto solved = basis_m.solve_detailed(acted_m);
        if (solved.status != CMatrix::SolveStatus::ok)
            throw TheoremViolation("operator image span not G-stable for shape " +
                                   module.shape.to_string() + ", operator " + op.name());
        if (solved.x->trace() != module.rho(g).trace())
            throw TheoremViolation("operator image span has the wrong character for shape " +
                                   module.shape.to_string() + ", operator " + op.name());
    }
    return SchurVerdict::isomorphic_copy;
}

namespace {

SparsePoly random_poly(unsigned nvars, unsigned order, unsigned max_degree,
                       std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 6);
    std::uniform_int_distribution<int> exp_dist(0, static_cast<int>(max_degree));
    std::uniform_int_distribution<long> num_dist(-9, 9);
    std::uniform_int_distribution<long> den_dist(1, 4);
    const unsigned phi = totient(order);
    std::uniform_int_distribution<unsigned> basis_dist(0, phi - 1);

    SparsePoly p(nvars, order);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<uint32_t>(nvars, 0)};
        unsigned budget = max_degree;
        for (unsigned k = 0; k < nvars; ++k) {
            unsigned e = std::min<unsigned>(static_cast<unsigned>(exp_dist(rng)), budget);
            m.exps[k] = e;
            budget -= e;
        }
        std::vector<Rational> coeffs(phi, Rational(0));
        coeffs[basis_dist(rng)] = Rational(num_dist(rng), den_dist(rng));
        p.add_term(m, CycElement::from_coeffs(order, std::move(coeffs)));
    }
    return p;
}

}  // namespace

bool equivariance_check(const InvariantMap& im, const InvariantOperator& op, unsigned samples,
                        uint64_t seed, unsigned max_degree, uint64_t cap) {
    std::mt19937_64 rng(seed);
    std::vector<GroupElement> elements = enumerate_group(im.r, im.n, cap);
    for (unsigned s = 0; s < samples; ++s) {
        SparsePoly p = random_poly(im.n, im.r, max_degree, rng);
        SparsePoly dp = apply_operator(im, op, p);
        for (const GroupElement& g : elements) {
            if (act(g, dp) != apply_operator(im, op, act(g, p)))
                return false;
        }
    }
    return true;
}

IsotypyReport truncated_isotypy_scan(const WedderburnData& w, const InvariantMap& im,
                                     size_t shape_index, unsigned degree_bound) {
    IsotypyReport report;
    report.shape_index = shape_index;
    report.degree_bound = degree_bound;

    std::vector<InvariantOperator> ops = {InvariantOperator::euler(),
                                          InvariantOperator::power_lower(1)};
    for (unsigned j = 0; j < im.n; ++j)
        ops.push_back(InvariantOperator::mult_invariant(j));

    const SparsePoly& f = w.blocks[shape_index].module.basis.front().poly;

    // words of length 0, 1, 2
    std::vector<std::pair<std::string, std::vector<InvariantOperator>>> words;
    words.push_back({"id", {}});
    for (const auto& a : ops)
        words.push_back({a.name(), {a}});
    for (const auto& a : ops)
        for (const auto& b : ops)
            words.push_back({a.name() + "." + b.name(), {a, b}});

    report.single_shape = true;
    for (const auto& [label, sequence] : words) {
        SparsePoly img = f;
        for (auto it = sequence.rbegin(); it != sequence.rend(); ++it)
            img = apply_operator(im, *it, img);
        if (img.is_zero())
            continue;
        if (img.total_degree() > degree_bound)
            continue;
        IsotypyEntry entry;
        entry.word = label;
        entry.degree = img.total_degree();
        SparsePoly recombined(im.n, im.r);
        for (size_t b = 0; b < w.blocks.size(); ++b) {
            SparsePoly proj = isotypic_project(w, b, img);
            if (!proj.is_zero()) {
                entry.shapes_hit.push_back(b);
                recombined += proj;
            }
        }
        // partition of unity: the projections must reassemble the image
        if (recombined != img)
            throw SpechtError("isotypic projections do not sum back to the image");
        if (entry.shapes_hit != std::vector<size_t>{shape_index})
            report.single_shape = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace specht
