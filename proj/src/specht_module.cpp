#include "specht/specht_module.hpp"

#include <algorithm>
#include <random>

#include "specht/kernels.hpp"

namespace specht {

std::string to_string(TwistConvention c) {
    return c == TwistConvention::nu ? "nu" : "nu_minus_one";
}

TwistConvention twist_convention_from_string(const std::string& s) {
    if (s == "nu")
        return TwistConvention::nu;
    if (s == "nu_minus_one" || s == "nu-minus-one")
        return TwistConvention::nu_minus_one;
    throw BadInput("unknown twist convention: " + s);
}

namespace {

// all permutations of the values within each listed block, as full
// permutations of {0..n-1}
std::vector<std::vector<uint32_t>> block_permutations(
    const std::vector<std::vector<uint32_t>>& blocks, unsigned n) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> base(n);
    for (unsigned k = 0; k < n; ++k)
        base[k] = k;
    out.push_back(base);
    for (const auto& block : blocks) {
        if (block.size() < 2)
            continue;
        // 0-based positions being permuted
        std::vector<uint32_t> pos;
        pos.reserve(block.size());
        for (uint32_t v : block)
            pos.push_back(v - 1);
        std::vector<uint32_t> images = pos;
        std::sort(images.begin(), images.end());
        std::vector<std::vector<uint32_t>> next;
        do {
            for (const auto& prev : out) {
                std::vector<uint32_t> p = prev;
                for (size_t i = 0; i < pos.size(); ++i)
                    p[pos[i]] = prev[images[i]];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        out = std::move(next);
    }
    return out;
}

std::vector<std::vector<uint32_t>> columns_of(const std::vector<std::vector<uint32_t>>& rows) {
    std::vector<std::vector<uint32_t>> cols;
    size_t width = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < width; ++c) {
        std::vector<uint32_t> col;
        for (const auto& row : rows)
            if (c < row.size())
                col.push_back(row[c]);
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

GroupAlgebraElement young_symmetrizer(const std::vector<std::vector<uint32_t>>& rows, unsigned r,
                                      unsigned n) {
    Partition part;
    for (const auto& row : rows)
        part.rows.push_back(static_cast<uint32_t>(row.size()));
    uint64_t alpha = hook_product(part);

    auto row_perms = block_permutations(rows, n);
    auto col_perms = block_permutations(columns_of(rows), n);

    CycElement scale =
        CycElement::from_rational(r, Rational(1) / Rational(static_cast<long>(alpha)));
    GroupAlgebraElement e(r, n);
    for (const auto& tau : col_perms) {
        int sgn = permutation_sign(tau);
        for (const auto& sigma : row_perms) {
            // tau o sigma
            std::vector<uint32_t> prod(n);
            for (unsigned k = 0; k < n; ++k)
                prod[k] = tau[sigma[k]];
            CycElement c = sgn < 0 ? -scale : scale;
            e.add_term(GroupElement::from_permutation(r, std::move(prod)), c);
        }
    }
    return e;
}

SpechtRecord higher_specht(const RTableau& S, const RTableau& T, TwistConvention convention) {
    if (S.shape != T.shape)
        throw ShapeMismatch("S and T must have the same shape");
    if (!S.is_standard())
        throw NotStandard("S is not a standard r-tableau");
    if (!T.is_standard())
        throw NotStandard("T is not a standard r-tableau");

    const unsigned r = S.shape.r();
    const unsigned n = S.shape.size();
    IndexTableau idx = index_tableau(S);

    SparsePoly result = SparsePoly::constant(n, CycElement::one(r));
    for (unsigned v = 0; v < r; ++v) {
        if (S.shape.components[v].rows.empty())
            continue;
        // monomial x_{T^nu}^{r i(S)^nu}
        Monomial m{std::vector<uint32_t>(n, 0)};
        for (size_t row = 0; row < T.fill[v].size(); ++row)
            for (size_t col = 0; col < T.fill[v][row].size(); ++col)
                m.exps[T.fill[v][row][col] - 1] += r * idx.entries[v][row][col];
        SparsePoly sym =
            young_symmetrizer(T.fill[v], r, n).apply(SparsePoly::single_term(n, m, CycElement::one(r)));

        // twist prod_{k in T^nu} x_k^{c(nu)}
        unsigned c = convention == TwistConvention::nu ? v + 1 : v;
        if (c > 0) {
            Monomial tw{std::vector<uint32_t>(n, 0)};
            for (const auto& row : T.fill[v])
                for (uint32_t k : row)
                    tw.exps[k - 1] = c;
            sym = sym * SparsePoly::single_term(n, tw, CycElement::one(r));
        }
        result = result * sym;
    }
    if (result.is_zero())
        throw ZeroResult("higher Specht polynomial vanished for S,T of shape " +
                         S.shape.to_string());
    return SpechtRecord{S.shape, S, T, std::move(result), convention};
}

std::vector<Monomial> monomial_support(const std::vector<SparsePoly>& polys) {
    std::vector<Monomial> support;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            support.push_back(m);
    std::sort(support.begin(), support.end(),
              [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

CMatrix coefficient_matrix(const std::vector<Monomial>& support,
                           const std::vector<SparsePoly>& polys, unsigned order) {
    CMatrix out(static_cast<unsigned>(support.size()), static_cast<unsigned>(polys.size()),
                order);
    for (unsigned j = 0; j < polys.size(); ++j) {
        for (const auto& [m, c] : polys[j].terms()) {
            auto it = std::lower_bound(
                support.begin(), support.end(), m,
                [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
            if (it == support.end() || !(*it == m))
                throw SpechtError("internal: monomial missing from support");
            out.at(static_cast<unsigned>(it - support.begin()), j) = c;
        }
    }
    return out;
}

const CMatrix& SpechtModule::rho(const GroupElement& g) const {
    auto it = rep.find(g);
    if (it == rep.end())
        throw ParameterMismatch("element not in the represented group");
    return it->second;
}

SpechtModule build_module(const MultiDiagram& shape, const RTableau& S,
                          TwistConvention convention, uint64_t cap) {
    const unsigned r = shape.r();
    const unsigned n = shape.size();

    SpechtModule mod;
    mod.shape = shape;
    mod.S = S;
    mod.convention = convention;
    mod.standard = enumerate_standard(shape);
    for (const RTableau& T : mod.standard)
        mod.basis.push_back(higher_specht(S, T, convention));
    const unsigned f = mod.dim();

    std::vector<SparsePoly> basis_polys;
    basis_polys.reserve(f);
    for (const auto& rec : mod.basis)
        basis_polys.push_back(rec.poly);

    // the G-span of the basis stays inside one homogeneous degree, so one
    // shared support suffices for every solve
    mod.elements = enumerate_group(r, n, cap);
    std::vector<SparsePoly> all = basis_polys;
    for (const GroupElement& g : mod.elements)
        for (const SparsePoly& p : basis_polys)
            all.push_back(act(g, p));
    std::vector<Monomial> support = monomial_support(all);
    CMatrix B = coefficient_matrix(support, basis_polys, r);

    std::vector<CMatrix> rhos(mod.elements.size(), CMatrix(0, 0, r));
    std::vector<std::string> failures(mod.elements.size());
#pragma omp parallel for schedule(dynamic) if (kernels::mode() == kernels::Mode::parallel)
    for (long gi = 0; gi < static_cast<long>(mod.elements.size()); ++gi) {
        const GroupElement& g = mod.elements[static_cast<size_t>(gi)];
        std::vector<SparsePoly> images;
        images.reserve(f);
        for (const SparsePoly& p : basis_polys)
            images.push_back(act(g, p));
        CMatrix W(static_cast<unsigned>(support.size()), f, r);
        try {
            W = coefficient_matrix(support, images, r);
        } catch (const SpechtError&) {
            failures[static_cast<size_t>(gi)] = "span violation (image monomial outside span)";
            continue;
        }
        auto solved = B.solve_detailed(W);
        if (solved.status == CMatrix::SolveStatus::rank_deficient) {
            failures[static_cast<size_t>(gi)] = "singular basis";
        } else if (solved.status == CMatrix::SolveStatus::inconsistent) {
            failures[static_cast<size_t>(gi)] = "span violation";
        } else {
            rhos[static_cast<size_t>(gi)] = std::move(*solved.x);
        }
    }
    for (size_t gi = 0; gi < mod.elements.size(); ++gi) {
        if (failures[gi] == "singular basis")
            throw SingularBasis("basis of V_S(lambda) linearly dependent for shape " +
                                shape.to_string());
        if (!failures[gi].empty())
            throw SpanViolation("G-action leaves the span of the basis for shape " +
                                shape.to_string());
        mod.rep.emplace(mod.elements[gi], std::move(rhos[gi]));
    }
    return mod;
}

Character character(const SpechtModule& module) {
    Character chi;
    for (const auto& [g, m] : module.rep)
        chi.emplace(g, m.trace());
    return chi;
}

bool shape_isomorphism_check(const SpechtModule& a, const SpechtModule& b) {
    return character(a) == character(b);
}

CycElement free_basis_certificate(unsigned r, unsigned n, TwistConvention convention,
                                  uint64_t seed, uint64_t cap,
                                  const std::vector<CycElement>* point_override) {
    std::vector<GroupElement> elements = enumerate_group(r, n, cap);
    const uint64_t order = elements.size();

    // columns: all pairs (S, T) over all shapes, deterministic order
    std::vector<SparsePoly> columns;
    for (const MultiDiagram& shape : enumerate_diagrams(r, n)) {
        std::vector<RTableau> stab = enumerate_standard(shape);
        for (const RTableau& S : stab)
            for (const RTableau& T : stab)
                columns.push_back(higher_specht(S, T, convention).poly);
    }
    if (columns.size() != order)
        throw SpechtError("internal: (S,T) pair count differs from |G|");

    // default generic point: the first n primes
    std::vector<CycElement> point;
    if (point_override != nullptr) {
        point = *point_override;
    } else {
        static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                      31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
        for (unsigned k = 0; k < n; ++k)
            point.push_back(CycElement::from_long(r, primes[k % 20]));
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= 3; ++attempt) {
        CMatrix m(static_cast<unsigned>(order), static_cast<unsigned>(order), r);
#pragma omp parallel for collapse(2) schedule(dynamic) \
    if (kernels::mode() == kernels::Mode::parallel)
        for (long i = 0; i < static_cast<long>(order); ++i)
            for (long j = 0; j < static_cast<long>(order); ++j)
                m.at(static_cast<unsigned>(i), static_cast<unsigned>(j)) =
                    act(elements[static_cast<size_t>(i)], columns[static_cast<size_t>(j)])
                        .evaluate(point);
        CycElement det = m.determinant();
        if (point_override != nullptr)
            return det;  // caller-supplied point: no genericity retry
        if (!det.is_zero())
            return det;
        // fresh random rational point
        point.clear();
        std::uniform_int_distribution<long> num(1, 1000), den(1, 20);
        for (unsigned k = 0; k < n; ++k)
            point.push_back(CycElement::from_rational(r, Rational(num(rng), den(rng))));
    }
    throw ZeroDeterminant("free-module certificate vanished at 4 generic points for G(" +
                          std::to_string(r) + "," + std::to_string(n) + ")");
}

}  // namespace specht
