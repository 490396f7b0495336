#include "specht/verify.hpp"

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "specht/json_io.hpp"

namespace specht {

using nlohmann::json;

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

unsigned SuiteReport::passed() const {
    unsigned k = 0;
    for (const auto& c : checks)
        if (c.pass)
            ++k;
    return k;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::mt19937_64 rng_for(const RunConfig& cfg, const std::string& check) {
    return std::mt19937_64(cfg.seed ^ fnv1a(check));
}

SparsePoly sample_poly(unsigned nvars, unsigned order, unsigned max_degree,
                       std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 5);
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

class SuiteBuilder {
  public:
    SuiteBuilder(SuiteReport& report, const RunConfig& cfg) : report_(report), cfg_(cfg) {}

    void add(const std::string& name, bool pass, const std::string& detail) {
        report_.checks.push_back(CheckResult{name, pass, detail});
    }

    // runs the body, converting exceptions into a FAIL with the message
    template <class Fn>
    void check(const std::string& name, Fn&& body) {
        try {
            auto [pass, detail] = body();
            add(name, pass, detail);
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

    const RunConfig& cfg() const { return cfg_; }

  private:
    SuiteReport& report_;
    const RunConfig& cfg_;
};

using CheckOutcome = std::pair<bool, std::string>;

// ---------------------------------------------------------------- group ---

void run_group_suite(SuiteBuilder& b) {
    const RunConfig& cfg = b.cfg();
    const unsigned r = cfg.r, n = cfg.n;
    auto elements = enumerate_group(r, n, cfg.cap);
    const size_t order = elements.size();

    b.check("group/order", [&]() -> CheckOutcome {
        uint64_t expect = group_order(r, n);
        return {order == expect, "|G| = " + std::to_string(order)};
    });

    b.check("group/closure_and_inverses", [&]() -> CheckOutcome {
        std::vector<GroupElement> sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        auto contains = [&](const GroupElement& g) {
            return std::binary_search(sorted.begin(), sorted.end(), g);
        };
        GroupElement id = GroupElement::identity(r, n);
        size_t pairs = 0;
        if (order <= 100) {
            for (const auto& g : elements)
                for (const auto& h : elements) {
                    if (!contains(compose(g, h)))
                        return {false, "product left the group"};
                    ++pairs;
                }
        } else {
            auto rng = rng_for(cfg, "group/closure");
            std::uniform_int_distribution<size_t> pick(0, order - 1);
            for (int k = 0; k < 200; ++k) {
                if (!contains(compose(elements[pick(rng)], elements[pick(rng)])))
                    return {false, "product left the group"};
                ++pairs;
            }
        }
        for (const auto& g : elements)
            if (!(compose(g, inverse(g)) == id && compose(inverse(g), g) == id))
                return {false, "inverse failed"};
        return {true, std::to_string(pairs) + " products closed, all inverses check"};
    });

    b.check("group/associativity", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "group/associativity");
        std::uniform_int_distribution<size_t> pick(0, order - 1);
        for (int k = 0; k < 100; ++k) {
            const auto &g = elements[pick(rng)], &h = elements[pick(rng)],
                       &u = elements[pick(rng)];
            if (!(compose(compose(g, h), u) == compose(g, compose(h, u))))
                return {false, "associativity failed"};
        }
        return {true, "100 sampled triples associate"};
    });

    b.check("group/action_law", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "group/action_law");
        std::vector<SparsePoly> polys;
        for (int k = 0; k < 3; ++k)
            polys.push_back(sample_poly(n, r, 3, rng));
        size_t pairs = 0;
        std::uniform_int_distribution<size_t> pick(0, order - 1);
        auto one_pair = [&](const GroupElement& g, const GroupElement& h) {
            for (const auto& p : polys)
                if (act(compose(g, h), p) != act(g, act(h, p)))
                    return false;
            return true;
        };
        if (order <= 48) {
            for (const auto& g : elements)
                for (const auto& h : elements) {
                    if (!one_pair(g, h))
                        return {false, "act(gh) != act(g)act(h)"};
                    ++pairs;
                }
        } else {
            for (int k = 0; k < 100; ++k) {
                if (!one_pair(elements[pick(rng)], elements[pick(rng)]))
                    return {false, "act(gh) != act(g)act(h)"};
                ++pairs;
            }
        }
        return {true, std::to_string(pairs) + " pairs satisfy the left-action law"};
    });

    b.check("group/degree_preservation", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "group/degree_preservation");
        std::uniform_int_distribution<size_t> pick(0, order - 1);
        for (int k = 0; k < 20; ++k) {
            SparsePoly p = sample_poly(n, r, 4, rng);
            const GroupElement& g = elements[pick(rng)];
            SparsePoly q = act(g, p);
            if (p.total_degree() != q.total_degree())
                return {false, "total degree changed"};
            auto degrees = [n](const SparsePoly& f) {
                std::vector<unsigned> d(n, 0);
                for (const auto& [m, c] : f.terms())
                    for (unsigned i = 0; i < n; ++i)
                        d[i] = std::max(d[i], static_cast<unsigned>(m.exps[i]));
                std::sort(d.begin(), d.end());
                return d;
            };
            if (degrees(p) != degrees(q))
                return {false, "variable degree multiset changed"};
        }
        return {true, "20 samples preserve degree data"};
    });

    b.check("group/invariance_of_fundamental_invariants", [&]() -> CheckOutcome {
        auto y = fundamental_invariants(r, n);
        for (const auto& g : elements)
            for (const auto& yj : y)
                if (act(g, yj) != yj)
                    return {false, "fundamental invariant moved"};
        return {true, std::to_string(y.size()) + " invariants fixed by all " +
                          std::to_string(order) + " elements"};
    });
}

// --------------------------------------------------------------- specht ---

void run_specht_suite(SuiteBuilder& b) {
    const RunConfig& cfg = b.cfg();
    const unsigned r = cfg.r, n = cfg.n;
    const uint64_t order = group_order(r, n);
    auto diagrams = enumerate_diagrams(r, n);

    b.check("specht/regular_count", [&]() -> CheckOutcome {
        uint64_t sum = 0;
        for (const auto& d : diagrams) {
            uint64_t f = dimension(d);
            sum += f * f;
        }
        return {sum == order, "sum of squares = " + std::to_string(sum) + ", |G| = " +
                                  std::to_string(order)};
    });

    b.check("specht/symmetrizer_idempotent", [&]() -> CheckOutcome {
        unsigned checked = 0;
        for (const auto& d : diagrams) {
            RTableau t = enumerate_standard(d).front();
            for (unsigned v = 0; v < d.r(); ++v) {
                if (d.components[v].size() == 0 || d.components[v].size() > 4)
                    continue;
                GroupAlgebraElement e = young_symmetrizer(t.fill[v], r, n);
                if (e * e != e)
                    return {false, "e^2 != e on component " + std::to_string(v + 1) +
                                       " of " + d.to_string()};
                ++checked;
            }
        }
        return {true, std::to_string(checked) + " symmetrizers idempotent"};
    });

    std::vector<SpechtModule> modules;
    for (const auto& d : diagrams)
        modules.push_back(
            build_module(d, enumerate_standard(d).front(), cfg.convention, cfg.cap));

    b.check("specht/homogeneous_degrees", [&]() -> CheckOutcome {
        for (const auto& mod : modules) {
            IndexTableau idx = index_tableau(mod.S);
            unsigned expected = 0;
            for (size_t v = 0; v < idx.entries.size(); ++v) {
                unsigned c =
                    cfg.convention == TwistConvention::nu ? v + 1 : static_cast<unsigned>(v);
                expected += c * mod.shape.components[v].size();
                for (const auto& row : idx.entries[v])
                    for (uint32_t i : row)
                        expected += r * i;
            }
            for (const auto& rec : mod.basis) {
                if (!rec.poly.is_homogeneous() || rec.poly.total_degree() != expected)
                    return {false, "degree off for shape " + mod.shape.to_string()};
            }
        }
        return {true, "all basis polynomials homogeneous of the predicted degree"};
    });

    b.check("specht/rep_multiplicative", [&]() -> CheckOutcome {
        size_t pairs = 0;
        for (const auto& mod : modules) {
            if (order <= 48) {
                for (const auto& g : mod.elements)
                    for (const auto& h : mod.elements) {
                        if (mod.rho(g) * mod.rho(h) != mod.rho(compose(g, h)))
                            return {false, "rho(g)rho(h) != rho(gh)"};
                        ++pairs;
                    }
            } else {
                auto rng = rng_for(cfg, "specht/rep_multiplicative");
                std::uniform_int_distribution<size_t> pick(0, mod.elements.size() - 1);
                for (int k = 0; k < 100; ++k) {
                    const auto &g = mod.elements[pick(rng)], &h = mod.elements[pick(rng)];
                    if (mod.rho(g) * mod.rho(h) != mod.rho(compose(g, h)))
                        return {false, "rho(g)rho(h) != rho(gh)"};
                    ++pairs;
                }
            }
        }
        return {true, std::to_string(pairs) + " pairs multiplicative"};
    });

    b.check("specht/character_orthogonality", [&]() -> CheckOutcome {
        std::vector<Character> chars;
        for (const auto& mod : modules)
            chars.push_back(character(mod));
        for (size_t a = 0; a < modules.size(); ++a) {
            for (size_t c = 0; c < modules.size(); ++c) {
                CycElement sum = CycElement::zero(r);
                for (const auto& g : modules[a].elements)
                    sum += chars[a].at(g) * chars[c].at(inverse(g));
                CycElement expect = a == c
                                        ? CycElement::from_long(r, static_cast<long>(order))
                                        : CycElement::zero(r);
                if (sum != expect)
                    return {false, "orthogonality failed between " +
                                       modules[a].shape.to_string() + " and " +
                                       modules[c].shape.to_string()};
            }
        }
        return {true, std::to_string(modules.size() * modules.size()) +
                          " character pairs orthogonal"};
    });

    b.check("specht/shape_isomorphism", [&]() -> CheckOutcome {
        // same shape, every choice of S: equal characters
        for (const auto& d : diagrams) {
            auto stab = enumerate_standard(d);
            SpechtModule first = build_module(d, stab.front(), cfg.convention, cfg.cap);
            for (size_t i = 1; i < stab.size(); ++i) {
                SpechtModule other = build_module(d, stab[i], cfg.convention, cfg.cap);
                if (!shape_isomorphism_check(first, other))
                    return {false, "characters differ within shape " + d.to_string()};
            }
        }
        // distinct shapes: different characters
        for (size_t a = 0; a < modules.size(); ++a)
            for (size_t c = a + 1; c < modules.size(); ++c)
                if (shape_isomorphism_check(modules[a], modules[c]))
                    return {false, "characters agree across distinct shapes " +
                                       modules[a].shape.to_string() + " and " +
                                       modules[c].shape.to_string()};
        return {true, "characters separate exactly the shapes"};
    });

    if (order <= 48) {
        b.check("specht/free_basis_certificate", [&]() -> CheckOutcome {
            CycElement det = free_basis_certificate(r, n, cfg.convention, cfg.seed, cfg.cap);
            return {!det.is_zero(), "determinant " + det.to_string()};
        });
    }
}

// ---------------------------------------------------------- idempotents ---

void run_idempotents_suite(SuiteBuilder& b) {
    const RunConfig& cfg = b.cfg();
    const unsigned r = cfg.r, n = cfg.n;
    WedderburnData w = build_wedderburn(r, n, cfg.convention, cfg.cap);

    b.check("idempotents/partition_of_identity", [&]() -> CheckOutcome {
        GroupAlgebraElement sum(r, n);
        for (const auto& block : w.blocks)
            sum += block.central;
        bool ok = sum == GroupAlgebraElement::unit(r, n);
        return {ok, "sum of " + std::to_string(w.blocks.size()) + " central idempotents"};
    });

    b.check("idempotents/central_orthogonal_idempotents", [&]() -> CheckOutcome {
        for (size_t a = 0; a < w.blocks.size(); ++a) {
            for (size_t c = 0; c < w.blocks.size(); ++c) {
                GroupAlgebraElement prod = w.blocks[a].central * w.blocks[c].central;
                if (a == c ? prod != w.blocks[a].central : !prod.is_zero())
                    return {false, "r_lambda r_mu failed for blocks " + std::to_string(a) +
                                       "," + std::to_string(c)};
            }
        }
        return {true, "all central products exact"};
    });

    b.check("idempotents/primitive_orthogonal_idempotents", [&]() -> CheckOutcome {
        for (const auto& block : w.blocks) {
            GroupAlgebraElement sum(r, n);
            for (size_t i = 0; i < block.primitive.size(); ++i) {
                sum += block.primitive[i];
                for (size_t j = 0; j < block.primitive.size(); ++j) {
                    GroupAlgebraElement prod = block.primitive[i] * block.primitive[j];
                    if (i == j ? prod != block.primitive[i] : !prod.is_zero())
                        return {false, "e_i e_j failed inside " + block.shape.to_string()};
                }
            }
            if (sum != block.central)
                return {false, "sum of e_T != r_lambda for " + block.shape.to_string()};
        }
        // a few cross-block products, all must vanish
        for (size_t a = 0; a + 1 < w.blocks.size(); ++a)
            if (!(w.blocks[a].primitive.front() * w.blocks[a + 1].primitive.front()).is_zero())
                return {false, "cross-block primitive product nonzero"};
        return {true, "matrix-unit relations exact in every block"};
    });

    b.check("idempotents/isotypic_projection", [&]() -> CheckOutcome {
        for (size_t a = 0; a < w.blocks.size(); ++a) {
            const SparsePoly& f = w.blocks[a].module.basis.front().poly;
            if (isotypic_project(w, a, f) != f)
                return {false, "projection onto own shape not identity for " +
                                   w.blocks[a].shape.to_string()};
            for (size_t c = 0; c < w.blocks.size(); ++c) {
                if (c == a)
                    continue;
                if (!isotypic_project(w, c, f).is_zero())
                    return {false, "projection onto foreign shape nonzero"};
            }
        }
        return {true, "projectors act as identity/zero on Specht generators"};
    });

    b.check("idempotents/partition_of_unity_on_polys", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "idempotents/partition_of_unity");
        for (int k = 0; k < 5; ++k) {
            SparsePoly p = sample_poly(n, r, 6, rng);
            SparsePoly sum(n, r);
            for (size_t a = 0; a < w.blocks.size(); ++a)
                sum += isotypic_project(w, a, p);
            if (sum != p)
                return {false, "projections do not sum to the identity"};
        }
        return {true, "5 sampled polynomials reassembled exactly"};
    });

    b.check("idempotents/eigen_witness", [&]() -> CheckOutcome {
        for (size_t a = 0; a < w.blocks.size(); ++a) {
            const auto& block = w.blocks[a];
            for (unsigned i = 0; i < block.dim; ++i) {
                CycElement c = specht_eigen_check(w, a, block.module.S, i, i);
                if (c.is_zero())
                    return {false, "matching eigen scalar vanished for " +
                                       block.shape.to_string()};
                for (unsigned j = 0; j < block.dim; ++j) {
                    if (j == i)
                        continue;
                    if (!specht_eigen_check(w, a, block.module.S, j, i).is_zero())
                        return {false, "cross idempotent did not annihilate"};
                }
            }
        }
        return {true, "e_T F_T = c F_T with c != 0; cross pairs vanish"};
    });
}

// -------------------------------------------------------------- dmodule ---

void run_dmodule_suite(SuiteBuilder& b) {
    const RunConfig& cfg = b.cfg();
    const unsigned r = cfg.r, n = cfg.n;
    InvariantMap im = build_invariant_map(r, n);
    auto elements = enumerate_group(r, n, cfg.cap);

    b.check("dmodule/jacobian_closed_form", [&]() -> CheckOutcome {
        // rebuilt here so the check stands alone; build_invariant_map already
        // verifies the closed form internally
        InvariantMap probe = build_invariant_map(r, n);
        return {!probe.delta.is_zero(),
                "Delta has " + std::to_string(probe.delta.term_count()) + " terms"};
    });

    b.check("dmodule/delta_semi_invariant", [&]() -> CheckOutcome {
        // exact transformation law: act(g, Delta) = sgn(sigma) xi^{(r-1) sum
        // of twists} Delta, hence Delta^2 is invariant precisely when r <= 2
        SparsePoly delta2 = im.delta * im.delta;
        for (const auto& g : elements) {
            long tsum = 0;
            for (uint32_t t : g.twists)
                tsum += t;
            CycElement chi = CycElement::xi_pow(r, static_cast<long>(r - 1) * tsum);
            if (permutation_sign(g.perm) < 0)
                chi = -chi;
            if (act(g, im.delta) != im.delta.scaled(chi))
                return {false, "Delta does not transform by the predicted character"};
            if (chi * chi.conjugate() != CycElement::one(r))
                return {false, "character is not of absolute value 1"};
            if (act(g, delta2) != delta2.scaled(chi * chi))
                return {false, "Delta^2 character law failed"};
            if (r <= 2 && act(g, delta2) != delta2)
                return {false, "Delta^2 moved by a group element"};
        }
        return {true, r <= 2 ? "Delta^2 invariant; Delta scales by a sign character"
                             : "Delta scales by a root-of-unity character; Delta^2 twists "
                               "by its square (nontrivial for r > 2)"};
    });

    b.check("dmodule/chain_rule", [&]() -> CheckOutcome {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                LocalizedPoly out = apply_dy(im, j, localize(im, im.y[k]));
                SparsePoly expect =
                    j == k ? SparsePoly::constant(n, CycElement::one(r)) : SparsePoly(n, r);
                if (!(out == localize(im, expect)))
                    return {false, "d y_k / d y_j != delta_jk"};
            }
        }
        return {true, "dy_k/dy_j = delta_jk for all pairs"};
    });

    b.check("dmodule/chain_rule_squares", [&]() -> CheckOutcome {
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned k = 0; k < n; ++k) {
                LocalizedPoly out = apply_dy(im, j, localize(im, im.y[k] * im.y[k]));
                SparsePoly expect = j == k
                                        ? im.y[k].scaled(CycElement::from_long(r, 2))
                                        : SparsePoly(n, r);
                if (!(out == localize(im, expect)))
                    return {false, "d y_k^2 / d y_j != 2 delta_jk y_k"};
            }
        }
        return {true, "dy_k^2/dy_j = 2 delta_jk y_k for all pairs"};
    });

    b.check("dmodule/dy_commutes", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "dmodule/dy_commutes");
        std::uniform_int_distribution<unsigned> dpow(0, 1);
        for (int s = 0; s < 20; ++s) {
            LocalizedPoly f = localize(im, sample_poly(n, r, 4, rng), dpow(rng));
            for (unsigned j = 0; j < n; ++j)
                for (unsigned k = j + 1; k < n; ++k)
                    if (!(apply_dy(im, j, apply_dy(im, k, f)) ==
                          apply_dy(im, k, apply_dy(im, j, f))))
                        return {false, "mixed invariant derivatives differ"};
        }
        return {true, "20 sampled localized elements commute"};
    });

    b.check("dmodule/dy_leibniz", [&]() -> CheckOutcome {
        auto rng = rng_for(cfg, "dmodule/dy_leibniz");
        std::uniform_int_distribution<unsigned> dpow(0, 1);
        for (int s = 0; s < 10; ++s) {
            LocalizedPoly f = localize(im, sample_poly(n, r, 3, rng), dpow(rng));
            LocalizedPoly g = localize(im, sample_poly(n, r, 3, rng), dpow(rng));
            for (unsigned j = 0; j < n; ++j) {
                LocalizedPoly lhs = apply_dy(im, j, localized_mul(im, f, g));
                LocalizedPoly rhs = localized_add(im, localized_mul(im, apply_dy(im, j, f), g),
                                                  localized_mul(im, f, apply_dy(im, j, g)));
                if (!(lhs == rhs))
                    return {false, "Leibniz rule failed"};
            }
        }
        return {true, "10 sampled products satisfy the Leibniz rule"};
    });

    std::vector<InvariantOperator> ops = {InvariantOperator::euler(),
                                          InvariantOperator::power_lower(1)};
    for (unsigned j = 0; j < n; ++j)
        ops.push_back(InvariantOperator::mult_invariant(j));

    b.check("dmodule/equivariance", [&]() -> CheckOutcome {
        for (const auto& op : ops)
            if (!equivariance_check(im, op, 20, cfg.seed ^ fnv1a("equivariance"), 4, cfg.cap))
                return {false, op.name() + " not equivariant"};
        return {true, std::to_string(ops.size()) + " operator families commute with G"};
    });

    b.check("dmodule/equivariance_control", [&]() -> CheckOutcome {
        if (n < 2)
            return {true, "skipped for n = 1 (d/dx_1 is trivially equivariant there only "
                          "when no permutation part exists)"};
        bool failed = !equivariance_check(im, InvariantOperator::partial_x1(), 20,
                                          cfg.seed ^ fnv1a("control"), 4, cfg.cap);
        return {failed, failed ? "non-invariant control operator detected as expected"
                               : "control operator unexpectedly equivariant"};
    });

    WedderburnData w = build_wedderburn(r, n, cfg.convention, cfg.cap);

    b.check("dmodule/schur_image", [&]() -> CheckOutcome {
        unsigned zero = 0, copies = 0;
        for (const auto& block : w.blocks) {
            for (const auto& op : ops) {
                SchurVerdict v = schur_image_check(im, block.module, op);
                (v == SchurVerdict::zero ? zero : copies) += 1;
            }
        }
        return {true, std::to_string(zero) + " Zero, " + std::to_string(copies) +
                          " IsomorphicCopy, no violations"};
    });

    b.check("dmodule/truncated_isotypy", [&]() -> CheckOutcome {
        for (size_t a = 0; a < w.blocks.size(); ++a) {
            IsotypyReport rep = truncated_isotypy_scan(w, im, a, 6);
            if (!rep.single_shape)
                return {false, "image escaped the isotypic component of " +
                                   w.blocks[a].shape.to_string()};
        }
        return {true, "all operator words stay in the source isotypic component"};
    });
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
    SuiteReport report;
    report.suite = suite;
    report.config = cfg;
    if (!cfg.force) {
        uint64_t order = group_order(cfg.r, cfg.n);
        if (order > cfg.cap)
            throw CapExceeded("|G(" + std::to_string(cfg.r) + "," + std::to_string(cfg.n) +
                              ")| = " + std::to_string(order) + " exceeds cap " +
                              std::to_string(cfg.cap));
    }
    SuiteBuilder b(report, cfg);
    bool known = false;
    if (suite == "group" || suite == "all") {
        run_group_suite(b);
        known = true;
    }
    if (suite == "specht" || suite == "all") {
        run_specht_suite(b);
        known = true;
    }
    if (suite == "idempotents" || suite == "all") {
        run_idempotents_suite(b);
        known = true;
    }
    if (suite == "dmodule" || suite == "all") {
        run_dmodule_suite(b);
        known = true;
    }
    if (!known)
        throw BadInput("unknown suite: " + suite);
    return report;
}

std::string render_text(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << "\n";
    os << "r: " << report.config.r << "\n";
    os << "n: " << report.config.n << "\n";
    os << "convention: " << to_string(report.config.convention) << "\n";
    os << "seed: " << report.config.seed << "\n";
    for (const auto& c : report.checks)
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << " (" << report.passed() << "/"
       << report.checks.size() << ")\n";
    return os.str();
}

std::string render_json(const SuiteReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json out{{"suite", report.suite},
             {"r", report.config.r},
             {"n", report.config.n},
             {"convention", to_string(report.config.convention)},
             {"seed", report.config.seed},
             {"checks", checks},
             {"pass", report.all_pass()}};
    return out.dump(2) + "\n";
}

}  // namespace specht
