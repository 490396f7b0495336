// Acceptance suite: one criterion per check, one PASS/FAIL line each, all
// arithmetic exact. Exits nonzero if any criterion fails. argv[1] (optional)
// is the path of the CLI binary, used by the byte-determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specht/json_io.hpp"
#include "specht/verify.hpp"

using namespace specht;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << name << ": " << detail << "\n";
    if (!pass)
        ++g_failures;
}

template <class Fn>
void criterion(const std::string& name, double time_limit_s, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && time_limit_s > 0 && elapsed > time_limit_s) {
        pass = false;
        detail += " [exceeded time limit]";
    }
    std::ostringstream os;
    os << detail << " (" << std::fixed << elapsed << "s)";
    report(name, pass, os.str());
}

using Outcome = std::pair<bool, std::string>;

std::string run_cli(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return "<popen failed>";
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // 1. Regular-representation count: sum of squared dimensions equals |G|.
    {
        const std::vector<std::pair<unsigned, unsigned>> cases = {
            {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
        const std::vector<uint64_t> expected = {2, 6, 8, 48, 18};
        for (size_t k = 0; k < cases.size(); ++k) {
            auto [r, n] = cases[k];
            uint64_t want = expected[k];
            criterion("1.regular_count(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")",
                      10.0, [&]() -> Outcome {
                          uint64_t sum = 0;
                          for (const auto& d : enumerate_diagrams(r, n)) {
                              uint64_t f = dimension(d);
                              sum += f * f;
                          }
                          return {sum == want && want == group_order(r, n),
                                  "sum of squares = " + std::to_string(sum)};
                      });
        }
    }

    // 2. Basis-of-module certificate: nonzero determinant, exact.
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 2}}) {
        criterion("2.free_basis_certificate(r=" + std::to_string(r) + ",n=" +
                      std::to_string(n) + ")",
                  30.0, [&, r = r, n = n]() -> Outcome {
                      CycElement det = free_basis_certificate(r, n);
                      return {!det.is_zero(),
                              std::to_string(group_order(r, n)) + "x" +
                                  std::to_string(group_order(r, n)) + " determinant = " +
                                  det.to_string()};
                  });
    }

    // 3. Wedderburn identities, exact, for groups of order <= 48.
    criterion("3.wedderburn_identities", 0, [&]() -> Outcome {
        const std::vector<std::pair<unsigned, unsigned>> cases = {
            {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {6, 1}, {12, 1}};
        unsigned identities = 0;
        for (auto [r, n] : cases) {
            if (group_order(r, n) > 48)
                return {false, "internal: case exceeds |G| = 48"};
            WedderburnData w = build_wedderburn(r, n);
            GroupAlgebraElement sum(r, n);
            for (const auto& block : w.blocks)
                sum += block.central;
            if (sum != GroupAlgebraElement::unit(r, n))
                return {false, "sum of r_lambda != 1 at G(" + std::to_string(r) + "," +
                                   std::to_string(n) + ")"};
            ++identities;
            for (size_t a = 0; a < w.blocks.size(); ++a)
                for (size_t b = 0; b < w.blocks.size(); ++b) {
                    GroupAlgebraElement prod = w.blocks[a].central * w.blocks[b].central;
                    bool ok = a == b ? prod == w.blocks[a].central : prod.is_zero();
                    if (!ok)
                        return {false, "central idempotent relation failed"};
                    ++identities;
                }
            for (const auto& block : w.blocks) {
                GroupAlgebraElement esum(r, n);
                for (size_t i = 0; i < block.primitive.size(); ++i) {
                    esum += block.primitive[i];
                    for (size_t j = 0; j < block.primitive.size(); ++j) {
                        GroupAlgebraElement prod = block.primitive[i] * block.primitive[j];
                        bool ok = i == j ? prod == block.primitive[i] : prod.is_zero();
                        if (!ok)
                            return {false, "primitive idempotent relation failed"};
                        ++identities;
                    }
                }
                if (esum != block.central)
                    return {false, "sum of e_T != r_lambda"};
                ++identities;
            }
        }
        return {true, std::to_string(identities) + " identities exact across " +
                          std::to_string(cases.size()) + " groups"};
    });

    // 4. Eigen-witness: e_T F_T^S = c F_T^S with c != 0; cross pairs vanish.
    criterion("4.eigen_witness", 0, [&]() -> Outcome {
        unsigned nonzero = 0, zero = 0;
        for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}}) {
            WedderburnData w = build_wedderburn(r, n);
            for (size_t b = 0; b < w.blocks.size(); ++b) {
                const ShapeBlock& block = w.blocks[b];
                for (const RTableau& S : enumerate_standard(block.shape)) {
                    for (unsigned i = 0; i < block.dim; ++i) {
                        if (specht_eigen_check(w, b, S, i, i).is_zero())
                            return {false, "matching eigen scalar vanished at " +
                                               block.shape.to_string()};
                        ++nonzero;
                        for (unsigned j = 0; j < block.dim; ++j) {
                            if (j == i)
                                continue;
                            if (!specht_eigen_check(w, b, S, i, j).is_zero())
                                return {false, "cross idempotent application nonzero at " +
                                                   block.shape.to_string()};
                            ++zero;
                        }
                    }
                }
            }
        }
        return {true, std::to_string(nonzero) + " eigen scalars nonzero, " +
                          std::to_string(zero) + " cross pairs zero"};
    });

    // 5. Shape-isomorphism at (2,2): characters equal within shapes, distinct
    //    across all shape pairs.
    criterion("5.shape_isomorphism", 0, [&]() -> Outcome {
        auto diagrams = enumerate_diagrams(2, 2);
        std::vector<SpechtModule> firsts;
        unsigned same = 0, cross = 0;
        for (const auto& d : diagrams) {
            auto stab = enumerate_standard(d);
            SpechtModule first = build_module(d, stab.front());
            for (size_t s = 1; s < stab.size(); ++s) {
                if (!shape_isomorphism_check(first, build_module(d, stab[s])))
                    return {false, "characters differ within " + d.to_string()};
                ++same;
            }
            firsts.push_back(std::move(first));
        }
        for (size_t a = 0; a < firsts.size(); ++a)
            for (size_t b = a + 1; b < firsts.size(); ++b) {
                if (shape_isomorphism_check(firsts[a], firsts[b]))
                    return {false, "characters collide across " +
                                       firsts[a].shape.to_string() + " and " +
                                       firsts[b].shape.to_string()};
                ++cross;
            }
        return {true, std::to_string(same) + " same-shape pairs equal, " +
                          std::to_string(cross) + " cross-shape pairs distinct"};
    });

    // 6. Jacobian closed form (verified inside build_invariant_map).
    for (auto [r, n] :
         std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
        criterion("6.jacobian_closed_form(r=" + std::to_string(r) + ",n=" + std::to_string(n) +
                      ")",
                  0, [&, r = r, n = n]() -> Outcome {
                      InvariantMap im = build_invariant_map(r, n);
                      return {!im.delta.is_zero(), "Delta matches c prod x_i^{r-1} prod (x_i^r "
                                                   "- x_j^r); " +
                                                       std::to_string(im.delta.term_count()) +
                                                       " terms"};
                  });
    }

    // 7. Chain-rule contract at (2,2).
    criterion("7.chain_rule", 0, [&]() -> Outcome {
        InvariantMap im = build_invariant_map(2, 2);
        for (unsigned j = 0; j < 2; ++j)
            for (unsigned k = 0; k < 2; ++k) {
                LocalizedPoly out = apply_dy(im, j, localize(im, im.y[k]));
                LocalizedPoly want = localize(
                    im, j == k ? SparsePoly::constant(2, CycElement::one(2)) : SparsePoly(2, 2));
                if (!(out == want))
                    return {false, "dy_k/dy_j != delta_jk"};
            }
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> terms(1, 4), exps(0, 3);
        std::uniform_int_distribution<long> coeff(-5, 5);
        std::uniform_int_distribution<unsigned> dpow(0, 1);
        for (int s = 0; s < 20; ++s) {
            SparsePoly p(2, 2);
            int count = terms(rng);
            for (int t = 0; t < count; ++t) {
                Monomial m{{static_cast<uint32_t>(exps(rng)), static_cast<uint32_t>(exps(rng))}};
                long c = coeff(rng);
                if (c != 0)
                    p.add_term(m, CycElement::from_long(2, c));
            }
            LocalizedPoly f = localize(im, p, dpow(rng));
            if (!(apply_dy(im, 0, apply_dy(im, 1, f)) == apply_dy(im, 1, apply_dy(im, 0, f))))
                return {false, "mixed invariant derivatives differ"};
        }
        return {true, "dy_k/dy_j = delta_jk and 20 sampled commutators vanish"};
    });

    // 8. Operator-image theorem at (2,2).
    criterion("8.operator_images", 0, [&]() -> Outcome {
        InvariantMap im = build_invariant_map(2, 2);
        WedderburnData w = build_wedderburn(2, 2);
        const std::vector<InvariantOperator> ops = {
            InvariantOperator::euler(), InvariantOperator::power_lower(1),
            InvariantOperator::mult_invariant(0), InvariantOperator::mult_invariant(1)};
        unsigned zero = 0, copies = 0;
        for (const auto& block : w.blocks)
            for (const auto& op : ops) {
                try {
                    SchurVerdict v = schur_image_check(im, block.module, op);
                    (v == SchurVerdict::zero ? zero : copies) += 1;
                } catch (const TheoremViolation& e) {
                    return {false, std::string("TheoremViolation: ") + e.what()};
                }
            }
        return {true, std::to_string(zero) + " Zero and " + std::to_string(copies) +
                          " IsomorphicCopy verdicts, no violations"};
    });

    // 9. Equivariance at (2,2): three invariant families commute with all 8
    //    elements on 20 random polynomials; the control d/dx1 does not.
    criterion("9.equivariance", 0, [&]() -> Outcome {
        InvariantMap im = build_invariant_map(2, 2);
        const std::vector<InvariantOperator> ops = {
            InvariantOperator::euler(), InvariantOperator::power_lower(1),
            InvariantOperator::mult_invariant(0), InvariantOperator::mult_invariant(1)};
        for (const auto& op : ops)
            if (!equivariance_check(im, op, 20, 7, 4))
                return {false, op.name() + " failed to commute"};
        if (equivariance_check(im, InvariantOperator::partial_x1(), 20, 7, 4))
            return {false, "control operator d/dx1 unexpectedly commutes"};
        return {true, "3 invariant families commute on 8 x 20 checks; d/dx1 fails"};
    });

    // 10. Truncated isotypy at (2,2), all shapes, degree bound 6.
    criterion("10.truncated_isotypy", 60.0, [&]() -> Outcome {
        WedderburnData w = build_wedderburn(2, 2);
        InvariantMap im = build_invariant_map(2, 2);
        unsigned images = 0;
        for (size_t b = 0; b < w.blocks.size(); ++b) {
            IsotypyReport rep = truncated_isotypy_scan(w, im, b, 6);
            if (!rep.single_shape)
                return {false, "image escaped the isotypic component of " +
                                   w.blocks[b].shape.to_string()};
            images += static_cast<unsigned>(rep.entries.size());
        }
        return {true, std::to_string(images) +
                          " nonzero images, every one inside its source component"};
    });

    // 11. Byte-identical verify reports for identical configs.
    criterion("11.determinism", 0, [&]() -> Outcome {
        RunConfig cfg;
        cfg.r = 2;
        cfg.n = 2;
        cfg.seed = 7;
        std::string a = render_text(run_suite("all", cfg));
        std::string b = render_text(run_suite("all", cfg));
        if (a != b)
            return {false, "in-process reports differ"};
        if (!cli.empty()) {
            std::string first = run_cli(cli, "verify -r 2 -n 2 --suite all --seed 7");
            std::string second = run_cli(cli, "verify -r 2 -n 2 --suite all --seed 7");
            if (first.empty() || first != second)
                return {false, "CLI runs differ or produced no output"};
            return {true, "CLI and in-process reports byte-identical across runs (" +
                              std::to_string(first.size()) + " bytes)"};
        }
        return {true, "in-process reports byte-identical (CLI path not supplied)"};
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << g_failures << " failing)\n";
    return g_failures == 0 ? 0 : 1;
}
