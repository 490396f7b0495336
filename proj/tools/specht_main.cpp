#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "specht/json_io.hpp"
#include "specht/verify.hpp"

using nlohmann::json;
using namespace specht;

namespace {

constexpr uint64_t kDefaultCap = 10000;

uint64_t cap_from_env() {
    const char* env = std::getenv("SPECHT_CAP");
    if (env == nullptr || *env == '\0')
        return kDefaultCap;
    return std::strtoull(env, nullptr, 10);
}

uint64_t effective_cap(bool force) { return force ? UINT64_MAX : cap_from_env(); }

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f)
        throw BadInput("cannot open output file: " + output);
    f << text;
}

struct CommonOpts {
    unsigned r = 1;
    unsigned n = 1;
    std::string convention = "nu-minus-one";
    std::string format = "text";
    std::string output;
    uint64_t seed = 0;
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_n) {
    cmd->add_option("-r", o.r, "cyclic order r of G(r,n)")->required();
    auto* n_opt = cmd->add_option("-n", o.n, "number of variables n");
    if (needs_n)
        n_opt->required();
    cmd->add_option("--convention", o.convention, "twist convention")
        ->check(CLI::IsMember({"nu", "nu-minus-one"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--output", o.output, "output path (default stdout)");
    cmd->add_option("--seed", o.seed, "seed for generic-point retries and sampling");
    cmd->add_flag("--force", o.force, "bypass the group-order cap");
}

void check_cap(const CommonOpts& o) {
    if (o.force)
        return;
    uint64_t order = group_order(o.r, o.n);
    uint64_t cap = cap_from_env();
    if (order > cap)
        throw CapExceeded("|G(" + std::to_string(o.r) + "," + std::to_string(o.n) + ")| = " +
                          std::to_string(order) + " exceeds cap " + std::to_string(cap) +
                          " (SPECHT_CAP or --force to override)");
}

int run_diagrams(const CommonOpts& o) {
    check_cap(o);
    auto diagrams = enumerate_diagrams(o.r, o.n);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& d : diagrams)
            rows.push_back(json{{"shape", io::to_json(d)}, {"dim", dimension(d)}});
        emit(rows.dump(2) + "\n", o.output);
    } else {
        std::ostringstream os;
        for (const auto& d : diagrams)
            os << "shape=" << d.to_string() << " dim=" << dimension(d) << "\n";
        emit(os.str(), o.output);
    }
    return 0;
}

int run_specht(const CommonOpts& o, const std::string& shape_str, const std::string& s_str,
               const std::string& t_str) {
    MultiDiagram shape;
    try {
        shape = io::diagram_from_json(json::parse(shape_str));
    } catch (const json::exception& e) {
        throw BadInput(std::string("malformed shape JSON: ") + e.what());
    }
    if (shape.r() != o.r)
        throw BadInput("shape has " + std::to_string(shape.r()) + " components, expected r = " +
                       std::to_string(o.r));

    CommonOpts with_n = o;
    with_n.n = shape.size();
    check_cap(with_n);

    auto stab = enumerate_standard(shape);
    if (stab.empty())
        throw BadInput("shape admits no standard tableau");
    auto parse_tab = [&](const std::string& text) {
        try {
            return io::tableau_from_json(json::parse(text), shape);
        } catch (const json::exception& e) {
            throw BadInput(std::string("malformed tableau JSON: ") + e.what());
        }
    };
    RTableau S = s_str.empty() ? stab.front() : parse_tab(s_str);
    RTableau T = t_str.empty() ? stab.front() : parse_tab(t_str);
    if (!S.is_standard())
        throw NotStandard("S is not standard");
    if (!T.is_standard())
        throw NotStandard("T is not standard");

    SpechtRecord rec = higher_specht(S, T, twist_convention_from_string(o.convention));
    if (o.format == "json") {
        emit(io::to_json(rec).dump(2) + "\n", o.output);
    } else {
        std::ostringstream os;
        os << "shape: " << rec.shape.to_string() << "\n";
        os << "S: " << io::to_json(rec.S).dump() << "\n";
        os << "T: " << io::to_json(rec.T).dump() << "\n";
        os << "convention: " << to_string(rec.convention) << "\n";
        os << "poly: " << rec.poly.to_string() << "\n";
        emit(os.str(), o.output);
    }
    return 0;
}

int run_decomp_report(const CommonOpts& o) {
    check_cap(o);
    auto rows = multiplicity_report(o.r, o.n, twist_convention_from_string(o.convention),
                                    effective_cap(o.force));
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back(io::to_json(row));
        emit(arr.dump(2) + "\n", o.output);
    } else {
        std::ostringstream os;
        for (const auto& row : rows)
            os << "shape=" << row.shape.to_string() << " dim=" << row.dim
               << " mult=" << row.multiplicity
               << " generator=" << row.generator.poly.to_string() << "\n";
        emit(os.str(), o.output);
    }
    return 0;
}

int run_dmodule_check(const CommonOpts& o) {
    check_cap(o);
    InvariantMap im = build_invariant_map(o.r, o.n);
    WedderburnData w = build_wedderburn(o.r, o.n, twist_convention_from_string(o.convention),
                                        effective_cap(o.force));
    std::vector<InvariantOperator> ops = {InvariantOperator::euler(),
                                          InvariantOperator::power_lower(1)};
    for (unsigned j = 0; j < o.n; ++j)
        ops.push_back(InvariantOperator::mult_invariant(j));

    json arr = json::array();
    std::ostringstream text;
    for (const auto& block : w.blocks) {
        for (const auto& op : ops) {
            SchurVerdict v = schur_image_check(im, block.module, op);
            // degree of the operator image for copies, of the source module
            // when the operator annihilates it
            unsigned degree = block.module.basis.front().poly.total_degree();
            if (v == SchurVerdict::isomorphic_copy)
                degree = apply_operator(im, op, block.module.basis.front().poly).total_degree();
            arr.push_back(json{{"shape", io::to_json(block.shape)},
                               {"operator", op.name()},
                               {"verdict", to_string(v)},
                               {"degree", degree}});
            text << "shape=" << block.shape.to_string() << " operator=" << op.name()
                 << " verdict=" << to_string(v) << " degree=" << degree << "\n";
        }
    }
    emit(o.format == "json" ? arr.dump(2) + "\n" : text.str(), o.output);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& suite) {
    RunConfig cfg;
    cfg.r = o.r;
    cfg.n = o.n;
    cfg.convention = twist_convention_from_string(o.convention);
    cfg.seed = o.seed;
    cfg.cap = effective_cap(o.force);
    cfg.force = o.force;
    SuiteReport report = run_suite(suite, cfg);
    emit(o.format == "json" ? render_json(report) : render_text(report), o.output);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"higher Specht polynomials and exact checks for G(r,n)"};
    app.require_subcommand(1);

    CommonOpts diag_opts;
    CLI::App* diagrams = app.add_subcommand("diagrams", "list P_{r,n} with dimensions");
    add_common(diagrams, diag_opts, true);

    CommonOpts specht_opts;
    std::string shape_str, s_str, t_str;
    CLI::App* specht_cmd =
        app.add_subcommand("specht", "construct a higher Specht polynomial");
    add_common(specht_cmd, specht_opts, false);
    specht_cmd->add_option("--shape", shape_str, "shape as JSON, e.g. [[1,1]] or [[1],[1]]")
        ->required();
    specht_cmd->add_option("--S", s_str, "standard tableau S as JSON (default: first)");
    specht_cmd->add_option("--T", t_str, "standard tableau T as JSON (default: first)");

    CommonOpts verify_opts;
    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run an exact verification suite");
    add_common(verify_cmd, verify_opts, true);
    verify_cmd->add_option("--suite", suite, "group | specht | idempotents | dmodule | all")
        ->check(CLI::IsMember({"group", "specht", "idempotents", "dmodule", "all"}));

    CommonOpts decomp_opts;
    CLI::App* decomp_cmd = app.add_subcommand(
        "decomp-report", "decomposition table: shape, dimension, multiplicity, generator");
    add_common(decomp_cmd, decomp_opts, true);

    CommonOpts dmodule_opts;
    CLI::App* dmodule_cmd = app.add_subcommand(
        "dmodule-check", "operator-image verdicts for every shape and operator family");
    add_common(dmodule_cmd, dmodule_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;  // bad command line
    }

    try {
        if (diagrams->parsed())
            return run_diagrams(diag_opts);
        if (specht_cmd->parsed())
            return run_specht(specht_opts, shape_str, s_str, t_str);
        if (verify_cmd->parsed())
            return run_verify(verify_opts, suite);
        if (decomp_cmd->parsed())
            return run_decomp_report(decomp_opts);
        if (dmodule_cmd->parsed())
            return run_dmodule_check(dmodule_opts);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotStandard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SpechtError& e) {
        // mathematical failure (theorem-level check did not hold)
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
