#include "specht/json_io.hpp"

#include <nlohmann/json.hpp>

namespace specht::io {

json to_json(const Rational& q) { return json::array({q.num_string(), q.den_string()}); }

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw BadInput("rational must be a [num, den] string pair");
    return Rational::from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

json to_json(const CycElement& c) {
    json coeffs = json::array();
    for (const Rational& q : c.coeffs())
        coeffs.push_back(to_json(q));
    return json{{"r", c.order()}, {"coeffs", coeffs}};
}

CycElement cyc_from_json(const json& j) {
    unsigned r = j.at("r").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const json& q : j.at("coeffs"))
        coeffs.push_back(rational_from_json(q));
    if (coeffs.size() != totient(r))
        throw BadInput("coefficient vector length must be phi(r)");
    return CycElement::from_coeffs(r, std::move(coeffs));
}

json to_json(const SparsePoly& p) {
    json terms = json::array();
    const auto& map = p.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it) {
        json exps = json::array();
        for (uint32_t e : it->first.exps)
            exps.push_back(e);
        terms.push_back(json{{"exps", exps}, {"coeff", to_json(it->second)}});
    }
    return json{{"n", p.nvars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j, unsigned order) {
    unsigned n = j.at("n").get<unsigned>();
    SparsePoly p(n, order);
    for (const json& t : j.at("terms")) {
        Monomial m;
        for (const json& e : t.at("exps"))
            m.exps.push_back(e.get<uint32_t>());
        if (m.exps.size() != n)
            throw BadInput("exponent vector length must be n");
        p.add_term(m, cyc_from_json(t.at("coeff")));
    }
    return p;
}

json to_json(const GroupElement& g) {
    json twists = json::array(), perm = json::array();
    for (uint32_t t : g.twists)
        twists.push_back(t);
    for (uint32_t k : g.perm)
        perm.push_back(k + 1);
    return json{{"twists", twists}, {"perm", perm}};
}

GroupElement group_element_from_json(const json& j, unsigned r) {
    GroupElement g;
    g.r = r;
    for (const json& t : j.at("twists"))
        g.twists.push_back(t.get<uint32_t>() % r);
    for (const json& k : j.at("perm")) {
        uint32_t v = k.get<uint32_t>();
        if (v < 1 || v > j.at("perm").size())
            throw BadInput("one-line permutation entries must lie in 1..n");
        g.perm.push_back(v - 1);
    }
    if (g.twists.size() != g.perm.size())
        throw BadInput("twists and permutation lengths differ");
    return g;
}

json to_json(const GroupAlgebraElement& a) {
    json out = json::array();
    for (const auto& [g, c] : a.coeffs())
        out.push_back(json{{"element", to_json(g)}, {"coeff", to_json(c)}});
    return out;
}

json to_json(const Partition& p) {
    json out = json::array();
    for (uint32_t row : p.rows)
        out.push_back(row);
    return out;
}

Partition partition_from_json(const json& j) {
    Partition p;
    for (const json& row : j)
        p.rows.push_back(row.get<uint32_t>());
    if (!p.is_valid())
        throw BadInput("partition rows must be positive and weakly decreasing");
    return p;
}

json to_json(const MultiDiagram& d) {
    json out = json::array();
    for (const Partition& p : d.components)
        out.push_back(to_json(p));
    return out;
}

MultiDiagram diagram_from_json(const json& j) {
    MultiDiagram d;
    for (const json& p : j)
        d.components.push_back(partition_from_json(p));
    if (d.components.empty())
        throw BadInput("diagram needs at least one component");
    return d;
}

json to_json(const RTableau& t) {
    json out = json::array();
    for (const auto& comp : t.fill) {
        json rows = json::array();
        for (const auto& row : comp) {
            json cells = json::array();
            for (uint32_t v : row)
                cells.push_back(v);
            rows.push_back(cells);
        }
        out.push_back(rows);
    }
    return out;
}

RTableau tableau_from_json(const json& j, const MultiDiagram& shape) {
    RTableau t;
    t.shape = shape;
    for (const json& comp : j) {
        std::vector<std::vector<uint32_t>> rows;
        for (const json& row : comp) {
            std::vector<uint32_t> cells;
            for (const json& v : row)
                cells.push_back(v.get<uint32_t>());
            rows.push_back(std::move(cells));
        }
        t.fill.push_back(std::move(rows));
    }
    if (!t.is_valid())
        throw BadInput("tableau does not fill the shape bijectively with 1..n");
    return t;
}

json to_json(const IndexTableau& t) {
    json out = json::array();
    for (const auto& comp : t.entries) {
        json rows = json::array();
        for (const auto& row : comp) {
            json cells = json::array();
            for (uint32_t v : row)
                cells.push_back(v);
            rows.push_back(cells);
        }
        out.push_back(rows);
    }
    return out;
}

json to_json(const SpechtRecord& rec) {
    return json{{"shape", to_json(rec.shape)},
                {"S", to_json(rec.S)},
                {"T", to_json(rec.T)},
                {"poly", to_json(rec.poly)},
                {"convention", to_string(rec.convention)}};
}

json to_json(const MultiplicityRow& row) {
    return json{{"shape", to_json(row.shape)},
                {"dim", row.dim},
                {"mult", row.multiplicity},
                {"generator", to_json(row.generator)}};
}

json to_json(const IsotypyReport& report, const std::vector<MultiDiagram>& diagrams) {
    json entries = json::array();
    for (const IsotypyEntry& e : report.entries) {
        json shapes = json::array();
        for (size_t b : e.shapes_hit)
            shapes.push_back(to_json(diagrams[b]));
        entries.push_back(json{{"word", e.word}, {"degree", e.degree}, {"shapes", shapes}});
    }
    return json{{"shape", to_json(diagrams[report.shape_index])},
                {"degree_bound", report.degree_bound},
                {"single_shape", report.single_shape},
                {"images", entries}};
}

}  // namespace specht::io
