#pragma once

#include <nlohmann/json_fwd.hpp>

#include "specht/dmodule.hpp"

// JSON wire formats. Key names and term ordering are part of the external
// contract (golden files depend on them):
//   Rational      ["num", "den"] as decimal strings
//   CycElement    {"r": int, "coeffs": [Rational, ...]}
//   SparsePoly    {"n": int, "terms": [{"exps": [...], "coeff": CycElement}]}
//                 with terms in descending grlex order
//   GroupElement  {"twists": [...], "perm": [one-line, 1-based]}
//   algebra       [{"element": GroupElement, "coeff": CycElement}] sorted
//   Partition     [row lengths]; MultiDiagram [[...], ...]
//   RTableau      per component, list of row lists
namespace specht::io {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const CycElement& c);
CycElement cyc_from_json(const json& j);

json to_json(const SparsePoly& p);
SparsePoly poly_from_json(const json& j, unsigned order);

json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j, unsigned r);

json to_json(const GroupAlgebraElement& a);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const MultiDiagram& d);
MultiDiagram diagram_from_json(const json& j);

json to_json(const RTableau& t);
RTableau tableau_from_json(const json& j, const MultiDiagram& shape);

json to_json(const IndexTableau& t);

json to_json(const SpechtRecord& rec);

json to_json(const MultiplicityRow& row);

json to_json(const IsotypyReport& report, const std::vector<MultiDiagram>& diagrams);

}  // namespace specht::io
