#pragma once

#include <json.hpp>

#include "djh/circuit.hpp"
#include "djh/cyclotomic.hpp"
#include "djh/promise.hpp"
#include "djh/qft.hpp"
#include "djh/representation.hpp"

namespace djh {

using json = nlohmann::json;

// Group spec documents:
//   {"kind":"cyclic","n":8}
//   {"kind":"product","factors":[2,3]}
//   {"kind":"dihedral","n":3}
//   {"kind":"symmetric","m":4}
//   {"kind":"alternating4"}
//   {"kind":"table","order":4,"mul":[[...]],"labels":[...]}
GroupPtr group_from_json(const json& doc);
json group_report(const GroupPtr& g);

// {"codomain": <group spec>, "domain_size": n, "image": [indices or labels]}
PromiseFunction function_from_json(const json& doc);
json function_to_json(const PromiseFunction& f);

// {"irreps":[{"dim":d,"matrices":[element][row][col] = [re,im]}], "beta":[[i,j,k],...]}
// beta is optional; when absent the default convention applies. The loaded
// set is fully re-validated.
IrrepSet irreps_from_json(const GroupPtr& g, const json& doc, double tol = 1e-9);
json irreps_to_json(const IrrepSet& s);

json fourier_to_json(const FourierMatrix& f);

json classification_to_json(const Classification& c);
json circuit_report_to_json(const CircuitReport& r);

json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& doc);

json dephi_to_json(const DephiDecomposition& d);
json even_cover_to_json(const EvenCoverDecomposition& d);
json coset_cover_to_json(const std::vector<CosetCover>& covers);

}  // namespace djh
