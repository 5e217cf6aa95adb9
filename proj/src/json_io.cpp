#include "djh/json_io.hpp"

#include "djh/errors.hpp"

namespace djh {

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw parse_error("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(cplx_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array");
  const int rows = int(j.size());
  const int cols = int(j[0].size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (int(j[r].size()) != cols) throw parse_error("matrix rows have unequal lengths");
    for (int c = 0; c < cols; ++c) m.at(r, c) = cplx_from_json(j[r][c]);
  }
  return m;
}

std::string kind_name(FiniteGroup::Kind k) {
  switch (k) {
    case FiniteGroup::Kind::Cyclic: return "cyclic";
    case FiniteGroup::Kind::CyclicProduct: return "product";
    case FiniteGroup::Kind::Dihedral: return "dihedral";
    case FiniteGroup::Kind::Symmetric: return "symmetric";
    case FiniteGroup::Kind::Alternating4: return "alternating4";
    case FiniteGroup::Kind::Table: return "table";
  }
  return "?";
}

json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());  // decimal string for coefficients beyond int range
}

mpz_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(long(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw parse_error("polynomial coefficients must be integers or decimal strings");
}

}  // namespace

GroupPtr group_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw parse_error("group spec must be an object with a \"kind\" field");
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "cyclic") return build_cyclic(doc.at("n").get<int>());
  if (kind == "dihedral") return build_dihedral(doc.at("n").get<int>());
  if (kind == "symmetric") return build_symmetric(doc.at("m").get<int>());
  if (kind == "alternating4") return build_alternating4();
  if (kind == "product") {
    const auto factors = doc.at("factors").get<std::vector<int>>();
    if (factors.empty()) throw parse_error("product group needs at least one factor");
    GroupPtr g = build_cyclic(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
      g = build_direct_product(g, build_cyclic(factors[i]));
    return g;
  }
  if (kind == "table") {
    const auto mul = doc.at("mul").get<std::vector<std::vector<int>>>();
    if (doc.contains("order") && doc.at("order").get<int>() != int(mul.size()))
      throw parse_error("table group: declared order does not match the table");
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return build_from_table(mul, std::move(labels));
  }
  throw parse_error("unknown group kind \"" + kind + "\"");
}

json group_report(const GroupPtr& g) {
  json out;
  out["schema_version"] = 1;
  out["valid"] = true;
  out["order"] = g->order();
  out["abelian"] = g->is_abelian();
  out["identity"] = g->identity();
  out["kind"] = kind_name(g->kind());
  out["labels"] = g->labels();
  return out;
}

PromiseFunction function_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("function spec must be an object");
  PromiseFunction f;
  f.codomain = group_from_json(doc.at("codomain"));
  f.domain_size = doc.at("domain_size").get<int>();
  for (const auto& entry : doc.at("image")) {
    if (entry.is_number_integer()) {
      f.image.push_back(entry.get<int>());
    } else if (entry.is_string()) {
      const int idx = f.codomain->element_by_label(entry.get<std::string>());
      if (idx < 0)
        throw parse_error("function spec: unknown element label \"" +
                          entry.get<std::string>() + "\"");
      f.image.push_back(idx);
    } else {
      throw parse_error("function spec: image entries must be indices or labels");
    }
  }
  f.validate();
  return f;
}

json function_to_json(const PromiseFunction& f) {
  json out;
  out["domain_size"] = f.domain_size;
  out["image"] = f.image;
  json labels = json::array();
  for (int v : f.image) labels.push_back(f.codomain->label(v));
  out["image_labels"] = std::move(labels);
  out["codomain_order"] = f.codomain->order();
  return out;
}

IrrepSet irreps_from_json(const GroupPtr& g, const json& doc, double tol) {
  if (!doc.is_object() || !doc.contains("irreps"))
    throw parse_error("irrep file must be an object with an \"irreps\" array");
  std::vector<Representation> irreps;
  for (const auto& entry : doc.at("irreps")) {
    Representation rho;
    rho.group = g;
    rho.dim = entry.at("dim").get<int>();
    for (const auto& mat : entry.at("matrices")) rho.matrices.push_back(matrix_from_json(mat));
    if (int(rho.matrices.size()) != g->order())
      throw parse_error("irrep file: one matrix per group element required");
    irreps.push_back(std::move(rho));
  }
  if (!doc.contains("beta")) return IrrepSet::create(g, std::move(irreps), tol);

  std::vector<BetaTriple> beta;
  for (const auto& t : doc.at("beta")) {
    if (!t.is_array() || t.size() != 3) throw parse_error("beta entries must be [i,j,k]");
    beta.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  if (int(beta.size()) != g->order())
    throw parse_error("irrep file: beta table length must equal the group order");
  return IrrepSet::create_with_beta(g, std::move(irreps), std::move(beta), tol);
}

json irreps_to_json(const IrrepSet& s) {
  json out;
  out["schema_version"] = 1;
  json irreps = json::array();
  for (const auto& rho : s.irreps()) {
    json entry;
    entry["dim"] = rho.dim;
    json mats = json::array();
    for (const auto& m : rho.matrices) mats.push_back(matrix_to_json(m));
    entry["matrices"] = std::move(mats);
    irreps.push_back(std::move(entry));
  }
  out["irreps"] = std::move(irreps);
  json beta = json::array();
  for (int g = 0; g < s.group()->order(); ++g) {
    const auto t = s.beta(g);
    beta.push_back(json::array({t.i, t.j, t.k}));
  }
  out["beta"] = std::move(beta);
  return out;
}

json fourier_to_json(const FourierMatrix& f) {
  json out;
  out["schema_version"] = 1;
  out["order"] = f.group->order();
  out["matrix"] = matrix_to_json(f.entries);
  return out;
}

json classification_to_json(const Classification& c) {
  json out;
  out["k"] = c.k;
  out["i"] = c.i;
  out["verdict"] = to_string(c.verdict);
  out["degenerate"] = c.degenerate;
  if (!c.constant_row.empty()) {
    json row = json::array();
    for (const auto& z : c.constant_row) row.push_back(cplx_to_json(z));
    out["constant_row"] = std::move(row);
  }
  if (!c.row_sums.empty()) {
    json sums = json::array();
    for (const auto& z : c.row_sums) sums.push_back(cplx_to_json(z));
    out["row_sums"] = std::move(sums);
  }
  return out;
}

json circuit_report_to_json(const CircuitReport& r) {
  json out;
  out["schema_version"] = 1;
  out["function"] = r.function_id;
  out["k"] = r.k;
  out["i"] = r.i;
  out["j"] = r.j;
  out["h0"] = r.h0;
  out["probability_identity"] = r.probability_identity;
  out["verdict"] = to_string(r.verdict);
  out["verdict_tol"] = r.verdict_tol;
  json block = json::array();
  for (const auto& z : r.identity_block) block.push_back(cplx_to_json(z));
  out["identity_block"] = std::move(block);
  if (!r.final_state.empty()) {
    json st = json::array();
    for (const auto& z : r.final_state) st.push_back(cplx_to_json(z));
    out["final_state"] = std::move(st);
  }
  if (r.sampled_outcome) {
    out["sample"] = {{"x", r.sampled_outcome->first}, {"h", r.sampled_outcome->second}};
  }
  return out;
}

json poly_to_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return coeffs;
}

IntPolynomial poly_from_json(const json& doc) {
  if (!doc.is_array()) throw parse_error("polynomial must be a coefficient array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : doc) coeffs.push_back(coeff_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

json dephi_to_json(const DephiDecomposition& d) {
  json out;
  out["schema_version"] = 1;
  out["n"] = d.n;
  out["p"] = d.p;
  if (d.q != 0) out["q"] = d.q;
  out["s1"] = poly_to_json(d.s1);
  if (d.q != 0) out["s2"] = poly_to_json(d.s2);
  return out;
}

json even_cover_to_json(const EvenCoverDecomposition& d) {
  json out;
  out["schema_version"] = 1;
  out["n"] = d.n;
  out["balanced"] = d.balanced;
  out["p"] = d.p;
  if (d.q != 0) out["q"] = d.q;
  if (d.balanced) {
    out["xp"] = d.xp;
    out["p_multiplicities"] = d.p_multiplicities;
    if (d.q != 0) {
      out["xq"] = d.xq;
      out["q_multiplicities"] = d.q_multiplicities;
    }
  }
  return out;
}

json coset_cover_to_json(const std::vector<CosetCover>& covers) {
  json out = json::array();
  for (const auto& c : covers) {
    json entry;
    entry["coset"] = c.coset;
    if (c.multiplicity) entry["multiplicity"] = *c.multiplicity;
    else entry["even"] = false;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace djh
