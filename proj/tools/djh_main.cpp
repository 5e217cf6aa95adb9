// Command-line front end: build and validate groups, list irreps, emit
// Fourier matrices, classify functions, run the one-query promise circuit,
// and perform the cyclotomic analyses. Machine-readable JSON goes to stdout
// (or --output); human summaries go to stderr.
//
// Exit codes: 0 success, 1 parse/usage, 2 invalid group, 3 classifier
// cross-check disagreement, 4 promise violated, 5 unsupported modulus/group.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "djh/circuit.hpp"
#include "djh/errors.hpp"
#include "djh/json_io.hpp"

namespace {

using djh::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw djh::parse_error("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw djh::parse_error("JSON parse failure in " + path + ": " + e.what());
  }
}

void emit(const json& doc, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw djh::parse_error("cannot write file: " + output_path);
    out << doc.dump(2) << "\n";
  }
}

djh::IrrepSet load_irreps(const djh::GroupPtr& group, const std::string& source, double tol) {
  if (source == "builtin") return djh::builtin_irreps(group);
  return djh::irreps_from_json(group, read_json_file(source), tol);
}

struct Options {
  std::string group_path;
  std::string function_path;
  std::string source = "builtin";
  std::string output;
  std::string poly_text;
  std::string poly_file;
  double tol = 1e-9;
  double verdict_tol = 1e-6;
  int k = 0, i = 1, j = 1;
  int h0_from_beta = -1;
  int n = 0;
  int kgen = -1;
  bool dump_state = false;
  std::optional<uint64_t> seed;
  bool verbose = false;
};

int cmd_group(const Options& opt) {
  const auto g = djh::group_from_json(read_json_file(opt.group_path));
  emit(djh::group_report(g), opt.output);
  std::cerr << "valid, order " << g->order() << ", "
            << (g->is_abelian() ? "abelian" : "non-abelian") << "\n";
  return 0;
}

int cmd_irreps(const Options& opt) {
  const auto g = djh::group_from_json(read_json_file(opt.group_path));
  const auto s = load_irreps(g, opt.source, opt.tol);
  auto doc = djh::irreps_to_json(s);
  const auto schur = djh::verify_schur(s, opt.tol);
  doc["schur_max_deviation"] = schur.max_deviation;
  emit(doc, opt.output);
  std::cerr << s.count() << " irreps, schur deviation " << schur.max_deviation << "\n";
  return 0;
}

int cmd_qft(const Options& opt) {
  const auto g = djh::group_from_json(read_json_file(opt.group_path));
  const auto s = load_irreps(g, opt.source, opt.tol);
  const auto f = djh::fourier_matrix(s);
  auto doc = djh::fourier_to_json(f);
  const auto unitarity = djh::verify_unitary(f, opt.tol);
  doc["unitarity_max_deviation"] = unitarity.max_deviation;
  emit(doc, opt.output);
  std::cerr << "qft " << g->order() << "x" << g->order() << ", unitarity deviation "
            << unitarity.max_deviation << "\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  const auto f = djh::function_from_json(read_json_file(opt.function_path));
  const auto s = load_irreps(f.codomain, opt.source, opt.tol);
  const bool abelian = f.codomain->kind() == djh::FiniteGroup::Kind::Cyclic ||
                       f.codomain->kind() == djh::FiniteGroup::Kind::CyclicProduct;

  json entries = json::array();
  for (int k = 2; k <= s.count(); ++k) {
    for (int i = 1; i <= s.dim(k); ++i) {
      // cross-checks definitional vs group-ring internally
      const auto cls = djh::classify_via_group_ring(f, s, k, i, opt.tol);
      json entry = djh::classification_to_json(cls);
      entry["methods_agree"] = true;
      if (abelian) {
        // third, exact route through the cyclotomic criterion
        const int m = k - 1;  // character index = element index under beta
        const auto fm = djh::abelian_reduce(f, m, f.codomain->cyclic_factors());
        const bool const_exact =
            std::all_of(fm.image.begin(), fm.image.end(),
                        [&](int v) { return v == fm.image[0]; });
        const bool bal_exact = djh::is_one_balanced_exact(djh::profile_polynomial(fm));
        const djh::Verdict exact =
            const_exact ? djh::Verdict::Constant
                        : (bal_exact ? djh::Verdict::Balanced : djh::Verdict::Neither);
        entry["character"] = m;
        entry["exact_verdict"] = djh::to_string(exact);
        if (exact != cls.verdict)
          throw djh::consistency_error(
              "classification cross-check: cyclotomic route disagrees at k=" +
              std::to_string(k));
      }
      entries.push_back(std::move(entry));
    }
  }
  json doc;
  doc["schema_version"] = 1;
  doc["function"] = djh::function_to_json(f);
  doc["entries"] = std::move(entries);
  doc["all_methods_agree"] = true;
  emit(doc, opt.output);
  std::cerr << "classified over " << (s.count() - 1) << " non-trivial irreps\n";
  return 0;
}

int cmd_simulate(const Options& opt) {
  const auto f = djh::function_from_json(read_json_file(opt.function_path));
  const auto s = load_irreps(f.codomain, opt.source, opt.tol);
  int k = opt.k, i = opt.i, j = opt.j;
  if (opt.h0_from_beta >= 0) {
    if (opt.h0_from_beta >= f.codomain->order())
      throw djh::domain_error("simulate: --h0-from-beta element out of range");
    const auto t = s.beta(opt.h0_from_beta);
    i = t.i;
    j = t.j;
    k = t.k;
  }
  if (k == 0) throw djh::parse_error("simulate: provide --k (with --i/--j) or --h0-from-beta");
  const auto report =
      djh::run_djh(f, s, k, i, j, opt.verdict_tol, opt.dump_state, opt.seed);
  emit(djh::circuit_report_to_json(report), opt.output);
  std::cerr << "verdict " << djh::to_string(report.verdict) << ", Pr[1_X] = "
            << report.probability_identity << "\n";
  return report.verdict == djh::CircuitVerdict::PromiseViolated ? 4 : 0;
}

int cmd_cyclo_phi(const Options& opt) {
  json doc;
  doc["schema_version"] = 1;
  doc["n"] = opt.n;
  doc["coefficients"] = djh::poly_to_json(djh::cyclotomic_poly(opt.n));
  emit(doc, opt.output);
  return 0;
}

int cmd_cyclo_decompose(const Options& opt) {
  djh::IntPolynomial g;
  if (!opt.poly_file.empty())
    g = djh::poly_from_json(read_json_file(opt.poly_file));
  else if (!opt.poly_text.empty())
    g = djh::poly_from_json(json::parse(opt.poly_text));
  else
    throw djh::parse_error("cyclo decompose: provide --poly or --poly-file");
  const auto dec = djh::dephi_decompose(g, opt.n);
  emit(djh::dephi_to_json(dec), opt.output);
  std::cerr << "decomposed with p=" << dec.p;
  if (dec.q != 0) std::cerr << ", q=" << dec.q;
  std::cerr << "\n";
  return 0;
}

int cmd_cyclo_cover(const Options& opt) {
  const auto f = djh::function_from_json(read_json_file(opt.function_path));
  if (opt.kgen >= 0) {
    json doc;
    doc["schema_version"] = 1;
    doc["kgen"] = opt.kgen;
    doc["cosets"] = djh::coset_cover_to_json(djh::even_cover_check(f, opt.kgen));
    emit(doc, opt.output);
    return 0;
  }
  const auto dec = djh::even_cover_decompose(f);
  emit(djh::even_cover_to_json(dec), opt.output);
  std::cerr << (dec.balanced ? "balanced: partition found" : "not 1-balanced") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group promise-problem toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* group_cmd = app.add_subcommand("group", "validate a group spec");
  group_cmd->add_option("--spec", opt.group_path, "group spec JSON file")->required();
  group_cmd->add_option("--output", opt.output, "write the JSON report here");

  auto* irreps_cmd = app.add_subcommand("irreps", "emit a validated irrep set");
  irreps_cmd->add_option("--group", opt.group_path)->required();
  irreps_cmd->add_option("--source", opt.source, "builtin or an irrep JSON file");
  irreps_cmd->add_option("--tol", opt.tol);
  irreps_cmd->add_option("--output", opt.output);

  auto* qft_cmd = app.add_subcommand("qft", "emit the Fourier matrix");
  qft_cmd->add_option("--group", opt.group_path)->required();
  qft_cmd->add_option("--source", opt.source);
  qft_cmd->add_option("--tol", opt.tol);
  qft_cmd->add_option("--output", opt.output);

  auto* classify_cmd = app.add_subcommand("classify", "classify a function at every (k,i)");
  classify_cmd->add_option("--function", opt.function_path)->required();
  classify_cmd->add_option("--source", opt.source);
  classify_cmd->add_option("--tol", opt.tol);
  classify_cmd->add_option("--output", opt.output);

  auto* sim_cmd = app.add_subcommand("simulate", "run the one-query promise circuit");
  sim_cmd->add_option("--function", opt.function_path)->required();
  sim_cmd->add_option("--source", opt.source);
  sim_cmd->add_option("--k", opt.k, "irrep index (1-based; 1 is trivial)");
  sim_cmd->add_option("--i", opt.i, "row index");
  sim_cmd->add_option("--j", opt.j, "column index");
  sim_cmd->add_option("--h0-from-beta", opt.h0_from_beta,
                      "derive (i,j,k) from this codomain element instead of --k/--i/--j");
  sim_cmd->add_option("--verdict-tol", opt.verdict_tol);
  sim_cmd->add_option("--tol", opt.tol);
  sim_cmd->add_flag("--dump-state", opt.dump_state, "include the final state vector");
  uint64_t seed_value = 0;
  auto* seed_opt = sim_cmd->add_option("--seed", seed_value, "sample one measurement");
  sim_cmd->add_option("--output", opt.output);

  auto* cyclo_cmd = app.add_subcommand("cyclo", "cyclotomic analyses");
  cyclo_cmd->require_subcommand(1);
  auto* phi_cmd = cyclo_cmd->add_subcommand("phi", "coefficients of Phi_n");
  phi_cmd->add_option("n", opt.n, "modulus")->required();
  phi_cmd->add_option("--output", opt.output);
  auto* dec_cmd = cyclo_cmd->add_subcommand("decompose",
                                            "non-negative two-prime decomposition of g");
  dec_cmd->add_option("--n", opt.n)->required();
  dec_cmd->add_option("--poly", opt.poly_text, "inline JSON coefficient array");
  dec_cmd->add_option("--poly-file", opt.poly_file);
  dec_cmd->add_option("--output", opt.output);
  auto* cover_cmd = cyclo_cmd->add_subcommand("cover", "even-cover report / partition");
  cover_cmd->add_option("--function", opt.function_path)->required();
  cover_cmd->add_option("--kgen", opt.kgen, "check cosets of <kgen> only");
  cover_cmd->add_option("--output", opt.output);

  app.add_flag("-v,--verbose", opt.verbose);

  try {
    app.parse(argc, argv);
    if (seed_opt->count() > 0) opt.seed = seed_value;

    if (group_cmd->parsed()) return cmd_group(opt);
    if (irreps_cmd->parsed()) return cmd_irreps(opt);
    if (qft_cmd->parsed()) return cmd_qft(opt);
    if (classify_cmd->parsed()) return cmd_classify(opt);
    if (sim_cmd->parsed()) return cmd_simulate(opt);
    if (cyclo_cmd->parsed()) {
      if (phi_cmd->parsed()) return cmd_cyclo_phi(opt);
      if (dec_cmd->parsed()) return cmd_cyclo_decompose(opt);
      if (cover_cmd->parsed()) return cmd_cyclo_cover(opt);
    }
    throw djh::parse_error("no subcommand given");
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const djh::group_error& e) {
    std::cerr << "invalid group: " << e.what() << "\n";
    emit(json{{"schema_version", 1}, {"valid", false}, {"error", e.what()}}, opt.output);
    return 2;
  } catch (const djh::consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const djh::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 5;
  } catch (const djh::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
