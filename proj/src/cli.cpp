#include "fintriple/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fintriple/json_io.hpp"
#include "fintriple/ktheory.hpp"
#include "fintriple/random.hpp"

namespace fintriple {

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  bool text = false;
};

struct LoadedTriple {
  TripleSpace space;
  std::vector<CMatrix> fixture_params;
  std::optional<FiniteGroup> fixture_group;
  std::string digest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::UnknownFixture, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::SizeMismatch, "malformed JSON in " + what);
  return j;
}

LoadedTriple load_triple(const std::string& ref) {
  LoadedTriple loaded;
  if (ref.rfind("catalog:", 0) == 0) {
    const Fixture f = fixture(ref.substr(8));
    loaded.space = f.build_space();
    loaded.fixture_params = f.dirac_params;
    loaded.fixture_group = f.group;
    loaded.digest = input_digest(fixture_to_json(f).dump());
    return loaded;
  }
  const std::string text = read_file(ref);
  loaded.space = triple_from_json(parse_json(text, ref));
  loaded.digest = input_digest(text);
  return loaded;
}

FiniteGroup load_group(const std::string& ref) {
  if (ref == "s3") return s3();
  return group_from_json(parse_json(read_file(ref), ref));
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

CMatrix resolve_dirac(const LoadedTriple& loaded, const std::string& spec,
                      std::uint64_t seed) {
  if (spec.empty()) {
    if (!loaded.fixture_params.empty())
      return assemble(loaded.space, loaded.fixture_params).matrix;
    return random_dirac(loaded.space, seed).matrix;
  }
  if (spec == "default") {
    if (loaded.fixture_params.empty())
      throw Error(ErrorCode::UnknownFixture, "input carries no default Dirac parameters");
    return assemble(loaded.space, loaded.fixture_params).matrix;
  }
  if (all_digits(spec))
    return random_dirac(loaded.space, std::stoull(spec)).matrix;
  const Json j = parse_json(read_file(spec), spec);
  return assemble(loaded.space, dirac_params_from_json(j)).matrix;
}

void print_text(std::ostream& out, const Json& report, int indent = 0) {
  const std::string pad(indent, ' ');
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it->is_object()) {
      out << pad << it.key() << ":\n";
      print_text(out, *it, indent + 2);
    } else {
      out << pad << it.key() << ": " << it->dump() << "\n";
    }
  }
}

int emit(std::ostream& out, const Options& opt, const std::string& command,
         const std::string& digest, Json results, bool pass) {
  Json report;
  report["command"] = command;
  report["input"] = digest;
  report["tol"] = opt.tol;
  report["results"] = std::move(results);
  report["pass"] = pass;
  if (opt.text) {
    print_text(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

Json axiom_report_json(const AxiomReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return checks;
}

int cmd_check(const Options& opt, const std::string& ref, std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  const AxiomReport report = loaded.space.validate_axioms(opt.tol);
  Json results;
  results["dim"] = loaded.space.dim();
  results["axioms"] = axiom_report_json(report);
  return emit(out, opt, "check", loaded.digest, results, report.all_pass());
}

Json orbit_json(const SlotOrbit& orbit) {
  Json slots = Json::array();
  for (const auto& s : orbit.slots)
    slots.push_back({{"target", {s.ti, s.tj}}, {"source", {s.si, s.sj}}});
  return Json{{"target", {orbit.rep.ti, orbit.rep.tj}},
              {"source", {orbit.rep.si, orbit.rep.sj}},
              {"kind", orbit.rep.kind == SlotKind::LeftEquivariant ? "left" : "right"},
              {"t_rows", orbit.rep.t_rows},
              {"t_cols", orbit.rep.t_cols},
              {"real_params", orbit.real_params},
              {"slots", slots}};
}

int cmd_dirac_shape(const Options& opt, const std::string& ref, std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  Json results;
  results["orbits"] = Json::array();
  for (const auto& orbit : allowed_blocks(loaded.space))
    results["orbits"].push_back(orbit_json(orbit));
  results["dof_count"] = dof_count(loaded.space);
  return emit(out, opt, "dirac shape", loaded.digest, results, true);
}

int cmd_dirac_sample(const Options& opt, const std::string& ref, std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  const DiracOperator d = random_dirac(loaded.space, opt.seed);
  const DiracReport report = validate_dirac(loaded.space, d.matrix, opt.tol);
  Json results;
  results["seed"] = opt.seed;
  results["matrix"] = to_json(d.matrix);
  results["validation"] = {
      {"selfadjoint_residual", report.selfadjoint_residual},
      {"j_commutation_residual", report.j_commutation_residual},
      {"gamma_anticommutation_residual", report.gamma_anticommutation_residual},
      {"first_order_residual", report.first_order_residual},
      {"pass", report.pass}};
  return emit(out, opt, "dirac sample", loaded.digest, results, report.pass);
}

int cmd_forms(const Options& opt, const std::string& ref,
              const std::string& dirac_spec, const std::string& weight_path,
              std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  const CMatrix d = resolve_dirac(loaded, dirac_spec, opt.seed);
  std::optional<CMatrix> weight;
  if (!weight_path.empty()) {
    const Json j = parse_json(read_file(weight_path), weight_path);
    if (j.contains("central_weights")) {
      const auto w = j.at("central_weights").get<std::vector<double>>();
      const auto& alg = loaded.space.algebra();
      if (static_cast<int>(w.size()) != alg.num_summands())
        throw Error(ErrorCode::InvalidWeight, "one weight per summand required");
      CMatrix z = CMatrix::Zero(loaded.space.dim(), loaded.space.dim());
      for (int i = 0; i < alg.num_summands(); ++i)
        z += w[i] * loaded.space.rep_left(central_projection(alg, i));
      weight = z;
    } else {
      weight = cmatrix_from_json(j.at("matrix"));
    }
  }

  const OperatorSpace omega1 = one_forms(loaded.space, d);
  const TwoFormRanks ranks = two_forms(loaded.space, d);
  const InnerCheck inner = inner_check(loaded.space, d, opt.tol);
  const int center = center_one_forms(loaded.space, d);

  Json results;
  results["omega1_rank"] = omega1.rank();
  results["omega2u_rank"] = ranks.universal_rank;
  results["junk_rank"] = ranks.junk_rank;
  results["omega2_dim"] = ranks.omega2_dim;
  results["is_inner"] = inner.is_inner;
  results["inner_gray_zone"] = inner.gray_zone;
  results["center_dim"] = center;
  if (inner.is_inner)
    results["flat_residual"] = curvature_flat_residual(loaded.space, d, opt.tol);
  else
    results["flat_residual"] = nullptr;
  if (weight) {
    // Trace-weight consistency probe: the generic and weighted norms of the
    // canonical one-form.
    const XiData data = xi(loaded.space, d);
    results["xi_norm_generic"] = to_json((data.pi_xi * data.pi_xi.adjoint()).trace());
    results["xi_norm_weighted"] = to_json((*weight * data.pi_xi * data.pi_xi.adjoint()).trace());
  }
  const bool pass = ranks.junk_inside_residual <= opt.tol &&
                    (inner.criteria_agree || inner.gray_zone);
  return emit(out, opt, "forms", loaded.digest, results, pass);
}

int cmd_kform(const Options& opt, const std::string& ref, bool no_doubling,
              std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  const CMatrix d = resolve_dirac(loaded, "", opt.seed);
  const IntersectionForm form = index_pairing(loaded.space, d, !no_doubling);
  const PoincareCheck poincare = poincare_check(form.matrix);
  Json results;
  results["matrix"] = to_json(form.matrix);
  results["determinant"] = poincare.determinant;
  results["nondegenerate"] = poincare.nondegenerate;
  results["quaternionic_summands"] = form.quaternionic;
  return emit(out, opt, "kform", loaded.digest, results, true);
}

int cmd_hopf_bicov(const Options& opt, const std::string& ref,
                   const std::string& group_ref, std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  // The fixture's point order is authoritative unless a group was named.
  const FiniteGroup group = group_ref.empty()
                                ? (loaded.fixture_group
                                       ? *loaded.fixture_group
                                       : throw Error(ErrorCode::SizeMismatch,
                                                     "no group given and none "
                                                     "bound to the input"))
                                : load_group(group_ref);
  const CMatrix d = resolve_dirac(loaded, "", opt.seed);
  const BicovarianceReport report =
      fn_algebra_bicovariance(loaded.space, d, group, opt.tol);
  Json per = Json::array();
  for (const auto& chi : report.per_element)
    per.push_back({{"g", chi.g},
                   {"name", chi.name},
                   {"chi_nonzero", chi.chi_nonzero},
                   {"rows_hit", chi.rows_hit},
                   {"uniform", chi.uniform}});
  Json results;
  results["per_element"] = per;
  results["bicovariant"] = report.bicovariant;
  results["class_closed"] = report.class_closed;
  return emit(out, opt, "hopf bicov", loaded.digest, results, report.bicovariant);
}

int cmd_hopf_haar(const Options& opt, const std::string& ref,
                  const std::string& group_ref, std::ostream& out) {
  const LoadedTriple loaded = load_triple(ref);
  if (group_ref != "s3")
    throw Error(ErrorCode::UnknownFixture,
                "haar weights are catalog-backed; only --group s3 is available");
  auto [spec, iso] = wedderburn_iso_s3();
  if (loaded.space.algebra() != spec)
    throw Error(ErrorCode::AlgebraMismatch,
                "the triple's algebra must be M_2(C) (+) C (+) C");
  const HaarWeight weight =
      haar_weight_operator(loaded.space, s3(), iso, opt.tol);
  Json results;
  results["weights"] = weight.weights;
  results["trace_residual"] = weight.trace_residual;
  return emit(out, opt, "hopf haar", loaded.digest, results,
              weight.trace_residual <= opt.tol);
}

int cmd_catalog_list(const Options& opt, std::ostream& out) {
  Json results;
  results["fixtures"] = catalog_names();
  return emit(out, opt, "catalog list", input_digest(""), results, true);
}

int cmd_catalog_dump(const Options& opt, const std::string& name,
                     std::ostream& out) {
  const Fixture f = fixture(name);
  return emit(out, opt, "catalog dump", input_digest(name), fixture_to_json(f),
              true);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite real spectral triples: axioms, Dirac operators, "
               "differential calculus, intersection forms and Hopf symmetry"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", opt.text, "plain-text output");

  std::string triple_ref, group_ref, haar_group_ref = "s3", dirac_spec,
                                     weight_path, dump_name;
  bool no_doubling = false;

  auto* check = app.add_subcommand("check", "build a triple and verify all axioms");
  check->add_option("triple", triple_ref, "triple JSON file or catalog:<name>")->required();

  auto* dirac = app.add_subcommand("dirac", "admissible Dirac operators");
  dirac->require_subcommand(1);
  auto* shape = dirac->add_subcommand("shape", "slot orbits and parameter count");
  shape->add_option("triple", triple_ref)->required();
  auto* sample = dirac->add_subcommand("sample", "draw and validate a generic operator");
  sample->add_option("triple", triple_ref)->required();

  auto* forms_cmd = app.add_subcommand("forms", "differential calculus report");
  forms_cmd->add_option("triple", triple_ref)->required();
  forms_cmd->add_option("--dirac", dirac_spec,
                        "Dirac parameters: seed number, params JSON file, or 'default'");
  forms_cmd->add_option("--weight", weight_path, "weight operator JSON");

  auto* kform = app.add_subcommand("kform", "intersection form and duality");
  kform->add_option("triple", triple_ref)->required();
  kform->add_flag("--no-doubling", no_doubling,
                  "compress quaternionic generators to rank one");

  auto* hopf = app.add_subcommand("hopf", "Hopf symmetry checks");
  hopf->require_subcommand(1);
  auto* bicov = hopf->add_subcommand("bicov", "bicovariance of a function-algebra calculus");
  bicov->add_option("triple", triple_ref)->required();
  bicov->add_option("--group", group_ref,
                    "group JSON file or 's3'; defaults to the fixture binding");
  auto* haar = hopf->add_subcommand("haar", "Haar weight operator");
  haar->add_option("triple", triple_ref)->required();
  haar->add_option("--group", haar_group_ref, "only 's3' is catalog-backed");

  auto* catalog = app.add_subcommand("catalog", "shipped fixtures");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "fixture names");
  auto* dump = catalog->add_subcommand("dump", "fixture as triple JSON");
  dump->add_option("name", dump_name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt, triple_ref, out);
    if (shape->parsed()) return cmd_dirac_shape(opt, triple_ref, out);
    if (sample->parsed()) return cmd_dirac_sample(opt, triple_ref, out);
    if (forms_cmd->parsed())
      return cmd_forms(opt, triple_ref, dirac_spec, weight_path, out);
    if (kform->parsed()) return cmd_kform(opt, triple_ref, no_doubling, out);
    if (bicov->parsed()) return cmd_hopf_bicov(opt, triple_ref, group_ref, out);
    if (haar->parsed()) return cmd_hopf_haar(opt, triple_ref, haar_group_ref, out);
    if (catalog->get_subcommand("list")->parsed()) return cmd_catalog_list(opt, out);
    if (dump->parsed()) return cmd_catalog_dump(opt, dump_name, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace fintriple
