#include "cli.hpp"

#include "json_io.hpp"
#include "lorcal/basis16.hpp"
#include "lorcal/emfield.hpp"
#include "lorcal/error.hpp"
#include "lorcal/expmap.hpp"
#include "lorcal/identities.hpp"
#include "lorcal/linalg.hpp"
#include "lorcal/oracle.hpp"
#include "lorcal/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace lorcal::cli {

namespace {

using io::InputError;
using io::json;
using io::to_json;

const char* class_name(OpClass c) {
  switch (c) {
    case OpClass::Zero: return "zero";
    case OpClass::Null: return "null";
    case OpClass::Generic: return "generic";
  }
  return "unknown";
}

const char* route_name(DexpRoute r) {
  switch (r) {
    case DexpRoute::Helgason: return "helgason";
    case DexpRoute::ClosedForm: return "closed-form";
    case DexpRoute::FiniteDifference: return "finite-difference";
  }
  return "unknown";
}

std::string unit_name(GaussInt u) {
  if (u.im == 0) return u.re == 1 ? "1" : "-1";
  return u.im == 1 ? "i" : "-i";
}

// Runs body, reattributing library errors to the input field they came from.
template <typename F>
auto attributed(const std::string& field, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw InputError(field, e.what());
  }
}

SkewOp read_skew(const std::string& text, const std::string& field) {
  return io::parse_skew(io::parse_text(text, field), field);
}

Exec exec_for(bool serial) { return serial ? Exec::Serial : Exec::Parallel; }

json suite_json(const std::vector<SuiteEntry>& entries, bool& all_pass) {
  json out = json::object();
  all_pass = true;
  for (const SuiteEntry& e : entries) {
    all_pass = all_pass && e.pass();
    out[e.name] = {{"max_residual", std::isfinite(e.result.max_residual) ? json(e.result.max_residual) : json("inf")},
                   {"samples", e.result.samples},
                   {"failures", e.result.failures},
                   {"tol", e.tol},
                   {"worst_sample", e.result.worst_index},
                   {"pass", e.pass()}};
  }
  return out;
}

// --- commands ---------------------------------------------------------------

int cmd_exp(const std::string& op_text, bool with_oracle, std::ostream& out, std::ostream& err) {
  const auto op = io::parse_operator(io::parse_text(op_text, "op"), "op");
  json j;
  if (const auto* x = std::get_if<ChiralOp>(&op)) {
    const Mat4C m = exp_chiral(*x);
    j = {{"op", to_json(*x)}, {"matrix", to_json(m)}};
    if (with_oracle) {
      const Mat4C ref = oracle::series_exp(x->matrix());
      j["oracle"] = {{"matrix", to_json(ref)}, {"max_abs_diff", max_abs(Mat4C(m - ref))}};
    }
  } else {
    const SkewOp f = std::get<SkewOp>(op);
    const Mat4 m = exp_real(f);
    j = {{"op", to_json(f)}, {"matrix", to_json(m)}};
    if (classify(f) != OpClass::Zero) {
      const SingularityReport rep = singularity(f);
      if (rep.is_singular) {
        j["warning"] = {{"kind", "singular_point"}, {"n", rep.n}, {"lambda", to_json(rep.lambda)}};
        err << "warning: exp is singular here (lambda_cF = 2 pi n i with n = " << rep.n << ")\n";
      }
    }
    if (with_oracle) {
      const Mat4 ref = oracle::series_exp(f.matrix());
      j["oracle"] = {{"matrix", to_json(ref)}, {"max_abs_diff", max_abs(Mat4(m - ref))}};
    }
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_log(const std::string& text, std::ostream& out) {
  const Mat4 l = io::parse_mat4(io::parse_text(text, "matrix"), "matrix");
  const SkewOp f = attributed("matrix", [&] { return log_lorentz(l); });
  out << to_json(f).dump(2) << "\n";
  return 0;
}

int cmd_dexp(const std::string& op_text, const std::string& dir_text, const std::string& route, bool with_oracle,
             std::ostream& out) {
  const SkewOp f = read_skew(op_text, "op");
  const SkewOp g = read_skew(dir_text, "dir");
  std::vector<DexpRoute> routes;
  if (route == "all") routes = {DexpRoute::Helgason, DexpRoute::ClosedForm, DexpRoute::FiniteDifference};
  else if (route == "helgason") routes = {DexpRoute::Helgason};
  else if (route == "closed-form") routes = {DexpRoute::ClosedForm};
  else if (route == "finite-difference") routes = {DexpRoute::FiniteDifference};
  else throw InputError("route", "expected helgason, closed-form, finite-difference or all");

  json j = {{"op", to_json(f)}, {"dir", to_json(g)}, {"routes", json::object()}};
  std::vector<Mat4> values;
  for (DexpRoute r : routes) {
    values.push_back(dexp(f, g, r).value);
    j["routes"][route_name(r)] = to_json(values.back());
  }
  if (values.size() == 3) {
    j["agreement"] = {{"helgason_vs_closed_form", max_abs(Mat4(values[0] - values[1]))},
                      {"helgason_vs_finite_difference", max_abs(Mat4(values[0] - values[2]))}};
  }
  if (with_oracle) {
    const Mat4 ref = oracle::fd_derivative(f, g);
    j["oracle"] = {{"matrix", to_json(ref)}, {"max_abs_diff", max_abs(Mat4(values[0] - ref))}};
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_singularity(const std::string& op_text, std::ostream& out) {
  const SkewOp f = read_skew(op_text, "op");
  const SingularityReport rep = attributed("op", [&] { return singularity(f); });
  json kernel = json::array();
  for (const SkewOp& g : rep.kernel_basis) kernel.push_back(to_json(g));
  json complement = json::array();
  for (const SkewOp& g : rep.complement_basis) complement.push_back(to_json(g));
  const json j = {{"op", to_json(f)},          {"is_singular", rep.is_singular},
                  {"n", rep.n},                {"lambda", to_json(rep.lambda)},
                  {"kernel_basis", kernel},    {"complement_basis", complement},
                  {"derivative_rank", rep.derivative_rank}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_compose(const std::string& text, std::ostream& out) {
  const json arr = io::parse_text(text, "ops");
  if (!arr.is_array() || arr.empty()) throw InputError("ops", "expected a non-empty array of operators");
  std::vector<SkewOp> fs;
  for (std::size_t i = 0; i < arr.size(); ++i) fs.push_back(io::parse_skew(arr[i], "ops[" + std::to_string(i) + "]"));
  const Eigen::MatrixXd jac = compose_jacobian(fs);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  json sv = json::array();
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) sv.push_back(svd.singularValues()(i));
  const json j = {{"matrix", to_json(compose_map(fs))},
                  {"jacobian_rank", compose_jacobian_rank(fs)},
                  {"singular_values", sv}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& op_text, std::ostream& out) {
  const auto op = io::parse_operator(io::parse_text(op_text, "op"), "op");
  json j;
  if (const auto* x = std::get_if<ChiralOp>(&op)) {
    const Eigenvalue e = lambda(*x);
    j = {{"op", to_json(*x)}, {"class", class_name(classify(*x))}, {"lambda", to_json(e.value)},
         {"lambda_sq", to_json(e.squared)}};
  } else {
    const SkewOp f = std::get<SkewOp>(op);
    const Eigenvalue e = lambda(c_map(f));
    const OpClass cls = classify(f);
    j = {{"op", to_json(f)}, {"class", class_name(cls)}, {"lambda", to_json(e.value)}, {"lambda_sq", to_json(e.squared)}};
    json dirs = json::array();
    if (cls != OpClass::Zero) {
      for (const NullDirection& d : null_eigenvectors(f))
        dirs.push_back({{"s", to_json(d.s)}, {"chiral_eigenvalue", to_json(d.chiral_eigenvalue)}});
    }
    j["null_eigenvectors"] = dirs;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_basis_table(std::ostream& out) {
  const auto basis = basis16();
  json labels = json::array();
  json mats = json::array();
  for (const BasisElement& b : basis) {
    labels.push_back(b.label.to_string());
    const Mat4C m = b.matrix();
    mats.push_back({{"label", b.label.to_string()}, {"re", to_json(Mat4(m.real()))}, {"im", to_json(Mat4(m.imag()))}});
  }
  json table = json::array();
  for (const auto& row : multiplication_table()) {
    json r = json::array();
    for (const auto& e : row) {
      if (e) r.push_back({{"unit", unit_name(e->unit)}, {"index", e->index}, {"label", labels[e->index]}});
      else r.push_back(nullptr);
    }
    table.push_back(r);
  }
  const MultTableReport rep = verify_mult_table();
  const auto norm = clifford_normalisation();
  const json j = {{"labels", labels},
                  {"matrices", mats},
                  {"table", table},
                  {"relations", {{"ok", rep.ok()}, {"failures", rep.failures}}},
                  {"clifford_normalisation", norm ? json(*norm) : json(nullptr)}};
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_verify_identities(std::int64_t seeds, std::uint64_t seed, bool serial, std::ostream& out) {
  if (seeds <= 0) throw InputError("seeds", "must be positive");
  const double scale = tolerance_scale();
  bool pass = false;
  const json ids = suite_json(run_identity_suite(seeds, seed, exec_for(serial), scale), pass);
  const TNormalisationReport t = t_normalisation_report(std::min<std::int64_t>(seeds, 200), seed);
  const json j = {{"seed", seed},
                  {"tolerance_scale", scale},
                  {"identities", ids},
                  {"t_normalisation",
                   {{"closed_form_factor", t.closed_form_factor},
                    {"null_square_factor", t.null_square_factor},
                    {"half_real_residual", t.half_real_residual},
                    {"half_imag_residual", t.half_imag_residual},
                    {"quarter_real_residual", t.quarter_real_residual},
                    {"quarter_imag_residual", t.quarter_imag_residual},
                    {"half_null_square", t.half_null_square},
                    {"quarter_null_square", t.quarter_null_square},
                    {"samples", t.samples}}},
                  {"pass", pass}};
  out << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_all(std::int64_t seeds, std::uint64_t seed, bool serial, std::ostream& out) {
  if (seeds <= 0) throw InputError("seeds", "must be positive");
  const double scale = tolerance_scale();
  bool pass = false;
  const json checks = suite_json(run_verify_all(seeds, seed, exec_for(serial), scale), pass);
  const json j = {{"seed", seed}, {"tolerance_scale", scale}, {"checks", checks}, {"pass", pass}};
  out << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

struct EmFieldArgs {
  double q = 1.0;
  double r = 1.0;
  std::string w = "0,0,1";
  std::string a = "0,0,0";
  std::string grid;
  int directions = 26;
  bool json_out = false;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("grid", "entry '" + item + "' is not a positive number");
    }
  }
  if (out.empty()) throw InputError("grid", "expected a comma-separated list of radii");
  return out;
}

int cmd_em_field(const EmFieldArgs& args, bool serial, std::ostream& out) {
  const Vec3 a = io::parse_vec3_csv(args.a, "a");
  if (!std::isfinite(args.q)) throw InputError("q", "must be finite");

  if (!args.grid.empty()) {
    if (args.directions <= 0) throw InputError("directions", "must be positive");
    const std::vector<double> radii = parse_grid(args.grid);
    const auto rows = sample_cone(args.q, a, radii, sphere_directions(args.directions), exec_for(serial));
    if (args.json_out) {
      json arr = json::array();
      for (const ConeSample& s : rows)
        arr.push_back({{"r", s.r}, {"w", to_json(s.w)}, {"E", to_json(s.E)}, {"B", to_json(s.B)},
                       {"lambda_sq", to_json(s.lambda_sq)}, {"class", class_name(s.cls)}});
      out << arr.dump(2) << "\n";
      return 0;
    }
    out << "r,wx,wy,wz,Ex,Ey,Ez,Bx,By,Bz,lambda_sq_re,lambda_sq_im,class\n";
    out << std::setprecision(17);
    for (const ConeSample& s : rows) {
      out << s.r << ',' << s.w(0) << ',' << s.w(1) << ',' << s.w(2) << ',' << s.E(0) << ',' << s.E(1) << ','
          << s.E(2) << ',' << s.B(0) << ',' << s.B(1) << ',' << s.B(2) << ',' << s.lambda_sq.real() << ','
          << s.lambda_sq.imag() << ',' << class_name(s.cls) << '\n';
    }
    return 0;
  }

  ChargeState st;
  st.q = args.q;
  st.r = args.r;
  st.w = io::parse_vec3_csv(args.w, "w");
  st.a = a;
  if (!(st.r > 0.0) || !std::isfinite(st.r)) throw InputError("r", "must be positive");
  if (std::abs(st.w.norm() - 1.0) > 1e-9) throw InputError("w", "must be a unit vector");
  const FieldDecomposition d = attributed("w", [&] { return field_at(st); });
  const FieldConjugationCheck c = check_field_conjugation(st);
  const json j = {{"q", st.q},
                  {"r", st.r},
                  {"w", to_json(st.w)},
                  {"a", to_json(st.a)},
                  {"a_perp", to_json(d.a_perp)},
                  {"F_a", to_json(d.F_a)},
                  {"E_coul", to_json(d.E_coul)},
                  {"N_a", to_json(d.N_a)},
                  {"shared_eigenvector", to_json(d.shared_eigenvector)},
                  {"shared_eigenvalue", to_json(c.shared_eigenvalue)},
                  {"lambda_sq", to_json(c.lambda_sq)},
                  {"class", class_name(classify(d.F_a))},
                  {"conjugation_residual", c.conjugation.residual},
                  {"chiral_half_step_residual", c.chiral_half_step.residual}};
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew operators on Minkowski space: exponentials, singularities, identities"};
  app.name("lorcal");
  app.require_subcommand(1);

  std::string op_text, dir_text, matrix_text, ops_text, route = "all";
  bool with_oracle = false, serial = false, json_flag = false;
  std::int64_t seeds = 500;
  std::uint64_t seed = 0;
  EmFieldArgs em;

  auto* exp = app.add_subcommand("exp", "e^F for a SkewOp or e^X for a ChiralOp");
  exp->add_option("--op", op_text, "operator JSON")->required();
  exp->add_flag("--oracle", with_oracle, "also report the series-exponential reference");

  auto* log = app.add_subcommand("log", "principal logarithm of a proper orthochronous Lorentz matrix");
  log->add_option("--matrix", matrix_text, "4x4 array, or the output of exp")->required();

  auto* dexp_cmd = app.add_subcommand("dexp", "directional derivative d/dt e^{F+tG}");
  dexp_cmd->add_option("--op", op_text, "F as SkewOp JSON")->required();
  dexp_cmd->add_option("--dir", dir_text, "G as SkewOp JSON")->required();
  dexp_cmd->add_option("--route", route, "helgason | closed-form | finite-difference | all");
  dexp_cmd->add_flag("--oracle", with_oracle, "also report the series finite-difference reference");

  auto* sing = app.add_subcommand("singularity", "singularity report of exp at F");
  sing->add_option("--op", op_text, "SkewOp JSON")->required();

  auto* compose = app.add_subcommand("compose", "product of exponentials and its Jacobian rank");
  compose->add_option("--ops", ops_text, "JSON array of SkewOps")->required();

  auto* cls = app.add_subcommand("classify", "zero / null / generic, lambda, null eigenvectors");
  cls->add_option("--op", op_text, "operator JSON")->required();

  auto* basis = app.add_subcommand("basis-table", "16-element basis and its multiplication table");

  auto* vid = app.add_subcommand("verify-identities", "seeded sweep over every operator identity");
  vid->add_option("--seeds", seeds, "samples per identity");
  vid->add_option("--seed", seed, "base seed");
  vid->add_flag("--json", json_flag, "JSON output (always on)");
  vid->add_flag("--serial", serial, "use the serial reference loop");

  auto* em_cmd = app.add_subcommand("em-field", "field of an accelerated point charge");
  em_cmd->add_option("--q", em.q, "charge")->required();
  em_cmd->add_option("--r", em.r, "retarded distance");
  em_cmd->add_option("--w", em.w, "unit direction x,y,z");
  em_cmd->add_option("--a", em.a, "acceleration x,y,z");
  em_cmd->add_option("--grid", em.grid, "comma-separated radii; emits a cone sweep");
  em_cmd->add_option("--directions", em.directions, "directions per radius in a sweep");
  em_cmd->add_flag("--json", em.json_out, "sweep as JSON instead of CSV");
  em_cmd->add_flag("--serial", serial, "use the serial reference loop");

  auto* vall = app.add_subcommand("verify-all", "identity suite plus every library check");
  vall->add_option("--seeds", seeds, "samples per check");
  vall->add_option("--seed", seed, "base seed");
  vall->add_flag("--json", json_flag, "JSON output (always on)");
  vall->add_flag("--serial", serial, "use the serial reference loop");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (exp->parsed()) return cmd_exp(op_text, with_oracle, out, err);
    if (log->parsed()) return cmd_log(matrix_text, out);
    if (dexp_cmd->parsed()) return cmd_dexp(op_text, dir_text, route, with_oracle, out);
    if (sing->parsed()) return cmd_singularity(op_text, out);
    if (compose->parsed()) return cmd_compose(ops_text, out);
    if (cls->parsed()) return cmd_classify(op_text, out);
    if (basis->parsed()) return cmd_basis_table(out);
    if (vid->parsed()) return cmd_verify_identities(seeds, seed, serial, out);
    if (em_cmd->parsed()) return cmd_em_field(em, serial, out);
    if (vall->parsed()) return cmd_verify_all(seeds, seed, serial, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lorcal::cli
