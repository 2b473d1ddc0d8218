#include "iealg/cli.hpp"

#include "iealg/lemmas.hpp"
#include "iealg/report.hpp"
#include "iealg/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>

namespace iealg::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::string eta_path;
  std::size_t N = 0, D = 0, T = 1;
  std::optional<std::size_t> max_size;
  // enumerate
  std::size_t n = 0;
  // bracket / act
  std::string x, y, v;
  // verify
  std::string target;
  std::string p = "1", t, t0, v0 = "root", s0, u, s = "{||}", s_prime = "{||}";
};

EtaMap eta_or_zero(const Options& o) { return o.eta_path.empty() ? EtaMap::zero() : load_eta(o.eta_path); }

Report report_for(std::string op) {
  Report r;
  r.op = std::move(op);
  return r;
}

void emit(std::ostream& out, const Report& r) { out << render(r) << '\n'; }

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const auto trees = enumerate_trees(o.n);
  if (o.json) {
    Report r = report_for("enumerate");
    r.inputs["n"] = o.n;
    r.result = Json::array();
    for (const auto& t : trees) r.result.push_back(t.encoding());
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    for (const auto& t : trees) out << t.encoding() << '\n';
  }
  return exit_ok;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const AlgebraElement x = parse_element(o.x), y = parse_element(o.y);
  const AlgebraElement b = bracket(x, y);
  if (o.json) {
    Report r = report_for("bracket");
    r.inputs = {{"x", format_element(x)}, {"y", format_element(y)}};
    r.result = format_element(b);
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    out << format_element(b) << '\n';
  }
  return exit_ok;
}

int cmd_act(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const AlgebraElement x = parse_element(o.x);
  const ModuleElement v = parse_module_element(o.v);
  const EtaMap eta = eta_or_zero(o);
  const ModuleElement w = act(x, v, eta);
  if (o.json) {
    Report r = report_for("act");
    r.inputs = {{"x", format_element(x)}, {"v", format_module_element(v)}, {"eta", format_eta(eta)}};
    r.result = format_module_element(w);
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    out << format_module_element(w) << '\n';
  }
  return exit_ok;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const EtaMap eta = load_eta(o.eta_path);
  const KernelResult k = whittaker_kernel(eta, o.N, o.D, o.T, o.threads);
  if (o.json) {
    Report r = report_for("kernel");
    r.inputs = {{"eta", format_eta(eta)}};
    r.result = {{"operators", k.operators}, {"rows", k.rows}};
    r.kernel = k;
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    out << "kernel dimension " << k.dimension << " (N=" << k.N << ", D=" << k.D << ", T=" << k.T
        << ")\n";
    for (const auto& v : k.basis_vectors) out << format_module_element(v) << '\n';
  }
  return exit_ok;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const EtaMap eta = load_eta(o.eta_path);
  const EtaProfile p = profile(eta);
  if (o.json) {
    Report r = report_for("profile-eta");
    r.inputs = {{"eta", format_eta(eta)}};
    r.result = to_json(p);
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    auto opt = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("none");
    };
    out << "zero: " << (p.is_zero ? "yes" : "no") << '\n'
        << "finite support: " << (p.has_finite_support ? "yes" : "no") << '\n'
        << "depth-bounded at: " << opt(p.depth_bounded_at) << '\n'
        << "root-bounded at: " << opt(p.root_bounded_at) << '\n'
        << "R_eta: " << opt(p.r_eta) << '\n'
        << "B_eta: " << opt(p.b_eta) << '\n';
  }
  return exit_ok;
}

int cmd_verify_lemma(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const EtaMap eta = eta_or_zero(o);
  const PolynomialQ p = parse_polynomial(o.p);
  auto need = [](const std::string& value, const char* flag) {
    if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    return value;
  };
  Report r = report_for("verify");
  r.inputs = {{"lemma", o.target}, {"p", format_polynomial(p)}, {"eta", format_eta(eta)}};
  LemmaReport rep;
  if (o.target == "shift") {
    const Tree t = parse_tree(need(o.t, "--t"));
    r.inputs["t"] = t.encoding();
    rep = verify_lemma_shift(p, t, eta);
  } else if (o.target == "depth-collapse") {
    const Tree t0 = parse_tree(need(o.t0, "--t0"));
    const VertexAddress v0 = parse_vertex_address(o.v0);
    const Forest s0 = parse_forest(need(o.s0, "--s0"));
    r.inputs["t0"] = t0.encoding();
    r.inputs["v0"] = format_vertex_address(v0);
    r.inputs["s0"] = s0.encoding();
    rep = verify_lemma_depth_collapse(t0, v0, s0, p, eta);
  } else if (o.target == "root-vanish") {
    const Tree u = parse_tree(need(o.u, "--u"));
    const Forest s = parse_forest(o.s);
    r.inputs["u"] = u.encoding();
    r.inputs["s"] = s.encoding();
    rep = verify_lemma_root_vanish(u, s, p, eta);
  } else {
    const Tree t = parse_tree(need(o.t, "--t"));
    const Forest s = parse_forest(o.s), sp = parse_forest(o.s_prime);
    r.inputs["t"] = t.encoding();
    r.inputs["s"] = s.encoding();
    r.inputs["s_prime"] = sp.encoding();
    rep = verify_lemma_part_replacement(t, s, sp, p, eta);
  }
  if (o.json) {
    r.result = to_json(rep);
    r.elapsed_ms = millis_since(start);
    emit(out, r);
  } else {
    if (!rep.preconditions_met) {
      out << rep.lemma << ": precondition violated: " << rep.precondition_failure << '\n';
    } else {
      out << rep.lemma << ": " << (rep.holds ? "holds" : "FAILS") << '\n';
      out << "lhs: " << format_module_element(rep.lhs) << '\n';
      out << "rhs: " << format_module_element(rep.rhs) << '\n';
      if (!rep.case_label.empty()) out << "case: " << rep.case_label << '\n';
      if (rep.xi) out << "xi: " << format_rational(*rep.xi) << '\n';
      if (rep.literal_difference_form_holds)
        out << "difference form: " << (*rep.literal_difference_form_holds ? "holds" : "fails")
            << '\n';
    }
  }
  if (!rep.preconditions_met) return exit_input_error;
  return rep.holds ? exit_ok : exit_check_failed;
}

bool is_lemma(const std::string& name) {
  return name == "shift" || name == "depth-collapse" || name == "root-vanish" ||
         name == "part-replacement";
}

}  // namespace

int run_suite(const std::string& name, const SuiteOptions& options, bool json, std::ostream& out) {
  const auto start = Clock::now();
  const auto ids = suite_criteria(name);
  std::size_t passed = 0;
  Json checks = Json::array();
  for (int id : ids) {
    const CheckResult r = run_criterion(id, options);
    if (r.passed) ++passed;
    if (json)
      checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else
      out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << '\n';
  }
  if (json) {
    Report rep = report_for("verify");
    rep.inputs = {{"suite", name}};
    rep.result = {{"checks", checks}, {"passed", passed}, {"total", ids.size()}};
    rep.elapsed_ms = millis_since(start);
    out << render(rep) << '\n';
  } else {
    out << passed << "/" << ids.size() << " checks passed\n";
  }
  return passed == ids.size() ? exit_ok : exit_check_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in the insertion-elimination Lie algebra", "iealg"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--threads", o.threads, "Worker threads for matrix construction")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List rooted trees with n vertices");
  enumerate->add_option("n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("x", o.x, "Algebra element")->required();
  bracket_cmd->add_option("y", o.y, "Algebra element")->required();

  auto* act_cmd = app.add_subcommand("act", "Act on a Whittaker module vector");
  act_cmd->add_option("x", o.x, "Algebra element")->required();
  act_cmd->add_option("v", o.v, "Module vector")->required();
  act_cmd->add_option("--eta", o.eta_path, "eta file (default: zero map)");

  auto* kernel = app.add_subcommand("kernel", "Truncated Whittaker-vector space");
  kernel->add_option("--eta", o.eta_path, "eta file")->required();
  kernel->add_option("--N", o.N, "Forest order bound")->required();
  kernel->add_option("--D", o.D, "Polynomial degree bound")->required();
  kernel->add_option("--T", o.T, "Operator tree size bound")->required()->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a suite or check a lemma instance");
  verify->add_option("target", o.target,
                     "jacobi | paper-examples | lemmas | kernels | all | shift | depth-collapse | "
                     "root-vanish | part-replacement")
      ->required();
  verify->add_option("--max-size", o.max_size, "Tree size bound for the jacobi suite");
  verify->add_option("--eta", o.eta_path, "eta file");
  verify->add_option("--p", o.p, "Polynomial in d");
  verify->add_option("--t", o.t, "Tree t");
  verify->add_option("--t0", o.t0, "Tree t0");
  verify->add_option("--v0", o.v0, "Vertex address, e.g. root or 0.1");
  verify->add_option("--s0", o.s0, "Forest s0");
  verify->add_option("--u", o.u, "Tree u");
  verify->add_option("--s", o.s, "Forest s");
  verify->add_option("--s-prime", o.s_prime, "Forest s'");

  auto* profile_cmd = app.add_subcommand("profile-eta", "Classification data of an eta map");
  profile_cmd->add_option("--eta", o.eta_path, "eta file")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json, "Emit a JSON report");
    sub->add_option("--threads", o.threads, "Worker threads for matrix construction")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (bracket_cmd->parsed()) return cmd_bracket(o, out);
    if (act_cmd->parsed()) return cmd_act(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (profile_cmd->parsed()) return cmd_profile(o, out);
    if (is_lemma(o.target)) return cmd_verify_lemma(o, out);
    SuiteOptions so;
    so.threads = o.threads;
    if (o.max_size) {
      so.jacobi_max_size = *o.max_size;
      so.antisymmetry_max_size = *o.max_size;
    }
    return run_suite(o.target, so, o.json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
}

}  // namespace iealg::cli
