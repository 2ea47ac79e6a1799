/* Copyright 2026 The symkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "symkit/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "symkit/catalog/catalog.hpp"
#include "symkit/expr/eval.hpp"
#include "symkit/expr/parse.hpp"
#include "symkit/invariance/algebra.hpp"
#include "symkit/invariance/determining.hpp"
#include "symkit/simulator/simulator.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit::cli {

namespace {

namespace fs = std::filesystem;

// A path named on the command line (or the catalog) does not exist.
struct FileMissing : Error {
  explicit FileMissing(const std::string& path)
      : Error("file not found: " + path) {}
};

// Bad arguments that only show up after parsing.
struct Usage : Error {
  explicit Usage(const std::string& m) : Error(m) {}
};

struct Options {
  bool all = false;
  bool generic = false;
  int table = 0;
  int case_id = 0;
  std::vector<std::string> binds;
  unsigned seed = 0;
  int points = 20;
  double tol = 1e-10;
  std::string output;
  std::string format = "text";

  std::string op;
  std::string field;
  std::string golden;
  std::string family;
  std::string file;
  std::string system;
  std::string branch = "upper";
  std::string generator = "X1";
  std::string p = "p";
  std::string lambda1 = "lambda1";
  std::string lambda2 = "lambda2";
  std::string compare;
  std::string profile = "lambda1*cos(x) + lambda2*sin(x)";
  std::string x0 = "0";
  std::string x1 = "pi";
  std::string config;
  std::string init;
  std::string bc = "zero-neumann";
  std::string kernel = "auto";
  std::string stencil = "central";
  std::vector<int> ns{64, 128, 256};
  int n = 64;
  double cfl = 0.2;
  double t_end = 0.2;
  int stride = 0;
  double expect_order = 2.0;
  double order_tol = 0.2;
  std::vector<std::string> positional;
};

std::string need_file(const std::string& path) {
  if (!fs::exists(path)) throw FileMissing(path);
  return path;
}

Catalog load_catalog() { return Catalog::load(need_file(Catalog::default_path())); }

std::string golden_default() {
  return std::string(SYMKIT_DATA_DIR) + "/determining_golden.txt";
}

SubstMap bindings(const Options& o) {
  std::map<std::string, std::string> kv;
  for (const auto& b : o.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw Usage("--bind expects k=v, got '" + b + "'");
    kv[trim(b.substr(0, eq))] = trim(b.substr(eq + 1));
  }
  return parse_bindings(kv);
}

NumericBindings numeric(const SubstMap& m) {
  NumericBindings out;
  for (const auto& [s, e] : m) {
    if (e.is_constant() || !e.any_symbol([](Symbol) { return true; }) ||
        e.symbols().empty()) {
      out[s] = eval_numeric(e, {});
    } else {
      bool only_pi = true;
      for (Symbol y : e.symbols()) {
        if (y != sym::pi()) only_pi = false;
      }
      if (only_pi) out[s] = eval_numeric(e, {});
    }
  }
  return out;
}

void need_case(const Options& o) {
  if (o.table == 0 || o.case_id == 0) throw Usage("--table and --case are required");
}

std::string resolve_family_id(const std::string& id) {
  auto ids = builtin_family_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return id;
  for (const auto& full : ids) {
    if (full.size() > id.size() + 1 &&
        full.compare(full.size() - id.size(), id.size(), id) == 0 &&
        full[full.size() - id.size() - 1] == '-') {
      return full;
    }
  }
  throw Usage("unknown solution family '" + id + "'");
}

Branch parse_branch(const std::string& s) {
  if (s == "upper") return Branch::kUpper;
  if (s == "lower") return Branch::kLower;
  throw Usage("--branch must be upper or lower");
}

// Family from --family or --file, with --bind applied.
SolutionFamily load_family(const Options& o, const SubstMap& b) {
  SolutionFamily f;
  if (!o.file.empty()) {
    f = read_solution_file(need_file(o.file));
  } else if (!o.family.empty()) {
    f = builtin_family(resolve_family_id(o.family), parse_branch(o.branch));
  } else {
    throw Usage("--family or --file is required");
  }
  return b.empty() ? f : f.substituted(b);
}

// "3-1", "3-2", "1-4" or a catalog id "T2.3".
SKTSystem resolve_system(const std::string& id, const SubstMap& b) {
  if (id.size() > 1 && id[0] == 'T') {
    auto dot = id.find('.');
    if (dot == std::string::npos) throw Usage("catalog id must look like T2.3");
    int t = std::stoi(id.substr(1, dot - 1));
    int c = std::stoi(id.substr(dot + 1));
    return instantiate(load_catalog(), t, c, b).system;
  }
  try {
    return builtin_system(id).substituted(b);
  } catch (const NotFound&) {
    throw Usage("unknown system '" + id + "'");
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// --- subcommands ---------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  Catalog cat = load_catalog();
  if (!o.all && o.table != 0) {
    cat = cat.filtered([&](const CatalogEntry& e) {
      return e.table == o.table && (o.case_id == 0 || e.case_id == o.case_id);
    });
    if (cat.entries().empty()) throw Usage("no catalog entry matches");
  }
  ValidationReport r = validate_all(cat);
  out << (o.format == "csv" ? r.csv() : r.text());
  return r.pass() ? kPass : kFail;
}

int cmd_determining(const Options& o, std::ostream& out) {
  SKTSystem sys = SKTSystem::generic();
  if (!o.generic) {
    need_case(o);
    sys = instantiate(load_catalog(), o.table, o.case_id, bindings(o)).system;
  }
  DeterminingSystem ds = generate_determining(sys);
  out << "xi conditions:\n";
  for (const auto& e : ds.xi_conditions) out << "  " << e.str() << " = 0\n";
  out << "equations:\n";
  for (std::size_t i = 0; i < ds.equations.size(); ++i) {
    out << "  [" << i + 1 << "] " << ds.equations[i].str() << " = 0\n";
  }
  out << "count: " << ds.count() << "\n";
  out << "assumptions:";
  for (const auto& a : ds.assumptions) out << " " << a.str();
  out << "\n";
  if (o.generic || !o.golden.empty()) {
    std::string path = need_file(o.golden.empty() ? golden_default() : o.golden);
    GoldenReport g = compare_golden(ds, read_golden(path));
    out << "golden comparison:\n" << g.str();
    out << "golden: " << (g.clean() ? "clean" : "DISCREPANCIES") << "\n";
    return g.clean() ? kPass : kFail;
  }
  return kPass;
}

VectorField parse_field(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw Usage("--field expects 'xi0; xi1; eta1; eta2'");
  return {parse(parts[0]), parse(parts[1]), parse(parts[2]), parse(parts[3]),
          "field"};
}

int cmd_check(const Options& o, std::ostream& out) {
  need_case(o);
  Catalog cat = load_catalog();
  SubstMap b = bindings(o);
  Instance inst = instantiate(cat, o.table, o.case_id, b);
  std::vector<std::vector<VectorField>> groups;
  if (!o.field.empty()) {
    groups.push_back({parse_field(o.field)});
  } else if (!o.op.empty()) {
    if (!cat.has_operator(o.op)) throw Usage("unknown operator '" + o.op + "'");
    std::vector<VectorField> enc;
    for (const auto& c : cat.candidates(o.op)) {
      VectorField X = c;
      X.xi0 = substitute(X.xi0, b);
      X.xi1 = substitute(X.xi1, b);
      X.eta1 = substitute(X.eta1, b);
      X.eta2 = substitute(X.eta2, b);
      enc.push_back(X);
    }
    groups.push_back(enc);
  } else {
    for (const auto& X : inst.operators) groups.push_back({X});
  }
  out << "system T" << o.table << "." << o.case_id << ":\n" << inst.system.str() << "\n";
  bool all = true;
  for (const auto& enc : groups) {
    bool ok = false;
    std::size_t used = 0;
    Verdict last;
    for (std::size_t k = 0; k < enc.size() && !ok; ++k) {
      last = check_invariance(inst.system, enc[k]);
      ok = last.invariant;
      used = k;
    }
    std::string name = enc[0].name.empty() ? "field" : enc[0].name;
    out << name << ": " << (ok ? "invariant" : "NOT invariant");
    if (enc.size() > 1) out << " (encoding " << used + 1 << ")";
    out << "\n";
    for (const auto& w : last.witnesses) {
      out << "  S" << w.equation + 1 << " [" << render(w.monomial)
          << "]: " << w.coefficient.str() << "\n";
    }
    all = all && ok;
  }
  return all ? kPass : kFail;
}

int cmd_commutators(const Options& o, std::ostream& out) {
  need_case(o);
  Instance inst = instantiate(load_catalog(), o.table, o.case_id, bindings(o));
  ClosureReport r = closure_check(inst.operators);
  out << r.str(inst.operators);
  return r.closes ? kPass : kFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SubstMap b = bindings(o);
  SolutionFamily f = load_family(o, b);
  std::string sys_id = o.system.empty() ? f.system_id : o.system;
  SKTSystem sys = resolve_system(sys_id, b);
  f.system_id = sys_id;
  for (const auto& [s, v] : numeric(b)) f.sample.params[s] = v;
  auto [r1, r2] = residual(sys, f);
  bool sym_zero = r1.is_zero() && r2.is_zero();
  NumericOptions opt;
  opt.points = o.points;
  opt.tol = o.tol;
  opt.seed = o.seed;
  NumericCheck c = numeric_residual(sys, f, opt);
  if (o.format == "csv") {
    out << csv_header() << "\n" << csv_row(f, c) << "\n";
  } else {
    out << "family " << f.id << " on system " << sys_id << "\n";
    out << "u = " << f.u.str() << "\nv = " << f.v.str() << "\n";
    out << "symbolic residual: " << (sym_zero ? "0" : "nonzero") << "\n";
    if (!sym_zero) {
      out << "  S1 = " << r1.str() << "\n  S2 = " << r2.str() << "\n";
    }
    out << "numeric residual: max " << fmt("%.3e", c.max_residual) << " over "
        << c.points << " points (" << c.skipped << " skipped), tol "
        << fmt("%g", opt.tol) << ": " << (c.pass ? "pass" : "fail") << "\n";
  }
  return sym_zero && c.pass ? kPass : kFail;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  SubstMap b = bindings(o);
  SolutionFamily f = load_family(o, b);
  for (const auto& [s, v] : numeric(b)) f.sample.params[s] = v;
  Generator g;
  if (o.generator == "X1") {
    g = Generator::kX1;
  } else if (o.generator == "X2") {
    g = Generator::kX2;
  } else {
    throw Usage("--generator must be X1 or X2");
  }
  OrbitBranch ob = OrbitBranch::kAuto;
  if (o.branch == "upper") ob = OrbitBranch::kUpper;
  if (o.branch == "lower") ob = OrbitBranch::kLower;
  SolutionFamily orb =
      group_orbit(f, substitute(parse(o.p), b), substitute(parse(o.lambda1), b),
                  substitute(parse(o.lambda2), b), g, ob);
  SKTSystem sys = resolve_system(o.system.empty() ? f.system_id : o.system, b);
  bool zero = residual_is_zero(sys, orb);
  out << "u* = " << orb.u.str() << "\nv* = " << orb.v.str() << "\n";
  out << "residual on " << (o.system.empty() ? f.system_id : o.system) << ": "
      << (zero ? "0" : "nonzero") << "\n";
  bool ok = zero;
  if (!o.compare.empty()) {
    SolutionFamily c = builtin_family(resolve_family_id(o.compare), Branch::kUpper);
    if (!b.empty()) c = c.substituted(b);
    bool same = orb.u.equals(c.u) && orb.v.equals(c.v);
    out << "equals " << c.id << ": " << (same ? "yes" : "no") << "\n";
    ok = ok && same;
  }
  return ok ? kPass : kFail;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  SubstMap b = bindings(o);
  SKTSystem sys = resolve_system(o.system.empty() ? "3-2" : o.system, b);
  Expr k = substitute(parse(o.profile), b);
  Expr c = k / parse("u - v");
  VectorField X{Expr(0), Expr(1), c, -c, "X"};
  ReductionAnsatz R = reduce_ansatz(sys, X, parse_branch(o.branch));
  out << "u = " << R.u.str() << "\nv = " << R.v.str() << "\n";
  out << "reduced system:\n";
  for (const auto& e : R.odes) out << "  " << e.str() << " = 0\n";
  out << "integrated form:\n  " << R.integrated.first.str() << " = 0\n  "
      << R.integrated.second.str() << " = 0\n";
  return kPass;
}

int cmd_flux(const Options& o, std::ostream& out) {
  SubstMap b = bindings(o);
  SolutionFamily f = load_family(o, b);
  FluxReport r = flux_check(f, parse(o.x0), parse(o.x1));
  for (const auto& [name, v] : r.values) out << name << " = " << v.str() << "\n";
  out << "flux check on (" << o.x0 << ", " << o.x1 << "): "
      << (r.pass ? "pass" : "fail") << "\n";
  return r.pass ? kPass : kFail;
}

sim::KernelChoice parse_kernel(const std::string& s) {
  if (s == "auto") return sim::KernelChoice::kAuto;
  if (s == "scalar") return sim::KernelChoice::kScalar;
  if (s == "avx2") return sim::KernelChoice::kAvx2;
  throw Usage("--kernel must be auto, scalar or avx2");
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  sim::SimulateConfig cfg;
  std::string system = o.system;
  std::vector<std::string> binds = o.binds;
  if (!o.config.empty()) {
    const IniSection* sec = nullptr;
    auto secs = read_ini_file(need_file(o.config));
    for (const auto& s : secs) {
      if (s.name == "simulate") sec = &s;
    }
    if (sec == nullptr) throw Usage(o.config + " has no [simulate] section");
    cfg = sim::read_simulate_config(*sec);
    if (system.empty()) system = sec->get("system");
    for (const auto& b : split_list(sec->get("bind"))) binds.push_back(b);
  } else {
    cfg.grid = sim::Grid1D(eval_numeric(parse(o.x0), {}),
                           eval_numeric(parse(o.x1), {}), o.n);
    cfg.bc = sim::BCSpec::parse_kind(o.bc);
    cfg.solver.cfl = o.cfl;
    cfg.solver.t_end = o.t_end;
    cfg.solver.stride = o.stride;
    cfg.init = o.init;
  }
  if (cfg.init.empty()) throw Usage("an initial condition (--init) is required");
  cfg.solver.kernel = parse_kernel(o.kernel);
  Options ob = o;
  ob.binds = binds;
  SubstMap b = bindings(ob);
  NumericBindings nb = numeric(b);

  std::optional<SolutionFamily> fam;
  sim::GridState init;
  auto semi = cfg.init.find(';');
  if (semi != std::string::npos) {
    if (system.empty()) throw Usage("--system is required for expression initial data");
    try {
      init = sim::sample_state(cfg.grid,
                               substitute(parse(cfg.init.substr(0, semi)), b),
                               substitute(parse(cfg.init.substr(semi + 1)), b), nb);
    } catch (const EvalError& e) {
      throw Usage(std::string("initial data: ") + e.what());
    }
  } else {
    fam = builtin_family(resolve_family_id(cfg.init));
    for (const auto& [s, v] : fam->sample.params) nb.emplace(s, v);
    init = sim::sample_state(cfg.grid, fam->u, fam->v, nb);
  }
  if (system.empty()) system = fam->system_id;
  sim::Coeffs c = sim::coefficients(resolve_system(system, b), nb);
  sim::BCSpec bc;
  bc.kind = cfg.bc;
  if (cfg.bc == sim::BCSpec::Kind::kExactDirichlet) {
    if (!fam) throw Usage("exact-dirichlet needs a solution family as init");
    bc = sim::BCSpec::dirichlet(*fam, nb);
  }
  sim::Trajectory tr = sim::run(c, cfg.grid, init, bc, cfg.solver);
  sim::write_csv(out, cfg.grid, tr);
  err << "steps " << tr.steps << ", kernel " << tr.kernel << "\n";
  if (tr.failed) {
    err << "solver failure at step " << tr.fail_step << ": " << tr.failure << "\n";
    return kFail;
  }
  return kPass;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  Options oo = o;
  if (oo.family.empty() && oo.file.empty()) oo.family = "family-3-7";
  SubstMap b = bindings(oo);
  bool default_setup = oo.family == "family-3-7" && oo.binds.empty();
  if (default_setup) {
    b = parse_bindings({{"alpha1", "1"}, {"alpha2", "1/2"}, {"p", "1/5"},
                        {"lambda1", "1"}, {"lambda2", "0"}});
  }
  SolutionFamily f = load_family(oo, b);
  NumericBindings nb = numeric(b);
  for (const auto& [s, v] : f.sample.params) nb.emplace(s, v);
  sim::SolverConfig cfg;
  cfg.cfl = oo.cfl;
  cfg.t_end = oo.t_end;
  cfg.kernel = parse_kernel(oo.kernel);
  if (oo.stencil == "one-sided") {
    cfg.stencil = sim::Stencil::kOneSided;
  } else if (oo.stencil != "central") {
    throw Usage("--stencil must be central or one-sided");
  }
  sim::Coeffs c = sim::coefficients(
      resolve_system(oo.system.empty() ? f.system_id : oo.system, b), nb);
  sim::ConvergenceReport r = sim::convergence_study(
      c, f, nb, eval_numeric(parse(oo.x0), {}), eval_numeric(parse(oo.x1), {}),
      oo.ns, sim::BCSpec::parse_kind(oo.bc), cfg);
  out << "family " << f.id << ", t_end " << fmt("%g", cfg.t_end) << ", bc "
      << oo.bc << ", stencil " << oo.stencil << "\n"
      << r.str();
  bool ok = r.ok();
  for (double ord : r.orders) {
    if (!(std::fabs(ord - oo.expect_order) <= oo.order_tol)) ok = false;
  }
  out << "expected order " << fmt("%g", oo.expect_order) << " +- "
      << fmt("%g", oo.order_tol) << ": " << (ok ? "pass" : "fail") << "\n";
  return ok ? kPass : kFail;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.positional.empty()) throw Usage("catalog needs 'list' or 'show ID'");
  Catalog cat = load_catalog();
  const std::string& what = o.positional[0];
  if (what == "list") {
    for (const auto& e : cat.entries()) {
      out << e.id() << ":";
      for (const auto& op : e.operators) out << " " << op;
      out << "\n";
    }
    return kPass;
  }
  if (what == "show") {
    if (o.positional.size() < 2) throw Usage("catalog show needs an id like T2.3");
    const std::string& id = o.positional[1];
    auto dot = id.find('.');
    if (id.empty() || id[0] != 'T' || dot == std::string::npos) {
      throw Usage("catalog id must look like T2.3");
    }
    const CatalogEntry& e =
        cat.find(std::stoi(id.substr(1, dot - 1)), std::stoi(id.substr(dot + 1)));
    out << e.id() << "\n" << e.system.str() << "\n";
    for (const auto& r : e.restrictions) out << "restriction: " << r.text << "\n";
    for (const auto& r : e.system.restrictions) out << "restriction: " << r << "\n";
    for (const auto& op : e.operators) {
      const auto& enc = cat.candidates(op);
      out << "operator " << op << ":\n" << enc[0].str();
    }
    for (const auto& s : e.substitutions) out << "substitution: " << s << "\n";
    return kPass;
  }
  throw Usage("catalog needs 'list' or 'show ID'");
}

void add_common(CLI::App* s, Options& o) {
  s->add_option("--table", o.table, "table number");
  s->add_option("--case", o.case_id, "case number");
  s->add_option("--bind", o.binds, "parameter binding k=v (repeatable)");
  s->add_option("--seed", o.seed, "sampling seed");
  s->add_option("--points", o.points, "numeric sample points");
  s->add_option("--tol", o.tol, "numeric tolerance");
  s->add_option("--output", o.output, "write the report to a file");
  s->add_option("--format", o.format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
}

}  // namespace

RunReport execute(const std::vector<std::string>& argv) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  for (const auto& a : argv) rep.command += (rep.command.empty() ? "" : " ") + a;
  Options o;
  CLI::App app{"Symmetry analysis and verification for SKT cross-diffusion systems",
               "symkit"};
  app.require_subcommand(1);
  auto* validate = app.add_subcommand("validate", "check every catalog entry");
  validate->add_flag("--all", o.all, "all entries");
  auto* determining = app.add_subcommand("determining", "determining equations");
  determining->add_flag("--generic", o.generic, "fully generic system");
  determining->add_option("--golden", o.golden, "golden equation file");
  auto* check = app.add_subcommand("check", "invariance of one system");
  check->add_option("--operator", o.op, "registered operator name");
  check->add_option("--field", o.field, "'xi0; xi1; eta1; eta2'");
  auto* comm = app.add_subcommand("commutators", "closure of an algebra");
  auto* verify = app.add_subcommand("verify-solution", "solution residuals");
  auto* orbit = app.add_subcommand("orbit", "group orbit of a solution");
  orbit->add_option("--generator", o.generator, "X1 or X2");
  orbit->add_option("--p", o.p, "group parameter");
  orbit->add_option("--lambda1", o.lambda1, "lambda1");
  orbit->add_option("--lambda2", o.lambda2, "lambda2");
  orbit->add_option("--compare", o.compare, "family to compare with");
  auto* reduce = app.add_subcommand("reduce", "symmetry reduction");
  reduce->add_option("--profile", o.profile, "K(x) of the operator");
  auto* flux = app.add_subcommand("flux-check", "zero-flux endpoints");
  auto* simulate = app.add_subcommand("simulate", "finite-difference run");
  simulate->add_option("--config", o.config, "file with a [simulate] section");
  simulate->add_option("--init", o.init, "family id or 'u; v'");
  simulate->add_option("--n", o.n, "cells");
  simulate->add_option("--cfl", o.cfl, "cfl factor")
      ->check(CLI::PositiveNumber & CLI::Range(0.0, 1.0));
  simulate->add_option("--stride", o.stride, "output stride");
  auto* conv = app.add_subcommand("convergence", "grid convergence study");
  conv->add_option("--ns", o.ns, "grid sizes")->delimiter(',');
  conv->add_option("--stencil", o.stencil, "central or one-sided");
  conv->add_option("--expect-order", o.expect_order, "expected order");
  conv->add_option("--order-tol", o.order_tol, "order tolerance");
  conv->add_option("--cfl", o.cfl, "cfl factor")
      ->check(CLI::PositiveNumber & CLI::Range(0.0, 1.0));
  auto* catalog = app.add_subcommand("catalog", "list or show catalog entries");
  catalog->add_option("args", o.positional, "list | show ID");

  for (auto* s : {validate, determining, check, comm, verify, orbit, reduce,
                  flux, simulate, conv, catalog}) {
    add_common(s, o);
  }
  for (auto* s : {verify, orbit, flux, conv}) {
    s->add_option("--family", o.family, "solution family id");
    s->add_option("--file", o.file, "solution file");
    s->add_option("--branch", o.branch, "upper or lower");
  }
  for (auto* s : {verify, orbit, reduce, simulate, conv}) {
    s->add_option("--system", o.system, "system id (3-1, 3-2, 1-4, T2.3)");
  }
  reduce->add_option("--branch", o.branch, "upper or lower");
  for (auto* s : {flux, simulate, conv}) {
    s->add_option("--x0", o.x0, "left end");
    s->add_option("--x1", o.x1, "right end");
  }
  for (auto* s : {simulate, conv}) {
    s->add_option("--bc", o.bc, "zero-neumann, periodic or exact-dirichlet");
    s->add_option("--t-end", o.t_end, "final time");
    s->add_option("--kernel", o.kernel, "auto, scalar or avx2");
  }

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
    if (!o.output.empty()) {
      fs::path p(o.output);
      if (p.has_parent_path() && !fs::exists(p.parent_path())) {
        throw FileMissing(p.parent_path().string());
      }
    }
    // CSV bodies start with their header row; the echo goes to stderr.
    bool csv = *simulate || o.format == "csv";
    (csv ? static_cast<std::ostream&>(err) : out) << "# symkit " << rep.command
                                                   << "\n";
    if (*validate) rep.exit_code = cmd_validate(o, out);
    else if (*determining) rep.exit_code = cmd_determining(o, out);
    else if (*check) rep.exit_code = cmd_check(o, out);
    else if (*comm) rep.exit_code = cmd_commutators(o, out);
    else if (*verify) rep.exit_code = cmd_verify(o, out);
    else if (*orbit) rep.exit_code = cmd_orbit(o, out);
    else if (*reduce) rep.exit_code = cmd_reduce(o, out);
    else if (*flux) rep.exit_code = cmd_flux(o, out);
    else if (*simulate) rep.exit_code = cmd_simulate(o, out, err);
    else if (*conv) rep.exit_code = cmd_convergence(o, out);
    else if (*catalog) rep.exit_code = cmd_catalog(o, out);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, err);
    out.str(help.str());
    rep.exit_code = code == 0 ? kPass : kUsage;
  } catch (const FileMissing& e) {
    err << e.what() << "\n";
    rep.exit_code = kFileMissing;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    rep.exit_code = kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    rep.exit_code = kUsage;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << "\n";
    rep.exit_code = kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    rep.exit_code = kFail;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    rep.exit_code = kUsage;
  }
  rep.body = out.str();
  if (!o.output.empty() && rep.exit_code != kUsage &&
      rep.exit_code != kFileMissing) {
    std::ofstream f(o.output);
    f << rep.body;
    err << "wrote " << o.output << "\n";
    rep.body.clear();
  }
  rep.errors = err.str();
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace symkit::cli
