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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "symkit/cli/cli.hpp"

using symkit::cli::execute;
using symkit::cli::RunReport;
namespace fs = std::filesystem;

namespace {

RunReport run(std::initializer_list<const char*> args) {
  return execute(std::vector<std::string>(args.begin(), args.end()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "symkit_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

// Points SYMKIT_CATALOG somewhere for the lifetime of the object.
struct CatalogOverride {
  explicit CatalogOverride(const std::string& path) {
    setenv("SYMKIT_CATALOG", path.c_str(), 1);
  }
  ~CatalogOverride() { unsetenv("SYMKIT_CATALOG"); }
};

}  // namespace

TEST_CASE("passing commands exit 0") {
  RunReport r = run({"validate", "--all"});
  CHECK(r.exit_code == 0);
  CHECK(r.body.find("27/27 entries pass") != std::string::npos);
  CHECK(r.body.rfind("# symkit validate --all\n", 0) == 0);

  r = run({"determining", "--generic"});
  CHECK(r.exit_code == 0);
  CHECK(r.body.find("count: 17") != std::string::npos);
  CHECK(r.body.find("golden: clean") != std::string::npos);

  r = run({"verify-solution", "--family", "3-6", "--system", "3-1"});
  CHECK(r.exit_code == 0);
  CHECK(r.body.find("symbolic residual: 0") != std::string::npos);

  CHECK(run({"check", "--table", "2", "--case", "3"}).exit_code == 0);
  CHECK(run({"check", "--table", "3", "--case", "3", "--operator", "R"}).exit_code == 0);
  CHECK(run({"commutators", "--table", "3", "--case", "7"}).exit_code == 0);
  CHECK(run({"orbit", "--family", "seed-3-5", "--compare", "family-3-6"}).exit_code == 0);
  CHECK(run({"reduce"}).exit_code == 0);
  CHECK(run({"flux-check", "--family", "3-7", "--bind", "lambda2=0"}).exit_code == 0);
  CHECK(run({"catalog", "show", "T1.3"}).exit_code == 0);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("verification failures exit 1") {
  // Wrong target system.
  CHECK(run({"verify-solution", "--family", "3-6", "--system", "3-2"}).exit_code == 1);
  // An operator that is not a symmetry of the chosen system.
  CHECK(run({"check", "--table", "2", "--case", "4", "--field", "0; 0; u; v"})
            .exit_code == 1);
  // Flux fails on a half period.
  CHECK(run({"flux-check", "--family", "3-7", "--bind", "lambda2=0", "--x1", "pi/2"})
            .exit_code == 1);
  // Convergence at an impossible expected order.
  CHECK(run({"convergence", "--expect-order", "4"}).exit_code == 1);
  // Orbit compared against the wrong family.
  CHECK(run({"orbit", "--family", "seed-3-5", "--compare", "family-3-7"}).exit_code == 1);

  // Tampered golden file: one sign flipped in a reaction coefficient.
  std::string golden = slurp(SYMKIT_DATA_DIR "/determining_golden.txt");
  auto pos = golden.find("D16 B: eta1_t + ");
  REQUIRE(pos != std::string::npos);
  golden.replace(pos, 16, "D16 B: eta1_t - ");
  fs::path bad = scratch("golden_bad.txt");
  std::ofstream(bad) << golden;
  RunReport r = run({"determining", "--generic", "--golden", bad.c_str()});
  CHECK(r.exit_code == 1);
  CHECK(r.body.find("golden: DISCREPANCIES") != std::string::npos);

  // Catalog with a reaction sign flipped in Table 2 case 3.
  std::string cat = slurp(SYMKIT_DATA_DIR "/catalog.ini");
  pos = cat.find("case = 3\nd12 = 1\nd21 = 1\nc1 = 1\nb2 = 1");
  REQUIRE(pos != std::string::npos);
  cat.replace(cat.find("c1 = 1", pos), 6, "c1 = -1");
  fs::path mutated = scratch("catalog_bad.ini");
  std::ofstream(mutated) << cat;
  CatalogOverride guard(mutated.string());
  r = run({"validate", "--table", "2", "--case", "3"});
  CHECK(r.exit_code == 1);
  CHECK(r.body.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"validate", "--nope"}).exit_code == 2);
  CHECK(run({"validate", "--all", "--format", "xml"}).exit_code == 2);
  CHECK(run({"verify-solution", "--family", "no-such"}).exit_code == 2);
  CHECK(run({"verify-solution", "--family", "3-6", "--system", "9-9"}).exit_code == 2);
  CHECK(run({"verify-solution", "--family", "3-6", "--bind", "alpha1"}).exit_code == 2);
  CHECK(run({"verify-solution", "--family", "3-6", "--bind", "alpha1=1+"}).exit_code == 2);
  CHECK(run({"check", "--table", "2"}).exit_code == 2);
  CHECK(run({"check", "--table", "9", "--case", "1"}).exit_code == 2);
  CHECK(run({"check", "--table", "2", "--case", "3", "--operator", "Q99"}).exit_code == 2);
  CHECK(run({"orbit", "--family", "3-5", "--generator", "X3"}).exit_code == 2);
  CHECK(run({"catalog"}).exit_code == 2);
  CHECK(run({"simulate", "--init", "u; v"}).exit_code == 2);
  CHECK(run({"simulate", "--system", "3-2", "--init", "u; v"}).exit_code == 2);
  CHECK(run({"simulate", "--init", "seed-3-5", "--cfl", "5"}).exit_code == 2);
}

TEST_CASE("missing files exit 3") {
  CHECK(run({"verify-solution", "--file", "/nonexistent/sol.ini"}).exit_code == 3);
  CHECK(run({"simulate", "--config", "/nonexistent/sim.ini"}).exit_code == 3);
  CHECK(run({"determining", "--generic", "--golden", "/nonexistent/g.txt"})
            .exit_code == 3);
  CHECK(run({"validate", "--all", "--output", "/nonexistent/dir/out.txt"})
            .exit_code == 3);
  CatalogOverride guard("/nonexistent/catalog.ini");
  CHECK(run({"validate", "--all"}).exit_code == 3);
}

TEST_CASE("identical invocations give byte-identical reports") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"validate", "--all"},
           {"verify-solution", "--family", "reduced-3-14b", "--seed", "11",
            "--points", "30"},
           {"determining", "--generic"},
           {"convergence", "--ns", "32,64"},
           {"validate", "--all", "--format", "csv"}}) {
    RunReport a = execute(args);
    RunReport b = execute(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.body == b.body);
  }
  // A different seed samples different points.
  RunReport s1 = run({"verify-solution", "--family", "3-6", "--seed", "1"});
  RunReport s2 = run({"verify-solution", "--family", "3-6", "--seed", "2"});
  CHECK(s1.exit_code == 0);
  CHECK(s2.exit_code == 0);
}

TEST_CASE("output files and csv") {
  fs::path out = scratch("report.csv");
  fs::remove(out);
  RunReport r = run({"verify-solution", "--family", "3-6", "--format", "csv",
                     "--output", out.c_str()});
  CHECK(r.exit_code == 0);
  CHECK(r.body.empty());
  std::string csv = slurp(out);
  CHECK(csv.rfind("family,system,max_residual,points,verdict\n", 0) == 0);
  CHECK(csv.find("family-3-6,3-1,") != std::string::npos);

  fs::path cfg = scratch("sim.ini");
  std::ofstream(cfg) << "[simulate]\nsystem = 3-2\ninit = family-3-7\n"
                        "grid.x0 = 0\ngrid.x1 = 3\ngrid.n = 16\nbc = periodic\n"
                        "t_end = 0.01\nbind = alpha2=1/2, lambda2=0\n";
  fs::path traj = scratch("traj.csv");
  r = run({"simulate", "--config", cfg.c_str(), "--output", traj.c_str()});
  CHECK(r.exit_code == 0);
  std::string t = slurp(traj);
  CHECK(t.rfind("t,x,u,v\n", 0) == 0);
  CHECK(std::count(t.begin(), t.end(), '\n') == 1 + 2 * 16);
  CHECK(r.errors.find("# symkit simulate") != std::string::npos);
}

TEST_CASE("solver failures exit 1 and keep the trajectory") {
  // u + v < 0 makes the diffusion matrix backward parabolic.
  RunReport r = run({"simulate", "--system", "3-2", "--init", "-2+x/10; -1",
                     "--n", "16", "--cfl", "0.5", "--t-end", "1"});
  CHECK(r.exit_code == 1);
  CHECK(r.errors.find("solver failure") != std::string::npos);
  CHECK(r.body.rfind("t,x,u,v\n", 0) == 0);
}
