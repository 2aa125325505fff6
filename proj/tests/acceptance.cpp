// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [path-to-operad-forge-binary]
// The binary path is needed for the golden-file CLI comparison and the
// determinism criterion; without it those run in-process only / fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "oforge/egf.hpp"
#include "oforge/graph_json.hpp"
#include "oforge/operad.hpp"
#include "oforge/verify.hpp"

#ifndef OPERAD_FORGE_FIXTURE_DIR
#define OPERAD_FORGE_FIXTURE_DIR "tools/fixtures"
#endif
#ifndef OPERAD_FORGE_GOLDEN_DIR
#define OPERAD_FORGE_GOLDEN_DIR "tests/golden"
#endif

namespace {

using namespace oforge;

int failures = 0;

void report(int criterion, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << " (" << title << "): "
            << detail << "\n";
  if (!pass) ++failures;
}

std::string suite_detail(const SuiteResult& r) {
  int passed = 0;
  std::string first_fail;
  for (const auto& c : r.checks) {
    if (c.pass)
      ++passed;
    else if (first_fail.empty())
      first_fail = c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  }
  std::ostringstream os;
  os << passed << "/" << r.checks.size() << " checks";
  if (!first_fail.empty()) os << ", first failure: " << first_fail;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

void criterion_worked_compositions(const std::string& cli) {
  const std::string fx = OPERAD_FORGE_FIXTURE_DIR;
  const std::string gold = OPERAD_FORGE_GOLDEN_DIR;
  struct Case {
    std::string op, left, right, golden;
  };
  const Case cases[] = {
      {"g", "kg_path.json", "kg_edge.json", "compose_g_path_edge.json"},
      {"mg", "mg_left.json", "mg_right.json", "compose_mg_loops.json"},
      {"gpointed", "gp_path.json", "gp_edge.json", "compose_gpointed_star.json"},
      {"mgor", "mgor_path.json", "mgor_edge.json", "compose_mgor_path.json"},
  };

  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    GraphComb x = comb_from_json(load_json_file(fx + "/" + c.left));
    GraphComb y = comb_from_json(load_json_file(fx + "/" + c.right));
    GraphComb result = compose(operad_instance(c.op), x, "*", y);
    nlohmann::json out = comb_to_json(result);
    out["operad"] = c.op;
    std::string expected = read_file(gold + "/" + c.golden);
    if (expected.empty() || out.dump() + "\n" != expected) {
      pass = false;
      detail = "in-process result differs from " + c.golden;
      break;
    }
    if (!cli.empty()) {
      std::string got = run_command(cli + " compose --operad " + c.op + " --left " + fx + "/" +
                                    c.left + " --star '*' --right " + fx + "/" + c.right);
      if (got != expected) {
        pass = false;
        detail = "CLI output differs from " + c.golden;
        break;
      }
    }
  }
  if (pass)
    detail = cli.empty() ? "4 golden files matched (in-process only)"
                         : "4 golden files matched, in-process and via the CLI";
  report(2, "worked compositions", pass, detail);
}

void criterion_determinism(const std::string& cli) {
  if (cli.empty()) {
    report(12, "determinism", false, "CLI path not supplied");
    return;
  }
  std::string base = cli + " verify --suite all --seed 7";
  std::string a = run_command(base + " --format table");
  std::string b = run_command(base + " --format table");
  std::string c = run_command(base + " --format json");
  std::string d = run_command(base + " --format json");
  bool pass = !a.empty() && a == b && !c.empty() && c == d;
  report(12, "determinism", pass,
         pass ? "two table runs and two json runs byte-identical (seed 7)"
              : "reports differ between runs");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = verify_axioms(42);
    double dt = seconds_since(t0);
    bool pass = r.ok() && dt < 60.0;
    std::ostringstream os;
    os << suite_detail(r) << ", " << static_cast<int>(dt * 1000) / 1000.0 << "s (< 60s)";
    report(1, "operad axioms", pass, os.str());
  }

  criterion_worked_compositions(cli);

  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = verify_nonfree();
    double dt = seconds_since(t0);
    report(3, "non-freeness relation", r.ok() && dt < 1.0, suite_detail(r));
  }

  {
    SuiteResult r = verify_threshold();
    report(4, "edge threshold", r.ok(), suite_detail(r) + "; corrected bound, boundary witnessed");
  }

  {
    SuiteResult r = verify_prelie();
    report(5, "psi homomorphism", r.ok(), suite_detail(r));
  }

  {
    SuiteResult r = verify_lemmfond(42);
    report(6, "spanning-tree forgetful identities", r.ok(), suite_detail(r));
  }

  {
    SuiteResult r = verify_dimensions();
    report(7, "suboperad dimensions", r.ok(), suite_detail(r));
  }

  {
    SuiteResult r = verify_generators();
    report(8, "generator families", r.ok(), suite_detail(r));
  }

  {
    SuiteResult r = verify_koszul();
    report(9, "dual pairing data", r.ok(), suite_detail(r));
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = verify_hilbert();
    double dt = seconds_since(t0);
    report(10, "dimension series", r.ok() && dt < 1.0, suite_detail(r));
  }

  {
    SuiteResult r = verify_lp();
    report(11, "loop-points spans", r.ok(), suite_detail(r));
  }

  criterion_determinism(cli);

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
