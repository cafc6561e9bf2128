// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Criteria 1-5 each return a transcript (suite reports, worked values, scan
// CSVs and summaries). Criterion 6 replays them with 1 and with 8 workers and
// requires identical transcripts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/char_sums.hpp"
#include "charsum/congruence_counts.hpp"
#include "charsum/format.hpp"
#include "charsum/grid.hpp"
#include "charsum/parallel.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string transcript;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome run_suites(const std::vector<std::string>& ids) {
  Outcome out;
  u64 instances = 0;
  for (const auto& id : ids) {
    const SuiteResult r = run_suite(id, 0);
    instances += r.instances;
    out.transcript += r.summary() + "\n" + reports_csv(r.reports);
    if (!r.passed()) {
      out.ok = false;
      out.detail += " [" + r.summary() + "]";
    }
  }
  if (out.ok) out.detail = std::to_string(ids.size()) + " suites, " + std::to_string(instances) + " instances";
  return out;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = run_suites({"lemma-nmult", "lemma3", "lemma4", "lemma5", "lemma6", "lemma10", "lemma15", "adjugate"});
  const double s = seconds_since(t0);
  if (s > 300) o.ok = false;
  o.detail += ", " + format_real(std::round(s * 10) / 10) + " s";
  return o;
}

Outcome criterion2() { return run_suites({"kmitm", "eq6", "eq41"}); }

Outcome criterion3() {
  Outcome o;
  auto check = [&](const std::string& name, bool good, const std::string& value) {
    o.transcript += name + "=" + value + "\n";
    if (!good) {
      o.ok = false;
      o.detail += " " + name + "=" + value;
    }
  };
  const std::vector<i64> v = {0, 1, 2, 3};
  const u64 k = count_K(1, 7, 0, 2).count;
  check("K_{1,7}(0,2)", k == 4, std::to_string(k));
  const u64 n11 = count_Nv(11, v), n5 = count_Nv(5, v);
  check("N_v(11)", n11 == 2, std::to_string(n11));
  check("N_v(5)", n5 == 0, std::to_string(n5));
  const u64 j = count_J(2, 2, Sigma::rational(0));
  check("J(0)", j == 36, std::to_string(j));
  const double m = moment(DirichletCharacter::from_label("5:1"), 2, 1).value;
  check("moment(5:1,V=2,r=1)", std::abs(m - 6.0) <= 1e-8, format_real(m));
  if (o.ok) o.detail = "5 values";
  return o;
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult r = run_suite("pv", 0);
  const double s = seconds_since(t0);
  Outcome o;
  o.transcript = r.summary() + "\n" + reports_csv(r.reports);
  double worst = 0.0;
  for (const auto& rep : r.reports) worst = std::max(worst, rep.ratio);
  o.ok = r.passed() && worst <= 1.0 && s <= 120;
  o.detail = std::to_string(r.instances) + " characters, max ratio " + format_real(worst) + ", " +
             format_real(std::round(s * 10) / 10) + " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::string root = CHARSUM_SOURCE_DIR;
  u64 checks = 0;
  for (const auto& id : scan_ids()) {
    const Grid grid = Grid::load(root + "/grids/" + id + ".grid");
    const ScanResult a = scan_theorem(id, grid);
    const ScanResult b = scan_theorem(id, grid);
    const std::string csv = reports_csv(a.reports);
    const std::string summary = a.summary();
    checks += a.sanity_checks;
    o.transcript += summary + csv;
    std::string why;
    if (csv != reports_csv(b.reports) || summary != b.summary()) why += " rerun differs";
    if (a.sanity_failures) why += " " + std::to_string(a.sanity_failures) + " sanity failures";
    if (summary != read_file(root + "/tests/baselines/" + id + ".txt")) why += " baseline mismatch";
    if (!why.empty()) {
      o.ok = false;
      o.detail += " [" + id + ":" + why + "]";
    }
  }
  if (o.ok) o.detail = std::to_string(scan_ids().size()) + " scans, " + std::to_string(checks) + " sanity checks";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 exact lemma suites", criterion1},
      {"2 oracle equivalence", criterion2},
      {"3 worked values", criterion3},
      {"4 Polya-Vinogradov scan", criterion4},
      {"5 deterministic ratio scans", criterion5},
  };
  bool all = true;
  std::vector<std::string> transcripts;
  for (const auto& [name, run] : criteria) {
    const Outcome o = run();
    all = all && o.ok;
    transcripts.push_back(o.transcript);
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }

  std::string differs;
  for (int workers : {1, 8}) {
    set_workers(workers);
    for (std::size_t i = 0; i < criteria.size(); ++i)
      if (criteria[i].second().transcript != transcripts[i])
        differs += " criterion " + std::to_string(i + 1) + " with " + std::to_string(workers) + " workers;";
  }
  set_workers(0);
  const bool same = differs.empty();
  all = all && same;
  std::cout << (same ? "PASS " : "FAIL ") << "6 determinism under 1 and 8 workers: "
            << (same ? "criteria 1-5 byte-identical" : "differs:" + differs) << std::endl;
  return all ? 0 : 1;
}
