// charsum: command-line front end for the character-sum workbench.
//
// Exit codes: 0 success, 1 an exact suite failed, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charsum/arithmetic.hpp"
#include "charsum/char_sums.hpp"
#include "charsum/characters.hpp"
#include "charsum/congruence_counts.hpp"
#include "charsum/format.hpp"
#include "charsum/grid.hpp"
#include "charsum/parallel.hpp"
#include "charsum/polynomials.hpp"
#include "charsum/verify.hpp"

namespace {

using namespace charsum;

struct RunConfig {
  int workers = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

std::vector<i64> parse_tuple(const std::string& text) {
  std::vector<i64> v;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) v.push_back(std::stoll(tok));
  if (!in.eof()) throw std::invalid_argument("malformed tuple: " + text);
  return v;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

std::string render(const std::vector<BoundReport>& reports, bool json) {
  return json ? reports_json(reports) : reports_csv(reports);
}

int run_verify(const std::string& id, const RunConfig& cfg) {
  std::vector<std::string> ids = id == "all" ? suite_ids() : std::vector<std::string>{id};
  std::vector<BoundReport> all;
  bool ok = true;
  for (const auto& s : ids) {
    const SuiteResult r = run_suite(s, cfg.seed);
    std::cout << r.summary() << "\n";
    ok = ok && r.passed();
    all.insert(all.end(), r.reports.begin(), r.reports.end());
  }
  if (!cfg.out.empty()) emit(render(all, cfg.json), cfg.out);
  return ok ? 0 : 1;
}

int run_scan(const std::string& id, const std::string& grid_path, const RunConfig& cfg) {
  const ScanResult r = scan_theorem(id, Grid::load(grid_path));
  if (cfg.out.empty()) {
    std::cout << render(r.reports, cfg.json);
  } else {
    emit(render(r.reports, cfg.json), cfg.out);
    std::cout << r.summary();
  }
  return 0;
}

// Every suite, then every scan with grids/<id>.grid, into one directory.
int run_report(const std::string& dir, const std::string& grids, const RunConfig& cfg) {
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::string summary;
  for (const auto& id : suite_ids()) {
    const SuiteResult r = run_suite(id, cfg.seed);
    ok = ok && r.passed();
    summary += r.summary() + "\n";
    emit(render(r.reports, cfg.json), dir + "/suite-" + id + (cfg.json ? ".json" : ".csv"));
  }
  for (const auto& id : scan_ids()) {
    const std::string path = grids + "/" + id + ".grid";
    if (!std::filesystem::exists(path)) continue;
    const ScanResult r = scan_theorem(id, Grid::load(path));
    summary += r.summary();
    emit(render(r.reports, cfg.json), dir + "/scan-" + id + (cfg.json ? ".json" : ".csv"));
  }
  emit(summary, dir + "/summary.txt");
  std::cout << summary;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for moments of character sums to composite modulus"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--workers", cfg.workers, "Worker threads (0: runtime default); WORKERS overrides");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");

  u64 n = 0;
  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("n", n)->required();

  bool crt = false;
  auto* decompose = app.add_subcommand("decompose", "q = q1 s c, or q = q1 q2^2 q3^2 q4^2 q5 with --crt");
  decompose->add_option("q", n)->required();
  decompose->add_flag("--crt", crt);

  bool primitive = false;
  auto* chars = app.add_subcommand("chars", "List characters mod q as CSV");
  chars->add_option("q", n)->required();
  chars->add_flag("--primitive", primitive);

  std::string label;
  u64 V = 0;
  int r = 1;
  bool csv = false;
  auto* moment_cmd = app.add_subcommand("moment", "sum over lambda of |sum_{v<=V} chi(lambda+v)|^{2r}");
  moment_cmd->add_option("--q", n)->required();
  moment_cmd->add_option("--char", label, "Character label q:i1,i2,...")->required();
  moment_cmd->add_option("--V", V)->required();
  moment_cmd->add_option("--r", r)->required();
  moment_cmd->add_flag("--csv", csv, "Print a MomentRecord CSV row");

  i64 lambda = 0, KV = 0;
  std::string kind = "K";
  int parts = 1;
  auto* ksum = app.add_subcommand("ksum", "Kloosterman-fraction congruence counts as CSV");
  ksum->add_option("--r", r)->required();
  ksum->add_option("--q", n)->required();
  ksum->add_option("--lambda", lambda);
  ksum->add_option("--V", KV)->required();
  ksum->add_option("--kind", kind, "K, distinct, repeated, mult or boxed")
      ->check(CLI::IsMember({"K", "distinct", "repeated", "mult", "boxed"}));
  ksum->add_option("--parts", parts, "Subintervals per coordinate for --kind boxed");

  std::string tuple;
  auto* ncount = app.add_subcommand("ncount", "N_v(q)");
  ncount->add_option("--q", n)->required();
  ncount->add_option("--v", tuple, "Space-separated tuple of even length")->required();

  std::string f_text, g_text;
  auto* res = app.add_subcommand("resultant", "Res(f, g), coefficients ascending");
  res->add_option("--f", f_text)->required();
  res->add_option("--g", g_text)->required();

  std::string id;
  auto* verify = app.add_subcommand("verify", "Run an exact suite (or 'all')");
  verify->add_option("id", id)->required();
  verify->add_option("--out", cfg.out, "Write the reports here");
  verify->add_flag("--json", cfg.json);

  std::string grid_path;
  auto* scan = app.add_subcommand("scan", "Ratio scan over a grid file");
  scan->add_option("id", id)->required();
  scan->add_option("--grid", grid_path)->required();
  scan->add_option("--out", cfg.out, "Write the reports here; the summary goes to stdout");
  scan->add_flag("--json", cfg.json);

  std::string dir = "report", grids = "grids";
  auto* report = app.add_subcommand("report", "Every suite and scan into one directory");
  report->add_option("--dir", dir);
  report->add_option("--grids", grids);
  report->add_flag("--json", cfg.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  if (const char* env = std::getenv("WORKERS")) {
    try {
      cfg.workers = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "WORKERS must be an integer\n";
      return 2;
    }
  }
  set_workers(cfg.workers);

  try {
    if (*factor) {
      std::cout << factorize(n).to_string() << "\n";
    } else if (*decompose) {
      if (crt) {
        const auto p = decompose_crt(n);
        std::cout << "q1=" << p.q1 << " q2=" << p.q2 << " q3=" << p.q3 << " q4=" << p.q4 << " q5=" << p.q5 << "\n";
      } else {
        const auto p = decompose_burgess(n);
        std::cout << "q1=" << p.q1 << " s=" << p.s << " c=" << p.c << "\n";
      }
    } else if (*chars) {
      std::cout << "label,order,conductor,primitive\n";
      for (const auto& chi : enumerate_characters(n, primitive))
        std::cout << csv_field(chi.label()) << ',' << chi.order() << ',' << chi.conductor() << ','
                  << (chi.is_primitive() ? 1 : 0) << "\n";
    } else if (*moment_cmd) {
      const auto chi = DirichletCharacter::from_label(label);
      if (chi.modulus() != n) throw std::invalid_argument("--q does not match the character label");
      const MomentRecord rec = moment(chi, V, r);
      if (csv)
        std::cout << MomentRecord::csv_header() << "\n" << rec.csv_row() << "\n";
      else
        std::cout << format_real(rec.value) << "\n";
    } else if (*ksum) {
      std::cout << CountRecord::csv_header() << "\n";
      const TupleBox box = kind == "mult" ? TupleBox::cube(r, 1, KV) : TupleBox::symmetric(r, KV);
      auto row = [&](const std::string& k, const TupleBox& b, CountResult c) {
        std::cout << CountRecord{k, r, n, lambda, b.descriptor(), c}.csv_row() << "\n";
      };
      if (kind == "K") row("K", box, count_K(r, n, lambda, box));
      if (kind == "distinct") row("distinct", box, count_K_distinct(r, n, lambda, KV));
      if (kind == "repeated") row("repeated", box, count_K_repeated(r, n, lambda, KV));
      if (kind == "mult") row("mult", box, count_mult_cong(r, n, lambda, box));
      if (kind == "boxed") {
        const auto boxes = partition_box(box, parts);
        const auto counts = count_K_boxed(r, n, lambda, boxes);
        for (std::size_t i = 0; i < boxes.size(); ++i) row("boxed", boxes[i], counts[i]);
      }
    } else if (*ncount) {
      std::cout << count_Nv(n, parse_tuple(tuple)) << "\n";
    } else if (*res) {
      std::cout << resultant(IntPolynomial::parse(f_text), IntPolynomial::parse(g_text)).get_str() << "\n";
    } else if (*verify) {
      return run_verify(id, cfg);
    } else if (*scan) {
      return run_scan(id, grid_path, cfg);
    } else if (*report) {
      return run_report(dir, grids, cfg);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
