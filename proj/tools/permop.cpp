// permop: counts, verification suites and exports for the Milgram and
// cacti models.
//
// exit codes: 0 pass, 1 verification failure, 2 usage error

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permop/permop.hpp"

namespace {

using namespace permop;
using nlohmann::json;

struct RunConfig {
  int n = 3;
  std::string space = "both";
  std::string suite = "all";
  std::string format;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  bool per_k = false;
  bool allow_large = false;
  bool polytope = false;
  std::string subdivision;
  int threads = 0;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + c.out + "' for writing");
  f << text;
  if (!f) throw UsageError("write to '" + c.out + "' failed");
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

// ---------------------------------------------------------------------------

int cmd_counts(const RunConfig& c) {
  const int n = c.n;
  if (n < 1 || n > 5) throw UsageError("counts: n must be in [1, 5]");
  if (c.space != "milgram" && c.space != "cact" && c.space != "both")
    throw UsageError("counts: --space must be milgram, cact or both");
  const std::string fmt = c.format.empty() ? "text" : c.format;
  if (fmt != "text" && fmt != "json" && fmt != "csv") throw UsageError("counts: --format must be text, json or csv");

  json j{{"n", n}};
  std::ostringstream text, csv;
  csv << "section,key,value\n";
  auto graded = [&](const std::string& name, const std::vector<std::int64_t>& f) {
    j[name] = {{"cells_by_dim", f}};
    std::int64_t total = 0;
    for (auto x : f) total += x;
    j[name]["total"] = total;
    text << name << " cells by dimension: " << join(f, " / ") << "  (total " << total << ")\n";
    for (std::size_t d = 0; d < f.size(); ++d) csv << csv_row({name, "dim" + std::to_string(d), std::to_string(f[d])});
  };
  if (c.space != "cact") graded("milgram", build_J_n(n).grade_counts());
  if (c.space != "milgram") {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n), 0);
    for (const auto& t : enumerate_trees(label_range(n))) ++f[static_cast<std::size_t>(t.degree())];
    graded("cact", f);
    json per_sigma = json::object();
    std::map<std::size_t, int> hist;
    for (const auto& s : permutations(n)) {
      const auto k = T_sigma_top(s).size();
      per_sigma[s.to_string()] = k;
      ++hist[k];
      csv << csv_row({"top_cells", s.to_string(), std::to_string(k)});
    }
    j["cact"]["top_cells_per_sigma"] = per_sigma;
    for (auto [k, m] : hist) text << "top cells |T^" << n - 1 << "_sigma| = " << k << " for " << m << " sigma\n";
  }
  if (c.per_k) {
    if (n < 2) throw UsageError("counts: --per-k needs n >= 2");
    std::vector<Letter> rev;
    for (int i = n; i >= 1; --i) rev.push_back(i);
    const NrSequence sigma(rev);
    const auto d = decomposition(sigma);
    const auto bij = face_top_bijection(sigma);
    json pk = json::object();
    text << "decomposition of T^" << n - 1 << "_" << sigma.to_string() << " by initial branching k:\n";
    for (int k = 1; k < n; ++k) {
      pk[std::to_string(k)] = {{"top_cells", d.size_of(k)}, {"face_cells", bij.domain_size.at(k)}};
      text << "  k=" << k << ": " << d.size_of(k) << "  (|T^face_" << remove_first(sigma).to_string() << "(" << k
           << ")| = " << bij.domain_size.at(k) << ")\n";
      csv << csv_row({"per_k", std::to_string(k), std::to_string(d.size_of(k))});
    }
    text << "  total: " << d.total() << "\n";
    text << "face/top bijection: " << (bij.bijective() ? "bijective" : "NOT bijective") << " (" << bij.image_size
         << " images, " << bij.top_count << " top cells)\n";
    csv << csv_row({"per_k", "total", std::to_string(d.total())});
    j["per_k"] = {{"sigma", sigma.to_string()}, {"pieces", pk}, {"total", d.total()}, {"bijective", bij.bijective()}};
  }
  if (fmt == "json")
    emit(c, j.dump(2) + "\n");
  else if (fmt == "csv")
    emit(c, csv.str());
  else
    emit(c, text.str());
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end())
    throw UsageError("verify: unknown suite '" + c.suite + "'");
  if (!c.format.empty() && c.format != "text" && c.format != "json")
    throw UsageError("verify: --format must be text or json");
  VerifyOptions o{c.n, c.seed, c.allow_large};
  std::vector<SuiteReport> reps;
  try {
    reps = run_suite(c.suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  json j = json::array();
  std::ostringstream text;
  for (const auto& r : reps) {
    ok = ok && r.passed();
    j.push_back(r.to_json());
    text << "[" << (r.passed() ? "PASS" : "FAIL") << "] suite " << r.suite << " n=" << r.n << "\n";
    for (const auto& ch : r.checks) {
      text << "  " << (ch.passed ? "ok   " : "FAIL ") << ch.name;
      if (!ch.detail.empty()) text << "  [" << ch.detail << "]";
      text << "\n";
    }
    for (const auto& f : r.findings) text << "  note " << f << "\n";
  }
  const json report{{"n", c.n}, {"suite", c.suite}, {"seed", c.seed}, {"passed", ok}, {"suites", j}};
  if (c.format == "json") {
    emit(c, report.dump(2) + "\n");
  } else {
    std::cout << text.str();
    if (!c.out.empty()) emit(c, report.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

int cmd_export(const RunConfig& c) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  if (fmt != "json" && fmt != "off" && fmt != "csv") throw UsageError("export: --format must be json, off or csv");
  if (!c.subdivision.empty()) {
    NrSequence sigma;
    try {
      sigma = NrSequence::parse(c.subdivision);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!sigma.is_permutation() || sigma.size() < 2 || sigma.size() > 4)
      throw UsageError("export: --subdivision needs a permutation of 1..n with 2 <= n <= 4");
    if (fmt == "csv") throw UsageError("export: subdivisions are written as off or json");
    emit(c, fmt == "off" ? subdivision_off(sigma) : subdivision_json(sigma).dump(2) + "\n");
    return 0;
  }
  if (c.polytope) {
    if (c.n < 2 || c.n > 4) throw UsageError("export: geometric export needs 2 <= n <= 4");
    if (fmt == "csv") throw UsageError("export: polytopes are written as off or json");
    emit(c, fmt == "off" ? polytope_off(c.n) : polytope_json(c.n).dump(2) + "\n");
    return 0;
  }
  if (c.space != "milgram" && c.space != "cact") throw UsageError("export: --space must be milgram or cact");
  if (fmt == "off") throw UsageError("export: OFF needs --polytope or --subdivision");
  if (c.n < 1 || c.n > 5) throw UsageError("export: n must be in [1, 5]");
  if (c.space == "milgram") {
    const auto F = build_milgram(c.n);
    emit(c, fmt == "csv" ? complex_to_csv(F) : complex_to_json(F).dump(2) + "\n");
  } else {
    if (c.n == 5 && !c.allow_large) throw UsageError("export: cact at n = 5 needs --allow-large");
    const auto C = build_cact(c.n, c.allow_large);
    emit(c, fmt == "csv" ? complex_to_csv(C) : complex_to_json(C).dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permop: permutahedral models of the little discs operad"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads (overrides PERMOP_THREADS)")->check(CLI::PositiveNumber);

  auto* counts = app.add_subcommand("counts", "graded cell counts, top cells per sigma, per-k decomposition");
  counts->add_option("-n", cfg.n, "arity")->capture_default_str();
  counts->add_option("--space", cfg.space, "milgram | cact | both")->capture_default_str();
  counts->add_flag("--per-k", cfg.per_k, "decomposition of T_{n..1} by initial branching");
  counts->add_option("--format", cfg.format, "text | json | csv");
  counts->add_option("--out", cfg.out, "output file");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("-n", cfg.n, "arity")->capture_default_str();
  verify->add_option("--suite", cfg.suite, "poset | trees | cover | chainmap | homology | operad | geometry | all")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for randomized spot checks")->capture_default_str();
  verify->add_flag("--allow-large", cfg.allow_large, "permit n = 5 for the cacti complex");
  verify->add_option("--format", cfg.format, "text | json");
  verify->add_option("--out", cfg.out, "write the JSON report here");

  auto* exp = app.add_subcommand("export", "write complexes or geometry");
  exp->add_option("-n", cfg.n, "arity")->capture_default_str();
  exp->add_option("--space", cfg.space, "milgram | cact");
  exp->add_option("--subdivision", cfg.subdivision, "sigma: the cells C_tau of T_sigma subdividing P_n");
  exp->add_flag("--polytope", cfg.polytope, "the permutahedron P_n");
  exp->add_option("--format", cfg.format, "json | csv | off");
  exp->add_option("--out", cfg.out, "output file");
  exp->add_flag("--allow-large", cfg.allow_large, "permit n = 5 for the cacti complex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (cfg.threads > 0) thread_budget() = cfg.threads;
  try {
    if (counts->parsed()) return cmd_counts(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (exp->parsed()) return cmd_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "permop: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "permop: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "permop: internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
