// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "cli.hpp"
#include "oracles.hpp"
#include "qadv/and_or_tree.hpp"
#include "qadv/certificates.hpp"
#include "qadv/graph_instances.hpp"
#include "qadv/named_functions.hpp"
#include "qadv/optimizer.hpp"
#include "qadv/verifier.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qadv;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome sweep_three() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const SweepResult r = sweep_total_functions(3, AscentConfig{});
  const double elapsed = seconds_since(start);
  int violations = 0;
  for (const SweepRow& row : r.rows) {
    violations += (row.thm7 != Verdict::Pass) + (row.thm9 != Verdict::Pass) + (row.thm10 != Verdict::Pass);
  }
  o.require(r.rows.size() == 254, "expected 254 functions, got " + std::to_string(r.rows.size()));
  o.require(r.failures == 0 && violations == 0, std::to_string(violations) + " ceiling violations");
  o.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream s;
    s << "254 functions, 0 violations, " << elapsed << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome exact_small_optima() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    for (NamedFunction f : {NamedFunction::Or, NamedFunction::And}) {
      const Rational v = exact_alb1_small(gen_named(f, n, 2)).report.value_squared;
      o.require(v == Rational(n), to_string(f) + std::to_string(n) + " gave " + to_string(v));
    }
  }
  for (int n = 2; n <= 3; ++n) {
    const Rational v = exact_alb1_small(gen_named(NamedFunction::Parity, n, 2)).report.value_squared;
    o.require(v == Rational(n * n), "parity" + std::to_string(n) + " gave " + to_string(v));
  }
  if (o.pass) o.detail = "OR/AND n=2..4 value^2 = n; PARITY n=2,3 value^2 = n^2";
  return o;
}

Outcome tight_ceilings() {
  Outcome o;
  const auto check = [&](const FunctionTable& f, const std::string& name) {
    const Rational ceiling(f.n_vars() * cert_stats(f).c_minus);
    const Rational v = best_known_bound(f, AscentConfig{}).report.value_squared;
    o.require(v == ceiling, name + " gave " + to_string(v) + " against " + to_string(ceiling));
  };
  for (int n = 2; n <= 5; ++n) check(gen_named(NamedFunction::Parity, n, 2), "parity" + std::to_string(n));
  check(gen_named(NamedFunction::Or, 2, 2), "or2");
  if (o.pass) o.detail = "PARITY n=2..5 value^2 = n^2 = N*C-; OR2 value^2 = 2";
  return o;
}

Outcome conversion_identity() {
  Outcome o;
  int checked = 0;
  const auto check = [&](const RelationInstance& rel, const std::string& name) {
    const ConversionCheck c = verify_conversion(rel);
    o.require(c.pass && c.alb2_squared == c.alb3_squared, name + " failed");
    ++checked;
  };
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto [f, pairs] = oracle::random_relation(3, rng);
    check(RelationInstance::from_table(f, pairs), "random relation " + std::to_string(i));
  }
  for (int n : {6, 8}) {
    check(*gen_bipartiteness(n, InstanceMode::Explicit).relation, "bipartiteness " + std::to_string(n));
    check(*gen_graph_matching(n, InstanceMode::Explicit).relation, "graph matching " + std::to_string(n));
  }
  for (int n : {6, 9, 12}) {
    for (MatchingVariant v : {MatchingVariant::TwoPaths, MatchingVariant::OneComponent}) {
      check(*gen_bipartite_matching(n, InstanceMode::Explicit, v).relation,
            "bipartite matching " + std::to_string(n) + " " + to_string(v));
    }
  }
  for (int n : {4, 6, 8}) check(*gen_invert_permutation_relation(n).relation, "invert permutation " + std::to_string(n));
  if (o.pass) o.detail = std::to_string(checked) + " relations, alb3(alb2 scheme) = alb2 exactly";
  return o;
}

Outcome majority_sandwich() {
  Outcome o;
  const FunctionTable f = gen_named(NamedFunction::Majority, 3, 2);
  const BestBound b = best_known_bound(f, AscentConfig{});
  const CertStats s = cert_stats(f);
  const Rational ceiling(s.c0 * s.c1);
  o.require(ceiling == 4, "C0*C1 = " + to_string(ceiling));
  o.require(b.report.value_squared <= ceiling, "value^2 " + to_string(b.report.value_squared) + " above ceiling");
  o.require(b.report.value >= 1.99, "value " + std::to_string(b.report.value) + " below 1.99");
  const SchemeLimits limits = verify_scheme_limits(f, b.relation, b.scheme);
  o.require(limits.thm10.verdict == Verdict::Pass, "thm10 check did not pass");
  if (o.pass) o.detail = "value^2 = " + to_string(b.report.value_squared) + " in [1.99^2, 4]";
  return o;
}

EdgeSet edges_of(const InputWord& w) {
  EdgeSet e;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) e.set(i);
  }
  return e;
}

Outcome graph_constructions() {
  Outcome o;
  {
    const CountedInstance inst = gen_bipartiteness(8, InstanceMode::Explicit);
    const RelationInstance& rel = *inst.relation;
    const GraphEncoding enc(GraphEncoding::Kind::General, 8);
    o.require(rel.x_count() == 2520, "|X| = " + std::to_string(rel.x_count()));
    for (std::size_t i = 0; i < rel.x_count(); ++i) {
      if (!is_two_colorable(enc, edges_of(rel.x_word(i)))) o.require(false, "non-bipartite X graph");
    }
    for (std::size_t j = 0; j < rel.y_count(); ++j) {
      if (is_two_colorable(enc, edges_of(rel.y_word(j)))) o.require(false, "Y graph without an odd cycle");
    }
    for (std::size_t p = 0; p < rel.pair_count(); ++p) {
      if (rel.diff(p).size() != 4) o.require(false, "pair at distance " + std::to_string(rel.diff(p).size()));
    }
  }
  std::vector<double> log_n, log_bound;
  for (int n : {6, 9, 12, 15}) {
    const CountedInstance inst = gen_bipartite_matching(n, InstanceMode::Counting, MatchingVariant::TwoPaths, 0, 1000);
    o.require(inst.stats.at("samples") == 1000, "samples not checked at n=" + std::to_string(n));
    log_n.push_back(std::log(n));
    log_bound.push_back(std::log(inst.bound.value));
    if (n <= 9) {
      // Independent re-check of every representative neighborhood.
      const CountedInstance ex = gen_bipartite_matching(n, InstanceMode::Explicit);
      const GraphEncoding enc(GraphEncoding::Kind::Bipartite, n);
      for (std::size_t i = 0; i < ex.relation->x_count(); ++i) {
        if (has_perfect_matching_bipartite(enc, edges_of(ex.relation->x_word(i)))) o.require(false, "X graph with PM");
      }
      for (std::size_t j = 0; j < ex.relation->y_count(); ++j) {
        if (!has_perfect_matching_bipartite(enc, edges_of(ex.relation->y_word(j)))) o.require(false, "Y graph without PM");
      }
    }
  }
  // Least-squares slope of log bound against log n.
  const double mx = (log_n[0] + log_n[1] + log_n[2] + log_n[3]) / 4;
  const double my = (log_bound[0] + log_bound[1] + log_bound[2] + log_bound[3]) / 4;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_bound[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  const double slope = sxy / sxx;
  o.require(slope >= 1.4, "slope " + std::to_string(slope));
  if (o.pass) {
    std::ostringstream s;
    s << "|X| = 2520, property checks clean, matching slope " << slope;
    o.detail = s.str();
  }
  return o;
}

Outcome and_or_tree() {
  Outcome o;
  for (int h : {2, 4}) {
    const AndOrTree tree(h);
    o.require(ci_upper(tree.table(), tree.assignment()) == 1, "assignment intersection at height " + std::to_string(h));
  }
  o.require(exhaustive_max_intersection(AndOrTree(2)) == 1, "exhaustive height 2");
  const IntersectionSample s = sample_certificate_intersections(AndOrTree(4), 1'000'000, 0);
  o.require(s.pairs == 1'000'000 && s.max_intersection == 1,
            "sampled max " + std::to_string(s.max_intersection) + " over " + std::to_string(s.pairs));
  o.require(ci_exact(AndOrTree(2).table()).value == 1, "ci_exact(height 2) != 1");
  if (o.pass) o.detail = "max intersection 1 (height 2 exhaustive, height 4 over 10^6 samples); ci_exact = 1";
  return o;
}

Outcome invert_permutation() {
  Outcome o;
  for (int n : {4, 6, 8}) {
    const CountedInstance inst = gen_invert_permutation_relation(n);
    o.require(inst.bound.value_squared == Rational(n / 2), "n=" + std::to_string(n) + " gave " +
                                                             to_string(inst.bound.value_squared));
    o.require(alb2_bound(*inst.relation).value_squared == Rational(n / 2), "recomputed alb2 differs");
    const CertStats s = cert_stats(gen_named(NamedFunction::InvertPermutation, n, n));
    o.require(s.c0 == 1 && s.c1 == 1, "c0/c1 at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "alb2 value^2 = n/2 and c0 = c1 = 1 for n = 4, 6, 8";
  return o;
}

Outcome element_distinctness() {
  Outcome o;
  for (int n : {3, 4, 5}) {
    const DistinctnessReport r = element_distinctness_report(n);
    o.require(r.c1 == 2, "C1 = " + std::to_string(r.c1));
    o.require(r.ceiling_squared == Rational(2 * n), "ceiling^2 = " + to_string(r.ceiling_squared));
    o.require(std::abs(r.ceiling - std::sqrt(2.0 * n)) < 1e-12, "ceiling value");
    o.require(r.note.find("sqrt(" + std::to_string(2 * n) + "/1)") != std::string::npos, "note: " + r.note);
  }
  if (o.pass) o.detail = "C1 = 2, ceiling sqrt(2N) for N = 3, 4, 5";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "qadv_acceptance";
  std::filesystem::create_directories(dir);
  const std::string table = (dir / "maj5.tt").string();
  const std::string parity = (dir / "parity3.tt").string();
  {
    std::ostringstream out, err;
    cli::run({"instance", "function", "--function", "majority", "--n", "5", "--table-out", table}, out, err);
    cli::run({"instance", "function", "--function", "parity", "--n", "3", "--table-out", parity}, out, err);
  }
  const std::vector<std::vector<std::string>> commands = {
      {"optimize", "--table", table, "--seed", "7", "--iters", "200", "--scheme-out", (dir / "s.json").string()},
      {"optimize", "--table", parity, "--seed", "3", "--relation-out", (dir / "r.json").string()},
      {"instance", "bipartiteness", "--n", "12", "--seed", "5", "--samples", "300"},
      {"instance", "bipartite-matching", "--n", "9", "--seed", "11", "--samples", "300"},
      {"instance", "bipartite-matching", "--n", "9", "--mode", "explicit", "--variant", "one-component"},
      {"instance", "bipartiteness", "--n", "6", "--mode", "explicit", "--seed", "2", "--relation-out",
       (dir / "bm.json").string()},
      {"instance", "andor-tree", "--n", "4", "--seed", "9", "--samples", "20000"},
      {"sweep", "--nvars", "3", "--seed", "1", "--json-out", (dir / "sweep.json").string()},
  };
  for (const auto& cmd : commands) {
    std::string first, first_files;
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      const int code = cli::run(cmd, out, err);
      std::string files;
      for (const char* name : {"s.json", "r.json", "bm.json", "sweep.json"}) {
        if (std::filesystem::exists(dir / name)) files += slurp(dir / name);
        std::filesystem::remove(dir / name);
      }
      o.require(code == cli::kExitPass, cmd[0] + " " + cmd[1] + " exited " + std::to_string(code) + ": " + err.str());
      if (rep == 0) {
        first = out.str();
        first_files = files;
      } else {
        o.require(out.str() == first && files == first_files, "output differs for " + cmd[0] + " " + cmd[1]);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " seeded commands byte-identical across two runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exhaustive ceiling sweep (n=3)", sweep_three},
      {"exact small-case optima", exact_small_optima},
      {"tight certificate ceilings", tight_ceilings},
      {"conversion identity", conversion_identity},
      {"majority-3 sandwich", majority_sandwich},
      {"graph constructions", graph_constructions},
      {"AND-OR tree certificates", and_or_tree},
      {"invert-a-permutation", invert_permutation},
      {"element distinctness report", element_distinctness},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << " (" << std::fixed << std::setprecision(2) << seconds_since(start) << " s)" << std::endl;
    std::cout.unsetf(std::ios::floatfield);
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
