#include "cli.hpp"

#include "qadv/and_or_tree.hpp"
#include "qadv/certificates.hpp"
#include "qadv/graph_instances.hpp"
#include "qadv/named_functions.hpp"
#include "qadv/optimizer.hpp"
#include "qadv/verifier.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qadv::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
  if (!out) throw std::invalid_argument("failed writing " + path);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Emitter {
  std::ostream& out;
  void operator()(const std::string& doc, const std::string& path) const {
    if (path.empty()) {
      out << doc << '\n';
    } else {
      write_file(path, doc + "\n");
    }
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

json witnesses_json(const std::map<std::string, std::int64_t>& w) {
  json out = json::object();
  for (const auto& [k, v] : w) out[k] = v;
  return out;
}

// Ascent flags shared by optimize and sweep.
struct AscentFlags {
  std::int64_t iters = 1000;
  std::uint64_t seed = 0;
  std::string shrink = "1/2";
  std::string tolerance = "1/1000000000";

  void attach(CLI::App* app) {
    app->add_option("--iters", iters, "Ascent sweeps")->capture_default_str()->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "Ascent seed")->capture_default_str();
    app->add_option("--shrink", shrink, "Step shrink factor in (0,1), as num/den")->capture_default_str();
    app->add_option("--tolerance", tolerance, "Relative improvement floor, as num/den")->capture_default_str();
  }

  AscentConfig config() const {
    AscentConfig cfg;
    cfg.max_iters = iters;
    cfg.seed = seed;
    cfg.step_shrink = parse_rational(shrink);
    cfg.tolerance = parse_rational(tolerance);
    check_config(cfg);
    return cfg;
  }
};

int cmd_analyze(const std::string& table_path, const std::string& measures, const std::string& out_path,
                const Emitter& emit) {
  const FunctionTable f = load_table_file(table_path);
  json doc = json::object();
  std::optional<CertStats> stats;
  const auto need_stats = [&]() -> const CertStats& {
    if (!stats) stats = cert_stats(f);
    return *stats;
  };
  for (const auto& m : split_list(measures)) {
    if (m == "c0") {
      doc["c0"] = need_stats().c0;
    } else if (m == "c1") {
      doc["c1"] = need_stats().c1;
    } else if (m == "c") {
      doc["c"] = need_stats().c;
    } else if (m == "c_minus") {
      doc["c_minus"] = need_stats().c_minus;
    } else if (m == "ci") {
      try {
        doc["ci"] = ci_exact(f).value;
        doc["ci_is_upper"] = false;
      } catch (const std::length_error&) {
        doc["ci"] = ci_upper(f, min_certificate_assignment(f));
        doc["ci_is_upper"] = true;
      }
    } else if (m == "gamma") {
      doc["gamma"] = gamma_symmetric(f);
    } else {
      throw std::invalid_argument("unknown measure: " + m);
    }
  }
  emit(doc.dump(), out_path);
  return kExitPass;
}

int cmd_optimize(const std::string& table_path, const AscentFlags& flags, const std::string& scheme_out,
                 const std::string& relation_out, const std::string& out_path, const Emitter& emit) {
  const FunctionTable f = load_table_file(table_path);
  const BestBound best = best_known_bound(f, flags.config());
  json doc;
  doc["method"] = to_string(best.report.method);
  doc["start"] = best.start;
  doc["value"] = best.report.value;
  doc["value_sq"] = to_string(best.report.value_squared);
  doc["witnesses"] = witnesses_json(best.report.witnesses);
  if (!scheme_out.empty()) write_file(scheme_out, scheme_to_json(best.relation, best.scheme) + "\n");
  if (!relation_out.empty()) write_file(relation_out, relation_to_json(best.relation) + "\n");
  emit(doc.dump(), out_path);
  return kExitPass;
}

struct InstanceFlags {
  std::string name;
  int n = 0;
  int k = 2;
  std::string mode = "counting";
  std::string variant = "two-paths";
  std::string function;
  std::uint64_t seed = 0;
  int samples = kDefaultSamples;
  std::string relation_out;
  std::string table_out;
};

int cmd_instance(const InstanceFlags& fl, const std::string& out_path, const Emitter& emit) {
  if (fl.name == "function") {
    if (fl.function.empty()) throw std::invalid_argument("instance function needs --function");
    const FunctionTable f = gen_named(parse_named_function(fl.function), fl.n, fl.k);
    const std::string doc = ends_with(fl.table_out, ".json") ? to_table_json(f) : to_tt(f);
    if (fl.table_out.empty()) {
      emit(doc.substr(0, doc.size() - (doc.back() == '\n' ? 1 : 0)), out_path);
    } else {
      write_file(fl.table_out, doc.back() == '\n' ? doc : doc + "\n");
    }
    return kExitPass;
  }
  if (fl.name == "andor-tree") {
    const AndOrTree tree(fl.n);
    json doc;
    doc["height"] = tree.height();
    doc["leaves"] = tree.leaves();
    if (tree.height() <= AndOrTree::kMaxTableHeight) {
      const FunctionTable f = tree.table();
      doc["ci_upper"] = ci_upper(f, tree.assignment());
      doc["max_intersection"] = exhaustive_max_intersection(tree);
      if (!fl.table_out.empty()) write_file(fl.table_out, ends_with(fl.table_out, ".json") ? to_table_json(f) + "\n" : to_tt(f));
    }
    const IntersectionSample sample =
        sample_certificate_intersections(tree, static_cast<std::uint64_t>(fl.samples), fl.seed);
    doc["sampled_pairs"] = sample.pairs;
    doc["sampled_max_intersection"] = sample.max_intersection;
    emit(doc.dump(), out_path);
    return kExitPass;
  }

  const InstanceMode mode = parse_instance_mode(fl.mode);
  CountedInstance inst;
  if (fl.name == "bipartiteness") {
    inst = gen_bipartiteness(fl.n, mode, fl.seed, fl.samples);
  } else if (fl.name == "graph-matching") {
    inst = gen_graph_matching(fl.n, mode, fl.seed, fl.samples);
  } else if (fl.name == "bipartite-matching") {
    inst = gen_bipartite_matching(fl.n, mode, parse_matching_variant(fl.variant), fl.seed, fl.samples);
  } else if (fl.name == "invert-permutation") {
    inst = gen_invert_permutation_relation(fl.n);
  } else {
    throw std::invalid_argument("unknown instance: " + fl.name);
  }
  if (!fl.relation_out.empty()) {
    if (!inst.relation) throw std::invalid_argument("this mode materializes no relation; use --mode explicit");
    write_file(fl.relation_out, relation_to_json(*inst.relation) + "\n");
  }
  emit(instance_to_json(inst), out_path);
  return kExitPass;
}

json check_json(const TheoremCheck& c) {
  json doc;
  doc[c.theorem] = to_string(c.verdict);
  if (c.verdict != Verdict::NotApplicable) {
    doc["value_sq"] = to_string(c.value);
    doc["ceiling_sq"] = to_string(c.ceiling);
    doc["witnesses"] = witnesses_json(c.witnesses);
  }
  if (!c.note.empty()) doc["note"] = c.note;
  return doc;
}

struct VerifyFlags {
  std::string subject;
  std::string table;
  std::string scheme;
  std::string relation;
  int n_vars = 0;
  int n = 0;
};

int cmd_verify(const VerifyFlags& fl, const std::string& out_path, const Emitter& emit) {
  if (fl.subject == "gamma") {
    emit(gamma_report_to_json(gamma_report(fl.n_vars)), out_path);
    return kExitPass;
  }
  if (fl.subject == "distinctness") {
    emit(distinctness_report_to_json(element_distinctness_report(fl.n)), out_path);
    return kExitPass;
  }
  if (fl.relation.empty()) throw std::invalid_argument("verify " + fl.subject + " needs --relation");
  const std::string relation_text = read_file(fl.relation);
  std::optional<FunctionTable> f;
  if (!fl.table.empty()) f = load_table_file(fl.table);

  if (fl.subject == "thm6") {
    const RelationInstance rel = f ? relation_from_json(*f, relation_text) : relation_from_json(relation_text);
    const ConversionCheck check = verify_conversion(rel);
    json doc;
    doc["thm6"] = check.pass ? "pass" : "fail";
    doc["alb2_sq"] = to_string(check.alb2_squared);
    doc["alb3_sq"] = to_string(check.alb3_squared);
    emit(doc.dump(), out_path);
    return check.pass ? kExitPass : kExitVerdictFailure;
  }
  if (fl.subject != "thm7" && fl.subject != "thm9" && fl.subject != "thm10") {
    throw std::invalid_argument("unknown verify subject: " + fl.subject);
  }
  if (!f) throw std::invalid_argument("verify " + fl.subject + " needs --table");
  const RelationInstance rel = relation_from_json(*f, relation_text);
  const WeightScheme s = fl.scheme.empty() ? WeightScheme::uniform(rel) : scheme_from_json(rel, read_file(fl.scheme));
  const SchemeLimits limits = verify_scheme_limits(*f, rel, s);
  const TheoremCheck& c = fl.subject == "thm7" ? limits.thm7 : fl.subject == "thm9" ? limits.thm9 : limits.thm10;
  emit(check_json(c).dump(), out_path);
  return c.verdict == Verdict::Fail ? kExitVerdictFailure : kExitPass;
}

struct SweepFlags {
  int n_vars = 0;
  std::string json_out;
  bool allow_slow = false;
  bool no_dedupe = false;
};

int cmd_sweep(const SweepFlags& fl, const AscentFlags& ascent, const std::string& out_path, std::ostream& out) {
  if (fl.n_vars == 4 && !fl.allow_slow) throw std::invalid_argument("--nvars 4 needs --allow-slow");
  if (fl.n_vars < 1 || fl.n_vars > 4) throw std::invalid_argument("--nvars must be 1..4");
  SweepOptions options;
  options.dedupe_complements = !fl.no_dedupe;
  const SweepResult result = sweep_total_functions(fl.n_vars, ascent.config(), options);
  if (!fl.json_out.empty()) write_file(fl.json_out, sweep_to_json(result) + "\n");
  if (out_path.empty()) {
    out << sweep_to_csv(result);
  } else {
    write_file(out_path, sweep_to_csv(result));
    json summary;
    summary["functions"] = result.rows.size();
    summary["failures"] = result.failures;
    summary["verdict"] = result.failures == 0 ? "pass" : "fail";
    out << summary.dump() << '\n';
  }
  return result.failures == 0 ? kExitPass : kExitVerdictFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adversary lower bounds and certificate ceilings for small functions", "qadv"};
  app.require_subcommand(1);
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Certificate measures of a table");
  std::string table_path, measures = "c0,c1,c,c_minus";
  analyze->add_option("--table", table_path, "Table document (.tt or .json)")->required();
  analyze->add_option("--measures", measures, "Comma list of c0,c1,c,c_minus,ci,gamma")->capture_default_str();
  analyze->add_option("--out", out_path, "Output file (default stdout)");

  auto* optimize = app.add_subcommand("optimize", "Best known adversary bound of a table");
  AscentFlags ascent;
  std::string scheme_out, relation_out;
  optimize->add_option("--table", table_path, "Table document")->required();
  ascent.attach(optimize);
  optimize->add_option("--scheme-out", scheme_out, "Write the weight scheme JSON here");
  optimize->add_option("--relation-out", relation_out, "Write the relation JSON here");
  optimize->add_option("--out", out_path, "Output file (default stdout)");

  auto* instance = app.add_subcommand("instance", "Generate a construction and report its parameters");
  InstanceFlags inst;
  instance
      ->add_option("name", inst.name,
                   "bipartiteness, graph-matching, bipartite-matching, invert-permutation, andor-tree or function")
      ->required();
  instance->add_option("--n", inst.n, "Size parameter (tree height for andor-tree)")->required();
  instance->add_option("--k", inst.k, "Alphabet size for function")->capture_default_str();
  instance->add_option("--mode", inst.mode, "explicit or counting")->capture_default_str();
  instance->add_option("--variant", inst.variant, "two-paths or one-component")->capture_default_str();
  instance->add_option("--function", inst.function, "Named function for the function instance");
  instance->add_option("--seed", inst.seed, "Sampling seed")->capture_default_str();
  instance->add_option("--samples", inst.samples, "Random samples to check")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  instance->add_option("--relation-out", inst.relation_out, "Write the explicit relation JSON here");
  instance->add_option("--table-out", inst.table_out, "Write the truth table here (.json for JSON)");
  instance->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a bound ceiling on an instance or run a report");
  VerifyFlags vf;
  verify->add_option("subject", vf.subject, "thm6, thm7, thm9, thm10, gamma or distinctness")->required();
  verify->add_option("--table", vf.table, "Table document");
  verify->add_option("--scheme", vf.scheme, "Weight scheme JSON (default: uniform)");
  verify->add_option("--relation", vf.relation, "Relation JSON");
  verify->add_option("--nvars", vf.n_vars, "Number of variables for gamma");
  verify->add_option("--n", vf.n, "N for distinctness");
  verify->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Check every non-constant total function on n bits");
  SweepFlags sf;
  AscentFlags sweep_ascent;
  sweep->add_option("--nvars", sf.n_vars, "Number of variables (1-3; 4 with --allow-slow)")->required();
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");
  sweep->add_option("--json-out", sf.json_out, "Write the JSON report here");
  sweep->add_flag("--allow-slow", sf.allow_slow, "Permit the n=4 sweep");
  sweep->add_flag("--no-dedupe", sf.no_dedupe, "Compute complement rows directly");
  sweep_ascent.attach(sweep);

  std::vector<std::string> argv_store{"qadv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Emitter emit{out};
  try {
    if (analyze->parsed()) return cmd_analyze(table_path, measures, out_path, emit);
    if (optimize->parsed()) return cmd_optimize(table_path, ascent, scheme_out, relation_out, out_path, emit);
    if (instance->parsed()) return cmd_instance(inst, out_path, emit);
    if (verify->parsed()) return cmd_verify(vf, out_path, emit);
    if (sweep->parsed()) return cmd_sweep(sf, sweep_ascent, out_path, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitVerdictFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qadv::cli
