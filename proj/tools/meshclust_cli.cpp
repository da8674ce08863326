#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshclust/meshclust.hpp"

using namespace meshclust;

namespace {

constexpr std::size_t kStdoutLimit = 8192;

struct Options {
  std::string format = "text";
  std::string output;
  std::string golden;
  bool toStdout = false;
  bool check = false;
  int jobs = 1;
};

TerminalData load_terminal(const std::string& path, const std::string& t) {
  Json j = read_json_file(path);
  if (j.contains("quiver")) {
    TerminalData td = terminal_from_json(j);
    if (!t.empty()) td.t = parse_int_list(t);
    check_terminal(td);
    return td;
  }
  TerminalData td{quiver_from_json(j), {}};
  if (!t.empty())
    td.t = parse_int_list(t);
  else if (j.contains("t"))
    td.t = j.at("t").get<std::vector<int>>();
  else
    throw ParseError("no level vector: pass --t or add \"t\" to " + path);
  check_terminal(td);
  return td;
}

Ordering load_ordering(const CategoryModel& cat, const std::string& arg) {
  if (arg.empty() || arg == "canonical") return canonical_ordering(cat);
  if (arg.rfind("file:", 0) != 0) throw ParseError("--ordering must be 'canonical' or 'file:PATH'");
  Ordering ord = ordering_from_json(read_json_file(arg.substr(5)));
  validate_ordering(cat, ord);
  return ord;
}

std::string default_output(const std::string& command, const std::string& format) {
  return "meshclust-" + command + (format == "json" ? ".json" : format == "dot" ? ".dot" : ".txt");
}

std::string first_difference(const std::string& got, const std::string& want) {
  std::istringstream a(got), b(want);
  std::string la, lb;
  for (int line = 1;; ++line) {
    bool ea = !std::getline(a, la), eb = !std::getline(b, lb);
    if (ea && eb) return "";
    if (ea || eb || la != lb) {
      std::ostringstream out;
      out << "line " << line << ":\n- " << (eb ? "<end of golden file>" : lb) << "\n+ "
          << (ea ? "<end of output>" : la) << "\n";
      return out.str();
    }
  }
}

/// Write the report, compare against a golden file, and return the exit code.
int emit(const std::string& command, const std::string& report, const Options& opt) {
  if (!opt.golden.empty()) {
    std::ifstream in(opt.golden);
    if (!in) throw ParseError("cannot open golden file " + opt.golden);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string diff = first_difference(report, buf.str());
    if (!diff.empty()) {
      std::cout << "FAIL " << command << " differs from " << opt.golden << "\n" << diff;
      return 1;
    }
    std::cout << "PASS " << command << " matches " << opt.golden << "\n";
    return 0;
  }
  std::string path = opt.output;
  if (path.empty() && report.size() > kStdoutLimit && !opt.toStdout) path = default_output(command, opt.format);
  if (path.empty() || path == "-") {
    std::cout << report;
    return 0;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << report;
  std::cerr << "wrote " << report.size() << " bytes to " << path << "\n";
  return 0;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw ParseError("format '" + opt.format + "' is not available for this command");
}

int cmd_build(const std::string& quiver, const std::string& t, const std::string& ordering,
              const std::string& seedOut, const Options& opt) {
  require_format(opt, {"text", "json", "dot"});
  CategoryModel cat = build_category(load_terminal(quiver, t));
  Ordering ord = load_ordering(cat, ordering);
  if (!seedOut.empty()) {
    std::ofstream out(seedOut);
    if (!out) throw ParseError("cannot write " + seedOut);
    out << dump(to_json(initial_seed(cat, ord)));
  }
  if (opt.format == "json") return emit("build", dump(category_json(cat, ord)), opt);
  if (opt.format == "dot") return emit("build", category_dot(cat), opt);
  return emit("build", category_text(cat, ord), opt);
}

std::string vector_text(const std::optional<CategoryModel>& cat, const IntVec& v) {
  if (cat && v.size() == cat->size()) return triangle(*cat, v);
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

int cmd_mutate(const std::string& seedPath, const std::string& seq, const std::string& seedOut, const Options& opt) {
  require_format(opt, {"text", "json"});
  Seed seed = seed_from_json(read_json_file(seedPath));
  std::optional<CategoryModel> cat;
  if (seed.terminal) cat = build_category(*seed.terminal);
  std::ostringstream text;
  Json steps = Json::array();
  int n = 0;
  for (int v : parse_int_list(seq)) {
    if (v < 1 || static_cast<std::size_t>(v) > seed.size()) throw IndexError("vertex " + std::to_string(v) + " out of range");
    const std::size_t k = static_cast<std::size_t>(v - 1);
    MutationResult m = mutate(seed, k);
    Json st{{"step", ++n}, {"vertex", v}};
    text << "step " << n << ": mutate vertex " << v;
    if (seed.labels[k]) text << " " << to_string(*seed.labels[k]);
    text << "\n";
    if (seed.vars) {
      const auto& vars = *seed.vars;
      const std::size_t nv = vars[k].nvars();
      LaurentPoly p = LaurentPoly::one(nv), q = LaurentPoly::one(nv);
      for (const auto& [i, e] : m.outFactors) p = p * vars[i].pow(static_cast<unsigned>(e));
      for (const auto& [i, e] : m.inFactors) q = q * vars[i].pow(static_cast<unsigned>(e));
      std::string den = vars[k].to_string(seed.names);
      if (!vars[k].is_monomial()) den = "(" + den + ")";
      std::string rel = "(" + (p + q).to_string(seed.names) + ")/" + den;
      std::string value = (*m.seed.vars)[k].to_string(seed.names);
      text << "  relation " << rel << "\n  new variable " << value << "\n";
      st["relation"] = rel;
      st["variable"] = value;
    }
    if (m.dim) {
      text << "  dims " << vector_text(cat, m.dim->value) << (m.dim->dominance ? "" : " (no dominance)") << "\n";
      st["dims"] = m.dim->value;
      st["dominance"] = m.dim->dominance;
    }
    if (m.delta) {
      text << "  delta " << vector_text(cat, m.delta->value) << "\n";
      st["delta"] = m.delta->value;
    }
    if (!m.seed.labels.empty() && m.seed.labels[k]) {
      text << "  label " << to_string(*m.seed.labels[k]) << "\n";
      st["label"] = to_json(*m.seed.labels[k]);
    }
    steps.push_back(st);
    seed = std::move(m.seed);
  }
  if (!seedOut.empty()) {
    std::ofstream out(seedOut);
    if (!out) throw ParseError("cannot write " + seedOut);
    out << dump(to_json(seed));
  }
  if (opt.format == "json") return emit("mutate", dump(Json{{"steps", steps}, {"seed", to_json(seed)}}), opt);
  return emit("mutate", text.str(), opt);
}

int cmd_path(const std::string& quiver, const std::string& t, const std::string& order, bool noExpand,
             const Options& opt) {
  require_format(opt, {"text", "json"});
  CategoryModel cat = build_category(load_terminal(quiver, t));
  std::optional<std::vector<int>> qorder;
  if (!order.empty()) qorder = parse_int_list(order);
  Schedule sch = make_schedule(cat, qorder);
  PathResult res = run_path(cat, initial_seed(cat, canonical_ordering(cat), !noExpand), sch);
  bool matrixOk = final_matrix_matches(cat, res.seed);
  if (!matrixOk) throw ScheduleMismatchError("final exchange matrix differs from B(Gamma_M*)");
  if (opt.format == "json") {
    Json j = path_json(cat, res, matrixOk);
    if (noExpand) j.erase("steps");
    if (!noExpand && res.seed.vars) {
      Json vars = Json::array();
      for (const auto& v : *res.seed.vars) vars.push_back(v.to_string(res.seed.names));
      j["finalVariables"] = vars;
    }
    return emit("path", dump(j), opt);
  }
  std::string report = path_text(cat, res, matrixOk, noExpand);
  if (!noExpand && res.seed.vars) {
    report += "final cluster variables:\n";
    for (std::size_t k = 0; k < res.seed.size(); ++k)
      report += "  " + (res.seed.labels[k] ? to_string(*res.seed.labels[k]) : std::string("?")) + " = " +
                (*res.seed.vars)[k].to_string(res.seed.names) + "\n";
  }
  return emit("path", report, opt);
}

int cmd_euler(const std::string& quiver, const std::string& t, const std::string& ordering, std::size_t k,
              const Options& opt) {
  require_format(opt, {"text", "json"});
  CategoryModel cat = build_category(load_terminal(quiver, t));
  Ordering ord = load_ordering(cat, ordering);
  if (k < 1 || k > cat.size()) throw IndexError("k must lie in 1.." + std::to_string(cat.size()));
  ShuffleSeries g = g_module(cat, ord, k);
  if (opt.format == "json") return emit("euler", dump(Json{{"k", k}, {"words", g.size()}, {"series", to_json(g)}}), opt);
  return emit("euler", g.to_string() + "\n", opt);
}

int cmd_minors(int n, const std::string& mode, int sweeps, const Options& opt) {
  require_format(opt, {"text", "json"});
  if (mode != "eta" && mode != "prop" && mode != "all") throw ParseError("--mode must be eta, prop or all");
  std::ostringstream text;
  Json j;
  bool ok = true;
  auto names = default_names(upper_count(n + 1), "x");
  if (mode != "prop") {
    Json rows = Json::array();
    for (const auto& e : eta_entries(n)) {
      ok = ok && e.ok;
      text << to_string(e.label) << " " << to_string(e.key) << " = " << e.minor.to_string(names) << " "
           << (e.ok ? "PASS" : "FAIL") << "\n";
      if (!e.ok) text << "  expansion gives " << e.expanded.to_string(names) << "\n";
      Json r = minor_json(e.key, e.minor, names, e.label);
      r["status"] = e.ok ? "pass" : "fail";
      rows.push_back(r);
    }
    j["eta"] = rows;
  }
  if (mode != "eta") {
    CategoryModel cat = build_category(linear_terminal(n));
    Ordering ord = canonical_ordering(cat);
    auto seq = sweep_sequence(n, sweeps);
    Json rows = Json::array();
    for (const auto& e : prop_minor_entries(cat, ord, seq)) {
      ok = ok && e.ok;
      text << "g_" << e.k << " " << to_string(e.key) << " " << (e.ok ? "PASS" : "FAIL") << "\n";
      rows.push_back({{"k", e.k}, {"I", e.key.I}, {"J", e.key.J}, {"status", e.ok ? "pass" : "fail"}});
    }
    j["prop"] = rows;
  }
  text << (ok ? "PASS" : "FAIL") << "\n";
  j["passed"] = ok;
  int code = emit("minors", opt.format == "json" ? dump(j) : text.str(), opt);
  return ok ? code : 1;
}

int cmd_check(const std::string& manifest, const Options& opt) {
  auto results = run_checks(example_checks(), opt.jobs);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.description << "\n";
    if (!r.passed) std::cout << "  " << r.detail;
  }
  if (!manifest.empty()) {
    std::ofstream out(manifest);
    if (!out) throw ParseError("cannot write " + manifest);
    out << dump(manifest_json(results));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mesh categories, cluster seeds and their mutation calculi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string manifest;
  app.add_option("--format", opt.format, "Output format: text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output,-o", opt.output, "Write the report to this file ('-' for stdout)");
  app.add_flag("--stdout", opt.toStdout, "Print large reports instead of writing them to a file");
  app.add_option("--golden", opt.golden, "Compare the report with this file instead of printing it");
  app.add_flag("--check", opt.check, "Also run the built-in example checks");
  app.add_option("--jobs,-j", opt.jobs, "Threads for independent checks")->check(CLI::PositiveNumber);
  app.add_option("--manifest", manifest, "Write the check manifest (JSON) to this file");

  std::string quiver, t, ordering = "canonical", seedOut, seedPath, seq, order;
  std::size_t k = 0;
  bool noExpand = false;
  int n = 4, sweeps = 2;
  std::string mode = "all";

  auto* build = app.add_subcommand("build", "Build the category and print its report");
  build->add_option("quiver", quiver, "Quiver JSON file")->required();
  build->add_option("--t", t, "Level vector, e.g. 2,1,1");
  build->add_option("--ordering", ordering, "canonical or file:PATH");
  build->add_option("--seed-out", seedOut, "Also write the initial seed as JSON");

  auto* mut = app.add_subcommand("mutate", "Mutate a seed along a vertex sequence");
  mut->add_option("seed", seedPath, "Seed JSON file")->required();
  mut->add_option("--seq", seq, "Vertices, 1-based, e.g. 3,1")->required();
  mut->add_option("--seed-out", seedOut, "Write the final seed as JSON");

  auto* path = app.add_subcommand("path", "Run the mutation schedule to the dual seed");
  path->add_option("quiver", quiver, "Quiver JSON file")->required();
  path->add_option("--t", t, "Level vector");
  path->add_option("--order", order, "Adapted numbering of the vertices of Q, e.g. 3,1,2");
  path->add_flag("--no-expand", noExpand, "Track labels and vectors only, no cluster variables");

  auto* euler = app.add_subcommand("euler", "Generating function of Euler characteristics for T_k");
  euler->add_option("quiver", quiver, "Quiver JSON file")->required();
  euler->add_option("--t", t, "Level vector");
  euler->add_option("--ordering", ordering, "canonical or file:PATH");
  euler->add_option("--k", k, "Summand index, 1-based")->required();

  auto* minors = app.add_subcommand("minors", "Check dual PBW expansions and g-series against minors in type A");
  minors->add_option("--n", n, "Rank of the linear quiver")->check(CLI::Range(1, 7));
  minors->add_option("--mode", mode, "eta, prop or all");
  minors->add_option("--sweeps", sweeps, "Repetitions in the evaluation sequence")->check(CLI::Range(1, 4));

  auto* check = app.add_subcommand("check", "Run the built-in example checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    int code = 0;
    if (*build) code = cmd_build(quiver, t, ordering, seedOut, opt);
    if (*mut) code = cmd_mutate(seedPath, seq, seedOut, opt);
    if (*path) code = cmd_path(quiver, t, order, noExpand, opt);
    if (*euler) code = cmd_euler(quiver, t, ordering, k, opt);
    if (*minors) code = cmd_minors(n, mode, sweeps, opt);
    if (*check) code = cmd_check(manifest, opt);
    if (opt.check && !*check) code = std::max(code, cmd_check(manifest, opt));
    return code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.verification() ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
