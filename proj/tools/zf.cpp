// zf: command-line front end for the zforce library.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 metric undefined (F under the loop rule with Z = 0).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zforce/zforce.hpp"

using json = nlohmann::ordered_json;
using namespace zforce;

namespace {

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kUndefined = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto start = text.find_first_not_of(" \t\r\n");
  std::istringstream src(text);
  if (start != std::string::npos && text.compare(start, 7, "digraph") == 0) return read_dot(src);
  return read_digraph(src);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::size_t to_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return static_cast<std::size_t>(v);
}

void need(const std::vector<std::string>& p, std::size_t k, const char* usage) {
  if (p.size() != k) throw UsageError(std::string("usage: gen ") + usage);
}

Digraph generate(const std::string& family, const std::vector<std::string>& p, bool bidirected) {
  if (family == "cycle") {
    need(p, 1, "cycle <n> [--bidirected]");
    std::size_t n = to_size(p[0], "n");
    return bidirected ? bidirected_cycle(n) : directed_cycle(n);
  }
  if (family == "path") {
    need(p, 1, "path <n> [--bidirected]");
    std::size_t n = to_size(p[0], "n");
    return bidirected ? bidirected_path(n) : directed_path(n);
  }
  if (family == "weakpath") {
    need(p, 1, "weakpath <orientations>");
    return weak_path(parse_orientation(p[0]));
  }
  if (family == "weakcycle") {
    need(p, 1, "weakcycle <orientations>");
    return weak_cycle(parse_orientation(p[0]));
  }
  if (family == "star") {
    need(p, 2, "star <t> <orientations>");
    return star(to_size(p[0], "t"), parse_orientation(p[1]));
  }
  if (family == "complete") {
    need(p, 1, "complete <n>");
    return complete_digraph(to_size(p[0], "n"));
  }
  if (family == "empty") {
    need(p, 1, "empty <n>");
    return empty_digraph(to_size(p[0], "n"));
  }
  if (family == "debruijn" || family == "kautz") {
    need(p, 2, "debruijn|kautz <d> <M>");
    int d = static_cast<int>(to_size(p[0], "d")), m = static_cast<int>(to_size(p[1], "M"));
    if (d < 1 || m < 1) throw UsageError("d and M must be positive");
    return family == "debruijn" ? de_bruijn(d, m) : kautz(d, m);
  }
  if (family == "outjoin") {
    need(p, 2, "outjoin <file> <file>");
    return outjoin(load(p[0]), load(p[1]));
  }
  if (family == "linegraph") {
    need(p, 1, "linegraph <file>");
    return line_digraph(load(p[0])).graph;
  }
  if (family == "union") {
    if (p.empty()) throw UsageError("usage: gen union <file>...");
    std::vector<Digraph> parts;
    for (const auto& f : p) parts.push_back(load(f));
    return disjoint_union(parts);
  }
  if (family == "fcycle") {
    need(p, 2, "fcycle <n> <k>");
    return construct_weak_cycle(to_size(p[0], "n"), to_size(p[1], "k"));
  }
  throw UsageError("unknown family '" + family + "'");
}

json set_json(const VertexSet& s) { return s.members(); }

/// Prints a record as "key: value" lines, or as one JSON object.
void print_record(const json& rec, bool as_json) {
  if (as_json) {
    std::cout << rec.dump() << '\n';
    return;
  }
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    std::cout << it.key() << ": ";
    if (it->is_string())
      std::cout << it->get<std::string>();
    else if (it->is_array() && !it->empty() && it->front().is_number()) {
      std::cout << '{';
      for (std::size_t i = 0; i < it->size(); ++i) std::cout << (i ? "," : "") << (*it)[i].get<int>();
      std::cout << '}';
    } else if (it->is_array() && it->empty())
      std::cout << "{}";
    else
      std::cout << it->dump();
    std::cout << '\n';
  }
}

VertexSet parse_set(const std::string& text, std::size_t n) {
  VertexSet s(n);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t v = to_size(item, "vertex");
    if (v >= n) throw UsageError("vertex " + item + " outside the digraph");
    s.insert(static_cast<int>(v));
  }
  return s;
}

unsigned env_threads() {
  if (const char* t = std::getenv("ZFORCE_THREADS")) {
    try {
      return static_cast<unsigned>(std::max(1, std::stoi(t)));
    } catch (const std::exception&) {
      throw UsageError("ZFORCE_THREADS must be a positive integer");
    }
  }
  return 1;
}

int run_compute(const std::string& metric, const std::string& file, bool exact, const std::string& set_text,
                bool as_json, const SolverOptions& opt) {
  Digraph d = load(file);
  json rec;
  rec["n"] = d.order();
  rec["metric"] = metric;
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  int status = 0;

  if (metric == "Z") {
    auto z = zero_forcing_number(d, opt);
    rec["value"] = z.value;
    rec["witness"] = set_json(z.witness);
    rec["method"] = "exact";
    rec["sets_examined"] = z.stats.sets_examined;
  } else if (metric == "F") {
    auto r = exact ? exact_failed_zero_forcing(d, opt) : auto_failed_zero_forcing(d, opt);
    rec["value"] = r.value ? json(*r.value) : json(nullptr);
    rec["witness"] = r.witness ? set_json(*r.witness) : json(nullptr);
    rec["method"] = to_string(r.method);
    if (!r.family.empty()) rec["family"] = r.family;
    if (!r.value) {
      rec["reason"] = "Z=0 under loop rule";
      if (d.order() == 0) rec["reason"] = "empty digraph";
      status = kUndefined;
    }
    if (r.method == Method::Exact) {
      rec["sets_examined"] = r.stats.sets_examined;
      rec["nodes"] = r.stats.nodes;
    }
  } else if (metric == "mincrit") {
    SearchStats stats;
    const bool strong = d.has_loops();
    auto w = min_critical_set(d, strong, opt, &stats);
    rec["value"] = w ? json(w->size()) : json(nullptr);
    rec["witness"] = w ? set_json(*w) : json(nullptr);
    rec["strong"] = strong;
    rec["method"] = "exact";
    rec["nodes"] = stats.nodes;
  } else if (metric == "closure") {
    VertexSet s = parse_set(set_text, d.order());
    auto t = closure(d, s);
    rec["value"] = t.final.size();
    rec["witness"] = set_json(t.final);
    rec["zfs"] = t.final.size() == d.order();
    rec["rounds"] = t.rounds;
    json forces = json::array();
    for (const auto& c : t.changes) forces.push_back({c.round, c.forcer, c.forced});
    if (as_json)
      rec["forces"] = forces;
    else {
      std::string text;
      for (const auto& c : t.changes)
        text += (text.empty() ? "" : " ") + std::to_string(c.round) + ":" + std::to_string(c.forcer) + "->" +
                std::to_string(c.forced);
      rec["forces"] = text;
    }
    rec["method"] = "exact";
  } else {
    throw UsageError("unknown metric '" + metric + "' (Z, F, mincrit, closure)");
  }
  rec["elapsed_ms"] = elapsed();
  print_record(rec, as_json);
  return status;
}

int run_classify(const std::string& file, bool as_json) {
  Digraph d = load(file);
  auto c = classify_f_less_than_z(d);
  json rec;
  rec["n"] = d.order();
  rec["class"] = to_string(c.kind);
  if (!c.removed_cycles.empty()) {
    std::string text;
    for (const auto& cyc : c.removed_cycles) {
      text += text.empty() ? "" : " ";
      for (std::size_t i = 0; i < cyc.size(); ++i) text += (i ? "->" : "") + std::to_string(cyc[i]);
    }
    rec["removed_cycles"] = as_json ? json(c.removed_cycles) : json(text);
  }
  if (c.distinguished) rec["distinguished"] = *c.distinguished;
  if (c.pendant_head) rec["pendant_head"] = *c.pendant_head;
  if (!c.dominating.empty()) rec["dominating"] = c.dominating;
  if (auto k = critical_threshold(d)) rec["critical_threshold"] = *k;
  if (is_oriented(d)) rec["oriented_class"] = to_string(classify_oriented(d));
  print_record(rec, as_json);
  return 0;
}

int run_enumerate(const std::string& what, const std::string& file, bool as_json, const SolverOptions& opt) {
  Digraph d = load(file);
  std::vector<VertexSet> sets;
  if (what == "minimal-zfs")
    sets = enumerate_minimal_zfs(d, opt);
  else if (what == "maximal-fzfs")
    sets = enumerate_maximal_fzfs(d, opt);
  else
    throw UsageError("unknown enumeration '" + what + "' (minimal-zfs, maximal-fzfs)");
  if (as_json) {
    json rec;
    rec["n"] = d.order();
    rec["kind"] = what;
    rec["count"] = sets.size();
    rec["sets"] = json::array();
    for (const auto& s : sets) rec["sets"].push_back(set_json(s));
    std::cout << rec.dump() << '\n';
  } else {
    for (const auto& s : sets) std::cout << s.to_string() << '\n';
    std::cout << "count: " << sets.size() << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, std::size_t max_n, bool as_json) {
  SweepReport r;
  if (suite == "duality")
    r = sweep_duality(max_n);
  else if (suite == "formulas")
    r = sweep_formulas();
  else if (suite == "census3")
    r = sweep_census(3);
  else if (suite == "census4")
    r = sweep_census(4);
  else if (suite == "oriented5")
    r = sweep_oriented(5);
  else if (suite == "kernel")
    r = sweep_kernel();
  else
    throw UsageError("unknown suite '" + suite + "' (duality, formulas, census3, census4, oriented5, kernel)");
  if (as_json) {
    json rec{{"suite", r.suite}, {"checked", r.checked}, {"unit", r.unit}, {"mismatches", r.mismatches}};
    rec["counterexample"] = r.counterexample ? json(format_digraph(*r.counterexample)) : json(nullptr);
    std::cout << rec.dump() << '\n';
  } else {
    std::cout << r.checked << ' ' << r.unit << ", " << r.mismatches << " mismatches\n";
    if (r.counterexample) std::cout << "first counterexample:\n" << format_digraph(*r.counterexample);
  }
  return r.ok() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing and failed zero forcing on digraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zf 0.1.0");

  std::string out_path, family;
  std::vector<std::string> params;
  bool bidirected = false;
  auto* gen = app.add_subcommand("gen", "Generate a digraph in the text format");
  gen->add_option("family", family, "cycle path weakpath weakcycle star complete empty debruijn kautz outjoin "
                                    "linegraph union fcycle")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");
  gen->add_flag("--bidirected", bidirected, "cycle/path: use 2-cycles for every edge");

  std::string metric, file, set_text;
  bool exact = false, as_json = false;
  std::size_t bound = 20;
  unsigned threads = 0;
  auto* compute = app.add_subcommand("compute", "Compute Z, F, a minimum critical set or a closure");
  compute->add_option("metric", metric, "Z | F | mincrit | closure")->required();
  compute->add_option("file", file, "Digraph file (text or DOT)")->required();
  auto* exact_flag = compute->add_flag("--exact", exact, "Always use the exhaustive solver");
  compute->add_flag("--auto", "Use a closed form when one applies (default)")->excludes(exact_flag);
  compute->add_option("--set", set_text, "Initial set for closure, e.g. 0,3");
  compute->add_flag("--json", as_json, "Print one JSON record");
  compute->add_option("--bound", bound, "Largest order the exhaustive solvers accept")->capture_default_str();
  compute->add_option("--threads", threads, "Worker threads (default ZFORCE_THREADS or 1)");

  auto* classify = app.add_subcommand("classify", "Recognise the digraph families with F < Z");
  classify->add_option("file", file)->required();
  classify->add_flag("--json", as_json);

  std::string what;
  auto* enumerate = app.add_subcommand("enumerate", "List minimal ZFS or maximal FZFS");
  enumerate->add_option("what", what, "minimal-zfs | maximal-fzfs")->required();
  enumerate->add_option("file", file)->required();
  enumerate->add_flag("--json", as_json);
  enumerate->add_option("--bound", bound)->capture_default_str();
  enumerate->add_option("--threads", threads);

  std::string suite;
  std::size_t max_n = 4;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify->add_option("suite", suite, "duality | formulas | census3 | census4 | oriented5 | kernel")->required();
  verify->add_option("--max-n", max_n, "duality: largest order")->capture_default_str()->check(CLI::Range(1, 5));
  verify->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("export-dot", "Write a digraph in Graphviz DOT");
  dot->add_option("file", file)->required();
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    SolverOptions opt;
    opt.max_vertices = bound;
    opt.threads = threads ? threads : env_threads();

    if (*gen) {
      emit(out_path, format_digraph(generate(family, params, bidirected)));
      return 0;
    }
    if (*compute) return run_compute(metric, file, exact, set_text, as_json, opt);
    if (*classify) return run_classify(file, as_json);
    if (*enumerate) return run_enumerate(what, file, as_json, opt);
    if (*verify) return run_verify(suite, max_n, as_json);
    if (*dot) {
      emit(out_path, format_dot(load(file)));
      return 0;
    }
  } catch (const UndefinedMetric& e) {
    std::cerr << "zf: " << e.what() << '\n';
    return kUndefined;
  } catch (const ParseError& e) {
    std::cerr << "zf: " << (file.empty() ? std::string() : file + ": ") << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "zf: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
