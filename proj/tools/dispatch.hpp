#pragma once

// Command dispatch for the multishell CLI.
//
// Exit codes: 0 affirmative / constructed, 1 decided negative, 2 input error,
// 3 search cap exceeded.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multishell/multishell.hpp"
#include "multishell/serialize.hpp"

namespace multishell::cli {

enum exit_code : int { affirmative = 0, negative = 1, input_error = 2, cap_exceeded = 3 };

struct options {
  std::string command;
  std::string file;
  std::string text;
  std::optional<std::size_t> vars;
  bool json_out = false;
  std::string order;
  std::size_t split = 0;
  std::string strategy = "exhaustive";
  std::string via = "search";
  search_options search;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "decompose", "ass",   "dimfilt",           "borel",    "pret",      "facets",
      "maxfacets", "arithdeg", "check-shelling", "shell",    "check-maxshelling",
      "maxshell",  "filtration", "verify-filtration", "simplicial-clean"};
  return names;
}

inline std::string usage() {
  std::ostringstream os;
  os << "usage: multishell <command> [FILE] [--text INPUT] [options]\n\ncommands:\n";
  for (const auto& c : commands()) os << "  " << c << "\n";
  os << "\ninput is read from FILE, --text, or standard input; either an ideal such as\n"
        "\"x1^2, x1*x2\" or a JSON document (kinds: ideal, multicomplex, simplicial, filtration).\n"
        "run `multishell <command> --help` for the options.\n";
  return os.str();
}

namespace detail {

class text_table {
 public:
  void row(std::string label, std::string value) { rows_.emplace_back(std::move(label), std::move(value)); }
  void print(std::ostream& os) const {
    std::size_t w = 0;
    for (const auto& [l, v] : rows_) w = std::max(w, l.size());
    for (const auto& [l, v] : rows_) os << std::left << std::setw(static_cast<int>(w + 2)) << l << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

template <typename T, typename Fn>
std::string join(const std::vector<T>& v, Fn fn, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += fn(v[i]);
  }
  return s;
}

inline std::string faces_string(const std::vector<face>& v) {
  if (v.empty()) return "-";
  return join(v, [](const face& f) { return to_string(f); });
}

inline std::string primes_string(const std::vector<monomial_prime>& v) {
  return join(v, [](const monomial_prime& p) { return to_string(p); });
}

inline std::string vars_string(const std::vector<std::size_t>& v) {
  return "{" + join(v, [](std::size_t i) { return std::to_string(i + 1); }, ",") + "}";
}

inline json vars_json(const std::vector<std::size_t>& v) {
  json j = json::array();
  for (auto i : v) j.push_back(i + 1);
  return j;
}

// Input, as read: either an ideal or a JSON document.
struct input {
  std::optional<monomial_ideal> ideal;
  std::optional<json> doc;
};

inline input read_input(const options& o, std::istream& in) {
  std::string text;
  if (!o.text.empty()) {
    text = o.text;
  } else if (!o.file.empty() && o.file != "-") {
    std::ifstream f(o.file);
    if (!f) throw error("cannot open " + o.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto first = text.find_first_not_of(" \t\r\n");
  input out;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    out.doc = json::parse(text);
    if (out.doc->is_object() && out.doc->value("kind", "") == "ideal") {
      out.ideal = ideal_from_document(*out.doc);
      out.doc.reset();
    }
  } else {
    out.ideal = parse_ideal(text, o.vars);
  }
  return out;
}

inline monomial_ideal require_ideal(const input& in) {
  if (in.ideal) return *in.ideal;
  if (in.doc && (in.doc->is_array() || in.doc->value("kind", "") == "multicomplex"))
    return ideal_from_multicomplex(parse_multicomplex(*in.doc));
  throw schema_error("this command needs an ideal or a multicomplex");
}

inline multicomplex require_multicomplex(const input& in) {
  if (in.ideal) return multicomplex_from_ideal(*in.ideal);
  if (in.doc && (in.doc->is_array() || in.doc->value("kind", "") == "multicomplex"))
    return parse_multicomplex(*in.doc);
  throw schema_error("this command needs an ideal or a multicomplex");
}

inline std::vector<face> parse_order(const options& o, std::size_t n) {
  if (o.order.empty()) throw error("--order is required");
  return faces_from_json(json::parse(o.order), n);
}

inline json step_json(const shelling_step& st, std::size_t i) {
  json j = {{"index", i + 1}, {"intersection", to_json(st.intersection)}};
  j["cond1"] = to_string(st.cond1);
  j["cond2"] = {{"status", to_string(st.cond2)}, {"offenders", to_json(st.cond2_offenders)}};
  j["cond3"] = {{"status", to_string(st.cond3)}, {"offenders", vars_json(st.cond3_offenders)}};
  json pairs = json::array();
  for (auto [a, b] : st.cond4_offenders) pairs.push_back({a + 1, b + 1});
  j["cond4"] = {{"status", to_string(st.cond4)}, {"offenders", pairs}};
  return j;
}

inline json verdict_json(const shelling_verdict& v) {
  json steps = json::array();
  for (std::size_t i = 0; i < v.steps.size(); ++i) steps.push_back(step_json(v.steps[i], i));
  return {{"order", to_json(v.order)}, {"overall", v.overall}, {"steps", steps}};
}

inline void print_verdict(std::ostream& os, const shelling_verdict& v) {
  os << "order: " << faces_string(v.order) << "\n";
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& st = v.steps[i];
    os << "  " << std::setw(2) << i + 1 << "  " << std::left << std::setw(24) << to_string(v.order[i]) << std::right
       << " (1) " << std::setw(4) << to_string(st.cond1) << "  (2) " << std::setw(4) << to_string(st.cond2)
       << "  (3) " << std::setw(4) << to_string(st.cond3) << "  (4) " << std::setw(4) << to_string(st.cond4)
       << "  cap: " << faces_string(st.intersection);
    if (!st.cond2_offenders.empty()) os << "  not neighbours: " << faces_string(st.cond2_offenders);
    if (!st.cond3_offenders.empty()) os << "  unwitnessed coords: " << vars_string(st.cond3_offenders);
    for (auto [a, b] : st.cond4_offenders) os << "  ip pair (" << a + 1 << "," << b + 1 << ")";
    os << "\n";
  }
  os << "overall: " << (v.overall ? "pass" : "fail") << "\n";
}

inline json maxverdict_json(const maximal_shelling_verdict& v) {
  json steps = json::array();
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& st = v.steps[i];
    json pairs = json::array();
    for (auto [a, b] : st.cond3_offenders) pairs.push_back({a + 1, b + 1});
    steps.push_back({{"index", i + 1},
                     {"intersection", to_json(st.intersection)},
                     {"cond1", to_string(st.cond1)},
                     {"cond2", {{"status", to_string(st.cond2)}, {"offenders", to_json(st.cond2_offenders)}}},
                     {"cond3", {{"status", to_string(st.cond3)}, {"offenders", pairs}}}});
  }
  return {{"order", to_json(v.order)}, {"split", v.split}, {"overall", v.overall}, {"steps", steps}};
}

inline void print_maxverdict(std::ostream& os, const maximal_shelling_verdict& v) {
  os << "order: " << faces_string(v.order) << "   split s = " << v.split << "\n";
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    const auto& st = v.steps[i];
    os << "  " << std::setw(2) << i + 1 << "  " << std::left << std::setw(24) << to_string(v.order[i]) << std::right
       << " (1) " << std::setw(4) << to_string(st.cond1) << "  (2) " << std::setw(4) << to_string(st.cond2)
       << "  (3) " << std::setw(4) << to_string(st.cond3) << "  cap: " << faces_string(st.intersection);
    if (!st.cond2_offenders.empty()) os << "  multi-coordinate: " << faces_string(st.cond2_offenders);
    for (auto [a, b] : st.cond3_offenders) os << "  ip pair (" << a + 1 << "," << b + 1 << ")";
    os << "\n";
  }
  os << "overall: " << (v.overall ? "pass" : "fail") << "\n";
}

inline json flags_json(const filtration_flags& f) {
  return {{"prime", f.prime}, {"clean", f.clean}, {"pretty_clean", f.pretty_clean}, {"almost_clean", f.almost_clean}};
}

inline void print_filtration(std::ostream& os, const prime_filtration& f) {
  os << "base: " << to_string(f.base) << "\n";
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& st = f.steps[i];
    os << "  " << std::setw(2) << i + 1 << "  + " << std::left << std::setw(16) << to_string(st.witness)
       << " prime " << std::setw(18) << to_string(st.prime) << std::right << " deg " << st.witness.total_degree()
       << "   before: " << to_string(st.before) << "\n";
  }
  const auto& c = f.classification;
  os << "length " << f.steps.size() << "; prime " << (c.prime ? "yes" : "no") << ", clean "
     << (c.clean ? "yes" : "no") << ", pretty clean " << (c.pretty_clean ? "yes" : "no") << ", almost clean "
     << (c.almost_clean ? "yes" : "no") << "\n";
}

inline json filtration_json(const prime_filtration& f) {
  json j = filtration_document(f);
  j["length"] = f.steps.size();
  j["classification"] = flags_json(f.classification);
  return j;
}

// ---------------------------------------------------------------------------
// commands

inline int cmd_decompose(const options& o, const input& in, std::ostream& out) {
  const auto ideal = require_ideal(in);
  const auto rep = primary_decomposition(ideal);
  if (o.json_out) {
    json irr = json::array(), prim = json::array(), by_dim = json::object();
    for (const auto& q : rep.irreducible_components) irr.push_back(generators_json(q));
    for (const auto& c : rep.primary_components)
      prim.push_back({{"ideal", generators_json(c.ideal)}, {"prime", to_json(c.prime)},
                      {"dimension", c.prime.dimension()}});
    for (const auto& [d, ps] : rep.ass_by_dim) {
      json a = json::array();
      for (const auto& p : ps) a.push_back(to_json(p));
      by_dim[std::to_string(d)] = a;
    }
    json ass = json::array(), mins = json::array();
    for (const auto& p : rep.ass) ass.push_back(to_json(p));
    for (const auto& p : rep.min_primes) mins.push_back(to_json(p));
    out << json{{"ideal", ideal_document(ideal)}, {"irreducible_components", irr}, {"primary_components", prim},
                {"ass", ass}, {"min", mins}, {"ass_by_dim", by_dim}}
               .dump(2)
        << "\n";
    return affirmative;
  }
  text_table t;
  t.row("ideal", to_string(ideal));
  for (const auto& q : rep.irreducible_components) t.row("irreducible", "(" + to_string(q) + ")");
  for (const auto& c : rep.primary_components)
    t.row("primary", "(" + to_string(c.ideal) + ")   radical " + to_string(c.prime) + "  dim " +
                         std::to_string(c.prime.dimension()));
  t.row("Ass", primes_string(rep.ass));
  t.row("Min", primes_string(rep.min_primes));
  for (auto it = rep.ass_by_dim.rbegin(); it != rep.ass_by_dim.rend(); ++it)
    t.row("Ass^" + std::to_string(it->first), primes_string(it->second));
  t.print(out);
  return affirmative;
}

inline int cmd_ass(const options& o, const input& in, std::ostream& out) {
  const auto ideal = require_ideal(in);
  const auto rep = primary_decomposition(ideal);
  if (o.json_out) {
    json ass = json::array(), mins = json::array();
    for (const auto& p : rep.ass) ass.push_back({{"prime", to_json(p)}, {"dimension", p.dimension()}});
    for (const auto& p : rep.min_primes) mins.push_back(to_json(p));
    out << json{{"ass", ass}, {"min", mins}, {"totally_ordered", ass_totally_ordered(ideal)}}.dump(2) << "\n";
    return affirmative;
  }
  text_table t;
  for (const auto& p : rep.ass) t.row(to_string(p), "dim " + std::to_string(p.dimension()));
  t.row("Min", primes_string(rep.min_primes));
  t.row("totally ordered", ass_totally_ordered(ideal) ? "yes" : "no");
  t.print(out);
  return affirmative;
}

inline int cmd_dimfilt(const options& o, const input& in, std::ostream& out) {
  const auto ideal = require_ideal(in);
  const auto levels = dimension_filtration(ideal);
  if (o.json_out) {
    json j = json::array();
    for (const auto& l : levels) j.push_back({{"dimension", l.dimension}, {"ideal", generators_json(l.ideal)}});
    out << json{{"levels", j}}.dump(2) << "\n";
    return affirmative;
  }
  text_table t;
  for (const auto& l : levels)
    t.row("d = " + std::to_string(l.dimension), l.ideal.is_unit() ? "S" : "(" + to_string(l.ideal) + ")");
  t.print(out);
  return affirmative;
}

inline int cmd_borel(const options& o, const input& in, std::ostream& out) {
  const bool b = is_borel_type(require_ideal(in));
  if (o.json_out)
    out << json{{"borel_type", b}}.dump(2) << "\n";
  else
    out << "Borel type: " << (b ? "yes" : "no") << "\n";
  return b ? affirmative : negative;
}

inline int cmd_pret(const options& o, const input& in, std::ostream& out) {
  const auto ideal = require_ideal(in);
  const auto rep = pret_criterion(ideal);
  if (o.json_out) {
    json lv = json::array();
    for (const auto& l : rep.levels)
      lv.push_back({{"dimension", l.dimension}, {"union", vars_json(l.var_union)}, {"size", l.var_union.size()},
                    {"bound", l.bound}, {"holds", l.holds}});
    out << json{{"holds", rep.holds}, {"levels", lv}}.dump(2) << "\n";
  } else {
    out << std::setw(4) << "d" << "  " << std::left << std::setw(20) << "union of J_P" << std::right << std::setw(6)
        << "size" << std::setw(8) << "bound" << "  holds\n";
    for (const auto& l : rep.levels)
      out << std::setw(4) << l.dimension << "  " << std::left << std::setw(20) << vars_string(l.var_union)
          << std::right << std::setw(6) << l.var_union.size() << std::setw(8) << l.bound << "  "
          << (l.holds ? "yes" : "no") << "\n";
    out << "criterion: " << (rep.holds ? "holds" : "fails") << "\n";
  }
  return rep.holds ? affirmative : negative;
}

inline int cmd_facets(const options& o, const input& in, std::ostream& out, bool maximal_only) {
  const auto gamma = require_multicomplex(in);
  const auto faces = maximal_only ? gamma.maximal_facets() : enumerate_facets(gamma).facets;
  if (o.json_out) {
    json j = json::array();
    for (const auto& f : faces) j.push_back({{"face", to_json(f)}, {"prime", to_json(face_prime(f))}});
    out << json{{maximal_only ? "maximal_facets" : "facets", j}, {"count", faces.size()}}.dump(2) << "\n";
    return affirmative;
  }
  text_table t;
  for (const auto& f : faces) t.row(to_string(f), "P = " + to_string(face_prime(f)));
  t.print(out);
  out << faces.size() << (maximal_only ? " maximal facets\n" : " facets\n");
  return affirmative;
}

inline int cmd_arithdeg(const options& o, const input& in, std::ostream& out) {
  const auto rep = arithmetic_degree_report(require_multicomplex(in));
  if (o.json_out) {
    json j = json::array();
    for (const auto& [p, c] : rep.by_prime) j.push_back({{"prime", to_json(p)}, {"count", c}});
    out << json{{"by_prime", j}, {"total", rep.total}}.dump(2) << "\n";
    return affirmative;
  }
  text_table t;
  for (const auto& [p, c] : rep.by_prime) t.row(to_string(p), std::to_string(c));
  t.row("total", std::to_string(rep.total));
  t.print(out);
  return affirmative;
}

inline int cmd_check_shelling(const options& o, const input& in, std::ostream& out) {
  const auto gamma = require_multicomplex(in);
  const auto v = check_shelling_order(gamma, parse_order(o, gamma.nvars()));
  if (o.json_out)
    out << verdict_json(v).dump(2) << "\n";
  else
    print_verdict(out, v);
  return v.overall ? affirmative : negative;
}

inline int cmd_shell(const options& o, const input& in, std::ostream& out) {
  const auto gamma = require_multicomplex(in);
  shell_strategy strat;
  if (o.strategy == "exhaustive")
    strat = shell_strategy::exhaustive;
  else if (o.strategy == "dimension")
    strat = shell_strategy::dimension;
  else
    throw error("unknown strategy " + o.strategy);
  const auto found = find_shelling(gamma, strat, o.search);
  if (o.json_out) {
    json j = {{"shellable", found.has_value()}};
    if (found) {
      j["verdict"] = verdict_json(found->verdict);
      json dims = json::array();
      for (const auto& f : found->order) dims.push_back(infinite_part(f).size());
      j["dimensions"] = dims;
    }
    out << j.dump(2) << "\n";
  } else if (found) {
    out << "shellable\n";
    print_verdict(out, found->verdict);
  } else {
    out << "not shellable\n";
  }
  return found ? affirmative : negative;
}

inline int cmd_check_maxshelling(const options& o, const input& in, std::ostream& out) {
  const auto gamma = require_multicomplex(in);
  if (o.split == 0) throw error("--split is required");
  const auto v = check_maximal_shelling(gamma, parse_order(o, gamma.nvars()), o.split);
  if (o.json_out)
    out << maxverdict_json(v).dump(2) << "\n";
  else
    print_maxverdict(out, v);
  return v.overall ? affirmative : negative;
}

inline int cmd_maxshell(const options& o, const input& in, std::ostream& out) {
  const auto gamma = require_multicomplex(in);
  const auto found = find_maximal_shelling(gamma, o.search);
  if (o.json_out) {
    json j = {{"maximal_shellable", found.has_value()}};
    if (found) j["verdict"] = maxverdict_json(found->verdict);
    out << j.dump(2) << "\n";
  } else if (found) {
    out << "maximal shellable\n";
    print_maxverdict(out, found->verdict);
  } else {
    out << "not maximal shellable\n";
  }
  return found ? affirmative : negative;
}

inline int cmd_filtration(const options& o, const input& in, std::ostream& out) {
  const auto ideal = require_ideal(in);
  std::optional<prime_filtration> f;
  if (o.via == "search") {
    f = find_pretty_clean_filtration(ideal, o.search.max_nodes);
  } else if (o.via == "maxshell") {
    const auto gamma = multicomplex_from_ideal(ideal);
    if (auto m = find_maximal_shelling(gamma, o.search))
      f = refine_to_prime_filtration(build_maximal_shelling_filtration(gamma, m->order, m->split));
  } else {
    throw error("unknown --via " + o.via);
  }
  if (o.json_out) {
    out << (f ? filtration_json(*f) : json{{"found", false}}).dump(2) << "\n";
  } else if (f) {
    print_filtration(out, *f);
  } else {
    out << (o.via == "search" ? "no pretty clean filtration\n" : "not maximal shellable\n");
  }
  return f ? affirmative : negative;
}

inline int cmd_verify_filtration(const options& o, const input& in, std::ostream& out) {
  if (!in.doc || in.doc->value("kind", "") != "filtration") throw schema_error("verify-filtration needs a filtration document");
  auto f = filtration_from_document(*in.doc);
  const auto rep = verify_filtration(f);
  f.classification = rep.flags;
  if (o.json_out) {
    json j = {{"valid", rep.valid()}, {"length", rep.length}, {"classification", flags_json(rep.flags)},
              {"violations", rep.violations}};
    if (rep.facet_count) j["facet_count"] = *rep.facet_count;
    out << j.dump(2) << "\n";
  } else {
    print_filtration(out, f);
    for (const auto& v : rep.violations) out << "violation: " << v << "\n";
    if (rep.facet_count) out << "facets of the multicomplex: " << *rep.facet_count << "\n";
    out << (rep.valid() ? "valid\n" : "invalid\n");
  }
  return rep.valid() ? affirmative : negative;
}

inline int cmd_simplicial_clean(const options& o, const input& in, std::ostream& out) {
  if (!in.doc || in.doc->value("kind", "") != "simplicial") throw schema_error("simplicial-clean needs a simplicial document");
  const auto doc = simplicial_from_document(*in.doc);
  if (o.order.empty()) throw error("--order is required");
  const auto order = vertex_sets_from_json(json::parse(o.order), doc.n);

  simplicial_filtration sf;
  try {
    sf = simplicial_clean_filtration(doc.n, doc.facets, order);
  } catch (const invalid_order& e) {
    if (std::string(e.what()).find("not a shelling") == std::string::npos) throw;
    if (o.json_out)
      out << json{{"shelling", false}}.dump(2) << "\n";
    else
      out << "order is not a shelling\n";
    return negative;
  }
  if (o.json_out) {
    json j = filtration_json(sf.filtration);
    j["shelling_numbers"] = sf.shelling_numbers;
    j["shift_degrees"] = sf.shift_degrees;
    out << j.dump(2) << "\n";
  } else {
    print_filtration(out, sf.filtration);
    out << "shelling numbers: " << join(sf.shelling_numbers, [](std::size_t a) { return std::to_string(a); })
        << "   witness degrees: " << join(sf.shift_degrees, [](std::uint64_t a) { return std::to_string(a); })
        << "\n";
  }
  return sf.filtration.classification.clean && sf.degrees_match() ? affirmative : negative;
}

}  // namespace detail

inline int dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? input_error : affirmative;
  }
  options o;
  o.command = args.front();
  if (std::find(commands().begin(), commands().end(), o.command) == commands().end()) {
    err << "unknown command: " << o.command << "\n" << usage();
    return input_error;
  }
  if (const char* env = std::getenv("MULTISHELL_THREADS")) {
    try {
      o.search.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "ignoring malformed MULTISHELL_THREADS\n";
    }
  }

  CLI::App app{"multishell " + o.command, "multishell " + o.command};
  app.add_option("file", o.file, "input file ('-' or omitted: standard input)");
  app.add_option("--text", o.text, "input given inline");
  app.add_option("--vars", o.vars, "number of variables (default: largest index in the input)");
  app.add_flag("--json", o.json_out, "machine-readable JSON output");
  app.add_option("--order", o.order, "JSON list of faces (or vertex sets for simplicial-clean)");
  app.add_option("--split", o.split, "split index s of a maximal shelling (1-based)");
  app.add_option("--strategy", o.strategy, "shell: exhaustive | dimension");
  app.add_option("--via", o.via, "filtration: search | maxshell");
  app.add_option("--max-facets", o.search.max_facets, "largest facet count the searches accept");
  app.add_option("--max-perms", o.search.max_nodes, "node budget of the searches");
  app.add_option("--threads", o.search.threads, "worker threads for the shelling search");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return affirmative;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return input_error;
  }

  try {
    const auto input = detail::read_input(o, in);
    const auto& c = o.command;
    if (c == "decompose") return detail::cmd_decompose(o, input, out);
    if (c == "ass") return detail::cmd_ass(o, input, out);
    if (c == "dimfilt") return detail::cmd_dimfilt(o, input, out);
    if (c == "borel") return detail::cmd_borel(o, input, out);
    if (c == "pret") return detail::cmd_pret(o, input, out);
    if (c == "facets") return detail::cmd_facets(o, input, out, false);
    if (c == "maxfacets") return detail::cmd_facets(o, input, out, true);
    if (c == "arithdeg") return detail::cmd_arithdeg(o, input, out);
    if (c == "check-shelling") return detail::cmd_check_shelling(o, input, out);
    if (c == "shell") return detail::cmd_shell(o, input, out);
    if (c == "check-maxshelling") return detail::cmd_check_maxshelling(o, input, out);
    if (c == "maxshell") return detail::cmd_maxshell(o, input, out);
    if (c == "filtration") return detail::cmd_filtration(o, input, out);
    if (c == "verify-filtration") return detail::cmd_verify_filtration(o, input, out);
    if (c == "simplicial-clean") return detail::cmd_simplicial_clean(o, input, out);
  } catch (const search_cap_exceeded& e) {
    err << "search cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace multishell::cli
