// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dispatch.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace multishell;
namespace fx = fixtures;

namespace {

struct outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::dispatch(std::move(args), in, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::vector<std::size_t> vars1(std::initializer_list<std::size_t> v) {
  std::vector<std::size_t> out;
  for (auto i : v) out.push_back(i - 1);
  return out;
}

// --- 1 ---------------------------------------------------------------------
void criterion1(outcome& o) {
  const auto ideal = fx::four_var_ideal();
  const auto rep = primary_decomposition(ideal);
  const std::vector<monomial_prime> expected = {
      monomial_prime(4, vars1({1, 2, 3})), monomial_prime(4, vars1({1, 3, 4})),
      monomial_prime(4, vars1({1, 2})), monomial_prime(4, vars1({1, 4}))};
  auto got = rep.ass;
  std::sort(got.begin(), got.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  o.require(got == want, "Ass differs");

  std::vector<monomial_ideal> comps;
  for (const auto& c : rep.primary_components) comps.push_back(c.ideal);
  o.require(intersection(4, comps) == ideal, "primary components do not intersect to I");
  o.require(oracle::same_ideal_on_box(intersection(4, comps), ideal), "membership oracle disagrees");

  const auto pret = pret_criterion(ideal);
  o.require(pret.holds, "pret false");
  o.require(pret.levels.size() == 2, "pret levels");
  if (pret.levels.size() == 2) {
    o.require(pret.levels[0].dimension == 2 && pret.levels[0].var_union.size() == 3 && pret.levels[0].bound == 3,
              "d=2 level");
    o.require(pret.levels[1].dimension == 1 && pret.levels[1].var_union.size() == 4 && pret.levels[1].bound == 4,
              "d=1 level");
  }
  o.require(run_cli({"decompose", "--text", fx::four_var_text}) == 0, "decompose exit");
  o.require(run_cli({"pret", "--text", fx::four_var_text}) == 0, "pret exit");
}

// --- 2 ---------------------------------------------------------------------
void criterion2(outcome& o) {
  const auto gamma = fx::corner_gamma();
  const auto facets = enumerate_facets(gamma).facets;
  const std::set<face> got(facets.begin(), facets.end());
  const std::set<face> want = {face{0, inf}, face{2, 0}, face{1, 0}};
  o.require(got == want && facets.size() == 3, "facet set");
  o.require(oracle::brute_facets(gamma) == want, "definition oracle facet set");

  const auto adeg = arithmetic_degree_report(gamma);
  o.require(adeg.total == 3, "total");
  const monomial_prime p1(2, {0}), p12(2, {0, 1});
  o.require(adeg.by_prime.size() == 2 && adeg.by_prime.at(p1) == 1 && adeg.by_prime.at(p12) == 2, "per prime");

  const auto brute = oracle::brute_h0_counts(ideal_from_multicomplex(gamma));
  std::map<std::vector<std::size_t>, std::size_t> lib;
  for (const auto& [p, c] : adeg.by_prime) lib[p.vars()] = c;
  o.require(brute == lib, "brute-force H0 count disagrees");
}

// --- 3 ---------------------------------------------------------------------
void criterion3(outcome& o) {
  const auto gamma = fx::inclusion_gamma();
  const auto v = check_shelling_order(gamma, fx::inclusion_order());
  o.require(!v.overall, "order should fail overall");
  for (std::size_t i = 0; i < 4; ++i) o.require(v.steps[i].passes_local(), "conditions (1)-(3) at " + std::to_string(i + 1));
  for (std::size_t i = 0; i < 3; ++i) o.require(v.steps[i].cond4 != check::fail, "(4) early fail");
  o.require(v.steps[3].cond4 == check::fail, "(4) at step 4");
  o.require(v.steps[3].cond4_offenders == std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}}, "offender pair (3,4)");

  o.require(v.steps[1].intersection == std::vector<face>{face{0, 0, inf, inf}}, "cap at 2");
  o.require(v.steps[2].intersection == std::vector<face>{face{0, 1, inf, 0}, face{1, 0, inf, 0}}, "cap at 3");
  o.require(v.steps[3].intersection == std::vector<face>{face{0, 1, inf, inf}}, "cap at 4");
}

// --- 4 ---------------------------------------------------------------------
void criterion4(outcome& o) {
  const auto gamma = fx::mixed_dim_gamma();
  const auto order = fx::mixed_dim_order();
  const auto v = check_shelling_order(gamma, order);
  o.require(v.overall, "order d,e,a,b,c should pass");
  const std::vector<monomial_prime> primes = {
      monomial_prime(4, vars1({3, 4})), monomial_prime(4, vars1({1, 3})), monomial_prime(4, vars1({1, 3})),
      monomial_prime(4, vars1({1, 2, 3})), monomial_prime(4, vars1({3, 4}))};
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < order.size(); ++i) {
    o.require(face_prime(order[i]) == primes[i], "prime at " + std::to_string(i + 1));
    dims.push_back(infinite_part(order[i]).size());
  }
  o.require(dims == std::vector<std::size_t>{2, 2, 2, 1, 2}, "dimension sequence");
  o.require(!std::is_sorted(dims.rbegin(), dims.rend()), "sequence should not be nonincreasing");

  const auto found = find_shelling(gamma, shell_strategy::dimension, {});
  o.require(found.has_value(), "dimension strategy found nothing");
  if (found) {
    o.require(check_shelling_order(gamma, found->order).overall, "found order fails the checker");
    std::vector<std::size_t> fd;
    for (const auto& f : found->order) fd.push_back(infinite_part(f).size());
    o.require(std::is_sorted(fd.rbegin(), fd.rend()), "found order not dimension-nonincreasing");
  }
}

// --- 5 ---------------------------------------------------------------------
void criterion5(outcome& o) {
  const std::string caps = "12";
  const auto six = to_string(fx::six_var_ideal());
  const auto shell_only = to_string(fx::shell_only_ideal());
  const auto last = to_string(fx::maxshell_ideal());
  o.require(run_cli({"maxshell", "--text", six, "--max-facets", caps}) == 1, "6-var maxshell exit");
  o.require(run_cli({"shell", "--text", six, "--max-facets", caps}) == 1, "6-var shell exit");
  o.require(run_cli({"maxshell", "--text", shell_only, "--max-facets", caps}) == 1, "shell-only ideal maxshell exit");
  o.require(run_cli({"shell", "--text", shell_only, "--max-facets", caps}) == 0, "shell-only ideal shell exit");
  o.require(run_cli({"maxshell", "--text", last, "--max-facets", caps}) == 0, "last maxshell exit");

  const auto found = find_maximal_shelling(multicomplex_from_ideal(fx::maxshell_ideal()), {});
  o.require(found && found->split == 2, "split s = 2");
  if (found) {
    const auto& st = found->verdict.steps.at(2);
    o.require(st.intersection == std::vector<face>{face{0, 0, 0, 1, 1}}, "single intersection facet (0,0,0,1,1)");
  }
}

// --- 6 ---------------------------------------------------------------------
void criterion6(outcome& o) {
  const auto gamma = multicomplex_from_ideal(fx::maxshell_ideal());
  const auto order = fx::maxshell_order();
  o.require(check_maximal_shelling(gamma, order, 2).overall, "order u1,u2,u3 with s=2");
  const auto f = f_monomial(gamma, order, 2, 2);
  o.require(f.t == unit_vector(5, 3, 2), "f_3 = x4^2");
  o.require(verify_colon_identity(gamma, order, 2), "colon identity");
  const auto pf = refine_to_prime_filtration(build_maximal_shelling_filtration(gamma, order, 2));
  const auto rep = verify_filtration(pf);
  o.require(rep.valid(), "refined filtration invalid");
  o.require(rep.flags.pretty_clean, "not pretty clean");
  o.require(pf.length() == enumerate_facets(gamma).facets.size(), "length != |F|");
}

// --- 7, 8, 9 ----------------------------------------------------------------
struct corpus_entry {
  monomial_ideal ideal;
  multicomplex gamma;
  std::size_t facets;
};

const std::vector<corpus_entry>& corpus() {
  static const std::vector<corpus_entry> c = [] {
    std::vector<corpus_entry> out;
    std::mt19937 rng(20240611);
    while (out.size() < 600) {
      auto ideal = oracle::random_corpus_ideal(rng, 2);
      auto gamma = multicomplex_from_ideal(ideal);
      auto count = enumerate_facets(gamma).facets.size();
      if (count <= 7) out.push_back({ideal, gamma, count});
    }
    return out;
  }();
  return c;
}

struct corpus_result {
  bool shellable = false;
  std::optional<prime_filtration> search;
  std::optional<prime_filtration> via_maxshell;
};

const std::vector<corpus_result>& corpus_results() {
  static const std::vector<corpus_result> r = [] {
    std::vector<corpus_result> out;
    for (const auto& e : corpus()) {
      corpus_result cr;
      cr.shellable = find_shelling(e.gamma, shell_strategy::exhaustive, {}).has_value();
      cr.search = find_pretty_clean_filtration(e.ideal);
      if (auto m = find_maximal_shelling(e.gamma, {}))
        cr.via_maxshell = refine_to_prime_filtration(build_maximal_shelling_filtration(e.gamma, m->order, m->split));
      out.push_back(std::move(cr));
    }
    return out;
  }();
  return r;
}

void criterion7(outcome& o) {
  const auto& c = corpus();
  const auto& r = corpus_results();
  std::size_t mismatches = 0, positive = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (r[i].shellable != r[i].search.has_value()) ++mismatches;
    positive += r[i].shellable;
  }
  o.require(c.size() >= 200, "corpus size");
  o.require(mismatches == 0, std::to_string(mismatches) + " discrepancies");
  o.require(positive > 0 && c.size() - positive >= 5, "corpus lacks non-shellable instances");
  o.why << " (" << c.size() << " ideals, " << positive << " shellable, " << c.size() - positive << " not)";
}

void criterion8(outcome& o) {
  const auto& c = corpus();
  const auto& r = corpus_results();
  std::size_t violations = 0, checked = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto* f : {&r[i].search, &r[i].via_maxshell}) {
      if (!f->has_value()) continue;
      ++checked;
      const auto rep = verify_filtration(**f);
      if (!rep.valid() || !rep.flags.pretty_clean || (*f)->length() != c[i].facets) ++violations;
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.why << " (" << checked << " filtrations)";
}

void criterion9(outcome& o) {
  const auto& c = corpus();
  const auto& r = corpus_results();
  std::size_t violations = 0, covered = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool sufficient =
        pret_criterion(c[i].ideal).holds || ass_totally_ordered(c[i].ideal) || is_borel_type(c[i].ideal);
    if (!sufficient) continue;
    ++covered;
    if (!r[i].search) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.why << " (" << covered << " instances satisfy a criterion)";
}

// --- 10 --------------------------------------------------------------------
void criterion10(outcome& o) {
  const auto ideal = parse_ideal("x1^2, x1*x2");
  const auto good = fx::good_filtration();
  const auto rg = verify_filtration(good);
  o.require(rg.valid() && rg.flags.pretty_clean, "0 ⊂ (x) ⊂ R not pretty clean");
  o.require(good.steps.size() == 2 && good.steps[0].prime == monomial_prime(2, {0, 1}) &&
                good.steps[1].prime == monomial_prime(2, {0}),
            "primes (x,y),(x)");

  const auto bad = fx::bad_filtration();
  const auto rb = verify_filtration(bad);
  o.require(rb.valid() && rb.flags.prime, "G not a prime filtration");
  o.require(!rb.flags.pretty_clean, "G classified pretty clean");

  o.require(!find_pretty_clean_filtration(fx::two_planes()).has_value(), "(x1,x2)∩(x3,x4) found a filtration");
  o.require(find_pretty_clean_filtration(ideal).has_value(), "(x^2,xy) search failed");
}

}  // namespace

int main() {
  struct criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(outcome&)> body;
  };
  const std::vector<criterion> all = {
      {1, "decomposition and pret on the four-variable example", 1.0, criterion1},
      {2, "facets and arithmetic degree of <(0,inf),(2,0)>", 1.0, criterion2},
      {3, "order satisfying (1)-(3) but failing (4)", 1.0, criterion3},
      {4, "shelling with non-monotone dimensions; dimension strategy", 5.0, criterion4},
      {5, "maximal shellability triple", 30.0, criterion5},
      {6, "primary filtration from a maximal shelling", 2.0, criterion6},
      {7, "shellable iff pretty clean on the random corpus", 60.0, criterion7},
      {8, "pretty clean lengths equal the facet count", 60.0, criterion8},
      {9, "sufficient criteria imply pretty clean", 60.0, criterion9},
      {10, "pretty clean and non pretty clean fixtures", 1.0, criterion10},
  };
  int failures = 0;
  for (const auto& c : all) {
    outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.why << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.why << " [took " << secs << " s, limit " << c.limit_seconds << " s]";
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << std::fixed
              << std::setprecision(3) << secs << " s)" << o.why.str() << "\n";
  }
  std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all criteria pass\n");
  return failures ? 1 : 0;
}
