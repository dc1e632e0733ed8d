// Acceptance gate: fifteen pinned criteria, one line each. Every criterion
// re-derives its expectation here (oracles, hand-checked constants, timing
// budgets) instead of trusting the library's own summaries, except where the
// criterion is exactly "this suite passes".

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strongclean/parse.hpp"
#include "strongclean/transforms.hpp"
#include "strongclean/verify.hpp"

using namespace strongclean;

namespace {

// pinned budgets (seconds)
constexpr double kCleanEquivBudget = 5.0;
constexpr double kBigRingBudget = 120.0;
constexpr double kHuntBudget = 60.0;

struct Outcome {
  bool pass = false;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

const Catalog& cat() {
  static Catalog c = default_catalog();
  return c;
}

// global witness audit: everything funneled through tally() is revalidated
// from scratch
long long g_validated = 0, g_invalid = 0;
void tally(const Witness& w) {
  if (witness_valid(w))
    ++g_validated;
  else
    ++g_invalid;
}

std::string fmt(double v, int prec = 2) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << v;
  return os.str();
}

CentralPoly ip(const RingPtr& r, std::vector<long long> cs) { return int_poly(r, cs); }

// ---- 1: strong cleanness and the x^2+x form agree ring by ring -------------

Outcome c01() {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep = run_suite(cat(), "C2.5", SuiteOptions{});
  bool equal = true;
  for (const auto& e : cat().entries) {
    bool clean = ring_check(e.ring, ip(e.ring, {0, -1, 1})).holds;
    bool quad = ring_check(e.ring, ip(e.ring, {0, 1, 1})).holds;
    equal = equal && clean == quad && clean;  // both hold on every entry
  }
  double t = seconds_since(t0);
  return {rep.pass && equal && t < kCleanEquivBudget,
          fmt(t) + " s (budget " + fmt(kCleanEquivBudget, 0) + "), " +
              std::to_string(rep.cells) + " cells"};
}

// ---- 2: quadratic form vs clean form, exhaustive pairs on small rings ------

Outcome c02() {
  TheoremReport rep = run_suite(cat(), "T2.4.1", SuiteOptions{});
  bool exhaustive_small = true;
  for (const auto& e : cat().entries) {
    if (e.ring->order() > 64) continue;
    bool sampled = true;
    central_pairs(e.ring, kDefaultSeed, &sampled);
    exhaustive_small = exhaustive_small && !sampled;
  }
  return {rep.pass && exhaustive_small,
          std::to_string(rep.cells) + " cells, small rings exhaustive, large sampled"};
}

// ---- 3: a quadratic decomposition certifies its polynomial multiples -------

Outcome c03() {
  TheoremReport rep = run_suite(cat(), "T2.4.2", SuiteOptions{});
  return {rep.pass, std::to_string(rep.cells) + " cells over multipliers 1, x, x+1, x^2"};
}

// ---- 4: the two conversions invert each other exactly ----------------------

Outcome c04() {
  long long cells = 0, mismatches = 0;
  for (const auto& e : cat().entries) {
    const RingPtr& r = e.ring;
    if (r->order() > 64) continue;
    for (Elem a : r->center())
      for (Elem b : r->center()) {
        Elem d = r->sub(b, a);
        if (!r->is_unit(d)) continue;
        Elem dinv = *r->inverse(d);
        CentralPoly quad = quadratic_from_roots(r, a, b);
        for (Elem x = 0; x < r->order(); ++x) {
          auto wq = gx_witness(r, x, quad);
          if (!wq) continue;
          ++cells;
          tally(*wq);
          Elem m = r->mul(r->sub(x, a), dinv);
          Witness clean = quadratic_to_clean(r, a, b, m, *wq);
          tally(clean);
          Witness back = clean_to_quadratic(r, a, b, x, clean);
          tally(back);
          if (back.r != wq->r || back.s != wq->s || back.u != wq->u ||
              !(back.poly == wq->poly))
            ++mismatches;
        }
      }
  }
  return {mismatches == 0 && cells > 0,
          std::to_string(cells) + " round trips, " + std::to_string(mismatches) +
              " mismatches"};
}

// ---- 5: five equivalent conditions, with pinned truth rows -----------------

Outcome c05() {
  TheoremReport rep = run_suite(cat(), "T4.1", SuiteOptions{});
  bool agree = true, anchors = true;
  for (const auto& e : cat().entries) {
    const RingPtr& r = e.ring;
    bool b1 = ring_check(r, ip(r, {0, -2, 1})).holds;
    bool b2 = ring_check(r, ip(r, {0, -4, 1})).holds;
    bool b3 = ring_check(r, ip(r, {-1, 0, 1})).holds;
    bool b4 = strongly_clean_all(r) && r->is_unit(r->from_int(2));
    bool b5 = static_cast<int>(u_n_set(r, 2).size()) == r->order();
    for (Elem x = 0; b5 && x < r->order(); ++x)
      b5 = unit_plus_root_witness(r, x, 2).has_value();
    agree = agree && b1 == b2 && b2 == b3 && b3 == b4 && b4 == b5;
    if (e.name == "Z2") anchors = anchors && !b1 && !b2 && !b3 && !b4 && !b5;
    if (e.name == "Z3" || e.name == "Z5" || e.name == "Z7" || e.name == "Z9")
      anchors = anchors && b1 && b2 && b3 && b4 && b5;
  }
  return {rep.pass && agree && anchors,
          "conditions agree on all rings; Z2 all false, Z3/Z5/Z7/Z9 all true"};
}

// ---- 6: products decide factorwise -----------------------------------------

Outcome c06() {
  TheoremReport rep = run_suite(cat(), "P3.5", SuiteOptions{});
  return {rep.pass,
          std::to_string(rep.cells) + " cells over x^2-x, x^2+x, x^2-1, x^3-x"};
}

// ---- 7: surjections push verdicts and witnesses forward --------------------

Outcome c07() {
  TheoremReport p31 = run_suite(cat(), "P3.1", SuiteOptions{});
  TheoremReport c33 = run_suite(cat(), "C3.3", SuiteOptions{});
  TheoremReport c34 = run_suite(cat(), "C3.4", SuiteOptions{});
  return {p31.pass && c33.pass && c34.pass,
          std::to_string(p31.cells + c33.cells + c34.cells) +
              " cells across quotient/projection/corner/augmentation maps"};
}

// ---- 8: corner rings inherit the decomposition ------------------------------

Outcome c08() {
  TheoremReport rep = run_suite(cat(), "T3.6", SuiteOptions{});
  return {rep.pass, std::to_string(rep.cells) + " corner cells"};
}

// ---- 9: three unit-regularity conditions coincide ---------------------------

Outcome c09() {
  long long cells = 0, diverge = 0;
  for (const auto& e : cat().entries) {
    const RingPtr& r = e.ring;
    if (r->order() > 64) continue;
    for (int n = 1; n <= 3; ++n)
      for (Elem a = 0; a < r->order(); ++a) {
        ++cells;
        if (!unit_regularity_conditions(r, a, n).all_equal()) ++diverge;
      }
  }
  return {diverge == 0 && cells > 0,
          std::to_string(cells) + " cells (order <= 64, n in 1..3), " +
              std::to_string(diverge) + " divergences"};
}

// ---- 10: unit-plus-root or one-sided nonzero idempotents --------------------

Outcome c10() {
  long long cells = 0, violations = 0;
  for (const auto& e : cat().entries) {
    const RingPtr& r = e.ring;
    for (int n = 2; n <= 4; ++n) {
      std::vector<long long> cs(static_cast<std::size_t>(n) + 1, 0);
      cs[1] = -1;
      cs[static_cast<std::size_t>(n)] = 1;
      Verdict pre = ring_check(r, ip(r, cs));
      if (!pre.holds) continue;
      for (Elem a = 0; a < r->order(); ++a) {
        ++cells;
        Disjunction d = root_or_idempotent_disjunction(r, a, n, &pre);
        if (!d.holds()) ++violations;
        if (d.root_witness) tally(*d.root_witness);
      }
    }
  }
  return {violations == 0 && cells > 0,
          std::to_string(cells) + " cells (n in 2..4), " +
              std::to_string(violations) + " violations"};
}

// ---- 11: sign flip between the two odd linear terms -------------------------

Outcome c11() {
  TheoremReport rep = run_suite(cat(), "P4.8", SuiteOptions{});
  return {rep.pass, std::to_string(rep.cells) + " cells, negation round trips"};
}

// ---- 12: anchored instances -------------------------------------------------

Outcome c12() {
  RingPtr f22 = parse_ring_spec("Prod(Zn 2, Zn 2)");
  Elem c = encode_components(f22, {1, 0});
  Verdict vf = ring_check(
      f22, quadratic_from_roots(f22, f22->neg(f22->one()), f22->neg(c)));
  bool f22_ok = !vf.holds && vf.failing_element == c;

  auto t0 = std::chrono::steady_clock::now();
  RingPtr z7c3 = parse_ring_spec("GR (Zn 7) C3");
  Verdict vg = ring_check(z7c3, ip(z7c3, {-1, 0, 0, 0, 0, 0, 1}), true, 1);
  double tg = seconds_since(t0);
  bool gr_ok = vg.holds && vg.witnesses && tg < kBigRingBudget;
  if (gr_ok)
    for (const Witness& w : *vg.witnesses) tally(w);

  IntegerCheck plus = integers_gx_check(2, {0, 1, 1});
  IntegerCheck minus = integers_gx_check(2, {0, -1, 1});
  bool int_ok = !plus.clean && minus.clean && minus.witness &&
                *minus.witness == std::make_pair(1ll, 1ll);

  return {f22_ok && gr_ok && int_ok,
          "F2^2 fails at (1,0); 343-element group ring holds in " + fmt(tg) +
              " s; integer checks pinned"};
}

// ---- 13: every witness seen in this run revalidates -------------------------

Outcome c13() {
  // add a full sweep of both quadratic forms across the catalog
  for (const auto& e : cat().entries) {
    for (auto cs : {std::vector<long long>{0, -1, 1}, {0, 1, 1}}) {
      Verdict v = ring_check(e.ring, ip(e.ring, cs), true);
      if (v.witnesses)
        for (const Witness& w : *v.witnesses) tally(w);
    }
  }
  return {g_invalid == 0 && g_validated > 0,
          std::to_string(g_validated) + " witnesses revalidated, " +
              std::to_string(g_invalid) + " invalid"};
}

// ---- 14: byte-identical reports under one seed ------------------------------

Outcome c14() {
  bool identical = true;
  long long bytes = 0;
  for (const std::string& id : suite_ids()) {
    SuiteOptions w1, w2;
    w2.workers = 2;
    std::string a = report_json(run_suite(cat(), id, w1)).dump();
    std::string b = report_json(run_suite(cat(), id, w2)).dump();
    std::string again = report_json(run_suite(cat(), id, w1)).dump();
    identical = identical && a == b && a == again;
    bytes += static_cast<long long>(a.size());
  }
  std::string h1 = hunt_json(hunt_odd_asymmetry(cat(), 1, SuiteOptions{})).dump();
  std::string h2 = hunt_json(hunt_odd_asymmetry(cat(), 1, SuiteOptions{})).dump();
  identical = identical && h1 == h2;
  return {identical, std::to_string(bytes) + " report bytes, reruns byte-equal"};
}

// ---- 15: the odd-sign hunt is fast, and every comparison re-derives ---------

Outcome c15() {
  auto t0 = std::chrono::steady_clock::now();
  HuntReport rep = hunt_odd_asymmetry(cat(), 1, SuiteOptions{});
  double t = seconds_since(t0);

  bool revalidates = rep.rows.size() == cat().entries.size();
  for (const auto& row : rep.rows) {
    const CatalogEntry* e = cat().find(row.ring);
    if (!e) {
      revalidates = false;
      break;
    }
    const RingPtr& r = e->ring;
    Verdict minus = ring_check(r, ip(r, {0, -1, 0, 1}));
    Verdict plus = ring_check(r, ip(r, {0, 1, 0, 1}));
    revalidates = revalidates && minus.holds == row.minus_holds &&
                  plus.holds == row.plus_holds &&
                  minus.failing_element == row.minus_failing &&
                  plus.failing_element == row.plus_failing;
    if (row.asymmetric()) {
      const auto& bad = row.minus_holds ? row.plus_failing : row.minus_failing;
      revalidates = revalidates && bad.has_value() &&
                    !gx_witness(r, *bad,
                                ip(r, {0, row.minus_holds ? 1ll : -1ll, 0, 1}))
                         .has_value();
    }
  }

  // The asymmetry is real, not a bug: e.g. in Z3 every element is a root of
  // x^3-x, yet 0 has no root-plus-unit split against x^3+x (its only root is
  // 0 and 0 is not a unit). A clean-slate prediction of "no findings" is
  // therefore disproved by the run itself; the criterion checks the budget
  // and that every reported comparison re-derives.
  std::string note = fmt(t) + " s (budget " + fmt(kHuntBudget, 0) + "), " +
                     std::to_string(rep.findings.size()) +
                     " asymmetric rings (none expected by the naive guess; "
                     "Z3 at element 0 is the smallest refutation)";
  return {t < kHuntBudget && revalidates && !rep.findings.empty(), note};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"clean form and x^2+x form agree on every ring", c01},
      {"quadratic/clean equivalence across central pairs", c02},
      {"decompositions certify polynomial multiples", c03},
      {"conversion round trips reproduce witnesses exactly", c04},
      {"five characterizations coincide, anchors pinned", c05},
      {"product verdicts are factorwise conjunctions", c06},
      {"surjections preserve verdicts and witnesses", c07},
      {"corner rings inherit decompositions", c08},
      {"unit-regularity conditions coincide", c09},
      {"root-or-idempotent disjunction holds", c10},
      {"sign-flip bijection between odd linear terms", c11},
      {"anchored instances match pinned outcomes", c12},
      {"all witnesses revalidate from scratch", c13},
      {"reports are byte-identical under a fixed seed", c14},
      {"odd-sign hunt: in budget, every row re-derives", c15},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %02zu %s — %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, out.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
