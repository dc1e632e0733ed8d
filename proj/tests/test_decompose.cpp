#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "strongclean/decompose.hpp"
#include "strongclean/parse.hpp"

using namespace strongclean;

namespace {

// Independent decomposition oracle for Zn with integer coefficients: scan the
// least root s, take u = x - s, demand gcd(u, n) = 1. In a commutative ring
// the first-hit order (ascending s, then ascending u) collapses to least s.
std::optional<std::pair<long long, long long>> zn_oracle(
    long long n, const std::vector<long long>& coeffs, long long x) {
  auto evalmod = [&](long long s) {
    long long acc = 0, p = 1;
    for (long long c : coeffs) {
      acc = (acc + ((c % n + n) % n) * p) % n;
      p = (p * s) % n;
    }
    return acc;
  };
  for (long long s = 0; s < n; ++s) {
    if (evalmod(s) != 0) continue;
    long long u = ((x - s) % n + n) % n;
    if (std::gcd(u, n) == 1) return std::make_pair(s, u);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("gx_witness agrees with the modular oracle on Zn") {
  std::vector<std::vector<long long>> polys = {
      {0, -1, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 0, 1}, {0, 1, 0, 1}, {1, 1, 1}};
  for (int n : {2, 3, 4, 5, 6, 8, 9}) {
    RingPtr r = make_zn(n);
    for (const auto& cs : polys) {
      CentralPoly p = int_poly(r, cs);
      if (p.degree() < 1) continue;
      for (Elem x = 0; x < n; ++x) {
        auto expect = zn_oracle(n, cs, x);
        auto got = gx_witness(r, x, p);
        REQUIRE(expect.has_value() == got.has_value());
        if (got) {
          CHECK(got->s == expect->first);
          CHECK(got->u == expect->second);
          CHECK(got->r == x);
          CHECK(witness_valid(*got));
        }
      }
    }
  }
}

TEST_CASE("strongly_clean_witness is gx_witness against x^2-x") {
  for (const char* spec : {"Zn 6", "Mat 2 (Zn 2)", "Tri 2 (Zn 2)"}) {
    RingPtr r = parse_ring_spec(spec);
    CentralPoly p = int_poly(r, {0, -1, 1});
    for (Elem x = 0; x < r->order(); ++x) {
      auto a = strongly_clean_witness(r, x);
      auto b = gx_witness(r, x, p);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(a->s == b->s);
        CHECK(a->u == b->u);
        CHECK(witness_valid(*a));
      }
    }
  }
}

TEST_CASE("unit_plus_root_witness finds roots of x^k-1") {
  RingPtr z3 = make_zn(3);
  auto w = unit_plus_root_witness(z3, 0, 2);
  REQUIRE(w.has_value());
  CHECK(w->s == 1);
  CHECK(w->u == 2);
  CHECK(w->root_order == 2);
  CHECK(witness_valid(*w));

  RingPtr z7 = make_zn(7);
  auto w7 = unit_plus_root_witness(z7, 3, 3);
  REQUIRE(w7.has_value());
  CHECK(w7->s == 1);  // 1 is the least cube root of 1; u = 2
  CHECK(w7->u == 2);
  CHECK(z7->pow(w7->s, 3) == 1);

  // no decomposition: Z2, x = 1, k = 1 forces s = 1, u = 0
  CHECK_FALSE(unit_plus_root_witness(make_zn(2), 1, 1).has_value());
}

TEST_CASE("check_witness catches each kind of corruption") {
  RingPtr z6 = make_zn(6);
  Witness w = *strongly_clean_witness(z6, 3);  // 3 = 4 + 5
  CHECK(witness_valid(w));

  Witness bad = w;
  bad.u = 2;  // breaks the sum and the unit
  WitnessChecks ch = check_witness(bad);
  CHECK_FALSE(ch.sum_ok);
  CHECK_FALSE(ch.unit_ok);

  bad = w;
  bad.s = 2;
  bad.u = 1;  // sum ok, but 2 is not idempotent
  ch = check_witness(bad);
  CHECK(ch.sum_ok);
  CHECK_FALSE(ch.root_ok);

  // commutation failure needs a noncommutative ring
  RingPtr t2 = make_triangular(make_zn(2), 2);
  CentralPoly p = int_poly(t2, {0, -1, 1});
  for (Elem x = 0; x < t2->order(); ++x) {
    auto wx = gx_witness(t2, x, p);
    REQUIRE(wx.has_value());
    for (Elem s = 0; s < t2->order(); ++s)
      for (Elem u = 0; u < t2->order(); ++u) {
        Witness probe{t2, x, s, u, p, WitnessKind::GxClean, 0};
        WitnessChecks pc = check_witness(probe);
        bool expect = t2->add(s, u) == x && p.eval(s) == t2->zero() &&
                      t2->is_unit(u) && t2->commutes(s, u);
        CHECK(pc.all() == expect);
      }
  }
}

TEST_CASE("ring_check matches the elementwise scan and stays worker-invariant") {
  RingPtr m2 = make_matrix(make_zn(3), 2);  // order 81 exercises the parallel path
  for (const auto& cs : std::vector<std::vector<long long>>{
           {0, -1, 1}, {1, 1, 1}, {0, -1, 0, 1}}) {
    CentralPoly p = int_poly(m2, cs);
    Verdict serial = ring_check(m2, p, false, 1);
    Verdict parallel = ring_check(m2, p, false, 4);
    CHECK(serial.holds == parallel.holds);
    CHECK(serial.failing_element == parallel.failing_element);
    // oracle: the first element with no witness
    std::optional<Elem> first_fail;
    for (Elem x = 0; x < m2->order() && !first_fail; ++x)
      if (!gx_witness(m2, x, p)) first_fail = x;
    CHECK(serial.holds == !first_fail.has_value());
    CHECK(serial.failing_element == first_fail);
  }
}

TEST_CASE("ring_check collects valid witnesses for every element when it holds") {
  RingPtr z9 = make_zn(9);
  Verdict v = ring_check(z9, int_poly(z9, {0, -1, 0, 1}), true);
  REQUIRE(v.holds);
  REQUIRE(v.witnesses.has_value());
  REQUIRE(v.witnesses->size() == 9);
  for (Elem x = 0; x < 9; ++x) {
    CHECK((*v.witnesses)[x].r == x);
    CHECK(witness_valid((*v.witnesses)[x]));
  }
}

TEST_CASE("first failing element is the least one") {
  RingPtr z2 = make_zn(2);
  Verdict v = ring_check(z2, int_poly(z2, {-1, 0, 1}), false);
  CHECK_FALSE(v.holds);
  CHECK(v.failing_element == 1);  // 0 = 1 + 1 works, 1 = 1 + 0 does not
}

TEST_CASE("zero polynomial checks are refused") {
  RingPtr z4 = make_zn(4);
  CentralPoly z = make_poly(z4, {0});
  CHECK_THROWS_AS(ring_check(z4, z, false), ZeroPolynomial);
  CHECK_THROWS_AS(gx_witness(z4, 1, z), ZeroPolynomial);
  CHECK_THROWS_AS(integers_gx_check(2, {0, 0}), ZeroPolynomial);
}

TEST_CASE("u_n_set matches the brute-force sum closure") {
  for (const char* spec : {"Zn 4", "Zn 6", "Mat 2 (Zn 2)", "GR (Zn 2) C2"}) {
    RingPtr r = parse_ring_spec(spec);
    const auto& units = r->units();
    std::set<Elem> reach(units.begin(), units.end());
    for (int n = 1; n <= 3; ++n) {
      CHECK(u_n_set(r, n) == std::vector<Elem>(reach.begin(), reach.end()));
      // grow: sums of one more unit
      std::set<Elem> next = reach;
      for (Elem x : reach)
        for (Elem u : units) next.insert(r->add(x, u));
      reach = std::move(next);
    }
  }
  CHECK(u_n_set(make_zn(4), 2) == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("integer decision agrees with a bounded search") {
  std::vector<std::vector<long long>> polys = {
      {0, 1, 1}, {0, -1, 1}, {1, 1, 1}, {0, -1, 0, 1}, {-4, 0, 1}, {6, -5, 1}};
  for (long long r = -6; r <= 6; ++r)
    for (const auto& cs : polys) {
      IntegerCheck got = integers_gx_check(r, cs);
      auto evalz = [&](long long s) {
        long long acc = 0, p = 1;
        for (long long c : cs) {
          acc += c * p;
          p *= s;
        }
        return acc;
      };
      // oracle: u must be 1 or -1, so s is r-1 or r+1; roots by wide scan
      bool clean = evalz(r - 1) == 0 || evalz(r + 1) == 0;
      std::vector<long long> roots;
      for (long long s = -100; s <= 100; ++s)
        if (evalz(s) == 0) roots.push_back(s);
      CHECK(got.clean == clean);
      CHECK(got.roots == roots);
      if (got.clean) {
        REQUIRE(got.witness.has_value());
        auto [s, u] = *got.witness;
        CHECK(s + u == r);
        CHECK((u == 1 || u == -1));
        CHECK(evalz(s) == 0);
      }
    }
  // pinned values
  CHECK_FALSE(integers_gx_check(2, {0, 1, 1}).clean);
  CHECK(integers_gx_check(2, {0, -1, 1}).witness == std::make_pair(1ll, 1ll));
  CHECK(integers_gx_check(0, {0, 1, 1}).witness == std::make_pair(-1ll, 1ll));
}

TEST_CASE("unit-regularity conditions: pinned rows and blanket agreement") {
  RingPtr z6 = make_zn(6);
  UnitRegularity a = unit_regularity_conditions(z6, 3, 1);
  CHECK(a.c1);
  CHECK(a.c2);
  CHECK(a.c3);
  RingPtr z4 = make_zn(4);
  UnitRegularity b = unit_regularity_conditions(z4, 2, 1);
  CHECK_FALSE(b.c1);
  CHECK_FALSE(b.c2);
  CHECK_FALSE(b.c3);
  for (const char* spec : {"Zn 5", "Zn 8", "Tri 2 (Zn 2)", "Mat 2 (Zn 2)"}) {
    RingPtr r = parse_ring_spec(spec);
    for (int n = 1; n <= 3; ++n)
      for (Elem x = 0; x < r->order(); ++x)
        CHECK(unit_regularity_conditions(r, x, n).all_equal());
  }
}

TEST_CASE("root-or-idempotent disjunction") {
  RingPtr z2 = make_zn(2);
  Disjunction d = root_or_idempotent_disjunction(z2, 1, 2);
  CHECK(d.holds());
  CHECK_FALSE(d.unit_plus_root);  // 1 = u + v with v = 1 forces u = 0
  CHECK(d.one_sided_idempotents);
  REQUIRE(d.left_idem.has_value());
  CHECK(d.left_idem->second == 1);  // the idempotent found is 1 itself

  RingPtr z9 = make_zn(9);
  Disjunction d9 = root_or_idempotent_disjunction(z9, 3, 3);
  CHECK(d9.holds());
  CHECK(d9.unit_plus_root);
  REQUIRE(d9.root_witness.has_value());
  CHECK(witness_valid(*d9.root_witness));
  CHECK(z9->pow(d9.root_witness->s, 2) == 1);

  // every element of every strongly (x^n-x)-clean ring passes
  for (const char* spec : {"Zn 4", "Zn 6", "Mat 2 (Zn 2)", "GR (Zn 7) C3"}) {
    RingPtr r = parse_ring_spec(spec);
    for (int n : {2, 3}) {
      std::vector<long long> cs(static_cast<std::size_t>(n) + 1, 0);
      cs[1] = -1;
      cs[static_cast<std::size_t>(n)] = 1;
      Verdict pre = ring_check(r, int_poly(r, cs));
      if (!pre.holds) continue;
      for (Elem a = 0; a < r->order(); ++a) {
        Disjunction da = root_or_idempotent_disjunction(r, a, n, &pre);
        CHECK(da.holds());
        if (da.root_witness) CHECK(witness_valid(*da.root_witness));
        if (da.left_idem) {
          CHECK(da.left_idem->second != r->zero());
          CHECK(r->is_idempotent(da.left_idem->second));
          CHECK(r->mul(a, da.left_idem->first) == da.left_idem->second);
        }
        if (da.right_idem) {
          CHECK(da.right_idem->second != r->zero());
          CHECK(r->is_idempotent(da.right_idem->second));
          CHECK(r->mul(da.right_idem->first, a) == da.right_idem->second);
        }
      }
    }
  }
}

TEST_CASE("disjunction preconditions") {
  RingPtr z4 = make_zn(4);
  CHECK_THROWS_AS(root_or_idempotent_disjunction(z4, 1, 1), InvalidConstruction);
  Verdict fake;
  fake.holds = false;
  fake.failing_element = 0;
  CHECK_THROWS_AS(root_or_idempotent_disjunction(z4, 1, 2, &fake),
                  PreconditionFailed);
}

TEST_CASE("strongly_clean_all covers the catalog-sized rings") {
  for (const char* spec :
       {"Zn 2", "Zn 9", "Mat 2 (Zn 3)", "Tri 2 (Zn 4)", "GR (Zn 2) C3"}) {
    RingPtr r = parse_ring_spec(spec);
    CHECK(strongly_clean_all(r));  // finite rings are strongly clean
    Verdict v = ring_check(r, int_poly(r, {0, -1, 1}));
    CHECK(v.holds);
  }
}
