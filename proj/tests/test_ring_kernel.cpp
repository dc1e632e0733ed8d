#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "strongclean/parse.hpp"
#include "strongclean/ring.hpp"

using namespace strongclean;

namespace {

// 2x2 bit matrix helpers, written against plain ints so they share nothing
// with the library's table machinery.
struct Bit2 {
  int a, b, c, d;
};
Bit2 bit2_of(const RingPtr& m2, Elem x) {
  auto cs = decode_components(m2, x);
  return {cs[0], cs[1], cs[2], cs[3]};
}
int bit2_det(const Bit2& m) { return (m.a * m.d + m.b * m.c) % 2; }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

TEST_CASE("Zn tables agree with integer arithmetic") {
  for (int n : {2, 3, 4, 6, 9, 12}) {
    RingPtr r = make_zn(n);
    REQUIRE(r->order() == n);
    CHECK(r->zero() == 0);
    CHECK(r->one() == (n == 1 ? 0 : 1));
    CHECK(r->characteristic() == n);
    for (Elem i = 0; i < n; ++i) {
      CHECK(r->neg(i) == (n - i) % n);
      for (Elem j = 0; j < n; ++j) {
        CHECK(r->add(i, j) == (i + j) % n);
        CHECK(r->mul(i, j) == (i * j) % n);
      }
    }
    // unit iff coprime, computed here by gcd rather than inverse search
    for (Elem i = 0; i < n; ++i)
      CHECK(r->is_unit(i) == (gcd_ll(i, n) == 1));
  }
}

TEST_CASE("Z6 derived sets") {
  RingPtr z6 = make_zn(6);
  CHECK(z6->units() == std::vector<Elem>{1, 5});
  CHECK(z6->idempotents() == std::vector<Elem>{0, 1, 3, 4});
  CHECK(z6->center() == std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(z6->is_commutative());
  CHECK(z6->inverse(5) == 5);
  CHECK_FALSE(z6->inverse(2).has_value());
}

TEST_CASE("M2(Z2) units match the determinant criterion") {
  RingPtr m2 = make_matrix(make_zn(2), 2);
  REQUIRE(m2->order() == 16);
  int invertible = 0;
  for (Elem x = 0; x < 16; ++x) {
    bool det1 = bit2_det(bit2_of(m2, x)) == 1;
    invertible += det1;
    CHECK(m2->is_unit(x) == det1);
  }
  CHECK(invertible == 6);  // |GL2(F2)| = (4-1)(4-2)
  CHECK(m2->units().size() == 6);

  // identity is [[1,0],[0,1]] = index 9 under row-major, first digit most
  // significant; [[1,0],[0,0]] sits at 8
  CHECK(m2->one() == 9);
  CHECK(encode_components(m2, {1, 0, 0, 0}) == 8);
  CHECK(m2->is_idempotent(8));
  CHECK_FALSE(m2->is_commutative());
}

TEST_CASE("M2(Z2) center is the scalar matrices") {
  RingPtr m2 = make_matrix(make_zn(2), 2);
  // independent check: commuting with E01 and E10 forces a scalar matrix
  std::vector<Elem> expect;
  Elem e01 = encode_components(m2, {0, 1, 0, 0});
  Elem e10 = encode_components(m2, {0, 0, 1, 0});
  for (Elem x = 0; x < m2->order(); ++x)
    if (m2->commutes(x, e01) && m2->commutes(x, e10)) expect.push_back(x);
  CHECK(expect == std::vector<Elem>{0, 9});
  CHECK(m2->center() == expect);
}

TEST_CASE("matrix multiplication spot check against hand arithmetic") {
  RingPtr m3 = make_matrix(make_zn(3), 2);
  auto enc = [&](int a, int b, int c, int d) {
    return encode_components(m3, {static_cast<Elem>(a), static_cast<Elem>(b),
                                  static_cast<Elem>(c), static_cast<Elem>(d)});
  };
  // [[1,2],[0,1]] * [[2,1],[1,1]] = [[4,3],[1,1]] = [[1,0],[1,1]] mod 3
  CHECK(m3->mul(enc(1, 2, 0, 1), enc(2, 1, 1, 1)) == enc(1, 0, 1, 1));
  CHECK(m3->one() == enc(1, 0, 0, 1));
  CHECK(m3->one() == 28);
}

TEST_CASE("product encoding is lexicographic, first factor most significant") {
  RingPtr f22 = make_product({make_zn(2), make_zn(2)});
  CHECK(f22->order() == 4);
  CHECK(encode_components(f22, {1, 0}) == 2);
  CHECK(decode_components(f22, 3) == std::vector<Elem>{1, 1});
  CHECK(f22->label(2) == "(1,0)");
  CHECK(f22->characteristic() == 2);
  CHECK(f22->idempotents() == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("Z6 is isomorphic to Z2 x Z3 via the residue map") {
  RingPtr z6 = make_zn(6);
  RingPtr p = make_product({make_zn(2), make_zn(3)});
  std::vector<Elem> iso(6);
  std::set<Elem> image;
  for (Elem x = 0; x < 6; ++x) {
    iso[x] = encode_components(p, {x % 2, x % 3});
    image.insert(iso[x]);
  }
  CHECK(image.size() == 6);  // bijective
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      CHECK(iso[z6->add(x, y)] == p->add(iso[x], iso[y]));
      CHECK(iso[z6->mul(x, y)] == p->mul(iso[x], iso[y]));
    }
  CHECK(iso[z6->one()] == p->one());
}

TEST_CASE("triangular rings: units need invertible diagonal") {
  RingPtr t2 = make_triangular(make_zn(2), 2);
  REQUIRE(t2->order() == 8);
  // entries stored (0,0),(0,1),(1,1); invertible iff both diagonal entries are
  CHECK(t2->units() == std::vector<Elem>{5, 7});
  for (Elem x = 0; x < 8; ++x) {
    auto cs = decode_components(t2, x);
    CHECK(t2->is_unit(x) == (cs[0] == 1 && cs[2] == 1));
  }
  CHECK_FALSE(t2->is_commutative());

  RingPtr t24 = make_triangular(make_zn(4), 2);
  int units = 0;
  for (Elem x = 0; x < t24->order(); ++x) {
    auto cs = decode_components(t24, x);
    bool expect = (cs[0] % 2 == 1) && (cs[2] % 2 == 1);
    CHECK(t24->is_unit(x) == expect);
    units += expect;
  }
  CHECK(units == 16);  // 2 * 4 * 2
}

TEST_CASE("group ring Z2[C2] has the expected nilpotent") {
  RingPtr r = make_group_ring(make_zn(2), cyclic_group(2));
  REQUIRE(r->order() == 4);
  Elem x = encode_components(r, {1, 1});  // 1 + g
  CHECK(r->mul(x, x) == r->zero());       // (1+g)^2 = 2 + 2g = 0 in char 2
  CHECK(r->is_commutative());
  CHECK(r->units() == std::vector<Elem>{1, 2});  // 1 and g
}

TEST_CASE("truncated power series: t is nilpotent, constant term rules units") {
  RingPtr r = make_trunc_power_series(make_zn(4), 2);
  REQUIRE(r->order() == 16);
  Elem t = encode_components(r, {0, 1});
  CHECK(r->mul(t, t) == r->zero());
  for (Elem x = 0; x < 16; ++x) {
    auto cs = decode_components(r, x);
    CHECK(r->is_unit(x) == (cs[0] % 2 == 1));
  }
}

TEST_CASE("quotient Z8 by (4) behaves like Z4") {
  auto [q, epi] = make_quotient(make_zn(8), {4});
  REQUIRE(q->order() == 4);
  CHECK(q->characteristic() == 4);
  CHECK(epi.surjective());
  CHECK(epi(0) == epi(4));
  // cosets keep Z4 arithmetic: compare through the map
  RingPtr z8 = epi.domain();
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      CHECK(epi(z8->add(x, y)) == q->add(epi(x), epi(y)));
      CHECK(epi(z8->mul(x, y)) == q->mul(epi(x), epi(y)));
    }
}

TEST_CASE("corner ring at an idempotent of M2(Z2)") {
  RingPtr m2 = make_matrix(make_zn(2), 2);
  RingPtr c = make_corner(m2, 8);  // e = [[1,0],[0,0]]
  CHECK(c->order() == 2);          // eRe = {0, e}, a copy of Z2
  CHECK(c->one() == 1);
  CHECK(c->verify_axioms().ok());
  CHECK_THROWS_AS(make_corner(m2, encode_components(m2, {0, 1, 0, 0})),
                  NotIdempotent);
}

TEST_CASE("axiom audit flags corrupted tables") {
  RingPtr z3 = make_zn(3);
  CHECK(z3->verify_axioms().ok());

  // copy Z3's tables and break one multiplication entry
  std::vector<Elem> add, mul;
  for (Elem i = 0; i < 3; ++i)
    for (Elem j = 0; j < 3; ++j) {
      add.push_back((i + j) % 3);
      mul.push_back((i * j) % 3);
    }
  mul[2 * 3 + 2] = 2;  // 2*2 = 2 breaks associativity/distributivity
  FiniteRing broken("broken", Construction{}, 3, add, mul, 0, 1,
                    {"0", "1", "2"});
  AxiomReport rep = broken.verify_axioms();
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.first_failure().empty());
}

TEST_CASE("ring maps validate on construction") {
  RingPtr z2 = make_zn(2);
  RingPtr z4 = make_zn(4);
  // x -> x is not additive from Z2 to Z4 (1+1 mismatch)
  CHECK_THROWS_AS(RingMap(z2, z4, std::vector<Elem>{0, 1}), InvalidConstruction);
  // diagonal into Z2 x Z2 is a valid non-surjective map
  RingPtr f22 = make_product({z2, z2});
  RingMap diag(z2, f22, {0, 3});
  CHECK_FALSE(diag.surjective());
  CHECK(diag(1) == 3);
}

TEST_CASE("size caps and parse errors") {
  CHECK_THROWS_AS(make_matrix(make_zn(9), 2, 100), SizeCapExceeded);
  CHECK_THROWS_AS(parse_ring_spec("Mat 2 (Zn 9)", 100), SizeCapExceeded);
  CHECK_THROWS_AS(parse_ring_spec("Zn 0"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Frob 3"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Corner (Zn 4) 7"), ParseError);
  CHECK_NOTHROW(parse_ring_spec("Quot (Zn 8) {4}"));
}

TEST_CASE("from_int wraps through the characteristic") {
  RingPtr z5 = make_zn(5);
  CHECK(z5->from_int(7) == 2);
  CHECK(z5->from_int(-1) == 4);
  CHECK(z5->from_int(0) == 0);
  RingPtr m2 = make_matrix(make_zn(2), 2);
  CHECK(m2->from_int(3) == m2->one());
  CHECK(m2->from_int(2) == m2->zero());
}

TEST_CASE("pow is repeated multiplication") {
  RingPtr z7 = make_zn(7);
  for (Elem a = 0; a < 7; ++a) {
    Elem acc = z7->one();
    for (int k = 0; k <= 8; ++k) {
      CHECK(z7->pow(a, k) == acc);
      acc = z7->mul(acc, a);
    }
  }
}
