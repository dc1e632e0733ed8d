#include "strongclean/transforms.hpp"

#include "strongclean/parse.hpp"

namespace strongclean {

namespace {

void require_valid(const Witness& w, const char* what) {
  if (!w.ring) throw InvalidInputWitness(std::string(what) + ": witness has no ring");
  if (!witness_valid(w))
    throw InvalidInputWitness(std::string(what) + ": input witness does not validate");
}

void require_element(const Witness& w, Elem r, const char* what) {
  if (w.r != r)
    throw InvalidInputWitness(std::string(what) + ": witness certifies element " +
                              std::to_string(w.r) + ", expected " + std::to_string(r));
}

void require_poly(const Witness& w, const CentralPoly& p, const char* what) {
  if (!(w.poly == p))
    throw InvalidInputWitness(std::string(what) + ": witness is against " +
                              poly_literal(w.poly) + ", expected " + poly_literal(p));
}

Elem unit_or_throw(const RingPtr& ring, Elem d, const char* what) {
  auto inv = ring->inverse(d);
  if (!inv)
    throw NotAUnit(std::string(what) + ": element " + std::to_string(d) +
                   " is not a unit of " + ring->name());
  return *inv;
}

void require_central_pair(const RingPtr& ring, Elem a, Elem b) {
  if (!ring->is_central(a) || !ring->is_central(b))
    throw NonCentralParameter("parameters a, b must be central in " + ring->name());
}

// a x^{2n} +/- b x with the sign applied to b.
CentralPoly even_odd_poly(const RingPtr& ring, Elem a, Elem b, int n, bool plus) {
  std::vector<Elem> c(static_cast<std::size_t>(2 * n) + 1, ring->zero());
  c[1] = plus ? b : ring->neg(b);
  c[static_cast<std::size_t>(2 * n)] = a;
  return make_poly(ring, std::move(c));
}

}  // namespace

Witness clean_to_quadratic(const RingPtr& ring, Elem a, Elem b, Elem r, const Witness& w) {
  require_central_pair(ring, a, b);
  const Elem d = ring->sub(b, a);
  unit_or_throw(ring, d, "clean_to_quadratic");
  Elem dinv = *ring->inverse(d);
  if (w.ring != ring || w.kind != WitnessKind::Clean)
    throw InvalidInputWitness("clean_to_quadratic: expected a clean witness");
  require_valid(w, "clean_to_quadratic");
  require_element(w, ring->mul(ring->sub(r, a), dinv), "clean_to_quadratic");

  Elem s = ring->add(ring->mul(w.s, d), a);
  Elem u = ring->mul(w.u, d);
  return Witness{ring, r, s, u, quadratic_from_roots(ring, a, b), WitnessKind::GxClean, 0};
}

Witness quadratic_to_clean(const RingPtr& ring, Elem a, Elem b, Elem r, const Witness& w) {
  require_central_pair(ring, a, b);
  const Elem d = ring->sub(b, a);
  Elem dinv = unit_or_throw(ring, d, "quadratic_to_clean");
  if (w.ring != ring || w.kind != WitnessKind::GxClean)
    throw InvalidInputWitness("quadratic_to_clean: expected a witness against (x-a)(x-b)");
  require_poly(w, quadratic_from_roots(ring, a, b), "quadratic_to_clean");
  require_valid(w, "quadratic_to_clean");
  require_element(w, ring->add(ring->mul(r, d), a), "quadratic_to_clean");

  Elem e = ring->mul(ring->sub(w.s, a), dinv);
  Elem u = ring->mul(w.u, dinv);
  return Witness{ring, r, e, u, int_poly(ring, {0, -1, 1}), WitnessKind::Clean, 0};
}

Witness to_unit_plus_involution(const RingPtr& ring, Elem a, const Witness& w) {
  if (w.ring != ring || w.kind != WitnessKind::GxClean)
    throw InvalidInputWitness("to_unit_plus_involution: expected a witness against x^2-2x");
  require_poly(w, int_poly(ring, {0, -2, 1}), "to_unit_plus_involution");
  require_valid(w, "to_unit_plus_involution");
  require_element(w, ring->sub(ring->one(), a), "to_unit_plus_involution");

  Elem v = ring->sub(ring->one(), w.s);
  Elem u = ring->neg(w.u);
  return Witness{ring, a, v, u, int_poly(ring, {-1, 0, 1}), WitnessKind::UnitPlusRoot, 2};
}

Witness from_unit_plus_involution(const RingPtr& ring, Elem a, const Witness& w) {
  if (w.ring != ring || w.kind != WitnessKind::UnitPlusRoot || w.root_order != 2)
    throw InvalidInputWitness("from_unit_plus_involution: expected unit plus square root of 1");
  require_valid(w, "from_unit_plus_involution");
  require_element(w, a, "from_unit_plus_involution");

  Elem s = ring->sub(ring->one(), w.s);
  Elem u = ring->neg(w.u);
  return Witness{ring, ring->sub(ring->one(), a), s, u, int_poly(ring, {0, -2, 1}),
                 WitnessKind::GxClean, 0};
}

CubeRootLift cube_root_lift(const Witness& w) {
  if (!w.ring || w.kind != WitnessKind::GxClean)
    throw InvalidInputWitness("cube_root_lift: expected a witness against x^2+x+1");
  const RingPtr& ring = w.ring;
  require_poly(w, int_poly(ring, {1, 1, 1}), "cube_root_lift");
  require_valid(w, "cube_root_lift");

  CubeRootLift out;
  out.quartic = Witness{ring, w.r, w.s, w.u, int_poly(ring, {0, -1, 0, 0, 1}),
                        WitnessKind::GxClean, 0};
  out.unit_plus_cube_root =
      Witness{ring, w.r, w.s, w.u, int_poly(ring, {-1, 0, 0, 1}), WitnessKind::UnitPlusRoot, 3};
  return out;
}

Witness negate_witness(const Witness& w, Elem a, Elem b, int n) {
  if (!w.ring) throw InvalidInputWitness("negate_witness: witness has no ring");
  const RingPtr& ring = w.ring;
  if (n < 1) throw InvalidConstruction("negate_witness needs n >= 1");
  require_central_pair(ring, a, b);
  CentralPoly minus = even_odd_poly(ring, a, b, n, false);
  CentralPoly plus = even_odd_poly(ring, a, b, n, true);
  CentralPoly target;
  if (w.poly == minus)
    target = plus;
  else if (w.poly == plus)
    target = minus;
  else
    throw InvalidInputWitness("negate_witness: witness polynomial matches neither sign");
  if (w.kind != WitnessKind::GxClean)
    throw InvalidInputWitness("negate_witness: expected a polynomial witness");
  require_valid(w, "negate_witness");

  return Witness{ring, ring->neg(w.r), ring->neg(w.s), ring->neg(w.u), target,
                 WitnessKind::GxClean, 0};
}

Witness pushforward(const RingMap& m, const Witness& w) {
  if (!m.surjective())
    throw NotSurjective("pushforward needs a surjective map from " + m.domain()->name());
  if (w.ring != m.domain())
    throw InvalidInputWitness("pushforward: witness does not live over the map's domain");
  require_valid(w, "pushforward");

  Witness out;
  out.ring = m.codomain();
  out.r = m(w.r);
  out.s = m(w.s);
  out.u = m(w.u);
  out.kind = w.kind;
  out.root_order = w.root_order;
  switch (w.kind) {
    case WitnessKind::GxClean:
      out.poly = induced_poly(m, w.poly);
      break;
    case WitnessKind::Clean:
      out.poly = int_poly(out.ring, {0, -1, 1});
      break;
    case WitnessKind::UnitPlusRoot: {
      std::vector<long long> c(static_cast<std::size_t>(w.root_order) + 1, 0);
      c[0] = -1;
      c[static_cast<std::size_t>(w.root_order)] = 1;
      out.poly = int_poly(out.ring, c);
      break;
    }
  }
  return out;
}

}  // namespace strongclean
