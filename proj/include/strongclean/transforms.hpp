#pragma once

#include "strongclean/decompose.hpp"

namespace strongclean {

// Constructive conversions between decomposition kinds. Every function
// validates its input witness (throwing InvalidInputWitness when it does not
// certify what the conversion needs) and produces an output witness that
// revalidates; the conversions are exact inverses of each other where paired.

// Clean witness for (r-a)(b-a)^{-1}  ->  witness for r against (x-a)(x-b).
// Needs central a, b with b-a a unit; s = e(b-a)+a, u' = u(b-a).
Witness clean_to_quadratic(const RingPtr& ring, Elem a, Elem b, Elem r, const Witness& w);

// Witness for r(b-a)+a against (x-a)(x-b)  ->  clean witness for r.
// e = (s-a)(b-a)^{-1}, u' = u(b-a)^{-1}.
Witness quadratic_to_clean(const RingPtr& ring, Elem a, Elem b, Elem r, const Witness& w);

// Witness for 1-a against x^2-2x  ->  a = u' + v with v^2 = 1, u'v = vu'.
// v = 1-s, u' = -u.
Witness to_unit_plus_involution(const RingPtr& ring, Elem a, const Witness& w);

// Inverse direction: a = u + v with v^2 = 1  ->  witness for 1-a against
// x^2-2x, via s = 1-v, u' = -u (then s^2 = 2s).
Witness from_unit_plus_involution(const RingPtr& ring, Elem a, const Witness& w);

// A witness against x^2+x+1 satisfies s^3 = 1, so it also certifies r against
// x^4-x and exhibits r as unit plus a commuting cube root of 1.
struct CubeRootLift {
  Witness quartic;             // same (s,u) against x^4 - x
  Witness unit_plus_cube_root; // same (s,u), kind UnitPlusRoot with k = 3
};
CubeRootLift cube_root_lift(const Witness& w);

// Witness for r against a x^{2n} - b x  <->  witness for -r against
// a x^{2n} + b x, by negating all three of (r, s, u). Applying the map twice
// returns the original witness. The direction is inferred from w.poly.
Witness negate_witness(const Witness& w, Elem a, Elem b, int n);

// Image of a witness under a surjective homomorphism; the polynomial is pushed
// through induced_poly and the kind is preserved.
Witness pushforward(const RingMap& m, const Witness& w);

}  // namespace strongclean
