#pragma once

#include <string>
#include <utility>
#include <vector>

#include "strongclean/ring.hpp"

namespace strongclean {

// A polynomial over a ring whose coefficients all lie in the center.
// Coefficients are stored constant term first with trailing zeros trimmed,
// so the zero polynomial has an empty coefficient list and degree() == -1.
class CentralPoly {
public:
  CentralPoly() = default;  // empty shell, only useful as a container slot

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Elem eval(Elem s) const;              // Horner; zero polynomial evaluates to 0
  std::vector<Elem> roots() const;      // ascending; zero polynomial: every element
  std::string to_string() const;        // human-readable, e.g. "x^2+3x"

  bool operator==(const CentralPoly& o) const {
    return ring_ == o.ring_ && coeffs_ == o.coeffs_;
  }

  friend CentralPoly make_poly(const RingPtr&, std::vector<Elem>);

private:
  RingPtr ring_;
  std::vector<Elem> coeffs_;
};

// Throws NonCentralCoefficient (with the offending index) unless every
// coefficient is central, and InvalidConstruction on out-of-range indices.
CentralPoly make_poly(const RingPtr& r, std::vector<Elem> coeffs);

// Integer coefficients mapped through from_int; always central.
CentralPoly int_poly(const RingPtr& r, const std::vector<long long>& coeffs);

// (x - a)(x - b) for central a, b; throws NonCentralParameter otherwise.
CentralPoly quadratic_from_roots(const RingPtr& r, Elem a, Elem b);

CentralPoly poly_add(const CentralPoly& p, const CentralPoly& q);
CentralPoly poly_mul(const CentralPoly& p, const CentralPoly& q);

// Long division of p by the monic quadratic (x-a)(x-b); valid because the
// divisor is monic with central coefficients. Returns {quotient, remainder}
// with degree(remainder) < 2.
std::pair<CentralPoly, CentralPoly> divide_monic_quadratic(const CentralPoly& p,
                                                           Elem a, Elem b);

// Push coefficients through a surjective map; throws NotSurjective otherwise.
// The result is renormalized (trailing zeros trimmed).
CentralPoly induced_poly(const RingMap& m, const CentralPoly& p);

}  // namespace strongclean
