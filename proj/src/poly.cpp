#include "strongclean/poly.hpp"

#include <algorithm>

namespace strongclean {

namespace {

void trim(std::vector<Elem>& c, const FiniteRing& r) {
  while (!c.empty() && c.back() == r.zero()) c.pop_back();
}

}  // namespace

CentralPoly make_poly(const RingPtr& r, std::vector<Elem> coeffs) {
  if (!r) throw InvalidConstruction("null ring for polynomial");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0 || coeffs[i] >= r->order())
      throw InvalidConstruction("coefficient index out of range at position " +
                                std::to_string(i));
    if (!r->is_central(coeffs[i]))
      throw NonCentralCoefficient(static_cast<int>(i),
                                  "coefficient at position " + std::to_string(i) +
                                      " (element " + std::to_string(coeffs[i]) +
                                      ") is not central in " + r->name());
  }
  trim(coeffs, *r);
  CentralPoly p;
  p.ring_ = r;
  p.coeffs_ = std::move(coeffs);
  return p;
}

CentralPoly int_poly(const RingPtr& r, const std::vector<long long>& coeffs) {
  std::vector<Elem> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = r->from_int(coeffs[i]);
  return make_poly(r, std::move(c));
}

CentralPoly quadratic_from_roots(const RingPtr& r, Elem a, Elem b) {
  if (!r->is_central(a) || !r->is_central(b))
    throw NonCentralParameter("quadratic roots must be central in " + r->name());
  // (x-a)(x-b) = x^2 - (a+b)x + ab
  return make_poly(r, {r->mul(a, b), r->neg(r->add(a, b)), r->one()});
}

Elem CentralPoly::eval(Elem s) const {
  if (coeffs_.empty()) return ring_->zero();
  Elem acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
    acc = ring_->add(ring_->mul(acc, s), coeffs_[i]);
  return acc;
}

std::vector<Elem> CentralPoly::roots() const {
  std::vector<Elem> out;
  for (Elem s = 0; s < ring_->order(); ++s)
    if (eval(s) == ring_->zero()) out.push_back(s);
  return out;
}

std::string CentralPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Elem c = coeffs_[i];
    if (c == ring_->zero()) continue;
    std::string term;
    if (i == 0) {
      term = ring_->label(c);
    } else {
      std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
      if (c == ring_->one()) {
        term = xs;
      } else {
        std::string cl = ring_->label(c);
        if (cl.find('+') != std::string::npos) cl = "(" + cl + ")";
        term = cl + xs;
      }
    }
    out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

CentralPoly poly_add(const CentralPoly& p, const CentralPoly& q) {
  if (p.ring() != q.ring()) throw InvalidConstruction("polynomial rings differ");
  const RingPtr& r = p.ring();
  std::vector<Elem> c(std::max(p.coeffs().size(), q.coeffs().size()), r->zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Elem a = i < p.coeffs().size() ? p.coeffs()[i] : r->zero();
    Elem b = i < q.coeffs().size() ? q.coeffs()[i] : r->zero();
    c[i] = r->add(a, b);
  }
  return make_poly(r, std::move(c));
}

CentralPoly poly_mul(const CentralPoly& p, const CentralPoly& q) {
  if (p.ring() != q.ring()) throw InvalidConstruction("polynomial rings differ");
  const RingPtr& r = p.ring();
  if (p.is_zero() || q.is_zero()) return make_poly(r, {});
  std::vector<Elem> c(p.coeffs().size() + q.coeffs().size() - 1, r->zero());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      c[i + j] = r->add(c[i + j], r->mul(p.coeffs()[i], q.coeffs()[j]));
  return make_poly(r, std::move(c));
}

std::pair<CentralPoly, CentralPoly> divide_monic_quadratic(const CentralPoly& p,
                                                           Elem a, Elem b) {
  const RingPtr& r = p.ring();
  if (!r) throw InvalidConstruction("cannot divide an empty polynomial shell");
  if (!r->is_central(a) || !r->is_central(b))
    throw NonCentralParameter("divisor roots must be central in " + r->name());
  if (p.degree() < 2) return {make_poly(r, {}), p};

  const Elem s1 = r->add(a, b);   // x coefficient of the divisor, negated
  const Elem s0 = r->mul(a, b);
  std::vector<Elem> rem = p.coeffs();
  std::vector<Elem> quot(rem.size() - 2, r->zero());
  for (std::size_t i = rem.size(); i-- > 2;) {
    Elem c = rem[i];
    if (c == r->zero()) continue;
    quot[i - 2] = c;
    rem[i] = r->zero();
    rem[i - 1] = r->add(rem[i - 1], r->mul(c, s1));
    rem[i - 2] = r->sub(rem[i - 2], r->mul(c, s0));
  }
  rem.resize(2);
  return {make_poly(r, std::move(quot)), make_poly(r, std::move(rem))};
}

CentralPoly induced_poly(const RingMap& m, const CentralPoly& p) {
  if (!m.surjective())
    throw NotSurjective("induced polynomial needs a surjective map from " +
                        m.domain()->name());
  if (p.ring() != m.domain())
    throw InvalidConstruction("polynomial does not live over the map's domain");
  std::vector<Elem> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m(p.coeffs()[i]);
  return make_poly(m.codomain(), std::move(c));
}

}  // namespace strongclean
