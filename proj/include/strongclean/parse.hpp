#pragma once

#include <string>

#include "strongclean/poly.hpp"
#include "strongclean/ring.hpp"

namespace strongclean {

// Ring specification grammar (whitespace insensitive):
//   Zn <n> | Prod(<spec>, <spec>, ...) | Mat <k> (<spec>) | Tri <n> (<spec>)
//   | GR (<spec>) C<k> | Quot (<spec>) {<idx>, ...} | Corner (<spec>) <idx>
//   | TPS (<spec>) <k>
// Constructed rings name themselves in this grammar, so name() re-parses to
// an identical ring.
RingPtr parse_ring_spec(const std::string& text, std::size_t cap = kDefaultSizeCap);

// Polynomial literal: poly[c0,c1,...] with constant term first. Each entry is
// either an integer (mapped through the ring's canonical integer image) or
// #<idx> for an explicit element index.
CentralPoly parse_poly(const std::string& text, const RingPtr& ring);

// Canonical serialization of a polynomial, always index form: poly[#c0,#c1,...]
std::string poly_literal(const CentralPoly& p);

}  // namespace strongclean
