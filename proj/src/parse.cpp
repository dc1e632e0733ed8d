#include "strongclean/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace strongclean {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError(start, "expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(start, "expected a name");
    return text.substr(start, pos - start);
  }
};

RingPtr parse_ring(Cursor& c, std::size_t cap);

int small_int(Cursor& c, const char* what) {
  std::size_t at = c.pos;
  long long v = c.integer();
  if (v < 0 || v > static_cast<long long>(kDefaultSizeCap))
    throw ParseError(at, std::string("unreasonable ") + what);
  return static_cast<int>(v);
}

RingPtr parse_ring(Cursor& c, std::size_t cap) {
  std::size_t at = c.pos;
  std::string head = c.ident();
  if (head == "Zn") {
    std::size_t nat = c.pos;
    int n = small_int(c, "modulus");
    if (n < 1) throw ParseError(nat, "Zn needs n >= 1");
    return make_zn(n, cap);
  }
  if (head == "Prod") {
    c.expect('(');
    std::vector<RingPtr> factors;
    factors.push_back(parse_ring(c, cap));
    while (c.peek() == ',') {
      c.expect(',');
      factors.push_back(parse_ring(c, cap));
    }
    c.expect(')');
    return make_product(factors, cap);
  }
  if (head == "Mat" || head == "Tri") {
    std::size_t kat = c.pos;
    int k = small_int(c, "matrix size");
    if (k < 1) throw ParseError(kat, head + " needs size >= 1");
    c.expect('(');
    RingPtr base = parse_ring(c, cap);
    c.expect(')');
    return head == "Mat" ? make_matrix(base, k, cap) : make_triangular(base, k, cap);
  }
  if (head == "GR") {
    c.expect('(');
    RingPtr base = parse_ring(c, cap);
    c.expect(')');
    std::size_t gat = c.pos;
    std::string gname = c.ident();
    if (gname != "C") throw ParseError(gat, "expected a cyclic group C<k>");
    int k = small_int(c, "group order");
    if (k < 1) throw ParseError(gat, "group order must be >= 1");
    return make_group_ring(base, cyclic_group(k), cap);
  }
  if (head == "Quot") {
    c.expect('(');
    RingPtr base = parse_ring(c, cap);
    c.expect(')');
    c.expect('{');
    std::vector<Elem> gens;
    if (c.peek() != '}') {
      gens.push_back(static_cast<Elem>(small_int(c, "generator index")));
      while (c.peek() == ',') {
        c.expect(',');
        gens.push_back(static_cast<Elem>(small_int(c, "generator index")));
      }
    }
    c.expect('}');
    for (Elem g : gens)
      if (g >= base->order())
        throw ParseError(c.pos, "generator index " + std::to_string(g) +
                                    " out of range for " + base->name());
    return make_quotient(base, gens).first;
  }
  if (head == "Corner") {
    c.expect('(');
    RingPtr base = parse_ring(c, cap);
    c.expect(')');
    std::size_t eat = c.pos;
    int e = small_int(c, "idempotent index");
    if (e >= base->order())
      throw ParseError(eat, "idempotent index out of range for " + base->name());
    return make_corner(base, static_cast<Elem>(e));
  }
  if (head == "TPS") {
    c.expect('(');
    RingPtr base = parse_ring(c, cap);
    c.expect(')');
    std::size_t kat = c.pos;
    int k = small_int(c, "truncation order");
    if (k < 1) throw ParseError(kat, "TPS needs truncation order >= 1");
    return make_trunc_power_series(base, k, cap);
  }
  throw ParseError(at, "unknown ring constructor '" + head + "'");
}

}  // namespace

RingPtr parse_ring_spec(const std::string& text, std::size_t cap) {
  Cursor c{text};
  RingPtr r = parse_ring(c, cap);
  if (!c.done()) throw ParseError(c.pos, "trailing input after ring spec");
  return r;
}

CentralPoly parse_poly(const std::string& text, const RingPtr& ring) {
  if (!ring) throw InvalidConstruction("null ring for polynomial literal");
  Cursor c{text};
  std::size_t at = c.pos;
  if (c.ident() != "poly") throw ParseError(at, "polynomial literal must start with 'poly'");
  c.expect('[');
  std::vector<Elem> coeffs;
  if (c.peek() != ']') {
    for (;;) {
      if (c.peek() == '#') {
        c.expect('#');
        std::size_t iat = c.pos;
        long long idx = c.integer();
        if (idx < 0 || idx >= ring->order())
          throw ParseError(iat, "element index out of range for " + ring->name());
        coeffs.push_back(static_cast<Elem>(idx));
      } else {
        coeffs.push_back(ring->from_int(c.integer()));
      }
      if (c.peek() != ',') break;
      c.expect(',');
    }
  }
  c.expect(']');
  if (!c.done()) throw ParseError(c.pos, "trailing input after polynomial");
  return make_poly(ring, std::move(coeffs));
}

std::string poly_literal(const CentralPoly& p) {
  std::string out = "poly[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out += (i ? ",#" : "#") + std::to_string(p.coeffs()[i]);
  return out + "]";
}

}  // namespace strongclean
