#include <algorithm>
#include <string>
#include <vector>

#include "strongclean/ring.hpp"

namespace strongclean {

namespace {

void check_cap(unsigned long long order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw SizeCapExceeded(what + " would have " + std::to_string(order) +
                          " elements, above the cap of " + std::to_string(cap));
}

// Mixed-radix positional code, first component most significant. This makes
// element order lexicographic in the component tuple.
Elem encode(const std::vector<Elem>& digits, const std::vector<int>& sizes) {
  long long acc = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) acc = acc * sizes[i] + digits[i];
  return static_cast<Elem>(acc);
}

std::vector<Elem> decode(Elem x, const std::vector<int>& sizes) {
  std::vector<Elem> d(sizes.size());
  long long v = x;
  for (std::size_t i = sizes.size(); i-- > 0;) {
    d[i] = static_cast<Elem>(v % sizes[i]);
    v /= sizes[i];
  }
  return d;
}

std::string wrap_if_sum(const std::string& s) {
  if (s.find('+') != std::string::npos || s.find(',') != std::string::npos)
    return "(" + s + ")";
  return s;
}

std::vector<int> component_sizes(const FiniteRing& r) {
  const Construction& c = r.construction();
  switch (c.kind) {
    case RingKind::Product: {
      std::vector<int> s;
      s.reserve(c.bases.size());
      for (const auto& f : c.bases) s.push_back(f->order());
      return s;
    }
    case RingKind::Matrix:
      return std::vector<int>(static_cast<std::size_t>(c.param) * c.param,
                              c.bases[0]->order());
    case RingKind::Triangular:
      return std::vector<int>(static_cast<std::size_t>(c.param) * (c.param + 1) / 2,
                              c.bases[0]->order());
    case RingKind::GroupRing:
      return std::vector<int>(c.group->order, c.bases[0]->order());
    case RingKind::TruncSeries:
      return std::vector<int>(c.param, c.bases[0]->order());
    default:
      throw InvalidConstruction("ring " + r.name() + " has no component encoding");
  }
}

}  // namespace

Elem encode_components(const RingPtr& r, const std::vector<Elem>& comps) {
  auto sizes = component_sizes(*r);
  if (comps.size() != sizes.size())
    throw InvalidConstruction("expected " + std::to_string(sizes.size()) +
                              " components for " + r->name());
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] < 0 || comps[i] >= sizes[i])
      throw InvalidConstruction("component " + std::to_string(i) + " out of range");
  return encode(comps, sizes);
}

std::vector<Elem> decode_components(const RingPtr& r, Elem x) {
  if (x < 0 || x >= r->order()) throw InvalidConstruction("element index out of range");
  return decode(x, component_sizes(*r));
}

// ---- Zn --------------------------------------------------------------------

RingPtr make_zn(int n, std::size_t cap) {
  if (n < 1) throw InvalidConstruction("Zn needs n >= 1");
  check_cap(static_cast<unsigned long long>(n), cap, "Zn " + std::to_string(n));
  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>((static_cast<long long>(a) * b) % n);
    }
  Construction con;
  con.kind = RingKind::Zn;
  con.param = n;
  return std::make_shared<FiniteRing>("Zn " + std::to_string(n), std::move(con), n,
                                      std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                                      std::vector<std::string>{});
}

// ---- products --------------------------------------------------------------

RingPtr make_product(const std::vector<RingPtr>& factors, std::size_t cap) {
  if (factors.empty()) throw InvalidConstruction("product needs at least one factor");
  std::vector<int> sizes;
  unsigned long long order = 1;
  std::string name = "Prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i]) throw InvalidConstruction("null factor in product");
    sizes.push_back(factors[i]->order());
    order *= static_cast<unsigned long long>(factors[i]->order());
    check_cap(order, cap, "product");
    name += (i ? ", " : "") + factors[i]->name();
  }
  name += ")";
  const int n = static_cast<int>(order);

  std::vector<std::vector<Elem>> digits(n);
  for (Elem x = 0; x < n; ++x) digits[x] = decode(x, sizes);

  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<Elem> da(sizes.size()), dm(sizes.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        da[i] = factors[i]->add(digits[x][i], digits[y][i]);
        dm[i] = factors[i]->mul(digits[x][i], digits[y][i]);
      }
      add[static_cast<std::size_t>(x) * n + y] = encode(da, sizes);
      mul[static_cast<std::size_t>(x) * n + y] = encode(dm, sizes);
    }

  std::vector<Elem> zd(sizes.size()), od(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    zd[i] = factors[i]->zero();
    od[i] = factors[i]->one();
  }
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < sizes.size(); ++i)
      l += (i ? "," : "") + factors[i]->label(digits[x][i]);
    labels[x] = l + ")";
  }

  Construction con;
  con.kind = RingKind::Product;
  con.bases = factors;
  return std::make_shared<FiniteRing>(std::move(name), std::move(con), n, std::move(add),
                                      std::move(mul), encode(zd, sizes), encode(od, sizes),
                                      std::move(labels));
}

// ---- matrix rings ----------------------------------------------------------

RingPtr make_matrix(const RingPtr& base, int k, std::size_t cap) {
  if (!base) throw InvalidConstruction("null base ring");
  if (k < 1) throw InvalidConstruction("matrix size must be >= 1");
  const int q = base->order();
  const int m = k * k;
  unsigned long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= static_cast<unsigned long long>(q);
    check_cap(order, cap, "Mat " + std::to_string(k) + " (" + base->name() + ")");
  }
  const int n = static_cast<int>(order);
  const std::vector<int> sizes(m, q);

  std::vector<std::vector<Elem>> digits(n);
  for (Elem x = 0; x < n; ++x) digits[x] = decode(x, sizes);
  auto entry = [&](const std::vector<Elem>& d, int i, int j) -> Elem {
    return d[static_cast<std::size_t>(i) * k + j];
  };

  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<Elem> da(m), dm(m);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (int i = 0; i < m; ++i) da[i] = base->add(digits[x][i], digits[y][i]);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Elem s = base->zero();
          for (int l = 0; l < k; ++l)
            s = base->add(s, base->mul(entry(digits[x], i, l), entry(digits[y], l, j)));
          dm[static_cast<std::size_t>(i) * k + j] = s;
        }
      add[static_cast<std::size_t>(x) * n + y] = encode(da, sizes);
      mul[static_cast<std::size_t>(x) * n + y] = encode(dm, sizes);
    }

  std::vector<Elem> zd(m, base->zero()), od(m, base->zero());
  for (int i = 0; i < k; ++i) od[static_cast<std::size_t>(i) * k + i] = base->one();
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string l = "[";
    for (int i = 0; i < k; ++i) {
      l += i ? ",[" : "[";
      for (int j = 0; j < k; ++j) l += (j ? "," : "") + base->label(entry(digits[x], i, j));
      l += "]";
    }
    labels[x] = l + "]";
  }

  Construction con;
  con.kind = RingKind::Matrix;
  con.bases = {base};
  con.param = k;
  return std::make_shared<FiniteRing>("Mat " + std::to_string(k) + " (" + base->name() + ")",
                                      std::move(con), n, std::move(add), std::move(mul),
                                      encode(zd, sizes), encode(od, sizes), std::move(labels));
}

// ---- upper triangular ------------------------------------------------------

RingPtr make_triangular(const RingPtr& base, int k, std::size_t cap) {
  if (!base) throw InvalidConstruction("null base ring");
  if (k < 1) throw InvalidConstruction("triangular size must be >= 1");
  const int q = base->order();
  const int m = k * (k + 1) / 2;
  unsigned long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= static_cast<unsigned long long>(q);
    check_cap(order, cap, "Tri " + std::to_string(k) + " (" + base->name() + ")");
  }
  const int n = static_cast<int>(order);
  const std::vector<int> sizes(m, q);

  // position of stored entry (i,j), i <= j, row-major
  std::vector<std::vector<int>> pos(k, std::vector<int>(k, -1));
  {
    int p = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) pos[i][j] = p++;
  }

  std::vector<std::vector<Elem>> digits(n);
  for (Elem x = 0; x < n; ++x) digits[x] = decode(x, sizes);
  auto entry = [&](const std::vector<Elem>& d, int i, int j) -> Elem {
    return j < i ? base->zero() : d[pos[i][j]];
  };

  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<Elem> da(m), dm(m);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (int i = 0; i < m; ++i) da[i] = base->add(digits[x][i], digits[y][i]);
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          Elem s = base->zero();
          for (int l = i; l <= j; ++l)
            s = base->add(s, base->mul(entry(digits[x], i, l), entry(digits[y], l, j)));
          dm[pos[i][j]] = s;
        }
      add[static_cast<std::size_t>(x) * n + y] = encode(da, sizes);
      mul[static_cast<std::size_t>(x) * n + y] = encode(dm, sizes);
    }

  std::vector<Elem> zd(m, base->zero()), od(m, base->zero());
  for (int i = 0; i < k; ++i) od[pos[i][i]] = base->one();
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string l = "[";
    for (int i = 0; i < k; ++i) {
      l += i ? ",[" : "[";
      for (int j = 0; j < k; ++j) l += (j ? "," : "") + base->label(entry(digits[x], i, j));
      l += "]";
    }
    labels[x] = l + "]";
  }

  Construction con;
  con.kind = RingKind::Triangular;
  con.bases = {base};
  con.param = k;
  return std::make_shared<FiniteRing>("Tri " + std::to_string(k) + " (" + base->name() + ")",
                                      std::move(con), n, std::move(add), std::move(mul),
                                      encode(zd, sizes), encode(od, sizes), std::move(labels));
}

// ---- group rings -----------------------------------------------------------

RingPtr make_group_ring(const RingPtr& base, const FiniteGroup& g, std::size_t cap) {
  if (!base) throw InvalidConstruction("null base ring");
  std::string why;
  if (!g.valid(&why)) throw InvalidConstruction("invalid group " + g.name + ": " + why);
  const int q = base->order();
  const int m = g.order;
  unsigned long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= static_cast<unsigned long long>(q);
    check_cap(order, cap, "GR (" + base->name() + ") " + g.name);
  }
  const int n = static_cast<int>(order);
  const std::vector<int> sizes(m, q);

  std::vector<std::vector<Elem>> digits(n);
  for (Elem x = 0; x < n; ++x) digits[x] = decode(x, sizes);

  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<Elem> da(m), dm(m);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (int i = 0; i < m; ++i) da[i] = base->add(digits[x][i], digits[y][i]);
      std::fill(dm.begin(), dm.end(), base->zero());
      for (int a = 0; a < m; ++a) {
        if (digits[x][a] == base->zero()) continue;
        for (int b = 0; b < m; ++b) {
          Elem t = base->mul(digits[x][a], digits[y][b]);
          if (t == base->zero()) continue;
          Elem c = g.compose(a, b);
          dm[c] = base->add(dm[c], t);
        }
      }
      add[static_cast<std::size_t>(x) * n + y] = encode(da, sizes);
      mul[static_cast<std::size_t>(x) * n + y] = encode(dm, sizes);
    }

  std::vector<Elem> zd(m, base->zero()), od(m, base->zero());
  od[g.identity] = base->one();
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string l;
    for (int i = 0; i < m; ++i) {
      Elem c = digits[x][i];
      if (c == base->zero()) continue;
      std::string term;
      if (i == g.identity)
        term = base->label(c);
      else if (c == base->one())
        term = g.labels.empty() ? "g" + std::to_string(i) : g.labels[i];
      else
        term = wrap_if_sum(base->label(c)) +
               (g.labels.empty() ? "g" + std::to_string(i) : g.labels[i]);
      l += l.empty() ? term : "+" + term;
    }
    labels[x] = l.empty() ? "0" : l;
  }

  Construction con;
  con.kind = RingKind::GroupRing;
  con.bases = {base};
  con.group = g;
  con.param = m;
  return std::make_shared<FiniteRing>("GR (" + base->name() + ") " + g.name, std::move(con),
                                      n, std::move(add), std::move(mul), encode(zd, sizes),
                                      encode(od, sizes), std::move(labels));
}

// ---- truncated power series ------------------------------------------------

RingPtr make_trunc_power_series(const RingPtr& base, int k, std::size_t cap) {
  if (!base) throw InvalidConstruction("null base ring");
  if (k < 1) throw InvalidConstruction("truncation order must be >= 1");
  const int q = base->order();
  unsigned long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= static_cast<unsigned long long>(q);
    check_cap(order, cap, "TPS (" + base->name() + ") " + std::to_string(k));
  }
  const int n = static_cast<int>(order);
  const std::vector<int> sizes(k, q);

  std::vector<std::vector<Elem>> digits(n);
  for (Elem x = 0; x < n; ++x) digits[x] = decode(x, sizes);

  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<Elem> da(k), dm(k);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (int i = 0; i < k; ++i) da[i] = base->add(digits[x][i], digits[y][i]);
      for (int i = 0; i < k; ++i) {
        Elem s = base->zero();
        for (int p = 0; p <= i; ++p)
          s = base->add(s, base->mul(digits[x][p], digits[y][i - p]));
        dm[i] = s;
      }
      add[static_cast<std::size_t>(x) * n + y] = encode(da, sizes);
      mul[static_cast<std::size_t>(x) * n + y] = encode(dm, sizes);
    }

  std::vector<Elem> zd(k, base->zero()), od(k, base->zero());
  od[0] = base->one();
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    std::string l;
    for (int i = 0; i < k; ++i) {
      Elem c = digits[x][i];
      if (c == base->zero()) continue;
      std::string term;
      std::string tp = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      if (i == 0)
        term = base->label(c);
      else if (c == base->one())
        term = tp;
      else
        term = wrap_if_sum(base->label(c)) + tp;
      l += l.empty() ? term : "+" + term;
    }
    labels[x] = l.empty() ? "0" : l;
  }

  Construction con;
  con.kind = RingKind::TruncSeries;
  con.bases = {base};
  con.param = k;
  return std::make_shared<FiniteRing>("TPS (" + base->name() + ") " + std::to_string(k),
                                      std::move(con), n, std::move(add), std::move(mul),
                                      encode(zd, sizes), encode(od, sizes), std::move(labels));
}

// ---- corners ---------------------------------------------------------------

RingPtr make_corner(const RingPtr& base, Elem e) {
  if (!base) throw InvalidConstruction("null base ring");
  const int n = base->order();
  if (e < 0 || e >= n) throw InvalidConstruction("corner idempotent index out of range");
  if (!base->is_idempotent(e))
    throw NotIdempotent("element " + std::to_string(e) + " of " + base->name() +
                        " is not idempotent");

  std::vector<char> in_sub(n, 0);
  for (Elem r = 0; r < n; ++r) in_sub[base->mul(base->mul(e, r), e)] = 1;
  std::vector<Elem> embed;
  std::vector<Elem> pos(n, -1);
  for (Elem x = 0; x < n; ++x)
    if (in_sub[x]) {
      pos[x] = static_cast<Elem>(embed.size());
      embed.push_back(x);
    }
  const int m = static_cast<int>(embed.size());

  std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(add.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[static_cast<std::size_t>(i) * m + j] = pos[base->add(embed[i], embed[j])];
      mul[static_cast<std::size_t>(i) * m + j] = pos[base->mul(embed[i], embed[j])];
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = base->label(embed[i]);

  Construction con;
  con.kind = RingKind::Corner;
  con.bases = {base};
  con.embed = embed;
  con.corner_idem = e;
  return std::make_shared<FiniteRing>("Corner (" + base->name() + ") " + std::to_string(e),
                                      std::move(con), m, std::move(add), std::move(mul),
                                      pos[base->zero()], pos[e], std::move(labels));
}

// ---- quotients -------------------------------------------------------------

std::pair<RingPtr, RingMap> make_quotient(const RingPtr& base, const std::vector<Elem>& gens) {
  if (!base) throw InvalidConstruction("null base ring");
  const int n = base->order();
  for (Elem g : gens)
    if (g < 0 || g >= n) throw InvalidConstruction("quotient generator index out of range");

  // Two-sided multiples r*g*r', then their additive span. The span is closed
  // under negation because the multiple set already is.
  std::vector<char> in_m(n, 0);
  for (Elem g : gens)
    for (Elem r1 = 0; r1 < n; ++r1) {
      Elem t = base->mul(r1, g);
      for (Elem r2 = 0; r2 < n; ++r2) in_m[base->mul(t, r2)] = 1;
    }
  std::vector<Elem> mults;
  for (Elem x = 0; x < n; ++x)
    if (in_m[x]) mults.push_back(x);

  std::vector<char> in_ideal(n, 0);
  in_ideal[base->zero()] = 1;
  std::vector<Elem> work{base->zero()};
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    for (Elem m : mults) {
      Elem y = base->add(x, m);
      if (!in_ideal[y]) {
        in_ideal[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::vector<Elem> ideal;
  for (Elem x = 0; x < n; ++x)
    if (in_ideal[x]) ideal.push_back(x);

  // Cosets keyed by least representative.
  std::vector<Elem> rep(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    for (Elem i : ideal) rep[base->add(x, i)] = x;
  }
  std::vector<Elem> reps;
  std::vector<Elem> qidx(n, -1);
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) {
      qidx[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  const int m = static_cast<int>(reps.size());

  std::vector<Elem> add(static_cast<std::size_t>(m) * m), mul(add.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[static_cast<std::size_t>(i) * m + j] = qidx[rep[base->add(reps[i], reps[j])]];
      mul[static_cast<std::size_t>(i) * m + j] = qidx[rep[base->mul(reps[i], reps[j])]];
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "[" + base->label(reps[i]) + "]";

  std::string gtxt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gtxt += (i ? "," : "") + std::to_string(gens[i]);

  Construction con;
  con.kind = RingKind::Quotient;
  con.bases = {base};
  con.embed = reps;
  con.gens = gens;
  auto q = std::make_shared<FiniteRing>("Quot (" + base->name() + ") {" + gtxt + "}",
                                        std::move(con), m, std::move(add), std::move(mul),
                                        qidx[rep[base->zero()]], qidx[rep[base->one()]],
                                        std::move(labels));
  std::vector<Elem> image(n);
  for (Elem x = 0; x < n; ++x) image[x] = qidx[rep[x]];
  RingMap map(base, q, std::move(image));
  return {q, std::move(map)};
}

// ---- canonical epimorphisms ------------------------------------------------

RingMap canonical_epi_quotient(const RingPtr& base, const std::vector<Elem>& gens) {
  return make_quotient(base, gens).second;
}

RingMap canonical_epi_projection(const RingPtr& product, int factor) {
  if (!product || product->construction().kind != RingKind::Product)
    throw InvalidConstruction("projection needs a product ring");
  const auto& factors = product->construction().bases;
  if (factor < 0 || factor >= static_cast<int>(factors.size()))
    throw InvalidConstruction("projection factor index out of range");
  std::vector<Elem> image(product->order());
  for (Elem x = 0; x < product->order(); ++x)
    image[x] = decode_components(product, x)[factor];
  return RingMap(product, factors[factor], std::move(image));
}

RingMap canonical_epi_triangular_corner(const RingPtr& tri) {
  if (!tri || tri->construction().kind != RingKind::Triangular)
    throw InvalidConstruction("corner projection needs a triangular ring");
  std::vector<Elem> image(tri->order());
  for (Elem x = 0; x < tri->order(); ++x) image[x] = decode_components(tri, x)[0];
  return RingMap(tri, tri->construction().bases[0], std::move(image));
}

RingMap canonical_epi_series_augmentation(const RingPtr& tps) {
  if (!tps || tps->construction().kind != RingKind::TruncSeries)
    throw InvalidConstruction("augmentation needs a truncated power series ring");
  std::vector<Elem> image(tps->order());
  for (Elem x = 0; x < tps->order(); ++x) image[x] = decode_components(tps, x)[0];
  return RingMap(tps, tps->construction().bases[0], std::move(image));
}

}  // namespace strongclean
