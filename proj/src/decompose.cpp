#include "strongclean/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace strongclean {

namespace {

// First root s (ascending) with r - s a commuting unit.
std::optional<std::pair<Elem, Elem>> find_pair(const FiniteRing& ring,
                                               const std::vector<Elem>& roots, Elem r) {
  for (Elem s : roots) {
    Elem u = ring.sub(r, s);
    if (ring.is_unit(u) && ring.commutes(s, u)) return std::make_pair(s, u);
  }
  return std::nullopt;
}

CentralPoly clean_poly(const RingPtr& r) { return int_poly(r, {0, -1, 1}); }

CentralPoly root_poly(const RingPtr& r, int k) {
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = -1;
  c[static_cast<std::size_t>(k)] = 1;
  return int_poly(r, c);
}

}  // namespace

WitnessChecks check_witness(const Witness& w) {
  WitnessChecks ch;
  if (!w.ring) return ch;
  const FiniteRing& ring = *w.ring;
  const int n = ring.order();
  if (w.r < 0 || w.r >= n || w.s < 0 || w.s >= n || w.u < 0 || w.u >= n) return ch;

  ch.sum_ok = ring.add(w.s, w.u) == w.r;
  switch (w.kind) {
    case WitnessKind::GxClean:
      ch.root_ok = w.poly.ring() == w.ring && w.poly.eval(w.s) == ring.zero();
      break;
    case WitnessKind::Clean:
      ch.root_ok = ring.mul(w.s, w.s) == w.s;
      break;
    case WitnessKind::UnitPlusRoot:
      ch.root_ok = w.root_order >= 1 && ring.pow(w.s, w.root_order) == ring.one();
      break;
  }
  // Two-sided inverse by direct scan, independent of the unit cache.
  ch.unit_ok = false;
  for (Elem v = 0; v < n; ++v)
    if (ring.mul(w.u, v) == ring.one() && ring.mul(v, w.u) == ring.one()) {
      ch.unit_ok = true;
      break;
    }
  ch.commute_ok = ring.commutes(w.s, w.u);
  return ch;
}

std::optional<Witness> gx_witness(const RingPtr& r, Elem x, const CentralPoly& p) {
  if (p.ring() != r) throw InvalidConstruction("polynomial lives over a different ring");
  // Over a one-element ring every polynomial collapses to zero, so only larger
  // rings can offer a non-degenerate alternative.
  if (p.degree() < 0 && r->order() > 1)
    throw ZeroPolynomial("every element is a root of the zero polynomial; refusing the degenerate check");
  auto hit = find_pair(*r, p.roots(), x);
  if (!hit) return std::nullopt;
  return Witness{r, x, hit->first, hit->second, p, WitnessKind::GxClean, 0};
}

std::optional<Witness> strongly_clean_witness(const RingPtr& r, Elem x) {
  auto hit = find_pair(*r, r->idempotents(), x);
  if (!hit) return std::nullopt;
  return Witness{r, x, hit->first, hit->second, clean_poly(r), WitnessKind::Clean, 0};
}

std::optional<Witness> unit_plus_root_witness(const RingPtr& r, Elem x, int k) {
  if (k < 1) throw InvalidConstruction("root order must be >= 1");
  std::vector<Elem> roots;
  for (Elem v = 0; v < r->order(); ++v)
    if (r->pow(v, k) == r->one()) roots.push_back(v);
  auto hit = find_pair(*r, roots, x);
  if (!hit) return std::nullopt;
  return Witness{r, x, hit->first, hit->second, root_poly(r, k), WitnessKind::UnitPlusRoot, k};
}

Verdict ring_check(const RingPtr& r, const CentralPoly& p, bool want_witnesses,
                   int workers) {
  if (p.ring() != r) throw InvalidConstruction("polynomial lives over a different ring");
  if (p.degree() < 0 && r->order() > 1)
    throw ZeroPolynomial("every element is a root of the zero polynomial; refusing the degenerate check");
  const int n = r->order();
  const std::vector<Elem> roots = p.roots();
  r->units();  // warm the cache before any threads fan out

  Verdict v;
  if (workers <= 1 || n < 64) {
    std::vector<Witness> ws;
    if (want_witnesses) ws.reserve(n);
    for (Elem x = 0; x < n; ++x) {
      auto hit = find_pair(*r, roots, x);
      if (!hit) {
        v.holds = false;
        v.failing_element = x;
        return v;
      }
      if (want_witnesses)
        ws.push_back(Witness{r, x, hit->first, hit->second, p, WitnessKind::GxClean, 0});
    }
    if (want_witnesses) v.witnesses = std::move(ws);
    return v;
  }

  // Contiguous chunks, merged by minimum index: identical to the serial scan.
  const int nw = std::min(workers, n);
  std::vector<std::optional<Elem>> fail(nw);
  std::vector<std::vector<Witness>> chunk_ws(nw);
  std::vector<std::thread> threads;
  for (int w = 0; w < nw; ++w) {
    const Elem lo = static_cast<Elem>(static_cast<long long>(n) * w / nw);
    const Elem hi = static_cast<Elem>(static_cast<long long>(n) * (w + 1) / nw);
    threads.emplace_back([&, w, lo, hi] {
      for (Elem x = lo; x < hi; ++x) {
        auto hit = find_pair(*r, roots, x);
        if (!hit) {
          fail[w] = x;
          return;
        }
        if (want_witnesses)
          chunk_ws[w].push_back(
              Witness{r, x, hit->first, hit->second, p, WitnessKind::GxClean, 0});
      }
    });
  }
  for (auto& t : threads) t.join();
  for (int w = 0; w < nw; ++w)
    if (fail[w]) {
      v.holds = false;
      v.failing_element = *fail[w];
      return v;
    }
  if (want_witnesses) {
    std::vector<Witness> ws;
    ws.reserve(n);
    for (auto& c : chunk_ws)
      for (auto& wit : c) ws.push_back(std::move(wit));
    v.witnesses = std::move(ws);
  }
  return v;
}

bool strongly_clean_all(const RingPtr& r) {
  const auto& idem = r->idempotents();
  for (Elem x = 0; x < r->order(); ++x)
    if (!find_pair(*r, idem, x)) return false;
  return true;
}

std::vector<Elem> u_n_set(const RingPtr& r, int n) {
  if (n < 1) throw InvalidConstruction("u_n_set needs n >= 1");
  const auto& units = r->units();
  std::vector<char> acc(r->order(), 0), layer(r->order(), 0);
  for (Elem u : units) {
    acc[u] = 1;
    layer[u] = 1;
  }
  for (int m = 2; m <= n; ++m) {
    std::vector<char> next(r->order(), 0);
    for (Elem x = 0; x < r->order(); ++x) {
      if (!layer[x]) continue;
      for (Elem u : units) next[r->add(x, u)] = 1;
    }
    for (Elem x = 0; x < r->order(); ++x)
      if (next[x]) acc[x] = 1;
    layer.swap(next);
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < r->order(); ++x)
    if (acc[x]) out.push_back(x);
  return out;
}

IntegerCheck integers_gx_check(long long r, const std::vector<long long>& coeffs) {
  std::vector<long long> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw ZeroPolynomial("the zero polynomial has every integer as a root");

  // Strip powers of x; 0 is a root iff any were stripped.
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  std::vector<long long> h(c.begin() + shift, c.end());

  auto eval = [&](long long s) -> bool {
    __int128 acc = 0;
    for (std::size_t i = h.size(); i-- > 0;) acc = acc * s + h[i];
    return acc == 0;
  };

  std::vector<long long> roots;
  if (shift > 0) roots.push_back(0);
  long long c0 = std::llabs(h[0]);
  if (c0 != 0) {
    for (long long d = 1; d * d <= c0; ++d) {
      if (c0 % d != 0) continue;
      for (long long cand : {d, -d, c0 / d, -(c0 / d)})
        if (eval(cand)) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  IntegerCheck out;
  out.roots = roots;
  for (long long s : roots) {
    long long u = r - s;
    if (u == 1 || u == -1) {
      out.clean = true;
      out.witness = std::make_pair(s, u);
      break;
    }
  }
  return out;
}

UnitRegularity unit_regularity_conditions(const RingPtr& r, Elem a, int n) {
  if (n < 1) throw InvalidConstruction("unit regularity needs n >= 1");
  UnitRegularity out;
  const auto& units = r->units();
  for (Elem u : units) {
    if (r->mul(a, r->pow(r->mul(u, a), n)) == a) {
      out.c1 = true;
      break;
    }
  }
  std::vector<Elem> potents;
  for (Elem e = 0; e < r->order(); ++e)
    if (r->pow(e, n + 1) == e) potents.push_back(e);
  for (Elem v : units) {
    for (Elem e : potents)
      if (r->mul(v, e) == a) {
        out.c2 = true;
        break;
      }
    if (out.c2) break;
  }
  for (Elem f : potents) {
    for (Elem w : units)
      if (r->mul(f, w) == a) {
        out.c3 = true;
        break;
      }
    if (out.c3) break;
  }
  return out;
}

Disjunction root_or_idempotent_disjunction(const RingPtr& r, Elem a, int n,
                                           const Verdict* precomputed) {
  if (n < 2) throw InvalidConstruction("the disjunction needs n >= 2");
  std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
  c[1] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  if (precomputed ? !precomputed->holds : !ring_check(r, int_poly(r, c)).holds)
    throw PreconditionFailed(r->name() + " is not strongly (x^" + std::to_string(n) +
                             "-x)-clean");

  Disjunction d;
  if (auto w = unit_plus_root_witness(r, a, n - 1)) {
    d.unit_plus_root = true;
    d.root_witness = *w;
  }
  auto nonzero_idem = [&](Elem e) {
    return e != r->zero() && r->is_idempotent(e);
  };
  std::optional<std::pair<Elem, Elem>> left, right;
  for (Elem x = 0; x < r->order() && !left; ++x)
    if (nonzero_idem(r->mul(a, x))) left = std::make_pair(x, r->mul(a, x));
  for (Elem y = 0; y < r->order() && !right; ++y)
    if (nonzero_idem(r->mul(y, a))) right = std::make_pair(y, r->mul(y, a));
  if (left && right) {
    d.one_sided_idempotents = true;
    d.left_idem = left;
    d.right_idem = right;
  }
  return d;
}

}  // namespace strongclean
