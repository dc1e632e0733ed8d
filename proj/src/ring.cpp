#include "strongclean/ring.hpp"

#include <algorithm>
#include <numeric>

namespace strongclean {

// ---- FiniteGroup -----------------------------------------------------------

bool FiniteGroup::valid(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int n = order;
  if (n < 1) return fail("group order must be >= 1");
  if (op.size() != static_cast<std::size_t>(n) * n) return fail("op table has wrong size");
  if (identity < 0 || identity >= n) return fail("identity out of range");
  if (inverse.size() != static_cast<std::size_t>(n)) return fail("inverse table has wrong size");
  for (Elem x : op)
    if (x < 0 || x >= n) return fail("op entry out of range");
  for (Elem a = 0; a < n; ++a) {
    if (compose(identity, a) != a || compose(a, identity) != a)
      return fail("identity law fails at " + std::to_string(a));
    if (inverse[a] < 0 || inverse[a] >= n) return fail("inverse entry out of range");
    if (compose(a, inverse[a]) != identity || compose(inverse[a], a) != identity)
      return fail("inverse law fails at " + std::to_string(a));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (compose(compose(a, b), c) != compose(a, compose(b, c)))
          return fail("associativity fails");
  return true;
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw InvalidConstruction("cyclic group order must be >= 1");
  FiniteGroup g;
  g.order = k;
  g.identity = 0;
  g.name = "C" + std::to_string(k);
  g.op.resize(static_cast<std::size_t>(k) * k);
  g.inverse.resize(k);
  g.labels.resize(k);
  for (Elem a = 0; a < k; ++a) {
    for (Elem b = 0; b < k; ++b) g.op[static_cast<std::size_t>(a) * k + b] = (a + b) % k;
    g.inverse[a] = (k - a) % k;
    g.labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return g;
}

// ---- FiniteRing ------------------------------------------------------------

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass)
      return c.axiom + " fails at (" + std::to_string(c.witness[0]) + "," +
             std::to_string(c.witness[1]) + "," + std::to_string(c.witness[2]) + ")";
  return {};
}

FiniteRing::FiniteRing(std::string name, Construction con, int order,
                       std::vector<Elem> add_table, std::vector<Elem> mul_table,
                       Elem zero, Elem one, std::vector<std::string> labels)
    : name_(std::move(name)),
      con_(std::move(con)),
      order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one),
      labels_(std::move(labels)) {
  if (order_ < 1) throw InvalidConstruction("ring order must be >= 1");
  const std::size_t n2 = static_cast<std::size_t>(order_) * order_;
  if (add_.size() != n2 || mul_.size() != n2)
    throw InvalidConstruction("operation tables have wrong size for " + name_);
  if (zero_ < 0 || zero_ >= order_ || one_ < 0 || one_ >= order_)
    throw InvalidConstruction("zero/one out of range for " + name_);
  if (labels_.empty()) {
    labels_.resize(order_);
    for (Elem a = 0; a < order_; ++a) labels_[a] = std::to_string(a);
  }
  if (labels_.size() != static_cast<std::size_t>(order_))
    throw InvalidConstruction("label table has wrong size for " + name_);

  // Additive inverses; a broken table falls back to 0 and is reported by
  // verify_axioms rather than here.
  neg_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      Elem s = add_[at(a, b)];
      if (s >= 0 && s < order_ && s == zero_) {
        neg_[a] = b;
        break;
      }
    }
  }

  // Additive order of 1.
  Elem x = one_;
  char_ = 1;
  while (x != zero_ && char_ <= order_) {
    Elem nx = add_[at(x, one_)];
    if (nx < 0 || nx >= order_) break;  // corrupt table; leave char_ as is
    x = nx;
    ++char_;
  }
}

Elem FiniteRing::pow(Elem a, long long k) const {
  Elem acc = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Elem FiniteRing::from_int(long long m) const {
  long long c = char_;
  long long r = m % c;
  if (r < 0) r += c;
  Elem acc = zero_;
  for (long long i = 0; i < r; ++i) acc = add(acc, one_);
  return acc;
}

void FiniteRing::fill_units() const {
  inv_.assign(order_, -1);
  unit_mask_.assign(order_, 0);
  units_.clear();
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == one_ && mul(b, a) == one_) {
        inv_[a] = b;
        unit_mask_[a] = 1;
        units_.push_back(a);
        break;
      }
    }
  }
}

void FiniteRing::fill_center() const {
  central_mask_.assign(order_, 0);
  center_.clear();
  for (Elem a = 0; a < order_; ++a) {
    bool central = true;
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        central = false;
        break;
      }
    }
    if (central) {
      central_mask_[a] = 1;
      center_.push_back(a);
    }
  }
}

void FiniteRing::fill_idempotents() const {
  idem_.clear();
  for (Elem a = 0; a < order_; ++a)
    if (mul(a, a) == a) idem_.push_back(a);
}

const std::vector<Elem>& FiniteRing::units() const {
  std::call_once(units_flag_, [this] { fill_units(); });
  return units_;
}

const std::vector<Elem>& FiniteRing::center() const {
  std::call_once(center_flag_, [this] { fill_center(); });
  return center_;
}

const std::vector<Elem>& FiniteRing::idempotents() const {
  std::call_once(idem_flag_, [this] { fill_idempotents(); });
  return idem_;
}

bool FiniteRing::is_unit(Elem a) const {
  units();
  return unit_mask_[static_cast<std::size_t>(a)] != 0;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  units();
  Elem i = inv_[static_cast<std::size_t>(a)];
  if (i < 0) return std::nullopt;
  return i;
}

bool FiniteRing::is_central(Elem a) const {
  center();
  return central_mask_[static_cast<std::size_t>(a)] != 0;
}

bool FiniteRing::is_commutative() const {
  return static_cast<int>(center().size()) == order_;
}

AxiomReport FiniteRing::verify_axioms() const {
  AxiomReport rep;
  const Elem n = order_;
  auto push = [&](const std::string& axiom, bool pass, Elem a, Elem b, Elem c) {
    rep.checks.push_back({axiom, pass, {a, b, c}});
  };

  {
    bool pass = true;
    Elem wa = 0, wb = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b) {
        Elem s = add_[at(a, b)], p = mul_[at(a, b)];
        if (s < 0 || s >= n || p < 0 || p >= n) {
          pass = false;
          wa = a;
          wb = b;
        }
      }
    push("tables_total", pass, wa, wb, 0);
    if (!pass) return rep;  // later scans would index out of range
  }

  {
    bool pass = true;
    Elem wa = 0, wb = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b)
        if (add(a, b) != add(b, a)) {
          pass = false;
          wa = a;
          wb = b;
        }
    push("add_commutative", pass, wa, wb, 0);
  }
  {
    bool pass = true;
    Elem wa = 0, wb = 0, wc = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b)
        for (Elem c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c))) {
            pass = false;
            wa = a;
            wb = b;
            wc = c;
            break;
          }
    push("add_associative", pass, wa, wb, wc);
  }
  {
    bool pass = true;
    Elem wa = 0;
    for (Elem a = 0; a < n; ++a)
      if (add(a, zero_) != a || add(zero_, a) != a) {
        pass = false;
        wa = a;
        break;
      }
    push("add_zero", pass, wa, 0, 0);
  }
  {
    bool pass = true;
    Elem wa = 0;
    for (Elem a = 0; a < n; ++a)
      if (add(a, neg(a)) != zero_) {
        pass = false;
        wa = a;
        break;
      }
    push("add_inverse", pass, wa, 0, 0);
  }
  {
    bool pass = true;
    Elem wa = 0, wb = 0, wc = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            pass = false;
            wa = a;
            wb = b;
            wc = c;
            break;
          }
    push("mul_associative", pass, wa, wb, wc);
  }
  {
    bool pass = true;
    Elem wa = 0;
    for (Elem a = 0; a < n; ++a)
      if (mul(a, one_) != a || mul(one_, a) != a) {
        pass = false;
        wa = a;
        break;
      }
    push("mul_one", pass, wa, 0, 0);
  }
  {
    bool pass = true;
    Elem wa = 0, wb = 0, wc = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            pass = false;
            wa = a;
            wb = b;
            wc = c;
            break;
          }
    push("distributive_left", pass, wa, wb, wc);
  }
  {
    bool pass = true;
    Elem wa = 0, wb = 0, wc = 0;
    for (Elem a = 0; a < n && pass; ++a)
      for (Elem b = 0; b < n && pass; ++b)
        for (Elem c = 0; c < n; ++c)
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
            pass = false;
            wa = a;
            wb = b;
            wc = c;
            break;
          }
    push("distributive_right", pass, wa, wb, wc);
  }
  return rep;
}

// ---- RingMap ---------------------------------------------------------------

RingMap::RingMap(RingPtr domain, RingPtr codomain, std::vector<Elem> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (!domain_ || !codomain_) throw InvalidConstruction("ring map needs both rings");
  const int n = domain_->order();
  const int m = codomain_->order();
  if (image_.size() != static_cast<std::size_t>(n))
    throw InvalidConstruction("ring map image table has wrong size");
  for (Elem y : image_)
    if (y < 0 || y >= m) throw InvalidConstruction("ring map image out of range");
  if (image_[domain_->one()] != codomain_->one())
    throw InvalidConstruction("ring map does not send 1 to 1");
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (image_[domain_->add(a, b)] != codomain_->add(image_[a], image_[b]))
        throw InvalidConstruction("ring map is not additive at (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
      if (image_[domain_->mul(a, b)] != codomain_->mul(image_[a], image_[b]))
        throw InvalidConstruction("ring map is not multiplicative at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  std::vector<char> hit(m, 0);
  for (Elem a = 0; a < n; ++a) hit[image_[a]] = 1;
  surjective_ = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  // Central elements must stay central; for surjective maps this is a theorem,
  // and we require it of every map we build.
  for (Elem c : domain_->center())
    if (!codomain_->is_central(image_[c]))
      throw InvalidConstruction("ring map sends central " + std::to_string(c) +
                                " to a non-central element");
}

RingMap identity_map(const RingPtr& r) {
  std::vector<Elem> image(r->order());
  std::iota(image.begin(), image.end(), 0);
  return RingMap(r, r, std::move(image));
}

}  // namespace strongclean
