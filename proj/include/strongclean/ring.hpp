#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongclean/errors.hpp"

namespace strongclean {

// Elements are indices 0..order-1 into a ring's operation tables. An index is
// meaningless without the ring it belongs to.
using Elem = std::int32_t;

inline constexpr std::size_t kDefaultSizeCap = 65536;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// A finite group given by its composition table. Index 0 need not be the
// identity, but cyclic_group() puts it there.
struct FiniteGroup {
  int order = 1;
  std::vector<Elem> op;  // row-major, op[a*order+b]
  Elem identity = 0;
  std::vector<Elem> inverse;
  std::string name = "C1";
  std::vector<std::string> labels;

  Elem compose(Elem a, Elem b) const {
    return op[static_cast<std::size_t>(a) * order + b];
  }
  // Exhaustive check of the group axioms; fills *why on failure.
  bool valid(std::string* why = nullptr) const;
};

FiniteGroup cyclic_group(int k);

enum class RingKind {
  Zn,
  Product,
  Matrix,
  Triangular,
  GroupRing,
  Quotient,
  Corner,
  TruncSeries,
  Raw,  // built directly from tables
};

// How a ring was built. Enough is kept to derive the canonical epimorphisms
// and, for corners and quotients, to relate elements back to the parent.
struct Construction {
  RingKind kind = RingKind::Raw;
  std::vector<RingPtr> bases;       // factors for Product, single base otherwise
  int param = 0;                    // n for Zn, k for Mat/Tri/TPS
  std::optional<FiniteGroup> group; // GroupRing only
  std::vector<Elem> embed;          // Corner: index -> parent index; Quotient: coset reps
  std::vector<Elem> gens;           // Quotient generators
  Elem corner_idem = 0;             // Corner only
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::array<Elem, 3> witness{0, 0, 0};  // offending triple when !pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string first_failure() const;  // empty when ok
};

class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
  // Takes ownership of the tables. add/mul are row-major order*order maps.
  FiniteRing(std::string name, Construction con, int order,
             std::vector<Elem> add_table, std::vector<Elem> mul_table,
             Elem zero, Elem one, std::vector<std::string> labels);

  int order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const { return add_[at(a, b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[at(a, b)]; }
  Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, long long k) const;  // k >= 0, pow(a,0) == one

  // Canonical image of an integer: m copies of 1 (negated when m < 0).
  Elem from_int(long long m) const;

  const std::string& name() const noexcept { return name_; }
  const Construction& construction() const noexcept { return con_; }
  const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }

  bool commutes(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  bool is_idempotent(Elem e) const { return mul(e, e) == e; }

  // Derived sets are computed lazily by exhaustive scan, then cached.
  // Concurrent readers are safe; results are ascending index lists.
  const std::vector<Elem>& units() const;
  const std::vector<Elem>& center() const;
  const std::vector<Elem>& idempotents() const;

  bool is_unit(Elem a) const;
  std::optional<Elem> inverse(Elem a) const;  // two-sided inverse
  bool is_central(Elem a) const;
  bool is_commutative() const;
  long long characteristic() const noexcept { return char_; }

  // Exhaustive axiom audit; every check is run even after a failure.
  AxiomReport verify_axioms() const;

private:
  std::size_t at(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }
  void fill_units() const;
  void fill_center() const;
  void fill_idempotents() const;

  std::string name_;
  Construction con_;
  int order_;
  std::vector<Elem> add_, mul_, neg_;
  Elem zero_, one_;
  long long char_ = 1;
  std::vector<std::string> labels_;

  mutable std::once_flag units_flag_, center_flag_, idem_flag_;
  mutable std::vector<Elem> units_, center_, idem_, inv_;
  mutable std::vector<char> unit_mask_, central_mask_;
};

// ---- constructors ----------------------------------------------------------
//
// Component encodings are uniform: where an element is a tuple of components
// (product factors, matrix entries read row by row, polynomial or group-ring
// coefficients in ascending term order), the element index written in mixed
// radix lists those components most significant digit first. Hence product
// element order is lexicographic in the factor indices.

RingPtr make_zn(int n, std::size_t cap = kDefaultSizeCap);
RingPtr make_product(const std::vector<RingPtr>& factors, std::size_t cap = kDefaultSizeCap);
RingPtr make_matrix(const RingPtr& base, int k, std::size_t cap = kDefaultSizeCap);
// Upper triangular n x n matrices; stored entries are (i,j) with i <= j, row-major.
RingPtr make_triangular(const RingPtr& base, int n, std::size_t cap = kDefaultSizeCap);
RingPtr make_group_ring(const RingPtr& base, const FiniteGroup& g,
                        std::size_t cap = kDefaultSizeCap);
// R[t]/(t^k): truncated power series, coefficients a_0..a_{k-1}.
RingPtr make_trunc_power_series(const RingPtr& base, int k,
                                std::size_t cap = kDefaultSizeCap);
RingPtr make_corner(const RingPtr& base, Elem e);

// Encode/decode the component tuple of an element for the tuple-shaped
// constructions above. Throws InvalidConstruction for other kinds.
Elem encode_components(const RingPtr& r, const std::vector<Elem>& comps);
std::vector<Elem> decode_components(const RingPtr& r, Elem x);

// ---- homomorphisms ---------------------------------------------------------

// A verified unital ring homomorphism held as an image table. Construction
// checks additivity, multiplicativity, 1 -> 1, and that central elements land
// in the codomain's center; violations throw InvalidConstruction.
class RingMap {
public:
  RingMap(RingPtr domain, RingPtr codomain, std::vector<Elem> image);

  Elem operator()(Elem x) const { return image_[static_cast<std::size_t>(x)]; }
  const RingPtr& domain() const noexcept { return domain_; }
  const RingPtr& codomain() const noexcept { return codomain_; }
  bool surjective() const noexcept { return surjective_; }
  const std::vector<Elem>& image_table() const noexcept { return image_; }

private:
  RingPtr domain_, codomain_;
  std::vector<Elem> image_;
  bool surjective_ = false;
};

// Quotient by the two-sided ideal generated by gens. The ring's elements are
// the cosets ordered by least representative; the map sends x to its coset.
std::pair<RingPtr, RingMap> make_quotient(const RingPtr& base,
                                          const std::vector<Elem>& gens);

RingMap identity_map(const RingPtr& r);
RingMap canonical_epi_quotient(const RingPtr& base, const std::vector<Elem>& gens);
RingMap canonical_epi_projection(const RingPtr& product, int factor);
// Tri n (R) -> R, matrix to its (0,0) entry.
RingMap canonical_epi_triangular_corner(const RingPtr& tri);
// TPS (R) k -> R, series to its constant coefficient.
RingMap canonical_epi_series_augmentation(const RingPtr& tps);

}  // namespace strongclean
