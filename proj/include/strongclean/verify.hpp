#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongclean/serialize.hpp"
#include "strongclean/transforms.hpp"

namespace strongclean {

inline constexpr std::uint64_t kDefaultSeed = 1729;
// When a ring's center is small (or the ring itself is), parameter pairs
// (a, b) are enumerated exhaustively; otherwise this many pseudorandom pairs
// are drawn from the seed.
inline constexpr int kSampledPairs = 24;

struct CatalogEntry {
  std::string name;  // display name used in reports
  RingPtr ring;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  const CatalogEntry* find(const std::string& name) const;
};

// Parses each spec and audits the ring axioms; throws AxiomFailureError when a
// constructed table is broken.
Catalog build_catalog(const std::vector<std::string>& specs,
                      std::size_t cap = kDefaultSizeCap);

// A fixed spread of small rings: Z2..Z9, products, 2x2 matrix and triangular
// rings, cyclic group rings, truncated power series.
Catalog default_catalog(std::size_t cap = kDefaultSizeCap);

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

// Ordered central pairs (a, b): exhaustive when |center| <= 16 or order <= 64,
// otherwise kSampledPairs distinct pairs drawn deterministically from the seed
// and the ring's name.
std::vector<std::pair<Elem, Elem>> central_pairs(const RingPtr& r, std::uint64_t seed,
                                                 bool* sampled = nullptr);

struct ReportRow {
  std::string ring;
  std::string params;
  bool ok = true;
  std::string detail;
  Json payload;  // first counterexample, re-executable; null when ok
};

struct TheoremReport {
  std::string theorem_id;
  std::string description;
  std::vector<ReportRow> rows;
  bool pass = true;
  std::uint64_t seed = kDefaultSeed;
  long long cells = 0;  // elementary checks performed (deterministic)
  double seconds = 0;   // wall clock; deliberately absent from the JSON form
};

std::vector<std::string> suite_ids();
TheoremReport run_suite(const Catalog& cat, const std::string& theorem_id,
                        const SuiteOptions& opts = {});

Json report_json(const TheoremReport& rep);
std::string report_table(const TheoremReport& rep);

// ---- searches over the catalog --------------------------------------------

struct HuntRow {
  std::string ring;
  bool minus_holds = false, plus_holds = false;
  std::optional<Elem> minus_failing, plus_failing;
  Json payload;  // witnesses for the holding side when the verdicts differ
  bool asymmetric() const { return minus_holds != plus_holds; }
};

// Compares strong (x^{2n+1} - x)-cleanness with strong (x^{2n+1} + x)-cleanness
// on every catalog ring and reports the rings where the verdicts differ. It
// reports evidence only; it asserts no general answer.
struct HuntReport {
  int n = 1;
  std::vector<HuntRow> rows;
  std::vector<std::string> findings;
  long long cells = 0;
  double seconds = 0;
};
HuntReport hunt_odd_asymmetry(const Catalog& cat, int n, const SuiteOptions& opts = {});
Json hunt_json(const HuntReport& rep);
std::string hunt_table(const HuntReport& rep);

// Element-level comparison of plain strong cleanness with strong
// (x^2+x)-cleanness: reports elements certified by one search but not the
// other.
struct CleanCompareRow {
  std::string ring;
  std::vector<Elem> clean_only, quadratic_only;
};
struct CleanCompareReport {
  std::vector<CleanCompareRow> rows;
  std::vector<std::string> findings;
  long long cells = 0;
};
CleanCompareReport hunt_clean_vs_quadratic(const Catalog& cat);
Json clean_compare_json(const CleanCompareReport& rep);
std::string clean_compare_table(const CleanCompareReport& rep);

}  // namespace strongclean
