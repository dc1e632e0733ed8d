#pragma once

#include <string>

#include "json.hpp"
#include "strongclean/decompose.hpp"

namespace strongclean {

using Json = nlohmann::ordered_json;

// Certificate layout:
//   {ring_spec, r, s, u, poly, kind, root_order?, checks:{sum_ok, root_ok,
//    unit_ok, commute_ok}}
// poly is the canonical index literal, so a consumer needs only ring_spec to
// re-execute every check. Emission is deterministic: identical witnesses
// serialize to identical bytes.
Json witness_json(const Witness& w);

// Rebuilds the ring from ring_spec and revalidates nothing by itself; callers
// usually follow with check_witness.
Witness witness_from_json(const Json& j, std::size_t cap = kDefaultSizeCap);

Json verdict_json(const RingPtr& ring, const CentralPoly& p, const Verdict& v);

std::string kind_name(WitnessKind k);
WitnessKind kind_from_name(const std::string& s);

}  // namespace strongclean
