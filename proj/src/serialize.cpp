#include "strongclean/serialize.hpp"

#include "strongclean/parse.hpp"

namespace strongclean {

std::string kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::GxClean: return "gx_clean";
    case WitnessKind::Clean: return "clean";
    case WitnessKind::UnitPlusRoot: return "unit_plus_root";
  }
  return "gx_clean";
}

WitnessKind kind_from_name(const std::string& s) {
  if (s == "gx_clean") return WitnessKind::GxClean;
  if (s == "clean") return WitnessKind::Clean;
  if (s == "unit_plus_root") return WitnessKind::UnitPlusRoot;
  throw InvalidInputWitness("unknown witness kind '" + s + "'");
}

Json witness_json(const Witness& w) {
  Json j;
  j["ring_spec"] = w.ring ? w.ring->name() : "";
  j["r"] = w.r;
  j["s"] = w.s;
  j["u"] = w.u;
  j["poly"] = poly_literal(w.poly);
  j["kind"] = kind_name(w.kind);
  if (w.kind == WitnessKind::UnitPlusRoot) j["root_order"] = w.root_order;
  WitnessChecks ch = check_witness(w);
  j["checks"] = Json{{"sum_ok", ch.sum_ok},
                     {"root_ok", ch.root_ok},
                     {"unit_ok", ch.unit_ok},
                     {"commute_ok", ch.commute_ok}};
  return j;
}

Witness witness_from_json(const Json& j, std::size_t cap) {
  Witness w;
  w.ring = parse_ring_spec(j.at("ring_spec").get<std::string>(), cap);
  w.r = j.at("r").get<Elem>();
  w.s = j.at("s").get<Elem>();
  w.u = j.at("u").get<Elem>();
  w.poly = parse_poly(j.at("poly").get<std::string>(), w.ring);
  w.kind = kind_from_name(j.at("kind").get<std::string>());
  w.root_order = j.value("root_order", 0);
  return w;
}

Json verdict_json(const RingPtr& ring, const CentralPoly& p, const Verdict& v) {
  Json j;
  j["ring_spec"] = ring->name();
  j["poly"] = poly_literal(p);
  j["holds"] = v.holds;
  j["failing_element"] = v.failing_element ? Json(*v.failing_element) : Json(nullptr);
  if (v.witnesses) {
    Json ws = Json::object();
    for (const Witness& w : *v.witnesses) ws[std::to_string(w.r)] = witness_json(w);
    j["witnesses"] = ws;
  } else {
    j["witnesses"] = nullptr;
  }
  return j;
}

}  // namespace strongclean
