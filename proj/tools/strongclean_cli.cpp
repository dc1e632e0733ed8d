// Command-line front door for the strongclean library.
//
// Verbs:
//   info RING                  constructor audit: order, units, center, idempotents
//   check RING --poly P        does every element decompose against P?
//   witness RING ELEM --poly P one element's certificate
//   suite ID                   run a theorem suite over the catalog ("all" runs every suite)
//   hunt [N]                   compare x^{2N+1}-x with x^{2N+1}+x over the catalog
//   int-check R --poly P       exact decision over the ring of integers
//
// Exit codes: 0 success/holds; 1 unexpected failure; 2 usage or parse error;
// 3 property fails or findings reported; others follow the library's error
// codes (size cap 4, not idempotent 5, non-central 6, not surjective 7,
// invalid construction 8, axiom failure 9, unknown suite 10, zero polynomial
// 11, invalid witness 12, not a unit 13, precondition 14).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strongclean/errors.hpp"
#include "strongclean/parse.hpp"
#include "strongclean/verify.hpp"

using namespace strongclean;

namespace {

struct Common {
  std::size_t cap = kDefaultSizeCap;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::string format = "table";
  std::string out;
  bool witnesses = false;
  std::vector<std::string> catalog;  // ring specs; empty = default catalog
};

void add_common(CLI::App* sub, Common& c, bool with_catalog) {
  sub->add_option("--cap", c.cap, "largest allowed ring order");
  sub->add_option("--seed", c.seed, "seed for sampled parameter pairs");
  sub->add_option("--workers", c.workers, "parallel workers for element scans")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
  if (with_catalog)
    sub->add_option("--catalog", c.catalog,
                    "ring spec (repeatable); replaces the default catalog");
}

int emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}

Catalog load_catalog(const Common& c) {
  return c.catalog.empty() ? default_catalog(c.cap)
                           : build_catalog(c.catalog, c.cap);
}

std::string join_labels(const RingPtr& r, const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += r->label(xs[i]);
  }
  return s + "}";
}

int run_info(const Common& c, const std::string& spec) {
  RingPtr r = parse_ring_spec(spec, c.cap);
  AxiomReport ax = r->verify_axioms();
  if (c.format == "json") {
    Json j{{"ring_spec", r->name()},
           {"order", r->order()},
           {"characteristic", r->characteristic()},
           {"commutative", r->is_commutative()},
           {"units", r->units().size()},
           {"center", r->center().size()},
           {"idempotents", r->idempotents().size()},
           {"axioms_ok", ax.ok()}};
    if (int rc = emit(c, j.dump(2) + "\n")) return rc;
  } else {
    std::ostringstream o;
    o << "ring:            " << r->name() << "\n"
      << "order:           " << r->order() << "\n"
      << "characteristic:  " << r->characteristic() << "\n"
      << "commutative:     " << (r->is_commutative() ? "yes" : "no") << "\n";
    o << "units:           " << r->units().size();
    if (r->units().size() <= 32) o << "  " << join_labels(r, r->units());
    o << "\n";
    o << "center:          " << r->center().size();
    if (r->center().size() <= 32) o << "  " << join_labels(r, r->center());
    o << "\n";
    o << "idempotents:     " << r->idempotents().size();
    if (r->idempotents().size() <= 32) o << "  " << join_labels(r, r->idempotents());
    o << "\n";
    o << "axioms:          " << (ax.ok() ? "ok" : ax.first_failure()) << "\n";
    if (int rc = emit(c, o.str())) return rc;
  }
  return ax.ok() ? 0 : static_cast<int>(ErrorCode::AxiomFailure);
}

int run_check(const Common& c, const std::string& spec, const std::string& poly) {
  RingPtr r = parse_ring_spec(spec, c.cap);
  CentralPoly p = parse_poly(poly, r);
  Verdict vd = ring_check(r, p, c.witnesses, c.workers);
  if (c.format == "json") {
    if (int rc = emit(c, verdict_json(r, p, vd).dump(2) + "\n")) return rc;
  } else {
    std::ostringstream o;
    o << r->name() << " against " << p.to_string() << ": ";
    if (vd.holds) {
      o << "holds";
      if (vd.witnesses) o << " (" << vd.witnesses->size() << " certificates)";
    } else {
      o << "fails at " << r->label(*vd.failing_element) << " (#"
        << *vd.failing_element << ")";
    }
    o << "\n";
    if (int rc = emit(c, o.str())) return rc;
  }
  return vd.holds ? 0 : static_cast<int>(ErrorCode::PropertyFails);
}

int run_witness(const Common& c, const std::string& spec, Elem x,
                const std::string& poly) {
  RingPtr r = parse_ring_spec(spec, c.cap);
  CentralPoly p = parse_poly(poly, r);
  if (x < 0 || x >= r->order()) {
    std::cerr << "error: element index " << x << " out of range [0, "
              << r->order() << ")\n";
    return static_cast<int>(ErrorCode::Usage);
  }
  auto w = gx_witness(r, x, p);
  if (!w) {
    if (c.format == "json")
      emit(c, Json{{"ring_spec", r->name()},
                   {"r", x},
                   {"poly", poly_literal(p)},
                   {"exists", false}}
                  .dump(2) +
                  "\n");
    else
      emit(c, r->label(x) + " has no decomposition against " + p.to_string() +
                  "\n");
    return static_cast<int>(ErrorCode::PropertyFails);
  }
  if (c.format == "json") {
    if (int rc = emit(c, witness_json(*w).dump(2) + "\n")) return rc;
  } else {
    std::ostringstream o;
    o << r->label(x) << " = " << r->label(w->s) << " + " << r->label(w->u)
      << "  (root s=" << w->s << ", unit u=" << w->u << ", poly "
      << p.to_string() << ")\n";
    if (int rc = emit(c, o.str())) return rc;
  }
  return 0;
}

int run_suite(const Common& c, const std::string& id) {
  Catalog cat = load_catalog(c);
  SuiteOptions so{c.seed, c.workers};
  std::vector<std::string> ids =
      id == "all" ? suite_ids() : std::vector<std::string>{id};
  bool any_fail = false;
  if (c.format == "json") {
    Json all = Json::array();
    for (const std::string& sid : ids) {
      TheoremReport rep = run_suite(cat, sid, so);
      any_fail = any_fail || !rep.pass;
      all.push_back(report_json(rep));
    }
    std::string text =
        (ids.size() == 1 ? all[0].dump(2) : all.dump(2)) + "\n";
    if (int rc = emit(c, text)) return rc;
  } else {
    std::string text;
    for (const std::string& sid : ids) {
      TheoremReport rep = run_suite(cat, sid, so);
      any_fail = any_fail || !rep.pass;
      text += report_table(rep);
      if (ids.size() > 1) text += "\n";
    }
    if (int rc = emit(c, text)) return rc;
  }
  return any_fail ? static_cast<int>(ErrorCode::PropertyFails) : 0;
}

int run_hunt(const Common& c, int n, bool clean_vs_quadratic) {
  Catalog cat = load_catalog(c);
  SuiteOptions so{c.seed, c.workers};
  bool findings = false;
  std::string text;
  if (clean_vs_quadratic) {
    CleanCompareReport rep = hunt_clean_vs_quadratic(cat);
    findings = !rep.findings.empty();
    text = c.format == "json" ? clean_compare_json(rep).dump(2) + "\n"
                              : clean_compare_table(rep);
  } else {
    HuntReport rep = hunt_odd_asymmetry(cat, n, so);
    findings = !rep.findings.empty();
    text = c.format == "json" ? hunt_json(rep).dump(2) + "\n" : hunt_table(rep);
  }
  if (int rc = emit(c, text)) return rc;
  return findings ? static_cast<int>(ErrorCode::PropertyFails) : 0;
}

// "poly[c0,c1,...]" with plain integer coefficients (no '#' indices: over the
// integers an index and a value would be the same thing anyway).
std::vector<long long> parse_int_coeffs(const std::string& text) {
  std::size_t i = 0;
  auto ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  ws();
  if (text.compare(i, 4, "poly") != 0)
    throw ParseError(i, "expected 'poly[...]'");
  i += 4;
  ws();
  if (i >= text.size() || text[i] != '[') throw ParseError(i, "expected '['");
  ++i;
  std::vector<long long> out;
  ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      ws();
      std::size_t pos = i;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError(pos, "expected an integer coefficient");
      out.push_back(std::stoll(text.substr(pos, i - pos)));
      ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ParseError(i, "expected ',' or ']'");
    }
  }
  ws();
  if (i != text.size()) throw ParseError(i, "trailing input after polynomial");
  return out;
}

std::string int_poly_str(const std::vector<long long>& c) {
  std::string s;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    long long v = c[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    if (!s.empty()) s += v > 0 ? "+" : "-";
    else if (v < 0) s += "-";
    long long av = v < 0 ? -v : v;
    if (av != 1 || k == 0) s += std::to_string(av);
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

int run_int_check(const Common& c, long long r, const std::string& poly) {
  std::vector<long long> coeffs = parse_int_coeffs(poly);
  IntegerCheck res = integers_gx_check(r, coeffs);
  std::string g = int_poly_str(coeffs);
  if (c.format == "json") {
    Json j{{"r", r}, {"coeffs", coeffs}, {"poly", g}, {"clean", res.clean}};
    if (res.witness)
      j["witness"] = Json{{"s", res.witness->first}, {"u", res.witness->second}};
    else
      j["witness"] = nullptr;
    j["integer_roots"] = res.roots;
    if (int rc = emit(c, j.dump(2) + "\n")) return rc;
  } else {
    std::ostringstream o;
    if (res.clean)
      o << r << " is strongly (" << g << ")-clean in Z: s=" << res.witness->first
        << ", u=" << res.witness->second << "\n";
    else
      o << r << " is not strongly (" << g << ")-clean in Z\n";
    if (int rc = emit(c, o.str())) return rc;
  }
  return res.clean ? 0 : static_cast<int>(ErrorCode::PropertyFails);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring workbench for strong g(x)-clean decompositions"};
  app.require_subcommand(1);

  Common c_info, c_check, c_witness, c_suite, c_hunt, c_int;
  std::string ring_info, ring_check_s, ring_witness, poly_check, poly_witness,
      poly_int, suite_id;
  Elem witness_elem = 0;
  long long int_r = 0;
  int hunt_n = 1;
  bool hunt_cvq = false;

  CLI::App* s_info = app.add_subcommand("info", "describe a ring");
  s_info->add_option("ring", ring_info, "ring spec, e.g. \"Zn 6\"")->required();
  add_common(s_info, c_info, false);

  CLI::App* s_check = app.add_subcommand("check", "check a ring against g(x)");
  s_check->add_option("ring", ring_check_s, "ring spec")->required();
  s_check->add_option("--poly", poly_check, "polynomial, e.g. \"poly[0,-1,1]\"")
      ->required();
  s_check->add_flag("--witnesses", c_check.witnesses,
                    "collect a certificate per element when the check holds");
  add_common(s_check, c_check, false);

  CLI::App* s_witness =
      app.add_subcommand("witness", "one element's decomposition certificate");
  s_witness->add_option("ring", ring_witness, "ring spec")->required();
  s_witness->add_option("element", witness_elem, "element index")->required();
  s_witness->add_option("--poly", poly_witness, "polynomial")->required();
  add_common(s_witness, c_witness, false);

  CLI::App* s_suite = app.add_subcommand("suite", "run a theorem suite");
  s_suite->add_option("id", suite_id,
                      "suite id (T2.4.1 T2.4.2 C2.5 P3.1 C3.3 C3.4 P3.5 T3.6 "
                      "T4.1 P4.5 L4.6 P4.7 P4.8 EX) or \"all\"")
      ->required();
  add_common(s_suite, c_suite, true);

  CLI::App* s_hunt = app.add_subcommand(
      "hunt", "search the catalog for x^{2n+1}-x vs x^{2n+1}+x asymmetry");
  s_hunt->add_option("n", hunt_n, "half-degree parameter (default 1)")
      ->check(CLI::PositiveNumber);
  s_hunt->add_flag("--clean-vs-quadratic", hunt_cvq,
                   "instead compare elementwise strong cleanness with strong "
                   "(x^2+x)-cleanness");
  add_common(s_hunt, c_hunt, true);

  CLI::App* s_int =
      app.add_subcommand("int-check", "decide strong g(x)-cleanness in Z");
  s_int->add_option("r", int_r, "integer to decompose")->required();
  s_int->add_option("--poly", poly_int, "integer polynomial, e.g. \"poly[0,1,1]\"")
      ->required();
  add_common(s_int, c_int, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCode::Usage);
  }

  try {
    if (app.got_subcommand(s_info)) return run_info(c_info, ring_info);
    if (app.got_subcommand(s_check))
      return run_check(c_check, ring_check_s, poly_check);
    if (app.got_subcommand(s_witness))
      return run_witness(c_witness, ring_witness, witness_elem, poly_witness);
    if (app.got_subcommand(s_suite)) return run_suite(c_suite, suite_id);
    if (app.got_subcommand(s_hunt)) return run_hunt(c_hunt, hunt_n, hunt_cvq);
    if (app.got_subcommand(s_int)) return run_int_check(c_int, int_r, poly_int);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return static_cast<int>(err.code());
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return static_cast<int>(ErrorCode::Usage);
}
