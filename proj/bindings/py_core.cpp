// Python bindings: rings and polynomials as value-ish objects, searches and
// transforms as free functions, reports as JSON strings (parse with the json
// module on the Python side).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strongclean/parse.hpp"
#include "strongclean/verify.hpp"

namespace py = pybind11;
using namespace strongclean;

namespace {

// The C++ API hands out shared_ptr<const FiniteRing>; pybind11 holders want
// the non-const form. Rings are immutable, so the cast is safe.
using PyRing = std::shared_ptr<FiniteRing>;

PyRing unconst(const RingPtr& r) { return std::const_pointer_cast<FiniteRing>(r); }

py::dict checks_dict(const WitnessChecks& c) {
  py::dict d;
  d["sum_ok"] = c.sum_ok;
  d["root_ok"] = c.root_ok;
  d["unit_ok"] = c.unit_ok;
  d["commute_ok"] = c.commute_ok;
  d["all"] = c.all();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-ring workbench for strong g(x)-clean decompositions";

  py::class_<FiniteRing, PyRing>(m, "Ring")
      .def_property_readonly("name", &FiniteRing::name)
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("zero", &FiniteRing::zero)
      .def_property_readonly("one", &FiniteRing::one)
      .def_property_readonly("characteristic", &FiniteRing::characteristic)
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("neg", &FiniteRing::neg)
      .def("sub", &FiniteRing::sub)
      .def("pow", &FiniteRing::pow)
      .def("from_int", &FiniteRing::from_int)
      .def("label", &FiniteRing::label,
           py::return_value_policy::reference_internal)
      .def("commutes", &FiniteRing::commutes)
      .def("is_idempotent", &FiniteRing::is_idempotent)
      .def("is_unit", &FiniteRing::is_unit)
      .def("inverse", &FiniteRing::inverse)
      .def("is_central", &FiniteRing::is_central)
      .def("is_commutative", &FiniteRing::is_commutative)
      .def_property_readonly("units", &FiniteRing::units)
      .def_property_readonly("center", &FiniteRing::center)
      .def_property_readonly("idempotents", &FiniteRing::idempotents)
      .def("verify_axioms",
           [](const FiniteRing& r) {
             AxiomReport rep = r.verify_axioms();
             return py::make_tuple(rep.ok(), rep.first_failure());
           })
      .def("__len__", &FiniteRing::order)
      .def("__repr__", [](const FiniteRing& r) {
        return "<Ring '" + r.name() + "' order " + std::to_string(r.order()) + ">";
      });

  m.def("parse_ring", [](const std::string& s, std::size_t cap) {
          return unconst(parse_ring_spec(s, cap));
        },
        py::arg("spec"), py::arg("cap") = kDefaultSizeCap);
  m.def("zn", [](int n) { return unconst(make_zn(n)); }, py::arg("n"));
  m.def("product", [](const std::vector<PyRing>& fs) {
    std::vector<RingPtr> v(fs.begin(), fs.end());
    return unconst(make_product(v));
  });
  m.def("matrix_ring",
        [](const PyRing& b, int k) { return unconst(make_matrix(b, k)); },
        py::arg("base"), py::arg("k"));
  m.def("triangular_ring",
        [](const PyRing& b, int n) { return unconst(make_triangular(b, n)); },
        py::arg("base"), py::arg("n"));
  m.def("group_ring_cyclic",
        [](const PyRing& b, int k) {
          return unconst(make_group_ring(b, cyclic_group(k)));
        },
        py::arg("base"), py::arg("k"));
  m.def("trunc_power_series",
        [](const PyRing& b, int k) {
          return unconst(make_trunc_power_series(b, k));
        },
        py::arg("base"), py::arg("k"));
  m.def("corner_ring",
        [](const PyRing& b, Elem e) { return unconst(make_corner(b, e)); },
        py::arg("base"), py::arg("e"));
  m.def("quotient_ring", [](const PyRing& b, const std::vector<Elem>& gens) {
    auto [q, map] = make_quotient(b, gens);
    return py::make_tuple(unconst(q), map);
  });
  m.def("encode_components", [](const PyRing& r, const std::vector<Elem>& cs) {
    return encode_components(r, cs);
  });
  m.def("decode_components",
        [](const PyRing& r, Elem x) { return decode_components(r, x); });

  py::class_<CentralPoly>(m, "Poly")
      .def_property_readonly("ring",
                             [](const CentralPoly& p) { return unconst(p.ring()); })
      .def_property_readonly("coeffs", &CentralPoly::coeffs)
      .def_property_readonly("degree", &CentralPoly::degree)
      .def("eval", &CentralPoly::eval)
      .def("roots", &CentralPoly::roots)
      .def("__str__", &CentralPoly::to_string)
      .def("__eq__", [](const CentralPoly& p, const CentralPoly& q) { return p == q; })
      .def("__repr__", [](const CentralPoly& p) {
        return "<Poly " + p.to_string() + " over " + p.ring()->name() + ">";
      });

  m.def("make_poly", [](const PyRing& r, std::vector<Elem> cs) {
    return make_poly(r, std::move(cs));
  });
  m.def("int_poly", [](const PyRing& r, const std::vector<long long>& cs) {
    return int_poly(r, cs);
  });
  m.def("quadratic_from_roots", [](const PyRing& r, Elem a, Elem b) {
    return quadratic_from_roots(r, a, b);
  });
  m.def("parse_poly",
        [](const std::string& s, const PyRing& r) { return parse_poly(s, r); });
  m.def("poly_literal", &poly_literal);
  m.def("poly_add", &poly_add);
  m.def("poly_mul", &poly_mul);
  m.def("divide_monic_quadratic", [](const CentralPoly& p, Elem a, Elem b) {
    auto [q, rem] = divide_monic_quadratic(p, a, b);
    return py::make_tuple(q, rem);
  });

  py::class_<Witness>(m, "Witness")
      .def_property_readonly("ring",
                             [](const Witness& w) { return unconst(w.ring); })
      .def_readonly("r", &Witness::r)
      .def_readonly("s", &Witness::s)
      .def_readonly("u", &Witness::u)
      .def_readonly("poly", &Witness::poly)
      .def_property_readonly("kind",
                             [](const Witness& w) { return kind_name(w.kind); })
      .def_readonly("root_order", &Witness::root_order)
      .def("checks", [](const Witness& w) { return checks_dict(check_witness(w)); })
      .def("valid", [](const Witness& w) { return witness_valid(w); })
      .def("to_json", [](const Witness& w) { return witness_json(w).dump(); })
      .def("__repr__", [](const Witness& w) {
        return "<Witness r=" + std::to_string(w.r) + " s=" + std::to_string(w.s) +
               " u=" + std::to_string(w.u) + " against " + w.poly.to_string() + ">";
      });

  m.def("witness_from_json", [](const std::string& text, std::size_t cap) {
          return witness_from_json(Json::parse(text), cap);
        },
        py::arg("text"), py::arg("cap") = kDefaultSizeCap);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("holds", &Verdict::holds)
      .def_readonly("failing_element", &Verdict::failing_element)
      .def_readonly("witnesses", &Verdict::witnesses)
      .def("__bool__", [](const Verdict& v) { return v.holds; })
      .def("__repr__", [](const Verdict& v) {
        return v.holds ? std::string("<Verdict holds>")
                       : "<Verdict fails at " +
                             std::to_string(v.failing_element.value_or(-1)) + ">";
      });

  m.def("gx_witness", [](const PyRing& r, Elem x, const CentralPoly& p) {
    return gx_witness(r, x, p);
  });
  m.def("strongly_clean_witness",
        [](const PyRing& r, Elem x) { return strongly_clean_witness(r, x); });
  m.def("unit_plus_root_witness", [](const PyRing& r, Elem x, int k) {
    return unit_plus_root_witness(r, x, k);
  });
  m.def("ring_check",
        [](const PyRing& r, const CentralPoly& p, bool want_witnesses,
           int workers) { return ring_check(r, p, want_witnesses, workers); },
        py::arg("ring"), py::arg("poly"), py::arg("want_witnesses") = false,
        py::arg("workers") = 1);
  m.def("strongly_clean_all",
        [](const PyRing& r) { return strongly_clean_all(r); });
  m.def("u_n_set", [](const PyRing& r, int n) { return u_n_set(r, n); });
  m.def("integers_gx_check",
        [](long long r, const std::vector<long long>& coeffs) {
          IntegerCheck res = integers_gx_check(r, coeffs);
          return py::make_tuple(res.clean, res.witness, res.roots);
        });
  m.def("unit_regularity_conditions", [](const PyRing& r, Elem a, int n) {
    UnitRegularity ur = unit_regularity_conditions(r, a, n);
    return py::make_tuple(ur.c1, ur.c2, ur.c3);
  });
  m.def("root_or_idempotent_disjunction",
        [](const PyRing& r, Elem a, int n) {
          Disjunction d = root_or_idempotent_disjunction(r, a, n);
          py::dict out;
          out["unit_plus_root"] = d.unit_plus_root;
          out["one_sided_idempotents"] = d.one_sided_idempotents;
          out["holds"] = d.holds();
          out["root_witness"] = d.root_witness;
          out["left_idem"] = d.left_idem;
          out["right_idem"] = d.right_idem;
          return out;
        });

  py::class_<RingMap>(m, "RingMap")
      .def_property_readonly("domain",
                             [](const RingMap& m_) { return unconst(m_.domain()); })
      .def_property_readonly(
          "codomain", [](const RingMap& m_) { return unconst(m_.codomain()); })
      .def_property_readonly("surjective", &RingMap::surjective)
      .def("__call__", [](const RingMap& m_, Elem x) { return m_(x); });

  m.def("canonical_epi_quotient",
        [](const PyRing& b, const std::vector<Elem>& gens) {
          return canonical_epi_quotient(b, gens);
        });
  m.def("canonical_epi_projection", [](const PyRing& p, int i) {
    return canonical_epi_projection(p, i);
  });
  m.def("canonical_epi_triangular_corner",
        [](const PyRing& t) { return canonical_epi_triangular_corner(t); });
  m.def("canonical_epi_series_augmentation",
        [](const PyRing& t) { return canonical_epi_series_augmentation(t); });
  m.def("induced_poly", &induced_poly);
  m.def("pushforward", &pushforward);

  m.def("clean_to_quadratic", [](const PyRing& ring, Elem a, Elem b, Elem r,
                                 const Witness& w) {
    return clean_to_quadratic(ring, a, b, r, w);
  });
  m.def("quadratic_to_clean", [](const PyRing& ring, Elem a, Elem b, Elem r,
                                 const Witness& w) {
    return quadratic_to_clean(ring, a, b, r, w);
  });
  m.def("to_unit_plus_involution", [](const PyRing& ring, Elem a, const Witness& w) {
    return to_unit_plus_involution(ring, a, w);
  });
  m.def("from_unit_plus_involution",
        [](const PyRing& ring, Elem a, const Witness& w) {
          return from_unit_plus_involution(ring, a, w);
        });
  m.def("cube_root_lift", [](const Witness& w) {
    CubeRootLift lift = cube_root_lift(w);
    return py::make_tuple(lift.quartic, lift.unit_plus_cube_root);
  });
  m.def("negate_witness", [](const Witness& w, Elem a, Elem b, int n) {
    return negate_witness(w, a, b, n);
  });

  py::class_<Catalog>(m, "Catalog")
      .def("__len__", [](const Catalog& c) { return c.entries.size(); })
      .def("names",
           [](const Catalog& c) {
             std::vector<std::string> out;
             for (const auto& e : c.entries) out.push_back(e.name);
             return out;
           })
      .def("ring", [](const Catalog& c, const std::string& name) -> PyRing {
        const CatalogEntry* e = c.find(name);
        if (!e) throw py::key_error(name);
        return unconst(e->ring);
      });

  m.def("default_catalog", &default_catalog, py::arg("cap") = kDefaultSizeCap);
  m.def("build_catalog", &build_catalog, py::arg("specs"),
        py::arg("cap") = kDefaultSizeCap);
  m.def("suite_ids", &suite_ids);
  m.def("run_suite",
        [](const Catalog& cat, const std::string& id, std::uint64_t seed,
           int workers) {
          return report_json(run_suite(cat, id, SuiteOptions{seed, workers}))
              .dump();
        },
        py::arg("catalog"), py::arg("theorem_id"),
        py::arg("seed") = kDefaultSeed, py::arg("workers") = 1);
  m.def("run_suite_table",
        [](const Catalog& cat, const std::string& id, std::uint64_t seed,
           int workers) {
          return report_table(run_suite(cat, id, SuiteOptions{seed, workers}));
        },
        py::arg("catalog"), py::arg("theorem_id"),
        py::arg("seed") = kDefaultSeed, py::arg("workers") = 1);
  m.def("hunt_odd_asymmetry",
        [](const Catalog& cat, int n, std::uint64_t seed, int workers) {
          return hunt_json(hunt_odd_asymmetry(cat, n, SuiteOptions{seed, workers}))
              .dump();
        },
        py::arg("catalog"), py::arg("n") = 1, py::arg("seed") = kDefaultSeed,
        py::arg("workers") = 1);
  m.def("hunt_clean_vs_quadratic", [](const Catalog& cat) {
    return clean_compare_json(hunt_clean_vs_quadratic(cat)).dump();
  });

  m.attr("DEFAULT_SIZE_CAP") = kDefaultSizeCap;
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
