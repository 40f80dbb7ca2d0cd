#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parahoric/cli.hpp"
#include "parahoric/verify.hpp"

namespace py = pybind11;
using namespace parahoric;

namespace {

py::object fraction(const Rat& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_str(q));
}

py::list fraction_list(const QVec& v) {
    py::list out;
    for (const Rat& q : v) out.append(fraction(q));
    return out;
}

Rat rat_from_py(const py::handle& obj) {
    return parse_rational(py::str(obj).cast<std::string>());
}

QVec point_from_py(const RootSystem& rs, const py::sequence& seq) {
    QVec out;
    for (const py::handle& item : seq) out.push_back(rat_from_py(item));
    if (static_cast<int>(out.size()) != rs.rank())
        throw validation_error("dimension_mismatch", "point has wrong number of coordinates");
    return out;
}

Root root_from_py(const RootSystem& rs, const py::sequence& seq) {
    IVec coords;
    for (const py::handle& item : seq) coords.push_back(item.cast<long>());
    const int idx = rs.root_index(coords);
    if (idx < 0) throw validation_error("bad_root", "not a root of the system");
    return rs.root_at(idx);
}

py::dict facet_dict(const Facet& f) {
    py::dict out;
    out["vanishing"] = f.vanishing;
    out["dimension"] = f.dimension;
    out["representative"] = fraction_list(f.representative);
    return out;
}

py::dict subsystem_dict(const SubSystem& sub) {
    py::dict out;
    py::list components;
    for (const DynkinType& t : sub.components) components.append(t.str());
    py::list roots;
    for (const Root& r : sub.roots) roots.append(r.coords);
    out["components"] = components;
    out["total_rank"] = sub.total_rank;
    out["roots"] = roots;
    return out;
}

py::list affine_list(const std::vector<AffineRoot>& roots) {
    py::list out;
    for (const AffineRoot& a : roots) out.append(py::make_tuple(a.vec.coords, a.level));
    return out;
}

std::vector<RamificationDatum> ram_from_py(const RootSystem& rs, const py::sequence& ram) {
    std::vector<RamificationDatum> out;
    for (const py::handle& item : ram) {
        auto pair = item.cast<py::sequence>();
        const long n = pair[0].cast<long>();
        out.push_back(
            RamificationDatum{n, make_torsion(rs, point_from_py(rs, pair[1].cast<py::sequence>()))});
    }
    return out;
}

std::vector<Facet> facets_from_py(const RootSystem& rs, const py::object& sigma) {
    std::vector<Facet> out;
    if (sigma.is_none()) return out;
    for (const py::handle& item : sigma.cast<py::sequence>())
        out.push_back(facet_for(rs, item.cast<std::vector<int>>()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact local data of parahoric group schemes and invariants of torsor moduli";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const internal_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<RootSystem>(m, "RootSystem")
        .def(py::init([](const std::string& spec) {
                 return RootSystem(DynkinType::parse(spec));
             }),
             py::arg("type"))
        .def_property_readonly("type", [](const RootSystem& rs) { return rs.type().str(); })
        .def_property_readonly("rank", &RootSystem::rank)
        .def_property_readonly("num_roots", &RootSystem::num_roots)
        .def_property_readonly("num_positive", &RootSystem::num_positive)
        .def_property_readonly("dim_group", &RootSystem::dim_group)
        .def_property_readonly("cartan", [](const RootSystem& rs) { return rs.cartan(); })
        .def_property_readonly("marks", [](const RootSystem& rs) { return rs.marks(); })
        .def_property_readonly("highest_root",
                               [](const RootSystem& rs) { return rs.highest_root().coords; })
        .def_property_readonly("roots",
                               [](const RootSystem& rs) {
                                   py::list out;
                                   for (const Root& r : rs.roots()) out.append(r.coords);
                                   return out;
                               })
        .def("simple", [](const RootSystem& rs, int i) { return rs.simple(i).coords; },
             py::arg("i"))
        .def("is_root",
             [](const RootSystem& rs, const std::vector<long>& coords) {
                 return rs.is_root(coords);
             })
        .def("pairing",
             [](const RootSystem& rs, const py::sequence& theta, const py::sequence& root) {
                 return fraction(rs.pairing(point_from_py(rs, theta), root_from_py(rs, root)));
             },
             py::arg("theta"), py::arg("root"))
        .def("reflect",
             [](const RootSystem& rs, const py::sequence& r, const py::sequence& s) {
                 return rs.reflect(root_from_py(rs, r), root_from_py(rs, s)).coords;
             },
             py::arg("r"), py::arg("s"))
        .def("__repr__",
             [](const RootSystem& rs) { return "RootSystem(" + rs.type().str() + ")"; });

    m.def("classify_subsystem",
          [](const RootSystem& rs, const py::sequence& subset) {
              std::vector<Root> roots;
              for (const py::handle& item : subset)
                  roots.push_back(root_from_py(rs, item.cast<py::sequence>()));
              return subsystem_dict(classify_subsystem(rs, std::move(roots)));
          },
          py::arg("rs"), py::arg("subset"));

    m.def("facets",
          [](const RootSystem& rs) {
              py::list out;
              for (const Facet& f : enumerate_facets(rs)) out.append(facet_dict(f));
              return out;
          },
          py::arg("rs"));

    m.def("facet",
          [](const RootSystem& rs, const std::vector<int>& vanishing) {
              return facet_dict(facet_for(rs, vanishing));
          },
          py::arg("rs"), py::arg("vanishing"));

    m.def("eval_affine",
          [](const RootSystem& rs, const py::sequence& root, long level, const py::sequence& x) {
              return fraction(
                  eval_affine(rs, AffineRoot{root_from_py(rs, root), level}, point_from_py(rs, x)));
          },
          py::arg("rs"), py::arg("root"), py::arg("level"), py::arg("x"));

    m.def("vanishing_set",
          [](const RootSystem& rs, const py::sequence& x) {
              return affine_list(vanishing_set(rs, point_from_py(rs, x)));
          },
          py::arg("rs"), py::arg("x"));

    m.def("alcove_walk",
          [](const RootSystem& rs, const py::sequence& target) {
              const AlcoveWalk walk = alcove_walk(rs, point_from_py(rs, target));
              py::dict out;
              out["word"] = walk.word;
              out["image_representative"] = fraction_list(walk.image_representative);
              out["image_walls"] = affine_list(walk.image_walls);
              return out;
          },
          py::arg("rs"), py::arg("target"));

    m.def("parahoric_exponents",
          [](const RootSystem& rs, const std::vector<int>& vanishing) {
              const ParahoricData data = parahoric_exponents(rs, facet_for(rs, vanishing), 2);
              py::dict out;
              py::list roots;
              for (const Root& r : rs.roots()) roots.append(r.coords);
              out["roots"] = roots;
              out["m"] = data.exponents;
              out["prounipotent"] = data.prounipotent;
              return out;
          },
          py::arg("rs"), py::arg("vanishing"));

    m.def("parahoric_exponents_at",
          [](const RootSystem& rs, const py::sequence& point) {
              const PointExponents data =
                  parahoric_exponents_at(rs, point_from_py(rs, point));
              py::dict out;
              py::list roots;
              for (const Root& r : rs.roots()) roots.append(r.coords);
              out["roots"] = roots;
              out["m"] = data.exponents;
              out["prounipotent"] = data.prounipotent;
              return out;
          },
          py::arg("rs"), py::arg("point"));

    m.def("reductive_quotient",
          [](const RootSystem& rs, const std::vector<int>& vanishing) {
              const ReductiveQuotient q = reductive_quotient(rs, facet_for(rs, vanishing));
              py::dict out;
              out["affine_roots"] = affine_list(q.affine_roots);
              out["subsystem"] = subsystem_dict(q.subsystem);
              out["torus_rank"] = q.torus_rank;
              out["semisimple_dim"] = q.semisimple_dim;
              out["group_dim"] = q.group_dim;
              out["positive_count"] = q.positive_count;
              return out;
          },
          py::arg("rs"), py::arg("vanishing"));

    m.def("parabolic_set",
          [](const RootSystem& rs, const std::vector<int>& s, const std::vector<int>& b) {
              const ParabolicSet p = parabolic_set(rs, facet_for(rs, s), facet_for(rs, b));
              py::dict out;
              out["roots"] = affine_list(p.roots);
              out["levi"] = affine_list(p.levi);
              out["unipotent"] = affine_list(p.unipotent);
              return out;
          },
          py::arg("rs"), py::arg("s"), py::arg("b"));

    m.def("e_g",
          [](const RootSystem& rs, const py::sequence& theta) {
              return e_g(rs, make_torsion(rs, point_from_py(rs, theta)));
          },
          py::arg("rs"), py::arg("theta"));

    m.def("torsion_order",
          [](const RootSystem& rs, const py::sequence& theta) {
              return make_torsion(rs, point_from_py(rs, theta)).order;
          },
          py::arg("rs"), py::arg("theta"));

    m.def("centralizer",
          [](const RootSystem& rs, const py::sequence& theta) {
              const CentralizerData d = centralizer(rs, make_torsion(rs, point_from_py(rs, theta)));
              py::dict out;
              out["y_g"] = subsystem_dict(d.y_g);
              out["dim_zg"] = d.dim_zg;
              out["k"] = d.k;
              out["dim_zg_a"] = d.dim_zg_a;
              out["dim_zg_s"] = d.dim_zg_s;
              out["order"] = d.element.order;
              out["in_fundamental_alcove"] = d.in_fundamental_alcove;
              out["claims_apply"] = d.claims_apply;
              out["k_equals_abelian_rank"] = d.k_equals_abelian_rank;
              out["semisimple_bound_holds"] = d.semisimple_bound_holds;
              return out;
          },
          py::arg("rs"), py::arg("theta"));

    m.def("moduli_dimension",
          [](const RootSystem& rs, long genus, const py::sequence& ram, const py::object& sigma) {
              const ModuliInput input =
                  make_moduli_input(rs, genus, ram_from_py(rs, ram), facets_from_py(rs, sigma));
              fuchsian_check(rs, input);
              return to_long(moduli_dimension(rs, input));
          },
          py::arg("rs"), py::arg("genus"), py::arg("ram") = py::tuple(),
          py::arg("sigma") = py::none());

    m.def("hecke_fiber_dimension",
          [](const RootSystem& rs, const py::object& sigma) {
              const ModuliInput input = make_moduli_input(rs, 0, {}, facets_from_py(rs, sigma));
              return hecke_fiber_dimension(rs, input);
          },
          py::arg("rs"), py::arg("sigma"));

    m.def("fuchsian_check",
          [](const RootSystem& rs, long genus, const py::sequence& ram) {
              const ModuliInput input = make_moduli_input(rs, genus, ram_from_py(rs, ram), {});
              const FuchsianReport report = fuchsian_check(rs, input);
              py::dict out;
              out["generators"] = report.generators;
              out["euler_characteristic"] = fraction(report.euler_characteristic);
              return out;
          },
          py::arg("rs"), py::arg("genus"), py::arg("ram") = py::tuple());

    m.def("rs_codim_bound",
          [](const RootSystem& rs, long genus, long m, const py::sequence& theta) {
              ModuliInput input{rs.type(), genus, {}, {}};
              QVec zero(rs.rank(), Rat(0));
              input.ram.assign(m, RamificationDatum{1, make_torsion(rs, zero)});
              input.facets.assign(m, facet_for(rs, {}));
              const CodimBound bound =
                  rs_codim_bound(rs, input, make_torsion(rs, point_from_py(rs, theta)));
              py::dict out;
              out["k"] = bound.k;
              out["bound"] = fraction(bound.bound);
              out["at_least_two"] = bound.at_least_two;
              out["at_least_four"] = bound.at_least_four;
              return out;
          },
          py::arg("rs"), py::arg("genus"), py::arg("m"), py::arg("theta"));

    m.def("unstable_codim_bound",
          [](long genus) {
              ModuliInput input{DynkinType(Family::A, 1), genus, {}, {}};
              return unstable_codim_bound(input);
          },
          py::arg("genus"));

    m.def("verify",
          [](const py::object& type, int max_rank) {
              std::optional<DynkinType> only;
              if (!type.is_none()) only = DynkinType::parse(type.cast<std::string>());
              py::list out;
              for (const CheckResult& c : run_verify(only, max_rank)) {
                  py::dict row;
                  row["type"] = c.type;
                  row["check"] = c.check;
                  row["cases"] = c.cases;
                  row["violations"] = c.violations;
                  row["informational"] = c.informational;
                  row["falsifications"] = c.falsifications;
                  out.append(row);
              }
              return out;
          },
          py::arg("type") = py::none(), py::arg("max_rank") = 3);
}
