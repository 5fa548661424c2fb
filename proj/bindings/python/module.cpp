#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quadnorm/cli.hpp"
#include "quadnorm/verify.hpp"

namespace py = pybind11;
using namespace quadnorm;

namespace {

struct PyRing {
    RingPtr ptr;
};

struct PyAlgebra {
    AlgebraPtr ptr;
};

json py_to_json(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
    py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object json_to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

RingElement make_element(const PyRing& ring, const py::object& value) {
    if (py::isinstance<py::int_>(value))
        return ring.ptr->from_int(mpz_class(value.cast<long>()));
    return element_from_json(ring.ptr, py_to_json(value));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact norms of quadratic algebras over finite free ring extensions";

    py::register_exception<AlgebraError>(m, "AlgebraError");

    py::class_<PyRing>(m, "Ring")
        .def_static("integers", [] { return PyRing{integers()}; })
        .def_static("modular", [](long modulus) { return PyRing{modular(modulus)}; })
        .def_static("product",
                    [](const std::vector<PyRing>& factors) {
                        std::vector<RingPtr> fs;
                        for (const auto& f : factors) fs.push_back(f.ptr);
                        return PyRing{product(std::move(fs))};
                    })
        .def_static("from_json",
                    [](const py::object& j) { return PyRing{ring_from_json(py_to_json(j))}; })
        .def("zero", [](const PyRing& r) { return r.ptr->zero(); })
        .def("one", [](const PyRing& r) { return r.ptr->one(); })
        .def("element", &make_element, py::arg("value"),
             "Build an element from an int or a JSON value")
        .def("to_json", [](const PyRing& r) { return json_to_py(ring_to_json(r.ptr)); })
        .def("__eq__",
             [](const PyRing& a, const PyRing& b) { return same_ring(a.ptr, b.ptr); })
        .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ptr->describe() + ">"; });

    py::class_<RingElement>(m, "RingElement")
        .def("__add__", [](const RingElement& a, const RingElement& b) { return add(a, b); })
        .def("__mul__", [](const RingElement& a, const RingElement& b) { return mul(a, b); })
        .def("__sub__", [](const RingElement& a, const RingElement& b) { return sub(a, b); })
        .def("__neg__", [](const RingElement& a) { return neg(a); })
        .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
        .def("is_zero", &RingElement::is_zero)
        .def("is_unit", [](const RingElement& a) { return is_unit(a); })
        .def("inverse", [](const RingElement& a) { return inverse(a); })
        .def("ring", [](const RingElement& a) { return PyRing{a.ring()}; })
        .def("to_json", [](const RingElement& a) { return json_to_py(element_to_json(a)); })
        .def("__repr__", [](const RingElement& a) { return to_string(a); });

    py::class_<PyAlgebra>(m, "Algebra")
        .def_static("trivial", [](const PyRing& base) { return PyAlgebra{trivial_algebra(base.ptr)}; })
        .def_static("monogenic",
                    [](const PyRing& base, const std::vector<RingElement>& power_coords) {
                        return PyAlgebra{monogenic_algebra(base.ptr, power_coords)};
                    },
                    py::arg("base"), py::arg("power_coords"),
                    "base[x]/(x^n - f); power_coords are the coordinates of x^n")
        .def_static("product",
                    [](const PyAlgebra& a, const PyAlgebra& b) {
                        return PyAlgebra{product_algebra(a.ptr, b.ptr)};
                    })
        .def_static("from_json",
                    [](const py::object& j) { return PyAlgebra{algebra_from_json(py_to_json(j))}; })
        .def_property_readonly("rank", [](const PyAlgebra& a) { return a.ptr->rank(); })
        .def_property_readonly("base", [](const PyAlgebra& a) { return PyRing{a.ptr->base()}; })
        .def("ring", [](const PyAlgebra& a) { return PyRing{algebra_ring(a.ptr)}; })
        .def("element",
             [](const PyAlgebra& a, const std::vector<RingElement>& coords) {
                 return algebra_element(a.ptr, coords);
             })
        .def("to_json", [](const PyAlgebra& a) { return json_to_py(algebra_to_json(a.ptr)); })
        .def("__repr__", [](const PyAlgebra& a) { return "<Algebra " + a.ptr->describe() + ">"; });

    m.def("sn", &norm_sn, "determinant of multiplication by x");
    m.def("trace", &trace);
    m.def("char_poly", &char_poly_coeffs, "coefficients ascending in lambda");
    m.def("polarized", &polarized);

    py::class_<BasedQuadratic>(m, "Quad")
        .def(py::init([](const PyRing& base, const py::object& t, const py::object& n) {
                 return make_quad(base.ptr, make_element(base, t), make_element(base, n));
             }),
             py::arg("base"), py::arg("t"), py::arg("n"))
        .def_property_readonly("t", [](const BasedQuadratic& q) { return q.t; })
        .def_property_readonly("n", [](const BasedQuadratic& q) { return q.n; })
        .def_property_readonly("base", [](const BasedQuadratic& q) { return PyRing{q.base}; })
        .def("to_json", [](const BasedQuadratic& q) { return json_to_py(quad_to_json(q)); })
        .def("__eq__", [](const BasedQuadratic& p, const BasedQuadratic& q) { return p == q; })
        .def("__repr__", [](const BasedQuadratic& q) {
            return "<Quad t=" + to_string(q.t) + " n=" + to_string(q.n) + ">";
        });

    m.def("star", &star, "monoid operation on based quadratic algebras");
    m.def("disc", &discriminant, "t^2 - 4n");
    m.def("as_rank2_algebra", [](const BasedQuadratic& q) { return PyAlgebra{as_rank2_algebra(q)}; });

    py::class_<QuadHom>(m, "Hom")
        .def(py::init([](const BasedQuadratic& source, const BasedQuadratic& target,
                         const RingElement& u, const RingElement& c) {
                 return make_hom(source, target, u, c);
             }),
             py::arg("source"), py::arg("target"), py::arg("u"), py::arg("c"))
        .def_property_readonly("u", [](const QuadHom& f) { return f.u(); })
        .def_property_readonly("c", [](const QuadHom& f) { return f.c(); })
        .def_property_readonly("source", [](const QuadHom& f) { return f.source(); })
        .def_property_readonly("target", [](const QuadHom& f) { return f.target(); })
        .def("is_isomorphism", &is_isomorphism)
        .def("__eq__", [](const QuadHom& f, const QuadHom& g) { return f == g; });

    m.def("compose", [](const QuadHom& outer, const QuadHom& inner) { return compose(outer, inner); });
    m.def("inverse_hom", &inverse_hom);
    m.def("find_isomorphism",
          [](const BasedQuadratic& p, const BasedQuadratic& q) -> py::object {
              auto iso = find_isomorphism(p, q);
              if (!iso) return py::none();
              return py::cast(*iso);
          });

    py::class_<Extension>(m, "Extension")
        .def(py::init([](const PyAlgebra& a) { return Extension(a.ptr); }))
        .def_property_readonly("rank", &Extension::rank)
        .def("ring", [](const Extension& e) { return PyRing{e.ring()}; })
        .def("norm_quad", &Extension::norm_quad)
        .def("norm_hom", &Extension::norm_hom);

    m.def("glue_norm_json", [](const py::object& descent) {
        return json_to_py(descent_to_json(glue_norm(descent_from_json(py_to_json(descent)))));
    });

    m.def(
        "verify",
        [](uint64_t seed, int cases, const std::vector<std::string>& laws) {
            VerifyConfig config;
            config.seed = seed;
            config.cases_per_law = cases;
            config.laws = laws;
            return json_to_py(report_to_json(run_verify(config), /*include_timings=*/true));
        },
        py::arg("seed") = 0, py::arg("cases") = 200,
        py::arg("laws") = std::vector<std::string>{});
    m.def("law_names", &law_names);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_subcommand(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
