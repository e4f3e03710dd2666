#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/contact.hpp"
#include "contact_sextic/curves.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/families.hpp"
#include "contact_sextic/numeric.hpp"

namespace py = pybind11;
using namespace contact_sextic;

namespace {

// Rationals cross the boundary as fractions.Fraction; int, str ("p/q") and
// Fraction are accepted on the way in.
Rational to_q(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object from_q(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

py::list from_qs(const std::vector<Rational>& v) {
    py::list out;
    for (const auto& q : v) out.append(from_q(q));
    return out;
}

GeneralSolutionParams general_params(const py::dict& d) {
    GeneralSolutionParams p;
    Rational* slot[7] = {&p.c1, &p.c2, &p.c3, &p.c4, &p.c5, &p.c6, &p.c7};
    for (const auto& [k, v] : d) {
        const std::string key = py::str(k);
        if (key.size() != 2 || key[0] != 'c' || key[1] < '1' || key[1] > '7')
            throw Error(ErrorCode::InvalidArgument, "unknown parameter " + key);
        *slot[key[1] - '1'] = to_q(v);
    }
    return p;
}

PointTransformationParams point_params(const py::dict& d) {
    const GeneralSolutionParams g = general_params(d);
    return {g.c1, g.c2, g.c3, g.c4, g.c5, g.c6, g.c7};
}

ContactFamilyParams contact_params(const py::dict& d) {
    ContactFamilyParams p;
    std::map<std::string, Rational*> slot{{"b", &p.b},   {"b0", &p.b0}, {"b1", &p.b1}, {"b2", &p.b2},
                                          {"b3", &p.b3}, {"b4", &p.b4}, {"b5", &p.b5}, {"b6", &p.b6}};
    for (const auto& [k, v] : d) {
        const auto it = slot.find(py::str(k));
        if (it == slot.end()) throw Error(ErrorCode::InvalidArgument, "unknown parameter " + std::string(py::str(k)));
        *it->second = to_q(v);
    }
    return p;
}

py::tuple pair(const CurvePair& c) { return py::make_tuple(c.implicit, c.parametric); }

NumericJet jet_of(double x0, const std::vector<double>& y) { return {x0, y}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and numeric core: polynomials, contact algebra, solution families, integrator and fit.";

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("code") = to_string(e.code());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<MultiPoly>(m, "Poly")
        .def(py::init([](const std::string& s) { return MultiPoly::parse(s); }))
        .def(py::init([](long c) { return MultiPoly(c); }))
        .def_static("variable", &MultiPoly::variable)
        .def("__str__", &MultiPoly::to_string)
        .def("__repr__", [](const MultiPoly& p) { return "Poly('" + p.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("__pow__", &MultiPoly::pow)
        .def_property_readonly("variables", &MultiPoly::variables)
        .def_property_readonly("is_zero", &MultiPoly::is_zero)
        .def("degree", &MultiPoly::degree)
        .def("total_degree", &MultiPoly::total_degree)
        .def("derivative", &MultiPoly::derivative)
        .def("substitute", &MultiPoly::substitute)
        .def("evaluate",
             [](const MultiPoly& p, const py::dict& at) {
                 std::map<std::string, Rational> v;
                 for (const auto& [k, q] : at) v[py::str(k)] = to_q(q);
                 return p.evaluate(v);
             })
        .def("evaluate_float", &MultiPoly::evaluate_double)
        .def("divides", [](const MultiPoly& p, const MultiPoly& d) -> py::object {
            MultiPoly q;
            if (!p.divides_into(d, &q)) return py::none();
            return py::cast(q);
        }, "Quotient p / d when d divides p exactly, else None.");

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init([](const std::string& s) { return RationalFunction::parse(s); }))
        .def("__str__", &RationalFunction::to_string)
        .def("__repr__", [](const RationalFunction& r) { return "RationalFunction('" + r.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def("derivative", &RationalFunction::derivative)
        .def("__call__", [](const RationalFunction& r, double t) { return r.evaluate(t); })
        .def("exact", [](const RationalFunction& r, const py::object& t) { return from_q(r.evaluate(to_q(t))); })
        .def_property_readonly("numerator", &RationalFunction::numerator_poly)
        .def_property_readonly("denominator", &RationalFunction::denominator_poly);

    py::class_<ParametricCurve>(m, "ParametricCurve")
        .def(py::init([](const std::string& x, const std::string& y) {
            return ParametricCurve(RationalFunction::parse(x), RationalFunction::parse(y));
        }))
        .def(py::init<RationalFunction, RationalFunction>())
        .def_property_readonly("x", &ParametricCurve::x)
        .def_property_readonly("y", &ParametricCurve::y)
        .def("__repr__", [](const ParametricCurve& c) {
            return "ParametricCurve('" + c.x().to_string() + "', '" + c.y().to_string() + "')";
        });

    py::class_<ImplicitCurve>(m, "ImplicitCurve")
        .def(py::init([](const std::string& f) { return ImplicitCurve(MultiPoly::parse(f)); }))
        .def(py::init<MultiPoly>())
        .def_property_readonly("polynomial", &ImplicitCurve::polynomial)
        .def_property_readonly("degree", &ImplicitCurve::degree)
        .def("__repr__", [](const ImplicitCurve& c) { return "ImplicitCurve('" + c.polynomial().to_string() + "')"; });

    // elimination and invariants
    m.def("resultant", &resultant, py::arg("u"), py::arg("v"), py::arg("var"));
    m.def("discriminant", &discriminant_wrt, py::arg("f"), py::arg("var") = "y");
    m.def("substitute", [](const MultiPoly& f, const ParametricCurve& c) {
        return substitute_rational(f, {{"x", c.x()}, {"y", c.y()}});
    }, "Numerator of f(x(t), y(t)).");
    m.def("discriminant_is_cube", [](const ImplicitCurve& c) { return discriminant_is_cube(c); });
    m.def("count_real_roots", [](const MultiPoly& p) { return count_real_roots(p.to_unipoly(p.variables().empty() ? "x" : p.variables()[0])); });
    m.def("complex_roots", &complex_roots);
    m.def("cross_ratio", &cross_ratio);
    m.def("equianharmonic", [](const std::array<Complex, 4>& r, double tol) {
        const EquianharmonicCheck e = equianharmonic_check(r, tol);
        return py::make_tuple(e.equianharmonic, e.cross_ratio, e.distance);
    }, py::arg("roots"), py::arg("tolerance") = 1e-10);
    m.def("singular_points", [](const ImplicitCurve& c) {
        py::list out;
        for (const auto& s : singular_points(c)) {
            py::dict d;
            d["x"] = s.x;
            d["y"] = s.y;
            d["multiplicity"] = s.multiplicity;
            d["exact"] = s.is_exact() ? py::object(py::make_tuple(from_q(*s.x_exact), from_q(*s.y_exact))) : py::none();
            out.append(d);
        }
        return out;
    });
    m.def("arithmetic_genus", &arithmetic_genus);
    m.def("quadratic_invariant", [](const MultiPoly& sextic) {
        return from_q(quadratic_invariant(SexticForm::from_polynomial(sextic)));
    }, "a1 a7 - 6 a2 a6 + 15 a3 a5 - 10 a4^2 of a binary sextic given as a polynomial in x.");
    m.def("mobius_sextic", [](const MultiPoly& sextic, const py::object& a, const py::object& b, const py::object& c,
                              const py::object& d) {
        return SexticForm::from_polynomial(sextic).mobius(to_q(a), to_q(b), to_q(c), to_q(d)).to_polynomial();
    });

    // curves and the equation
    m.def("verify_solution", [](const ParametricCurve& c) {
        const Verification v = verify_solution(c);
        return py::make_tuple(v.solves, v.residual);
    });
    m.def("ode_residual", &ode_residual);
    m.def("halphen_residual", &halphen_residual);
    m.def("implicit_jet", [](const ImplicitCurve& c, const py::object& x0, const py::object& y0, unsigned order) {
        return from_qs(implicit_jet(c, to_q(x0), to_q(y0), order).y);
    }, py::arg("curve"), py::arg("x0"), py::arg("y0"), py::arg("order") = 6);
    m.def("jet_from_parametric", &jet_from_parametric);

    // families
    m.def("seed_curve", [] { return py::make_tuple(seed_implicit(), seed_curve()); });
    m.def("canonical_curve", [] { return pair(canonical_curve()); });
    m.def("general_solution", [](const py::dict& c) { return pair(general_solution(general_params(c))); },
          py::arg("params") = py::dict());
    m.def("contact_family", [](const py::dict& b) {
        const ContactCurve c = contact_family(contact_params(b));
        return py::make_tuple(c.curve, c.z);
    });
    m.def("degree_four_family", [](const MultiPoly& Q, const MultiPoly& P) {
        return py::make_tuple(degree_four_family(Q, P), degree_four_parametrization(Q, P));
    });
    m.def("new_curve", [](const py::object& b) { return new_curve(to_q(b)); });
    m.def("new_curve_polynomial", &new_curve_polynomial);
    m.def("split_elimination", [](const py::object& b) {
        const EliminationSplit s = split_elimination(to_q(b));
        return py::make_tuple(s.resultant, s.solution, s.spurious);
    });
    m.def("conic_family", [](const std::vector<py::object>& c, const py::object& point) {
        if (c.size() != 5) throw Error(ErrorCode::InvalidArgument, "five coefficients expected");
        std::array<Rational, 5> q;
        for (int i = 0; i < 5; ++i) q[i] = to_q(c[i]);
        std::optional<std::pair<Rational, Rational>> pt;
        if (!point.is_none()) pt = std::make_pair(to_q(point[py::int_(0)]), to_q(point[py::int_(1)]));
        ConicFamily f = conic_family(q, pt);
        return py::make_tuple(f.implicit, f.parametric);
    }, py::arg("c"), py::arg("point") = py::none());

    // contact geometry
    m.def("symmetry_generators", [] {
        std::vector<MultiPoly> out;
        for (const auto& h : symmetry_generators()) out.push_back(h.H);
        return out;
    });
    m.def("lagrange_bracket", [](const MultiPoly& h, const MultiPoly& g) {
        return lagrange_bracket({h}, {g}).H;
    });
    m.def("algebra_table", [] {
        const AlgebraTable t = build_algebra_table();
        py::list killing;
        for (const auto& row : t.killing) killing.append(from_qs(row));
        const Signature s = t.killing_signature();
        py::dict d;
        d["span_dimension"] = t.span_dimension;
        d["antisymmetric"] = t.is_antisymmetric();
        d["jacobi"] = t.satisfies_jacobi();
        d["killing"] = killing;
        d["killing_determinant"] = from_q(t.killing_determinant());
        d["signature"] = py::make_tuple(s.positive, s.negative, s.zero);
        d["point_type_count"] = t.point_type_count();
        return d;
    });
    m.def("apply_point_transformation", [](const ParametricCurve& c, const py::dict& p) {
        return apply_point_transformation(c, point_params(p));
    });
    m.def("apply_contact_flow", [](const ParametricCurve& c, const std::string& gen, const py::object& time) {
        const ContactGenerator g = gen == "H8" ? ContactGenerator::H8 : gen == "H9" ? ContactGenerator::H9
                                 : gen == "H10" ? ContactGenerator::H10
                                 : throw Error(ErrorCode::InvalidArgument, "generator must be H8, H9 or H10");
        const ContactCurve cc = apply_contact_flow(c, {g, to_q(time)});
        return py::make_tuple(cc.curve, cc.z);
    });
    m.def("linearization_residual", [](const MultiPoly& H, const ParametricCurve& c) {
        return linearization_residual({H}, c);
    });

    // numerics
    m.def("y7_from_jet", [](double x0, const std::vector<double>& y, double eps) {
        return y7_from_jet(jet_of(x0, y), eps);
    }, py::arg("x0"), py::arg("y"), py::arg("eps_sing") = 1e-8);
    m.def("integrate", [](double x0, const std::vector<double>& y, double x_end, double rtol, double atol,
                          double eps_sing) {
        IntegratorConfig cfg;
        cfg.rtol = rtol;
        cfg.atol = atol;
        cfg.eps_sing = eps_sing;
        Trajectory tr;
        {
            py::gil_scoped_release nogil;
            tr = integrate(jet_of(x0, y), x_end, cfg);
        }
        const auto n = static_cast<py::ssize_t>(tr.samples.size());
        py::array_t<double> xs(n), ys({n, py::ssize_t{7}});
        auto X = xs.mutable_unchecked<1>();
        auto Y = ys.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < n; ++i) {
            X(i) = tr.samples[i].x;
            for (py::ssize_t k = 0; k < 7; ++k) Y(i, k) = tr.samples[i].y[k];
        }
        const char* status = tr.status == IntegrationStatus::Completed ? "completed" : "singularity_approached";
        return py::make_tuple(xs, ys, status);
    }, py::arg("x0"), py::arg("y"), py::arg("x_end"), py::arg("rtol") = 1e-10, py::arg("atol") = 1e-12,
       py::arg("eps_sing") = 1e-8,
       "Returns (x, Y, status) with Y[i] = (y, y', ..., y^(6)) at x[i].");
    m.def("predicted_jet", &predicted_jet);
    m.def("fit_parameters", [](double x0, const std::vector<double>& y, std::optional<ParamVector> guess,
                               double tolerance, int max_iterations) {
        FitConfig cfg;
        cfg.tolerance = tolerance;
        cfg.max_iterations = max_iterations;
        if (guess) cfg.initial_guess = *guess;
        const FitResult r = fit_parameters(jet_of(x0, y), cfg);
        py::dict d;
        for (int k = 0; k < 7; ++k) d[("c" + std::to_string(k + 1)).c_str()] = r.c[k];
        d["residuals"] = r.residuals;
        d["residual_norm"] = r.residual_norm;
        d["iterations"] = r.iterations;
        return d;
    }, py::arg("x0"), py::arg("y"), py::arg("guess") = py::none(), py::arg("tolerance") = 1e-11,
       py::arg("max_iterations") = 25);
}
