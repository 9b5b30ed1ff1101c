#include "kstab/arrangement.hpp"
#include "kstab/error.hpp"
#include "kstab/fitting.hpp"
#include "kstab/flag_df.hpp"
#include "kstab/gamma_p1.hpp"
#include "kstab/json_io.hpp"
#include "kstab/monomial.hpp"
#include "kstab/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using kstab::io::json;

namespace {

// Documents cross the boundary as JSON text; the Python package wraps them.
json from_py(const py::object& obj)
{
    const auto text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return json::parse(text);
}

py::object to_py(const json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

kstab::Rational rational(const py::object& obj, const std::string& field)
{
    return kstab::io::rational_from_json(from_py(obj), field);
}

} // namespace

PYBIND11_MODULE(_kstab, m)
{
    m.doc() = "Exact lct, Berman-Gibbs and Donaldson-Futaki computations";

    static py::exception<kstab::SizeError> size_error(m, "SizeError", PyExc_RuntimeError);
    static py::exception<kstab::StabilizationError> stab_error(m, "StabilizationError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const kstab::InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const kstab::StabilizationError& e) {
            py::set_error(stab_error, e.what());
        } catch (const kstab::SizeError& e) {
            py::set_error(size_error, e.what());
        }
    });

    m.def("lct_braid", [](int g) { return to_py(kstab::io::to_json(kstab::lct_braid(g))); }, py::arg("g"));

    m.def(
        "lct_arrangement",
        [](const py::object& doc) {
            const auto arr = kstab::io::arrangement_from_json(from_py(doc));
            return to_py(kstab::io::to_json(kstab::lct_central(arr)));
        },
        py::arg("arrangement"), "Takes {'n': dim, 'forms': [[...], ...]}");

    m.def(
        "diagonal_discrepancy",
        [](int g, const py::object& c) {
            return kstab::to_string(kstab::diagonal_discrepancy(g, rational(c, "c")));
        },
        py::arg("g"), py::arg("c"));

    m.def(
        "gamma_at_k",
        [](int k, bool matrix) {
            const auto route = matrix ? kstab::LatticeRoute::matrix : kstab::LatticeRoute::partition;
            return to_py(kstab::io::to_json(kstab::gamma_at_k(k, route)));
        },
        py::arg("k"), py::arg("matrix") = false);

    m.def("gamma_report", [](int k_max) { return to_py(kstab::io::to_json(kstab::gamma_report(k_max))); },
          py::arg("k_max"));

    m.def("veronese_determinant", [](int k) { return kstab::veronese_determinant(k).to_string(); }, py::arg("k"));

    m.def(
        "interpolate",
        [](const std::vector<std::pair<long, py::object>>& points) {
            std::vector<kstab::Sample> samples;
            for (const auto& [k, v] : points) {
                samples.push_back({k, rational(v, "value")});
            }
            return kstab::interpolate(samples).to_string();
        },
        py::arg("samples"));

    m.def(
        "df_coefficient",
        [](const py::object& w, const py::object& n_poly, int n) {
            auto poly = [](const py::object& coeffs, const std::string& field) {
                std::vector<kstab::Rational> out;
                for (const auto& c : py::list(coeffs)) {
                    out.push_back(rational(py::reinterpret_borrow<py::object>(c), field));
                }
                return kstab::UniPoly(out);
            };
            return kstab::to_string(kstab::df_coefficient(poly(w, "w"), poly(n_poly, "N"), n));
        },
        py::arg("w"), py::arg("N"), py::arg("n"));

    m.def(
        "donaldson_futaki",
        [](const py::object& flag, const py::object& s, long k_max) {
            auto input = kstab::io::flag_from_json(from_py(flag));
            kstab::Rational s_value = s.is_none() ? input.s.value_or(1) : rational(s, "s");
            kstab::GridSpec grid;
            grid.k_max = k_max;
            return to_py(kstab::io::to_json(kstab::donaldson_futaki(input.flag, s_value, grid)));
        },
        py::arg("flag"), py::arg("s") = py::none(), py::arg("k_max") = kstab::GridSpec{}.k_max);

    m.def(
        "multiplier_ideal",
        [](const py::object& product) {
            const auto ideal = kstab::multiplier_ideal(kstab::io::product_from_json(from_py(product)));
            return py::make_tuple(to_py(kstab::io::to_json(ideal)), ideal.to_string());
        },
        py::arg("product"), "Takes {'factors': [{'ideal': {...}, 'c': 'p/q'}, ...]}");

    m.def(
        "lct_monomial",
        [](const py::object& ideal) {
            return kstab::to_string(kstab::lct_monomial(kstab::io::ideal_from_json(from_py(ideal), "ideal")));
        },
        py::arg("ideal"));

    m.def(
        "summation_check",
        [](const py::object& a0, const py::object& c0, const std::vector<py::object>& parts, const py::object& c,
           long denom_bound) {
            std::vector<kstab::MonomialIdeal> ideals;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                ideals.push_back(kstab::io::ideal_from_json(from_py(parts[i]), "parts[" + std::to_string(i) + "]"));
            }
            const auto result = kstab::summation_check(kstab::io::ideal_from_json(from_py(a0), "a0"),
                                                       rational(c0, "c0"), ideals, rational(c, "c"), denom_bound);
            return to_py(kstab::io::to_json(result));
        },
        py::arg("a0"), py::arg("c0"), py::arg("parts"), py::arg("c"),
        py::arg("denom_bound") = kstab::kDefaultDenominatorBound);

    m.def(
        "verify",
        [](std::uint64_t seed, bool quick) {
            kstab::verify::Options options;
            options.seed = seed;
            options.quick = quick;
            return to_py(kstab::verify::scorecard(options, kstab::verify::run_all(options), false));
        },
        py::arg("seed") = 42, py::arg("quick") = true);
}
