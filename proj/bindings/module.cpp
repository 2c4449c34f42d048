// Python bindings for the ivrisk core: interval arithmetic, return
// ingestion, risk estimators, model builders and the LP solver.

#include "ivrisk/report.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ivrisk;

PYBIND11_MODULE(_core, m) {
    m.doc() = "interval-valued VaR/CVaR estimation and portfolio selection";
    m.attr("__version__") = "0.1.0";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_static("point", &Interval::point, py::arg("value"))
        .def_property_readonly("lo", &Interval::lo)
        .def_property_readonly("hi", &Interval::hi)
        .def_property_readonly("mean", &Interval::mean)
        .def_property_readonly("width", &Interval::width)
        .def_property_readonly("degenerate", &Interval::degenerate)
        .def(py::self + py::self)
        .def(py::self == py::self)
        .def(-py::self)
        .def("__rmul__", [](const Interval& v, double s) { return s * v; })
        .def("__mul__", [](const Interval& v, double s) { return s * v; })
        .def("__repr__", [](const Interval& v) {
            std::ostringstream out;
            // + 0.0 folds negative zero into plain zero
            out << "Interval(" << v.lo() + 0.0 << ", " << v.hi() + 0.0 << ")";
            return out.str();
        })
        .def("__str__", [](const Interval& v) { return to_string(v); });

    m.def("compare", [](const Interval& a, const Interval& b) {
        const auto c = compare(a, b);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }, py::arg("a"), py::arg("b"),
       "mean-first, left-second order: -1, 0 or 1");

    py::class_<PriceBar>(m, "PriceBar")
        .def(py::init([](const std::string& date, double close, double high, double low) {
                 return PriceBar{Date::parse(date), close, high, low};
             }),
             py::arg("date"), py::arg("close"), py::arg("high"), py::arg("low"))
        .def_property_readonly("date", [](const PriceBar& b) { return b.date.iso(); })
        .def_readonly("close", &PriceBar::close)
        .def_readonly("high", &PriceBar::high)
        .def_readonly("low", &PriceBar::low);

    py::class_<ReturnObservation>(m, "ReturnObservation")
        .def_property_readonly("date", [](const ReturnObservation& o) { return o.date.iso(); })
        .def_readonly("point", &ReturnObservation::point)
        .def_readonly("interval", &ReturnObservation::interval);

    m.def("load_prices",
          [](const std::string& path) { return load_prices(path); },
          py::arg("path"), "read one asset's OHLC history from CSV");
    m.def("log_returns", &log_returns, py::arg("bars"),
          "close-to-close point returns and low/high interval returns");

    py::class_<EmpiricalIntervalSample>(m, "EmpiricalIntervalSample")
        .def(py::init<std::vector<Interval>>(), py::arg("observations"))
        .def_property_readonly("observations", &EmpiricalIntervalSample::observations)
        .def_property_readonly("sorted_index", &EmpiricalIntervalSample::sorted_index)
        .def("__len__", &EmpiricalIntervalSample::size)
        .def("order_statistic", &EmpiricalIntervalSample::order_statistic, py::arg("rank"));

    py::class_<RiskEstimate>(m, "RiskEstimate")
        .def_readonly("alpha", &RiskEstimate::alpha)
        .def_readonly("ivar", &RiskEstimate::ivar)
        .def_readonly("icvar", &RiskEstimate::icvar)
        .def_readonly("tail_size", &RiskEstimate::tail_size);

    m.def("expected_interval", &expected_interval, py::arg("sample"));
    m.def("ivar", &ivar, py::arg("sample"), py::arg("alpha") = 0.05);
    m.def("icvar", &icvar, py::arg("sample"), py::arg("alpha") = 0.05);

    py::class_<JarqueBeraResult>(m, "JarqueBeraResult")
        .def_readonly("statistic", &JarqueBeraResult::statistic)
        .def_readonly("skewness", &JarqueBeraResult::skewness)
        .def_readonly("kurtosis", &JarqueBeraResult::kurtosis);
    m.def("jarque_bera", &jarque_bera, py::arg("series"));

    m.def("gamma_index", &gamma_index, py::arg("a"), py::arg("b"),
          "acceptability grade of 'a is less than b'");

    py::class_<GammaThreshold>(m, "GammaThreshold")
        .def(py::init<double>(), py::arg("value"))
        .def_readonly("value", &GammaThreshold::value);
    py::implicitly_convertible<py::float_, GammaThreshold>();

    py::enum_<Sense>(m, "Sense")
        .value("Maximize", Sense::Maximize)
        .value("Minimize", Sense::Minimize);

    py::class_<LpProblem>(m, "LpProblem")
        .def_readonly("sense", &LpProblem::sense)
        .def_readonly("objective", &LpProblem::objective)
        .def_readonly("ineq_lhs", &LpProblem::ineq_lhs)
        .def_readonly("ineq_rhs", &LpProblem::ineq_rhs)
        .def_readonly("eq_lhs", &LpProblem::eq_lhs)
        .def_readonly("eq_rhs", &LpProblem::eq_rhs)
        .def("dump", &LpProblem::dump);

    py::class_<ModelOneSpec>(m, "ModelOneSpec")
        .def(py::init<GammaThreshold, std::vector<Interval>, std::vector<std::vector<Interval>>,
                      std::vector<Interval>>(),
             py::arg("gamma"), py::arg("risk_caps"), py::arg("estimates"),
             py::arg("expected_returns"));
    py::class_<ModelTwoSpec>(m, "ModelTwoSpec")
        .def(py::init<GammaThreshold, std::vector<Interval>, std::vector<std::vector<Interval>>,
                      std::vector<Interval>>(),
             py::arg("gamma"), py::arg("return_floors"), py::arg("expected_period_returns"),
             py::arg("total_icvar"));
    m.def("build_model1", &build_model1, py::arg("spec"));
    m.def("build_model2", &build_model2, py::arg("spec"));

    py::enum_<SolveStatus>(m, "SolveStatus")
        .value("Optimal", SolveStatus::Optimal)
        .value("Infeasible", SolveStatus::Infeasible)
        .value("Unbounded", SolveStatus::Unbounded);

    py::class_<LpSolution>(m, "LpSolution")
        .def_readonly("status", &LpSolution::status)
        .def_readonly("weights", &LpSolution::weights)
        .def_readonly("objective", &LpSolution::objective)
        .def_readonly("ineq_residuals", &LpSolution::ineq_residuals)
        .def_readonly("eq_residuals", &LpSolution::eq_residuals);

    m.def("solve", &solve, py::arg("problem"),
          py::call_guard<py::gil_scoped_release>());
    m.def("grid_oracle", &grid_oracle, py::arg("problem"), py::arg("step"),
          py::call_guard<py::gil_scoped_release>());

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<NumericalBreakdown>(m, "NumericalBreakdownError", PyExc_ArithmeticError);
}
