#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggl/cli.hpp"
#include "ggl/demo.hpp"
#include "ggl/error.hpp"
#include "ggl/identities.hpp"
#include "ggl/structure.hpp"
#include "ggl/theorems.hpp"

namespace py = pybind11;

namespace {

  std::string param_text(py::handle h) {
    if (py::isinstance<py::int_>(h)) {
      return std::to_string(h.cast<long long>());
    }
    return h.cast<std::string>();
  }

  ggl::Groupoid make_groupoid(std::string const& carrier, py::handle t, py::handle u, std::string const& shape) {
    ggl::GroupoidSpec spec;
    spec.carrier = ggl::parse_carrier(carrier);
    spec.shape   = ggl::parse_shape(shape);
    spec.t       = ggl::parse_param(spec.carrier, param_text(t));
    spec.u       = ggl::parse_param(spec.carrier, param_text(u));
    return ggl::Groupoid::build(spec);
  }

  std::string check_json(ggl::Groupoid const& g, std::string const& identity, std::string const& mode) {
    auto verdicts = nlohmann::json::array();
    for (auto id : ggl::parse_identity_set(identity)) {
      verdicts.push_back(ggl::to_json(ggl::check_identity(g, id, ggl::parse_mode(mode))));
    }
    return verdicts.dump();
  }

  std::string smarandache_json(ggl::Groupoid const& g, std::optional<std::string> const& identity) {
    std::vector<ggl::IdentityId> ids;
    if (identity) {
      ids = ggl::parse_identity_set(*identity);
    }
    return ggl::to_json(g, ggl::smarandache_identity(g, ids)).dump();
  }

  std::string simple_json(ggl::Groupoid const& g, std::uint64_t max_order) {
    auto           v = ggl::is_simple(g, max_order);
    nlohmann::json j{{"simple", v.simple}, {"complete", v.complete}};
    j["normal"] = nlohmann::json::array();
    for (auto const& s : v.normal) {
      j["normal"].push_back(ggl::subset_json(g, s));
    }
    if (v.witness) {
      j["witness"] = ggl::subset_json(g, *v.witness);
    }
    return j.dump();
  }

  std::string verify_json(std::optional<std::vector<std::string>> const& only,
                          std::optional<std::string> const&              range,
                          std::uint64_t                                  seed,
                          bool                                           timing) {
    auto cfg = ggl::default_config(seed);
    if (only) {
      cfg.checks.clear();
      for (auto const& id : *only) {
        ggl::find_check(id);
        cfg.checks.push_back({id, std::nullopt});
      }
    }
    if (range) {
      auto r = ggl::parse_range(*range);
      for (auto& c : cfg.checks) {
        c.range = r;
      }
    }
    py::gil_scoped_release release;
    auto                   report = ggl::run_suite(cfg);
    auto                   j      = ggl::to_json(report, timing);
    j["asserted_ok"]              = report.asserted_ok();
    return j.dump();
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Star groupoids over modular, neutrosophic and interval carriers";

  auto base = py::register_exception<ggl::Error>(m, "GglError");
  py::register_exception<ggl::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ggl::ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ggl::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ggl::BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<ggl::Groupoid>(m, "Groupoid")
      .def(py::init(&make_groupoid), py::arg("carrier"), py::arg("t"), py::arg("u"), py::arg("shape") = "scalar")
      .def_static(
          "from_table",
          [](std::vector<std::string> labels, std::vector<std::vector<std::uint64_t>> table) {
            return ggl::Groupoid::from_table(std::move(labels), std::move(table));
          },
          py::arg("labels"), py::arg("table"))
      .def_property_readonly("order", &ggl::Groupoid::size)
      .def("star", py::overload_cast<std::uint64_t, std::uint64_t>(&ggl::Groupoid::star, py::const_), py::arg("i"),
           py::arg("j"))
      .def("label", &ggl::Groupoid::label)
      .def("labels", &ggl::Groupoid::labels)
      .def("describe", &ggl::Groupoid::describe)
      .def("__repr__", [](ggl::Groupoid const& g) { return "<Groupoid " + g.describe() + ">"; })
      .def(
          "table",
          [](ggl::Groupoid const& g, std::uint64_t cap) { return ggl::cayley_table(g, cap).cells; },
          py::arg("cap") = ggl::kDefaultTableCap)
      .def(
          "table_tsv", [](ggl::Groupoid const& g) { return ggl::to_tsv(ggl::cayley_table(g)); })
      .def("_check_json", &check_json, py::arg("identity"), py::arg("mode") = "auto",
           py::call_guard<py::gil_scoped_release>())
      .def(
          "_structure_json",
          [](ggl::Groupoid const& g, std::uint64_t max_order) { return ggl::structure_report(g, max_order).dump(); },
          py::arg("max_order") = ggl::kDefaultClosureLimit, py::call_guard<py::gil_scoped_release>())
      .def("_simple_json", &simple_json, py::arg("max_order") = ggl::kDefaultClosureLimit,
           py::call_guard<py::gil_scoped_release>())
      .def("_smarandache_json", &smarandache_json, py::arg("identity") = std::nullopt,
           py::call_guard<py::gil_scoped_release>());

  m.def(
      "count",
      [](std::string const& carrier, std::string const& cls, bool equal_pairs) {
        return ggl::count_class({ggl::parse_carrier(carrier), ggl::parse_class_kind(cls), equal_pairs});
      },
      py::arg("carrier"), py::arg("cls"), py::arg("equal_pairs") = false);

  m.def("_verify_json", &verify_json, py::arg("only") = std::nullopt, py::arg("range") = std::nullopt,
        py::arg("seed") = 42, py::arg("timing") = false);

  m.def("demo_names", &ggl::demo_names);
  m.def(
      "demo",
      [](std::string const& name) {
        auto r = ggl::run_demo(name);
        return py::dict(py::arg("name") = r.name, py::arg("title") = r.title, py::arg("output") = r.output,
                        py::arg("golden") = r.golden, py::arg("matches") = r.matches);
      },
      py::arg("name"));

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int                code = ggl::cli::run(std::move(args), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
