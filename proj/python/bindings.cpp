#include "ndga/chern_simons.hpp"
#include "ndga/depth_forms.hpp"
#include "ndga/error.hpp"
#include "ndga/io.hpp"
#include "ndga/kn_flat.hpp"
#include "ndga/n_complex.hpp"
#include "ndga/riemannian.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ndga;

namespace {

std::vector<std::pair<std::string, std::string>> terms_of(const FreeElement& e) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [w, c] : ordered_terms(e)) out.emplace_back(render_word(w), to_string(c));
  return out;
}

std::vector<std::vector<std::string>> rows_of(const ExprMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(render(m(r, c)));
  return out;
}

std::map<std::string, std::vector<std::vector<std::string>>> form_of(const EndValuedForm& f) {
  std::map<std::string, std::vector<std::vector<std::string>>> out;
  for (const auto& [idx, m] : f.components()) out.emplace(idx.str(), rows_of(m));
  return out;
}

Metric metric_from(const std::string& text) {
  auto in = parse_metric(text);
  return Metric(in.g, in.inverse);
}

} // namespace

PYBIND11_MODULE(_ndga, m) {
  m.doc() = "Exact computations for N-differential graded algebras";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  m.def("simplify", [](const std::string& text) { return render(parse(text)); }, py::arg("expr"));
  m.def("diff", [](const std::string& text, int index) { return render(parse(text).diff(index)); }, py::arg("expr"),
        py::arg("variable"));

  m.def("cs_lagrangian", [](int K) { return terms_of(chern_simons_lagrangian(K)); }, py::arg("K"));
  m.def("cs_classes", [](int K) { return terms_of(chern_simons_classes(K)); }, py::arg("K"));
  m.def(
      "formal_variation_constant",
      [](int K) -> std::optional<std::string> {
        const auto v = formal_variation(K);
        if (!v.constant) return std::nullopt;
        return to_string(*v.constant);
      },
      py::arg("K"));

  m.def(
      "minimal_flatness",
      [](const std::string& connection, int max_N) { return minimal_flatness(parse_connection(connection), max_N); },
      py::arg("connection"), py::arg("max_N") = 8);
  m.def("curvature", [](const std::string& connection) { return form_of(curvature(parse_connection(connection))); },
        py::arg("connection"));

  m.def(
      "christoffel",
      [](const std::string& metric) {
        const auto g = metric_from(metric);
        const auto gamma = christoffel(g);
        std::map<std::tuple<int, int, int>, std::string> out;
        for (int i = 1; i <= g.dimension(); ++i)
          for (int j = 1; j <= g.dimension(); ++j)
            for (int k = 1; k <= g.dimension(); ++k)
              if (!gamma(i, j, k).is_structurally_zero()) out[{i, j, k}] = render(gamma(i, j, k));
        return out;
      },
      py::arg("metric"));
  m.def("riemann_form", [](const std::string& metric) { return form_of(riemann_form(metric_from(metric))); },
        py::arg("metric"));
  m.def(
      "levi_civita_flatness",
      [](const std::string& metric, int max_N) { return minimal_flatness(levi_civita_connection(metric_from(metric)), max_N); },
      py::arg("metric"), py::arg("max_N") = 8);

  m.def(
      "knflat_expand",
      [](int N, int K, bool infinitesimal) {
        const auto e = infinitesimal ? infinitesimal_expansion(N, K) : nabla_power_expansion(N, K);
        std::vector<std::string> out;
        for (const auto& c : e) out.push_back(render_delta_word(c));
        return out;
      },
      py::arg("N"), py::arg("K"), py::arg("infinitesimal") = false);
  m.def("c_coefficient", &c_coefficient, py::arg("s"), py::arg("N"));
  m.def(
      "paths",
      [](int N, const VertexS& s) {
        std::vector<std::pair<std::vector<VertexS>, int>> out;
        for (const auto& p : enumerate_paths(N, s)) out.emplace_back(p.vertices, p.weight);
        return out;
      },
      py::arg("N"), py::arg("s"));

  m.def("minimal_nilpotency", &minimal_nilpotency, py::arg("profile"));
  m.def(
      "depth_d",
      [](const DepthProfile& profile, const std::string& monomial, const std::string& coefficient, int power) {
        const auto a = DepthForm::monomial(profile, parse_depth_index(profile, monomial), parse(coefficient));
        return d_power(a, power).str();
      },
      py::arg("profile"), py::arg("monomial"), py::arg("coefficient") = "1", py::arg("power") = 1);

  m.def(
      "ncomplex_cohomology",
      [](const std::string& text) {
        const auto c = parse_complex(text);
        if (!validate(c)) throw ValidationError("d^N is not zero");
        std::map<std::pair<int, int>, std::size_t> out;
        for (int i = c.lo(); i <= c.hi(); ++i)
          for (int p = 1; p < c.order(); ++p) out[{i, p}] = p_cohomology_dim(c, p, i);
        return out;
      },
      py::arg("complex"));
  m.def(
      "ncomplex_validate", [](const std::string& text) { return validate(parse_complex(text)); }, py::arg("complex"));
  m.def(
      "tensor_nilpotency",
      [](const std::string& a, const std::string& b) { return tensor_nilpotency(parse_complex(a), parse_complex(b)); },
      py::arg("a"), py::arg("b"));
}
