#include "ndga/error.hpp"
#include "ndga/io.hpp"
#include "ndga/riemannian.hpp"

#include <doctest.h>

using namespace ndga;

namespace {

std::string data(const std::string& name) { return read_text_file(std::string(NDGA_TEST_DATA_DIR) + "/" + name); }

int parse_error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

} // namespace

TEST_CASE("connection files") {
  const auto w5 = parse_connection(data("rotation.conn"));
  CHECK(w5.base_dim() == 4);
  CHECK(w5.fiber_dim() == 1);
  CHECK(w5.block(1)(0, 0) == ScalarExpr::variable(2));
  CHECK(w5.block(2)(0, 0) == -ScalarExpr::variable(1));
  CHECK(w5.block(3).is_zero());

  const auto w12 = parse_connection(data("torus.conn"));
  CHECK(w12.block(1) == ExprMatrix::unit(2, 0, 0));
  CHECK(w12.block(2) == ExprMatrix::unit(2, 0, 1));

  CHECK(parse_connection(data("zero.conn")).form().is_structurally_zero());
  CHECK(parse_error_line([&] { parse_connection(data("bad_entry.conn")); }) == 4);
  CHECK(parse_error_line([] { parse_connection("base 2\nfiber 1\nomega 3\n1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_connection("base 2\nfiber 2\nomega 1\n1; 2\n3\n"); }) == 5);
  CHECK(parse_error_line([] { parse_connection("base x\nfiber 1\n"); }) == 1);
}

TEST_CASE("metric files") {
  const auto m10 = parse_metric(data("sin_squared.metric"));
  CHECK_FALSE(m10.inverse);
  CHECK(m10.g(0, 0) == sin(ScalarExpr::variable(2)).pow(2));
  CHECK(Metric(m10.g, m10.inverse).inverse()(0, 0) == sin(ScalarExpr::variable(2)).pow(-2));

  const auto shear = parse_metric(data("shear.metric"));
  REQUIRE(shear.inverse);
  CHECK_NOTHROW(Metric(shear.g, shear.inverse));

  const auto ns = parse_metric(data("nonsymmetric.metric"));
  CHECK_THROWS_AS(Metric(ns.g, ns.inverse), ValidationError);
  CHECK(parse_error_line([] { parse_metric("dim 2\n1; 0\n0; 1\nfoo\n"); }) == 4);
  CHECK(parse_error_line([] { parse_metric("dim 2\n1; 0\n"); }) == 2);
}

TEST_CASE("complex files") {
  const auto c = parse_complex(data("chain3.ncx"));
  CHECK(c.order() == 3);
  CHECK(c.lo() == 0);
  CHECK(c.hi() == 2);
  CHECK(validate(c));
  CHECK_FALSE(validate(parse_complex(data("chain3_n2.ncx"))));
  CHECK(p_cohomology_dim(parse_complex(data("two_step.ncx")), 2, 0) == 1);
  const auto z = parse_complex(data("zero2.ncx"));
  CHECK(z.d(0).is_zero());
  CHECK(z.dim(1) == 2);

  CHECK(parse_error_line([] { parse_complex("N 3\ndeg 0 dim 2\n1 2\n3 4\ndeg 1 dim 1\n"); }) == 2);
  CHECK(parse_error_line([] { parse_complex("N 3\ndeg 0 dim 2\n1 q\ndeg 1 dim 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_complex("N 3\ndeg 0 dim 1\ndeg 2 dim 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_complex("N 1\n"); }) == 1);
}
