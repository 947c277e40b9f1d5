#include "agemo/algebra_io.hpp"
#include "agemo/catalog.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace agemo;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(AGEMO_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("bundled dimensions") {
    CHECK(make_lambda(2)->dim() == 6);
    CHECK(make_lambda_prime(2)->dim() == 4);
    CHECK(make_lambda_dprime()->dim() == 3);
    CHECK(make_lambda_tilde(2)->dim() == 12);
    CHECK(make_lambda_tilde(2)->vertex_count() == 2);
    CHECK(is_local(*make_lambda(2)));
    CHECK_FALSE(is_local(*make_lambda_tilde(2)));
  }

  TEST_CASE("compiled Lambda equals the hand-written table") {
    for (auto [q, neg] : {std::pair{2, "-2"}, std::pair{3, "-3"}, std::pair{-1, "1"}}) {
      AlgebraPtr hand = finalize(parse_algebra_table(oracle::lambda_table(neg)));
      CHECK(write_algebra_table(*make_lambda(q)) == write_algebra_table(*hand));
    }
  }

  TEST_CASE("data files compile to the embedded sources") {
    CHECK(slurp("lambda.quiver") == lambda_source());
    CHECK(slurp("lambda_prime.quiver") == lambda_prime_source());
    CHECK(slurp("lambda_dprime.quiver") == lambda_dprime_source());
    CHECK(slurp("lambda_tilde.quiver") == lambda_tilde_source());
    auto from_file = build_path_algebra(parse_quiver(slurp("lambda_tilde.quiver")));
    CHECK(write_algebra_table(*from_file.algebra) == write_algebra_table(*make_lambda_tilde(2)));
  }

  TEST_CASE("table serialization is byte-stable") {
    std::string a = write_algebra_table(*make_lambda_tilde(2));
    std::string b = write_algebra_table(*make_lambda_tilde(2));
    CHECK(a == b);
    AlgebraPtr back = finalize(parse_algebra_table(a));
    CHECK(write_algebra_table(*back) == a);
  }

  TEST_CASE("Lambda relations in path coordinates") {
    auto lam = compile_lambda(2);
    const Algebra& a = *lam.algebra;
    Vec x = path_normal_form(lam, "x"), y = path_normal_form(lam, "y"), z = path_normal_form(lam, "z");
    CHECK(is_zero(a.multiply(x, x)));
    CHECK(a.multiply(z, y) == a.multiply(x, z));
    Vec xy = a.multiply(x, y), yx = a.multiply(y, x);
    for (std::size_t i = 0; i < xy.size(); ++i) CHECK(xy[i] == Scalar(a.field(), -2) * yx[i]);
    CHECK(is_zero(a.multiply(y, z)));
  }

  TEST_CASE("prime field and zero q") {
    CHECK(make_lambda(3, Field::prime(5))->dim() == 6);
    CHECK_THROWS(compile_lambda(5, Field::prime(5)));
    CHECK_THROWS(compile_lambda(0));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_quiver("quiver Q\nvertex 0\narrow x: 0 -> 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
    try {
      parse_quiver("quiver Q\nvertex 0\narrow x: 0 -> 0\nrelation x*w\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
      CHECK(e.column > 1);
    }
    CHECK_THROWS_AS(parse_algebra_table("basis a b\nunit 1\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra_table("basis a\nunit 1\nfrobnicate\n"), ParseError);
  }

  TEST_CASE("infinite-dimensional presentations are rejected") {
    CHECK_THROWS_AS(build_path_algebra(parse_quiver("quiver F\nvertex 0\narrow x: 0 -> 0\n")), DimensionBlowup);
  }

  TEST_CASE("invalid tables are reported") {
    // Not associative: a*a = b but a*b = 0 while b*a = b.
    std::string bad =
        "basis e a b\nunit 1 0 0\n"
        "mul e e = 1 0 0\nmul e a = 0 1 0\nmul e b = 0 0 1\nmul a e = 0 1 0\nmul b e = 0 0 1\n"
        "mul a a = 0 0 1\nmul b a = 0 0 1\n";
    CHECK_FALSE(validate_algebra(parse_algebra_table(bad)).empty());
    CHECK_THROWS_AS(finalize(parse_algebra_table(bad)), InvalidAlgebra);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("catalog modules satisfy the relations") {
    auto lam = compile_lambda(2);
    for (long al : {0, 1, 2, 3, -1}) CHECK(validate_module(make_M(lam, Scalar(lam.algebra->field(), al))).empty());
    auto lp = compile_lambda_prime(2);
    CHECK(validate_module(make_M_prime(lp, std::nullopt)).empty());
    auto lt = compile_lambda_tilde(2);
    CHECK(validate_module(make_M_i(lt, 1, Scalar(lt.algebra->field(), 3))).empty());
    CHECK(validate_module(make_M_i(lt, 2, Scalar(lt.algebra->field(), 3))).empty());
    CHECK_THROWS(make_M_i(lt, 3, Scalar(lt.algebra->field(), 3)));
  }

  TEST_CASE("representations from the compiled quiver match direct constructions") {
    auto lam = compile_lambda(2);
    const Field f = lam.algebra->field();
    // M(alpha) as Lambda / (Lambda(x - alpha y) + rad^2).
    for (long al : {0, 1, 2, 5}) {
      Module reg = regular_module(lam.algebra, Side::Left);
      Matrix sub = hstack(hstack(Matrix::column(m_element(lam, Scalar(f, al)), f), Matrix::column(path_normal_form(lam, "y*x"), f)),
                          Matrix::column(path_normal_form(lam, "z*x"), f));
      Module quot = quotient_by(reg, column_space_basis(sub)).module;
      CHECK(is_isomorphic(quot, make_M(lam, Scalar(f, al))).kind == IsoVerdict::Isomorphic);
    }
  }

  TEST_CASE("labels") {
    auto lam = compile_lambda(2);
    const Field f = lam.algebra->field();
    CHECK(power_label(Scalar(f, 8), 2) == "q^3");
    CHECK(power_label(Scalar::parse(f, "1/4"), 2) == "q^-2");
    CHECK(power_label(Scalar(f, 3), 2) == "3");
    CHECK(power_label(Scalar(f, 0), 2) == "0");
    CHECK(lambda_label(lam, 2, make_M(lam, Scalar(f, 4))) == std::optional<std::string>("M(q^2)"));
    CHECK(lambda_label(lam, 2, make_right_ideal_m(lam, Scalar(f, 2)).module) == std::optional<std::string>("m(q)L"));
    CHECK_FALSE(lambda_label(lam, 2, make_left_ideal_m(lam, Scalar(f, 1)).module).has_value());
  }
}
