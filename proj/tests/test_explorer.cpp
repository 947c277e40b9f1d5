#include "agemo/catalog.hpp"
#include "agemo/explorer.hpp"

#include <doctest.h>

#include <algorithm>

using namespace agemo;

namespace {

struct Fixture {
  CompiledQuiver lam = compile_lambda(2);
  Field fld = lam.algebra->field();
  WalkOptions opts(std::size_t h) const {
    WalkOptions o;
    o.horizon = h;
    CompiledQuiver c = lam;
    o.namer = [c](const Module& m) { return lambda_label(c, 2, m); };
    return o;
  }
  Module M(long a) const { return make_M(lam, Scalar(fld, a)); }
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("explorer") {
  TEST_CASE_FIXTURE(Fixture, "steps") {
    Step fwd = step_forward(M(2));
    CHECK(fwd.kind == Step::Moved);
    CHECK(step_backward(M(2)).kind == Step::Blocked);
    CHECK(step_forward(M(1)).kind == Step::Blocked);
    Step back = step_backward(M(4));
    REQUIRE(back.kind == Step::Moved);
    CHECK(is_isomorphic(*back.module, M(2)).kind == IsoVerdict::Isomorphic);
  }

  TEST_CASE_FIXTURE(Fixture, "component of M(q) is open to the left") {
    ComponentReport r = walk_component(M(2), opts(8));
    CHECK(r.shape == "open-left");
    CHECK(r.vertices.size() == 9);
    CHECK(r.vertices.back().name == "M(q)");
    CHECK(r.vertices.front().name == "M(q^9)");
    CHECK_FALSE(r.vertices.back().torsionless);
    CHECK(std::any_of(r.halts.begin(), r.halts.end(), [](const std::string& h) { return h.rfind("source M(q)", 0) == 0; }));
  }

  TEST_CASE_FIXTURE(Fixture, "other components") {
    CHECK(walk_component(M(1), opts(8)).shape == "open-right");
    CHECK(walk_component(M(3), opts(8)).shape == "open-both");
    ComponentReport z = walk_component(M(0), opts(8));
    CHECK(z.shape == "Atilde_0");
    CHECK(z.closed);
    CHECK(z.vertices.size() == 1);
    ComponentReport a2 = walk_component(make_right_ideal_m(lam, Scalar(fld, 2)).module, opts(8));
    CHECK(a2.shape == "A_2");
    auto m = compile_lambda(-1);
    WalkOptions o;
    o.horizon = 8;
    CHECK(walk_component(make_M(m, Scalar(fld, 3)), o).shape == "Atilde_1");
    CHECK(walk_component(make_M(m, Scalar(fld, 1)), o).shape == "A_2");
  }

  TEST_CASE_FIXTURE(Fixture, "walks reject zero, projective and decomposable modules") {
    CHECK_THROWS_AS(walk_component(zero_module(lam.algebra, Side::Left)), std::invalid_argument);
    CHECK_THROWS_AS(walk_component(regular_module(lam.algebra, Side::Left)), std::invalid_argument);
    CHECK_THROWS_AS(walk_component(direct_sum({M(2), M(3)}).module), std::invalid_argument);
  }

  TEST_CASE_FIXTURE(Fixture, "DOT output at horizon 9") {
    ComponentReport r = walk_component(M(2), opts(9));
    std::string dot = render_dot(r);
    CHECK(dot.rfind("digraph omho {", 0) == 0);
    CHECK(count(dot, "[label=") == 10);
    CHECK(count(dot, " -> ") == 9);
    CHECK(dot.find("label=\"M(q)\"") != std::string::npos);
    CHECK(dot.find("label=\"M(q^10)\"") != std::string::npos);
  }

  TEST_CASE_FIXTURE(Fixture, "JSON round trip and determinism") {
    ComponentReport r = walk_component(M(3), opts(4));
    std::string js = render_json(r);
    CHECK(parse_report_json(js) == r);
    CHECK(render_json(walk_component(M(3), opts(4))) == js);
    CHECK(render_report(r, "json") == js);
    CHECK_FALSE(render_text(r).empty());
    CHECK_THROWS(render_report(r, "svg"));
  }

  TEST_CASE_FIXTURE(Fixture, "fallback names") {
    std::string n = fallback_name(M(1));
    CHECK(n.rfind("X3#", 0) == 0);
    CHECK(fallback_name(M(1)) == n);
    CHECK(fallback_name(M(3)) != n);
  }
}
