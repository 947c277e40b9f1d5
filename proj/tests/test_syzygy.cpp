#include "agemo/catalog.hpp"
#include "agemo/syzygy.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace agemo;

namespace {

struct Fixture {
  CompiledQuiver lam = compile_lambda(2);
  Field fld = lam.algebra->field();
  Module M(long a) const { return make_M(lam, Scalar(fld, a)); }
  Module mL(long a) const { return make_right_ideal_m(lam, Scalar(fld, a)).module; }
  Module Lm(long a) const { return make_left_ideal_m(lam, Scalar(fld, a)).module; }
  bool iso(const Module& a, const Module& b) const { return is_isomorphic(a, b).kind == IsoVerdict::Isomorphic; }
};

std::vector<std::size_t> values(const ExtProfile& p) {
  std::vector<std::size_t> v;
  for (const auto& e : p.dims) v.push_back(e.value);
  return v;
}

}  // namespace

TEST_SUITE("syzygy") {
  TEST_CASE_FIXTURE(Fixture, "syzygies of M(alpha) scale alpha by q") {
    for (long a : {2, 3, -1}) CHECK(iso(syzygy(M(a)), M(2 * a)));
    CHECK(iso(syzygy(M(0)), M(0)));
    CHECK(iso(syzygy_power(M(1), 1), syzygy(M(1))));
    CHECK(syzygy(regular_module(lam.algebra, Side::Left)).dim() == 0);
  }

  TEST_CASE_FIXTURE(Fixture, "projective covers") {
    ProjectiveCover c = projective_cover(M(2));
    CHECK(c.projective.dim() == 6);
    CHECK(is_intertwining(c.map));
    CHECK(projective_cover(syzygy(M(1))).projective.dim() == 12);
    ProjectivePresentation p = minimal_presentation(M(3));
    CHECK(p.cover1.projective.dim() == 6);
  }

  TEST_CASE_FIXTURE(Fixture, "transpose and cosyzygy") {
    CHECK(iso(transpose(M(3)), mL(6)));
    CHECK(iso(cosyzygy(M(6)), M(3)));
    CHECK(transpose(regular_module(lam.algebra, Side::Left)).dim() == 0);
    CHECK(iso(transpose(transpose(M(3))), M(3)));
  }

  TEST_CASE_FIXTURE(Fixture, "minimal left approximations") {
    LeftApproximation a = minimal_left_approximation(Lm(3));
    CHECK(a.target.dim() == 6);
    CHECK(iso(a.cokernel.module, M(3)));
    CHECK(minimal_left_approximation(mL(2)).target.dim() == 12);
    CHECK(is_intertwining(a.map));
  }

  TEST_CASE_FIXTURE(Fixture, "Ext profiles against explicit free resolutions") {
    CHECK(values(ext_profile(M(1), 4)) == oracle::naive_ext(M(1), 4));
    CHECK(values(ext_profile(M(1), 4)) == std::vector<std::size_t>{2, 5, 9, 18});
    CHECK(values(ext_profile(M(2), 4)) == oracle::naive_ext(M(2), 4));
    CHECK(values(ext_profile(mL(1), 4)) == oracle::naive_ext(mL(1), 4));
    CHECK(values(ext_profile(mL(2), 3)) == oracle::naive_ext(mL(2), 3));
    Module k = simple_module(lam.algebra, Side::Left, 0);
    CHECK(values(ext_profile(k, 3)) == oracle::naive_ext(k, 3));
    auto lt = compile_lambda_tilde(2);
    Module m1 = make_M_i(lt, 1, Scalar(fld, 1));
    CHECK(values(ext_profile(m1, 3)) == oracle::naive_ext(m1, 3));
    auto ld = compile_lambda_dprime();
    Module s = simple_module(ld.algebra, Side::Left, 0);
    CHECK(values(ext_profile(s, 4)) == oracle::naive_ext(s, 4));
  }

  TEST_CASE_FIXTURE(Fixture, "Ext profiles: frozen values") {
    ExtProfile p = ext_profile(M(1), 6);
    CHECK(values(p) == std::vector<std::size_t>{2, 5, 9, 18, 36, 25});
    CHECK(p.at(5).exact);
    CHECK_FALSE(p.at(6).exact);
    CHECK(p.at(6).to_string() == ">=25");
    CHECK(ext_profile(M(2), 20).all_zero());
    ExtProfile k = ext_profile(simple_module(lam.algebra, Side::Left, 0), 10);
    CHECK(values(k) == std::vector<std::size_t>{3, 6, 12, 24, 1, 1, 1, 1, 1, 1});
    CHECK(k.at(4).exact);
    CHECK_FALSE(k.at(5).exact);
    CHECK_FALSE(k.notes.empty());
    CHECK_THROWS(ext_profile(M(1), 0));
  }

  TEST_CASE_FIXTURE(Fixture, "early stop") {
    ExtOptions o;
    o.stop_at_first_nonzero = true;
    ExtProfile p = ext_profile(M(1), 10, o);
    CHECK(p.dims.size() == 1);
    CHECK(p.first_nonzero() == std::optional<std::size_t>(1));
  }

  TEST_CASE_FIXTURE(Fixture, "torsionless and reflexive") {
    CHECK(torsion_dim(M(2)) == 1);
    CHECK_FALSE(is_torsionless(M(2)));
    CHECK(is_torsionless(M(4)));
    CHECK(is_reflexive(M(8)));
    CHECK_FALSE(is_reflexive(M(4)));
    CHECK_FALSE(is_reflexive(M(2)));
    CHECK(dual_dim(M(2)) == hom_dim(M(2), regular_module(lam.algebra, Side::Left)));
    CHECK(dual_dim(M(1)) == oracle::naive_hom_dim(M(1), regular_module(lam.algebra, Side::Left)));
  }

  TEST_CASE_FIXTURE(Fixture, "GP certification") {
    CHECK(certify_gp(M(2), 20).kind == GPVerdict::NotGP);
    GPVerdict zero = certify_gp(M(0), 20);
    CHECK(zero.kind == GPVerdict::GPExact);
    CHECK(zero.period == 1);
    auto m = compile_lambda(-1);
    GPVerdict v = certify_gp(make_M(m, Scalar(fld, 3)), 20);
    CHECK(v.kind == GPVerdict::GPExact);
    CHECK(v.period == 2);
    CHECK(omega_period(make_M(m, Scalar(fld, 5)), 10).period == std::optional<std::size_t>(2));
    CHECK_FALSE(omega_period(M(3), 6).period.has_value());
  }

  TEST_CASE_FIXTURE(Fixture, "self-injective algebra: every module is GP") {
    auto lp = compile_lambda_prime(2);
    for (long a : {1, 2, 3}) {
      Module m = make_M_prime(lp, Scalar(fld, a));
      CHECK(ext_profile(m, 8).all_zero());
      CHECK(is_reflexive(m));
    }
  }

  TEST_CASE_FIXTURE(Fixture, "G-conditions") {
    GStatus a = g_status(M(2), 20);
    CHECK(a.g1.holds);
    CHECK(a.g2.holds);
    CHECK_FALSE(a.g3.holds);
    CHECK(a.g3.level == Certification::Exact);
    GStatus b = g_status(M(8), 20);
    CHECK(b.g1.holds);
    CHECK_FALSE(b.g2.holds);
    CHECK(b.g2.level == Certification::Refuted);
    CHECK(b.g2.index == 1);
    CHECK(b.g3.holds);
    GStatus c = g_status(M(1), 20);
    CHECK_FALSE(c.g1.holds);
    CHECK(c.g1.index == 1);
    CHECK(c.g2.holds);
    CHECK(c.g3.holds);
  }

  TEST_CASE_FIXTURE(Fixture, "TR profiles") {
    TRProfile p = tr_profile(M(1), 8);
    for (long i = -8; i <= -1; ++i) CHECK(p.at(i) == Truth::Holds);
    CHECK(p.at(1) == Truth::Fails);
    TRProfile r = tr_profile(make_M(lam, Scalar::parse(fld, "1/4")), 8);
    CHECK(r.at(2) == Truth::Holds);
    CHECK(r.at(3) == Truth::Fails);
  }
}
