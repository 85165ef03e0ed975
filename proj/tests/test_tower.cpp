#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swd/errors.hpp"
#include "swd/tower.hpp"

using namespace swd;
using P = Partition;

namespace {

const Nu gen = Nu::generic();
Nu nu(long v) { return Nu::integer(v); }
Rank rk(int n) { return Rank::finite(n); }

OLabel simple(Nu n, Rank r, P lambda) { return {LabelKind::Simple, n, r, std::move(lambda)}; }
OLabel verma(Nu n, Rank r, P lambda) { return {LabelKind::Verma, n, r, std::move(lambda)}; }

std::vector<mpz_class> masses(const TowerVector& t) {
  std::vector<mpz_class> out;
  for (const auto& [n, v] : t.levels)
    out.push_back(v.mass());
  return out;
}

} // namespace

TEST_CASE("restriction of labels") {
  CHECK(res_label(verma(nu(2), rk(4), P{2, 1})) == verma(nu(2), rk(3), P{2, 1}));
  CHECK(res_label(simple(nu(2), rk(3), P{2, 1})) == std::nullopt);
  CHECK(res_label(simple(gen, rk(5), P{})) == simple(gen, rk(4), P{}));
  CHECK_THROWS_AS(res_label(simple(gen, rk(1), P{})), ConstraintViolation);
  CHECK_THROWS_AS(res_label(simple(gen, Rank::infinite(), P{})), ConstraintViolation);
}

TEST_CASE("degree filter on restricted vermas") {
  using V = std::vector<ResSummand>;
  CHECK(res_verma_oracle(nu(3), rk(3), P{2}, 5) == V{{P{2}, 0, 3}});
  CHECK(res_verma_oracle(nu(0), rk(4), P{2, 1}, 5) == V{{P{2, 1}, 0, 0}});
  CHECK(res_verma_oracle(nu(2), rk(2), P{}, 3) == V{{P{}, 0, 2}});
  for (long v = 0; v <= 4; ++v)
    for (int n = 2; n <= 5; ++n)
      for (const auto& lambda : partitions_up_to(5, n - 1))
        CHECK(res_verma_oracle(nu(v), rk(n), lambda, 6) == V{{lambda, 0, v}});
  CHECK_THROWS_AS(res_verma_oracle(gen, rk(3), P{}, 2), ConstraintViolation);
}

TEST_CASE("restriction on K") {
  KVector v(LabelKind::Simple, nu(1), rk(3));
  v.add(P{}, 1);
  v.add(P{2, 1}, 1);
  KVector expected(LabelKind::Simple, nu(1), rk(2));
  expected.add(P{}, 1);
  CHECK(res_k(v) == expected);
  CHECK(res_k(KVector(LabelKind::Verma, gen, rk(4))) == KVector(LabelKind::Verma, gen, rk(3)));
  KVector m(LabelKind::Verma, gen, rk(5));
  m.add(P{3, 1}, 2);
  m.add(P{1, 1, 1}, -1);
  KVector m4(LabelKind::Verma, gen, rk(4));
  m4.add(P{3, 1}, 2);
  m4.add(P{1, 1, 1}, -1);
  CHECK(res_k(m) == m4);
}

TEST_CASE("specialization") {
  KVector v(LabelKind::Simple, gen, Rank::infinite());
  v.add(P{2, 1}, 1);
  CHECK(gamma_k(v, rk(2)).empty());
  KVector at4(LabelKind::Simple, gen, rk(4));
  at4.add(P{2, 1}, 1);
  CHECK(gamma_k(v, rk(4)) == at4);
  v.add(P{1}, -3);
  for (int n = 3; n <= 6; ++n)
    CHECK(gamma_k(v, rk(n - 1)) == res_k(gamma_k(v, rk(n))));
}

TEST_CASE("schur-weyl on simples") {
  CHECK(sw_simple(gen, rk(5), P{2, 1}) == simple(gen, rk(5), P{2, 1}));
  CHECK(sw_simple(nu(1), rk(3), P{}) == simple(nu(1), rk(3), P{2}));
  CHECK(sw_simple(nu(1), rk(2), P{2}) == std::nullopt);
}

TEST_CASE("restriction commutes with schur-weyl") {
  CHECK(verify_sw_res_compat(nu(1), 3, 6).pass);
  CHECK(verify_sw_res_compat(gen, 4, 6).pass);
  CHECK(verify_sw_res_compat(nu(0), 2, 6).pass);
  CHECK_THROWS_AS(verify_sw_res_compat(nu(0), 1, 6), ConstraintViolation);
}

TEST_CASE("stabilization") {
  CHECK(verify_stabilization(nu(1), 2, 3, 8).pass);
  const auto low = verify_stabilization(nu(1), 2, 2, 8);
  CHECK_FALSE(low.pass);
  CHECK_FALSE(low.witnesses.empty());
  CHECK(verify_stabilization(gen, 1, 2, 8).pass);
  for (long v = 0; v <= 3; ++v)
    for (int k = 0; k <= 3; ++k)
      CHECK(verify_stabilization(nu(v), k, k + 1, 8).pass);
}

TEST_CASE("towers") {
  const auto a = tower_of_simple(nu(1), P{}, 2, 6);
  CHECK(masses(a) == std::vector<mpz_class>{1, 1, 1, 1, 1});
  CHECK(a.compatible());
  CHECK(a.stabilization_onset() == 2);
  const auto b = tower_of_simple(gen, P{1, 1, 1}, 2, 6);
  CHECK(masses(b) == std::vector<mpz_class>{0, 0, 1, 1, 1});
  CHECK(b.monotone());
  CHECK(b.stabilization_onset() == 4);
  const auto c = tower_of_simple(nu(2), P{1}, 2, 5);
  CHECK(c.levels.rbegin()->second.mass() == 1);
  CHECK(c.compatible());
}

TEST_CASE("classical schur-weyl") {
  const auto rows = classical_sw_decompose(3, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].partition == P{3});
  CHECK(rows[0].symmetric_dim == 1);
  CHECK(rows[0].schur_dim == 4);
  CHECK(rows[1].partition == P{2, 1});
  CHECK(rows[1].symmetric_dim == 2);
  CHECK(rows[1].schur_dim == 2);
  CHECK(rows[2].schur_dim == 0);
  const auto sq = classical_sw_decompose(2, 1);
  CHECK(sq[0].schur_dim == 1);
  CHECK(sq[1].schur_dim == 0);
  for (int N = 1; N <= 6; ++N) {
    const auto one = classical_sw_decompose(1, N);
    REQUIRE(one.size() == 1);
    CHECK(one[0].schur_dim == N);
  }
}

TEST_CASE("graded dimensions of the complex tensor power") {
  CHECK(complex_power_gr_dimension(2, 1).to_string() == "nu");
  CHECK(complex_power_gr_dimension(3, 2).to_string() == "2*nu^2 - 2*nu");
  CHECK(complex_power_gr_dimension(5, 0).to_string() == "1");
  CHECK(complex_power_gr_dimension(3, 2).evaluate(2) == 4);
  CHECK(complex_power_gr_dimension(1, 3).evaluate(7) == 0);
  // Integer valued at integer points even with fractional coefficients.
  const auto p = complex_power_gr_dimension(3, 3);
  for (int v = 0; v <= 10; ++v)
    CHECK(p.evaluate(v).get_den() == 1);
  CHECK(verify_tensor_power_specialization(2, 3).pass);
  CHECK(verify_tensor_power_specialization(3, 2).pass);
  CHECK(verify_tensor_power_specialization(1, 5).pass);
}

TEST_CASE("duality") {
  CHECK(sw_duality_check(gen, rk(4), 5).pass);
  CHECK(sw_duality_check(nu(1), rk(3), 5).pass);
  CHECK(sw_duality_check(nu(2), rk(4), 6).pass);
  // A label involution that disagrees with the O side is detected.
  const auto report = sw_duality_check(gen, rk(4), 3, [](const P& l) { return conjugate(l); });
  CHECK_FALSE(report.pass);
}
