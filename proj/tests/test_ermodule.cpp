#include <doctest.h>

#include "eip/ermodule.hpp"
#include "support/oracles.hpp"

using namespace eip;

namespace {

std::size_t end_dim_formula(int n, int r, int d) {
  std::size_t s = 0;
  for (int k = 0; k <= d - 2; ++k) s += binomial(r + k - 1, k);
  return s + binomial(r + n - d - 1, n - d) * binomial(r + n - 2, n - 1);
}

bool iso(const ErModule& a, const ErModule& b) { return is_isomorphic(a, b).verdict == IsoVerdict::yes; }

}  // namespace

TEST_CASE("forget") {
  PrimeField f(5);
  const auto m = forget(m_module(f, 3, 3, 3, 2));
  CHECK(m.dim() == 9);
  CHECK(validate(m).empty());
  CHECK(loewy_length(m) == 2);
  CHECK(loewy_length(forget(projective(f, 3, 3, 0))) == 3);
  CHECK(forget(simple(f, 2, 3, 0)) == trivial_module(f, 3, 1));
  CHECK_THROWS_AS((void)forget(projective(PrimeField(2), 3, 2, 0)), ParameterError);
  for (const auto& rep : oracle::family_corpus(f)) {
    const auto e = forget(rep);
    CHECK(e.dim() == rep.total_dim());
    CHECK(validate(e).empty());
  }
}

TEST_CASE("validate rejects non-commuting and non-nilpotent operators") {
  PrimeField f(3);
  auto a = Matrix::from_rows(f, {{0, 1}, {0, 0}});
  auto b = Matrix::from_rows(f, {{0, 0}, {1, 0}});
  CHECK_FALSE(validate(ErModule(f, 2, 2, {a, b})).empty());
  CHECK_FALSE(validate(ErModule(f, 1, 1, {Matrix::identity(f, 1)})).empty());
  CHECK(validate(ErModule(f, 2, 2, {a, a})).empty());
  CHECK_THROWS_AS(ErModule(f, 2, 2, {a}), DimensionError);
}

TEST_CASE("Jordan types") {
  PrimeField f(5);
  const ProjPoint a(f, {1, 2, 3});
  const auto x = forget(x_module(f, 2, 3, a, 0, 1));
  for (const auto& b : projective_points(f, 3))
    CHECK(jordan_type(x, b).to_string() == (b == a ? "3[1]" : "[2]+[1]"));
  CHECK(jordan_type(trivial_module(f, 3, 0), a).to_string() == "0");
  CHECK(JordanType::from_counts({3, 0, 0}).counts == std::vector<std::size_t>{3});
  CHECK(JordanType::from_counts({3, 3}).to_string() == "3[2]+3[1]");
  CHECK(JordanType::from_counts({1, 2, 0, 1}).total_dim() == 1 + 4 + 4);

  for (int r = 2; r <= 3; ++r)
    for (int n = 2; n <= 4; ++n)
      for (int d = 2; d <= n; ++d) {
        const auto m = forget(m_module(f, n, r, n, d));
        const auto want = jt_formula(n, d, r);
        CHECK(want.total_dim() == m.dim());
        for (const auto& b : projective_points(f, r)) CHECK(jordan_type(m, b) == want);
      }
  CHECK(jt_formula(3, 2, 3).to_string() == "3[2]+3[1]");
  CHECK_THROWS_AS((void)jt_formula(2, 3, 3), ParameterError);
}

TEST_CASE("radical and socle series") {
  PrimeField f(3);
  const auto p = forget(projective(f, 3, 2, 0));
  CHECK(radical(p).cols() == 5);
  CHECK(socle(p).cols() == 3);
  const auto rs = radical_series(p);
  REQUIRE(rs.size() == 4);
  CHECK(rs[1].cols() == 5);
  CHECK(rs[2].cols() == 3);
  CHECK(rs[3].cols() == 0);
  const auto ss = socle_series(p);
  REQUIRE(ss.size() == 4);
  CHECK(ss[0].cols() == 0);
  CHECK(ss[1].cols() == 3);
  CHECK(ss.back().cols() == 6);
  // The socle of the group algebra is one-dimensional.
  CHECK(socle(group_algebra_radical_power(f, 2, 0)).cols() == 1);
}

TEST_CASE("radical powers of the group algebra") {
  PrimeField f3(3), f5(5);
  CHECK(group_algebra_radical_power(f3, 2, 0).dim() == 9);
  CHECK(group_algebra_radical_power(f3, 2, 3).dim() == 3);
  CHECK(group_algebra_radical_power(f3, 3, 5).dim() == 4);
  CHECK(group_algebra_radical_power(f3, 3, 7).dim() == 0);
  CHECK(loewy_length(group_algebra_radical_power(f5, 2, 0)) == 9);
  CHECK(validate(group_algebra_radical_power(f5, 3, 4)).empty());
  CHECK_THROWS_AS((void)group_algebra_radical_power(f3, 2, 6), ParameterError);
  for (int r = 2; r <= 3; ++r)
    for (int d = 2; d <= 4; ++d) {
      const auto w = forget(w_module(f5, d, r, d, d));
      const auto rad = group_algebra_radical_power(f5, r, r * 4 + 1 - d);
      CHECK(w.dim() == rad.dim());
      CHECK(iso(w, rad));
    }
}

TEST_CASE("isomorphism of kE_r-modules") {
  PrimeField f(5);
  const auto m = forget(m_module(f, 3, 3, 3, 2));
  CHECK(iso(m, dual(forget(w_module(f, 3, 3, 3, 2)))));
  const auto res = is_isomorphic(m, m);
  REQUIRE(res.witness);
  CHECK(is_invertible(*res.witness));
  for (int l = 0; l < 3; ++l) CHECK(*res.witness * m.op(l) == m.op(l) * *res.witness);

  const ProjPoint a(f, {1, 0, 0});
  const auto x = forget(x_module(f, 2, 3, a, 0, 1));
  CHECK(is_isomorphic(trivial_module(f, 3, 3), x).verdict == IsoVerdict::no);
  CHECK(is_isomorphic(x, forget(x_module(f, 2, 3, ProjPoint(f, {0, 1, 0}), 0, 1))).verdict == IsoVerdict::no);
  CHECK(iso(x, twist(forget(x_module(f, 2, 3, ProjPoint(f, {0, 1, 0}), 0, 1)),
                     Matrix::from_rows(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}))));
  CHECK(is_isomorphic(m, trivial_module(f, 3, 9)).verdict == IsoVerdict::no);
  CHECK(is_isomorphic(x, forget(x_module(f, 2, 3, a, 0, 1))).verdict == IsoVerdict::yes);
}

TEST_CASE("twists") {
  PrimeField f(5);
  std::mt19937_64 rng(3);
  const auto m = forget(m_module(f, 3, 3, 3, 2));
  const auto x = forget(x_module(f, 3, 3, ProjPoint(f, {1, 1, 0}), 0, 1));
  for (int t = 0; t < 5; ++t) {
    const Matrix g = oracle::random_invertible(f, 3, rng);
    const auto h = *inverse(g);
    for (const auto* base : {&m, &x}) {
      const auto tw = twist(*base, g);
      CHECK(validate(tw).empty());
      CHECK(twist(tw, h) == *base);
      for (const auto& b : projective_points(f, 3)) CHECK(jordan_type(tw, b) == jordan_type(*base, transform(h, b)));
    }
  }
  CHECK(twist(m, Matrix::identity(f, 3)) == m);
  CHECK_THROWS_AS((void)twist(m, Matrix(f, 3, 3)), ParameterError);
  CHECK_THROWS_AS((void)twist(m, Matrix::identity(f, 2)), DimensionError);
}

TEST_CASE("module homs") {
  PrimeField f(3);
  CHECK(module_hom_space(trivial_module(f, 2, 2), trivial_module(f, 2, 3)).size() == 6);
  const auto a = group_algebra_radical_power(f, 2, 0);
  CHECK(module_hom_space(a, a).size() == 9);
  const auto p = forget(projective(f, 2, 2, 0));
  for (const auto& phi : module_hom_space(p, a))
    for (int l = 0; l < 2; ++l) CHECK(phi * p.op(l) == a.op(l) * phi);
  CHECK_THROWS_AS((void)module_hom_space(trivial_module(f, 2, 1), trivial_module(f, 3, 1)), ConfigError);
}

TEST_CASE("endomorphism rings") {
  PrimeField f(5);
  const auto e2 = end_algebra(forget(m_module(f, 3, 2, 3, 2)));
  CHECK(e2.dim() == 7);
  CHECK(e2.commutative);
  CHECK(e2.local);
  CHECK(e2.regime == LocalityRegime::exhaustive);
  const auto e3 = end_algebra(forget(m_module(f, 3, 3, 3, 2)));
  CHECK(e3.dim() == 19);
  CHECK(e3.commutative);
  CHECK(e3.local);
  CHECK(e3.regime == LocalityRegime::frobenius);

  const auto split = end_algebra(direct_sum(forget(projective(f, 2, 3, 0)), trivial_module(f, 3, 1)));
  CHECK_FALSE(split.local);
}

TEST_CASE("endomorphism dimension of truncated polynomial quotients") {
  PrimeField f(5);
  for (int r = 2; r <= 3; ++r)
    for (int n = 2; n <= 4; ++n)
      for (int d = 2; d <= n; ++d) {
        CAPTURE(r);
        CAPTURE(n);
        CAPTURE(d);
        const auto m = forget(m_module(f, n, r, n, d));
        CHECK(module_hom_space(m, m).size() == end_dim_formula(n, r, d));
      }
}

TEST_CASE("indecomposability") {
  PrimeField f(5);
  const auto s = trivial_module(f, 3, 2);
  const auto res = is_indecomposable(s);
  CHECK(res.verdict == IndecVerdict::decomposable);
  REQUIRE(res.projectors.size() == 2);
  const auto& e1 = res.projectors[0];
  const auto& e2 = res.projectors[1];
  CHECK(e1 * e1 == e1);
  CHECK(e2 * e2 == e2);
  CHECK(e1 + e2 == Matrix::identity(f, 2));
  CHECK((e1 * e2).is_zero());

  const auto d = direct_sum(forget(x_module(f, 2, 3, ProjPoint(f, {1, 0, 0}), 0, 1)), trivial_module(f, 3, 1));
  const auto rd = is_indecomposable(d);
  REQUIRE(rd.verdict == IndecVerdict::decomposable);
  for (const auto& e : rd.projectors) {
    CHECK(e * e == e);
    for (int l = 0; l < 3; ++l) CHECK(e * d.op(l) == d.op(l) * e);
  }
  CHECK(is_indecomposable(trivial_module(f, 3, 1)).verdict == IndecVerdict::yes);
  CHECK(is_indecomposable(forget(m_module(f, 3, 3, 3, 2))).verdict == IndecVerdict::yes);
  CHECK(is_indecomposable(forget(projective(f, 3, 3, 0))).verdict == IndecVerdict::yes);
  CHECK_THROWS_AS((void)is_indecomposable(trivial_module(f, 3, 0)), ParameterError);

  const auto graded = is_indecomposable(direct_sum(simple(f, 2, 3, 0), simple(f, 2, 3, 1)));
  CHECK(graded.verdict == IndecVerdict::decomposable);
  CHECK(is_indecomposable(x_module(f, 2, 3, ProjPoint(f, {1, 2, 3}), 0, 1)).verdict == IndecVerdict::yes);
}
