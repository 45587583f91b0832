#include <doctest.h>

#include "eip/ermodule.hpp"
#include "support/oracles.hpp"

using namespace eip;

namespace {

using Dims = std::vector<std::size_t>;

bool graded_iso(const BeilinsonRep& a, const BeilinsonRep& b) {
  return is_isomorphic(a, b).verdict == IsoVerdict::yes;
}

}  // namespace

TEST_CASE("monomial counts match direct enumeration") {
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 5; ++k) {
      CHECK(monomial_count(r, k) == oracle::count_monomials(r, k));
      CHECK(monomials(r, k).size() == oracle::count_monomials(r, k));
    }
  CHECK(monomials(3, 2).front() == std::vector<int>{2, 0, 0});
  CHECK(monomials(3, 2).back() == std::vector<int>{0, 0, 2});
}

TEST_CASE("projective points") {
  PrimeField f(5);
  const auto pts = projective_points(f, 3);
  CHECK(pts.size() == 31);
  CHECK(pts.front() == ProjPoint(f, {0, 0, 1}));
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(ProjPoint(f, {0, 2, 4}) == ProjPoint(f, {0, 1, 2}));
  CHECK(ProjPoint(f, {3, 1, 0}).to_string() == "(1,2,0)");
  CHECK_THROWS_AS(ProjPoint(f, {0, 0, 0}), ParameterError);
  CHECK(projective_points(PrimeField(7), 4).size() == 400);
}

TEST_CASE("validate") {
  PrimeField f(5);
  std::mt19937_64 rng(1);
  // n = 2 has no relations.
  auto m = BeilinsonRep(f, 2, 3, {2, 2},
                        {{oracle::random_matrix(f, 2, 2, rng), oracle::random_matrix(f, 2, 2, rng),
                          oracle::random_matrix(f, 2, 2, rng)}});
  CHECK(validate(m).empty());
  CHECK(validate(projective(f, 3, 3, 0)).empty());

  // maps[1][0] maps[0][1] != maps[1][1] maps[0][0] on k -> k -> k.
  auto one = Matrix::from_rows(f, {{1}});
  auto zero = Matrix(f, 1, 1);
  BeilinsonRep bad(f, 3, 3, {1, 1, 1}, {{one, one, zero}, {zero, one, zero}});
  auto v = validate(bad);
  REQUIRE(v.size() >= 1);
  CHECK(v.front() == Violation{0, 0, 1});
  CHECK_THROWS_AS(require_valid(bad), ParameterError);
}

TEST_CASE("projective, injective and simple modules") {
  PrimeField f(5);
  CHECK(projective(f, 3, 3, 0).dims() == Dims{1, 3, 6});
  for (int n = 2; n <= 4; ++n) {
    Dims top(static_cast<std::size_t>(n), 0);
    top.back() = 1;
    CHECK(projective(f, n, 3, n - 1).dims() == top);
    CHECK(projective(f, n, 3, n - 1) == simple(f, n, 3, n - 1));
  }
  CHECK(injective(f, 2, 3, 1).dims() == Dims{3, 1});
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < n; ++i) {
      const auto p = projective(f, n, 2, i);
      for (int v = i; v < n; ++v)
        CHECK(p.dim(v) == oracle::count_monomials(2, v - i));
      CHECK(validate(p).empty());
      CHECK(validate(injective(f, n, 2, i)).empty());
    }
  CHECK_THROWS_AS((void)projective(f, 3, 3, 3), ParameterError);
  CHECK_THROWS_AS((void)simple(f, 3, 3, -1), ParameterError);
}

TEST_CASE("M- and W-modules") {
  PrimeField f(5);
  CHECK(m_module(f, 3, 3, 3, 2).dims() == Dims{0, 3, 6});
  CHECK(m_module(f, 2, 3, 3, 2).dims() == Dims{3, 6});
  CHECK(m_module(f, 2, 3, 4, 2).total_dim() == oracle::count_monomials(3, 2) + oracle::count_monomials(3, 3));
  CHECK(m_module(f, 2, 3, 4, 2).total_dim() == 16);
  CHECK(w_module(f, 2, 3, 3, 2).dims() == Dims{6, 3});
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= n; ++d) {
      const auto m = m_module(f, n, 3, d, d);
      CHECK(graded_iso(m, projective(f, n, 3, n - d)));
      CHECK(graded_iso(w_module(f, n, 3, d, d), injective(f, n, 3, d - 1)));
      CHECK(dualize(w_module(f, n, 3, d + 1, d)) == m_module(f, n, 3, d + 1, d));
      CHECK(validate(m_module(f, n, 3, d + 1, d)).empty());
    }
  auto message = [&](auto&& fn) {
    try {
      fn();
    } catch (const ParameterError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message([&] { (void)m_module(f, 3, 3, 3, 1); }).find("d >= 2") != std::string::npos);
  CHECK(message([&] { (void)m_module(f, 3, 3, 4, 4); }).find("d <= n") != std::string::npos);
  CHECK(message([&] { (void)m_module(f, 6, 3, 6, 2); }).find("n <= p") != std::string::npos);
  CHECK(message([&] { (void)m_module(f, 3, 3, 2, 3); }).find("d <= m") != std::string::npos);
}

TEST_CASE("dualize") {
  PrimeField f(5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto m = oracle::random_valid_rep(f, 3, 3, {2, 2, 3}, rng);
    CHECK(dualize(dualize(m)) == m);
    CHECK(validate(dualize(m)).empty());
  }
  for (int n = 2; n <= 4; ++n) CHECK(dualize(simple(f, n, 3, 0)) == simple(f, n, 3, n - 1));
  const auto x = x_module(f, 2, 3, ProjPoint(f, {1, 0, 0}), 0, 1);
  CHECK(dualize(x).dims() == Dims{2, 1});
}

TEST_CASE("X-modules") {
  PrimeField f(5);
  for (const auto& a : projective_points(f, 3)) {
    CHECK(x_module(f, 2, 3, a, 0, 1).dims() == Dims{1, 2});
    CHECK(x_module(f, 3, 3, a, 0, 1).dims() == Dims{1, 2, 3});
  }
  const ProjPoint a(f, {1, 2, 3});
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 1; j <= n - 1 - i; ++j) {
        const auto x = x_module(f, n, 3, a, i, j);
        CHECK(validate(x).empty());
        CHECK(is_standardly_graded(x));
        std::vector<int> want;
        for (int v = i; v < n; ++v) want.push_back(v);
        CHECK(support(x) == want);
        for (int v = i; v < n; ++v) {
          const std::size_t sub = v - i - j >= 0 ? oracle::count_monomials(3, v - i - j) : 0;
          CHECK(x.dim(v) == oracle::count_monomials(3, v - i) - sub);
        }
      }
  CHECK_THROWS_AS((void)x_module(f, 3, 3, a, 2, 1), ParameterError);
  CHECK_THROWS_AS((void)x_module(f, 3, 3, a, 0, 3), ParameterError);
}

TEST_CASE("gradings") {
  PrimeField f(5);
  for (int i = 0; i < 3; ++i) CHECK(is_standardly_graded(projective(f, 3, 3, i)));
  CHECK_FALSE(is_standardly_graded(direct_sum(simple(f, 2, 3, 0), simple(f, 2, 3, 1))));
  for (const auto& m : oracle::family_corpus(f))
    CHECK(is_standardly_graded(m) == is_costandardly_graded(dualize(m)));
}

TEST_CASE("alpha operator") {
  PrimeField f(5);
  const ProjPoint e1(f, {1, 0, 0});
  auto steps = alpha_operator(projective(f, 2, 3, 0), e1);
  REQUIRE(steps.size() == 1);
  CHECK(rank(steps[0]) == 1);
  for (const auto& a : projective_points(f, 3)) {
    CHECK(alpha_operator(x_module(f, 2, 3, a, 0, 1), a)[0].is_zero());
    const auto p = projective(f, 4, 3, 0);
    std::size_t prev = p.total_dim();
    for (int j = 1; j <= 3; ++j) {
      const auto rk = alpha_power_rank(p, a, j);
      CHECK(rk <= prev);
      prev = rk;
    }
  }
}

TEST_CASE("Ext^1 from the presentation identity is non-negative") {
  PrimeField f(5);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    auto m = oracle::random_valid_rep(f, 3, 3, {1 + t % 2, 2, 2}, rng);
    for (const auto& a : projective_points(f, 3)) {
      auto steps = alpha_operator(m, a);
      for (int i = 0; i < 2; ++i) {
        const std::size_t hom = hom_dim(x_module(f, 3, 3, a, i, 1), m);
        const auto ext = static_cast<long>(hom) + static_cast<long>(m.dim(i + 1)) - static_cast<long>(m.dim(i));
        CHECK(ext >= 0);
        CHECK((ext == 0) == (rank(steps[static_cast<std::size_t>(i)]) == m.dim(i + 1)));
      }
    }
  }
}

TEST_CASE("hom spaces") {
  PrimeField f(5);
  CHECK(hom_dim(m_module(f, 2, 3, 3, 2), m_module(f, 2, 3, 3, 2)) == 1);
  CHECK(hom_dim(m_module(f, 3, 3, 3, 2), m_module(f, 3, 3, 3, 2)) == 1);
  CHECK(hom_dim(simple(f, 3, 3, 0), simple(f, 3, 3, 2)) == 0);
  CHECK(hom_dim(projective(f, 2, 3, 0), projective(f, 2, 3, 0)) == 1);
  // Hom(P(i), M) = M_i.
  const auto w = w_module(f, 3, 3, 3, 2);
  for (int i = 0; i < 3; ++i) CHECK(hom_dim(projective(f, 3, 3, i), w) == w.dim(i));

  std::mt19937_64 rng(12);
  for (int t = 0; t < 15; ++t) {
    auto x = oracle::random_valid_rep(f, 3, 2, {1, 2, 2}, rng);
    auto y = oracle::random_valid_rep(f, 3, 2, {1 + t % 2, 2, 1}, rng);
    CHECK(hom_dim(x, y) == hom_dim(dualize(y), dualize(x)));
    for (const auto& phi : hom_space(x, y)) CHECK(is_morphism(x, y, phi));
  }
  CHECK_THROWS_AS((void)hom_space(projective(f, 2, 3, 0), projective(f, 3, 3, 0)), ConfigError);
}

TEST_CASE("images, kernels and quotients") {
  PrimeField f(5);
  std::mt19937_64 rng(21);
  const auto p = projective(f, 3, 3, 0);
  const auto w = w_module(f, 3, 3, 3, 2);
  const auto basis = hom_space(p, w);
  REQUIRE(!basis.empty());
  for (int t = 0; t < 10; ++t) {
    Vector c;
    for (std::size_t k = 0; k < basis.size(); ++k) c.push_back(static_cast<Scalar>(rng() % 5));
    const Morphism phi = combine(basis, c);
    const auto im = image(w, phi);
    const auto ker = subrepresentation(p, kernel_subspaces(phi));
    CHECK(validate(im).empty());
    CHECK(im.total_dim() + ker.total_dim() == p.total_dim());
    const auto q = quotient(p, kernel_subspaces(phi));
    CHECK(graded_iso(q, im));
  }
}

TEST_CASE("direct sums") {
  PrimeField f(5);
  const auto s = direct_sum(projective(f, 2, 3, 0), injective(f, 2, 3, 0));
  CHECK(s.dims() == Dims{2, 3});
  CHECK(validate(s).empty());
  CHECK(hom_dim(s, s) == hom_dim(projective(f, 2, 3, 0), s) + hom_dim(injective(f, 2, 3, 0), s));
}
