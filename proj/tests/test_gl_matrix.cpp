#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wavefront/gl_matrix.hpp"

using namespace wavefront;

namespace {

GlMatrix E(int n, int i, int j) { return GlMatrix::unit(n, {i - 1, j - 1}); }

GlMatrix diag(std::initializer_list<int> d) {
  std::vector<Rational> v;
  for (int x : d) v.emplace_back(x);
  return GlMatrix::diagonal(v);
}

std::vector<Position> pos(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Position> out;
  for (auto [i, j] : xs) out.push_back({i - 1, j - 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> sorted(std::vector<Position> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Standard centralizer dimension of a nilpotent of type lambda: sum of squares
// of the transpose parts.
int centralizer_dim_formula(const Partition& lambda) {
  int d = 0;
  const auto t = testing::transpose_by_count(lambda);
  for (int x : t.parts()) d += x * x;
  return d;
}

}  // namespace

TEST_CASE("bracket examples") {
  const auto x = testing::random_matrix(3);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(diag({1, -1}), E(2, 1, 2)) == 2 * E(2, 1, 2));
  CHECK(bracket(E(2, 1, 2), E(2, 2, 1)) == diag({1, -1}));
  CHECK_THROWS_AS(bracket(GlMatrix(2), GlMatrix(3)), std::invalid_argument);
}

TEST_CASE("bracket is bilinear, antisymmetric, and satisfies Jacobi") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(1, 4);
    const auto x = testing::random_matrix(n);
    const auto y = testing::random_matrix(n);
    const auto z = testing::random_matrix(n);
    const Rational c = testing::random_rational();
    REQUIRE(bracket(x, y) == Rational(-1) * bracket(y, x));
    REQUIRE(bracket(c * x + y, z) == c * bracket(x, z) + bracket(y, z));
    REQUIRE((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("pairing and Killing form") {
  CHECK(pairing(E(2, 2, 1), E(2, 1, 2)) == 1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(killing_form(GlMatrix::identity(n), GlMatrix::identity(n)) == 0);
  }
  CHECK_THROWS_AS(pairing(GlMatrix(2), GlMatrix(3)), std::invalid_argument);
}

TEST_CASE("pairing and Killing form are symmetric and ad-invariant") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(1, 4);
    const auto x = testing::random_matrix(n);
    const auto y = testing::random_matrix(n);
    const auto z = testing::random_matrix(n);
    REQUIRE(pairing(x, y) == pairing(y, x));
    REQUIRE(pairing(bracket(z, x), y) + pairing(x, bracket(z, y)) == 0);
    REQUIRE(killing_form(bracket(z, x), y) + killing_form(x, bracket(z, y)) == 0);
  }
}

TEST_CASE("Killing form is the trace form of ad") {
  // kappa(X, Y) = tr(ad X ad Y), computed entry by entry on the basis E_ij.
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::uniform_int(1, 3);
    const auto x = testing::random_matrix(n);
    const auto y = testing::random_matrix(n);
    Rational tr = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto img = bracket(x, bracket(y, GlMatrix::unit(n, {i, j})));
        tr += img(i, j);
      }
    }
    REQUIRE(killing_form(x, y) == tr);
  }
}

TEST_CASE("nilpotent representative examples") {
  CHECK(nilpotent_representative(Partition::rectangle(1, 4)).is_zero());
  CHECK(nilpotent_representative(Partition({2, 1})) == E(3, 2, 1));
  CHECK(nilpotent_representative(Partition({3})) == E(3, 2, 1) + E(3, 3, 2));
  CHECK(nilpotent_representative(Partition({2, 2})) == E(4, 2, 1) + E(4, 4, 3));
}

TEST_CASE("orbit partition examples and errors") {
  CHECK(orbit_partition(GlMatrix(4)) == Partition::rectangle(1, 4));
  CHECK(orbit_partition(E(3, 2, 1) + E(3, 3, 2)) == Partition({3}));
  CHECK_THROWS_AS(orbit_partition(GlMatrix::identity(2)), std::domain_error);
  CHECK_THROWS_AS(orbit_partition(E(2, 1, 2) + E(2, 2, 1)), std::domain_error);
}

TEST_CASE("orbit_partition inverts nilpotent_representative, n <= 8, and is conjugation invariant") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto u = nilpotent_representative(lambda);
      REQUIRE(u.is_nilpotent());
      REQUIRE(orbit_partition(u) == lambda);
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto p = testing::random_unimodular(n);
      REQUIRE(orbit_partition(p * nilpotent_representative(lambda) * inverse(p)) == lambda);
    }
  }
}

TEST_CASE("pairing is the Killing form over 2n on nilpotent u, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& lambda = parts[static_cast<std::size_t>(trial) % parts.size()];
      const auto u = nilpotent_representative(lambda);
      const auto x = testing::random_matrix(n);
      REQUIRE(pairing(u, x) * (2 * n) == killing_form(u, x));
    }
  }
}

TEST_CASE("grading examples") {
  SUBCASE("s = 0") {
    const auto g = grade_by(DiagonalSemisimple::zero(3));
    CHECK(g.spaces().size() == 1);
    CHECK(g.at(0).size() == 9);
  }
  SUBCASE("s = diag(1, 0, -1)") {
    const auto g = grade_by(DiagonalSemisimple({Rational(1), Rational(0), Rational(-1)}));
    CHECK(sorted(g.at(2)) == pos({{1, 3}}));
    CHECK(sorted(g.at(1)) == pos({{1, 2}, {2, 3}}));
    CHECK(sorted(g.at(0)) == pos({{1, 1}, {2, 2}, {3, 3}}));
    CHECK(sorted(g.at(-1)) == pos({{2, 1}, {3, 2}}));
    CHECK(sorted(g.at(-2)) == pos({{3, 1}}));
    CHECK(sorted(g.at_least(1)) == pos({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(g.at(5).empty());
  }
  SUBCASE("s = diag(1, -1)") {
    const auto g = grade_by(DiagonalSemisimple({Rational(1), Rational(-1)}));
    CHECK(sorted(g.at(2)) == pos({{1, 2}}));
    CHECK(sorted(g.at(-2)) == pos({{2, 1}}));
    CHECK(sorted(g.at(0)) == pos({{1, 1}, {2, 2}}));
  }
  SUBCASE("positions partition gl_n and carry diag[i] - diag[j]") {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = testing::uniform_int(1, 5);
      std::vector<Rational> d;
      for (int i = 0; i < n; ++i) d.push_back(testing::random_rational());
      const DiagonalSemisimple s(d);
      std::size_t total = 0;
      const auto grading = grade_by(s);
      for (const auto& [r, ps] : grading.spaces()) {
        total += ps.size();
        for (auto p : ps) REQUIRE(d[static_cast<std::size_t>(p.row)] - d[static_cast<std::size_t>(p.col)] == r);
      }
      REQUIRE(total == static_cast<std::size_t>(n * n));
    }
  }
}

TEST_CASE("centralizer dimensions") {
  CHECK(centralizer_basis(GlMatrix(3)).size() == 9);
  for (int n = 1; n <= 5; ++n) {
    CHECK(centralizer_basis(nilpotent_representative(Partition({n}))).size() == static_cast<std::size_t>(n));
  }
  CHECK(centralizer_basis(nilpotent_representative(Partition({2, 1}))).size() == 5);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto u = nilpotent_representative(lambda);
      const auto basis = centralizer_basis(u);
      REQUIRE(basis.size() == static_cast<std::size_t>(centralizer_dim_formula(lambda)));
      for (const auto& x : basis) REQUIRE(bracket(x, u).is_zero());
    }
  }
}

TEST_CASE("Jacobson-Morozov examples") {
  SUBCASE("zero") {
    const auto t = jacobson_morozov(GlMatrix(3));
    CHECK(t.v.is_zero());
    CHECK(t.s.is_zero());
    CHECK(t.satisfies_relations());
  }
  SUBCASE("E21 in gl_2") {
    const auto t = jacobson_morozov(E(2, 2, 1));
    CHECK(t.v == E(2, 1, 2));
    CHECK(t.s == diag({1, -1}));
  }
  SUBCASE("regular in gl_3") {
    const auto t = jacobson_morozov(nilpotent_representative(Partition({3})));
    CHECK(t.s == diag({2, 0, -2}));
    CHECK(t.v == 2 * E(3, 1, 2) + 2 * E(3, 2, 3));
    CHECK(t.satisfies_relations());
  }
  CHECK_THROWS_AS(jacobson_morozov(GlMatrix::identity(2)), std::domain_error);
}

TEST_CASE("Jacobson-Morozov on standard representatives, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto t = jacobson_morozov(nilpotent_representative(lambda));
      REQUIRE(t.satisfies_relations());
      REQUIRE(t.s.is_diagonal());
      std::vector<Rational> got;
      for (int i = 0; i < n; ++i) got.push_back(t.s(i, i));
      std::vector<Rational> want;
      for (int p : lambda.parts()) {
        for (int k = p - 1; k >= 1 - p; k -= 2) want.emplace_back(k);
      }
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("Jacobson-Morozov on conjugated nilpotents") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto p = testing::random_unimodular(n);
      const auto u = p * nilpotent_representative(lambda) * inverse(p);
      const auto basis = jordan_basis(u);
      REQUIRE(inverse(basis) * u * basis == nilpotent_representative(lambda));
      const auto t = jacobson_morozov(u);
      REQUIRE(t.u == u);
      REQUIRE(t.satisfies_relations());
    }
  }
}

TEST_CASE("inverse") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::uniform_int(1, 4);
    const auto p = testing::random_unimodular(n);
    REQUIRE(p * inverse(p) == GlMatrix::identity(n));
  }
  CHECK_THROWS_AS(inverse(E(2, 1, 2)), std::invalid_argument);
}
