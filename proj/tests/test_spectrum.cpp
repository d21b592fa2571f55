#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "wavefront/spectrum.hpp"

using namespace wavefront;

namespace {

IsobaricDatum two(int b1, const Rational& s1, int b2, const Rational& s2) {
  return IsobaricDatum({{1, b1, s1, ""}, {1, b2, s2, ""}});
}

Rational R(int p, int q = 1) { return Rational(p, q); }

std::vector<Rational> exponents(const Column& c) {
  std::vector<Rational> out;
  for (const auto& e : c.entries) out.push_back(e.exponent);
  return out;
}

IsobaricDatum random_datum() {
  static const std::vector<Rational> twists{R(0), R(1, 4), R(-1, 4), R(1, 2), R(-1, 2), R(1), R(-1),
                                            R(5, 4), R(-5, 4), R(3, 2), R(-3, 2), R(2)};
  std::vector<CuspidalDatum> cs;
  const int r = testing::uniform_int(1, 4);
  for (int i = 0; i < r; ++i) {
    cs.push_back({testing::uniform_int(1, 3), testing::uniform_int(1, 5),
                  twists[static_cast<std::size_t>(testing::uniform_int(0, static_cast<int>(twists.size()) - 1))], ""});
  }
  return IsobaricDatum(cs);
}

}  // namespace

TEST_CASE("datum parsing") {
  const auto d = IsobaricDatum::parse("1:3:0,2:4:-1/2, 3:5");
  REQUIRE(d.size() == 3);
  CHECK(d[1].a == 2);
  CHECK(d[1].b == 4);
  CHECK(d[1].re_s == R(-1, 2));
  CHECK(d[2].re_s == 0);
  CHECK(d[0].label == "tau1");
  CHECK(d.n() == 1 * 3 + 2 * 4 + 3 * 5);
  CHECK(IsobaricDatum::parse(d.str()).str() == d.str());
  CHECK_THROWS_AS(IsobaricDatum::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(IsobaricDatum::parse("1:0:0"), std::invalid_argument);
  CHECK_THROWS_AS(IsobaricDatum::parse("1:2:x"), std::invalid_argument);
  CHECK_THROWS_AS(IsobaricDatum::parse("12"), std::invalid_argument);
  CHECK_THROWS_AS(IsobaricDatum({}), std::invalid_argument);
}

TEST_CASE("Speh exponent ladder") {
  CHECK(speh_exponents(1) == std::vector<Rational>{0});
  CHECK(speh_exponents(4) == std::vector<Rational>{R(-3, 2), R(-1, 2), R(1, 2), R(3, 2)});
  CHECK(speh_exponents(5) == std::vector<Rational>{R(-2), R(-1), R(0), R(1), R(2)});
  CHECK_THROWS_AS(speh_exponents(0), std::invalid_argument);
}

TEST_CASE("ell and k") {
  CHECK(ell_k(1) == std::pair{1, 0});
  CHECK(ell_k(4) == std::pair{2, 2});
  CHECK(ell_k(5) == std::pair{3, 2});
  for (int b = 1; b <= 20; ++b) CHECK(ell_k(b).first + ell_k(b).second == b);
}

TEST_CASE("assumption probes") {
  CHECK(assumption_check(IsobaricDatum::parse("1:3:0,1:4:0,1:5:0")).pass);
  // same parity
  CHECK_FALSE(assumption_check(two(1, R(0), 3, R(1, 2))).pass);  // difference -1/2
  CHECK_FALSE(assumption_check(two(2, R(1), 2, R(0))).pass);     // difference 1
  CHECK(assumption_check(two(1, R(0), 1, R(0))).pass);
  CHECK(assumption_check(two(2, R(-1), 2, R(0))).pass);          // difference -1
  CHECK(assumption_check(two(1, R(1, 2), 1, R(0))).pass);        // difference 1/2
  CHECK(assumption_check(two(1, R(3, 2), 1, R(0))).pass);        // difference 3/2
  // odd / even, oriented odd minus even
  CHECK_FALSE(assumption_check(two(1, R(1, 2), 2, R(0))).pass);
  CHECK_FALSE(assumption_check(two(2, R(0), 1, R(1, 2))).pass);  // same pair, listed even first
  CHECK(assumption_check(two(1, R(-1, 2), 2, R(0))).pass);
  CHECK(assumption_check(two(1, R(-3, 2), 2, R(0))).pass);
  CHECK_FALSE(assumption_check(two(1, R(-1), 2, R(0))).pass);
  CHECK(assumption_check(two(1, R(3, 4), 2, R(0))).pass);

  const auto rep = assumption_check(two(3, R(0), 5, R(1, 2)));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].first == 0);
  CHECK(rep.violations[0].second == 1);
  CHECK(rep.violations[0].difference == R(-1, 2));
  CHECK(rep.violations[0].condition == 1);
}

TEST_CASE("zero twists always satisfy the assumption") {
  for (const auto& shapes : testing::all_shape_lists(10, 5, 4)) {
    std::vector<CuspidalDatum> cs;
    for (auto s : shapes) cs.push_back({s.a, s.b, 0, ""});
    REQUIRE(assumption_check(IsobaricDatum(cs)).pass);
  }
}

TEST_CASE("columns for the three-block example") {
  const auto arr = arrange_columns(IsobaricDatum::parse("1:3:0,1:4:0,1:5:0"));
  REQUIRE(arr.columns.size() == 5);
  CHECK(arr.columns.front().name() == "s3");
  CHECK(arr.columns.back().name() == "h2");
  CHECK(exponents(*arr.find(ColumnKind::S, 2)) == std::vector<Rational>{R(-1), R(-3, 2), R(-1)});
  CHECK(exponents(*arr.find(ColumnKind::S, 1)) == std::vector<Rational>{R(0), R(-1, 2), R(0)});
  CHECK(exponents(*arr.find(ColumnKind::H, 1)) == std::vector<Rational>{R(1), R(1, 2), R(1)});
  CHECK(exponents(*arr.find(ColumnKind::H, 2)) == std::vector<Rational>{R(3, 2), R(2)});
  CHECK(exponents(*arr.find(ColumnKind::S, 3)) == std::vector<Rational>{R(-2)});
  CHECK(arr.find(ColumnKind::H, 3) == nullptr);
  CHECK(arr.sizes() == Partition({3, 3, 3, 2, 1}));

  // Twists shift every entry of a cusp.
  const auto shifted = arrange_columns(IsobaricDatum::parse("1:3:1/4,1:4:-1,1:5:2"));
  CHECK(exponents(*shifted.find(ColumnKind::S, 1)) == std::vector<Rational>{R(1, 4), R(-3, 2), R(2)});
}

TEST_CASE("degenerate arrangements") {
  const auto single = arrange_columns(IsobaricDatum::parse("3:4:0"));
  CHECK(single.columns.size() == 4);
  for (const auto& c : single.columns) {
    CHECK(c.entries.size() == 1);
    CHECK(c.size == 3);
  }
  CHECK(single.sizes() == Partition::rectangle(3, 4));

  const auto flat = arrange_columns(IsobaricDatum::parse("2:1:0,1:1:1/2,3:1:-1"));
  REQUIRE(flat.columns.size() == 1);
  CHECK(flat.columns[0].name() == "s1");
  CHECK(flat.columns[0].size == 6);
  CHECK(exponents(flat.columns[0]) == std::vector<Rational>{R(0), R(1, 2), R(-1)});
}

TEST_CASE("arrangement invariants, exhaustive n <= 12 with a, b <= 4, r <= 3") {
  std::size_t checked = 0;
  for (const auto& shapes : testing::all_shape_lists(12, 4, 3)) {
    std::vector<CuspidalDatum> cs;
    for (auto s : shapes) cs.push_back({s.a, s.b, 0, ""});
    const IsobaricDatum d(cs);
    const auto arr = arrange_columns(d);
    REQUIRE(arr.sizes() == top_orbit(d));

    std::map<std::size_t, int> appearances;
    int total = 0;
    for (const auto& col : arr.columns) {
      total += col.size;
      std::optional<Rational> odd_base;
      std::optional<Rational> even_base;
      for (const auto& e : col.entries) {
        ++appearances[e.cusp];
        auto& slot = e.odd ? odd_base : even_base;
        if (slot) REQUIRE(*slot == e.base);
        slot = e.base;
        const auto [ell, k] = ell_k(d[e.cusp].b);
        REQUIRE(col.index <= (col.kind == ColumnKind::S ? ell : k));
      }
      if (odd_base && even_base) REQUIRE(*odd_base - *even_base == R(1, 2));
    }
    REQUIRE(total == d.n());
    for (std::size_t i = 0; i < d.size(); ++i) REQUIRE(appearances[i] == d[i].b);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("column genericity") {
  CHECK(column_genericity(arrange_columns(IsobaricDatum::parse("1:3:0,1:4:0,1:5:0"))).pass);

  const auto bad = column_genericity(arrange_columns(two(3, R(0), 5, R(1, 2))));
  CHECK_FALSE(bad.pass);
  // The two cusps share s2, s1, h1: the violation shows up in each.
  CHECK(bad.violations.size() == 3);
  for (const auto& v : bad.violations) CHECK(v.difference == R(-1, 2));
}

TEST_CASE("column genericity is equivalent to the assumption on 500 pseudorandom data") {
  int failing = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto d = random_datum();
    const bool a = assumption_check(d).pass;
    REQUIRE(column_genericity(arrange_columns(d)).pass == a);
    failing += !a;
  }
  CHECK(failing > 50);
  CHECK(failing < 450);
}

TEST_CASE("pipeline") {
  SUBCASE("three-block example") {
    const auto out = pipeline(IsobaricDatum::parse("1:3:0,1:4:0,1:5:0"));
    REQUIRE(out.certificate);
    CHECK(out.certificate->mu == Partition({3, 3, 3, 2, 1}));
    CHECK(out.certificate->mu_transpose == Partition({5, 4, 3}));
    REQUIRE(out.certificate->vanishing_listed);
    for (const auto& lambda : out.certificate->vanishing) CHECK(not_dominated(lambda, out.certificate->mu));
    CHECK(out.certificate->vanishing.size() + 1 < partitions_of(12).size());
  }
  SUBCASE("cuspidal") {
    const auto out = pipeline(IsobaricDatum::parse("5:1:0"));
    REQUIRE(out.certificate);
    CHECK(out.certificate->mu == Partition({5}));
    CHECK(out.certificate->vanishing.empty());
  }
  SUBCASE("Speh") {
    const auto out = pipeline(IsobaricDatum::parse("2:3:0"));
    REQUIRE(out.certificate);
    CHECK(out.certificate->mu == Partition({2, 2, 2}));
  }
  SUBCASE("refusal") {
    const auto out = pipeline(two(1, R(1, 2), 2, R(0)));
    CHECK_FALSE(out.certificate);
    CHECK_FALSE(out.assumption.pass);
  }
}

TEST_CASE("unramified Levi datum") {
  const auto d1 = unramified_levi_datum(IsobaricDatum::parse("1:2:0"));
  CHECK(d1.blocks == Partition({2}));
  REQUIRE(d1.slots.size() == 1);
  CHECK(d1.slots[0].size == 2);

  const auto d2 = unramified_levi_datum(IsobaricDatum::parse("1:1:0,1:1:0"));
  CHECK(d2.blocks == Partition({1, 1}));
  CHECK(d2.slots.size() == 2);

  CHECK(unramified_levi_datum(IsobaricDatum::parse("1:3:0,1:4:0,1:5:0")).blocks == Partition({5, 4, 3}));

  const auto d3 = unramified_levi_datum(IsobaricDatum::parse("2:3:0,1:1:0"));
  CHECK(d3.blocks == Partition({3, 3, 1}));
  CHECK(d3.slots.size() == 3);
}
