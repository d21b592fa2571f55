#include "wavefront/whittaker.hpp"

#include <stdexcept>

#include "wavefront/linalg.hpp"

namespace wavefront {

namespace {

std::vector<Rational> flatten(const GlMatrix& x) { return {x.entries().begin(), x.entries().end()}; }

linalg::Rows flatten_all(const std::vector<GlMatrix>& xs) {
  linalg::Rows rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.push_back(flatten(x));
  return rows;
}

}  // namespace

WhittakerPair::WhittakerPair(DiagonalSemisimple s, GlMatrix u) : s_(std::move(s)), u_(std::move(u)) {
  if (s_.dim() != u_.dim()) throw std::invalid_argument("Whittaker pair: size mismatch");
  for (int i = 0; i < u_.dim(); ++i) {
    for (int j = 0; j < u_.dim(); ++j) {
      if (sgn(u_(i, j)) != 0 && s_.weight({i, j}) != -2) {
        throw std::invalid_argument("Whittaker pair: u has an entry outside g^s_{-2}");
      }
    }
  }
}

DiagonalSemisimple standard_sn(int n) {
  if (n < 1) throw std::invalid_argument("standard_sn: n must be positive");
  std::vector<Rational> d;
  for (int i = 0; i < n; ++i) d.emplace_back(n - 1 - 2 * i);
  return DiagonalSemisimple(std::move(d));
}

std::optional<GlMatrix> neutral_completion(const WhittakerPair& pair) {
  const int n = pair.dim();
  const auto g2 = grade_by(pair.s()).at(2);
  const GlMatrix s = pair.s().matrix();
  const auto nn = static_cast<std::size_t>(n * n);
  // Unknowns: coefficients of v on g^s_2. Equations: [v, u] = s entrywise.
  linalg::Rows a(nn, std::vector<Rational>(g2.size(), 0));
  for (std::size_t k = 0; k < g2.size(); ++k) {
    const GlMatrix img = bracket(GlMatrix::unit(n, g2[k]), pair.u());
    for (std::size_t r = 0; r < nn; ++r) a[r][k] = img.entries()[r];
  }
  auto x = linalg::solve(a, flatten(s), g2.size());
  if (!x) return std::nullopt;
  GlMatrix v(n);
  for (std::size_t k = 0; k < g2.size(); ++k) v[g2[k]] = (*x)[k];
  return v;
}

std::size_t Subspace::dimension() const { return linalg::rank(flatten_all(basis)); }

bool Subspace::contains(const GlMatrix& x) const {
  return linalg::contains_span(flatten_all(basis), {flatten(x)});
}

Subspace Subspace::coordinate(int n, const std::vector<Position>& positions) {
  Subspace sub{n, {}};
  for (const auto& p : positions) sub.basis.push_back(GlMatrix::unit(n, p));
  return sub;
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.n == b.n && linalg::same_span(flatten_all(a.basis), flatten_all(b.basis));
}

NilradicalData omega_radical(const WhittakerPair& pair) {
  const int n = pair.dim();
  NilradicalData out;
  out.us_positions = grade_by(pair.s()).at_least(1);
  const auto& us = out.us_positions;
  const std::size_t m = us.size();

  linalg::Rows gram(m, std::vector<Rational>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Rational w = pairing(pair.u(), bracket(GlMatrix::unit(n, us[a]), GlMatrix::unit(n, us[b])));
      gram[a][b] = w;
      gram[b][a] = -w;
    }
  }
  out.nsu.n = n;
  for (const auto& v : linalg::nullspace(gram, m)) {
    GlMatrix x(n);
    for (std::size_t k = 0; k < m; ++k) x[us[k]] = v[k];
    out.nsu.basis.push_back(std::move(x));
  }
  return out;
}

NilradicalData nsu_formula(const WhittakerPair& pair) {
  const int n = pair.dim();
  const auto grading = grade_by(pair.s());
  NilradicalData out;
  out.us_positions = grading.at_least(1);
  out.nsu = Subspace::coordinate(n, grading.at_least(2));

  // g^s_1 cap g_u: X supported on g^s_1 with [X, u] = 0.
  const auto g1 = grading.at(1);
  const auto nn = static_cast<std::size_t>(n * n);
  linalg::Rows a(nn, std::vector<Rational>(g1.size(), 0));
  for (std::size_t k = 0; k < g1.size(); ++k) {
    const GlMatrix img = bracket(GlMatrix::unit(n, g1[k]), pair.u());
    for (std::size_t r = 0; r < nn; ++r) a[r][k] = img.entries()[r];
  }
  for (const auto& v : linalg::nullspace(a, g1.size())) {
    GlMatrix x(n);
    for (std::size_t k = 0; k < g1.size(); ++k) x[g1[k]] = v[k];
    out.nsu.basis.push_back(std::move(x));
  }
  return out;
}

Rational CharacterSupport::evaluate(const GlMatrix& x) const {
  Rational total = 0;
  for (const auto& m : marks) total += m.coeff * x[m.pos];
  return total;
}

CharacterSupport character_support(const WhittakerPair& pair) {
  const int n = pair.dim();
  const auto nsu = omega_radical(pair).nsu;
  CharacterSupport ch{n, {}};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& c = pair.u()(j, i);
      if (sgn(c) == 0) continue;
      if (!nsu.contains(GlMatrix::unit(n, {i, j}))) continue;
      ch.marks.push_back({{i, j}, c});
    }
  }
  return ch;
}

SemiWhittakerData semi_whittaker(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("semi_whittaker: empty partition");
  WhittakerPair pair(standard_sn(n), nilpotent_representative(lambda));
  CharacterSupport ch = character_support(pair);
  return {std::move(pair), std::move(ch)};
}

}  // namespace wavefront
