#include "wavefront/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wavefront::linalg {

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const Rows& a) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    mpz_class den = 1;
    for (const auto& x : row) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x.get_num() * (den / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

// In-place reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(Rows& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Rows& a) {
  if (a.empty()) return 0;
  auto m = integer_rows(a);
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        // Bareiss step: the division is exact.
        mpz_class v = m[r][c] * m[i][k] - m[i][c] * m[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][k] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Rows nullspace(const Rows& a, std::size_t cols) {
  Rows m = a;
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  }
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  Rows basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Rows& a, const std::vector<Rational>& b,
                                           std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  Rows m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

bool contains_span(const Rows& a, const Rows& b) {
  Rows joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  return rank(joined) == rank(a);
}

bool same_span(const Rows& a, const Rows& b) {
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  Rows joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  return rank(joined) == ra;
}

}  // namespace wavefront::linalg
