#include "wavefront/gl_matrix.hpp"

#include <stdexcept>

#include "wavefront/linalg.hpp"

namespace wavefront {

namespace {

void require_same_dim(const GlMatrix& x, const GlMatrix& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("gl_n size mismatch: " + std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
  }
}

using Vec = std::vector<Rational>;

Vec mat_vec(const GlMatrix& m, const Vec& x) {
  const int n = m.dim();
  Vec y(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sgn(m(i, j)) != 0) y[static_cast<std::size_t>(i)] += m(i, j) * x[static_cast<std::size_t>(j)];
    }
  }
  return y;
}

linalg::Rows as_rows(const GlMatrix& m) {
  linalg::Rows rows(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return rows;
}

}  // namespace

GlMatrix::GlMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {
  if (n < 0) throw std::invalid_argument("negative matrix size");
}

GlMatrix GlMatrix::identity(int n) {
  GlMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GlMatrix GlMatrix::unit(int n, Position p, const Rational& c) {
  GlMatrix m(n);
  m[p] = c;
  return m;
}

GlMatrix GlMatrix::diagonal(std::span<const Rational> d) {
  GlMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

GlMatrix& GlMatrix::operator+=(const GlMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

GlMatrix& GlMatrix::operator-=(const GlMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

GlMatrix& GlMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

GlMatrix operator*(const GlMatrix& a, const GlMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  GlMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

Rational GlMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool GlMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool GlMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && sgn((*this)(i, j)) != 0) return false;
    }
  }
  return true;
}

bool GlMatrix::is_nilpotent() const { return power(n_).is_zero(); }

GlMatrix GlMatrix::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  GlMatrix result = identity(n_);
  GlMatrix base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::size_t GlMatrix::rank() const { return linalg::rank(as_rows(*this)); }

GlMatrix inverse(const GlMatrix& m) {
  const int n = m.dim();
  linalg::Rows aug(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  GlMatrix inv(n);
  for (int c = 0; c < n; ++c) {
    std::vector<Rational> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(c)] = 1;
    auto x = linalg::solve(aug, e, static_cast<std::size_t>(n));
    if (!x) throw std::invalid_argument("inverse: singular matrix");
    for (int r = 0; r < n; ++r) inv(r, c) = (*x)[static_cast<std::size_t>(r)];
  }
  if (!(m * inv == GlMatrix::identity(n))) throw std::invalid_argument("inverse: singular matrix");
  return inv;
}

GlMatrix bracket(const GlMatrix& x, const GlMatrix& y) {
  require_same_dim(x, y);
  return x * y - y * x;
}

Rational pairing(const GlMatrix& x, const GlMatrix& y) {
  require_same_dim(x, y);
  const int n = x.dim();
  Rational t = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) t += x(i, k) * y(k, i);
  }
  return t;
}

Rational killing_form(const GlMatrix& x, const GlMatrix& y) {
  const Rational two_n = 2 * x.dim();
  return two_n * pairing(x, y) - 2 * x.trace() * y.trace();
}

GlMatrix nilpotent_representative(const Partition& lambda) {
  GlMatrix u(lambda.size());
  int offset = 0;
  for (int part : lambda.parts()) {
    for (int j = 0; j + 1 < part; ++j) u(offset + j + 1, offset + j) = 1;
    offset += part;
  }
  return u;
}

Partition orbit_partition(const GlMatrix& u) {
  const int n = u.dim();
  if (!u.is_nilpotent()) throw std::domain_error("orbit_partition: matrix is not nilpotent");
  // ranks[k] = rank(u^k); #parts >= k is ranks[k-1] - ranks[k].
  std::vector<int> ranks{n};
  GlMatrix pw = GlMatrix::identity(n);
  while (ranks.back() > 0) {
    pw = pw * u;
    ranks.push_back(static_cast<int>(pw.rank()));
  }
  std::vector<int> columns;
  for (std::size_t k = 1; k < ranks.size(); ++k) columns.push_back(ranks[k - 1] - ranks[k]);
  return transpose(Partition(std::move(columns)));
}

GradedDecomposition::GradedDecomposition(const DiagonalSemisimple& s) : n_(s.dim()) {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) spaces_[s.weight({i, j})].push_back({i, j});
  }
}

std::vector<Position> GradedDecomposition::at(const Rational& r) const {
  auto it = spaces_.find(r);
  return it == spaces_.end() ? std::vector<Position>{} : it->second;
}

std::vector<Position> GradedDecomposition::at_least(const Rational& r) const {
  std::vector<Position> out;
  for (auto it = spaces_.lower_bound(r); it != spaces_.end(); ++it) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<GlMatrix> centralizer_basis(const GlMatrix& u) {
  const int n = u.dim();
  const auto nn = static_cast<std::size_t>(n * n);
  // Column k of ad(u) is [E_k, u], flattened.
  linalg::Rows ad(nn, std::vector<Rational>(nn, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const GlMatrix img = bracket(GlMatrix::unit(n, {i, j}), u);
      const auto col = static_cast<std::size_t>(i * n + j);
      for (std::size_t r = 0; r < nn; ++r) ad[r][col] = img.entries()[r];
    }
  }
  std::vector<GlMatrix> basis;
  for (const auto& v : linalg::nullspace(ad, nn)) {
    GlMatrix x(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) x(i, j) = v[static_cast<std::size_t>(i * n + j)];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool Sl2Triple::satisfies_relations() const {
  return bracket(s, v) == 2 * v && bracket(s, u) == Rational(-2) * u && bracket(v, u) == s;
}

namespace {

linalg::Rows kernel_of_power(const GlMatrix& u, int k) {
  return linalg::nullspace(as_rows(u.power(k)), static_cast<std::size_t>(u.dim()));
}

Sl2Triple standard_triple(const Partition& lambda) {
  const int n = lambda.size();
  Sl2Triple t{GlMatrix(n), GlMatrix(n), nilpotent_representative(lambda)};
  int offset = 0;
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) t.s(offset + j, offset + j) = p - 1 - 2 * j;
    for (int j = 1; j < p; ++j) t.v(offset + j - 1, offset + j) = j * (p - j);
    offset += p;
  }
  return t;
}

}  // namespace

GlMatrix jordan_basis(const GlMatrix& u) {
  const int n = u.dim();
  if (!u.is_nilpotent()) throw std::domain_error("jordan_basis: matrix is not nilpotent");

  int index = 0;
  while (!u.power(index).is_zero()) ++index;

  struct Chain {
    Vec top;
    int length;
  };
  std::vector<Chain> chains;
  // Images at the current level of chains started higher up.
  linalg::Rows carried;
  for (int level = index; level >= 1; --level) {
    linalg::Rows span = kernel_of_power(u, level - 1);
    span.insert(span.end(), carried.begin(), carried.end());
    std::size_t span_rank = linalg::rank(span);
    linalg::Rows fresh;
    for (auto& y : kernel_of_power(u, level)) {
      span.push_back(y);
      const std::size_t r = linalg::rank(span);
      if (r > span_rank) {
        span_rank = r;
        fresh.push_back(y);
        chains.push_back({y, level});
      } else {
        span.pop_back();
      }
    }
    carried.insert(carried.end(), fresh.begin(), fresh.end());
    for (auto& c : carried) c = mat_vec(u, c);
  }

  GlMatrix p(n);
  int col = 0;
  for (const auto& c : chains) {
    Vec x = c.top;
    for (int j = 0; j < c.length; ++j, ++col) {
      for (int r = 0; r < n; ++r) p(r, col) = x[static_cast<std::size_t>(r)];
      x = mat_vec(u, x);
    }
  }
  return p;
}

Sl2Triple jacobson_morozov(const GlMatrix& u) {
  const Partition type = orbit_partition(u);
  if (u == nilpotent_representative(type)) return standard_triple(type);
  const GlMatrix p = jordan_basis(u);
  const GlMatrix pinv = inverse(p);
  const Sl2Triple std_triple = standard_triple(type);
  return {p * std_triple.v * pinv, p * std_triple.s * pinv, u};
}

}  // namespace wavefront
