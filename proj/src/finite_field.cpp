#include "wavefront/finite_field.hpp"

#include <stdexcept>

namespace wavefront::ff {

Matrix Matrix::identity(int n) {
  Matrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(r, q, &r)) return 0;
  }
  return r;
}

std::uint64_t gl_order(int n, int q) {
  const std::uint64_t qn = checked_power(static_cast<std::uint64_t>(q), n);
  if (qn == 0) return 0;
  std::uint64_t order = 1;
  std::uint64_t qk = 1;
  for (int k = 0; k < n; ++k) {
    if (__builtin_mul_overflow(order, qn - qk, &order)) return 0;
    qk *= static_cast<std::uint64_t>(q);
  }
  return order;
}

Matrix multiply(const Matrix& a, const Matrix& b, int q) {
  Matrix c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      int s = 0;
      for (int k = 0; k < a.n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = static_cast<std::uint8_t>(s % q);
    }
  }
  return c;
}

namespace {

int inv_mod(int x, int q) {
  // q is prime and small: Fermat via repeated multiplication.
  int r = 1;
  for (int e = q - 2; e > 0; --e) r = r * x % q;
  return r;
}

}  // namespace

int determinant(Matrix m, int q) {
  const int n = m.n;
  int det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = (q - det) % q;
    }
    det = det * m(c, c) % q;
    const int inv = inv_mod(m(c, c), q);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const int f = m(r, c) * inv % q;
      for (int k = c; k < n; ++k) m(r, k) = static_cast<std::uint8_t>(((m(r, k) - f * m(c, k)) % q + q) % q);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m, int q) {
  const int n = m.n;
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::invalid_argument("ff::inverse: singular matrix");
    for (int k = 0; k < n; ++k) {
      std::swap(a(p, k), a(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    const int s = inv_mod(a(c, c), q);
    for (int k = 0; k < n; ++k) {
      a(c, k) = static_cast<std::uint8_t>(a(c, k) * s % q);
      inv(c, k) = static_cast<std::uint8_t>(inv(c, k) * s % q);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const int f = a(r, c);
      for (int k = 0; k < n; ++k) {
        a(r, k) = static_cast<std::uint8_t>(((a(r, k) - f * a(c, k)) % q + q) % q);
        inv(r, k) = static_cast<std::uint8_t>(((inv(r, k) - f * inv(c, k)) % q + q) % q);
      }
    }
  }
  return inv;
}

std::uint64_t encode(const Matrix& m, int q) {
  std::uint64_t code = 0;
  for (int k = m.n * m.n - 1; k >= 0; --k) code = code * static_cast<std::uint64_t>(q) + m.e[static_cast<std::size_t>(k)];
  return code;
}

Matrix decode(std::uint64_t code, int n, int q) {
  Matrix m;
  m.n = n;
  for (int k = 0; k < n * n; ++k) {
    m.e[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return m;
}

namespace {

constexpr std::uint64_t max_code_space = std::uint64_t{1} << 26;

}  // namespace

GeneralLinearGroup::GeneralLinearGroup(int n, int q, bool parallel) : n_(n), q_(q) {
  if (n < 1 || n > max_dim) throw std::out_of_range("GL_n(F_q): n must be in 1.." + std::to_string(max_dim));
  if (!is_prime(q) || q > 251) throw std::invalid_argument("GL_n(F_q): q must be a prime below 256");
  const std::uint64_t space = checked_power(static_cast<std::uint64_t>(q), n * n);
  if (space == 0 || space > max_code_space) throw std::out_of_range("GL_n(F_q): matrix space too large to enumerate");

  std::vector<std::uint8_t> invertible(space, 0);
  const auto total = static_cast<std::int64_t>(space);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < total; ++c) {
      invertible[static_cast<std::size_t>(c)] = determinant(decode(static_cast<std::uint64_t>(c), n, q), q) != 0;
    }
  } else {
    for (std::int64_t c = 0; c < total; ++c) {
      invertible[static_cast<std::size_t>(c)] = determinant(decode(static_cast<std::uint64_t>(c), n, q), q) != 0;
    }
  }

  index_.assign(space, -1);
  for (std::uint64_t c = 0; c < space; ++c) {
    if (!invertible[c]) continue;
    index_[c] = static_cast<std::int32_t>(elements_.size());
    elements_.push_back(decode(c, n, q));
  }
}

std::size_t GeneralLinearGroup::index_of(const Matrix& m) const {
  const std::int32_t i = index_[encode(m, q_)];
  if (i < 0) throw std::invalid_argument("GL_n(F_q): matrix is singular");
  return static_cast<std::size_t>(i);
}

}  // namespace wavefront::ff
