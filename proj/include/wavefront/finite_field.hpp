#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace wavefront::ff {

inline constexpr int max_dim = 5;

/// Square matrix over F_q, q prime, n <= max_dim. Row-major.
struct Matrix {
  int n = 0;
  std::array<std::uint8_t, max_dim * max_dim> e{};

  std::uint8_t operator()(int i, int j) const { return e[static_cast<std::size_t>(i * n + j)]; }
  std::uint8_t& operator()(int i, int j) { return e[static_cast<std::size_t>(i * n + j)]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  static Matrix identity(int n);
};

bool is_prime(int q);

/// q^k, or 0 when it overflows 64 bits.
std::uint64_t checked_power(std::uint64_t q, int k);

/// prod_{k<n} (q^n - q^k)
std::uint64_t gl_order(int n, int q);

Matrix multiply(const Matrix& a, const Matrix& b, int q);
int determinant(Matrix m, int q);
/// Requires an invertible matrix.
Matrix inverse(const Matrix& m, int q);

/// Base-q encoding of the entries, row-major, first entry least significant.
std::uint64_t encode(const Matrix& m, int q);
Matrix decode(std::uint64_t code, int n, int q);

/// The full group GL_n(F_q) with a code -> index table.
class GeneralLinearGroup {
 public:
  /// Enumerates the group. `parallel` selects the OpenMP sweep over the
  /// code space; the serial path is the reference.
  GeneralLinearGroup(int n, int q, bool parallel = true);

  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& operator[](std::size_t i) const { return elements_[i]; }
  /// Index of an invertible matrix.
  std::size_t index_of(const Matrix& m) const;

 private:
  int n_;
  int q_;
  std::vector<Matrix> elements_;
  std::vector<std::int32_t> index_;
};

}  // namespace wavefront::ff
