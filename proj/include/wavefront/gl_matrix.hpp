#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "wavefront/partition.hpp"
#include "wavefront/rational.hpp"

namespace wavefront {

/// Matrix coordinate, 0-based. Rendered 1-based in every text/JSON output.
struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// An element of gl_n with exact rational entries.
class GlMatrix {
 public:
  GlMatrix() = default;
  explicit GlMatrix(int n);

  static GlMatrix identity(int n);
  /// c * E_{ij}
  static GlMatrix unit(int n, Position p, const Rational& c = 1);
  static GlMatrix diagonal(std::span<const Rational> d);

  int dim() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Rational& operator[](Position p) { return (*this)(p.row, p.col); }
  const Rational& operator[](Position p) const { return (*this)(p.row, p.col); }

  /// Row-major entries.
  std::span<const Rational> entries() const { return a_; }

  GlMatrix& operator+=(const GlMatrix& o);
  GlMatrix& operator-=(const GlMatrix& o);
  GlMatrix& operator*=(const Rational& c);

  friend GlMatrix operator+(GlMatrix a, const GlMatrix& b) { return a += b; }
  friend GlMatrix operator-(GlMatrix a, const GlMatrix& b) { return a -= b; }
  friend GlMatrix operator*(GlMatrix a, const Rational& c) { return a *= c; }
  friend GlMatrix operator*(const Rational& c, GlMatrix a) { return a *= c; }
  friend GlMatrix operator*(const GlMatrix& a, const GlMatrix& b);
  friend bool operator==(const GlMatrix&, const GlMatrix&) = default;

  Rational trace() const;
  bool is_zero() const;
  bool is_diagonal() const;
  bool is_nilpotent() const;
  /// Nonnegative powers only.
  GlMatrix power(int k) const;
  std::size_t rank() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Throws std::invalid_argument when the matrix is singular.
GlMatrix inverse(const GlMatrix& m);

/// Rational semisimple element stored by its diagonal.
class DiagonalSemisimple {
 public:
  DiagonalSemisimple() = default;
  explicit DiagonalSemisimple(std::vector<Rational> diag) : diag_(std::move(diag)) {}
  static DiagonalSemisimple zero(int n) { return DiagonalSemisimple(std::vector<Rational>(static_cast<std::size_t>(n), 0)); }

  int dim() const { return static_cast<int>(diag_.size()); }
  const std::vector<Rational>& diag() const { return diag_; }
  GlMatrix matrix() const { return GlMatrix::diagonal(diag_); }

  /// ad(s)-eigenvalue of E_{ij}: diag[i] - diag[j].
  Rational weight(Position p) const { return diag_[static_cast<std::size_t>(p.row)] - diag_[static_cast<std::size_t>(p.col)]; }

  friend bool operator==(const DiagonalSemisimple&, const DiagonalSemisimple&) = default;

 private:
  std::vector<Rational> diag_;
};

/// XY - YX. Throws std::invalid_argument on a size mismatch.
GlMatrix bracket(const GlMatrix& x, const GlMatrix& y);

/// Trace pairing tr(XY). This is the pairing every character is built from;
/// for trace-zero X it equals killing_form(X, Y) / (2n).
Rational pairing(const GlMatrix& x, const GlMatrix& y);

/// Killing form of gl_n: 2n tr(XY) - 2 tr(X) tr(Y).
Rational killing_form(const GlMatrix& x, const GlMatrix& y);

/// Standard nilpotent of Jordan type lambda: parts occupy consecutive index
/// blocks, and each block carries ones on its subdiagonal.
GlMatrix nilpotent_representative(const Partition& lambda);

/// Jordan type of a nilpotent matrix from its rank sequence.
/// Throws std::domain_error when u is not nilpotent.
Partition orbit_partition(const GlMatrix& u);

/// Eigenspace decomposition of gl_n under ad(s), in coordinates.
class GradedDecomposition {
 public:
  GradedDecomposition() = default;
  explicit GradedDecomposition(const DiagonalSemisimple& s);

  int dim() const { return n_; }
  const std::map<Rational, std::vector<Position>>& spaces() const& { return spaces_; }
  std::map<Rational, std::vector<Position>> spaces() && { return std::move(spaces_); }
  /// g_r; empty when r is not an eigenvalue.
  std::vector<Position> at(const Rational& r) const;
  /// g_{>= r}
  std::vector<Position> at_least(const Rational& r) const;

 private:
  int n_ = 0;
  std::map<Rational, std::vector<Position>> spaces_;
};

inline GradedDecomposition grade_by(const DiagonalSemisimple& s) { return GradedDecomposition(s); }

/// Basis of the centralizer {X : [X, u] = 0}.
std::vector<GlMatrix> centralizer_basis(const GlMatrix& u);

/// (v, s, u) with [s,v] = 2v, [s,u] = -2u, [v,u] = s.
struct Sl2Triple {
  GlMatrix v;
  GlMatrix s;
  GlMatrix u;

  bool satisfies_relations() const;
};

/// Change of basis P whose columns are Jordan chains x, ux, u^2x, ... ordered
/// by decreasing chain length, so that P^{-1} u P = nilpotent_representative.
/// Throws std::domain_error when u is not nilpotent.
GlMatrix jordan_basis(const GlMatrix& u);

/// Completes a nilpotent u to an sl2-triple. For a standard representative the
/// neutral element is diagonal with p-1, p-3, ..., 1-p on a block of size p;
/// other nilpotents are handled by conjugating through jordan_basis.
Sl2Triple jacobson_morozov(const GlMatrix& u);

}  // namespace wavefront
