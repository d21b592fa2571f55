#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wavefront/gl_matrix.hpp"
#include "wavefront/partition.hpp"

namespace wavefront {

/// A Whittaker pair (s, u): u lies in the (-2)-eigenspace of ad(s).
class WhittakerPair {
 public:
  /// Throws std::invalid_argument if sizes differ or u has an entry outside g^s_{-2}.
  WhittakerPair(DiagonalSemisimple s, GlMatrix u);

  const DiagonalSemisimple& s() const { return s_; }
  const GlMatrix& u() const { return u_; }
  int dim() const { return s_.dim(); }

 private:
  DiagonalSemisimple s_;
  GlMatrix u_;
};

/// diag(n-1, n-3, ..., 1-n). This is twice the half-integral grading element;
/// the doubling is what puts every u_lambda in g^{s_n}_{-2}.
DiagonalSemisimple standard_sn(int n);

/// Some v in g^s_2 with [v, u] = s, if one exists.
std::optional<GlMatrix> neutral_completion(const WhittakerPair& pair);

/// (s, u) is neutral when s completes u to an sl2-triple.
inline bool is_neutral_pair(const WhittakerPair& pair) { return neutral_completion(pair).has_value(); }

/// Subspace of gl_n with an explicit (not necessarily reduced) spanning set.
struct Subspace {
  int n = 0;
  std::vector<GlMatrix> basis;

  std::size_t dimension() const;
  bool contains(const GlMatrix& x) const;
  static Subspace coordinate(int n, const std::vector<Position>& positions);
  friend bool same_subspace(const Subspace& a, const Subspace& b);
};

/// u_s = g^s_{>=1} together with the radical n_{s,u} of omega_u on it.
struct NilradicalData {
  std::vector<Position> us_positions;
  Subspace nsu;

  std::size_t us_dimension() const { return us_positions.size(); }
  std::size_t nsu_dimension() const { return nsu.dimension(); }
};

/// n_{s,u} as the radical of omega_u(X, Y) = <u, [X, Y]> on u_s, computed as
/// the kernel of the Gram matrix on the coordinate basis of u_s.
NilradicalData omega_radical(const WhittakerPair& pair);

/// n_{s,u} as g^s_{>=2} + (g^s_1 cap centralizer of u).
NilradicalData nsu_formula(const WhittakerPair& pair);

struct CharacterMark {
  Position pos;
  Rational coeff;
};

/// The character psi_u on N_{s,u}, recorded by its support: X maps to
/// sum of coeff * X[pos] over the marks, which is <u, X> on n_{s,u}.
struct CharacterSupport {
  int n = 0;
  std::vector<CharacterMark> marks;

  Rational evaluate(const GlMatrix& x) const;
  bool trivial() const { return marks.empty(); }
};

CharacterSupport character_support(const WhittakerPair& pair);

struct SemiWhittakerData {
  WhittakerPair pair;
  CharacterSupport character;
};

/// (s_n, u_lambda) and its character: the full upper unitriangular group with
/// a character that is nontrivial exactly on within-block simple roots.
SemiWhittakerData semi_whittaker(const Partition& lambda);

}  // namespace wavefront
