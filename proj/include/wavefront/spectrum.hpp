#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavefront/partition.hpp"
#include "wavefront/rational.hpp"

namespace wavefront {

/// One Speh constituent Delta(tau, b) |.|^s, with only Re(s) retained.
/// The cuspidal tau is an opaque label; no two labels are ever assumed distinct.
struct CuspidalDatum {
  int a = 1;
  int b = 1;
  Rational re_s = 0;
  std::string label;
};

/// Ordered list of Speh constituents of an induced representation of GL_n.
class IsobaricDatum {
 public:
  /// Throws std::invalid_argument on an empty list or non-positive a, b.
  explicit IsobaricDatum(std::vector<CuspidalDatum> cusps);

  /// "a:b:s,a:b:s,..." where s is an integer or p/q; ":s" may be omitted.
  /// Labels default to tau1, tau2, ... in input order.
  static IsobaricDatum parse(std::string_view text);

  const std::vector<CuspidalDatum>& cusps() const { return cusps_; }
  std::size_t size() const { return cusps_.size(); }
  const CuspidalDatum& operator[](std::size_t i) const { return cusps_[i]; }
  int n() const;
  std::vector<SpehShape> shapes() const;
  std::string str() const;

 private:
  std::vector<CuspidalDatum> cusps_;
};

Partition top_orbit(const IsobaricDatum& data);

/// The exponent ladder (1-b)/2, (3-b)/2, ..., (b-1)/2.
std::vector<Rational> speh_exponents(int b);

/// (ceil(b/2), floor(b/2)).
std::pair<int, int> ell_k(int b);

struct AssumptionViolation {
  std::size_t first = 0;   ///< 0-based cusp index; the odd-b one for mixed parity
  std::size_t second = 0;
  Rational difference;     ///< re_s[first] - re_s[second]
  int condition = 1;       ///< 1: same parity, 2: odd/even
};

struct AssumptionReport {
  bool pass = true;
  std::vector<AssumptionViolation> violations;
};

/// Same parity, i < j: Re(s_i - s_j) in (-inf,-1] u [0,1) u (1,inf).
/// b_i odd, b_j even (any index order): Re(s_i - s_j) in (-inf,-3/2] u [-1/2,1/2) u (1/2,inf).
AssumptionReport assumption_check(const IsobaricDatum& data);

/// Membership in (-inf,-1] u [0,1) u (1,inf), the pole-free region for an
/// exponent difference of an earlier over a later factor.
bool in_generic_region(const Rational& d);

enum class ColumnKind { S, H };

struct ColumnEntry {
  std::size_t cusp = 0;  ///< 0-based index into the input datum
  bool odd = true;       ///< parity of b for that cusp
  Rational base;         ///< ladder exponent before the twist
  Rational exponent;     ///< base + re_s
};

struct Column {
  ColumnKind kind = ColumnKind::S;
  int index = 1;                     ///< q for s^(q), j for h^(j)
  std::vector<ColumnEntry> entries;  ///< in cusp order
  int size = 0;                      ///< sum of a over the entries
  std::string name() const;          ///< "s1", "h2", ...
};

/// Columns s^(l), ..., s^(1), h^(1), ..., h^(k) for the largest b.
struct ColumnArrangement {
  std::vector<Column> columns;
  const Column* find(ColumnKind kind, int index) const;
  Partition sizes() const;
};

/// Throws std::logic_error if the column sizes fail to reproduce top_orbit.
ColumnArrangement arrange_columns(const IsobaricDatum& data);

struct GenericityViolation {
  std::size_t column = 0;  ///< position in ColumnArrangement::columns
  std::size_t earlier = 0; ///< cusp index of the earlier factor
  std::size_t later = 0;
  Rational difference;     ///< exponent(earlier) - exponent(later)
};

struct GenericityReport {
  bool pass = true;
  std::vector<GenericityViolation> violations;
};

/// Every pair of factors in every column must have its exponent difference in
/// the generic region. Within a column, odd-b factors precede even-b factors
/// and otherwise cusp order is kept.
GenericityReport column_genericity(const ColumnArrangement& arr);

struct TopOrbitCertificate {
  Partition mu;
  Partition mu_transpose;
  ColumnArrangement columns;
  /// Partitions of n on which every coefficient vanishes: those with some
  /// prefix sum exceeding mu's. Filled for n up to vanishing_list_limit.
  std::vector<Partition> vanishing;
  bool vanishing_listed = false;
};

struct PipelineOutcome {
  AssumptionReport assumption;
  std::optional<TopOrbitCertificate> certificate;  ///< empty when refused
};

inline constexpr int vanishing_list_limit = 20;

PipelineOutcome pipeline(const IsobaricDatum& data);

struct DeterminantSlot {
  std::size_t cusp = 0;
  int size = 0;  ///< b of that cusp
};

/// Parabolic P_{mu^t} and the determinant-character slots of its
/// unramified inducing data.
struct LeviInductionDescription {
  Partition blocks;  ///< mu^t
  std::vector<DeterminantSlot> slots;
};

LeviInductionDescription unramified_levi_datum(const IsobaricDatum& data);

}  // namespace wavefront
