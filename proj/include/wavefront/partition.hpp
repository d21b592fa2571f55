#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavefront {

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0. Indexing past the last
/// part yields 0, which is how prefix comparisons of unequal lengths are
/// zero-padded.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts into weakly decreasing order and drops zero parts.
  /// Negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "3+3+2" (canonical) or "3,3,2". The single token "0" or an empty
  /// string gives the empty partition.
  static Partition parse(std::string_view text);

  /// [value^multiplicity]
  static Partition rectangle(int value, int multiplicity);

  const std::vector<int>& parts() const& { return parts_; }
  std::vector<int> parts() && { return std::move(parts_); }
  int size() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Zero-padded access, 0-based.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Prefix sums p_1, p_1+p_2, ... padded with zeros up to `len` entries.
  std::vector<int> prefix_sums(std::size_t len) const;

  /// Canonical form "3+3+2"; the empty partition renders as "0".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Partition transpose(const Partition& p);

/// Componentwise sum after zero-padding the shorter partition.
Partition add(const Partition& p, const Partition& q);

/// Multiset union of parts.
Partition union_of(std::span<const Partition> ps);

enum class Dominance { Less, Equal, Greater, Incomparable };

std::string_view to_string(Dominance d);

/// Dominance order. Throws std::invalid_argument if the sizes differ.
Dominance dominance_compare(const Partition& p, const Partition& q);

/// Least 1-based index i with p_1+...+p_i > q_1+...+q_i, if any.
/// This holds exactly when `lambda` is bigger than or not related to `mu`.
/// Throws std::invalid_argument if the sizes differ.
std::optional<int> not_dominated(const Partition& lambda, const Partition& mu);

/// All partitions of n in reverse lexicographic order, [n] first.
std::vector<Partition> partitions_of(int n);

}  // namespace wavefront

namespace wavefront {

/// Shape of one Speh block: cuspidal rank `a`, Speh length `b`.
struct SpehShape {
  int a = 1;
  int b = 1;
};

/// Top orbit [a_1^{b_1}] + ... + [a_r^{b_r}].
/// Throws std::invalid_argument on an empty list or a non-positive a or b.
Partition top_orbit(std::span<const SpehShape> shapes);

}  // namespace wavefront
