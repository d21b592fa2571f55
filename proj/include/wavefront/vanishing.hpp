#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wavefront/partition.hpp"

namespace wavefront {

/// Consecutive-interval block layout of 0..n-1 by the parts of a partition.
struct BlockMap {
  int n = 0;
  std::vector<int> block;  ///< block index of each position

  static BlockMap of(const Partition& p);
  /// Positions j such that j and j+1 share a block.
  std::vector<int> adjacent_pairs() const;
};

struct EnumerationLimits {
  int max_n = 8;                       ///< permutation sweeps; WAVEFRONT_MAX_N overrides
  std::uint64_t max_group_order = 25000;
  int jobs = 0;                        ///< OpenMP threads; 0 keeps the runtime default
};

/// Defaults with WAVEFRONT_MAX_N applied when set.
EnumerationLimits default_limits();

/// Verdict for one permutation w (0-based, w[j] is the image of j): true when
/// some within-block adjacent pair (j, j+1) of lambda satisfies
/// block(w[j]) <= block(w[j+1]) in the mu^t layout, i.e. the conjugated simple
/// root subgroup lands in the parabolic.
bool weyl_passes(const BlockMap& lambda_blocks, const BlockMap& parabolic_blocks, std::span<const int> w);

struct WeylReport {
  Partition lambda;
  Partition mu;
  bool all_pass = true;
  std::optional<std::vector<int>> counterexample;  ///< lexicographically least failing w
  std::uint64_t passing = 0;
  std::uint64_t failing = 0;
};

/// Checks all n! permutations. Throws std::out_of_range when n exceeds
/// limits.max_n and std::invalid_argument on a size mismatch.
WeylReport weyl_check(const Partition& lambda, const Partition& mu, const EnumerationLimits& limits = default_limits());
/// Single-threaded reference for weyl_check.
WeylReport weyl_check_serial(const Partition& lambda, const Partition& mu, const EnumerationLimits& limits = default_limits());

struct CaiPair {
  Partition lambda;
  Partition mu;
  int witness = 0;  ///< least i with a larger prefix sum for lambda
  WeylReport report;
};

struct CaiSweepSummary {
  int n = 0;
  std::size_t partitions = 0;
  std::size_t qualifying_pairs = 0;
  std::vector<CaiPair> pairs;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// Every ordered (lambda, mu) with not_dominated(lambda, mu) must pass weyl_check.
CaiSweepSummary cai_sweep(int n, const EnumerationLimits& limits = default_limits());

enum class UnipotentMode {
  Full,    ///< full upper unitriangular group
  Graded,  ///< g_{>=2} plus the simple roots commuting with u_lambda
};

std::string_view to_string(UnipotentMode m);
UnipotentMode parse_unipotent_mode(std::string_view s);

struct FiniteOracleReport {
  int n = 0;
  int q = 0;
  Partition lambda;
  Partition mu;
  UnipotentMode mode = UnipotentMode::Full;
  std::uint64_t group_order = 0;
  std::uint64_t expected_group_order = 0;  ///< prod (q^n - q^k)
  std::vector<std::uint64_t> coset_sizes;  ///< in order of least member
  std::size_t double_cosets() const { return coset_sizes.size(); }
  std::uint64_t coset_size_total() const;
  /// Cosets on which the character restricts trivially; the Hom dimension for
  /// the trivial inducing character.
  std::size_t trivial_restrictions = 0;
  double wall_seconds = 0;
};

struct FiniteOracleOptions {
  UnipotentMode mode = UnipotentMode::Full;
  EnumerationLimits limits = default_limits();
  bool parallel = true;
};

/// Double-coset Hom-dimension oracle over F_q for P_{mu^t} \ GL_n / U with the
/// character of u_lambda. Throws std::out_of_range when |GL_n(F_q)| exceeds
/// the bound and std::invalid_argument when q is not prime.
FiniteOracleReport finite_oracle(int n, int q, const Partition& lambda, const Partition& mu,
                                 const FiniteOracleOptions& opts = {});

struct FiniteSweepSummary {
  int n = 0;
  int q = 0;
  std::vector<FiniteOracleReport> qualifying;  ///< not_dominated pairs; must all be 0
  std::vector<FiniteOracleReport> dominated;   ///< informational
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

FiniteSweepSummary finite_vanishing_sweep(int n, int q, const FiniteOracleOptions& opts = {});

}  // namespace wavefront
