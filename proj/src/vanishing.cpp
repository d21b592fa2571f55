#include "wavefront/vanishing.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wavefront/finite_field.hpp"

namespace wavefront {

BlockMap BlockMap::of(const Partition& p) {
  BlockMap m{p.size(), {}};
  int b = 0;
  for (int part : p.parts()) {
    for (int k = 0; k < part; ++k) m.block.push_back(b);
    ++b;
  }
  return m;
}

std::vector<int> BlockMap::adjacent_pairs() const {
  std::vector<int> out;
  for (int j = 0; j + 1 < n; ++j) {
    if (block[static_cast<std::size_t>(j)] == block[static_cast<std::size_t>(j + 1)]) out.push_back(j);
  }
  return out;
}

EnumerationLimits default_limits() {
  EnumerationLimits lim;
  if (const char* env = std::getenv("WAVEFRONT_MAX_N")) {
    try {
      lim.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("WAVEFRONT_MAX_N is not an integer: ") + env);
    }
  }
  return lim;
}

bool weyl_passes(const BlockMap& lambda_blocks, const BlockMap& parabolic_blocks, std::span<const int> w) {
  const auto& pb = parabolic_blocks.block;
  for (int j = 0; j + 1 < lambda_blocks.n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (lambda_blocks.block[uj] != lambda_blocks.block[uj + 1]) continue;
    if (pb[static_cast<std::size_t>(w[uj])] <= pb[static_cast<std::size_t>(w[uj + 1])]) return true;
  }
  return false;
}

namespace {

void check_weyl_args(const Partition& lambda, const Partition& mu, const EnumerationLimits& limits) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("weyl_check: partitions of different sizes");
  if (lambda.size() > limits.max_n) {
    throw std::out_of_range("weyl_check: n = " + std::to_string(lambda.size()) + " exceeds bound " +
                            std::to_string(limits.max_n));
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Permutation of 0..n-1 with the given lexicographic rank.
std::vector<int> unrank(std::uint64_t rank, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> w;
  for (int k = n; k >= 1; --k) {
    const std::uint64_t f = factorial(k - 1);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return w;
}

struct WeylTally {
  std::uint64_t passing = 0;
  std::uint64_t failing = 0;
  std::uint64_t first_fail = UINT64_MAX;
};

WeylTally tally_range(const BlockMap& lb, const BlockMap& pb, int n, std::uint64_t begin, std::uint64_t end) {
  WeylTally t;
  std::vector<int> w = unrank(begin, n);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (weyl_passes(lb, pb, w)) {
      ++t.passing;
    } else {
      ++t.failing;
      t.first_fail = std::min(t.first_fail, r);
    }
    std::next_permutation(w.begin(), w.end());
  }
  return t;
}

WeylReport finish(const Partition& lambda, const Partition& mu, const WeylTally& t, int n) {
  WeylReport rep{lambda, mu, t.failing == 0, std::nullopt, t.passing, t.failing};
  if (t.failing > 0) rep.counterexample = unrank(t.first_fail, n);
  return rep;
}

}  // namespace

WeylReport weyl_check_serial(const Partition& lambda, const Partition& mu, const EnumerationLimits& limits) {
  check_weyl_args(lambda, mu, limits);
  const int n = lambda.size();
  const auto lb = BlockMap::of(lambda);
  const auto pb = BlockMap::of(transpose(mu));
  return finish(lambda, mu, tally_range(lb, pb, n, 0, factorial(n)), n);
}

WeylReport weyl_check(const Partition& lambda, const Partition& mu, const EnumerationLimits& limits) {
  check_weyl_args(lambda, mu, limits);
  const int n = lambda.size();
  const auto lb = BlockMap::of(lambda);
  const auto pb = BlockMap::of(transpose(mu));
  const std::uint64_t total = factorial(n);
  const std::uint64_t chunk = 720;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);

  std::uint64_t passing = 0;
  std::uint64_t failing = 0;
  std::uint64_t first_fail = UINT64_MAX;
  const int threads = limits.jobs > 0 ? limits.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) reduction(+ : passing, failing) reduction(min : first_fail)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto begin = static_cast<std::uint64_t>(c) * chunk;
    const auto t = tally_range(lb, pb, n, begin, std::min(total, begin + chunk));
    passing += t.passing;
    failing += t.failing;
    first_fail = std::min(first_fail, t.first_fail);
  }
  return finish(lambda, mu, {passing, failing, first_fail}, n);
}

CaiSweepSummary cai_sweep(int n, const EnumerationLimits& limits) {
  if (n < 1) throw std::invalid_argument("cai_sweep: n must be positive");
  if (n > limits.max_n) {
    throw std::out_of_range("cai_sweep: n = " + std::to_string(n) + " exceeds bound " + std::to_string(limits.max_n));
  }
  CaiSweepSummary s;
  s.n = n;
  const auto parts = partitions_of(n);
  s.partitions = parts.size();
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      const auto witness = not_dominated(lambda, mu);
      if (!witness) continue;
      CaiPair pair{lambda, mu, *witness, weyl_check(lambda, mu, limits)};
      if (!pair.report.all_pass) ++s.failures;
      s.pairs.push_back(std::move(pair));
    }
  }
  s.qualifying_pairs = s.pairs.size();
  return s;
}

std::string_view to_string(UnipotentMode m) { return m == UnipotentMode::Full ? "full" : "graded"; }

UnipotentMode parse_unipotent_mode(std::string_view s) {
  if (s == "full") return UnipotentMode::Full;
  if (s == "graded") return UnipotentMode::Graded;
  throw std::invalid_argument("unknown unipotent mode: '" + std::string(s) + "'");
}

std::uint64_t FiniteOracleReport::coset_size_total() const {
  return std::accumulate(coset_sizes.begin(), coset_sizes.end(), std::uint64_t{0});
}

namespace {

using ff::GeneralLinearGroup;
using ff::Matrix;

struct Entry {
  int row;
  int col;
};

// Root positions of the unipotent group U (all i < j for the full group).
std::vector<Entry> unipotent_positions(const Partition& lambda, UnipotentMode mode) {
  const int n = lambda.size();
  const auto lb = BlockMap::of(lambda);
  std::vector<Entry> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (mode == UnipotentMode::Graded && j == i + 1 &&
          lb.block[static_cast<std::size_t>(i)] == lb.block[static_cast<std::size_t>(j)]) {
        continue;  // E_{i,i+1} does not commute with u_lambda
      }
      out.push_back({i, j});
    }
  }
  return out;
}

// Within-block simple roots of lambda that lie in U.
std::vector<Entry> character_positions(const Partition& lambda, const std::vector<Entry>& upos) {
  std::vector<Entry> out;
  for (int j : BlockMap::of(lambda).adjacent_pairs()) {
    for (const auto& e : upos) {
      if (e.row == j && e.col == j + 1) out.push_back(e);
    }
  }
  return out;
}

Matrix elementary(int n, int i, int j, std::uint8_t c) {
  Matrix m = Matrix::identity(n);
  m(i, j) = c;
  return m;
}

int primitive_root(int q) {
  for (int g = 1; g < q; ++g) {
    int x = 1;
    int ord = 0;
    do {
      x = x * g % q;
      ++ord;
    } while (x != 1);
    if (ord == q - 1) return g;
  }
  return 1;
}

std::vector<Matrix> parabolic_generators(const BlockMap& pb, int q) {
  const int n = pb.n;
  std::vector<Matrix> gens;
  if (q > 2) {
    const auto g = static_cast<std::uint8_t>(primitive_root(q));
    for (int i = 0; i < n; ++i) {
      Matrix d = Matrix::identity(n);
      d(i, i) = g;
      gens.push_back(d);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && pb.block[static_cast<std::size_t>(i)] <= pb.block[static_cast<std::size_t>(j)]) {
        gens.push_back(elementary(n, i, j, 1));
      }
    }
  }
  return gens;
}

std::vector<Matrix> unipotent_elements(int n, int q, const std::vector<Entry>& upos) {
  std::vector<Matrix> out;
  const std::uint64_t count = ff::checked_power(static_cast<std::uint64_t>(q), static_cast<int>(upos.size()));
  for (std::uint64_t c = 0; c < count; ++c) {
    Matrix m = Matrix::identity(n);
    std::uint64_t x = c;
    for (const auto& e : upos) {
      m(e.row, e.col) = static_cast<std::uint8_t>(x % static_cast<std::uint64_t>(q));
      x /= static_cast<std::uint64_t>(q);
    }
    out.push_back(m);
  }
  return out;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

struct CosetData {
  std::vector<std::size_t> reps;  // least member of each coset
  std::vector<std::uint64_t> sizes;
};

CosetData double_cosets(const GeneralLinearGroup& g, const BlockMap& pb, const std::vector<Entry>& upos,
                        bool parallel) {
  const int n = g.n();
  const int q = g.q();
  const auto left = parabolic_generators(pb, q);
  std::vector<Matrix> right;
  for (const auto& e : upos) right.push_back(elementary(n, e.row, e.col, 1));

  const std::size_t order = g.order();
  const std::size_t degree = left.size() + right.size();
  std::vector<std::size_t> neighbours(order * degree);
  const auto total = static_cast<std::int64_t>(order);
  auto fill = [&](std::int64_t k) {
    const auto uk = static_cast<std::size_t>(k);
    std::size_t slot = uk * degree;
    for (const auto& p : left) neighbours[slot++] = g.index_of(ff::multiply(p, g[uk], q));
    for (const auto& u : right) neighbours[slot++] = g.index_of(ff::multiply(g[uk], u, q));
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) fill(k);
  } else {
    for (std::int64_t k = 0; k < total; ++k) fill(k);
  }

  std::vector<std::size_t> parent(order);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t d = 0; d < degree; ++d) {
      std::size_t a = find_root(parent, k);
      std::size_t b = find_root(parent, neighbours[k * degree + d]);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      parent[b] = a;  // the root is always the least index in its class
    }
  }

  CosetData out;
  std::vector<std::size_t> slot(order, SIZE_MAX);
  for (std::size_t k = 0; k < order; ++k) {
    const std::size_t r = find_root(parent, k);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.reps.size();
      out.reps.push_back(r);
      out.sizes.push_back(0);
    }
    ++out.sizes[slot[r]];
  }
  return out;
}

bool in_parabolic(const Matrix& m, const BlockMap& pb) {
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (pb.block[static_cast<std::size_t>(i)] > pb.block[static_cast<std::size_t>(j)] && m(i, j) != 0) return false;
    }
  }
  return true;
}

// Does the character vanish on U cap g^{-1} P g?
bool restricts_trivially(const Matrix& g, const BlockMap& pb, const std::vector<Matrix>& unipotent,
                         const std::vector<Entry>& marks, int q) {
  const Matrix ginv = ff::inverse(g, q);
  for (const auto& u : unipotent) {
    int phi = 0;
    for (const auto& e : marks) phi += u(e.row, e.col);
    if (phi % q == 0) continue;
    if (in_parabolic(ff::multiply(ff::multiply(g, u, q), ginv, q), pb)) return false;
  }
  return true;
}

std::size_t count_trivial(const GeneralLinearGroup& g, const CosetData& cosets, const BlockMap& pb,
                          const std::vector<Matrix>& unipotent, const std::vector<Entry>& marks, bool parallel) {
  std::size_t count = 0;
  const auto total = static_cast<std::int64_t>(cosets.reps.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (std::int64_t c = 0; c < total; ++c) {
      count += restricts_trivially(g[cosets.reps[static_cast<std::size_t>(c)]], pb, unipotent, marks, g.q());
    }
  } else {
    for (std::int64_t c = 0; c < total; ++c) {
      count += restricts_trivially(g[cosets.reps[static_cast<std::size_t>(c)]], pb, unipotent, marks, g.q());
    }
  }
  return count;
}

void check_finite_args(int n, int q, const Partition& lambda, const Partition& mu, const EnumerationLimits& limits) {
  if (!ff::is_prime(q)) throw std::invalid_argument("finite_oracle: q = " + std::to_string(q) + " is not prime");
  if (n < 1) throw std::invalid_argument("finite_oracle: n must be positive");
  if (lambda.size() != n || mu.size() != n) {
    throw std::invalid_argument("finite_oracle: partitions must have size n = " + std::to_string(n));
  }
  const std::uint64_t order = ff::gl_order(n, q);
  if (order == 0 || order > limits.max_group_order) {
    throw std::out_of_range("finite_oracle: |GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                            ")| exceeds bound " + std::to_string(limits.max_group_order));
  }
}

FiniteOracleReport run_oracle(const GeneralLinearGroup& g, const Partition& lambda, const Partition& mu,
                              UnipotentMode mode, bool parallel, const CosetData* cached) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.n();
  const int q = g.q();
  const auto pb = BlockMap::of(transpose(mu));
  const auto upos = unipotent_positions(lambda, mode);
  const auto marks = character_positions(lambda, upos);

  CosetData local;
  if (!cached) local = double_cosets(g, pb, upos, parallel);
  const CosetData& cosets = cached ? *cached : local;

  FiniteOracleReport rep;
  rep.n = n;
  rep.q = q;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.mode = mode;
  rep.group_order = g.order();
  rep.expected_group_order = ff::gl_order(n, q);
  rep.coset_sizes = cosets.sizes;
  rep.trivial_restrictions = count_trivial(g, cosets, pb, unipotent_elements(n, q, upos), marks, parallel);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

FiniteOracleReport finite_oracle(int n, int q, const Partition& lambda, const Partition& mu,
                                 const FiniteOracleOptions& opts) {
  check_finite_args(n, q, lambda, mu, opts.limits);
  if (opts.limits.jobs > 0) omp_set_num_threads(opts.limits.jobs);
  const auto start = std::chrono::steady_clock::now();
  const GeneralLinearGroup g(n, q, opts.parallel);
  auto rep = run_oracle(g, lambda, mu, opts.mode, opts.parallel, nullptr);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FiniteSweepSummary finite_vanishing_sweep(int n, int q, const FiniteOracleOptions& opts) {
  const auto parts = partitions_of(n);
  check_finite_args(n, q, parts.front(), parts.front(), opts.limits);
  if (opts.limits.jobs > 0) omp_set_num_threads(opts.limits.jobs);
  const GeneralLinearGroup g(n, q, opts.parallel);

  FiniteSweepSummary s;
  s.n = n;
  s.q = q;
  for (const auto& mu : parts) {
    // With the full unitriangular group the cosets depend on mu alone.
    std::optional<CosetData> shared;
    if (opts.mode == UnipotentMode::Full) {
      shared = double_cosets(g, BlockMap::of(transpose(mu)), unipotent_positions(mu, UnipotentMode::Full), opts.parallel);
    }
    for (const auto& lambda : parts) {
      auto rep = run_oracle(g, lambda, mu, opts.mode, opts.parallel, shared ? &*shared : nullptr);
      if (not_dominated(lambda, mu)) {
        if (rep.trivial_restrictions != 0 || rep.coset_size_total() != rep.expected_group_order) ++s.failures;
        s.qualifying.push_back(std::move(rep));
      } else {
        s.dominated.push_back(std::move(rep));
      }
    }
  }
  return s;
}

}  // namespace wavefront
