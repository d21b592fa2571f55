#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// code path it is used to check.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "wavefront/gl_matrix.hpp"
#include "wavefront/partition.hpp"
#include "wavefront/spectrum.hpp"

namespace testing {

using wavefront::GlMatrix;
using wavefront::Partition;
using wavefront::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedULL);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small rational p/q with |p| <= 6, 1 <= q <= 4.
inline Rational random_rational() {
  Rational r(uniform_int(-6, 6), uniform_int(1, 4));
  r.canonicalize();
  return r;
}

inline GlMatrix random_matrix(int n) {
  GlMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = random_rational();
  }
  return m;
}

/// Product of random integer elementary matrices: invertible, det 1.
inline GlMatrix random_unimodular(int n) {
  GlMatrix p = GlMatrix::identity(n);
  for (int k = 0; k < 3 * n; ++k) {
    const int i = uniform_int(0, n - 1);
    const int j = uniform_int(0, n - 1);
    if (i == j) continue;
    GlMatrix e = GlMatrix::identity(n);
    e(i, j) = uniform_int(-2, 2);
    p = p * e;
  }
  return p;
}

/// Transpose straight from q^t_i = #{j : q_j >= i}.
inline Partition transpose_by_count(const Partition& p) {
  std::vector<int> t;
  for (int i = 1; i <= p.largest(); ++i) {
    int c = 0;
    for (int part : p.parts()) c += part >= i;
    t.push_back(c);
  }
  return Partition(t);
}

/// Dominance as reachability under single-box moves from a higher row to a
/// lower row (the covering moves of the dominance order).
class BoxMoveOrder {
 public:
  explicit BoxMoveOrder(int n) {
    const auto all = wavefront::partitions_of(n);
    for (const auto& p : all) below_[p.parts()] = {};
    for (const auto& p : all) {
      std::set<std::vector<int>> seen;
      std::vector<std::vector<int>> stack{p.parts()};
      while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        for (const auto& nxt : moves(cur)) {
          if (seen.insert(nxt).second) stack.push_back(nxt);
        }
      }
      below_[p.parts()] = std::move(seen);
    }
  }

  /// p strictly dominates q.
  bool strictly_above(const Partition& p, const Partition& q) const {
    return below_.at(p.parts()).count(q.parts()) > 0;
  }

 private:
  static std::vector<std::vector<int>> moves(const std::vector<int>& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> padded = p;
    padded.push_back(0);
    for (std::size_t i = 0; i < padded.size(); ++i) {
      for (std::size_t j = i + 1; j < padded.size(); ++j) {
        auto c = padded;
        --c[i];
        ++c[j];
        if (!std::is_sorted(c.begin(), c.end(), std::greater<>())) continue;
        std::erase(c, 0);
        if (c != p) out.push_back(c);
      }
    }
    return out;
  }

  std::map<std::vector<int>, std::set<std::vector<int>>> below_;
};

/// All multisets of (a, b) shapes with sum a*b <= max_n, a, b <= max_ab,
/// r <= max_r, in nondecreasing (a, b) order.
inline std::vector<std::vector<wavefront::SpehShape>> all_shape_lists(int max_n, int max_ab, int max_r) {
  std::vector<std::vector<wavefront::SpehShape>> out;
  std::vector<wavefront::SpehShape> cur;
  std::vector<std::pair<int, int>> kinds;
  for (int a = 1; a <= max_ab; ++a) {
    for (int b = 1; b <= max_ab; ++b) kinds.emplace_back(a, b);
  }
  auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_r) return;
    for (std::size_t k = from; k < kinds.size(); ++k) {
      const int cost = kinds[k].first * kinds[k].second;
      if (cost > budget) continue;
      cur.push_back({kinds[k].first, kinds[k].second});
      self(self, k, budget - cost);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_n);
  return out;
}

/// Top orbit read off the sorted-b closed form
/// [(a_1+...+a_r)^{b_r} (a_1+...+a_{r-1})^{b_{r-1}-b_r} ... a_1^{b_1-b_2}].
inline Partition top_orbit_closed_form(std::vector<wavefront::SpehShape> shapes) {
  std::stable_sort(shapes.begin(), shapes.end(), [](auto x, auto y) { return x.b > y.b; });
  std::vector<int> parts;
  for (std::size_t r = shapes.size(); r >= 1; --r) {
    int width = 0;
    for (std::size_t i = 0; i < r; ++i) width += shapes[i].a;
    const int next_b = r < shapes.size() ? shapes[r].b : 0;
    const int height = shapes[r - 1].b - next_b;
    for (int k = 0; k < height; ++k) parts.push_back(width);
  }
  return Partition(parts);
}

}  // namespace testing
