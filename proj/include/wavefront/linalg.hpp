#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wavefront/rational.hpp"

namespace wavefront::linalg {

/// Dense row-major rational matrix as a list of rows. All rows share a length.
using Rows = std::vector<std::vector<Rational>>;

/// Rank by fraction-free (Bareiss) elimination. Each row is scaled to an
/// integer row first, so every intermediate value is an exact integer.
std::size_t rank(const Rows& a);

/// Basis of {x in Q^cols : a x = 0}, one basis vector per returned row.
/// The basis is the standard one read off the reduced row echelon form:
/// each vector has a 1 in one free coordinate and 0 in the others.
Rows nullspace(const Rows& a, std::size_t cols);

/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Rows& a, const std::vector<Rational>& b,
                                           std::size_t cols);

/// True when the two row sets span the same subspace.
bool same_span(const Rows& a, const Rows& b);

/// True when span(a) contains span(b).
bool contains_span(const Rows& a, const Rows& b);

}  // namespace wavefront::linalg
