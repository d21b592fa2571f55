#include "wavefront/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wavefront {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("partition parts must be non-negative");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "0") return Partition();

  const char sep = text.find(',') != std::string_view::npos ? ',' : '+';
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int value, int multiplicity) {
  if (value < 1 || multiplicity < 0) {
    throw std::invalid_argument("rectangle needs a positive value");
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(multiplicity), value));
}

std::vector<int> Partition::prefix_sums(std::size_t len) const {
  std::vector<int> out(len, 0);
  int acc = 0;
  for (std::size_t i = 0; i < len; ++i) {
    acc += (*this)[i];
    out[i] = acc;
  }
  return out;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(t));
}

Partition add(const Partition& p, const Partition& q) {
  const std::size_t len = std::max(p.length(), q.length());
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = p[i] + q[i];
  return Partition(std::move(out));
}

Partition union_of(std::span<const Partition> ps) {
  std::vector<int> all;
  for (const auto& p : ps) all.insert(all.end(), p.parts().begin(), p.parts().end());
  return Partition::from_unsorted(std::move(all));
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "less";
    case Dominance::Equal: return "equal";
    case Dominance::Greater: return "greater";
    case Dominance::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

void require_same_size(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("partitions of different sizes: " + p.str() + " vs " + q.str());
  }
}

}  // namespace

Dominance dominance_compare(const Partition& p, const Partition& q) {
  require_same_size(p, q);
  const std::size_t len = std::max(p.length(), q.length());
  const auto ps = p.prefix_sums(len);
  const auto qs = q.prefix_sums(len);
  bool above = false;
  bool below = false;
  for (std::size_t i = 0; i < len; ++i) {
    above |= ps[i] > qs[i];
    below |= ps[i] < qs[i];
  }
  if (above && below) return Dominance::Incomparable;
  if (above) return Dominance::Greater;
  if (below) return Dominance::Less;
  return Dominance::Equal;
}

std::optional<int> not_dominated(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu);
  const std::size_t len = std::max(lambda.length(), mu.length());
  const auto ls = lambda.prefix_sums(len);
  const auto ms = mu.prefix_sums(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (ls[i] > ms[i]) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts are chosen largest-first, each bounded by the previous one.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition top_orbit(std::span<const SpehShape> shapes) {
  if (shapes.empty()) throw std::invalid_argument("top_orbit: empty datum");
  Partition acc;
  for (const auto& s : shapes) {
    if (s.a < 1 || s.b < 1) throw std::invalid_argument("top_orbit: a and b must be positive");
    acc = add(acc, Partition::rectangle(s.a, s.b));
  }
  return acc;
}

}  // namespace wavefront
