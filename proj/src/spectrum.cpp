#include "wavefront/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace wavefront {

IsobaricDatum::IsobaricDatum(std::vector<CuspidalDatum> cusps) : cusps_(std::move(cusps)) {
  if (cusps_.empty()) throw std::invalid_argument("isobaric datum: empty");
  for (std::size_t i = 0; i < cusps_.size(); ++i) {
    if (cusps_[i].a < 1 || cusps_[i].b < 1) {
      throw std::invalid_argument("isobaric datum: a and b must be positive");
    }
    if (cusps_[i].label.empty()) cusps_[i].label = "tau" + std::to_string(i + 1);
  }
}

namespace {

int parse_positive(std::string_view tok, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 1) {
    throw std::invalid_argument("malformed datum: '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

IsobaricDatum IsobaricDatum::parse(std::string_view text) {
  std::vector<CuspidalDatum> cusps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(pos, end - pos));
    const auto c1 = item.find(':');
    if (c1 == std::string_view::npos) throw std::invalid_argument("malformed datum: '" + std::string(item) + "'");
    const auto c2 = item.find(':', c1 + 1);
    CuspidalDatum d;
    d.a = parse_positive(item.substr(0, c1), item);
    d.b = parse_positive(item.substr(c1 + 1, c2 == std::string_view::npos ? std::string_view::npos : c2 - c1 - 1), item);
    if (c2 != std::string_view::npos) d.re_s = parse_rational(item.substr(c2 + 1));
    cusps.push_back(std::move(d));
    pos = end + 1;
  }
  return IsobaricDatum(std::move(cusps));
}

int IsobaricDatum::n() const {
  int n = 0;
  for (const auto& c : cusps_) n += c.a * c.b;
  return n;
}

std::vector<SpehShape> IsobaricDatum::shapes() const {
  std::vector<SpehShape> out;
  for (const auto& c : cusps_) out.push_back({c.a, c.b});
  return out;
}

std::string IsobaricDatum::str() const {
  std::string s;
  for (std::size_t i = 0; i < cusps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(cusps_[i].a) + ':' + std::to_string(cusps_[i].b) + ':' + to_string(cusps_[i].re_s);
  }
  return s;
}

Partition top_orbit(const IsobaricDatum& data) {
  const auto shapes = data.shapes();
  return top_orbit(std::span<const SpehShape>(shapes));
}

std::vector<Rational> speh_exponents(int b) {
  if (b < 1) throw std::invalid_argument("speh_exponents: b must be positive");
  std::vector<Rational> out;
  for (int k = 0; k < b; ++k) out.emplace_back(1 - b + 2 * k, 2);
  for (auto& x : out) x.canonicalize();
  return out;
}

std::pair<int, int> ell_k(int b) {
  if (b < 1) throw std::invalid_argument("ell_k: b must be positive");
  return {(b + 1) / 2, b / 2};
}

bool in_generic_region(const Rational& d) { return d <= -1 || (d >= 0 && d < 1) || d > 1; }

namespace {

// Odd/even region: (-inf,-3/2] u [-1/2,1/2) u (1/2,inf).
bool in_mixed_region(const Rational& d) {
  const Rational half(1, 2);
  return d <= Rational(-3, 2) || (d >= -half && d < half) || d > half;
}

bool is_odd(int b) { return b % 2 != 0; }

}  // namespace

AssumptionReport assumption_check(const IsobaricDatum& data) {
  AssumptionReport rep;
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (i == j) continue;
      const bool oi = is_odd(data[i].b);
      const bool oj = is_odd(data[j].b);
      const Rational d = data[i].re_s - data[j].re_s;
      if (oi == oj) {
        if (i < j && !in_generic_region(d)) rep.violations.push_back({i, j, d, 1});
      } else if (oi) {
        if (!in_mixed_region(d)) rep.violations.push_back({i, j, d, 2});
      }
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

std::string Column::name() const { return (kind == ColumnKind::S ? "s" : "h") + std::to_string(index); }

const Column* ColumnArrangement::find(ColumnKind kind, int index) const {
  for (const auto& c : columns) {
    if (c.kind == kind && c.index == index) return &c;
  }
  return nullptr;
}

Partition ColumnArrangement::sizes() const {
  std::vector<int> s;
  for (const auto& c : columns) s.push_back(c.size);
  return Partition::from_unsorted(std::move(s));
}

namespace {

// Ladder exponent of cusp with Speh length b in a given column, if present.
std::optional<Rational> column_base(int b, ColumnKind kind, int index) {
  const auto [ell, k] = ell_k(b);
  const Rational half(1, 2);
  if (kind == ColumnKind::S) {
    if (index > ell) return std::nullopt;
    return is_odd(b) ? Rational(1 - index) : Rational(half - index);
  }
  if (index > k) return std::nullopt;
  return is_odd(b) ? Rational(index) : Rational(index - half);
}

}  // namespace

ColumnArrangement arrange_columns(const IsobaricDatum& data) {
  // Stable sort by b, descending; only the largest b shapes the column set.
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return data[x].b > data[y].b; });
  const auto [ell, k] = ell_k(data[order.front()].b);

  ColumnArrangement arr;
  auto fill = [&](ColumnKind kind, int index) {
    Column col{kind, index, {}, 0};
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto base = column_base(data[i].b, kind, index);
      if (!base) continue;
      col.entries.push_back({i, is_odd(data[i].b), *base, *base + data[i].re_s});
      col.size += data[i].a;
    }
    arr.columns.push_back(std::move(col));
  };
  for (int q = ell; q >= 1; --q) fill(ColumnKind::S, q);
  for (int j = 1; j <= k; ++j) fill(ColumnKind::H, j);

  if (arr.sizes() != top_orbit(data)) {
    throw std::logic_error("arrange_columns: column sizes " + arr.sizes().str() + " differ from top orbit");
  }
  return arr;
}

GenericityReport column_genericity(const ColumnArrangement& arr) {
  GenericityReport rep;
  for (std::size_t c = 0; c < arr.columns.size(); ++c) {
    std::vector<const ColumnEntry*> seq;
    for (const auto& e : arr.columns[c].entries) {
      if (e.odd) seq.push_back(&e);
    }
    for (const auto& e : arr.columns[c].entries) {
      if (!e.odd) seq.push_back(&e);
    }
    for (std::size_t x = 0; x < seq.size(); ++x) {
      for (std::size_t y = x + 1; y < seq.size(); ++y) {
        const Rational d = seq[x]->exponent - seq[y]->exponent;
        if (!in_generic_region(d)) rep.violations.push_back({c, seq[x]->cusp, seq[y]->cusp, d});
      }
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

PipelineOutcome pipeline(const IsobaricDatum& data) {
  PipelineOutcome out;
  out.assumption = assumption_check(data);
  if (!out.assumption.pass) return out;

  TopOrbitCertificate cert;
  cert.mu = top_orbit(data);
  cert.mu_transpose = transpose(cert.mu);
  cert.columns = arrange_columns(data);
  if (data.n() <= vanishing_list_limit) {
    cert.vanishing_listed = true;
    for (auto& lambda : partitions_of(data.n())) {
      if (not_dominated(lambda, cert.mu)) cert.vanishing.push_back(std::move(lambda));
    }
  }
  out.certificate = std::move(cert);
  return out;
}

LeviInductionDescription unramified_levi_datum(const IsobaricDatum& data) {
  LeviInductionDescription d;
  d.blocks = transpose(top_orbit(data));
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (int k = 0; k < data[i].a; ++k) d.slots.push_back({i, data[i].b});
  }
  return d;
}

}  // namespace wavefront
