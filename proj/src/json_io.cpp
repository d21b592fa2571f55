#include "wavefront/json_io.hpp"

namespace wavefront::json {

json render(const Partition& p) { return p.parts(); }

json render(const GlMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json render(const DiagonalSemisimple& s) {
  json d = json::array();
  for (const auto& x : s.diag()) d.push_back(to_string(x));
  return d;
}

json render(Position p) { return json::array({p.row + 1, p.col + 1}); }

json render(const GradedDecomposition& g) {
  json out = json::array();
  for (const auto& [r, positions] : g.spaces()) {
    json ps = json::array();
    for (auto p : positions) ps.push_back(render(p));
    out.push_back({{"eigenvalue", to_string(r)}, {"positions", ps}});
  }
  return out;
}

json render(const Sl2Triple& t) {
  return {{"v", render(t.v)}, {"s", render(t.s)}, {"u", render(t.u)}, {"relations_hold", t.satisfies_relations()}};
}

json render(const CharacterSupport& c) {
  json marks = json::array();
  for (const auto& m : c.marks) marks.push_back({{"position", render(m.pos)}, {"coefficient", to_string(m.coeff)}});
  return marks;
}

json render_whittaker(const WhittakerPair& pair) {
  const auto radical = omega_radical(pair);
  const auto formula = nsu_formula(pair);
  json us = json::array();
  for (auto p : radical.us_positions) us.push_back(render(p));
  return {
      {"n", pair.dim()},
      {"s", render(pair.s())},
      {"u", render(pair.u())},
      {"grading", render(grade_by(pair.s()))},
      {"u_s", us},
      {"dim_u_s", radical.us_dimension()},
      {"dim_n_su", radical.nsu_dimension()},
      {"radical_matches_formula", same_subspace(radical.nsu, formula.nsu)},
      {"neutral", is_neutral_pair(pair)},
      {"character", render(character_support(pair))},
  };
}

json render(const AssumptionReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"first", x.first + 1},
                 {"second", x.second + 1},
                 {"difference", to_string(x.difference)},
                 {"condition", x.condition}});
  }
  return {{"pass", r.pass}, {"violations", v}};
}

json render(const ColumnArrangement& a) {
  json cols = json::array();
  for (const auto& c : a.columns) {
    json entries = json::array();
    for (const auto& e : c.entries) {
      entries.push_back({{"cusp", e.cusp + 1}, {"base", to_string(e.base)}, {"exponent", to_string(e.exponent)}});
    }
    cols.push_back({{"kind", c.kind == ColumnKind::S ? "s" : "h"},
                    {"index", c.index},
                    {"entries", entries},
                    {"size", c.size}});
  }
  return cols;
}

json render(const GenericityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"column", x.column + 1},
                 {"earlier", x.earlier + 1},
                 {"later", x.later + 1},
                 {"difference", to_string(x.difference)}});
  }
  return {{"pass", r.pass}, {"violations", v}};
}

json render(const PipelineOutcome& o) {
  json out = {{"assumption", render(o.assumption)}};
  if (!o.certificate) {
    out["refused"] = true;
    return out;
  }
  const auto& c = *o.certificate;
  out["refused"] = false;
  out["mu"] = render(c.mu);
  out["mu_text"] = c.mu.str();
  out["mu_transpose"] = render(c.mu_transpose);
  out["columns"] = render(c.columns);
  json vanishing = {{"rule", "some prefix sum of lambda exceeds that of mu"}, {"listed", c.vanishing_listed}};
  json list = json::array();
  for (const auto& p : c.vanishing) list.push_back(p.str());
  vanishing["partitions"] = list;
  out["vanishing"] = vanishing;
  return out;
}

json render(const LeviInductionDescription& d) {
  json slots = json::array();
  for (const auto& s : d.slots) slots.push_back({{"cusp", s.cusp + 1}, {"size", s.size}});
  return {{"blocks", render(d.blocks)}, {"slots", slots}};
}

json render(const WeylReport& r) {
  json out = {{"lambda", r.lambda.str()},
              {"mu", r.mu.str()},
              {"all_pass", r.all_pass},
              {"passing", r.passing},
              {"failing", r.failing}};
  if (r.counterexample) {
    json w = json::array();
    for (int x : *r.counterexample) w.push_back(x + 1);
    out["counterexample"] = w;
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json render(const CaiPair& p) {
  json out = render(p.report);
  out["witness"] = p.witness;
  return out;
}

json render(const FiniteOracleReport& r) {
  return {{"n", r.n},
          {"q", r.q},
          {"lambda", r.lambda.str()},
          {"mu", r.mu.str()},
          {"u_mode", std::string(to_string(r.mode))},
          {"group_order", r.group_order},
          {"expected_group_order", r.expected_group_order},
          {"double_cosets", r.double_cosets()},
          {"coset_sizes", r.coset_sizes},
          {"coset_size_total", r.coset_size_total()},
          {"hom_dim", r.trivial_restrictions},
          {"wall_seconds", r.wall_seconds}};
}

}  // namespace wavefront::json
