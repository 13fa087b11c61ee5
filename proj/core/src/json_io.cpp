#include "fdimlab/json_io.hpp"

namespace fdimlab {

ordered_json to_json(const PdResult& p) {
  ordered_json j;
  switch (p.kind) {
    case PdResult::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = p.value;
      break;
    case PdResult::Kind::InfiniteCertified:
      j["kind"] = "infinite";
      j["repeat"] = {p.rep_i, p.rep_j};
      break;
    default:
      j["kind"] = "unknown";
      j["cap"] = p.cap;
  }
  return j;
}

ordered_json to_json(const FindimEstimate& e) {
  ordered_json j;
  j["value"] = e.value;
  j["exact"] = e.exact;
  j["exhaustive"] = e.exhaustive;
  j["dim_cap"] = e.dim_cap;
  j["field"] = e.field.name();
  j["witness"] = e.witness;
  j["witness_pd"] = to_json(e.witness_pd);
  j["candidates"] = e.candidates;
  j["finite"] = e.finite_count;
  j["infinite"] = e.infinite_count;
  j["unknown"] = e.unknown_count;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

ordered_json to_json(const BoundReport& r) {
  ordered_json j;
  j["statement"] = r.statement;
  ordered_json hyps = ordered_json::array();
  for (const auto& [name, ok] : r.hypotheses)
    hyps.push_back({{"name", name}, {"holds", ok}});
  j["hypotheses"] = hyps;
  j["hypotheses_ok"] = r.hypotheses_ok;
  ordered_json qs = ordered_json::array();
  for (const auto& q : r.quantities)
    qs.push_back({{"name", q.name}, {"value", q.value}, {"exact", q.exact}});
  j["quantities"] = qs;
  j["inequality"] = r.inequality;
  j["holds"] = r.holds;
  j["conclusive"] = r.conclusive;
  j["degenerate"] = r.degenerate;
  j["notes"] = r.notes;
  j["witnesses"] = r.witnesses;
  return j;
}

ordered_json gb_to_json(const AlgebraPipeline& p) {
  ordered_json j;
  const Quiver& q = p.pres->quiver;
  ordered_json basis = ordered_json::array();
  for (const auto& e : p.gb->elements) basis.push_back(e.str(q, &p.gb->order));
  j["basis"] = basis;
  j["complete_below_cap"] = p.gb->complete_below_cap;
  j["degree_cap"] = p.gb->degree_cap;
  j["normal_count"] = p.nb->dim();
  j["dim_by_length"] = p.nb->count_by_length;
  return j;
}

ordered_json algebra_to_json(const FDAlgebra& a, bool with_table) {
  ordered_json j;
  j["dim"] = a.dim();
  j["field"] = a.field().name();
  ordered_json idems = ordered_json::array();
  for (int e = 0; e < a.idempotent_count(); ++e) idems.push_back(a.idempotent_name(e));
  j["idempotents"] = idems;
  ordered_json labels = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(static_cast<int>(i)));
  j["basis"] = labels;
  if (with_table) {
    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const auto& cell = a.product(static_cast<int>(i), static_cast<int>(k));
        if (cell.empty()) continue;
        ordered_json entry;
        entry["i"] = i;
        entry["j"] = k;
        ordered_json terms = ordered_json::array();
        for (const auto& [d, c] : cell)
          terms.push_back({{"k", d}, {"c", c.str()}});
        entry["product"] = terms;
        table.push_back(entry);
      }
    j["table"] = table;
  }
  return j;
}

ordered_json resolution_to_json(const Resolution& r) {
  ordered_json j;
  const FDAlgebra& a = *r.module->algebra();
  ordered_json terms = ordered_json::array();
  for (const auto& m : r.term_mults) {
    ordered_json t;
    for (int v = 0; v < a.idempotent_count(); ++v)
      t[a.idempotent_name(v)] = m[v];
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["pd"] = to_json(r.pd);
  j["minimal"] = r.minimal;
  j["truncated"] = r.truncated;
  return j;
}

}  // namespace fdimlab
