#include "ksplit/json_io.hpp"

namespace ksplit {

namespace {

double num(long double x) { return static_cast<double>(x); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.missing_pairs) pairs.push_back({a, b});
  return Json{{"mode", to_string(r.mode)},
              {"passed", r.passed},
              {"missing_pairs", std::move(pairs)},
              {"multi_pairs", r.multi_pairs},
              {"internal_edges", r.internal_edges},
              {"max_blob_size", r.max_blob_size},
              {"edge_count", r.edge_count}};
}

Json witness_json(const std::optional<Embedding>& e) {
  Json mapping = Json::array();
  if (e) {
    for (std::size_t h = 0; h < e->mapping.size(); ++h) mapping.push_back({h, e->mapping[h]});
  }
  return Json{{"found", e.has_value()}, {"mapping", std::move(mapping)}};
}

Json to_json(const JansonDiagnostics& d) {
  return Json{{"M", d.M},
              {"N", d.N},
              {"n", d.n},
              {"Delta", d.Delta},
              {"mu", num(d.mu)},
              {"D", num(d.D)},
              {"D_estimate", num(d.D_estimate)},
              {"bound_pair", num(d.bound_pair)},
              {"bound_union", num(d.bound_union)},
              {"condition_flag", d.condition_flag},
              {"log", "natural"}};
}

Json to_json(const ConcentrationReport& c) {
  return Json{{"N", c.N},
              {"n", c.n},
              {"k", num(c.k)},
              {"epsilon", num(c.epsilon)},
              {"size_cap", num(c.size_cap)},
              {"per_class_bound", num(c.per_class_bound)},
              {"union_bound", num(c.union_bound)}};
}

Json to_json(const PairFailureEstimate& e) {
  return Json{{"estimate", e.estimate},
              {"stderr", e.stderr_},
              {"samples", e.samples},
              {"failures", e.failures},
              {"seed", e.seed}};
}

Json to_json(const FailureStats& f) {
  Json reasons = Json::array();
  for (auto r : f.reasons) reasons.push_back(r == TrialFailure::size_violation ? "size_violation" : "missing_pair");
  return Json{{"trials", f.trials},
              {"size_violations", f.size_violations},
              {"missing_pairs", f.missing_pairs},
              {"reasons", std::move(reasons)},
              {"diagnostics", f.diagnostics ? to_json(*f.diagnostics) : Json(nullptr)},
              {"concentration", f.concentration ? to_json(*f.concentration) : Json(nullptr)},
              {"seed", f.seed}};
}

Json to_json(const TuranInterval& t) {
  return Json{{"low", t.low}, {"high", t.high}, {"exact", t.exact}, {"formula", t.formula}};
}

Json to_json(const BoundEnd& b) {
  return Json{{"value", optional_json(b.value)},
              {"basis", b.basis},
              {"formula", b.formula},
              {"certified", b.certified}};
}

Json to_json(const BoundReport& r) {
  return Json{{"forbidden", r.forbidden},
              {"n", r.n},
              {"lower", to_json(r.lower)},
              {"upper", to_json(r.upper)},
              {"achieved_k", optional_json(r.achieved_k)},
              {"notes", r.notes}};
}

Json to_json(const RamseyBounds& r) {
  return Json{{"t", r.t},
              {"k", r.k},
              {"lower", r.lower},
              {"upper", r.upper},
              {"star_exact", r.star_exact},
              {"epsilon", r.epsilon}};
}

Json to_json(const Case1Certificate& c) {
  return Json{{"q", c.q},
              {"parts", c.parts},
              {"j", c.j},
              {"degree_sum_a1", c.degree_sum_a1},
              {"internal_a1", c.internal_a1},
              {"cross_a1_aj", c.cross_a1_aj},
              {"union_edges", c.union_edges},
              {"lower_bound", c.lower_bound}};
}

Json to_json(const TrimResult& t) {
  Json out{{"q", t.q},
           {"lemma_constant", t.lemma_constant},
           {"ex", t.ex},
           {"m", t.m},
           {"ell", t.ell},
           {"top_set", t.top_set},
           {"degree_sum_a1", t.degree_sum_a1},
           {"degree_cap", t.degree_cap},
           {"case", t.trimmed ? 2 : 1}};
  if (t.trimmed) {
    out["trimmed_edges"] = t.trimmed->edge_count();
    out["trimmed_max_degree"] = t.trimmed->max_degree();
  }
  out["case1"] = t.case1 ? to_json(*t.case1) : Json(nullptr);
  return out;
}

}  // namespace ksplit
