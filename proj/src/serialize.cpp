#include "synsim/serialize.hpp"

#include <cmath>

namespace synsim {

using nlohmann::ordered_json;

double round4(double x) { return std::round(x * 1e4) / 1e4; }

ordered_json to_json(const std::string& id, const ComplexityReport& report, const std::optional<SentenceClass>& cls) {
  ordered_json j;
  j["id"] = id;
  j["method"] = std::string(to_string(report.method));
  j["tkn"] = report.counts.tkn;
  j["vrb"] = report.counts.vrb;
  j["cnj"] = report.counts.cnj;
  j["sc"] = round4(report.sc);
  j["is_complex"] = report.is_complex;
  if (cls) {
    j["class"] = std::string(to_string(cls->label));
    j["atypical"] = cls->atypical;
  } else {
    j["class"] = nullptr;
    j["atypical"] = false;
  }
  return j;
}

ordered_json to_json(const std::string& id, const SentenceClass& cls, const ComplexityReport& report) {
  ordered_json j;
  j["id"] = id;
  j["class"] = std::string(to_string(cls.label));
  j["atypical"] = cls.atypical;
  j["coord_clauses"] = cls.coord_clauses;
  j["subord_clauses"] = cls.subord_clauses;
  j["length"] = cls.length;
  j["verbs"] = cls.verbs;
  j["is_complex"] = report.is_complex;
  return j;
}

ordered_json to_json(const SimplificationResult& result) {
  ordered_json j;
  j["source_id"] = result.source_id;
  j["source_text"] = result.source_text;
  auto& outputs = j["outputs"] = ordered_json::array();
  for (const auto& s : result.outputs) {
    ordered_json o;
    o["text"] = s.text;
    o["sc"] = round4(s.sc_report.sc);
    o["irreducible"] = s.irreducible;
    o["subject_propagated"] = s.subject_propagated;
    o["fact_shaped"] = s.fact_shaped;
    outputs.push_back(std::move(o));
  }
  auto& provenance = j["provenance"] = ordered_json::array();
  for (const auto& path : result.provenance) {
    auto steps = ordered_json::array();
    for (const auto& step : path) steps.push_back({{"clause", step.clause}, {"kind", std::string(to_string(step.kind))}});
    provenance.push_back(std::move(steps));
  }
  return j;
}

ordered_json to_json(const EvalReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  ordered_json j;
  j["method"] = report.method;
  if (report.confusion) {
    const auto& m = *report.confusion;
    j["confusion"] = {{"cc", m.cc}, {"cs", m.cs}, {"sc", m.sc}, {"ss", m.ss}};
  } else {
    j["confusion"] = nullptr;
  }
  j["accuracy"] = opt(report.accuracy);
  j["cosine"] = opt(report.cosine);
  j["jaccard"] = opt(report.jaccard);
  j["n_complex"] = report.n_complex;
  j["n_simplified"] = report.n_simplified;
  j["avg_simplified_per_sentence"] = report.avg_simplified_per_sentence;
  auto& failures = j["failures"] = ordered_json::array();
  for (const auto& f : report.failures) failures.push_back({{"id", f.id}, {"error", f.error}});
  return j;
}

std::string dump_report(const EvalReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace synsim
