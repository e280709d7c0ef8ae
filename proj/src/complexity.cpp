#include "synsim/complexity.hpp"

#include <algorithm>

#include "synsim/errors.hpp"

namespace synsim {

std::string_view to_string(ScoringMethod method) {
  return method == ScoringMethod::DepTreeBased ? "dep" : "pos";
}

ScoringMethod parse_scoring_method(std::string_view name) {
  if (name == "dep") return ScoringMethod::DepTreeBased;
  if (name == "pos") return ScoringMethod::PosBased;
  throw ConfigError("unknown scoring method '" + std::string(name) + "' (expected dep or pos)");
}

void ScoringWeights::validate() const {
  if (token_weight < 0 || verb_weight < 0 || conjunction_weight < 0)
    throw ConfigError("scoring weights must be non-negative");
  if (!(threshold > 0)) throw ConfigError("threshold must be positive");
}

ComponentCounts count_components(const ParsedSentence& sentence, ScoringMethod method, bool count_aux_as_verb) {
  ComponentCounts c;
  for (const auto& t : sentence.tokens) {
    if (!t.is_stop) ++c.tkn;
    const bool comma = t.form == ",";
    if (method == ScoringMethod::DepTreeBased) {
      if (t.deprel == "ROOT" || t.deprel == "ATTR") ++c.vrb;
      if (t.deprel == "CC" || t.deprel == "CONJ" || comma) ++c.cnj;
    } else {
      if (t.upos == "VERB" || (count_aux_as_verb && t.upos == "AUX")) ++c.vrb;
      if (t.upos == "CCONJ" || comma) ++c.cnj;
    }
  }
  return c;
}

ComplexityReport score(const ComponentCounts& counts, ScoringMethod method, const ScoringWeights& w) {
  ComplexityReport r;
  r.counts = counts;
  r.method = method;
  r.sc = counts.tkn * w.token_weight + counts.vrb * w.verb_weight + counts.cnj * w.conjunction_weight;
  r.is_complex = r.sc > w.threshold;
  return r;
}

ComplexityReport score(const ParsedSentence& sentence, ScoringMethod method, const ScoringWeights& w) {
  return score(count_components(sentence, method, w.count_aux_as_verb), method, w);
}

std::string_view to_string(SentenceLabel label) {
  switch (label) {
    case SentenceLabel::Simple: return "simple";
    case SentenceLabel::Compound: return "compound";
    case SentenceLabel::Complex: return "complex";
    case SentenceLabel::CompoundComplex: return "compound-complex";
  }
  return "simple";
}

SentenceClass classify_profile(int coord, int subord, int length, int verbs) {
  SentenceClass out{SentenceLabel::Simple, coord, subord, length, verbs, false};
  if (coord == 0 && subord == 0 && length <= 8 && verbs <= 1) return out;
  if (coord >= 2 && subord >= 1) out.label = SentenceLabel::CompoundComplex;
  else if (coord >= 2) out.label = SentenceLabel::Compound;
  else if (subord >= 1) out.label = SentenceLabel::Complex;
  else out.atypical = true;
  return out;
}

SentenceClass classify(const ParsedSentence& sentence, std::span<const Clause> clauses) {
  const auto coordinate = std::count_if(clauses.begin(), clauses.end(),
                                        [](const Clause& c) { return c.kind == ClauseKind::Coordinate; });
  const auto subordinate = std::count_if(clauses.begin(), clauses.end(),
                                         [](const Clause& c) { return c.kind == ClauseKind::Subordinate; });
  const auto counts = count_components(sentence, ScoringMethod::PosBased);
  const int coord = coordinate > 0 ? static_cast<int>(coordinate) + 1 : 0;
  return classify_profile(coord, static_cast<int>(subordinate), counts.tkn, counts.vrb);
}

}  // namespace synsim
