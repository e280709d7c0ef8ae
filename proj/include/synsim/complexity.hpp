#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "synsim/clause.hpp"
#include "synsim/sentence.hpp"

namespace synsim {

// Which tag layer the component counts are read from.
//   DepTreeBased: VRB = ROOT/ATTR deprels, CNJ = CC/CONJ deprels plus commas.
//   PosBased:     VRB = VERB upos,         CNJ = CCONJ upos plus commas.
enum class ScoringMethod { DepTreeBased, PosBased };

std::string_view to_string(ScoringMethod method);
// Accepts "dep" / "pos". Throws ConfigError otherwise.
ScoringMethod parse_scoring_method(std::string_view name);

struct ScoringWeights {
  double token_weight = 0.07;
  double verb_weight = 0.3;
  double conjunction_weight = 0.4;
  double threshold = 1.0;
  // PosBased only: also count AUX tokens as verbs.
  bool count_aux_as_verb = false;

  // Throws ConfigError if a weight is negative or the threshold is not positive.
  void validate() const;
};

struct ComponentCounts {
  int tkn = 0;  // non-stop tokens
  int vrb = 0;  // verb group
  int cnj = 0;  // conjunction group

  bool operator==(const ComponentCounts&) const = default;
};

struct ComplexityReport {
  ComponentCounts counts;
  double sc = 0.0;
  ScoringMethod method = ScoringMethod::DepTreeBased;
  bool is_complex = false;
};

// Requires is_stop to be marked. An empty sentence yields zeros.
ComponentCounts count_components(const ParsedSentence& sentence, ScoringMethod method,
                                 bool count_aux_as_verb = false);

// SC = TKN*token_weight + VRB*verb_weight + CNJ*conjunction_weight, and
// is_complex = SC > threshold (a tie is simple).
ComplexityReport score(const ComponentCounts& counts, ScoringMethod method, const ScoringWeights& weights);
ComplexityReport score(const ParsedSentence& sentence, ScoringMethod method, const ScoringWeights& weights);

enum class SentenceLabel { Simple, Compound, Complex, CompoundComplex };

std::string_view to_string(SentenceLabel label);

struct SentenceClass {
  SentenceLabel label = SentenceLabel::Simple;
  int coord_clauses = 0;
  int subord_clauses = 0;
  int length = 0;  // non-stop tokens
  int verbs = 0;   // PosBased verb count
  // Set when the profile falls outside every row of the classification table
  // and the label is the nearest lower-complexity one.
  bool atypical = false;
};

// Table rules over (coordinated clauses, subordinate clauses, length, verbs):
//   Simple           C=0, S=0, L<=8, V<=1
//   CompoundComplex  C>=2, S>=1
//   Compound         C>=2, S=0
//   Complex          S>=1
//   otherwise Simple with atypical=true.
SentenceClass classify_profile(int coord_clauses, int subord_clauses, int length, int verbs);

// C counts every independent clause taking part in coordination (the main
// clause plus each Coordinate clause, or 0 when there are none); S counts
// Subordinate clauses.
SentenceClass classify(const ParsedSentence& sentence, std::span<const Clause> clauses);

}  // namespace synsim
