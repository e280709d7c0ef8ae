#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "synsim/clause.hpp"
#include "synsim/complexity.hpp"
#include "synsim/sentence.hpp"
#include "synsim/stopwords.hpp"

namespace synsim {

// Re-parses a rewritten fragment. Called from whichever thread runs
// simplify_controlled; implementations must tolerate concurrent calls or the
// caller must serialize sentences.
using ReparseFn = std::function<ParsedSentence(const std::string& text, const std::string& id)>;

struct SimplifyOptions {
  ScoringMethod method = ScoringMethod::DepTreeBased;
  ScoringWeights weights;
  const StopWordList* stops = nullptr;  // nullptr = bundled list
  ReparseFn reparse;                    // empty = score carried token structure
  int max_iterations = 100;             // worklist pops per source sentence
  bool allow_heuristic = false;
};

struct SimpleSentence {
  std::string text;
  std::vector<Token> tokens;
  ComplexityReport sc_report;
  bool subject_propagated = false;
  bool irreducible = false;
  // Has a verb-group token and a non-stop nominal token.
  bool fact_shaped = false;

  ParsedSentence as_sentence(std::string id) const;
};

struct ProvenanceStep {
  int clause = 0;  // position of the clause in its parent's split
  ClauseKind kind = ClauseKind::Main;
};

struct SimplificationResult {
  std::string source_id;
  std::string source_text;
  std::vector<SimpleSentence> outputs;
  // provenance[i] is the clause path from the source to outputs[i]; empty
  // when the source was emitted unsplit.
  std::vector<std::vector<ProvenanceStep>> provenance;
  std::vector<std::size_t> irreducible;  // indices into outputs
};

// Clauses at the next split level, ordered by first token index.
//
// Coordination is split first: the main clause (the ROOT subtree) plus
//   - conjuncts of the main clause head, or of another coordinate head, that
//     are predicates (verbal, or carrying their own subject/copula/auxiliary),
//   - comma-delimited appositives and non-finite participial modifiers of the
//     root's subject, together with their conjuncts.
// Only when there is no coordination are subordinate clauses split off: finite
// ADVCL/CCOMP/RELCL/ACL subtrees not nested inside another such clause.
// Tokens belong to the clause of their nearest clause-head ancestor, so the
// clauses are disjoint and cover the sentence.
//
// Throws UnsupportedInputError for heuristic parses unless allowed and
// StructureError when there is no ROOT.
std::vector<Clause> find_clauses(const ParsedSentence& sentence, bool allow_heuristic = false);

// Every clause at every depth, for classification.
std::vector<Clause> find_all_clauses(const ParsedSentence& sentence, bool allow_heuristic = false);

// Noun phrase of the subject of ROOT in surface order, without relative
// clauses, appositives, punctuation or its case marker.
std::optional<std::vector<int>> extract_parent_subject(const ParsedSentence& sentence);

// Turns one clause into a standalone sentence: strips edge punctuation,
// coordinators and subordinators, replaces a clause-initial relative pronoun
// by its antecedent, prefixes the parent subject (plus "is" for verbless
// nominal or participial fragments) when the clause has no subject,
// capitalizes, and ends with a period. The fragment keeps a valid tree with
// the clause head as ROOT. Throws ContractViolation for an empty clause.
SimpleSentence rephrase_clause(const Clause& clause, const ParsedSentence& sentence,
                               const std::optional<std::vector<int>>& parent_subject,
                               const SimplifyOptions& options = {});

// Controlled split-and-rephrase. Items above the threshold are split and their
// fragments re-enter the worklist; an item whose split yields one fragment
// identical to itself is emitted as irreducible. Outputs follow source order.
SimplificationResult simplify_controlled(const ParsedSentence& sentence, const SimplifyOptions& options = {});

}  // namespace synsim
