#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synsim/complexity.hpp"
#include "synsim/metrics.hpp"
#include "synsim/sentence.hpp"
#include "synsim/stopwords.hpp"

namespace synsim {

struct CorpusEntry {
  std::string id;
  std::string complex_text;
  std::optional<ParsedSentence> complex_parse;
  std::vector<std::string> simple_texts;
  std::optional<std::vector<ParsedSentence>> simple_parses;  // index-aligned with simple_texts
};

// Produces a parse for raw text; used when an entry carries no CoNLL-U.
using ParserFn = std::function<ParsedSentence(const std::string& text, const std::string& id)>;

struct RunConfig {
  ScoringMethod method = ScoringMethod::DepTreeBased;
  ScoringWeights weights;
  std::size_t parallelism = 1;
  std::string output_path;
  const StopWordList* stops = nullptr;  // nullptr = bundled list
  ParserFn parser;

  // Throws ConfigError for parallelism 0 or invalid weights.
  void validate() const;
};

struct EntryFailure {
  std::string id;
  std::string error;
};

struct EvalReport {
  std::string method;
  std::optional<ConfusionMatrix> confusion;
  std::optional<double> accuracy;
  std::optional<double> cosine;
  std::optional<double> jaccard;
  std::size_t n_complex = 0;
  std::size_t n_simplified = 0;
  double avg_simplified_per_sentence = 0.0;
  std::vector<EntryFailure> failures;
};

// JSONL with one object per line:
//   {"id", "complex", "simple": [...], "conllu_complex"?, "conllu_simple"?: [...]}
// Blank lines are skipped. Throws ParseError for malformed JSON, SchemaError
// for a missing or mistyped field, and StructureError / ParseError naming the
// entry id for bad embedded CoNLL-U.
std::vector<CorpusEntry> load_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries);

// Scores every complex sentence (gold Complex) and every simple sentence (gold
// Simple). Throws ConfigError when a parse is missing and no parser is set,
// and UndefinedMetricError for an empty corpus.
EvalReport evaluate_sc(const std::vector<CorpusEntry>& corpus, const RunConfig& config);

// Simplifies every complex sentence and compares the outputs with the gold
// simple sentences. Per-entry errors are recorded in failures; similarity
// means and counts cover the successful entries.
EvalReport evaluate_synsim(const std::vector<CorpusEntry>& corpus, const RunConfig& config);

}  // namespace synsim
