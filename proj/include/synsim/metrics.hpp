#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace synsim {

// Lowercased word tokens of a text. A word is a run of alphanumerics (and
// non-ASCII bytes), with '.', '-', '/' and '\'' kept when they sit between two
// word characters. Punctuation is dropped; stop words are kept.
std::vector<std::string> metric_tokens(std::string_view text);

// A set of sentences with its pooled term frequencies.
class SentenceSet {
 public:
  SentenceSet() = default;
  explicit SentenceSet(std::vector<std::string> sentences);

  const std::vector<std::string>& sentences() const { return sentences_; }
  // (term, count) pairs sorted by term.
  const std::vector<std::pair<std::string, int>>& bag() const { return bag_; }
  bool empty() const { return bag_.empty(); }

 private:
  std::vector<std::string> sentences_;
  std::vector<std::pair<std::string, int>> bag_;
};

// Term-frequency cosine over the union vocabulary; 0 when exactly one side is
// empty. Throws UndefinedMetricError when both are.
double cosine_similarity(const SentenceSet& a, const SentenceSet& b);

// |A n B| / |A u B| over the distinct tokens. Throws UndefinedMetricError when
// both sets are empty.
double jaccard_similarity(const SentenceSet& a, const SentenceSet& b);

enum class Label { Simple, Complex };

struct ConfusionMatrix {
  std::size_t cc = 0;  // gold complex, predicted complex
  std::size_t cs = 0;  // gold complex, predicted simple
  std::size_t sc = 0;  // gold simple, predicted complex
  std::size_t ss = 0;  // gold simple, predicted simple

  std::size_t total() const { return cc + cs + sc + ss; }
  // Throws UndefinedMetricError when total() == 0.
  double accuracy() const;
  ConfusionMatrix& operator+=(const ConfusionMatrix& o);
  bool operator==(const ConfusionMatrix&) const = default;
};

// Throws ContractViolation on a length mismatch.
ConfusionMatrix confusion(std::span<const Label> gold, std::span<const Label> predicted);

}  // namespace synsim
