#include "synsim/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "synsim/errors.hpp"

namespace synsim {

namespace {

bool word_char(unsigned char c) { return c >= 0x80 || std::isalnum(c); }

bool joiner(char c) { return c == '.' || c == '-' || c == '/' || c == '\''; }

}  // namespace

std::vector<std::string> metric_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (word_char(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty() && joiner(text[i]) && i + 1 < text.size() &&
               word_char(static_cast<unsigned char>(text[i + 1]))) {
      cur.push_back(text[i]);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

SentenceSet::SentenceSet(std::vector<std::string> sentences) : sentences_(std::move(sentences)) {
  std::map<std::string, int> counts;
  for (const auto& s : sentences_)
    for (auto& t : metric_tokens(s)) ++counts[std::move(t)];
  bag_.assign(counts.begin(), counts.end());
}

double cosine_similarity(const SentenceSet& a, const SentenceSet& b) {
  if (a.empty() && b.empty()) throw UndefinedMetricError("cosine similarity of two empty sentence sets");
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0, na = 0, nb = 0;
  for (const auto& [_, n] : a.bag()) na += double(n) * n;
  for (const auto& [_, n] : b.bag()) nb += double(n) * n;
  auto i = a.bag().begin();
  auto j = b.bag().begin();
  while (i != a.bag().end() && j != b.bag().end()) {
    if (i->first < j->first) ++i;
    else if (j->first < i->first) ++j;
    else {
      dot += double(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

double jaccard_similarity(const SentenceSet& a, const SentenceSet& b) {
  if (a.empty() && b.empty()) throw UndefinedMetricError("jaccard similarity of two empty sentence sets");
  std::size_t common = 0;
  auto i = a.bag().begin();
  auto j = b.bag().begin();
  while (i != a.bag().end() && j != b.bag().end()) {
    if (i->first < j->first) ++i;
    else if (j->first < i->first) ++j;
    else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = a.bag().size() + b.bag().size() - common;
  return double(common) / double(uni);
}

double ConfusionMatrix::accuracy() const {
  if (total() == 0) throw UndefinedMetricError("accuracy of an empty confusion matrix");
  return double(cc + ss) / double(total());
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
  cc += o.cc;
  cs += o.cs;
  sc += o.sc;
  ss += o.ss;
  return *this;
}

ConfusionMatrix confusion(std::span<const Label> gold, std::span<const Label> predicted) {
  if (gold.size() != predicted.size())
    throw ContractViolation("confusion: " + std::to_string(gold.size()) + " gold labels but " +
                            std::to_string(predicted.size()) + " predictions");
  ConfusionMatrix m;
  for (std::size_t k = 0; k < gold.size(); ++k) {
    const bool g = gold[k] == Label::Complex;
    const bool p = predicted[k] == Label::Complex;
    if (g && p) ++m.cc;
    else if (g) ++m.cs;
    else if (p) ++m.sc;
    else ++m.ss;
  }
  return m;
}

}  // namespace synsim
