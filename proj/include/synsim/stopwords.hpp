#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>

#include "synsim/sentence.hpp"

namespace synsim {

// Set of lowercase function words. Lookups lowercase the query.
class StopWordList {
 public:
  // Throws ContractViolation if `entries` is empty.
  explicit StopWordList(std::unordered_set<std::string> entries);

  // One word per line, '#' comments and blank lines ignored.
  static StopWordList parse(std::istream& in);
  static StopWordList from_file(const std::filesystem::path& path);

  // The list compiled into the library from data/stopwords.txt.
  static const StopWordList& bundled();

  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

// Sets is_stop on every token. Punctuation is always a stop token.
ParsedSentence mark_stopwords(ParsedSentence sentence, const StopWordList& stops);

}  // namespace synsim
