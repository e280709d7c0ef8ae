#include "synsim/stopwords.hpp"

#include <fstream>
#include <sstream>

#include "synsim/errors.hpp"

namespace synsim {

// Generated from data/stopwords.txt at configure time.
extern const char* const kBundledStopwords;

StopWordList::StopWordList(std::unordered_set<std::string> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ContractViolation("stop-word list is empty");
}

StopWordList StopWordList::parse(std::istream& in) {
  std::unordered_set<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    entries.insert(to_lower(std::string_view(line).substr(first, last - first + 1)));
  }
  return StopWordList(std::move(entries));
}

StopWordList StopWordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stop-word file " + path.string());
  return parse(in);
}

const StopWordList& StopWordList::bundled() {
  static const StopWordList list = [] {
    std::istringstream in(kBundledStopwords);
    return parse(in);
  }();
  return list;
}

bool StopWordList::contains(std::string_view word) const { return entries_.count(to_lower(word)) != 0; }

ParsedSentence mark_stopwords(ParsedSentence sentence, const StopWordList& stops) {
  for (auto& t : sentence.tokens) t.is_stop = is_punctuation(t) || stops.contains(t.form);
  return sentence;
}

}  // namespace synsim
