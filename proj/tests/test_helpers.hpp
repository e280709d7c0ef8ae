#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "synsim/conllu.hpp"
#include "synsim/stopwords.hpp"

namespace synsim::testing {

inline std::string data_path(const std::string& name) { return std::string(SYNSIM_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Sentence `id` from tests/data/sentences.conllu (or `file`), stop words marked.
inline ParsedSentence fixture(const std::string& id, const std::string& file = "sentences.conllu") {
  for (auto& s : read_conllu(std::string_view(read_file(data_path(file)))))
    if (s.id == id) return mark_stopwords(std::move(s), StopWordList::bundled());
  throw std::runtime_error("no fixture " + id);
}

}  // namespace synsim::testing
