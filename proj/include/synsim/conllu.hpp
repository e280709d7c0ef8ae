#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synsim/sentence.hpp"

namespace synsim {

// Streaming CoNLL-U reader. Each call to next() consumes one blank-line
// separated block. Multiword ranges ("3-4") and empty nodes ("5.1") are
// skipped. Neither consumes an integer ID, so word indices stay as given.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in) : in_(in) {}

  // Returns std::nullopt at end of stream. Throws ParseError on a malformed
  // line and StructureError when the heads do not form a tree.
  std::optional<ParsedSentence> next();

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::size_t sentences_ = 0;
};

std::vector<ParsedSentence> read_conllu(std::istream& in);
std::vector<ParsedSentence> read_conllu(std::string_view text);

// Writes `# sent_id`, `# text` and the ten columns. Deprels are written in
// lowercase UD style; empty fields are written as "_".
void write_conllu(std::ostream& out, const ParsedSentence& sentence);
std::string to_conllu(const ParsedSentence& sentence);

}  // namespace synsim
