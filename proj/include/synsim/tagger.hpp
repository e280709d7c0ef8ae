#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "synsim/sentence.hpp"
#include "synsim/stopwords.hpp"

namespace synsim {

// Splits one sentence into word and punctuation tokens.
std::vector<std::string> tokenize(std::string_view text);

// Lexicon-and-suffix POS tagger for demos without an external parser.
//
// The dependency layer is a flat fallback: every token heads to the first
// detected verb, which becomes ROOT (the first non-punctuation token if no
// verb is found). Deprels are CC for coordinators, PUNCT for punctuation and
// DEP otherwise. The result has heuristic=true and is rejected by the clause
// finder unless explicitly allowed.
//
// Throws EmptyInputError for empty or whitespace-only text.
ParsedSentence tag_plain_text(std::string_view text,
                              const StopWordList& stops = StopWordList::bundled());

}  // namespace synsim
