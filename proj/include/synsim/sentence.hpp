#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace synsim {

// One syntactic word. Empty string fields correspond to "_" in CoNLL-U.
struct Token {
  int index = 0;          // 1-based position within the sentence
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;
  int head = 0;           // 0 = attached to the artificial root
  std::string deprel;     // canonical: uppercase, no subtype ("conj:and" -> "CONJ")
  std::string deps;
  std::string misc;
  bool is_stop = false;

  bool operator==(const Token&) const = default;
};

struct ParsedSentence {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  // Set by the plain-text tagger: the dependency layer is a flat fallback.
  bool heuristic = false;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  // 1-based access.
  const Token& at(int index) const { return tokens.at(static_cast<std::size_t>(index - 1)); }
  Token& at(int index) { return tokens.at(static_cast<std::size_t>(index - 1)); }
  // Index of the token with head 0, or 0 if there is none.
  int root() const;

  bool operator==(const ParsedSentence&) const = default;
};

// Uppercases and strips any ":subtype" suffix.
std::string canonical_deprel(std::string_view deprel);

// Throws StructureError unless indices are 1..n, heads are in range, exactly one
// token heads to 0 with deprel ROOT, and every head chain reaches the root.
void validate_tree(const ParsedSentence& sentence);

// children[i] lists dependents of token i (index 0 = artificial root), in order.
std::vector<std::vector<int>> children_of(const ParsedSentence& sentence);

// Sorted indices of the subtree rooted at `head` (inclusive).
std::vector<int> subtree(const std::vector<std::vector<int>>& children, int head);

bool is_punctuation(const Token& token);
bool is_sentence_final(std::string_view form);

// Joins forms with single spaces, attaching punctuation and clitics the way
// English text is normally written ("Qatar ," -> "Qatar,", "band 's" -> "band's").
std::string detokenize(std::span<const Token> tokens);
std::string detokenize(std::span<const std::string> forms);

// Value of `key` in a UD feature string ("VerbForm=Fin|Mood=Ind"), empty if absent.
std::string feature(std::string_view feats, std::string_view key);

std::string to_lower(std::string_view s);

}  // namespace synsim
