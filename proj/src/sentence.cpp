#include "synsim/sentence.hpp"

#include <algorithm>
#include <cctype>

#include "synsim/errors.hpp"

namespace synsim {

int ParsedSentence::root() const {
  for (const auto& t : tokens)
    if (t.head == 0) return t.index;
  return 0;
}

std::string canonical_deprel(std::string_view deprel) {
  auto colon = deprel.find(':');
  std::string out(deprel.substr(0, colon));
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void validate_tree(const ParsedSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1)
      throw StructureError(s.id, "token indices are not consecutive from 1");
    if (t.form.empty()) throw StructureError(s.id, "empty form at token " + std::to_string(t.index));
    if (t.head < 0 || t.head > n)
      throw StructureError(s.id, "head out of range at token " + std::to_string(t.index));
    if (t.head == t.index) throw StructureError(s.id, "token " + std::to_string(t.index) + " heads itself");
    if (t.head == 0) {
      ++roots;
      if (t.deprel != "ROOT")
        throw StructureError(s.id, "token " + std::to_string(t.index) + " attaches to 0 without ROOT");
    } else if (t.deprel == "ROOT") {
      throw StructureError(s.id, "ROOT relation on non-root token " + std::to_string(t.index));
    }
  }
  if (n == 0) return;
  if (roots != 1) throw StructureError(s.id, "expected exactly one root, found " + std::to_string(roots));
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      if (++steps > n) throw StructureError(s.id, "cycle through token " + std::to_string(i));
      cur = s.at(cur).head;
    }
  }
}

std::vector<std::vector<int>> children_of(const ParsedSentence& s) {
  std::vector<std::vector<int>> children(s.tokens.size() + 1);
  for (const auto& t : s.tokens)
    if (t.head >= 0 && static_cast<std::size_t>(t.head) < children.size())
      children[static_cast<std::size_t>(t.head)].push_back(t.index);
  return children;
}

std::vector<int> subtree(const std::vector<std::vector<int>>& children, int head) {
  std::vector<int> out;
  std::vector<int> stack{head};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (int c : children[static_cast<std::size_t>(cur)]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_punctuation(const Token& token) {
  if (token.upos == "PUNCT") return true;
  if (token.form.empty()) return false;
  return std::all_of(token.form.begin(), token.form.end(),
                     [](unsigned char c) { return std::ispunct(c) != 0; });
}

bool is_sentence_final(std::string_view form) { return form == "." || form == "!" || form == "?"; }

namespace {

bool attaches_left(std::string_view f) {
  static constexpr std::string_view kLeft[] = {",", ".", ";", ":", "!", "?", "%", ")", "]", "}",
                                               "'s", "'S", "n't", "'re", "'ve", "'ll", "'d", "'m", "'", "''"};
  return std::find(std::begin(kLeft), std::end(kLeft), f) != std::end(kLeft);
}

bool attaches_right(std::string_view f) { return f == "(" || f == "[" || f == "{" || f == "$" || f == "``"; }

}  // namespace

std::string detokenize(std::span<const std::string> forms) {
  std::string out;
  bool glue_next = false;
  for (const auto& f : forms) {
    if (!out.empty() && !glue_next && !attaches_left(f)) out += ' ';
    out += f;
    glue_next = attaches_right(f);
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens) {
  std::vector<std::string> forms;
  forms.reserve(tokens.size());
  for (const auto& t : tokens) forms.push_back(t.form);
  return detokenize(std::span<const std::string>(forms));
}

std::string feature(std::string_view feats, std::string_view key) {
  std::size_t pos = 0;
  while (pos <= feats.size()) {
    auto bar = feats.find('|', pos);
    auto item = feats.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    auto eq = item.find('=');
    if (eq != std::string_view::npos && item.substr(0, eq) == key) return std::string(item.substr(eq + 1));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return {};
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace synsim
