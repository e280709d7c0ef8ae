#include "synsim/conllu.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "synsim/errors.hpp"

namespace synsim {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

std::string field(std::string_view raw) { return raw == "_" ? std::string() : std::string(raw); }

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<ParsedSentence> ConlluReader::next() {
  ParsedSentence sentence;
  bool seen_any = false;
  bool has_text = false;
  std::string line;

  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) {
      if (seen_any) break;
      continue;
    }
    seen_any = true;
    if (line.front() == '#') {
      std::string_view body = trim(std::string_view(line).substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      auto key = trim(body.substr(0, eq));
      auto value = trim(body.substr(eq + 1));
      if (key == "sent_id") sentence.id = std::string(value);
      if (key == "text") {
        sentence.text = std::string(value);
        has_text = true;
      }
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10)
      throw ParseError(line_, "expected 10 tab-separated columns, found " + std::to_string(cols.size()));
    if (cols[0].find('-') != std::string_view::npos || cols[0].find('.') != std::string_view::npos)
      continue;  // multiword range or empty node
    Token t;
    if (!parse_int(cols[0], t.index) || t.index < 1) throw ParseError(line_, "bad ID '" + std::string(cols[0]) + "'");
    t.form = std::string(cols[1]);
    if (t.form.empty()) throw ParseError(line_, "empty FORM");
    t.lemma = field(cols[2]);
    t.upos = field(cols[3]);
    t.xpos = field(cols[4]);
    t.feats = field(cols[5]);
    if (!parse_int(cols[6], t.head)) throw ParseError(line_, "bad HEAD '" + std::string(cols[6]) + "'");
    t.deprel = canonical_deprel(field(cols[7]));
    t.deps = field(cols[8]);
    t.misc = field(cols[9]);
    sentence.tokens.push_back(std::move(t));
  }

  if (!seen_any) return std::nullopt;
  ++sentences_;
  if (sentence.id.empty()) sentence.id = "s" + std::to_string(sentences_);
  if (!has_text) sentence.text = detokenize(std::span<const Token>(sentence.tokens));
  validate_tree(sentence);
  return sentence;
}

std::vector<ParsedSentence> read_conllu(std::istream& in) {
  ConlluReader reader(in);
  std::vector<ParsedSentence> out;
  while (auto s = reader.next()) {
    // A block consisting only of comments carries no sentence.
    if (!s->tokens.empty()) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<ParsedSentence> read_conllu(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_conllu(in);
}

void write_conllu(std::ostream& out, const ParsedSentence& s) {
  auto col = [](const std::string& v) -> const std::string& {
    static const std::string underscore = "_";
    return v.empty() ? underscore : v;
  };
  out << "# sent_id = " << s.id << '\n';
  out << "# text = " << s.text << '\n';
  for (const auto& t : s.tokens) {
    out << t.index << '\t' << t.form << '\t' << col(t.lemma) << '\t' << col(t.upos) << '\t'
        << col(t.xpos) << '\t' << col(t.feats) << '\t' << t.head << '\t' << col(to_lower(t.deprel))
        << '\t' << col(t.deps) << '\t' << col(t.misc) << '\n';
  }
  out << '\n';
}

std::string to_conllu(const ParsedSentence& s) {
  std::ostringstream out;
  write_conllu(out, s);
  return out.str();
}

}  // namespace synsim
