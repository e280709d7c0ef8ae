#include "synsim/simplify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "synsim/errors.hpp"

namespace synsim {

std::string_view to_string(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::Main: return "main";
    case ClauseKind::Coordinate: return "coordinate";
    case ClauseKind::Subordinate: return "subordinate";
  }
  return "main";
}

ParsedSentence SimpleSentence::as_sentence(std::string id) const {
  ParsedSentence s;
  s.id = std::move(id);
  s.text = text;
  s.tokens = tokens;
  return s;
}

namespace {

bool one_of(std::string_view v, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

bool is_subject_rel(std::string_view deprel) {
  return one_of(deprel, {"NSUBJ", "NSUBJPASS", "CSUBJ", "CSUBJPASS", "EXPL"});
}

bool is_subordinate_rel(std::string_view deprel) { return one_of(deprel, {"ADVCL", "CCOMP", "RELCL", "ACL"}); }

// Read-only view over one sentence's tree.
class Tree {
 public:
  explicit Tree(const ParsedSentence& s) : s_(s), children_(children_of(s)) {}

  const ParsedSentence& sentence() const { return s_; }
  const Token& at(int i) const { return s_.at(i); }
  const std::vector<int>& children(int i) const { return children_[static_cast<std::size_t>(i)]; }
  std::vector<int> subtree(int head) const { return synsim::subtree(children_, head); }

  int subject_of(int head) const {
    for (int c : children(head))
      if (at(c).deprel == "NSUBJ" || at(c).deprel == "NSUBJPASS") return c;
    return 0;
  }

  bool has_subject(int head) const {
    return std::any_of(children(head).begin(), children(head).end(),
                       [&](int c) { return is_subject_rel(at(c).deprel); });
  }

  // Finite verb or auxiliary. Uses VerbForm, then XPOS, then a form-based guess
  // when neither is annotated.
  bool is_finite(int i) const {
    const Token& t = at(i);
    if (t.upos != "VERB" && t.upos != "AUX") return false;
    if (auto vf = feature(t.feats, "VerbForm"); !vf.empty()) return vf == "Fin";
    if (!t.xpos.empty()) return one_of(t.xpos, {"VBD", "VBP", "VBZ", "MD"});
    const std::string w = to_lower(t.form);
    for (int c : children(i))
      if (at(c).deprel == "MARK" && to_lower(at(c).form) == "to") return false;
    if (t.upos == "AUX") return !one_of(w, {"be", "been", "being"});
    return !(w.size() > 4 && w.ends_with("ing"));
  }

  bool is_participle(int i) const {
    const Token& t = at(i);
    if (t.upos != "VERB") return false;
    if (auto vf = feature(t.feats, "VerbForm"); !vf.empty()) return vf == "Part" || vf == "Ger";
    if (!t.xpos.empty()) return t.xpos == "VBN" || t.xpos == "VBG";
    const std::string w = to_lower(t.form);
    return w.ends_with("ed") || w.ends_with("ing");
  }

  // A clause head carries tense or a subject of its own.
  bool is_finite_clause(int head) const {
    if (is_finite(head) || has_subject(head)) return true;
    for (int c : children(head))
      if ((at(c).deprel == "AUX" || at(c).deprel == "COP") && is_finite(c)) return true;
    return false;
  }

  bool is_predicate(int head) const {
    if (at(head).upos == "VERB") return true;
    for (int c : children(head))
      if (is_subject_rel(at(c).deprel) || one_of(at(c).deprel, {"COP", "AUX", "AUXPASS"})) return true;
    return false;
  }

  bool comma_set_off(int head) const {
    auto span = subtree(head);
    int first = span.front();
    if (at(first).form == ",") return true;
    return first > 1 && at(first - 1).form == ",";
  }

  // Head noun plus determiners, modifiers, compounds, nominal dependents and
  // conjuncts. Punctuation and clausal or appositive material is left out.
  std::vector<int> noun_phrase(int head) const {
    std::vector<int> out{head};
    std::vector<int> stack;
    for (int c : children(head))
      if (one_of(at(c).deprel, {"DET", "AMOD", "COMPOUND", "FLAT", "NUMMOD", "NMOD", "FIXED", "GOESWITH",
                                "CONJ", "CC", "NN", "POSS"}))
        stack.push_back(c);
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      out.push_back(cur);
      for (int c : children(cur))
        if (!one_of(at(c).deprel, {"PUNCT", "APPOS", "ACL", "RELCL", "ADVCL", "CCOMP", "PARATAXIS"}))
          stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const ParsedSentence& s_;
  std::vector<std::vector<int>> children_;
};

int checked_root(const ParsedSentence& s, bool allow_heuristic) {
  if (s.heuristic && !allow_heuristic)
    throw UnsupportedInputError("sentence " + s.id + ": clause finding needs a dependency parse, not a heuristic tag");
  int root = s.root();
  if (root == 0) throw StructureError(s.id, "no ROOT token");
  return root;
}

// Coordinate-level heads reachable from the root.
std::vector<int> coordinate_heads(const Tree& tree, int root) {
  std::vector<int> coord;
  std::set<int> fragments;  // subject-less appositive-like heads
  if (int subj = tree.subject_of(root)) {
    for (int c : tree.children(subj)) {
      const auto& rel = tree.at(c).deprel;
      if ((rel == "APPOS" || (rel == "ACL" && !tree.is_finite_clause(c))) && tree.comma_set_off(c)) {
        coord.push_back(c);
        fragments.insert(c);
      }
    }
  }
  std::vector<int> frontier{root};
  frontier.insert(frontier.end(), coord.begin(), coord.end());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int h = frontier[i];
    for (int c : tree.children(h)) {
      if (tree.at(c).deprel != "CONJ") continue;
      const bool predicate = tree.is_predicate(c);
      if (!predicate && !fragments.count(h)) continue;
      if (!predicate) fragments.insert(c);
      coord.push_back(c);
      frontier.push_back(c);
    }
  }
  return coord;
}

std::vector<int> subordinate_candidates(const Tree& tree, int root) {
  std::vector<int> out;
  for (const auto& t : tree.sentence().tokens)
    if (t.index != root && is_subordinate_rel(t.deprel) && tree.is_finite_clause(t.index)) out.push_back(t.index);
  return out;
}

std::vector<Clause> assemble(const Tree& tree, int root, const std::map<int, ClauseKind>& heads) {
  std::map<int, std::vector<int>> members;
  for (const auto& t : tree.sentence().tokens) {
    int cur = t.index;
    while (cur != 0 && !heads.count(cur)) cur = tree.at(cur).head;
    if (cur == 0) cur = root;
    members[cur].push_back(t.index);
  }
  std::vector<Clause> out;
  for (const auto& [head, kind] : heads) {
    Clause c;
    c.token_indices = members[head];
    c.kind = kind;
    c.head_index = head;
    c.has_subject = tree.has_subject(head);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Clause& a, const Clause& b) { return a.first_index() < b.first_index(); });
  return out;
}

}  // namespace

std::vector<Clause> find_clauses(const ParsedSentence& sentence, bool allow_heuristic) {
  const int root = checked_root(sentence, allow_heuristic);
  const Tree tree(sentence);
  std::map<int, ClauseKind> heads{{root, ClauseKind::Main}};

  auto coord = coordinate_heads(tree, root);
  if (!coord.empty()) {
    for (int h : coord) heads.emplace(h, ClauseKind::Coordinate);
    return assemble(tree, root, heads);
  }

  auto candidates = subordinate_candidates(tree, root);
  const std::set<int> candidate_set(candidates.begin(), candidates.end());
  for (int c : candidates) {
    bool nested = false;
    for (int cur = tree.at(c).head; cur != 0 && cur != root; cur = tree.at(cur).head)
      if (candidate_set.count(cur)) {
        nested = true;
        break;
      }
    if (!nested) heads.emplace(c, ClauseKind::Subordinate);
  }
  return assemble(tree, root, heads);
}

std::vector<Clause> find_all_clauses(const ParsedSentence& sentence, bool allow_heuristic) {
  const int root = checked_root(sentence, allow_heuristic);
  const Tree tree(sentence);
  std::map<int, ClauseKind> heads{{root, ClauseKind::Main}};
  for (int h : coordinate_heads(tree, root)) heads.emplace(h, ClauseKind::Coordinate);
  auto subordinate = subordinate_candidates(tree, root);
  for (int h : subordinate) heads.emplace(h, ClauseKind::Subordinate);
  // Coordination inside subordinate clauses.
  for (std::size_t i = 0; i < subordinate.size(); ++i)
    for (int c : tree.children(subordinate[i]))
      if (tree.at(c).deprel == "CONJ" && tree.is_predicate(c) && heads.emplace(c, ClauseKind::Coordinate).second)
        subordinate.push_back(c);
  return assemble(tree, root, heads);
}

std::optional<std::vector<int>> extract_parent_subject(const ParsedSentence& sentence) {
  const int root = sentence.root();
  if (root == 0) return std::nullopt;
  const Tree tree(sentence);
  const int subj = tree.subject_of(root);
  if (subj == 0) return std::nullopt;
  return tree.noun_phrase(subj);
}

namespace {

// Token in the output under construction, remembering where it came from.
struct Draft {
  Token token;
  int source = 0;  // index in the source sentence, 0 for inserted tokens
  int segment = 0;
};

enum Segment { kClause = 0, kSubject = 1, kAntecedent = 2, kInserted = 3 };

Token synthetic(std::string form, std::string upos, std::string xpos, std::string feats, std::string deprel,
                std::string lemma) {
  Token t;
  t.form = std::move(form);
  t.lemma = std::move(lemma);
  t.upos = std::move(upos);
  t.xpos = std::move(xpos);
  t.feats = std::move(feats);
  t.deprel = std::move(deprel);
  return t;
}

bool fact_shaped(const std::vector<Token>& tokens) {
  bool verb = false;
  bool nominal = false;
  for (const auto& t : tokens) {
    if (t.upos == "VERB" || t.upos == "AUX") verb = true;
    if (!t.is_stop && one_of(t.upos, {"NOUN", "PROPN", "NUM", "PRON"})) nominal = true;
  }
  return verb && nominal;
}

}  // namespace

SimpleSentence rephrase_clause(const Clause& clause, const ParsedSentence& sentence,
                               const std::optional<std::vector<int>>& parent_subject,
                               const SimplifyOptions& options) {
  if (clause.token_indices.empty()) throw ContractViolation("rephrase_clause: empty clause");
  const Tree tree(sentence);
  const StopWordList& stops = options.stops ? *options.stops : StopWordList::bundled();
  const int head = clause.head_index;

  // Edge stripping.
  std::size_t lo = 0;
  std::size_t hi = clause.token_indices.size();
  auto strip_leading = [&](int i) {
    if (i == head) return false;
    const Token& t = tree.at(i);
    if (is_punctuation(t) || t.deprel == "CC" || t.deprel == "PUNCT") return true;
    if (t.head != head) return false;
    if (t.deprel == "MARK") return true;
    return t.deprel == "ADVMOD" && one_of(to_lower(t.form), {"when", "where", "while", "whereas", "whenever"});
  };
  auto strip_trailing = [&](int i) {
    if (i == head) return false;
    const Token& t = tree.at(i);
    if (t.deprel == "CC") return true;
    return (is_punctuation(t) || t.deprel == "PUNCT") && !is_sentence_final(t.form);
  };
  while (lo < hi && strip_leading(clause.token_indices[lo])) ++lo;
  while (hi > lo && strip_trailing(clause.token_indices[hi - 1])) --hi;
  std::vector<int> kept(clause.token_indices.begin() + static_cast<std::ptrdiff_t>(lo),
                        clause.token_indices.begin() + static_cast<std::ptrdiff_t>(hi));

  // Relative pronoun -> antecedent noun phrase.
  int pronoun = 0;
  std::vector<int> antecedent;
  if (clause.kind == ClauseKind::Subordinate && one_of(tree.at(head).deprel, {"RELCL", "ACL"}) && !kept.empty() &&
      kept.front() != head) {
    const Token& first = tree.at(kept.front());
    if (one_of(to_lower(first.form), {"who", "which", "that"}) && first.deprel != "MARK" &&
        tree.at(head).head != 0) {
      pronoun = first.index;
      antecedent = tree.noun_phrase(tree.at(head).head);
    }
  }
  bool has_subject = clause.has_subject;
  if (pronoun != 0 && is_subject_rel(tree.at(pronoun).deprel)) has_subject = true;

  std::vector<int> subject;
  if (clause.kind != ClauseKind::Main && !has_subject && parent_subject) {
    for (int i : *parent_subject)
      if (!std::binary_search(clause.token_indices.begin(), clause.token_indices.end(), i)) subject.push_back(i);
  }

  bool copula = false;
  if (!subject.empty()) {
    const Token& h = tree.at(head);
    const bool nominal = one_of(h.upos, {"NOUN", "PROPN", "PRON", "ADJ", "NUM", "DET", "X"}) || tree.is_participle(head);
    const bool finite = std::any_of(kept.begin(), kept.end(), [&](int i) { return tree.is_finite(i); });
    copula = nominal && !finite;
  }

  std::vector<Draft> drafts;
  for (int i : subject) drafts.push_back({tree.at(i), i, kSubject});
  if (copula)
    drafts.push_back({synthetic("is", "AUX", "VBZ", "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin", "COP", "be"),
                      0, kInserted});
  for (int i : kept) {
    if (i == pronoun) {
      for (int a : antecedent) drafts.push_back({tree.at(a), a, kAntecedent});
    } else {
      drafts.push_back({tree.at(i), i, kClause});
    }
  }
  if (drafts.empty() || !is_sentence_final(drafts.back().token.form))
    drafts.push_back({synthetic(".", "PUNCT", ".", "", "PUNCT", "."), 0, kInserted});

  // Renumber and rebuild the tree with the clause head as ROOT.
  std::map<int, int> index_in[3];
  for (std::size_t k = 0; k < drafts.size(); ++k)
    if (drafts[k].source != 0 && drafts[k].segment < kInserted)
      index_in[drafts[k].segment][drafts[k].source] = static_cast<int>(k) + 1;
  const int new_head = index_in[kClause].at(head);
  auto mapped = [&](int segment, int source, int fallback) {
    auto it = index_in[segment].find(source);
    return it == index_in[segment].end() ? fallback : it->second;
  };
  const int subject_head = subject.empty() ? 0 : mapped(kSubject, tree.subject_of(sentence.root()), 0);
  const int antecedent_head = antecedent.empty() ? 0 : mapped(kAntecedent, tree.at(head).head, 0);

  std::vector<Token> tokens;
  tokens.reserve(drafts.size());
  for (std::size_t k = 0; k < drafts.size(); ++k) {
    Token t = drafts[k].token;
    t.index = static_cast<int>(k) + 1;
    const int src = drafts[k].source;
    switch (drafts[k].segment) {
      case kClause:
        if (src == head) {
          t.head = 0;
          t.deprel = "ROOT";
        } else if (t.head == pronoun && pronoun != 0) {
          t.head = antecedent_head ? antecedent_head : new_head;
        } else {
          t.head = mapped(kClause, t.head, new_head);
        }
        break;
      case kSubject:
        if (t.index == subject_head || subject_head == 0) {
          t.head = new_head;
          if (!is_subject_rel(t.deprel)) t.deprel = "NSUBJ";
        } else {
          t.head = mapped(kSubject, t.head, subject_head);
        }
        break;
      case kAntecedent:
        if (t.index == antecedent_head) {
          t.head = mapped(kClause, tree.at(pronoun).head, new_head);
          t.deprel = tree.at(pronoun).deprel;
        } else {
          t.head = mapped(kAntecedent, t.head, antecedent_head);
        }
        break;
      default:
        t.head = new_head;
        t.is_stop = is_punctuation(t) || stops.contains(t.form);
        break;
    }
    tokens.push_back(std::move(t));
  }
  if (auto& f = tokens.front().form; !f.empty())
    f[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(f[0])));

  SimpleSentence out;
  out.tokens = std::move(tokens);
  out.text = detokenize(std::span<const Token>(out.tokens));
  out.subject_propagated = !subject.empty();
  out.fact_shaped = fact_shaped(out.tokens);

  ParsedSentence check = out.as_sentence(sentence.id);
  try {
    validate_tree(check);
  } catch (const StructureError& e) {
    throw InternalInvariantError(std::string("rephrase_clause produced an invalid tree: ") + e.what());
  }
  out.sc_report = score(check, options.method, options.weights);
  return out;
}

namespace {

struct WorkItem {
  ParsedSentence sentence;
  ComplexityReport report;
  std::vector<ProvenanceStep> path;
  bool subject_propagated = false;
};

bool same_forms(const std::vector<Token>& a, const std::vector<Token>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Token& x, const Token& y) { return x.form == y.form; });
}

}  // namespace

SimplificationResult simplify_controlled(const ParsedSentence& sentence, const SimplifyOptions& options) {
  options.weights.validate();
  const StopWordList& stops = options.stops ? *options.stops : StopWordList::bundled();

  SimplificationResult result;
  result.source_id = sentence.id;
  result.source_text = sentence.text;

  auto emit = [&](WorkItem& item, bool irreducible) {
    SimpleSentence out;
    out.text = item.sentence.text;
    out.tokens = std::move(item.sentence.tokens);
    out.sc_report = item.report;
    out.subject_propagated = item.subject_propagated;
    out.irreducible = irreducible;
    out.fact_shaped = fact_shaped(out.tokens);
    if (irreducible) result.irreducible.push_back(result.outputs.size());
    result.outputs.push_back(std::move(out));
    result.provenance.push_back(std::move(item.path));
  };

  std::vector<WorkItem> stack;
  {
    WorkItem first;
    first.sentence = mark_stopwords(sentence, stops);
    first.report = score(first.sentence, options.method, options.weights);
    stack.push_back(std::move(first));
  }

  int iterations = 0;
  while (!stack.empty()) {
    if (++iterations > options.max_iterations)
      throw InternalInvariantError("sentence " + sentence.id + ": simplification exceeded " +
                                   std::to_string(options.max_iterations) + " iterations");
    WorkItem item = std::move(stack.back());
    stack.pop_back();
    if (!item.report.is_complex) {
      emit(item, false);
      continue;
    }

    const auto clauses = find_clauses(item.sentence, options.allow_heuristic);
    const auto subject = extract_parent_subject(item.sentence);
    std::vector<WorkItem> children;
    for (std::size_t k = 0; k < clauses.size(); ++k) {
      SimpleSentence fragment = rephrase_clause(clauses[k], item.sentence, subject, options);
      WorkItem child;
      child.path = item.path;
      child.path.push_back({static_cast<int>(k), clauses[k].kind});
      child.subject_propagated = item.subject_propagated || fragment.subject_propagated;
      const std::string id = item.sentence.id + "." + std::to_string(k + 1);
      if (options.reparse) {
        child.sentence = mark_stopwords(options.reparse(fragment.text, id), stops);
        child.sentence.id = id;
        child.report = score(child.sentence, options.method, options.weights);
      } else {
        child.sentence = fragment.as_sentence(id);
        child.report = fragment.sc_report;
      }
      children.push_back(std::move(child));
    }

    if (children.size() == 1 && same_forms(children.front().sentence.tokens, item.sentence.tokens)) {
      emit(item, true);
      continue;
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return result;
}

}  // namespace synsim
