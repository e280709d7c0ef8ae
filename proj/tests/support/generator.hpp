#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "synsim/sentence.hpp"

namespace synsim::testing {

// Random English-like sentences with gold dependency trees: clauses with
// subjects, objects and obliques, plus relative clauses, adverbial clauses,
// appositives and clause or verb-phrase coordination, nested up to `max_depth`.
class SentenceGenerator {
 public:
  explicit SentenceGenerator(unsigned seed, int max_depth = 3, std::size_t max_tokens = 40)
      : rng_(seed), max_depth_(max_depth), max_tokens_(max_tokens) {}

  ParsedSentence next(const std::string& id) {
    for (;;) {
      tokens_.clear();
      const int root = clause(0);
      tokens_[static_cast<std::size_t>(root - 1)].head = 0;
      tokens_[static_cast<std::size_t>(root - 1)].deprel = "ROOT";
      punct(".", root);
      if (tokens_.size() > max_tokens_) continue;
      ParsedSentence s;
      s.id = id;
      s.tokens = tokens_;
      s.text = detokenize(std::span<const Token>(s.tokens));
      return s;
    }
  }

 private:
  static constexpr std::array kNouns{"pilot", "river", "museum", "company", "village", "engine", "painter",
                                     "bridge", "student", "orchestra", "airport", "novel", "garden", "team"};
  static constexpr std::array kNames{"Alice", "Texas", "Lahore", "Bakewell", "Aarhus", "Wheeler", "Qatar", "Baku"};
  static constexpr std::array kAdjs{"old", "large", "famous", "quiet", "northern", "modern", "small", "green"};
  static constexpr std::array kVerbs{"visited", "built", "joined", "painted", "crossed", "founded", "studied",
                                     "described", "praised", "served"};
  static constexpr std::array kPreps{"in", "near", "during", "across"};
  static constexpr std::array kMarks{"because", "although", "after", "before"};

  template <std::size_t N>
  const char* pick(const std::array<const char*, N>& words) {
    return words[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
  }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  int add(std::string form, std::string upos, std::string deprel, std::string feats = "") {
    Token t;
    t.index = static_cast<int>(tokens_.size()) + 1;
    t.form = std::move(form);
    t.lemma = to_lower(t.form);
    t.upos = std::move(upos);
    t.feats = std::move(feats);
    t.deprel = canonical_deprel(deprel);
    t.head = -1;
    tokens_.push_back(std::move(t));
    return static_cast<int>(tokens_.size());
  }

  void attach(int dep, int head) { tokens_[static_cast<std::size_t>(dep - 1)].head = head; }

  void punct(const char* form, int head) { attach(add(form, "PUNCT", "punct"), head); }

  int verb() { return add(pick(kVerbs), "VERB", "dep", "VerbForm=Fin"); }

  // Noun phrase; returns its head. Optional relative clause when depth allows.
  int noun_phrase(int depth, bool allow_clause) {
    int head = 0;
    if (chance(0.3)) {
      head = add(pick(kNames), "PROPN", "dep");
    } else {
      const int det = add("the", "DET", "det");
      std::vector<int> adjs;
      while (adjs.size() < 3 && chance(adjs.empty() ? 0.4 : 0.3)) adjs.push_back(add(pick(kAdjs), "ADJ", "amod"));
      head = add(pick(kNouns), "NOUN", "dep");
      attach(det, head);
      for (int adj : adjs) attach(adj, head);
    }
    if (allow_clause && depth < max_depth_ && chance(0.25)) {
      const int comma = add(",", "PUNCT", "punct");
      const int rel = add(chance(0.5) ? "which" : "who", "PRON", "nsubj");
      int pred = 0;
      if (chance(0.4)) {
        const int cop = add("was", "AUX", "cop", "VerbForm=Fin");
        pred = add(pick(kAdjs), "ADJ", "acl:relcl");
        attach(cop, pred);
      } else {
        pred = verb();
        tokens_[static_cast<std::size_t>(pred - 1)].deprel = "ACL";
        const int obj = noun_phrase(depth + 1, false);
        tokens_[static_cast<std::size_t>(obj - 1)].deprel = "OBJ";
        attach(obj, pred);
      }
      attach(comma, pred);
      attach(rel, pred);
      attach(pred, head);
      punct(",", pred);
    }
    return head;
  }

  // Finite clause; returns the verb. The caller sets the verb's head/deprel.
  int clause(int depth) {
    const int subj = noun_phrase(depth, true);
    tokens_[static_cast<std::size_t>(subj - 1)].deprel = "NSUBJ";
    int appos = 0;
    if (depth < max_depth_ && chance(0.15)) {
      const int comma = add(",", "PUNCT", "punct");
      const int det = add("the", "DET", "det");
      appos = add(pick(kNouns), "NOUN", "appos");
      attach(comma, appos);
      attach(det, appos);
      attach(appos, subj);
      punct(",", appos);
    }
    const int v = verb();
    attach(subj, v);
    if (chance(0.7)) {
      const int obj = noun_phrase(depth, true);
      tokens_[static_cast<std::size_t>(obj - 1)].deprel = "OBJ";
      attach(obj, v);
    }
    for (int k = 0; k < 3 && chance(0.4); ++k) {
      const int prep = add(pick(kPreps), "ADP", "case");
      const int obl = noun_phrase(depth, false);
      tokens_[static_cast<std::size_t>(obl - 1)].deprel = "OBL";
      attach(prep, obl);
      attach(obl, v);
    }
    if (depth < max_depth_ && chance(0.3)) {
      const int mark = add(pick(kMarks), "SCONJ", "mark");
      const int sub = clause(depth + 1);
      tokens_[static_cast<std::size_t>(sub - 1)].deprel = "ADVCL";
      attach(mark, sub);
      attach(sub, v);
    }
    if (depth < max_depth_ && chance(0.35)) {
      const int comma = chance(0.5) ? add(",", "PUNCT", "punct") : 0;
      const int cc = add("and", "CCONJ", "cc");
      int conj = 0;
      if (chance(0.5)) {
        conj = clause(depth + 1);
      } else {
        conj = verb();
        const int obj = noun_phrase(depth + 1, false);
        tokens_[static_cast<std::size_t>(obj - 1)].deprel = "OBJ";
        attach(obj, conj);
      }
      tokens_[static_cast<std::size_t>(conj - 1)].deprel = "CONJ";
      if (comma) attach(comma, conj);
      attach(cc, conj);
      attach(conj, v);
    }
    return v;
  }

  std::mt19937 rng_;
  int max_depth_;
  std::size_t max_tokens_;
  std::vector<Token> tokens_;
};

}  // namespace synsim::testing
