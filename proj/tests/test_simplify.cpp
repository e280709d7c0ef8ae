#include <doctest.h>

#include <numeric>
#include <set>

#include "support/generator.hpp"
#include "synsim/conllu.hpp"
#include "synsim/errors.hpp"
#include "synsim/simplify.hpp"
#include "synsim/tagger.hpp"
#include "test_helpers.hpp"

using namespace synsim;

namespace {

std::string span_text(const ParsedSentence& s, const std::vector<int>& idx) {
  std::vector<std::string> forms;
  for (int i : idx) forms.push_back(s.at(i).form);
  return detokenize(std::span<const std::string>(forms));
}

std::vector<std::string> texts(const SimplificationResult& r) {
  std::vector<std::string> out;
  for (const auto& o : r.outputs) out.push_back(o.text);
  return out;
}

std::set<std::string> content_words(const std::vector<Token>& tokens) {
  std::set<std::string> out;
  for (const auto& t : tokens)
    if (!t.is_stop) out.insert(to_lower(t.form));
  return out;
}

}  // namespace

TEST_CASE("find_clauses on a single clause") {
  auto clauses = find_clauses(testing::fixture("dogs"));
  REQUIRE(clauses.size() == 1);
  CHECK(clauses[0].kind == ClauseKind::Main);
  CHECK(clauses[0].head_index == 2);
  CHECK(clauses[0].token_indices == std::vector<int>{1, 2, 3});
  CHECK(clauses[0].has_subject);
}

TEST_CASE("find_clauses on the FIFA sentence") {
  auto s = testing::fixture("fifa", "fifa.conllu");
  auto clauses = find_clauses(s);
  REQUIRE(clauses.size() == 3);
  CHECK(clauses[0].kind == ClauseKind::Main);
  CHECK(clauses[0].has_subject);
  CHECK(span_text(s, clauses[0].token_indices) == "FIFA World Cup 2022 is taking place in Qatar.");
  CHECK(clauses[1].kind == ClauseKind::Coordinate);
  CHECK_FALSE(clauses[1].has_subject);
  CHECK(span_text(s, clauses[1].token_indices) == ", the first to be held in the Arab world");
  CHECK(clauses[2].kind == ClauseKind::Coordinate);
  CHECK_FALSE(clauses[2].has_subject);
  CHECK(span_text(s, clauses[2].token_indices) == ", and the second held in entire Asia");
}

TEST_CASE("find_clauses on an adverbial clause") {
  auto s = testing::fixture("because");
  auto clauses = find_clauses(s);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0].kind == ClauseKind::Main);
  CHECK(clauses[0].has_subject);
  CHECK(clauses[1].kind == ClauseKind::Subordinate);
  CHECK(clauses[1].has_subject);
  CHECK(span_text(s, clauses[1].token_indices) == "because it rained");
}

TEST_CASE("find_clauses splits coordination before subordination") {
  auto s = testing::fixture("nested");
  auto clauses = find_clauses(s);
  REQUIRE(clauses.size() == 2);
  CHECK(clauses[0].kind == ClauseKind::Main);
  CHECK(clauses[1].kind == ClauseKind::Coordinate);
  CHECK(span_text(s, clauses[0].token_indices) == "A, which was long, happened.");
}

TEST_CASE("find_clauses leaves noun coordination alone") {
  auto clauses = find_clauses(testing::fixture("np-coord"));
  CHECK(clauses.size() == 1);
}

TEST_CASE("clauses are disjoint, cover the sentence and are ordered") {
  testing::SentenceGenerator gen(31);
  for (int i = 0; i < 300; ++i) {
    auto s = mark_stopwords(gen.next("g"), StopWordList::bundled());
    for (const auto& clauses : {find_clauses(s), find_all_clauses(s)}) {
      std::vector<int> seen;
      int last_first = 0;
      for (const auto& c : clauses) {
        REQUIRE_FALSE(c.token_indices.empty());
        CHECK(std::binary_search(c.token_indices.begin(), c.token_indices.end(), c.head_index));
        CHECK(c.first_index() > last_first);
        last_first = c.first_index();
        seen.insert(seen.end(), c.token_indices.begin(), c.token_indices.end());
      }
      std::sort(seen.begin(), seen.end());
      std::vector<int> all(s.size());
      std::iota(all.begin(), all.end(), 1);
      CHECK(seen == all);
    }
  }
}

TEST_CASE("find_clauses input checks") {
  CHECK_THROWS_AS(find_clauses(tag_plain_text("Dogs bark.")), UnsupportedInputError);
  CHECK_NOTHROW(find_clauses(tag_plain_text("Dogs bark."), true));
  ParsedSentence rootless;
  rootless.id = "r";
  rootless.tokens.push_back(Token{1, "x", "", "X", "", "", 1, "DEP", "", "", false});
  CHECK_THROWS_AS(find_clauses(rootless), StructureError);
}

TEST_CASE("extract_parent_subject") {
  auto fifa = testing::fixture("fifa", "fifa.conllu");
  auto subj = extract_parent_subject(fifa);
  REQUIRE(subj);
  CHECK(span_text(fifa, *subj) == "FIFA World Cup 2022");

  auto relcl = testing::fixture("relcl");
  subj = extract_parent_subject(relcl);
  REQUIRE(subj);
  CHECK(span_text(relcl, *subj) == "The tall man");

  auto rained = read_conllu(std::string_view(
      "1\tRained\train\tVERB\t_\t_\t0\troot\t_\t_\n2\tall\tall\tDET\t_\t_\t3\tdet\t_\t_\n"
      "3\tday\tday\tNOUN\t_\t_\t1\tobl:tmod\t_\t_\n4\t.\t.\tPUNCT\t_\t_\t1\tpunct\t_\t_\n"))[0];
  CHECK_FALSE(extract_parent_subject(rained));
}

TEST_CASE("rephrase_clause") {
  auto fifa = testing::fixture("fifa", "fifa.conllu");
  auto clauses = find_clauses(fifa);
  auto subj = extract_parent_subject(fifa);

  auto main = rephrase_clause(clauses[0], fifa, subj);
  CHECK(main.text == "FIFA World Cup 2022 is taking place in Qatar.");
  CHECK_FALSE(main.subject_propagated);

  auto first = rephrase_clause(clauses[1], fifa, subj);
  CHECK(first.text == "FIFA World Cup 2022 is the first to be held in the Arab world.");
  CHECK(first.subject_propagated);
  CHECK(first.fact_shaped);
  CHECK_NOTHROW(validate_tree(first.as_sentence("x")));

  auto second = rephrase_clause(clauses[2], fifa, subj);
  CHECK(second.text == "FIFA World Cup 2022 is the second held in entire Asia.");

  SUBCASE("subject present, no rewrite") {
    auto s = testing::fixture("because");
    auto cs = find_clauses(s);
    CHECK(rephrase_clause(cs[1], s, extract_parent_subject(s)).text == "It rained.");
    CHECK(rephrase_clause(cs[0], s, extract_parent_subject(s)).text == "She left.");
  }
  SUBCASE("relative pronoun replaced by its antecedent") {
    auto s = testing::fixture("relcl");
    auto cs = find_clauses(s);
    REQUIRE(cs.size() == 2);
    CHECK(rephrase_clause(cs[0], s, extract_parent_subject(s)).text == "The tall man waved.");
    auto sub = rephrase_clause(cs[1], s, extract_parent_subject(s));
    CHECK(sub.text == "The tall man smiled.");
    CHECK_FALSE(sub.subject_propagated);
  }
  SUBCASE("leading subordinator adverb stripped") {
    auto s = testing::fixture("when");
    auto cs = find_clauses(s);
    REQUIRE(cs.size() == 2);
    CHECK(rephrase_clause(cs[0], s, extract_parent_subject(s)).text == "He retired.");
    CHECK(rephrase_clause(cs[1], s, extract_parent_subject(s)).text == "Shepard moved to Texas.");
  }
  SUBCASE("participial fragment gets a copula") {
    auto s = testing::fixture("participle");
    auto cs = find_clauses(s);
    REQUIRE(cs.size() == 2);
    CHECK(rephrase_clause(cs[1], s, extract_parent_subject(s)).text == "Elliot See is born in Dallas.");
  }
  SUBCASE("empty clause") {
    Clause empty;
    CHECK_THROWS_AS(rephrase_clause(empty, fifa, subj), ContractViolation);
  }
}

TEST_CASE("simplify_controlled examples") {
  SUBCASE("FIFA") {
    auto r = simplify_controlled(testing::fixture("fifa", "fifa.conllu"));
    CHECK(texts(r) == std::vector<std::string>{"FIFA World Cup 2022 is taking place in Qatar.",
                                               "FIFA World Cup 2022 is the first to be held in the Arab world.",
                                               "FIFA World Cup 2022 is the second held in entire Asia."});
    CHECK(r.irreducible.empty());
    REQUIRE(r.provenance.size() == 3);
    CHECK(r.provenance[1].size() == 1);
    CHECK(r.provenance[1][0].kind == ClauseKind::Coordinate);
  }
  SUBCASE("already simple") {
    auto s = testing::fixture("dogs");
    auto r = simplify_controlled(s);
    CHECK(texts(r) == std::vector<std::string>{"Dogs bark."});
    CHECK(r.irreducible.empty());
    CHECK(r.provenance[0].empty());
  }
  SUBCASE("two levels of splitting") {
    auto r = simplify_controlled(testing::fixture("nested"));
    CHECK(texts(r) == std::vector<std::string>{"A happened.", "A was long.", "B happened.", "B was long."});
    REQUIRE(r.provenance.size() == 4);
    CHECK(r.provenance[1].size() == 2);
    CHECK(r.provenance[1][0].kind == ClauseKind::Main);
    CHECK(r.provenance[1][1].kind == ClauseKind::Subordinate);
    CHECK(r.provenance[3][0].kind == ClauseKind::Coordinate);
  }
  SUBCASE("verb phrase coordination") {
    auto r = simplify_controlled(testing::fixture("vp-coord"));
    CHECK(texts(r) == std::vector<std::string>{"John ate.", "John left."});
    CHECK(r.outputs[1].subject_propagated);
  }
  SUBCASE("irreducible") {
    auto r = simplify_controlled(testing::fixture("long-simple"));
    REQUIRE(r.outputs.size() == 1);
    CHECK(r.outputs[0].irreducible);
    CHECK(r.irreducible == std::vector<std::size_t>{0});
    CHECK(r.outputs[0].sc_report.is_complex);
  }
  SUBCASE("heuristic input") {
    CHECK_THROWS_AS(simplify_controlled(tag_plain_text("The enormous ancient stone bridge crossed the wide muddy river "
                                                       "near the old village and the farms.")),
                    UnsupportedInputError);
    SimplifyOptions opts;
    opts.allow_heuristic = true;
    auto r = simplify_controlled(tag_plain_text("Dogs bark."), opts);
    CHECK(r.outputs.size() == 1);
  }
  SUBCASE("iteration cap") {
    SimplifyOptions opts;
    opts.max_iterations = 2;
    CHECK_THROWS_AS(simplify_controlled(testing::fixture("nested"), opts), InternalInvariantError);
  }
  SUBCASE("reparse callback") {
    int calls = 0;
    SimplifyOptions opts;
    opts.reparse = [&](const std::string& text, const std::string& id) {
      ++calls;
      auto s = tag_plain_text(text);
      s.id = id;
      s.heuristic = false;
      return s;
    };
    auto r = simplify_controlled(testing::fixture("fifa", "fifa.conllu"), opts);
    CHECK(calls == 3);
    CHECK(r.outputs.size() == 3);
  }
}

TEST_CASE("simplify_controlled invariants on generated sentences") {
  testing::SentenceGenerator gen(41);
  const auto& stops = StopWordList::bundled();
  for (int i = 0; i < 300; ++i) {
    auto s = mark_stopwords(gen.next("g" + std::to_string(i)), stops);
    INFO(s.text);
    auto r = simplify_controlled(s);
    REQUIRE_FALSE(r.outputs.empty());
    CHECK(r.provenance.size() == r.outputs.size());

    const auto source = content_words(s.tokens);
    std::set<std::string> covered;
    for (const auto& o : r.outputs) {
      CHECK((!o.sc_report.is_complex || o.irreducible));
      CHECK(is_sentence_final(o.tokens.back().form));
      for (const auto& w : content_words(o.tokens)) {
        CHECK(source.count(w) == 1);
        covered.insert(w);
      }
      if (!o.irreducible) {
        // Idempotence.
        auto again = simplify_controlled(o.as_sentence("again"));
        REQUIRE(again.outputs.size() == 1);
        CHECK(again.outputs[0].text == o.text);
      }
    }
    CHECK(covered == source);
  }
}
