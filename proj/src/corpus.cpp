#include "synsim/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "synsim/conllu.hpp"
#include "synsim/errors.hpp"
#include "synsim/parallel.hpp"
#include "synsim/simplify.hpp"

namespace synsim {

using nlohmann::json;

void RunConfig::validate() const {
  if (parallelism == 0) throw ConfigError("parallelism must be at least 1");
  weights.validate();
}

namespace {

std::string required_string(const json& obj, const char* field, std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end()) throw SchemaError(line, field, "missing");
  if (!it->is_string()) throw SchemaError(line, field, "expected a string");
  return it->get<std::string>();
}

std::vector<std::string> string_array(const json& obj, const char* field, std::size_t line, bool required) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    if (required) throw SchemaError(line, field, "missing");
    return {};
  }
  if (!it->is_array()) throw SchemaError(line, field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : *it) {
    if (!v.is_string()) throw SchemaError(line, field, "expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

ParsedSentence embedded_parse(const std::string& block, const std::string& id, std::size_t line) {
  std::vector<ParsedSentence> parsed;
  try {
    parsed = read_conllu(std::string_view(block));
  } catch (const Error& e) {
    throw ParseError(line, "entry " + id + ": embedded CoNLL-U: " + e.what());
  }
  if (parsed.size() != 1)
    throw ParseError(line, "entry " + id + ": expected one embedded CoNLL-U sentence, got " +
                               std::to_string(parsed.size()));
  parsed.front().id = id;
  return std::move(parsed.front());
}

ParsedSentence parse_for(const std::optional<ParsedSentence>& gold, const std::string& text, const std::string& id,
                         const RunConfig& config, const StopWordList& stops) {
  if (gold) return mark_stopwords(*gold, stops);
  if (!config.parser) throw ConfigError("entry " + id + " has no parse and no parser is configured");
  ParsedSentence parsed = config.parser(text, id);
  if (parsed.id.empty()) parsed.id = id;
  return mark_stopwords(std::move(parsed), stops);
}

}  // namespace

std::vector<CorpusEntry> load_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(line, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(line, "expected a JSON object");

    CorpusEntry e;
    e.id = required_string(obj, "id", line);
    e.complex_text = required_string(obj, "complex", line);
    e.simple_texts = string_array(obj, "simple", line, true);
    if (obj.contains("conllu_complex")) {
      e.complex_parse = embedded_parse(required_string(obj, "conllu_complex", line), e.id, line);
    }
    if (obj.contains("conllu_simple")) {
      auto blocks = string_array(obj, "conllu_simple", line, true);
      if (blocks.size() != e.simple_texts.size())
        throw SchemaError(line, "conllu_simple", "length differs from 'simple'");
      std::vector<ParsedSentence> parses;
      for (std::size_t k = 0; k < blocks.size(); ++k)
        parses.push_back(embedded_parse(blocks[k], e.id + ".s" + std::to_string(k + 1), line));
      e.simple_parses = std::move(parses);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus " + path.string());
  return load_corpus(in);
}

void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  for (const auto& e : entries) {
    nlohmann::ordered_json obj;
    obj["id"] = e.id;
    obj["complex"] = e.complex_text;
    obj["simple"] = e.simple_texts;
    if (e.complex_parse) obj["conllu_complex"] = to_conllu(*e.complex_parse);
    if (e.simple_parses) {
      auto& arr = obj["conllu_simple"] = nlohmann::ordered_json::array();
      for (const auto& p : *e.simple_parses) arr.push_back(to_conllu(p));
    }
    out << obj.dump() << '\n';
  }
}

EvalReport evaluate_sc(const std::vector<CorpusEntry>& corpus, const RunConfig& config) {
  config.validate();
  if (corpus.empty()) throw UndefinedMetricError("accuracy over an empty corpus");
  const StopWordList& stops = config.stops ? *config.stops : StopWordList::bundled();

  auto per_entry = parallel_map(corpus.size(), config.parallelism, [&](std::size_t i) {
    const CorpusEntry& e = corpus[i];
    std::vector<Label> gold{Label::Complex};
    std::vector<Label> predicted;
    auto label = [&](const ParsedSentence& s) {
      return score(s, config.method, config.weights).is_complex ? Label::Complex : Label::Simple;
    };
    predicted.push_back(label(parse_for(e.complex_parse, e.complex_text, e.id, config, stops)));
    for (std::size_t k = 0; k < e.simple_texts.size(); ++k) {
      std::optional<ParsedSentence> gold_parse;
      if (e.simple_parses) gold_parse = (*e.simple_parses)[k];
      gold.push_back(Label::Simple);
      predicted.push_back(
          label(parse_for(gold_parse, e.simple_texts[k], e.id + ".s" + std::to_string(k + 1), config, stops)));
    }
    return confusion(gold, predicted);
  });

  EvalReport report;
  report.method = std::string(to_string(config.method));
  ConfusionMatrix total;
  for (const auto& m : per_entry) total += m;
  report.confusion = total;
  report.accuracy = total.accuracy();
  report.n_complex = corpus.size();
  return report;
}

EvalReport evaluate_synsim(const std::vector<CorpusEntry>& corpus, const RunConfig& config) {
  config.validate();
  if (corpus.empty()) throw UndefinedMetricError("similarity over an empty corpus");
  const StopWordList& stops = config.stops ? *config.stops : StopWordList::bundled();

  struct Outcome {
    bool ok = false;
    std::string error;
    std::size_t outputs = 0;
    double cosine = 0;
    double jaccard = 0;
  };

  SimplifyOptions options;
  options.method = config.method;
  options.weights = config.weights;
  options.stops = &stops;

  auto outcomes = parallel_map(corpus.size(), config.parallelism, [&](std::size_t i) {
    const CorpusEntry& e = corpus[i];
    Outcome o;
    try {
      const auto parsed = parse_for(e.complex_parse, e.complex_text, e.id, config, stops);
      const auto result = simplify_controlled(parsed, options);
      std::vector<std::string> texts;
      for (const auto& s : result.outputs) texts.push_back(s.text);
      const SentenceSet produced(std::move(texts));
      const SentenceSet gold(e.simple_texts);
      o.cosine = cosine_similarity(gold, produced);
      o.jaccard = jaccard_similarity(gold, produced);
      o.outputs = result.outputs.size();
      o.ok = true;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      o.error = ex.what();
    }
    return o;
  });

  EvalReport report;
  report.method = std::string(to_string(config.method));
  double cosine = 0, jaccard = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (!o.ok) {
      report.failures.push_back({corpus[i].id, o.error});
      continue;
    }
    ++report.n_complex;
    report.n_simplified += o.outputs;
    cosine += o.cosine;
    jaccard += o.jaccard;
  }
  if (report.n_complex > 0) {
    const auto n = static_cast<double>(report.n_complex);
    report.cosine = cosine / n;
    report.jaccard = jaccard / n;
    report.avg_simplified_per_sentence = static_cast<double>(report.n_simplified) / n;
  }
  return report;
}

}  // namespace synsim
