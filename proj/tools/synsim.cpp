#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "synsim/complexity.hpp"
#include "synsim/conllu.hpp"
#include "synsim/corpus.hpp"
#include "synsim/errors.hpp"
#include "synsim/parallel.hpp"
#include "synsim/serialize.hpp"
#include "synsim/simplify.hpp"
#include "synsim/stopwords.hpp"
#include "synsim/tagger.hpp"

namespace {

using namespace synsim;

constexpr int kUsageError = 2;
constexpr int kProcessingError = 1;

struct Flags {
  std::string input = "-";
  std::string format = "conllu";
  bool heuristic = false;
  std::string method = "dep";
  std::string weights;
  std::optional<double> threshold;
  std::string output;
  std::size_t jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A failure tied to one input sentence.
struct SentenceFailure {
  std::string id;
  std::string message;
};

ScoringWeights parse_weights(const Flags& f) {
  ScoringWeights w;
  if (!f.weights.empty()) {
    std::vector<double> v;
    std::stringstream ss(f.weights);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw UsageError("--weights: '" + part + "' is not a number");
      }
    }
    if (v.size() != 3) throw UsageError("--weights expects three comma-separated values (token,verb,conjunction)");
    w.token_weight = v[0];
    w.verb_weight = v[1];
    w.conjunction_weight = v[2];
  }
  if (f.threshold) w.threshold = *f.threshold;
  try {
    w.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return w;
}

ScoringMethod parse_method(const Flags& f) {
  try {
    return parse_scoring_method(f.method);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

const StopWordList& stop_words() {
  static const StopWordList list = [] {
    if (const char* path = std::getenv("SYNSIM_STOPWORDS"); path && *path) return StopWordList::from_file(path);
    return StopWordList::bundled();
  }();
  return list;
}

// Splits a line of running text at . ! ? followed by whitespace and a capital.
std::vector<std::string> split_sentences(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '.' && line[i] != '!' && line[i] != '?') continue;
    std::size_t j = i + 1;
    while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j == i + 1 || j >= line.size() || !std::isupper(static_cast<unsigned char>(line[j]))) continue;
    out.push_back(line.substr(start, i + 1 - start));
    start = j;
    i = j - 1;
  }
  if (line.find_first_not_of(" \t\r", start) != std::string::npos) out.push_back(line.substr(start));
  return out;
}

// Yields parsed sentences from CoNLL-U or, with --heuristic, plain text.
class SentenceSource {
 public:
  SentenceSource(std::istream& in, const Flags& f) : in_(in), text_(f.format == "text"), conllu_(in) {}

  std::optional<ParsedSentence> next() {
    if (!text_) {
      auto s = conllu_.next();
      if (s) *s = mark_stopwords(std::move(*s), stop_words());
      return s;
    }
    while (pending_.empty()) {
      std::string line;
      if (!std::getline(in_, line)) return std::nullopt;
      for (auto& s : split_sentences(line)) pending_.push_back(std::move(s));
    }
    std::string text = std::move(pending_.front());
    pending_.erase(pending_.begin());
    ParsedSentence s = tag_plain_text(text, stop_words());
    s.id = "s" + std::to_string(++count_);
    return s;
  }

 private:
  std::istream& in_;
  bool text_;
  ConlluReader conllu_;
  std::vector<std::string> pending_;
  std::size_t count_ = 0;
};

std::istream& open_input(const Flags& f, std::ifstream& file) {
  if (f.input == "-") return std::cin;
  file.open(f.input);
  if (!file) throw UsageError("cannot open input " + f.input);
  return file;
}

std::ostream& open_output(const Flags& f, std::ofstream& file) {
  if (f.output.empty() || f.output == "-") return std::cout;
  file.open(f.output);
  if (!file) throw UsageError("cannot open output " + f.output);
  return file;
}

using Processor = std::function<std::string(const ParsedSentence&)>;

// Processes sentences in batches of jobs*16 so memory stays bounded while
// output order equals input order.
int stream(const Flags& f, const Processor& process) {
  std::ifstream in_file;
  std::ofstream out_file;
  std::istream& in = open_input(f, in_file);
  std::ostream& out = open_output(f, out_file);
  SentenceSource source(in, f);
  const std::size_t batch_size = f.jobs * 16;

  struct Item {
    std::string text;
    std::optional<SentenceFailure> failure;
  };

  for (;;) {
    std::vector<ParsedSentence> batch;
    std::optional<SentenceFailure> read_failure;
    try {
      while (batch.size() < batch_size) {
        auto s = source.next();
        if (!s) break;
        batch.push_back(std::move(*s));
      }
    } catch (const std::exception& e) {
      read_failure = SentenceFailure{batch.empty() ? "(input)" : "after " + batch.back().id, e.what()};
    }
    auto items = parallel_map(batch.size(), f.jobs, [&](std::size_t i) {
      Item item;
      try {
        item.text = process(batch[i]);
      } catch (const std::exception& e) {
        item.failure = SentenceFailure{batch[i].id, e.what()};
      }
      return item;
    });
    for (const auto& item : items) {
      if (item.failure) {
        out.flush();
        std::cerr << "synsim: sentence " << item.failure->id << ": " << item.failure->message << '\n';
        return kProcessingError;
      }
      out << item.text << '\n';
    }
    if (read_failure) {
      out.flush();
      std::cerr << "synsim: " << read_failure->id << ": " << read_failure->message << '\n';
      return kProcessingError;
    }
    if (batch.size() < batch_size) break;
  }
  out.flush();
  return 0;
}

int run_score(const Flags& f) {
  const auto method = parse_method(f);
  const auto weights = parse_weights(f);
  return stream(f, [&](const ParsedSentence& s) {
    const auto report = score(s, method, weights);
    std::optional<SentenceClass> cls;
    if (!s.heuristic) cls = classify(s, find_all_clauses(s));
    return to_json(s.id, report, cls).dump();
  });
}

int run_classify(const Flags& f) {
  const auto method = parse_method(f);
  const auto weights = parse_weights(f);
  return stream(f, [&](const ParsedSentence& s) {
    const auto cls = classify(s, find_all_clauses(s, true));
    return to_json(s.id, cls, score(s, method, weights)).dump();
  });
}

int run_simplify(const Flags& f) {
  SimplifyOptions options;
  options.method = parse_method(f);
  options.weights = parse_weights(f);
  options.stops = &stop_words();
  options.allow_heuristic = f.heuristic;
  return stream(f, [&](const ParsedSentence& s) { return to_json(simplify_controlled(s, options)).dump(); });
}

int run_eval(const Flags& f, bool synsim_run) {
  RunConfig config;
  config.method = parse_method(f);
  config.weights = parse_weights(f);
  config.parallelism = f.jobs;
  config.output_path = f.output;
  config.stops = &stop_words();
  if (f.heuristic) config.parser = [](const std::string& text, const std::string&) { return tag_plain_text(text, stop_words()); };

  std::ifstream in_file;
  std::istream& in = open_input(f, in_file);
  const auto corpus = load_corpus(in);
  const auto report = synsim_run ? evaluate_synsim(corpus, config) : evaluate_sc(corpus, config);
  std::ofstream out_file;
  std::ostream& out = open_output(f, out_file);
  out << dump_report(report);
  out.flush();
  return 0;
}

void add_common(CLI::App* cmd, Flags& f, bool text_allowed) {
  cmd->add_option("input", f.input, "Input file, or - for stdin");
  cmd->add_option("--method", f.method, "Scoring method: dep or pos")->capture_default_str();
  cmd->add_option("--weights", f.weights, "Token,verb,conjunction weights (default 0.07,0.3,0.4)");
  cmd->add_option("--threshold", f.threshold, "Complexity threshold (default 1.0)");
  cmd->add_option("-o,--output", f.output, "Output file (default stdout)");
  cmd->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  if (text_allowed) {
    cmd->add_option("--format", f.format, "Input format")->check(CLI::IsMember({"conllu", "text"}))->capture_default_str();
    cmd->add_flag("--heuristic", f.heuristic, "Accept the built-in heuristic tagger for plain text");
  } else {
    cmd->add_flag("--heuristic", f.heuristic, "Tag entries without CoNLL-U with the built-in heuristic tagger");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence complexity scoring and controlled simplification"};
  app.require_subcommand(1);
  Flags f;
  auto* score_cmd = app.add_subcommand("score", "Print the complexity score of each sentence");
  auto* classify_cmd = app.add_subcommand("classify", "Print the structural class of each sentence");
  auto* simplify_cmd = app.add_subcommand("simplify", "Split and rephrase complex sentences");
  auto* eval_sc_cmd = app.add_subcommand("eval-sc", "Classification accuracy over a JSONL corpus");
  auto* eval_synsim_cmd = app.add_subcommand("eval-synsim", "Simplification similarity over a JSONL corpus");
  add_common(score_cmd, f, true);
  add_common(classify_cmd, f, true);
  add_common(simplify_cmd, f, true);
  add_common(eval_sc_cmd, f, false);
  add_common(eval_synsim_cmd, f, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (f.format == "text" && !f.heuristic)
      throw UsageError("--format text requires --heuristic (plain text gets a heuristic flat parse)");
    if (score_cmd->parsed()) return run_score(f);
    if (classify_cmd->parsed()) return run_classify(f);
    if (simplify_cmd->parsed()) return run_simplify(f);
    if (eval_sc_cmd->parsed()) return run_eval(f, false);
    return run_eval(f, true);
  } catch (const UsageError& e) {
    std::cerr << "synsim: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    std::cerr << "synsim: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "synsim: " << e.what() << '\n';
    return kProcessingError;
  }
}
