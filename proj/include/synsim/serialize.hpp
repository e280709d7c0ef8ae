#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "synsim/complexity.hpp"
#include "synsim/corpus.hpp"
#include "synsim/simplify.hpp"

namespace synsim {

// {id, method, tkn, vrb, cnj, sc, is_complex, class, atypical}. sc is rounded
// to 4 decimals; class is null when no classification is available.
nlohmann::ordered_json to_json(const std::string& id, const ComplexityReport& report,
                               const std::optional<SentenceClass>& cls);

// {id, class, atypical, coord_clauses, subord_clauses, length, verbs, is_complex}
nlohmann::ordered_json to_json(const std::string& id, const SentenceClass& cls, const ComplexityReport& report);

// {source_id, source_text, outputs: [{text, sc, irreducible, subject_propagated,
// fact_shaped}], provenance: [[{clause, kind}]]}
nlohmann::ordered_json to_json(const SimplificationResult& result);

nlohmann::ordered_json to_json(const EvalReport& report);

// Pretty-printed with a trailing newline.
std::string dump_report(const EvalReport& report);

double round4(double x);

}  // namespace synsim
