#pragma once

#include <string_view>
#include <vector>

namespace synsim {

enum class ClauseKind { Main, Coordinate, Subordinate };

std::string_view to_string(ClauseKind kind);

// A set of token indices of one sentence that forms a clause. The set may be
// gapped when nested clauses are carved out of it.
struct Clause {
  std::vector<int> token_indices;  // sorted, 1-based
  ClauseKind kind = ClauseKind::Main;
  int head_index = 0;
  bool has_subject = false;

  int first_index() const { return token_indices.empty() ? 0 : token_indices.front(); }
};

}  // namespace synsim
