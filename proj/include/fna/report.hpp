#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fna {

/// One checked tuple, fully expanded in canonical text form.
struct TupleRecord {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct SearchSpace {
  std::vector<std::string> alphabet;
  unsigned max_degree = 0;
  unsigned arity = 1;
  bool exhaustive = true;
  std::uint64_t sample_count = 0;  // random mode only
  std::uint64_t seed = 0;          // random mode only
};

/// Outcome of one law suite over one enumerated search space.
/// For ordinary laws `counterexample` holds the first violating tuple in
/// canonical order and passed is true iff it is absent. For laws that assert
/// the existence of a violation of some other identity (right_counit_fails),
/// the first witnessing tuple is recorded in `witness` and passed is true iff
/// a witness was found.
struct LawReport {
  std::string law;
  SearchSpace space;
  std::uint64_t instances_checked = 0;
  bool passed = false;
  std::optional<TupleRecord> counterexample;
  std::optional<TupleRecord> witness;
};

}  // namespace fna
