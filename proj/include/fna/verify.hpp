#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fna/report.hpp"
#include "fna/word.hpp"

namespace fna {

struct VerifyMode {
  static VerifyMode exhaustive() { return {}; }
  static VerifyMode random(std::uint64_t sample_count, std::uint64_t seed) {
    VerifyMode m;
    m.is_exhaustive = false;
    m.sample_count = sample_count;
    m.seed = seed;
    return m;
  }
  bool is_exhaustive = true;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
};

struct LawInfo {
  std::string id;
  unsigned arity;            // words per checked tuple
  unsigned default_degree;   // default bound when none is given
  bool existential;          // passes when a witness exists
  std::string summary;
};

/// The catalog of known laws, in canonical run order.
const std::vector<LawInfo>& law_catalog();

/// Runs one law suite over all tuples of basis words of degree <= max_degree
/// (exhaustive) or over reproducibly sampled tuples (random). Deterministic:
/// identical inputs yield identical reports. Throws UnknownLawError or
/// EmptySpaceError.
LawReport run_suite(const std::string& law, const std::vector<Letter>& alphabet,
                    unsigned max_degree, const VerifyMode& mode = VerifyMode::exhaustive());

}  // namespace fna
