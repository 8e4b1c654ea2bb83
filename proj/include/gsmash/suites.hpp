#pragma once

#include <cstdint>
#include <random>

#include "gsmash/document.hpp"

namespace gsmash {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool all_pass() const {
    for (const SuiteCase& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> suite_names();

// Runs one of: lemma33, prop22, selfinj-transfer, opp-transfer,
// exterior-pipeline, ext-oracle. `count` bounds the number of random cases or
// sample points, suite-dependent. Deterministic given (doc, seed, count).
SuiteReport run_suite(const std::string& suite, const LoadedDocument& doc, std::uint64_t seed,
                      std::size_t count);

// Seeded random module: quotient of a free module by a randomly generated
// submodule, rejection-sampled onto 1 <= dim <= max_dim.
FDModule random_module(AlgebraPtr a, std::mt19937_64& rng, std::size_t max_dim);

}  // namespace gsmash
