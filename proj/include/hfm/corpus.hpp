#pragma once

// Built-in instances: the two weak-not-strong examples plus realizable and
// classical instances over every hyperfield.

#include <optional>
#include <string>
#include <vector>

#include "hfm/gp.hpp"

namespace hfm {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Maximal minors of an r x m matrix (exact Gaussian elimination).
Rational determinant(RationalMatrix a);
GPFunction rational_matrix_gp(const RationalMatrix& rows, const GroundSet& ground);
// Integer matrices reduced mod p.
GPFunction finite_field_matrix_gp(const RationalMatrix& rows, const GroundSet& ground, std::int64_t p);

struct CorpusEntry {
  std::string name;
  std::string description;
  GPFunction gp;
  // Recomputed, never trusted by the tests: verdict of the circuit signature.
  Verdict expected;
  // What the source of the instance claims about its GP relations. For the
  // phase example this differs from the exact verdict (see README).
  bool claims_weak = true;
  bool claims_strong = true;
  // Expected first failing strong relation, as labels.
  std::vector<std::string> strong_witness_I, strong_witness_J;
};

const std::vector<CorpusEntry>& corpus();
// Throws InputError for unknown names.
const CorpusEntry& corpus_entry(std::string_view name);

}  // namespace hfm
