#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrpcorr/correspond.hpp"
#include "mrpcorr/frames.hpp"
#include "mrpcorr/semantics.hpp"

namespace mrpcorr {

struct VerifyOptions {
  std::size_t graph_exhaustive_max = 2;
  std::size_t kripke_exhaustive_max = 3;
  std::vector<std::size_t> sampled_sizes = {3, 4};
  std::size_t samples = 200;
  std::uint64_t seed = 2024;
  std::size_t jobs = 1;
};

struct Disagreement {
  std::uint64_t frame_hash = 0;
  std::string frame_json;
  std::string detail;  // which check failed, plus the replayable witness
};

struct VerificationReport {
  std::string mrp;
  std::string mode;  // correspondence/graph, correspondence/kripke, shifting, lifting
  std::vector<std::pair<std::string, std::size_t>> strata;  // stratum label -> frames tested
  std::uint64_t checks = 0;
  std::vector<Disagreement> disagreements;  // sorted by frame hash
  double wall_seconds = 0;
  std::uint64_t seed = 0;
  GeneratorStats sampler;  // rejection statistics of the frame sampler

  bool pass() const { return disagreements.empty(); }
  std::string to_json() const;
  std::string summary() const;
};

/// Checks frame_valid(f, mrp) against every relational correspondent row on
/// exhaustively enumerated small frames plus seeded samples.
VerificationReport verify_correspondence(const std::string& mrp_text, bool graph_side,
                                         const VerifyOptions& opt = {});

/// Checks that the translated graph correspondent is syntactically the Kripke
/// one, and that term evaluation and inequality checking agree along the
/// frame embedding, on sampled Kripke frames.
VerificationReport verify_shifting(const std::string& mrp_text, const VerifyOptions& opt = {});

/// Checks the complement-lift equalities between the graph correspondent rows
/// and the polarity correspondent rows on sampled graph frames.
VerificationReport verify_lifting(const std::string& mrp_text, const VerifyOptions& opt = {});

}  // namespace mrpcorr
