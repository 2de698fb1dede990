#pragma once

// Randomized verification harness. Each trial generates instances from a
// derived seed, applies one transformation and compares exact oracle verdicts
// on both sides: equality for kernels and reductions, OR-equivalence for
// compositions. Structural assertions (size formulas, kernel bounds,
// constructive witnesses, path-gadget traversal, the Lovasz identity) are
// tallied alongside. Reports contain no timings, so they are byte-identical
// across runs with the same configuration.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sparsekit/model.hpp"
#include "sparsekit/oracle.hpp"

namespace sparsekit {

enum class Transformation {
  kernelHypergraph,
  kernelNae,
  reduceCnfNae,
  reduceNaeHypergraph,
  reduceNaeTsd,
  reduceKarp,
  composeFourColoring,
  composeHam,
  composeDomSet,
};

std::string transformationName(Transformation t);
std::optional<Transformation> transformationFromName(std::string_view name);
const std::vector<Transformation>& allTransformations();

// Size parameters; zero (or a negative p) selects the transformation's default.
//   kernel-hyp       n vertices, d max edge size, count max edges
//   kernel-nae       n variables, d max clause size, count max clauses
//   reduce-*         n max variables (vertices for karp), d max clause size,
//                    count max clauses, p arc probability (karp)
//   compose-4col     m = |X|, n triangles, p edge probability
//   compose-ham      m = |A|, n = |B| = m + 1, p edge probability
//   compose-domset   k classes, m = |R|, n = |B|, p edge probability
//   compositions     t inputs per batch (a power of 4)
struct HarnessParams {
  int n = 0;
  int m = 0;
  int d = 0;
  int k = 0;
  int t = 0;
  int count = 0;
  double p = -1.0;
};

HarnessParams resolveParams(Transformation t, HarnessParams p);

struct HarnessConfig {
  Transformation transformation = Transformation::kernelHypergraph;
  int trials = 100;
  std::uint64_t seed = 0;
  // Replays exactly one trial with this seed.
  std::optional<std::uint64_t> trialSeed;
  HarnessParams params;
  double yesBias = 0.5;  // probability of planting a YES input (compositions, karp)
  bool exact = false;    // rank mode of the kernel transformations
  int partitions = 0;    // random bipartitions per dropped edge (kernel-hyp)
  OracleLimits limits;
  // Applied to every transformed instance before it reaches the oracle.
  std::function<void(AnyInstance&)> tamper;

  // Resolved parameters, without the tamper hook.
  nlohmann::json toJson() const;
  // Throws std::invalid_argument on unknown keys or values.
  static HarnessConfig fromJson(const nlohmann::json& doc);
};

struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct TrialIncident {
  int trial = 0;
  std::uint64_t trialSeed = 0;
  std::string kind;  // verdict, size, bounds, witness, traversal, identity, timeout, refused
  std::string detail;
  std::string replay;
};

struct HarnessReport {
  std::string transformation;
  nlohmann::json config;
  int trials = 0;
  int agreements = 0;
  int disagreements = 0;
  int timeouts = 0;
  int refusals = 0;
  int yesTrials = 0;  // by the verdict of the input side
  int noTrials = 0;
  CheckTally size, bounds, witness, traversal, identity;
  std::vector<TrialIncident> failures;   // every failed check, verdicts included
  std::vector<TrialIncident> undecided;  // timeouts and refusals

  // 0 all agree, 1 any failure, 3 oracle timeout or refusal.
  int exitCode() const;
  std::string summary() const;
  nlohmann::json toJson() const;
};

HarnessReport runHarness(const HarnessConfig& config);

// Command line that replays a single trial.
std::string replayCommand(const HarnessConfig& config, std::uint64_t trialSeed);

}  // namespace sparsekit
