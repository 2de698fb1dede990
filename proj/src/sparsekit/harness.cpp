#include "sparsekit/harness.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "sparsekit/compose.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/kernel.hpp"
#include "sparsekit/reduce.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit {

namespace {

struct NamedTransformation {
  Transformation value;
  const char* name;
};

constexpr NamedTransformation kTransformations[] = {
    {Transformation::kernelHypergraph, "kernel-hyp"},
    {Transformation::kernelNae, "kernel-nae"},
    {Transformation::reduceCnfNae, "reduce-cnf-nae"},
    {Transformation::reduceNaeHypergraph, "reduce-nae-hyp"},
    {Transformation::reduceNaeTsd, "reduce-nae-tsd"},
    {Transformation::reduceKarp, "reduce-karp"},
    {Transformation::composeFourColoring, "compose-4col"},
    {Transformation::composeHam, "compose-ham"},
    {Transformation::composeDomSet, "compose-domset"},
};

std::string formatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool isPowerOfFour(int t) {
  if (t < 4) return false;
  while (t % 4 == 0) t /= 4;
  return t == 1;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

template <class T>
T tampered(const HarnessConfig& config, T value) {
  if (!config.tamper) return value;
  AnyInstance any = std::move(value);
  config.tamper(any);
  return std::get<T>(std::move(any));
}

// Per-trial bookkeeping.
class TrialState {
 public:
  TrialState(const HarnessConfig& config, const HarnessParams& params, HarnessReport& report,
             int index, std::uint64_t seed)
      : config(config), params(params), report(report), rng(seed), index_(index), seed_(seed) {}

  const HarnessConfig& config;
  const HarnessParams& params;
  HarnessReport& report;
  CounterRng rng;

  void check(CheckTally& tally, bool ok, const std::string& kind, const std::string& detail) {
    if (ok) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    fail(kind, detail);
  }

  void fail(const std::string& kind, const std::string& detail) {
    failed_ = true;
    record(report.failures, kind, detail);
  }

  // False (and recorded) when the answer is a timeout or refusal.
  bool decided(const OracleAnswer& a, const std::string& side) {
    if (a.decided()) return true;
    if (a.verdict == Verdict::timeout) timedOut_ = true;
    undecided_ = true;
    record(report.undecided, verdictName(a.verdict), side + ": " + a.detail);
    return false;
  }

  void setExpected(bool yes) { expected_ = yes; }

  // Compares a transformed-side answer with the input-side verdict.
  void compare(const OracleAnswer& a, const std::string& side) {
    if (!expected_ || !decided(a, side)) return;
    if (a.yes() != *expected_) {
      disagreed_ = true;
      fail("verdict", side + " says " + verdictName(a.verdict) + ", input side says " +
                          (*expected_ ? "yes" : "no"));
    }
  }

  void finish() {
    ++report.trials;
    if (expected_) ++(*expected_ ? report.yesTrials : report.noTrials);
    if (disagreed_) {
      ++report.disagreements;
    } else if (undecided_) {
      ++(timedOut_ ? report.timeouts : report.refusals);
    } else if (!failed_) {
      ++report.agreements;
    }
  }

 private:
  void record(std::vector<TrialIncident>& list, const std::string& kind, const std::string& detail) {
    list.push_back({index_, seed_, kind, detail, replayCommand(config, seed_)});
  }

  int index_;
  std::uint64_t seed_;
  std::optional<bool> expected_;
  bool disagreed_ = false;
  bool undecided_ = false;
  bool timedOut_ = false;
  bool failed_ = false;
};

RankMode rankMode(TrialState& s) {
  return s.config.exact ? RankMode::exact() : RankMode::modular(s.rng.next());
}

// For every dropped edge and random bipartition (V1, V2):
// sum over e in V1 of beta_e = (-1)^r * sum over e in V2 of beta_e.
void checkLovaszIdentity(TrialState& s, const Hypergraph& h, const HypergraphKernel& kern) {
  for (const SizeClassBasis& cls : kern.classes) {
    for (std::size_t col = 0; col < cls.matrix.numColumns(); ++col) {
      if (cls.basis.contains(col)) continue;
      DependencyCertificate cert;
      try {
        cert = dependencyCertificate(cls.matrix, cls.basis, col);
      } catch (const IndependentColumnError& e) {
        s.check(s.report.identity, false, "identity", e.what());
        continue;
      }
      for (int part = 0; part < s.config.partitions; ++part) {
        std::vector<char> inFirst(static_cast<std::size_t>(h.numVertices()) + 1, 0);
        for (Vertex v = 1; v <= h.numVertices(); ++v) {
          inFirst[static_cast<std::size_t>(v)] = s.rng.chance(1, 2) ? 1 : 0;
        }
        mpq_class first = 0, second = 0;
        for (const auto& [column, beta] : cert.coefficients) {
          const auto& edge = h.edges()[cls.matrix.columns[column]];
          const auto within = [&](char side) {
            return std::all_of(edge.begin(), edge.end(),
                               [&](Vertex v) { return inFirst[static_cast<std::size_t>(v)] == side; });
          };
          if (within(1)) first += beta;
          if (within(0)) second += beta;
        }
        if (cls.matrix.r % 2 != 0) second = -second;
        s.check(s.report.identity, first == second, "identity",
                "edge " + std::to_string(cls.matrix.columns[col]) + ": " + first.get_str() +
                    " != " + second.get_str());
      }
    }
  }
}

void runKernelHypergraph(TrialState& s) {
  const HarnessParams& p = s.params;
  const int edges = s.rng.between(std::max(1, p.count / 4), p.count);
  const Hypergraph h = generateHypergraph({p.n, edges, 2, p.d}, s.rng);
  const HypergraphKernel kern = sparsifyHypergraph(h, rankMode(s));
  bool subset = kern.output.numVertices() == h.numVertices() &&
                kern.keptEdges.size() == kern.output.numEdges();
  for (std::size_t i = 0; subset && i < kern.keptEdges.size(); ++i) {
    subset = kern.output.edges()[i] == h.edges()[kern.keptEdges[i]];
  }
  s.check(s.report.bounds, subset && kern.report.boundsHold(), "bounds",
          "kernel output exceeds its bounds or is not a sub-hypergraph of the input");
  if (s.config.partitions > 0) checkLovaszIdentity(s, h, kern);

  const OracleAnswer in = solveHypergraph2Col(h, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveHypergraph2Col(tampered(s.config, kern.output), s.config.limits), "kernel");
}

void runKernelNae(TrialState& s) {
  const HarnessParams& p = s.params;
  const int clauses = s.rng.between(std::max(1, p.count / 4), p.count);
  const CnfFormula f = generateCnf({p.n, clauses, 2, p.d}, s.rng);
  const NaeKernel kern = sparsifyNaeSat(f, rankMode(s));
  bool subset = kern.output.numVars() == f.numVars() &&
                kern.keptClauses.size() == kern.output.numClauses();
  for (std::size_t i = 0; subset && i < kern.keptClauses.size(); ++i) {
    subset = kern.output.clauses()[i] == f.clauses()[kern.keptClauses[i]];
  }
  s.check(s.report.bounds, subset && kern.report.boundsHold(), "bounds",
          "kernel output exceeds its bounds or is not a sub-formula of the input");

  const OracleAnswer in = solveNae(f, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveNae(tampered(s.config, kern.output), s.config.limits), "kernel");
}

// Formula with a random number of variables in [1, n] and clauses in [0, count].
CnfFormula randomSmallFormula(TrialState& s, int maxClauseSize) {
  const int vars = s.rng.between(1, s.params.n);
  const int clauses = s.rng.between(0, s.params.count);
  return generateCnf({vars, clauses, 1, std::min(maxClauseSize, vars)}, s.rng);
}

void runReduceCnfNae(TrialState& s) {
  const CnfFormula f = randomSmallFormula(s, s.params.d);
  const CnfFormula g = cnfsatToNaesat(f);
  bool shape = g.numVars() == f.numVars() + 1 && g.numClauses() == f.numClauses();
  const Literal fresh{f.numVars() + 1, Polarity::positive};
  for (std::size_t i = 0; shape && i < f.numClauses(); ++i) {
    Clause expected = f.clauses()[i];
    expected.push_back(fresh);
    shape = g.clauses()[i] == expected;
  }
  s.check(s.report.size, shape, "size", "output is not the input plus one fresh positive literal per clause");

  const OracleAnswer in = solveSat(f, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveNae(tampered(s.config, g), s.config.limits), "reduction");
}

void runReduceNaeHypergraph(TrialState& s) {
  const CnfFormula f = randomSmallFormula(s, s.params.d);
  const auto [h, trace] = naesatToHypergraph(f);
  s.check(s.report.size,
          h.numVertices() == 2 * f.numVars() &&
              h.numEdges() == f.numClauses() + static_cast<std::size_t>(f.numVars()),
          "size", "expected 2n vertices and one edge per clause plus n pair edges");

  const OracleAnswer in = solveNae(f, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveHypergraph2Col(tampered(s.config, h), s.config.limits), "reduction");
}

bool hasComplementaryPair(const Clause& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i].variable == c[i + 1].variable) return true;
  }
  return false;
}

void runReduceNaeTsd(TrialState& s) {
  const CnfFormula f = randomSmallFormula(s, s.params.d);
  const auto [tsd, trace] = naesat3ToTsd(f);
  const bool degenerate = std::any_of(f.clauses().begin(), f.clauses().end(),
                                      [](const Clause& c) { return c.size() <= 1; });
  bool shape;
  if (degenerate) {
    shape = tsd == canonicalNoTsd();
  } else {
    const auto kept = std::count_if(f.clauses().begin(), f.clauses().end(),
                                    [](const Clause& c) { return !hasComplementaryPair(c); });
    shape = tsd.independent().size() == static_cast<std::size_t>(2 * f.numVars()) &&
            tsd.triangles().size() == static_cast<std::size_t>(f.numVars() + kept);
  }
  s.check(s.report.size, shape, "size", "unexpected number of X-vertices or triangles");

  const OracleAnswer in = solveNae(f, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveTsd(tampered(s.config, tsd), s.config.limits), "reduction");
}

void runReduceKarp(TrialState& s) {
  const int vertices = s.rng.between(1, s.params.n);
  const bool plant = s.rng.bernoulli(s.config.yesBias);
  const Digraph d = generateDigraph({vertices, s.params.p, plant}, s.rng);
  const auto [g, trace] = directedHcToUndirected(d);
  s.check(s.report.size, g.numVertices() == 3 * d.numVertices(), "size",
          "expected 3n vertices, got " + std::to_string(g.numVertices()));

  const OracleAnswer in = solveHamCycle(d, s.config.limits);
  if (!s.decided(in, "input")) return;
  s.setExpected(in.yes());
  s.compare(solveHamCycle(tampered(s.config, g), s.config.limits), "reduction");
}

// With probability yesBias one random slot gets a planted YES and the others
// a planted NO with probability 1/2; otherwise every slot gets a planted NO
// with probability 7/8. Unplanted slots are left to chance. Planted NOs are
// used only when the class admits them.
std::vector<Plant> batchPlan(TrialState& s, bool noAvailable) {
  const auto t = static_cast<std::size_t>(s.params.t);
  const bool yesTrial = s.rng.bernoulli(s.config.yesBias);
  const std::size_t yesSlot = yesTrial ? s.rng.below(t) : t;
  std::vector<Plant> plan;
  for (std::size_t i = 0; i < t; ++i) {
    if (i == yesSlot) {
      plan.push_back(Plant::yes);
    } else {
      const bool no = yesTrial ? s.rng.chance(1, 2) : s.rng.chance(7, 8);
      plan.push_back(noAvailable && no ? Plant::no : Plant::none);
    }
  }
  return plan;
}

// Solves every batch input; returns the first YES position and certificate.
template <class T, class Solver>
std::optional<std::optional<std::pair<std::size_t, Certificate>>> solveBatch(
    TrialState& s, const PaddedBatch<T>& batch, Solver solver) {
  std::optional<std::pair<std::size_t, Certificate>> firstYes;
  for (std::size_t i = 0; i < batch.instances.size(); ++i) {
    const OracleAnswer a = solver(batch.instances[i]);
    if (!s.decided(a, "input " + std::to_string(i))) return std::nullopt;
    if (a.yes() && !firstYes) firstYes.emplace(i, *a.certificate);
  }
  return firstYes;
}

void runComposeFourColoring(TrialState& s) {
  const HarnessParams& p = s.params;
  std::vector<TsdInstance> inputs;
  for (Plant plant : batchPlan(s, p.m >= 1 && p.n >= 1)) {
    inputs.push_back(generateTsd({p.m, p.n, p.p, plant}, s.rng));
  }
  const auto batch = padBatch(std::move(inputs));
  const FourColoringComposition comp = composeFourColoring(batch);
  const std::int64_t expected = fourColoringVertexCount(batch.q, p.m, p.n);
  s.check(s.report.size, comp.graph.numVertices() == expected, "size",
          "expected " + std::to_string(expected) + " vertices, got " +
              std::to_string(comp.graph.numVertices()));

  const auto inputYes = solveBatch(
      s, batch, [&](const TsdInstance& x) { return solveTsd(x, s.config.limits); });
  if (!inputYes) return;
  s.setExpected(inputYes->has_value());
  const Graph out = tampered(s.config, comp.graph);
  s.compare(solveColoring(out, 4, s.config.limits), "4-coloring");
  if (*inputYes) {
    const auto& [position, cert] = **inputYes;
    const Coloring witness = fourColoringWitness(comp, batch, position, std::get<Coloring>(cert));
    s.check(s.report.witness, isProperColoring(out, witness, 4), "witness",
            "constructed coloring from input " + std::to_string(position) + " is not proper");
  }
}

void runComposeHam(TrialState& s) {
  const HarnessParams& p = s.params;
  std::vector<BipartiteHamInstance> inputs;
  for (Plant plant : batchPlan(s, p.m >= 2)) {
    inputs.push_back(generateBipartiteHam({p.m, p.n, p.p, plant}, s.rng));
  }
  const auto batch = padBatch(std::move(inputs));
  const HamComposition comp = composeHamiltonicity(batch);
  const std::int64_t expected = hamVertexCount(batch.q, p.m, p.n);
  s.check(s.report.size, comp.graph.numVertices() == expected, "size",
          "expected " + std::to_string(expected) + " vertices, got " +
              std::to_string(comp.graph.numVertices()));

  const auto inputYes = solveBatch(
      s, batch, [&](const BipartiteHamInstance& x) { return solveHamPathST(x, s.config.limits); });
  if (!inputYes) return;
  s.setExpected(inputYes->has_value());
  const Digraph out = tampered(s.config, comp.graph);
  const OracleAnswer answer = solveHamCycle(out, s.config.limits);
  s.compare(answer, "hamiltonian cycle");
  if (answer.yes()) {
    s.check(s.report.traversal, traversesPathGadgets(comp.layout, std::get<HamCycle>(*answer.certificate)),
            "traversal", "oracle cycle enters a path gadget through its middle");
  }
  if (*inputYes) {
    const auto& [position, cert] = **inputYes;
    const HamCycle witness = hamCycleWitness(comp, batch, position, std::get<HamCycle>(cert));
    s.check(s.report.witness, isHamiltonianCycle(out, witness), "witness",
            "constructed cycle from input " + std::to_string(position) + " is not Hamiltonian");
    s.check(s.report.traversal, traversesPathGadgets(comp.layout, witness), "traversal",
            "constructed cycle enters a path gadget through its middle");
  }
}

void runComposeDomSet(TrialState& s) {
  const HarnessParams& p = s.params;
  const int classSize = p.m / p.k;
  std::vector<EqColRbdsInstance> inputs;
  for (Plant plant : batchPlan(s, classSize >= 2 && p.n >= 2)) {
    inputs.push_back(generateEqColRbds({p.k, classSize, p.n, p.p, plant}, s.rng));
  }
  const auto batch = padBatch(std::move(inputs));
  const DomSetComposition comp = composeDominatingSet(batch);
  const std::int64_t vertices =
      comp.layout.canonicalNo ? 2 : domSetVertexCount(batch.q, p.m, p.n, p.k);
  const std::int64_t budget = comp.layout.canonicalNo ? 1 : p.k + 1 + batch.logQ;
  s.check(s.report.size, comp.graph.numVertices() == vertices && comp.budget == budget, "size",
          "expected " + std::to_string(vertices) + " vertices and budget " + std::to_string(budget) +
              ", got " + std::to_string(comp.graph.numVertices()) + " and " +
              std::to_string(comp.budget));

  const auto inputYes = solveBatch(
      s, batch, [&](const EqColRbdsInstance& x) { return solveColRbds(x, s.config.limits); });
  if (!inputYes) return;
  s.setExpected(inputYes->has_value());
  const Graph out = tampered(s.config, comp.graph);
  s.compare(solveDomSet(out, comp.budget, false, s.config.limits), "dominating set");
  s.compare(solveDomSet(out, comp.budget, true, s.config.limits), "connected dominating set");
  if (*inputYes) {
    const auto& [position, cert] = **inputYes;
    const DomSet witness = domSetWitness(comp, batch, position, std::get<DomSet>(cert));
    const bool ok = static_cast<std::int64_t>(witness.vertices.size()) <= comp.budget &&
                    isDominatingSet(out, witness.vertices) &&
                    inducesConnectedSubgraph(out, witness.vertices);
    s.check(s.report.witness, ok, "witness",
            "constructed set from input " + std::to_string(position) +
                " is not a connected dominating set within budget");
  }
}

void runTrial(TrialState& s) {
  switch (s.config.transformation) {
    case Transformation::kernelHypergraph: return runKernelHypergraph(s);
    case Transformation::kernelNae: return runKernelNae(s);
    case Transformation::reduceCnfNae: return runReduceCnfNae(s);
    case Transformation::reduceNaeHypergraph: return runReduceNaeHypergraph(s);
    case Transformation::reduceNaeTsd: return runReduceNaeTsd(s);
    case Transformation::reduceKarp: return runReduceKarp(s);
    case Transformation::composeFourColoring: return runComposeFourColoring(s);
    case Transformation::composeHam: return runComposeHam(s);
    case Transformation::composeDomSet: return runComposeDomSet(s);
  }
}

nlohmann::json tallyJson(const CheckTally& t) {
  return {{"passed", t.passed}, {"failed", t.failed}};
}

nlohmann::json incidentJson(const TrialIncident& i) {
  return {{"trial", i.trial},
          {"trialSeed", i.trialSeed},
          {"kind", i.kind},
          {"detail", i.detail},
          {"replay", i.replay}};
}

}  // namespace

std::string transformationName(Transformation t) {
  for (const auto& entry : kTransformations) {
    if (entry.value == t) return entry.name;
  }
  return "unknown";
}

std::optional<Transformation> transformationFromName(std::string_view name) {
  for (const auto& entry : kTransformations) {
    if (name == entry.name) return entry.value;
  }
  return std::nullopt;
}

const std::vector<Transformation>& allTransformations() {
  static const std::vector<Transformation> all = [] {
    std::vector<Transformation> out;
    for (const auto& entry : kTransformations) out.push_back(entry.value);
    return out;
  }();
  return all;
}

HarnessParams resolveParams(Transformation t, HarnessParams p) {
  const auto fill = [](int& field, int fallback) {
    if (field == 0) field = fallback;
  };
  const auto fillP = [&](double fallback) {
    if (p.p < 0) p.p = fallback;
  };
  switch (t) {
    case Transformation::kernelHypergraph:
      fill(p.n, 10), fill(p.d, 3), fill(p.count, 30);
      break;
    case Transformation::kernelNae:
      fill(p.n, 8), fill(p.d, 4), fill(p.count, 24);
      break;
    case Transformation::reduceCnfNae:
      fill(p.n, 8), fill(p.d, 3), fill(p.count, 12);
      break;
    case Transformation::reduceNaeHypergraph:
      fill(p.n, 8), fill(p.d, 4), fill(p.count, 12);
      break;
    case Transformation::reduceNaeTsd:
      fill(p.n, 5), fill(p.d, 3), fill(p.count, 6);
      require(p.d <= 3, "reduce-nae-tsd needs clauses of size at most 3");
      break;
    case Transformation::reduceKarp:
      fill(p.n, 7);
      fillP(0.3);
      break;
    case Transformation::composeFourColoring:
      fill(p.t, 4), fill(p.m, 3), fill(p.n, 2);
      fillP(0.6);
      break;
    case Transformation::composeHam:
      fill(p.t, 4), fill(p.m, 1), fill(p.n, p.m + 1);
      fillP(0.4);
      require(p.n == p.m + 1, "compose-ham needs n = m + 1");
      break;
    case Transformation::composeDomSet:
      fill(p.t, 4), fill(p.k, 2), fill(p.m, 4), fill(p.n, 3);
      fillP(0.3);
      require(p.m % p.k == 0, "compose-domset needs m divisible by k");
      break;
  }
  require(p.n >= 1, "n must be positive");
  require(p.m >= 0 && p.k >= 0 && p.d >= 0 && p.count >= 0 && p.t >= 0, "sizes must be nonnegative");
  require(p.p <= 1.0, "p must be at most 1");
  const bool composition = t == Transformation::composeFourColoring ||
                           t == Transformation::composeHam || t == Transformation::composeDomSet;
  require(!composition || isPowerOfFour(p.t), "t must be a power of 4");
  return p;
}

nlohmann::json HarnessConfig::toJson() const {
  const HarnessParams p = resolveParams(transformation, params);
  nlohmann::json doc = {
      {"transformation", transformationName(transformation)},
      {"trials", trials},
      {"seed", seed},
      {"yesBias", yesBias},
      {"exact", exact},
      {"partitions", partitions},
      {"params",
       {{"n", p.n}, {"m", p.m}, {"d", p.d}, {"k", p.k}, {"t", p.t}, {"count", p.count}, {"p", p.p}}},
      {"limits",
       {{"nodeBudget", limits.nodeBudget},
        {"seconds", limits.seconds},
        {"variableCap", limits.variableCap},
        {"budgetCap", limits.budgetCap}}},
  };
  if (trialSeed) doc["trialSeed"] = *trialSeed;
  return doc;
}

HarnessConfig HarnessConfig::fromJson(const nlohmann::json& doc) {
  require(doc.is_object(), "harness configuration must be a JSON object");
  HarnessConfig c;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "transformation") {
        const auto t = transformationFromName(value.get<std::string>());
        require(t.has_value(), "unknown transformation '" + value.get<std::string>() + "'");
        c.transformation = *t;
      } else if (key == "trials") {
        c.trials = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "trialSeed") {
        c.trialSeed = value.get<std::uint64_t>();
      } else if (key == "yesBias") {
        c.yesBias = value.get<double>();
      } else if (key == "exact") {
        c.exact = value.get<bool>();
      } else if (key == "partitions") {
        c.partitions = value.get<int>();
      } else if (key == "params") {
        for (const auto& [name, v] : value.items()) {
          if (name == "n") c.params.n = v.get<int>();
          else if (name == "m") c.params.m = v.get<int>();
          else if (name == "d") c.params.d = v.get<int>();
          else if (name == "k") c.params.k = v.get<int>();
          else if (name == "t") c.params.t = v.get<int>();
          else if (name == "count") c.params.count = v.get<int>();
          else if (name == "p") c.params.p = v.get<double>();
          else throw std::invalid_argument("unknown parameter '" + name + "'");
        }
      } else if (key == "limits") {
        for (const auto& [name, v] : value.items()) {
          if (name == "nodeBudget") c.limits.nodeBudget = v.get<std::uint64_t>();
          else if (name == "seconds") c.limits.seconds = v.get<double>();
          else if (name == "variableCap") c.limits.variableCap = v.get<int>();
          else if (name == "budgetCap") c.limits.budgetCap = v.get<int>();
          else throw std::invalid_argument("unknown limit '" + name + "'");
        }
      } else {
        throw std::invalid_argument("unknown configuration key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad configuration value: ") + e.what());
  }
  require(c.trials >= 0, "trials must be nonnegative");
  require(c.yesBias >= 0.0 && c.yesBias <= 1.0, "yesBias must lie in [0, 1]");
  require(c.partitions >= 0, "partitions must be nonnegative");
  return c;
}

std::string replayCommand(const HarnessConfig& config, std::uint64_t trialSeed) {
  const HarnessParams p = resolveParams(config.transformation, config.params);
  std::ostringstream out;
  out << "sparsekit verify " << transformationName(config.transformation) << " --trial-seed "
      << trialSeed;
  const std::pair<const char*, int> sizes[] = {{"-n", p.n}, {"-m", p.m}, {"-d", p.d},
                                               {"-k", p.k}, {"-t", p.t}, {"--count", p.count}};
  for (const auto& [flag, value] : sizes) {
    if (value != 0) out << ' ' << flag << ' ' << value;
  }
  if (p.p >= 0) out << " --p " << formatDouble(p.p);
  out << " --yes-bias " << formatDouble(config.yesBias);
  if (config.exact) out << " --exact";
  if (config.partitions > 0) out << " --partitions " << config.partitions;
  const OracleLimits defaults;
  if (config.limits.nodeBudget != defaults.nodeBudget) out << " --node-budget " << config.limits.nodeBudget;
  if (config.limits.seconds != defaults.seconds) out << " --seconds " << formatDouble(config.limits.seconds);
  return out.str();
}

HarnessReport runHarness(const HarnessConfig& config) {
  const HarnessParams params = resolveParams(config.transformation, config.params);
  HarnessReport report;
  report.transformation = transformationName(config.transformation);
  report.config = config.toJson();
  const int trials = config.trialSeed ? 1 : config.trials;
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed =
        config.trialSeed ? *config.trialSeed : config.seed ^ static_cast<std::uint64_t>(trial);
    TrialState state(config, params, report, trial, seed);
    try {
      runTrial(state);
    } catch (const std::exception& e) {
      state.fail("error", e.what());
    }
    state.finish();
  }
  return report;
}

int HarnessReport::exitCode() const {
  if (!failures.empty()) return 1;
  if (!undecided.empty()) return 3;
  return 0;
}

std::string HarnessReport::summary() const {
  std::ostringstream out;
  out << transformation << ": " << trials << " trials, " << agreements << " agree, " << disagreements
      << " disagree, " << timeouts << " timeout, " << refusals << " refused (input yes " << yesTrials
      << ", no " << noTrials << ")";
  const std::pair<const char*, const CheckTally*> tallies[] = {
      {"size", &size}, {"bounds", &bounds}, {"witness", &witness},
      {"traversal", &traversal}, {"identity", &identity}};
  for (const auto& [name, tally] : tallies) {
    const std::uint64_t total = tally->passed + tally->failed;
    if (total > 0) out << "; " << name << ' ' << tally->passed << '/' << total;
  }
  return out.str();
}

nlohmann::json HarnessReport::toJson() const {
  nlohmann::json failuresJson = nlohmann::json::array();
  for (const auto& f : failures) failuresJson.push_back(incidentJson(f));
  nlohmann::json undecidedJson = nlohmann::json::array();
  for (const auto& u : undecided) undecidedJson.push_back(incidentJson(u));
  return {{"transformation", transformation},
          {"config", config},
          {"rng", CounterRng::kName},
          {"trials", trials},
          {"agreements", agreements},
          {"disagreements", disagreements},
          {"timeouts", timeouts},
          {"refusals", refusals},
          {"inputVerdicts", {{"yes", yesTrials}, {"no", noTrials}}},
          {"checks",
           {{"size", tallyJson(size)},
            {"bounds", tallyJson(bounds)},
            {"witness", tallyJson(witness)},
            {"traversal", tallyJson(traversal)},
            {"identity", tallyJson(identity)}}},
          {"failures", failuresJson},
          {"undecided", undecidedJson},
          {"exitCode", exitCode()}};
}

}  // namespace sparsekit
