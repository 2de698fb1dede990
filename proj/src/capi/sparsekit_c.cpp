#include "sparsekit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "sparsekit/compose.hpp"
#include "sparsekit/formats.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/harness.hpp"
#include "sparsekit/kernel.hpp"
#include "sparsekit/oracle.hpp"
#include "sparsekit/reduce.hpp"
#include "sparsekit/stats.hpp"

struct sk_instance {
  sparsekit::AnyInstance value;
  std::optional<std::int64_t> budget;
  std::string kind;
};

namespace {

using namespace sparsekit;
using nlohmann::json;

thread_local std::string lastError;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

sk_status fail(sk_status status, const std::string& message) {
  lastError = message;
  return status;
}

template <class F>
sk_status guarded(F&& body) {
  try {
    body();
    return SK_OK;
  } catch (const ParseError& e) {
    return fail(SK_ERR_PARSE, e.what());
  } catch (const json::exception& e) {
    return fail(SK_ERR_PARSE, e.what());
  } catch (const InvalidInstance& e) {
    return fail(SK_ERR_INSTANCE, e.what());
  } catch (const KindError& e) {
    return fail(SK_ERR_INSTANCE, e.what());
  } catch (const CertificateMismatch& e) {
    return fail(SK_ERR_INSTANCE, e.what());
  } catch (const ClassMismatchError& e) {
    return fail(SK_ERR_INSTANCE, e.what());
  } catch (const IoError& e) {
    return fail(SK_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SK_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SK_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SK_ERR_INTERNAL, "unknown exception");
  }
}

void requireArg(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  if (out != nullptr) *out = duplicate(s);
}

sk_instance* wrap(AnyInstance value, std::optional<std::int64_t> budget = {}) {
  auto* inst = new sk_instance{std::move(value), budget, ""};
  inst->kind = instanceKindName(inst->value);
  return inst;
}

template <class T>
const T& expect(const sk_instance* inst, const char* kind) {
  const T* value = std::get_if<T>(&inst->value);
  if (value == nullptr) throw KindError(std::string("expected a ") + kind + " instance, got " + inst->kind);
  return *value;
}

std::string readFile(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open ") + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json parseParams(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  json doc = json::parse(text);
  requireArg(doc.is_object(), "parameters must be a JSON object");
  return doc;
}

// Reads the listed keys into their targets and rejects any other key.
class ParamReader {
 public:
  explicit ParamReader(const json& doc) : doc_(doc) {}

  template <class T>
  ParamReader& read(const char* key, T& target) {
    known_.push_back(key);
    if (doc_.contains(key)) target = doc_.at(key).get<T>();
    return *this;
  }

  ParamReader& plant(Plant& target) {
    std::string name = "none";
    read("plant", name);
    if (name == "yes") target = Plant::yes;
    else if (name == "no") target = Plant::no;
    else if (name == "none") target = Plant::none;
    else throw std::invalid_argument("plant must be yes, no or none");
    return *this;
  }

  void done() const {
    for (const auto& [key, value] : doc_.items()) {
      if (std::find(known_.begin(), known_.end(), key) == known_.end()) {
        throw std::invalid_argument("unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const json& doc_;
  std::vector<std::string> known_;
};

AnyInstance generate(const std::string& kind, const json& params, CounterRng& rng) {
  ParamReader reader(params);
  if (kind == "cnf") {
    CnfParams p;
    reader.read("n", p.numVars).read("count", p.numClauses).read("minSize", p.minClauseSize).read("maxSize", p.maxClauseSize).done();
    return generateCnf(p, rng);
  }
  if (kind == "hypergraph") {
    HypergraphParams p;
    reader.read("n", p.numVertices).read("count", p.numEdges).read("minSize", p.minEdgeSize).read("maxSize", p.maxEdgeSize).done();
    return generateHypergraph(p, rng);
  }
  if (kind == "digraph") {
    DigraphParams p;
    Plant plant = Plant::none;
    reader.read("n", p.numVertices).read("p", p.arcProbability).plant(plant).done();
    requireArg(plant != Plant::no, "the digraph generator can only plant yes-instances");
    p.plantCycle = plant == Plant::yes;
    return generateDigraph(p, rng);
  }
  if (kind == "tsd") {
    TsdParams p;
    reader.read("m", p.independentSize).read("n", p.numTriangles).read("p", p.edgeProbability).plant(p.plant).done();
    return generateTsd(p, rng);
  }
  if (kind == "bipartite-ham") {
    BipartiteHamParams p;
    p.sideB = 0;
    reader.read("m", p.sideA).read("n", p.sideB).read("p", p.edgeProbability).plant(p.plant).done();
    if (p.sideB == 0) p.sideB = p.sideA + 1;
    return generateBipartiteHam(p, rng);
  }
  if (kind == "eq-col-rbds") {
    EqColRbdsParams p;
    reader.read("k", p.k).read("classSize", p.classSize).read("n", p.numBlue).read("p", p.edgeProbability).plant(p.plant).done();
    return generateEqColRbds(p, rng);
  }
  throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

template <class T>
std::vector<T> collect(const sk_instance* const* inputs, std::size_t count, const char* kind) {
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    requireArg(inputs[i] != nullptr, "null input instance");
    out.push_back(expect<T>(inputs[i], kind));
  }
  return out;
}

OracleLimits toLimits(const sk_limits* limits) {
  OracleLimits out;
  if (limits != nullptr) {
    out.nodeBudget = limits->node_budget;
    out.seconds = limits->seconds;
    out.variableCap = limits->variable_cap;
    out.budgetCap = limits->budget_cap;
  }
  return out;
}

DecisionInstance decisionInstance(const char* problem, const sk_instance* inst, std::int64_t budget) {
  requireArg(problem != nullptr && inst != nullptr, "problem and instance are required");
  const auto p = problemFromName(problem);
  requireArg(p.has_value(), "unknown problem");
  std::optional<std::int64_t> b;
  if (*p == Problem::domSet || *p == Problem::connectedDomSet) {
    b = budget >= 0 ? std::optional<std::int64_t>(budget) : inst->budget;
    requireArg(b.has_value(), "dominating set problems need a budget");
  }
  return DecisionInstance(*p, inst->value, b);
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }

const char* sk_status_name(sk_status status) {
  switch (status) {
    case SK_OK: return "ok";
    case SK_ERR_ARGUMENT: return "invalid argument";
    case SK_ERR_PARSE: return "parse error";
    case SK_ERR_INSTANCE: return "invalid instance";
    case SK_ERR_IO: return "i/o error";
    case SK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sk_last_error(void) { return lastError.c_str(); }

void sk_string_free(char* s) { std::free(s); }

sk_status sk_instance_parse(const char* text, sk_instance** out) {
  return guarded([&] {
    requireArg(text != nullptr && out != nullptr, "text and out are required");
    InstanceDocument doc = parseInstance(text);
    *out = wrap(std::move(doc.instance), doc.budget);
  });
}

sk_status sk_instance_load(const char* path, sk_instance** out) {
  return guarded([&] {
    requireArg(path != nullptr && out != nullptr, "path and out are required");
    InstanceDocument doc = parseInstance(readFile(path));
    *out = wrap(std::move(doc.instance), doc.budget);
  });
}

sk_status sk_instance_serialize(const sk_instance* inst, char** out) {
  return guarded([&] {
    requireArg(inst != nullptr && out != nullptr, "instance and out are required");
    *out = duplicate(serializeInstance(inst->value, inst->budget));
  });
}

sk_status sk_instance_save(const sk_instance* inst, const char* path) {
  return guarded([&] {
    requireArg(inst != nullptr && path != nullptr, "instance and path are required");
    const std::string text = serializeInstance(inst->value, inst->budget);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw IoError(std::string("cannot write ") + path);
  });
}

void sk_instance_free(sk_instance* inst) { delete inst; }

const char* sk_instance_kind(const sk_instance* inst) {
  return inst == nullptr ? nullptr : inst->kind.c_str();
}

int64_t sk_instance_budget(const sk_instance* inst) {
  return inst != nullptr && inst->budget ? *inst->budget : -1;
}

sk_status sk_instance_stats(const sk_instance* inst, char** out) {
  return guarded([&] {
    requireArg(inst != nullptr && out != nullptr, "instance and out are required");
    *out = duplicate(instanceStats(inst->value, inst->budget));
  });
}

sk_status sk_sparsify(const sk_instance* in, int exact, uint64_t seed, sk_instance** out,
                      char** report_json) {
  return guarded([&] {
    requireArg(in != nullptr && out != nullptr, "instance and out are required");
    const RankMode mode = exact != 0 ? RankMode::exact() : RankMode::modular(seed);
    if (const auto* h = std::get_if<Hypergraph>(&in->value)) {
      HypergraphKernel kern = sparsifyHypergraph(*h, mode);
      emit(report_json, kern.report.toJson().dump(2));
      *out = wrap(std::move(kern.output));
    } else if (const auto* f = std::get_if<CnfFormula>(&in->value)) {
      NaeKernel kern = sparsifyNaeSat(*f, mode);
      emit(report_json, kern.report.toJson().dump(2));
      *out = wrap(std::move(kern.output));
    } else {
      throw KindError("sparsify needs a hypergraph or cnf instance, got " + in->kind);
    }
  });
}

sk_status sk_reduce(const char* name, const sk_instance* in, sk_instance** out, char** trace_json) {
  return guarded([&] {
    requireArg(name != nullptr && in != nullptr && out != nullptr, "name, instance and out are required");
    const std::string which = name;
    if (which == "cnf-nae") {
      const CnfFormula& f = expect<CnfFormula>(in, "cnf");
      CnfFormula g = cnfsatToNaesat(f);
      ReductionTrace trace;
      trace.name = "cnfsatToNaesat";
      trace.inputSize = {{"variables", f.numVars()}, {"clauses", static_cast<std::int64_t>(f.numClauses())}};
      trace.outputSize = {{"variables", g.numVars()}, {"clauses", static_cast<std::int64_t>(g.numClauses())}};
      trace.names = {{"x_fresh", g.numVars()}};
      emit(trace_json, trace.toJson().dump(2));
      *out = wrap(std::move(g));
    } else if (which == "nae-hyp") {
      auto [h, trace] = naesatToHypergraph(expect<CnfFormula>(in, "cnf"));
      emit(trace_json, trace.toJson().dump(2));
      *out = wrap(std::move(h));
    } else if (which == "nae-tsd") {
      auto [tsd, trace] = naesat3ToTsd(expect<CnfFormula>(in, "cnf"));
      emit(trace_json, trace.toJson().dump(2));
      *out = wrap(std::move(tsd));
    } else if (which == "karp") {
      auto [g, trace] = directedHcToUndirected(expect<Digraph>(in, "digraph"));
      emit(trace_json, trace.toJson().dump(2));
      *out = wrap(std::move(g));
    } else {
      throw std::invalid_argument("unknown reduction '" + which + "'");
    }
  });
}

sk_status sk_compose(const char* target, const sk_instance* const* inputs, size_t count,
                     sk_instance** out, char** trace_json) {
  return guarded([&] {
    requireArg(target != nullptr && out != nullptr, "target and out are required");
    requireArg(inputs != nullptr && count > 0, "at least one input is required");
    const std::string which = target;
    if (which == "4col") {
      auto batch = padBatch(collect<TsdInstance>(inputs, count, "tsd"));
      FourColoringComposition comp = composeFourColoring(batch);
      emit(trace_json, comp.trace.toJson().dump(2));
      *out = wrap(std::move(comp.graph));
    } else if (which == "hamcycle") {
      auto batch = padBatch(collect<BipartiteHamInstance>(inputs, count, "bipartite-ham"));
      HamComposition comp = composeHamiltonicity(batch);
      emit(trace_json, comp.trace.toJson().dump(2));
      *out = wrap(std::move(comp.graph));
    } else if (which == "domset" || which == "conn-domset") {
      auto batch = padBatch(collect<EqColRbdsInstance>(inputs, count, "eq-col-rbds"));
      DomSetComposition comp = composeDominatingSet(batch);
      json trace = comp.trace.toJson();
      trace["budget"] = comp.budget;
      trace["connected"] = which == "conn-domset";
      emit(trace_json, trace.dump(2));
      *out = wrap(std::move(comp.graph), comp.budget);
    } else {
      throw std::invalid_argument("unknown composition target '" + which + "'");
    }
  });
}

void sk_limits_default(sk_limits* limits) {
  if (limits == nullptr) return;
  const OracleLimits d;
  limits->node_budget = d.nodeBudget;
  limits->seconds = d.seconds;
  limits->variable_cap = d.variableCap;
  limits->budget_cap = d.budgetCap;
}

sk_status sk_solve(const char* problem, const sk_instance* inst, int64_t budget,
                   const sk_limits* limits, sk_verdict* verdict, char** certificate_json,
                   char** info_json) {
  return guarded([&] {
    requireArg(verdict != nullptr, "verdict is required");
    const DecisionInstance di = decisionInstance(problem, inst, budget);
    const OracleAnswer answer = solve(di, toLimits(limits));
    switch (answer.verdict) {
      case Verdict::yes: *verdict = SK_VERDICT_YES; break;
      case Verdict::no: *verdict = SK_VERDICT_NO; break;
      case Verdict::timeout: *verdict = SK_VERDICT_TIMEOUT; break;
      case Verdict::refused: *verdict = SK_VERDICT_REFUSED; break;
    }
    if (certificate_json != nullptr) {
      *certificate_json = answer.certificate ? duplicate(serializeCertificate(*answer.certificate)) : nullptr;
    }
    json info = {{"problem", problemName(di.problem())},
                 {"verdict", verdictName(answer.verdict)},
                 {"nodes", answer.stats.nodes}};
    if (di.budget()) info["budget"] = *di.budget();
    if (!answer.detail.empty()) info["detail"] = answer.detail;
    emit(info_json, info.dump(2));
  });
}

sk_status sk_check(const char* problem, const sk_instance* inst, int64_t budget,
                   const char* certificate_json, int* valid) {
  return guarded([&] {
    requireArg(certificate_json != nullptr && valid != nullptr, "certificate and valid are required");
    const DecisionInstance di = decisionInstance(problem, inst, budget);
    *valid = checkCertificate(di, parseCertificate(certificate_json)) ? 1 : 0;
  });
}

sk_status sk_generate(const char* kind, const char* params_json, uint64_t seed, sk_instance** out) {
  return guarded([&] {
    requireArg(kind != nullptr && out != nullptr, "kind and out are required");
    CounterRng rng(seed);
    *out = wrap(generate(kind, parseParams(params_json), rng));
  });
}

sk_status sk_verify(const char* config_json, char** report_json, int* exit_code) {
  return guarded([&] {
    requireArg(config_json != nullptr, "configuration is required");
    const HarnessConfig config = HarnessConfig::fromJson(json::parse(config_json));
    const HarnessReport report = runHarness(config);
    emit(report_json, report.toJson().dump(2));
    if (exit_code != nullptr) *exit_code = report.exitCode();
  });
}

sk_status sk_transformations(char** out) {
  return guarded([&] {
    requireArg(out != nullptr, "out is required");
    std::string names;
    for (Transformation t : allTransformations()) names += transformationName(t) + "\n";
    *out = duplicate(names);
  });
}

}  // extern "C"
