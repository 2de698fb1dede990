// Command-line front end over the sparsekit C API.

#include <sparsekit.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitUndecided = 30;

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void ok(sk_status status) {
  if (status != SK_OK) {
    throw CommandError(std::string(sk_status_name(status)) + ": " + sk_last_error());
  }
}

struct InstanceDeleter {
  void operator()(sk_instance* p) const { sk_instance_free(p); }
};
using Instance = std::unique_ptr<sk_instance, InstanceDeleter>;

// Owns a string returned by the library.
class Owned {
 public:
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  ~Owned() { sk_string_free(ptr_); }

  char** out() { return &ptr_; }
  bool empty() const { return ptr_ == nullptr; }
  std::string str() const { return ptr_ == nullptr ? std::string() : std::string(ptr_); }

 private:
  char* ptr_ = nullptr;
};

Instance load(const std::string& path) {
  sk_instance* raw = nullptr;
  ok(sk_instance_load(path.c_str(), &raw));
  return Instance(raw);
}

void save(const sk_instance* inst, const std::string& path) { ok(sk_instance_save(inst, path.c_str())); }

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CommandError("cannot write " + path);
}

// Writes JSON to `path`, or to stderr when no path is given.
void emitTrace(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cerr << text << '\n';
  } else {
    writeText(path, text + "\n");
  }
}

std::string statsLine(const sk_instance* inst) {
  Owned s;
  ok(sk_instance_stats(inst, s.out()));
  return s.str();
}

std::vector<std::string> expandInputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (std::filesystem::is_directory(in)) {
      std::vector<std::string> entries;
      for (const auto& e : std::filesystem::directory_iterator(in)) {
        if (e.is_regular_file()) entries.push_back(e.path().string());
      }
      std::sort(entries.begin(), entries.end());
      files.insert(files.end(), entries.begin(), entries.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

std::string verifySummary(const json& r) {
  std::string s = r.at("config").at("transformation").get<std::string>() + ": " +
                  std::to_string(r.at("trials").get<int>()) + " trials, " +
                  std::to_string(r.at("agreements").get<int>()) + " agree, " +
                  std::to_string(r.at("disagreements").get<int>()) + " disagree, " +
                  std::to_string(r.at("timeouts").get<int>()) + " timeout, " +
                  std::to_string(r.at("refusals").get<int>()) + " refused (input yes " +
                  std::to_string(r.at("inputVerdicts").at("yes").get<int>()) + ", no " +
                  std::to_string(r.at("inputVerdicts").at("no").get<int>()) + ")";
  for (const auto& [name, tally] : r.at("checks").items()) {
    const auto passed = tally.at("passed").get<std::uint64_t>();
    const auto total = passed + tally.at("failed").get<std::uint64_t>();
    if (total > 0) s += "; " + name + " " + std::to_string(passed) + "/" + std::to_string(total);
  }
  return s;
}

struct LimitOptions {
  sk_limits limits{};
  LimitOptions() { sk_limits_default(&limits); }

  void add(CLI::App* cmd) {
    cmd->add_option("--node-budget", limits.node_budget, "search nodes per oracle call");
    cmd->add_option("--seconds", limits.seconds, "wall-clock limit per oracle call");
    cmd->add_option("--variable-cap", limits.variable_cap, "largest SAT/NAE/2-coloring instance searched");
    cmd->add_option("--budget-cap", limits.budget_cap, "largest dominating-set budget searched");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparsekit: hypergraph sparsification, reductions, cross-compositions and exact oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sk_version()));

  int exitCode = kExitOk;

  // sparsify
  std::string spIn, spOut, spReport;
  bool spExact = false;
  std::uint64_t spSeed = 0;
  auto* sparsify = app.add_subcommand("sparsify", "kernelize a hypergraph (2-coloring) or a CNF formula (NAE-SAT)");
  sparsify->add_option("input", spIn, "instance file")->required();
  sparsify->add_option("output", spOut, "output file")->required();
  sparsify->add_flag("--exact", spExact, "exact rational elimination instead of modular");
  sparsify->add_option("--seed", spSeed, "seed of the random prime in modular mode");
  sparsify->add_option("--report", spReport, "write the kernel report (JSON) here");
  sparsify->callback([&] {
    Instance in = load(spIn);
    sk_instance* raw = nullptr;
    Owned report;
    ok(sk_sparsify(in.get(), spExact ? 1 : 0, spSeed, &raw, report.out()));
    Instance out(raw);
    save(out.get(), spOut);
    if (!spReport.empty()) writeText(spReport, report.str() + "\n");
    if (!spExact) {
      std::cerr << "note: modular mode; verdict preservation is certified only with --exact\n";
    }
    std::cout << "input:  " << statsLine(in.get()) << '\n' << "output: " << statsLine(out.get()) << '\n';
  });

  // reduce
  std::string rdName, rdIn, rdOut, rdTrace;
  auto* reduce = app.add_subcommand("reduce", "apply a reduction: cnf-nae, nae-hyp, nae-tsd or karp");
  reduce->add_option("name", rdName, "reduction")->required()->check(CLI::IsMember({"cnf-nae", "nae-hyp", "nae-tsd", "karp"}));
  reduce->add_option("input", rdIn, "instance file")->required();
  reduce->add_option("output", rdOut, "output file")->required();
  reduce->add_option("--trace", rdTrace, "write the trace (JSON) here instead of stderr");
  reduce->callback([&] {
    Instance in = load(rdIn);
    sk_instance* raw = nullptr;
    Owned trace;
    ok(sk_reduce(rdName.c_str(), in.get(), &raw, trace.out()));
    Instance out(raw);
    save(out.get(), rdOut);
    emitTrace(rdTrace, trace.str());
  });

  // compose
  std::string cpTarget, cpOut, cpTrace;
  std::vector<std::string> cpInputs;
  auto* compose = app.add_subcommand("compose", "cross-compose a batch of instances");
  compose->add_option("target", cpTarget, "4col, hamcycle, domset or conn-domset")
      ->required()
      ->check(CLI::IsMember({"4col", "hamcycle", "domset", "conn-domset"}));
  compose->add_option("--inputs", cpInputs, "input files or a directory (files taken in name order)")->required();
  compose->add_option("--out", cpOut, "output file")->required();
  compose->add_option("--trace", cpTrace, "write the trace (JSON) here instead of stderr");
  compose->callback([&] {
    std::vector<Instance> owned;
    std::vector<const sk_instance*> inputs;
    for (const auto& path : expandInputs(cpInputs)) {
      owned.push_back(load(path));
      inputs.push_back(owned.back().get());
    }
    if (inputs.empty()) throw CommandError("no input instances");
    sk_instance* raw = nullptr;
    Owned trace;
    ok(sk_compose(cpTarget.c_str(), inputs.data(), inputs.size(), &raw, trace.out()));
    Instance out(raw);
    save(out.get(), cpOut);
    emitTrace(cpTrace, trace.str());
    std::cout << statsLine(out.get()) << '\n';
  });

  // solve
  std::string svProblem, svFile, svCert;
  std::int64_t svBudget = -1;
  LimitOptions svLimits;
  auto* solve = app.add_subcommand("solve", "decide an instance exactly (exit 10 yes, 20 no, 30 timeout or refusal)");
  solve->add_option("problem", svProblem, "sat, nae, 2col, 4col, hc, dhc, ds, cds, tsd, hampath, colrbds or listcol")->required();
  solve->add_option("file", svFile, "instance file")->required();
  solve->add_option("--budget", svBudget, "dominating-set budget (defaults to the file's budget)");
  solve->add_option("--cert", svCert, "write the certificate (JSON) here");
  svLimits.add(solve);
  solve->callback([&] {
    Instance in = load(svFile);
    sk_verdict verdict{};
    Owned cert, info;
    ok(sk_solve(svProblem.c_str(), in.get(), svBudget, &svLimits.limits, &verdict, cert.out(), info.out()));
    const json doc = json::parse(info.str());
    std::cout << doc.at("verdict").get<std::string>() << '\n';
    if (doc.contains("detail")) std::cerr << doc.at("detail").get<std::string>() << '\n';
    if (!svCert.empty() && !cert.empty()) writeText(svCert, cert.str());
    exitCode = verdict == SK_VERDICT_YES ? kExitYes : verdict == SK_VERDICT_NO ? kExitNo : kExitUndecided;
  });

  // check
  std::string ckProblem, ckFile, ckCert;
  std::int64_t ckBudget = -1;
  auto* check = app.add_subcommand("check", "validate a certificate (exit 0 valid, 1 invalid)");
  check->add_option("problem", ckProblem, "problem name as for solve")->required();
  check->add_option("file", ckFile, "instance file")->required();
  check->add_option("certificate", ckCert, "certificate file (JSON)")->required();
  check->add_option("--budget", ckBudget, "dominating-set budget (defaults to the file's budget)");
  check->callback([&] {
    Instance in = load(ckFile);
    std::ifstream certIn(ckCert, std::ios::binary);
    if (!certIn) throw CommandError("cannot open " + ckCert);
    const std::string certText((std::istreambuf_iterator<char>(certIn)), std::istreambuf_iterator<char>());
    int valid = 0;
    ok(sk_check(ckProblem.c_str(), in.get(), ckBudget, certText.c_str(), &valid));
    std::cout << (valid ? "valid" : "invalid") << '\n';
    exitCode = valid ? 0 : 1;
  });

  // gen
  std::string gnKind, gnOut, gnPlant;
  std::uint64_t gnSeed = 0;
  std::optional<int> gnN, gnM, gnK, gnCount, gnMin, gnMax, gnClassSize;
  std::optional<double> gnP;
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("kind", gnKind, "cnf, hypergraph, digraph, tsd, bipartite-ham or eq-col-rbds")
      ->required()
      ->check(CLI::IsMember({"cnf", "hypergraph", "digraph", "tsd", "bipartite-ham", "eq-col-rbds"}));
  gen->add_option("--seed", gnSeed, "generator seed");
  gen->add_option("-n", gnN, "variables, vertices, triangles (tsd), |B| (bipartite-ham, eq-col-rbds)");
  gen->add_option("-m", gnM, "|X| (tsd) or |A| (bipartite-ham)");
  gen->add_option("-k", gnK, "number of color classes (eq-col-rbds)");
  gen->add_option("--count", gnCount, "clauses or edges");
  gen->add_option("--min-size", gnMin, "smallest clause or edge");
  gen->add_option("--max-size", gnMax, "largest clause or edge");
  gen->add_option("--class-size", gnClassSize, "vertices per color class (eq-col-rbds)");
  gen->add_option("--p", gnP, "edge or arc probability");
  gen->add_option("--plant", gnPlant, "plant a yes- or no-instance")->check(CLI::IsMember({"yes", "no", "none"}));
  gen->add_option("--out", gnOut, "output file (default stdout)");
  gen->callback([&] {
    json params = json::object();
    const auto put = [&](const char* key, const auto& value) {
      if (value) params[key] = *value;
    };
    put("n", gnN);
    put("m", gnM);
    put("k", gnK);
    put("count", gnCount);
    put("minSize", gnMin);
    put("maxSize", gnMax);
    put("classSize", gnClassSize);
    put("p", gnP);
    if (!gnPlant.empty()) params["plant"] = gnPlant;
    sk_instance* raw = nullptr;
    ok(sk_generate(gnKind.c_str(), params.dump().c_str(), gnSeed, &raw));
    Instance out(raw);
    if (gnOut.empty()) {
      Owned text;
      ok(sk_instance_serialize(out.get(), text.out()));
      std::cout << text.str();
    } else {
      save(out.get(), gnOut);
    }
  });

  // verify
  std::string vfName, vfReport;
  int vfTrials = 100, vfPartitions = 0;
  std::uint64_t vfSeed = 0;
  std::optional<std::uint64_t> vfTrialSeed;
  double vfYesBias = 0.5;
  bool vfExact = false;
  int vfN = 0, vfM = 0, vfD = 0, vfK = 0, vfT = 0, vfCount = 0;
  double vfP = -1.0;
  LimitOptions vfLimits;
  auto* verify = app.add_subcommand("verify", "randomized oracle check of a transformation (exit 0 agree, 1 disagree, 3 undecided)");
  verify->add_option("transformation", vfName,
                     "kernel-hyp, kernel-nae, reduce-cnf-nae, reduce-nae-hyp, reduce-nae-tsd, reduce-karp, "
                     "compose-4col, compose-ham or compose-domset")
      ->required();
  verify->add_option("--trials", vfTrials, "number of trials");
  verify->add_option("--seed", vfSeed, "base seed; trial i uses seed xor i");
  verify->add_option("--trial-seed", vfTrialSeed, "replay the single trial with this seed");
  verify->add_option("--yes-bias", vfYesBias, "probability of planting a YES input");
  verify->add_flag("--exact", vfExact, "exact rank computation in kernel trials");
  verify->add_option("--partitions", vfPartitions, "Lovasz identity bipartitions per dropped edge (kernel-hyp)");
  verify->add_option("-n", vfN, "size parameter n");
  verify->add_option("-m", vfM, "size parameter m");
  verify->add_option("-d", vfD, "largest clause or edge size");
  verify->add_option("-k", vfK, "solution size k (compose-domset)");
  verify->add_option("-t", vfT, "inputs per composed batch (a power of 4)");
  verify->add_option("--count", vfCount, "clauses or edges");
  verify->add_option("--p", vfP, "edge or arc probability");
  verify->add_option("--report", vfReport, "write the full report (JSON) here");
  vfLimits.add(verify);
  verify->callback([&] {
    json config = {{"transformation", vfName},
                   {"trials", vfTrials},
                   {"seed", vfSeed},
                   {"yesBias", vfYesBias},
                   {"exact", vfExact},
                   {"partitions", vfPartitions},
                   {"params", {{"n", vfN}, {"m", vfM}, {"d", vfD}, {"k", vfK}, {"t", vfT}, {"count", vfCount}, {"p", vfP}}},
                   {"limits",
                    {{"nodeBudget", vfLimits.limits.node_budget},
                     {"seconds", vfLimits.limits.seconds},
                     {"variableCap", vfLimits.limits.variable_cap},
                     {"budgetCap", vfLimits.limits.budget_cap}}}};
    if (vfTrialSeed) config["trialSeed"] = *vfTrialSeed;
    Owned report;
    int code = 0;
    ok(sk_verify(config.dump().c_str(), report.out(), &code));
    const json doc = json::parse(report.str());
    std::cout << verifySummary(doc) << '\n';
    for (const char* list : {"failures", "undecided"}) {
      for (const auto& incident : doc.at(list)) {
        std::cout << "  trial " << incident.at("trial").get<int>() << " ["
                  << incident.at("kind").get<std::string>() << "] " << incident.at("detail").get<std::string>()
                  << "\n    replay: " << incident.at("replay").get<std::string>() << '\n';
      }
    }
    if (!vfReport.empty()) writeText(vfReport, report.str() + "\n");
    exitCode = code;
  });

  // stats
  std::string stFile;
  auto* stats = app.add_subcommand("stats", "print size counts and kernel-bound headroom");
  stats->add_option("file", stFile, "instance file")->required();
  stats->callback([&] {
    Instance in = load(stFile);
    std::cout << statsLine(in.get()) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exitCode;
}
