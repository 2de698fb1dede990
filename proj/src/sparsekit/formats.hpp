#pragma once

// Text formats. DIMACS-style for formulas and (hyper/di)graphs, JSON for
// structured instances and certificates. Serializers emit the canonical form;
// parse(serialize(v)) == v for every valid value.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sparsekit/model.hpp"

namespace sparsekit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  // 1-based line of the offending input, 0 when the error concerns the whole document.
  int line() const { return line_; }

 private:
  int line_;
};

CnfFormula parseCnf(std::string_view text);
std::string serializeCnf(const CnfFormula& f);

Hypergraph parseHypergraph(std::string_view text);
std::string serializeHypergraph(const Hypergraph& h);

// Graph files may carry a "c budget <B>" comment (dominating set outputs).
struct GraphDocument {
  Graph graph;
  std::optional<std::int64_t> budget;
};
GraphDocument parseGraphDocument(std::string_view text);
Graph parseGraph(std::string_view text);
std::string serializeGraph(const Graph& g, std::optional<std::int64_t> budget = {});

Digraph parseDigraph(std::string_view text);
std::string serializeDigraph(const Digraph& g);

nlohmann::json toJson(const TsdInstance& inst);
nlohmann::json toJson(const BipartiteHamInstance& inst);
nlohmann::json toJson(const EqColRbdsInstance& inst);
nlohmann::json toJson(const ListColoringInstance& inst);
nlohmann::json toJson(const Certificate& cert);

TsdInstance tsdFromJson(const nlohmann::json& doc);
BipartiteHamInstance bipartiteHamFromJson(const nlohmann::json& doc);
EqColRbdsInstance eqColRbdsFromJson(const nlohmann::json& doc);
ListColoringInstance listColoringFromJson(const nlohmann::json& doc);
Certificate certificateFromJson(const nlohmann::json& doc);

Certificate parseCertificate(std::string_view text);
std::string serializeCertificate(const Certificate& cert);

// Any instance file; the format is detected from the header line or the JSON
// "type" field.
struct InstanceDocument {
  AnyInstance instance;
  std::optional<std::int64_t> budget;
};
InstanceDocument parseInstance(std::string_view text);
std::string serializeInstance(const AnyInstance& instance, std::optional<std::int64_t> budget = {});

}  // namespace sparsekit
