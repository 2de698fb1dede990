#include "sparsekit/formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace sparsekit {

using nlohmann::json;

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> splitLines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    lines.push_back({number, trim(text.substr(pos, end - pos))});
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    auto end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::int64_t toInt(std::string_view token, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct Header {
  int line = 0;
  std::int64_t count = 0;
  std::int64_t items = 0;
};

// Locates the "p <kind> <count> <items>" line; everything before it must be
// comments or blank.
Header readHeader(const std::vector<Line>& lines, std::string_view kind, std::size_t& cursor) {
  for (; cursor < lines.size(); ++cursor) {
    const auto& l = lines[cursor];
    if (l.text.empty() || l.text.front() == 'c') continue;
    auto tok = tokens(l.text);
    if (tok.size() != 4 || tok[0] != "p" || tok[1] != kind) {
      throw ParseError(l.number, "malformed header, expected 'p " + std::string(kind) +
                                     " <n> <m>'");
    }
    Header h{l.number, toInt(tok[2], l.number), toInt(tok[3], l.number)};
    if (h.count < 0 || h.items < 0) throw ParseError(l.number, "negative count in header");
    ++cursor;
    return h;
  }
  throw ParseError(0, "missing 'p " + std::string(kind) + "' header");
}

// Reads 0-terminated integer lists (clauses or hyperedges).
std::vector<std::pair<int, std::vector<std::int64_t>>> readZeroTerminated(
    const std::vector<Line>& lines, std::size_t cursor) {
  std::vector<std::pair<int, std::vector<std::int64_t>>> lists;
  std::vector<std::int64_t> current;
  int startLine = 0;
  for (; cursor < lines.size(); ++cursor) {
    const auto& l = lines[cursor];
    if (l.text.empty() || l.text.front() == 'c') continue;
    if (l.text.front() == '%') break;
    for (auto tok : tokens(l.text)) {
      if (current.empty() && startLine == 0) startLine = l.number;
      auto value = toInt(tok, l.number);
      if (value == 0) {
        lists.emplace_back(startLine, std::move(current));
        current.clear();
        startLine = 0;
      } else {
        current.push_back(value);
      }
    }
  }
  if (!current.empty()) throw ParseError(startLine, "list is not terminated by 0");
  return lists;
}

template <class Fn>
auto rethrowAt(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInstance& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

CnfFormula parseCnf(std::string_view text) {
  auto lines = splitLines(text);
  std::size_t cursor = 0;
  Header header = readHeader(lines, "cnf", cursor);
  std::vector<Clause> clauses;
  for (auto& [line, values] : readZeroTerminated(lines, cursor)) {
    Clause clause;
    for (auto v : values) {
      if (v > header.count || -v > header.count) {
        throw ParseError(line, "variable " + std::to_string(v < 0 ? -v : v) + " exceeds " +
                                   std::to_string(header.count));
      }
      clause.push_back(Literal::fromDimacs(static_cast<int>(v)));
    }
    clauses.push_back(std::move(clause));
  }
  if (static_cast<std::int64_t>(clauses.size()) != header.items) {
    throw ParseError(header.line, "header announces " + std::to_string(header.items) +
                                      " clauses, found " + std::to_string(clauses.size()));
  }
  return rethrowAt(header.line, [&] {
    return CnfFormula(static_cast<int>(header.count), std::move(clauses));
  });
}

std::string serializeCnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.numVars() << ' ' << f.numClauses() << '\n';
  for (const auto& clause : f.clauses()) {
    for (const auto& lit : clause) out << lit.toDimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

Hypergraph parseHypergraph(std::string_view text) {
  auto lines = splitLines(text);
  std::size_t cursor = 0;
  Header header = readHeader(lines, "hyp", cursor);
  std::vector<std::vector<Vertex>> edges;
  for (auto& [line, values] : readZeroTerminated(lines, cursor)) {
    std::vector<Vertex> edge;
    for (auto v : values) {
      if (v < 1 || v > header.count) {
        throw ParseError(line, "vertex " + std::to_string(v) + " out of range 1.." +
                                   std::to_string(header.count));
      }
      edge.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(edge));
  }
  if (static_cast<std::int64_t>(edges.size()) != header.items) {
    throw ParseError(header.line, "header announces " + std::to_string(header.items) +
                                      " edges, found " + std::to_string(edges.size()));
  }
  return rethrowAt(header.line, [&] {
    return Hypergraph(static_cast<int>(header.count), std::move(edges));
  });
}

std::string serializeHypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "p hyp " << h.numVertices() << ' ' << h.numEdges() << '\n';
  for (const auto& e : h.edges()) {
    for (Vertex v : e) out << v << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

// Shared reader for "p edge" / "p arc" files.
std::pair<int, std::vector<std::pair<Vertex, Vertex>>> readPairs(
    const std::vector<Line>& lines, std::string_view kind, char tag,
    std::optional<std::int64_t>* budget) {
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tok = tokens(lines[i].text);
    if (budget && tok.size() == 3 && tok[0] == "c" && tok[1] == "budget") {
      *budget = toInt(tok[2], lines[i].number);
    }
  }
  Header header = readHeader(lines, kind, cursor);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (; cursor < lines.size(); ++cursor) {
    const auto& l = lines[cursor];
    if (l.text.empty() || l.text.front() == 'c') continue;
    auto tok = tokens(l.text);
    if (tok.size() != 3 || tok[0].size() != 1 || tok[0][0] != tag) {
      throw ParseError(l.number, std::string("expected '") + tag + " <u> <v>'");
    }
    auto u = toInt(tok[1], l.number), v = toInt(tok[2], l.number);
    for (auto x : {u, v}) {
      if (x < 1 || x > header.count) {
        throw ParseError(l.number, "vertex " + std::to_string(x) + " out of range 1.." +
                                       std::to_string(header.count));
      }
    }
    if (u == v) throw ParseError(l.number, "self-loop on vertex " + std::to_string(u));
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<std::int64_t>(pairs.size()) != header.items) {
    throw ParseError(header.line, "header announces " + std::to_string(header.items) +
                                      " entries, found " + std::to_string(pairs.size()));
  }
  return {static_cast<int>(header.count), std::move(pairs)};
}

}  // namespace

GraphDocument parseGraphDocument(std::string_view text) {
  auto lines = splitLines(text);
  std::optional<std::int64_t> budget;
  auto [n, pairs] = readPairs(lines, "edge", 'e', &budget);
  return {Graph(n, std::move(pairs)), budget};
}

Graph parseGraph(std::string_view text) { return parseGraphDocument(text).graph; }

std::string serializeGraph(const Graph& g, std::optional<std::int64_t> budget) {
  std::ostringstream out;
  if (budget) out << "c budget " << *budget << '\n';
  out << "p edge " << g.numVertices() << ' ' << g.numEdges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

Digraph parseDigraph(std::string_view text) {
  auto lines = splitLines(text);
  auto [n, pairs] = readPairs(lines, "arc", 'a', nullptr);
  return Digraph(n, std::move(pairs));
}

std::string serializeDigraph(const Digraph& g) {
  std::ostringstream out;
  out << "p arc " << g.numVertices() << ' ' << g.numArcs() << '\n';
  for (const auto& [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
  return out.str();
}

// ---- JSON -------------------------------------------------------------------

namespace {

json edgesJson(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(0, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

template <class T>
T as(const json& value, const char* key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw ParseError(0, std::string("field '") + key + "' has the wrong type");
  }
}

Graph graphFromJson(const json& doc) {
  auto n = as<int>(field(doc, "n"), "n");
  auto edges = as<std::vector<std::array<int, 2>>>(field(doc, "edges"), "edges");
  std::vector<Edge> pairs;
  for (const auto& e : edges) pairs.emplace_back(e[0], e[1]);
  return Graph(n, std::move(pairs));
}

void expectType(const json& doc, std::string_view type) {
  auto actual = as<std::string>(field(doc, "type"), "type");
  if (actual != type) {
    throw ParseError(0, "expected a '" + std::string(type) + "' document, got '" + actual + "'");
  }
}

template <class Fn>
auto invariantErrors(Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInstance& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

json toJson(const TsdInstance& inst) {
  return {{"type", "tsd"},
          {"n", inst.graph().numVertices()},
          {"edges", edgesJson(inst.graph())},
          {"X", inst.independent()},
          {"triangles", inst.triangles()}};
}

json toJson(const BipartiteHamInstance& inst) {
  return {{"type", "bipartite-ham"},
          {"n", inst.graph().numVertices()},
          {"edges", edgesJson(inst.graph())},
          {"A", inst.sideA()},
          {"B", inst.sideB()},
          {"s", inst.s()},
          {"t", inst.t()}};
}

json toJson(const EqColRbdsInstance& inst) {
  return {{"type", "eq-col-rbds"},
          {"n", inst.graph().numVertices()},
          {"edges", edgesJson(inst.graph())},
          {"classes", inst.colorClasses()},
          {"B", inst.blue()}};
}

json toJson(const ListColoringInstance& inst) {
  json lists = json::array();
  for (ColorMask mask : inst.lists()) {
    json colors = json::array();
    for (int c = 1; c <= inst.paletteSize(); ++c) {
      if (mask & colorBit(c)) colors.push_back(c);
    }
    lists.push_back(std::move(colors));
  }
  return {{"type", "list-coloring"},
          {"n", inst.graph().numVertices()},
          {"edges", edgesJson(inst.graph())},
          {"palette", inst.paletteSize()},
          {"lists", std::move(lists)}};
}

json toJson(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, Assignment>) {
          std::vector<int> values(c.values.begin(), c.values.end());
          return {{"type", "assignment"}, {"values", values}};
        } else if constexpr (std::is_same_v<C, Coloring>) {
          return {{"type", "coloring"}, {"colors", c.colors}};
        } else if constexpr (std::is_same_v<C, HamCycle>) {
          return {{"type", "ham-cycle"}, {"order", c.order}};
        } else {
          return {{"type", "dom-set"}, {"vertices", c.vertices}};
        }
      },
      cert);
}

TsdInstance tsdFromJson(const json& doc) {
  expectType(doc, "tsd");
  return invariantErrors([&] {
    return TsdInstance(graphFromJson(doc), as<std::vector<Vertex>>(field(doc, "X"), "X"),
                       as<std::vector<Triangle>>(field(doc, "triangles"), "triangles"));
  });
}

BipartiteHamInstance bipartiteHamFromJson(const json& doc) {
  expectType(doc, "bipartite-ham");
  return invariantErrors([&] {
    return BipartiteHamInstance(graphFromJson(doc), as<std::vector<Vertex>>(field(doc, "A"), "A"),
                                as<std::vector<Vertex>>(field(doc, "B"), "B"),
                                as<Vertex>(field(doc, "s"), "s"), as<Vertex>(field(doc, "t"), "t"));
  });
}

EqColRbdsInstance eqColRbdsFromJson(const json& doc) {
  expectType(doc, "eq-col-rbds");
  return invariantErrors([&] {
    return EqColRbdsInstance(
        graphFromJson(doc), as<std::vector<std::vector<Vertex>>>(field(doc, "classes"), "classes"),
        as<std::vector<Vertex>>(field(doc, "B"), "B"));
  });
}

ListColoringInstance listColoringFromJson(const json& doc) {
  expectType(doc, "list-coloring");
  return invariantErrors([&] {
    int palette = doc.contains("palette") ? as<int>(doc.at("palette"), "palette") : 4;
    if (palette < 1 || palette > kMaxPalette) throw InvalidInstance("palette size out of range");
    std::vector<ColorMask> masks;
    for (const auto& list : as<std::vector<std::vector<int>>>(field(doc, "lists"), "lists")) {
      ColorMask mask = 0;
      for (int c : list) {
        if (c < 1 || c > palette) throw InvalidInstance("color " + std::to_string(c) + " not in palette");
        mask |= colorBit(c);
      }
      masks.push_back(mask);
    }
    return ListColoringInstance(graphFromJson(doc), std::move(masks), palette);
  });
}

Certificate certificateFromJson(const json& doc) {
  auto type = as<std::string>(field(doc, "type"), "type");
  if (type == "assignment") {
    Assignment a;
    for (int v : as<std::vector<int>>(field(doc, "values"), "values")) {
      if (v != 0 && v != 1) throw ParseError(0, "assignment values must be 0 or 1");
      a.values.push_back(v == 1);
    }
    return a;
  }
  if (type == "coloring") return Coloring{as<std::vector<int>>(field(doc, "colors"), "colors")};
  if (type == "ham-cycle") return HamCycle{as<std::vector<Vertex>>(field(doc, "order"), "order")};
  if (type == "dom-set") {
    return DomSet{as<std::vector<Vertex>>(field(doc, "vertices"), "vertices")};
  }
  throw ParseError(0, "unknown certificate type '" + type + "'");
}

namespace {

json parseJsonText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError(line, "invalid JSON");
  }
}

}  // namespace

Certificate parseCertificate(std::string_view text) {
  return certificateFromJson(parseJsonText(text));
}

std::string serializeCertificate(const Certificate& cert) { return toJson(cert).dump() + "\n"; }

InstanceDocument parseInstance(std::string_view text) {
  for (const auto& l : splitLines(text)) {
    if (l.text.empty()) continue;
    if (l.text.front() == '{') break;
    if (l.text.front() == 'c') continue;
    auto tok = tokens(l.text);
    if (tok.size() >= 2 && tok[0] == "p") {
      if (tok[1] == "cnf") return {parseCnf(text), {}};
      if (tok[1] == "hyp") return {parseHypergraph(text), {}};
      if (tok[1] == "edge") {
        auto doc = parseGraphDocument(text);
        return {std::move(doc.graph), doc.budget};
      }
      if (tok[1] == "arc") return {parseDigraph(text), {}};
    }
    throw ParseError(l.number, "unrecognized header");
  }
  json doc = parseJsonText(text);
  auto type = as<std::string>(field(doc, "type"), "type");
  if (type == "tsd") return {tsdFromJson(doc), {}};
  if (type == "bipartite-ham") return {bipartiteHamFromJson(doc), {}};
  if (type == "eq-col-rbds") return {eqColRbdsFromJson(doc), {}};
  if (type == "list-coloring") return {listColoringFromJson(doc), {}};
  throw ParseError(0, "unknown instance type '" + type + "'");
}

std::string serializeInstance(const AnyInstance& instance, std::optional<std::int64_t> budget) {
  return std::visit(
      [&](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, CnfFormula>) return serializeCnf(value);
        else if constexpr (std::is_same_v<T, Hypergraph>) return serializeHypergraph(value);
        else if constexpr (std::is_same_v<T, Graph>) return serializeGraph(value, budget);
        else if constexpr (std::is_same_v<T, Digraph>) return serializeDigraph(value);
        else return toJson(value).dump() + "\n";
      },
      instance);
}

}  // namespace sparsekit
