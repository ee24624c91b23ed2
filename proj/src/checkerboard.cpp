#include "eqslice/checkerboard.hpp"

#include "eqslice/linalg.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace eqslice {

const char* to_string(ParseErrorCode c) {
  switch (c) {
    case ParseErrorCode::Malformed: return "Malformed";
    case ParseErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ParseErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ParseErrorCode::SelfLoop: return "SelfLoop";
  }
  return "Unknown";
}

namespace {

std::vector<std::pair<int, int>> read_edges(const nlohmann::json& j, const char* key,
                                            std::size_t n) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(ParseErrorCode::Malformed, std::string("missing edge list ") + key);
  const auto& arr = j[key];
  if (arr.size() != 2 * n) {
    std::ostringstream os;
    os << key << " has " << arr.size() << " edges, expected " << 2 * n;
    throw ParseError(ParseErrorCode::WrongEdgeCount, os.str());
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(ParseErrorCode::Malformed, std::string("edge ") + std::to_string(i + 1) +
                                                      " of " + key + " is not a pair of integers");
    int tail = e[0].get<int>();
    int head = e[1].get<int>();
    if (tail < 1 || head < 1 || tail > static_cast<int>(n + 1) || head > static_cast<int>(n + 1)) {
      std::ostringstream os;
      os << key << " edge " << i + 1 << " = (" << tail << "," << head << ") out of range 1.."
         << n + 1;
      throw ParseError(ParseErrorCode::IndexOutOfRange, os.str());
    }
    if (tail == head) {
      std::ostringstream os;
      os << key << " edge " << i + 1 << " is a self-loop at vertex " << tail;
      throw ParseError(ParseErrorCode::SelfLoop, os.str());
    }
    edges.emplace_back(tail, head);
  }
  return edges;
}

bool connected(std::size_t vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count == 0) return true;
  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertex_count;
  for (const auto& [tail, head] : edges) {
    std::size_t a = find(tail - 1), b = find(head - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

CheckerboardPresentation parse_presentation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseErrorCode::Malformed, e.what());
  }
  if (!j.is_object()) throw ParseError(ParseErrorCode::Malformed, "top level is not an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw ParseError(ParseErrorCode::Malformed, "missing or invalid rank n");

  CheckerboardPresentation p;
  p.n = j["n"].get<std::size_t>();
  p.name = j.value("name", std::string{});
  p.metadata = j.value("metadata", std::string{});
  p.edges_plus = read_edges(j, "edges_plus", p.n);
  p.edges_minus = read_edges(j, "edges_minus", p.n);
  return p;
}

CheckerboardPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseErrorCode::Malformed, "cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string serialize_presentation(const CheckerboardPresentation& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["n"] = p.n;
  auto dump = [](const std::vector<std::pair<int, int>>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [t, h] : edges) arr.push_back({t, h});
    return arr;
  };
  j["edges_plus"] = dump(p.edges_plus);
  j["edges_minus"] = dump(p.edges_minus);
  if (!p.metadata.empty()) j["metadata"] = p.metadata;
  return j.dump(2);
}

IntMatrix full_incidence(const CheckerboardPresentation& p, Side side) {
  const auto& edges = p.edges(side);
  IntMatrix j(p.n + 1, 2 * p.n);
  for (std::size_t col = 0; col < edges.size(); ++col) {
    j(edges[col].first - 1, col) = 1;
    j(edges[col].second - 1, col) = -1;
  }
  return j;
}

IntMatrix reduced_incidence(const CheckerboardPresentation& p, Side side) {
  return full_incidence(p, side).without_row(p.n);
}

GoeritzForm goeritz(const CheckerboardPresentation& p, Side side) {
  IntMatrix j = reduced_incidence(p, side);
  return GoeritzForm{j * j.transpose(), side};
}

ValidationReport validate(const CheckerboardPresentation& p) {
  ValidationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("plus graph connected", connected(p.n + 1, p.edges_plus));
  add("minus graph connected", connected(p.n + 1, p.edges_minus));

  // Cut space of each graph must annihilate the cycle space of its dual:
  // the full incidence matrices are orthogonal for compatibly oriented duals.
  IntMatrix jp = full_incidence(p, Side::plus);
  IntMatrix jm = full_incidence(p, Side::minus);
  bool orth = true;
  std::string witness;
  for (std::size_t i = 0; i <= p.n && orth; ++i)
    for (std::size_t k = 0; k <= p.n && orth; ++k) {
      Int s = 0;
      for (std::size_t c = 0; c < 2 * p.n; ++c) s += jp(i, c) * jm(k, c);
      if (s != 0) {
        orth = false;
        std::ostringstream os;
        os << "row " << i + 1 << " of J+ times row " << k + 1 << " of J- is " << s;
        witness = os.str();
      }
    }
  add("incidence orthogonality J+ J-^T = 0", orth, witness);

  GoeritzForm ap = goeritz(p, Side::plus);
  GoeritzForm am = goeritz(p, Side::minus);
  add("plus Goeritz form positive definite", is_positive_definite(ap.matrix));
  add("minus Goeritz form positive definite", is_positive_definite(am.matrix));

  bool diag_ok = ap.matrix.diagonal() == am.matrix.diagonal();
  add("Goeritz diagonals match", diag_ok,
      diag_ok ? "" : "diag(A+) = " + to_string(ap.matrix.diagonal()) +
                         ", diag(A-) = " + to_string(am.matrix.diagonal()));

  Int dp = determinant(ap.matrix);
  Int dm = determinant(am.matrix);
  add("Goeritz determinants match", dp == dm,
      dp == dm ? "det = " + dp.str() : "det(A+) = " + dp.str() + ", det(A-) = " + dm.str());

  return report;
}

}  // namespace eqslice
