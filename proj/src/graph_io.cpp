#include "itw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "itw/error.hpp"

namespace itw {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
    throw InputError("line " + std::to_string(line_no) + ": bad vertex id '" + std::string(tok) + "'");
  return v;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::edge_list;
  if (name == "json") return GraphFormat::json;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long declared = -1;
  long long max_id = -1;
  bool seen_data = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tok = tokens(line);
    if (tok.size() == 1 && !seen_data) {
      declared = to_int(tok[0], line_no);
      seen_data = true;
      continue;
    }
    if (tok.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    seen_data = true;
    long long u = to_int(tok[0], line_no), v = to_int(tok[1], line_no);
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  long long n = declared >= 0 ? declared : max_id + 1;
  if (max_id >= n) throw InputError("edge list mentions vertex " + std::to_string(max_id) + " but declares " +
                                    std::to_string(n) + " vertices");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text)
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw InputError("graph6: truncated input");
    return static_cast<unsigned>(text[pos++]) - 63u;
  };
  std::size_t n = next();
  if (n == 63) {
    if (text.size() > 1 && static_cast<unsigned>(text[1]) - 63u == 63) {
      pos = 2;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  std::vector<Edge> edges;
  unsigned word = 0;
  int bits_left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos != text.size()) throw InputError("graph6: trailing data");
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned word = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json j;
  j["vertex_count"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  j["adjacency"] = nlohmann::json::array();
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    auto nb = g.neighbors(v);
    j["adjacency"].push_back(std::vector<Vertex>(nb.begin(), nb.end()));
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return Graph(j.at("vertex_count").get<std::size_t>(), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph json: ") + e.what());
  }
}

std::string format_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return to_graph6(g) + "\n";
    case GraphFormat::edge_list:
      return to_edge_list(g);
    case GraphFormat::json:
      return to_json(g).dump(2) + "\n";
  }
  return {};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  auto ext = path.extension().string();
  try {
    if (ext == ".g6" || ext == ".graph6") return parse_graph6(text);
    if (ext == ".json") return graph_from_json(nlohmann::json::parse(text));
    return parse_edge_list(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_graph(g, format);
}

}  // namespace itw
