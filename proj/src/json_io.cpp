#include "dgc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dgc {

Presentation presentation_from_name(const std::string& name) {
  if (name == "F") return Presentation::free_group();
  if (name == "G") return Presentation::involution_b();
  if (name == "G'" || name == "Gp")
    return Presentation::custom(
        {parse_word("bb"), parse_word("a^8"), parse_word("(bA)^7")});
  if (name == "G''" || name == "Gpp")
    return Presentation::custom({parse_word("bb"), parse_word("a^4"),
                                 parse_word("(ab)^7"), parse_word("(a,b)^6")});
  throw std::invalid_argument("unknown presentation name: " + name);
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["mode"] = p.mode_name();
  json relators = json::array();
  for (const Word& r : p.relators) relators.push_back(r.str());
  j["relators"] = relators;
  return j;
}

Presentation presentation_from_json(const json& j) {
  std::string mode = j.at("mode").get<std::string>();
  std::vector<Word> relators;
  for (const auto& r : j.value("relators", json::array()))
    relators.push_back(parse_word(r.get<std::string>()));
  if (mode == "F") return Presentation::free_group();
  if (mode == "G") return Presentation::involution_b();
  if (mode == "custom") return Presentation::custom(std::move(relators));
  throw std::invalid_argument("unknown presentation mode: " + mode);
}

json coset_table_to_json(const CosetTable& t) {
  json action;
  const char* names[kNumLetters] = {"a", "A", "b", "B"};
  for (Letter x = 0; x < kNumLetters; ++x) {
    json col = json::array();
    for (int c = 0; c < t.size(); ++c) col.push_back(t.action(c, x) + 1);
    action[names[x]] = col;
  }
  json transversal = json::array();
  for (const Word& w : t.transversal()) transversal.push_back(w.str());
  return json{{"n", t.size()}, {"action", action}, {"transversal", transversal}};
}

CosetTable coset_table_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::array<std::vector<int>, kNumLetters> cols;
  const char* names[kNumLetters] = {"a", "A", "b", "B"};
  for (Letter x = 0; x < kNumLetters; ++x) {
    for (const auto& v : j.at("action").at(names[x])) {
      int target = v.get<int>();
      if (target < 1 || target > n) throw std::invalid_argument("coset out of range");
      cols[x].push_back(target - 1);
    }
    if (static_cast<int>(cols[x].size()) != n)
      throw std::invalid_argument("action column length mismatch");
  }
  return CosetTable::from_action(cols);
}

json dessin_to_json(const Dessin& d, bool with_labels) {
  json j;
  j["n"] = d.degree();
  j["g0"] = d.g0().str();
  j["g1"] = d.g1().str();
  if (with_labels) {
    json labels = json::array();
    for (const Word& w : d.labels()) labels.push_back(w.str());
    j["labels"] = labels;
  }
  return j;
}

Dessin dessin_from_json(const json& j) {
  int n = j.at("n").get<int>();
  Perm g0 = Perm::parse(j.at("g0").get<std::string>(), n);
  Perm g1 = Perm::parse(j.at("g1").get<std::string>(), n);
  return Dessin::from_pair(g0, g1);
}

json geometry_to_json(const IncidenceStructure& s) {
  json lines = json::array();
  for (const auto& line : s.lines) {
    json l = json::array();
    for (int p : line) l.push_back(p + 1);
    lines.push_back(l);
  }
  json j{{"points", s.points}, {"lines", lines}};
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

IncidenceStructure geometry_from_json(const json& j) {
  int points = j.at("points").get<int>();
  std::vector<std::vector<int>> lines;
  for (const auto& l : j.at("lines")) {
    std::vector<int> line;
    for (const auto& p : l) line.push_back(p.get<int>() - 1);
    lines.push_back(std::move(line));
  }
  return IncidenceStructure::make(points, std::move(lines),
                                  j.value("name", std::string()));
}

json report_to_json(const ContextualityReport& r) {
  json j;
  j["l"] = r.l;
  j["u"] = r.u;
  j["c"] = r.c.str();
  j["l_over_u"] = r.l_over_u ? json(r.l_over_u->str()) : json(nullptr);
  j["mode"] = mode_name(r.mode);
  json defective = json::array();
  for (int li : r.defective) defective.push_back(li + 1);
  j["defective_lines"] = defective;
  json labels = json::array();
  for (const Word& w : r.labels) labels.push_back(w.str());
  j["labels"] = labels;
  return j;
}

std::string dessin_to_dot(const Dessin& d) {
  std::ostringstream out;
  out << "graph dessin {\n  layout=neato;\n";
  auto cycles_of = [](const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cycle;
      for (int j = i; !seen[j]; j = p(j)) {
        seen[j] = 1;
        cycle.push_back(j);
      }
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  };
  auto black = cycles_of(d.g0());
  auto white = cycles_of(d.g1());
  std::vector<int> black_of(d.degree()), white_of(d.degree());
  for (std::size_t ci = 0; ci < black.size(); ++ci) {
    out << "  b" << ci << " [shape=circle,style=filled,fillcolor=black,label=\"\"];\n";
    for (int e : black[ci]) black_of[e] = static_cast<int>(ci);
  }
  for (std::size_t ci = 0; ci < white.size(); ++ci) {
    out << "  w" << ci << " [shape=circle,fillcolor=white,label=\"\"];\n";
    for (int e : white[ci]) white_of[e] = static_cast<int>(ci);
  }
  for (int e = 0; e < d.degree(); ++e) {
    std::string label = d.labels()[e].empty() ? "e" : d.labels()[e].str();
    out << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"" << e + 1
        << ":" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string incidence_to_dot(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "graph incidence {\n";
  for (int p = 0; p < s.points; ++p)
    out << "  p" << p + 1 << " [shape=circle];\n";
  for (std::size_t li = 0; li < s.lines.size(); ++li) {
    out << "  l" << li + 1 << " [shape=box];\n";
    for (int p : s.lines[li]) out << "  p" << p + 1 << " -- l" << li + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string collinearity_to_dot(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "graph collinearity {\n";
  auto adj = s.collinearity();
  for (int p = 0; p < s.points; ++p)
    for (int q = p + 1; q < s.points; ++q)
      if (adj[p][q]) out << "  p" << p + 1 << " -- p" << q + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dgc
