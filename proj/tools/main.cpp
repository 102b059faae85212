#include <cmath>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "dgc/catalog.hpp"
#include "dgc/contextuality.hpp"
#include "dgc/extract.hpp"
#include "dgc/json_io.hpp"
#include "dgc/pauli.hpp"
#include "dgc/belyi.hpp"

using namespace dgc;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

Presentation resolve_presentation(const std::string& name, const std::string& relators) {
  if (!relators.empty()) {
    std::vector<Word> rs;
    std::size_t start = 0;
    while (start < relators.size()) {
      std::size_t comma = relators.find(',', start);
      if (comma == std::string::npos) comma = relators.size();
      rs.push_back(parse_word(relators.substr(start, comma - start)));
      start = comma + 1;
    }
    return Presentation::custom(std::move(rs));
  }
  return presentation_from_name(name);
}

CommutationMode resolve_mode(const std::string& mode) {
  if (mode == "iterated") return CommutationMode::Iterated;
  if (mode == "pairwise") return CommutationMode::Pairwise;
  throw std::invalid_argument("unknown mode: " + mode);
}

// Recognition against the catalog; large vertex-transitive structures are
// only matched by parameters (the backtracking would not terminate fast).
std::string recognise(const IncidenceStructure& s) {
  if (s.points <= 40) {
    for (const std::string& name : catalog_names()) {
      IncidenceStructure candidate = build_geometry(name);
      if (candidate.points != s.points || candidate.lines.size() != s.lines.size())
        continue;
      if (isomorphic(s, candidate).isomorphic) return name;
    }
  }
  for (int gon : {4, 6, 8}) {
    if (s.lines.empty() || !s.connected()) break;
    int ls = static_cast<int>(s.lines[0].size()) - 1;
    int pd = static_cast<int>(s.lines_through(0).size()) - 1;
    try {
      if (polygon_check(s, gon, ls, pd).pass)
        return "generalized " + std::to_string(gon) + "-gon of order (" +
               std::to_string(ls) + "," + std::to_string(pd) + ")";
    } catch (const std::invalid_argument&) {
      break;
    }
  }
  return "";
}

json dessin_summary(const Dessin& d) {
  json j;
  j["n"] = d.degree();
  j["signature"] = {d.black_vertices(), d.white_vertices(), d.faces(), d.genus()};
  j["passport"] = d.passport().str();
  return j;
}

int cmd_enumerate(const std::string& presentation, const std::string& relators, int index,
                  bool all, int jobs, const std::string& out_dir) {
  Presentation p = resolve_presentation(presentation, relators);
  auto tables = low_index_subgroups(p, index, !all, jobs);
  json summary;
  summary["presentation"] = presentation_to_json(p);
  summary["index"] = index;
  summary["convention"] = all ? "all subgroups" : "conjugacy classes";
  summary["count"] = tables.size();
  std::map<int, int> genus_hist;
  std::map<std::string, int> passport_hist;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Dessin d = Dessin::from_table(tables[i]);
    ++genus_hist[d.genus()];
    ++passport_hist[d.passport().str()];
    if (!out_dir.empty()) {
      char name[64];
      std::snprintf(name, sizeof name, "dessin_%05zu.json", i);
      json j = dessin_to_json(d);
      j["table"] = coset_table_to_json(tables[i]);
      write_text_file((fs::path(out_dir) / name).string(), j.dump(2) + "\n");
    }
  }
  summary["genus_histogram"] = json::object();
  for (auto [g, c] : genus_hist) summary["genus_histogram"][std::to_string(g)] = c;
  summary["passport_histogram"] = json::object();
  for (auto& [pp, c] : passport_hist) summary["passport_histogram"][pp] = c;
  if (!out_dir.empty())
    write_text_file((fs::path(out_dir) / "summary.json").string(), summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& dessin_file, const std::string& labels_flag,
                const std::string& out_dir) {
  Dessin d = dessin_from_json(json::parse(read_text_file(dessin_file)));
  json out = dessin_summary(d);
  json transversals = json::array();
  auto variants = labels_flag == "all" ? d.labels_variants()
                                       : std::vector<std::vector<Word>>{d.labels()};
  for (const auto& labels : variants) {
    json t = json::array();
    for (const Word& w : labels) t.push_back(w.str());
    transversals.push_back(t);
  }
  out["transversals"] = transversals;
  json geometries = json::array();
  for (const StabilizerGeometry& sg : extract_geometries(d)) {
    json g;
    g["stabilizer_order"] = sg.stab_order;
    g["class"] = sg.label;
    if (!sg.name_hint.empty()) g["stabilizer_name"] = sg.name_hint;
    g["geometry"] = geometry_to_json(sg.structure);
    std::string name = recognise(sg.structure);
    if (!name.empty()) g["recognised_as"] = name;
    geometries.push_back(g);
  }
  out["stabilizer_geometries"] = geometries;
  if (!out_dir.empty()) {
    write_text_file((fs::path(out_dir) / "dessin.dot").string(), dessin_to_dot(d));
    int gi = 0;
    for (const StabilizerGeometry& sg : extract_geometries(d)) {
      write_text_file(
          (fs::path(out_dir) / ("geometry_" + std::to_string(gi) + ".dot")).string(),
          incidence_to_dot(sg.structure));
      ++gi;
    }
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_score(const std::string& dessin_file, const std::string& geometry_file,
              std::uint64_t stab_class, const std::string& labels_flag) {
  Dessin d = dessin_from_json(json::parse(read_text_file(dessin_file)));
  std::optional<IncidenceStructure> geometry;
  if (!geometry_file.empty()) {
    geometry = geometry_from_json(json::parse(read_text_file(geometry_file)));
  } else {
    for (const StabilizerGeometry& sg : extract_geometries(d))
      if (sg.stab_order == stab_class) geometry = sg.structure;
    if (!geometry)
      throw std::invalid_argument("no stabilizer class of order " +
                                  std::to_string(stab_class));
  }
  auto variants = labels_flag == "all" ? d.labels_variants()
                                       : std::vector<std::vector<Word>>{d.labels()};
  json out = json::array();
  for (std::size_t li = 0; li < variants.size(); ++li) {
    json entry;
    entry["labeling"] = li;
    entry["iterated"] =
        report_to_json(score(*geometry, variants[li], d, CommutationMode::Iterated));
    entry["pairwise"] =
        report_to_json(score(*geometry, variants[li], d, CommutationMode::Pairwise));
    out.push_back(entry);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int hyperplane_count(const IncidenceStructure& s, const std::string& mode) {
  if (mode == "brute") return static_cast<int>(hyperplanes_brute(s).size());
  if (mode == "veldkamp") return static_cast<int>(hyperplanes_veldkamp(s).size());
  if (s.points <= 25) return static_cast<int>(hyperplanes_brute(s).size());
  return static_cast<int>(hyperplanes_veldkamp(s).size());
}

int cmd_hyperplanes(const std::string& name, const std::string& geometry_file,
                    const std::string& mode) {
  IncidenceStructure s = geometry_file.empty()
                             ? build_geometry(name)
                             : geometry_from_json(json::parse(read_text_file(geometry_file)));
  int h = hyperplane_count(s, mode);
  double log2h = std::log2(static_cast<double>(h));
  json out{{"geometry", s.name.empty() ? name : s.name},
           {"h", h},
           {"log2_h", log2h},
           {"round_log2_h", static_cast<int>(std::lround(log2h))}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_belyi_check(const std::string& function, const std::string& dessin_file) {
  RationalMap f = RationalMap::parse(function);
  BelyiPassport pp = passport_of(f);
  json out;
  out["degree"] = pp.degree;
  out["passport"] = {{"over0", pp.over0}, {"over1", pp.over1}, {"overinf", pp.overinf}};
  out["sums_match_degree"] = pp.sums_match_degree;
  out["critical_values_confined"] = pp.critical_values_confined;
  bool match = true;
  if (!dessin_file.empty()) {
    Dessin d = dessin_from_json(json::parse(read_text_file(dessin_file)));
    match = matches_dessin(f, d);
    out["dessin_passport"] = d.passport().str();
    out["matches_dessin"] = match;
  }
  std::cout << out.dump(2) << "\n";
  return match && pp.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_pauli(const std::string& what, int qubits) {
  json out;
  if (what == "mermin-square") {
    auto square = find_mermin_square();
    MerminSquareVerdict v = verify_mermin_square(square);
    json rows = json::array();
    for (int r = 0; r < 3; ++r)
      rows.push_back({square[r][0].str(), square[r][1].str(), square[r][2].str()});
    out["square"] = rows;
    out["row_signs"] = v.row_signs;
    out["col_signs"] = v.col_signs;
    out["negative_lines"] = v.negative_lines;
    out["valid"] = v.valid;
    std::cout << out.dump(2) << "\n";
    return v.valid ? kExitOk : kExitMismatch;
  }
  if (what == "pentagram") {
    IncidenceStructure tmpl = build_geometry("pentagram");
    auto ops = find_pentagram(tmpl.lines);
    PentagramVerdict v = verify_pentagram(ops, tmpl.lines);
    json labels = json::array();
    for (const PauliOp& op : ops) labels.push_back(op.str());
    json lines = json::array();
    for (const auto& line : tmpl.lines) {
      json l = json::array();
      for (int p : line) l.push_back(p + 1);
      lines.push_back(l);
    }
    out["operators"] = labels;
    out["lines"] = lines;
    out["line_signs"] = v.line_signs;
    out["negative_lines"] = v.negative_lines;
    out["valid"] = v.valid;
    std::cout << out.dump(2) << "\n";
    return v.valid ? kExitOk : kExitMismatch;
  }
  if (what == "maxset") {
    if (qubits < 1 || qubits > 16) throw std::invalid_argument("qubits out of range");
    std::vector<PauliOp> gens;
    for (int i = 0; i < qubits; ++i)
      gens.push_back(PauliOp(qubits, 0, std::uint64_t{1} << i, 0));
    MaxCommutingSet set = max_commuting_geometry(gens);
    json labels = json::array();
    for (const PauliOp& op : set.labels) labels.push_back(op.str());
    out["operators"] = labels;
    out["geometry"] = geometry_to_json(set.structure);
    out["line_signs"] = set.line_signs;
    if (qubits >= 2 && qubits <= 5) {
      std::string name = qubits == 2 ? "triangle" : "PG(" + std::to_string(qubits - 1) + ",2)";
      out["isomorphic_to"] = name;
      if (!isomorphic(set.structure, build_geometry(name)).isomorphic) {
        out["isomorphic_to"] = nullptr;
        std::cout << out.dump(2) << "\n";
        return kExitMismatch;
      }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("unknown pauli target: " + what);
}

int cmd_table1(const std::string& data_dir, int jobs) {
  json rows = json::array();

  auto add_row = [&](const std::string& name, std::optional<ContextualityReport> report,
                     const IncidenceStructure& s, const std::string& mode,
                     const std::string& provenance) {
    json row;
    row["geometry"] = name;
    int h = s.points <= 25 ? static_cast<int>(hyperplanes_brute(s).size())
                           : static_cast<int>(hyperplanes_veldkamp(s).size());
    row["h"] = h;
    row["round_log2_h"] = static_cast<int>(std::lround(std::log2(double(h))));
    if (report) {
      row["l"] = report->l;
      row["u"] = report->u;
      row["c"] = report->c.str();
      row["l_over_u"] = report->l_over_u ? report->l_over_u->decimal() : "-";
      row["mode"] = mode;
    } else {
      row["l"] = s.line_count();
      row["u"] = nullptr;
      row["l_over_u"] = nullptr;
    }
    row["provenance"] = provenance;
    rows.push_back(row);
    std::cerr << "row done: " << name << "\n";
  };

  // GQ(2,1): the unique genus-1 index-9 dessin carrying two grids
  {
    Presentation g = Presentation::involution_b();
    std::optional<ContextualityReport> report;
    for (const CosetTable& t : low_index_subgroups(g, 9, true, jobs)) {
      Dessin d = Dessin::from_table(t);
      if (d.genus() != 1) continue;
      auto geos = extract_geometries(d);
      const StabilizerGeometry* z2 = nullptr;
      bool has_z1_grid = false;
      for (const auto& sg : geos) {
        if (sg.stab_order == 1 && sg.structure.line_count() == 6 &&
            isomorphic(sg.structure, build_geometry("GQ(2,1)")).isomorphic)
          has_z1_grid = true;
        if (sg.stab_order == 2 && sg.structure.line_count() == 6 &&
            isomorphic(sg.structure, build_geometry("GQ(2,1)")).isomorphic)
          z2 = &sg;
      }
      if (has_z1_grid && z2) {
        report = score(z2->structure, d.labels(), d, CommutationMode::Iterated);
        break;
      }
    }
    add_row("GQ(2,1)", report, build_geometry("GQ(2,1)"), "iterated",
            "computed (index-9 search on G)");
  }

  for (const char* name : {"GQ(2,2)", "GQ(2,4)", "GH(2,1)", "GO(2,1)"})
    add_row(name, std::nullopt, build_geometry(name), "",
            "requires externally supplied dessin");

  // GH(2,2) and its dual from the stored dessin route
  for (auto [row_name, dessin_file, geo_file] :
       {std::tuple{"GH(2,2)", "gh22_dessin.json", "gh22_geometry.json"},
        std::tuple{"dual of GH(2,2)", "gh22_dual_dessin.json", "gh22_dual_geometry.json"}}) {
    fs::path dpath = fs::path(data_dir) / dessin_file;
    fs::path gpath = fs::path(data_dir) / geo_file;
    if (!fs::exists(dpath) || !fs::exists(gpath)) {
      json row;
      row["geometry"] = row_name;
      row["provenance"] = "stored dessin not found under " + data_dir;
      rows.push_back(row);
      continue;
    }
    Dessin d = dessin_from_json(json::parse(read_text_file(dpath.string())));
    IncidenceStructure s = geometry_from_json(json::parse(read_text_file(gpath.string())));
    ContextualityReport r = score(s, d.labels(), d, CommutationMode::Iterated);
    add_row(row_name, r, s, "iterated", "stored dessin route artifact");
  }

  json out{{"rows", rows}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset enumeration, dessins, incidence geometries and commutation defects"};
  app.require_subcommand(1);

  std::string presentation = "G", relators, out_dir, dessin_file, geometry_file;
  std::string labels_flag = "default", hp_mode = "auto", geometry_name, function;
  std::string data_dir = "data", pauli_what;
  int index = 1, jobs = 1, qubits = 3;
  std::uint64_t stab_class = 0;
  bool all_subgroups = false;

  auto* enumerate = app.add_subcommand("enumerate", "low-index subgroup search");
  enumerate->add_option("--presentation", presentation, "F | G | G' | G''");
  enumerate->add_option("--relators", relators, "comma-separated custom relators");
  enumerate->add_option("--index", index, "index n")->required();
  enumerate->add_flag("--all", all_subgroups, "all subgroups, not conjugacy classes");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--out", out_dir, "output directory for dessin files");

  auto* analyze = app.add_subcommand("analyze", "dessin file -> structure report");
  analyze->add_option("--dessin", dessin_file, "dessin JSON file")->required();
  analyze->add_option("--labels", labels_flag, "default | all");
  analyze->add_option("--out", out_dir, "directory for DOT exports");

  auto* score_cmd = app.add_subcommand("score", "commutation report for a geometry");
  score_cmd->add_option("--dessin", dessin_file, "dessin JSON file")->required();
  score_cmd->add_option("--geometry", geometry_file, "geometry JSON file");
  score_cmd->add_option("--class", stab_class, "stabilizer order to score instead");
  score_cmd->add_option("--labels", labels_flag, "default | all");

  auto* table1 = app.add_subcommand("table1", "generalized-polygon defect table");
  table1->add_option("--data", data_dir, "stored artifact directory");
  table1->add_option("--jobs", jobs, "worker threads");

  auto* pauli_cmd = app.add_subcommand("pauli", "multiqubit operator configurations");
  pauli_cmd->add_option("what", pauli_what, "mermin-square | pentagram | maxset")
      ->required();
  pauli_cmd->add_option("--qubits", qubits, "qubit count for maxset");

  auto* belyi_cmd = app.add_subcommand("belyi-check", "rational map vs dessin passport");
  belyi_cmd->add_option("--function", function, "rational function text")->required();
  belyi_cmd->add_option("--dessin", dessin_file, "dessin JSON file");

  auto* hyper = app.add_subcommand("hyperplanes", "geometric hyperplane census");
  hyper->add_option("--name", geometry_name, "catalog geometry name");
  hyper->add_option("--geometry", geometry_file, "geometry JSON file");
  hyper->add_option("--mode", hp_mode, "brute | veldkamp | auto");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed())
      return cmd_enumerate(presentation, relators, index, all_subgroups, jobs, out_dir);
    if (analyze->parsed()) return cmd_analyze(dessin_file, labels_flag, out_dir);
    if (score_cmd->parsed())
      return cmd_score(dessin_file, geometry_file, stab_class, labels_flag);
    if (table1->parsed()) return cmd_table1(data_dir, jobs);
    if (pauli_cmd->parsed()) return cmd_pauli(pauli_what, qubits);
    if (belyi_cmd->parsed()) return cmd_belyi_check(function, dessin_file);
    if (hyper->parsed()) return cmd_hyperplanes(geometry_name, geometry_file, hp_mode);
  } catch (const ResourceLimitError& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "resource-limit"}}.dump() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "invalid-input"}}.dump() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
