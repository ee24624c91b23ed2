#include "eqslice/knot_table.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqslice {

const std::vector<KnotRecord>& builtin_knot_table() {
  static const std::vector<KnotRecord> table = {
      {"8_9", 25, "Rib", ""},        {"10_99", 81, "Rib", ""},
      {"10_123", 121, "Det", ""},    {"12a_435", 225, "Det", ""},
      {"12a_458", 289, "Unk", ""},   {"12a_477", 169, "Unk", ""},
      {"12a_819", 169, "Rib", ""},   {"12a_887", 289, "Unk", ""},
      {"12a_990", 225, "Det", ""},   {"12a_1019", 361, "Det", ""},
      {"12a_1105", 289, "Spinc", "12a1105.json"},
      {"12a_1202", 169, "Spinc", ""},
      {"12a_1225", 225, "Det", ""},  {"12a_1269", 169, "Rib", ""},
      {"12n_462", 25, "Rib", ""},    {"12n_706", 49, "Det", ""},
  };
  return table;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knot table " + path);
  nlohmann::json j;
  in >> j;
  std::vector<KnotRecord> records;
  for (const auto& r : j.at("records")) {
    KnotRecord rec;
    rec.name = r.at("name").get<std::string>();
    rec.determinant = Int(r.at("det").get<long long>());
    rec.category = r.at("category").get<std::string>();
    if (r.contains("presentation_file") && r["presentation_file"].is_string())
      rec.presentation_file = r["presentation_file"].get<std::string>();
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TableRow> run_knot_table(const std::vector<KnotRecord>& records) {
  std::vector<TableRow> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    TableRow row;
    row.record = rec;
    row.det_stage = det_obstruction(rec.determinant).level;
    row.matches_category = rec.category == "Det"
                               ? row.det_stage == VerdictLevel::DetObstructed
                               : row.det_stage == VerdictLevel::Inconclusive;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eqslice
