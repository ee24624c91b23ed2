#pragma once

#include "eqslice/obstructions.hpp"

#include <string>
#include <vector>

namespace eqslice {

/// One row of the bundled census of slice strongly negative amphichiral
/// prime knots with at most 12 crossings.
struct KnotRecord {
  std::string name;
  Int determinant;       // odd positive
  std::string category;  // "Rib", "Det", "Spinc", or "Unk"
  std::string presentation_file;  // optional, relative to the data directory
};

const std::vector<KnotRecord>& builtin_knot_table();
std::vector<KnotRecord> load_knot_table(const std::string& path);

struct TableRow {
  KnotRecord record;
  VerdictLevel det_stage = VerdictLevel::Inconclusive;
  // "Det" records must come out DetObstructed, everything else Inconclusive.
  bool matches_category = false;
};

std::vector<TableRow> run_knot_table(const std::vector<KnotRecord>& records);

}  // namespace eqslice
