#pragma once

#include "eqslice/numeric.hpp"

#include <string>
#include <vector>

namespace eqslice {

/// Lens space parameters: p positive odd, 0 < q < p coprime to p.
/// (1, 1) is allowed and denotes the 3-sphere.
struct LensSpace {
  long long p = 1;
  long long q = 1;
};
LensSpace make_lens(long long p, long long q);  // throws std::invalid_argument

struct CorrectionTerms {
  LensSpace space;
  std::vector<Rat> values;  // exactly p values, indexed by Spin^c label 0..p-1
};

/// Exact Heegaard Floer correction terms of L(p, q), by the standard
/// recursion over the Euclidean continued fraction of p/q:
///   d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, i mod q)
/// with d(1, *, *) = 0. The sign and labeling conventions are fixed by the
/// regression suite.
CorrectionTerms lens_d_invariants(const LensSpace& l);
Rat lens_d_invariant(long long p, long long q, long long i);

struct OrbitCheck {
  bool ok = false;
  std::string reason;  // set when !ok
};

/// True iff the multiset can be partitioned into quadruples {r, -r, r, -r}
/// plus a single {0}: odd cardinality, at least one zero, the remaining
/// zeros in groups of four, and every nonzero value occurring an even
/// number of times, equally often as its negative.
OrbitCheck orbit_structure_check(const std::vector<Rat>& multiset);

/// q^2 = -1 (mod p).
bool qsq_condition(long long p, long long q);

struct ScanRow {
  long long p = 0;
  long long q = 0;
  bool partition_ok = false;  // orbit_structure_check on the correction terms
  bool qsq_ok = false;        // q^2 = -1 (mod p)
};

struct ScanReport {
  long long p_max = 0;
  std::vector<ScanRow> rows;                 // ordered by (p, q)
  std::vector<ScanRow> disagreements;        // partition_ok != qsq_ok
  std::vector<ScanRow> forward_violations;   // qsq_ok but !partition_ok (proven impossible)
  bool orientation_sanity_ok = true;         // terms of L(p, p-q) are minus those of L(p, q)
};

/// Exhaustive scan over odd p <= p_max and all valid q.
ScanReport conjecture_scan(long long p_max, int threads = 1);

}  // namespace eqslice
