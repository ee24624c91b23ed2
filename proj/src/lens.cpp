#include "eqslice/lens.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eqslice {

LensSpace make_lens(long long p, long long q) {
  bool ok = p > 0 && p % 2 == 1 && std::gcd(p, q) == 1 &&
            ((p == 1 && q == 1) || (0 < q && q < p));
  if (!ok) {
    std::ostringstream os;
    os << "invalid lens space parameters (" << p << ", " << q
       << "): need p odd positive, 0 < q < p, gcd(p, q) = 1";
    throw std::invalid_argument(os.str());
  }
  return LensSpace{p, q};
}

Rat lens_d_invariant(long long p, long long q, long long i) {
  if (p == 1) return 0;
  Int num = Int(2 * i + 1 - p - q);
  Rat term(num * num - Int(p) * q, 4 * Int(p) * q);
  return term - lens_d_invariant(q, p % q, i % q);
}

CorrectionTerms lens_d_invariants(const LensSpace& l) {
  LensSpace checked = make_lens(l.p, l.q);
  CorrectionTerms out{checked, {}};
  out.values.reserve(checked.p);
  for (long long i = 0; i < checked.p; ++i)
    out.values.push_back(lens_d_invariant(checked.p, checked.q, i));
  return out;
}

OrbitCheck orbit_structure_check(const std::vector<Rat>& multiset) {
  if (multiset.size() % 2 == 0) return {false, "even number of values"};
  std::map<Rat, std::size_t> counts;
  for (const Rat& r : multiset) ++counts[r];
  auto zero = counts.find(Rat(0));
  if (zero == counts.end()) return {false, "no zero value present"};
  if ((zero->second - 1) % 4 != 0) {
    std::ostringstream os;
    os << "after removing one zero, " << zero->second - 1
       << " zeros remain, not a multiple of 4";
    return {false, os.str()};
  }
  for (const auto& [value, count] : counts) {
    if (value == 0) continue;
    std::size_t mirrored = counts.count(-value) ? counts.at(-value) : 0;
    if (count % 2 != 0 || count != mirrored) {
      std::ostringstream os;
      os << "value " << value.str() << " occurs " << count << " times, its negative "
         << mirrored << " times";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

bool qsq_condition(long long p, long long q) {
  return (Int(q) * q + 1) % p == 0;
}

ScanReport conjecture_scan(long long p_max, int threads) {
  if (p_max < 3) throw std::invalid_argument("conjecture_scan: p_max must be at least 3");
  std::vector<long long> ps;
  for (long long p = 3; p <= p_max; p += 2) ps.push_back(p);

  std::vector<std::vector<ScanRow>> rows_per_p(ps.size());
  std::vector<char> sanity_per_p(ps.size(), 1);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      long long p = ps[k];
      std::map<long long, std::vector<Rat>> terms;
      for (long long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        terms[q] = lens_d_invariants(LensSpace{p, q}).values;
        rows_per_p[k].push_back(
            ScanRow{p, q, orbit_structure_check(terms[q]).ok, qsq_condition(p, q)});
      }
      // Reversing orientation negates every correction term.
      for (const auto& [q, values] : terms) {
        if (q > p - q) continue;
        std::vector<Rat> a = values, b = terms.at(p - q);
        for (Rat& r : b) r = -r;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) sanity_per_p[k] = 0;
      }
    }
  };

  int workers = threads < 1 ? 1 : threads;
  if (static_cast<std::size_t>(workers) > ps.size()) workers = static_cast<int>(ps.size());
  if (workers <= 1) {
    run_range(0, ps.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (ps.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(ps.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  report.p_max = p_max;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    report.orientation_sanity_ok = report.orientation_sanity_ok && sanity_per_p[k];
    for (const ScanRow& row : rows_per_p[k]) {
      report.rows.push_back(row);
      if (row.partition_ok != row.qsq_ok) report.disagreements.push_back(row);
      if (row.qsq_ok && !row.partition_ok) report.forward_violations.push_back(row);
    }
  }
  return report;
}

}  // namespace eqslice
