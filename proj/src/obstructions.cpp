#include "eqslice/obstructions.hpp"

#include "eqslice/embeddings.hpp"

#include <sstream>
#include <stdexcept>

namespace eqslice {

Int two_squares_blocking_prime(const Int& m) {
  if (m < 0) throw std::domain_error("two_squares_blocking_prime: negative input");
  Int rest = m;
  for (Int p = 2; p * p <= rest; p == 2 ? p = 3 : p += 2) {
    if (rest % p != 0) continue;
    int exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    if (p % 4 == 3 && exponent % 2 == 1) return p;
  }
  // rest is 1 or a single prime factor
  if (rest > 1 && rest % 4 == 3) return rest;
  return 0;
}

bool sum_of_two_squares(const Int& m) {
  if (m < 0) return false;
  if (m <= 1) return true;
  return two_squares_blocking_prime(m) == 0;
}

std::optional<std::pair<Int, Int>> two_squares_decomposition(const Int& m) {
  if (m < 0) return std::nullopt;
  for (Int a = 0; a * a * 2 <= m; ++a) {
    Int b;
    if (is_perfect_square(m - a * a, &b)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

const char* to_string(VerdictLevel v) {
  switch (v) {
    case VerdictLevel::NotSlice: return "NotSlice";
    case VerdictLevel::NotEquivariantlySlice: return "NotEquivariantlySlice";
    case VerdictLevel::DetObstructed: return "DetObstructed";
    case VerdictLevel::NotAmphichiralCandidate: return "NotAmphichiralCandidate";
    case VerdictLevel::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

Verdict det_obstruction(const Int& d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("det_obstruction: determinant must be a positive odd integer");
  Verdict v;
  DetStageEvidence& e = v.det_stage;
  e.det = d;
  e.det_blocking_prime = two_squares_blocking_prime(d);
  e.det_is_two_squares = e.det_blocking_prime == 0;
  if (!e.det_is_two_squares) {
    v.level = VerdictLevel::NotAmphichiralCandidate;
    return v;
  }
  e.det_is_square = is_perfect_square(d, &e.root);
  if (!e.det_is_square) {
    v.level = VerdictLevel::NotSlice;
    return v;
  }
  e.root_blocking_prime = two_squares_blocking_prime(e.root);
  e.root_is_two_squares = e.root_blocking_prime == 0;
  if (!e.root_is_two_squares) {
    v.level = VerdictLevel::DetObstructed;
    return v;
  }
  if (e.root < 1000000) e.root_decomposition = two_squares_decomposition(e.root);
  v.level = VerdictLevel::Inconclusive;
  return v;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error([&report] {
        std::string msg = "presentation failed validation:";
        for (const auto& c : report.checks)
          if (!c.passed) msg += " [" + c.name + (c.detail.empty() ? "" : "; " + c.detail) + "]";
        return msg;
      }()),
      report_(std::move(report)) {}

SigmaAction::SigmaAction(IntMatrix jplus, IntMatrix jminus)
    : jplus_(std::move(jplus)),
      jminus_(std::move(jminus)),
      lattice_(jplus_ * jplus_.transpose()),
      solver_(jplus_),
      jplus_ones_(jplus_.rows()) {
  if (jplus_.rows() != jminus_.rows() || jplus_.cols() != jminus_.cols())
    throw std::invalid_argument("SigmaAction: incidence matrices must have equal shape");
  // The minus form must be characteristic-compatible with the plus form.
  IntMatrix am = jminus_ * jminus_.transpose();
  for (std::size_t i = 0; i < am.rows(); ++i)
    if ((am(i, i) - lattice_.form()(i, i)) % 2 != 0)
      throw std::invalid_argument("SigmaAction: Goeritz diagonals disagree mod 2");
  std::vector<Int> ones(jplus_.cols(), 1);
  jplus_ones_ = jplus_ * ones;
}

SigmaAction SigmaAction::from_presentation(const CheckerboardPresentation& p) {
  return SigmaAction(reduced_incidence(p, Side::plus), reduced_incidence(p, Side::minus));
}

std::vector<Int> SigmaAction::odd_lift(const std::vector<Int>& u) const {
  std::vector<Int> rep = lattice_.canonicalize(u);
  // rep and J+ * 1 are both characteristic, so their difference is even.
  std::vector<Int> half(rep.size());
  for (std::size_t i = 0; i < rep.size(); ++i) {
    Int diff = rep[i] - jplus_ones_[i];
    if (diff % 2 != 0)
      throw std::runtime_error("odd_lift: class representative is not characteristic");
    half[i] = diff / 2;
  }
  auto w = solver_.solve(half);
  if (!w)
    throw std::runtime_error(
        "odd_lift: incidence matrix is not surjective; presentation is invalid");
  std::vector<Int> v(w->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1 + 2 * (*w)[i];
  return v;
}

std::vector<Int> SigmaAction::apply_to_lift(const std::vector<Int>& odd_v) const {
  return lattice_.canonicalize(jminus_ * odd_v);
}

std::vector<Int> SigmaAction::apply(const std::vector<Int>& u) const {
  return apply_to_lift(odd_lift(u));
}

ClassSet metabolizer_spinc(const IntMatrix& a, const SpincLattice& lattice) {
  std::size_t n = a.rows();
  if (n != lattice.rank() || a.cols() != n)
    throw std::invalid_argument("metabolizer_spinc: dimension mismatch");
  IntMatrix at = a.transpose();
  IntMatrix h = hermite_normal_form(a);  // coset representatives of Z^n / A Z^n
  std::vector<Int> ones(n, 1);
  std::vector<Int> base = at * ones;
  ClassSet classes;
  std::vector<Int> w(n, 0);
  for (;;) {
    std::vector<Int> u = base;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) u[i] += 2 * w[j] * at(i, j);
    }
    classes.insert(lattice.canonicalize(u));
    std::size_t i = 0;
    while (i < n && ++w[i] == h(i, i)) w[i++] = 0;
    if (i == n) break;
  }
  return classes;
}

InvarianceResult check_invariance(const ClassSet& s, const SigmaAction& act) {
  InvarianceResult result;
  for (const auto& rep : s)
    if (!s.count(act.apply(rep))) result.violations.push_back(rep);
  result.invariant = result.violations.empty();
  return result;
}

OrbitStructure sigma_orbit_structure(const SigmaAction& act) {
  OrbitStructure out;
  auto classes = act.lattice().enumerate_classes();
  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);

  std::vector<std::size_t> image(classes.size());
  std::set<std::size_t> hit;
  out.square_is_negation = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<Int> img = act.apply(classes[i]);
    auto it = index.find(img);
    if (it == index.end()) throw std::logic_error("sigma action left the class set");
    image[i] = it->second;
    hit.insert(it->second);
    if (act.apply(img) != act.lattice().negate_class(classes[i])) out.square_is_negation = false;
  }
  out.bijection = hit.size() == classes.size();

  std::vector<bool> seen(classes.size(), false);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = image[j];
      ++len;
    }
    ++out.orbit_size_counts[len];
    if (len == 1) {
      ++out.fixed_classes;
      out.fixed_class_rep = classes[i];
    }
  }
  if (out.fixed_classes != 1) out.fixed_class_rep.clear();
  return out;
}

Verdict full_pipeline(const CheckerboardPresentation& p, int threads) {
  ValidationReport report = validate(p);
  if (!report.passed()) throw ValidationError(std::move(report));

  GoeritzForm form = goeritz(p, Side::plus);
  Verdict verdict = det_obstruction(abs_int(determinant(form.matrix)));
  if (verdict.level != VerdictLevel::Inconclusive) return verdict;

  verdict.embeddings_enumerated = true;
  std::vector<IntMatrix> embeddings = enumerate_embeddings(form.matrix, threads);
  if (embeddings.empty()) {
    verdict.level = VerdictLevel::NotSlice;
    return verdict;
  }

  SigmaAction act = SigmaAction::from_presentation(p);
  bool any_invariant = false;
  for (const auto& a : embeddings) {
    ClassSet s = metabolizer_spinc(a, act.lattice());
    InvarianceResult inv = check_invariance(s, act);
    any_invariant = any_invariant || inv.invariant;
    verdict.embeddings.push_back(
        EmbeddingEvidence{a, s.size(), inv.invariant, std::move(inv.violations)});
  }
  verdict.level = any_invariant ? VerdictLevel::Inconclusive : VerdictLevel::NotEquivariantlySlice;
  return verdict;
}

}  // namespace eqslice
