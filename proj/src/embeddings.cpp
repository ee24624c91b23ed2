#include "eqslice/embeddings.hpp"

#include "eqslice/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace eqslice {

bool is_embedding(const IntMatrix& a, const IntMatrix& q) {
  if (a.rows() != q.rows() || a.cols() != q.cols() || !q.is_square()) return false;
  return a.transpose() * a == q;
}

IntMatrix canonical_signed_perm_form(const IntMatrix& a) {
  // Rows contribute to the row-major reading independently, so the orbit
  // minimum is: lex-minimal orientation of each row, rows sorted ascending.
  std::vector<std::vector<Int>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Int> r = a.row(i);
    for (const Int& x : r) {
      if (x == 0) continue;
      if (x > 0)
        for (Int& y : r) y = -y;
      break;
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = rows[i][j];
  return out;
}

namespace {

// All v in Z^n with |v|^2 = norm, in lexicographic order.
void vectors_of_norm(std::size_t n, const Int& norm, std::vector<std::vector<Int>>& out) {
  std::vector<Int> v(n);
  Int bound = isqrt_floor(norm);
  auto rec = [&](auto&& self, std::size_t i, Int remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(v);
      return;
    }
    for (Int x = -bound; x <= bound; ++x) {
      Int used = x * x;
      if (used > remaining) continue;
      v[i] = x;
      self(self, i + 1, remaining - used);
    }
    v[i] = 0;
  };
  rec(rec, 0, norm);
}

struct SearchContext {
  const IntMatrix& q;
  std::size_t n;
  // Candidate columns per column index, filtered to the required norm.
  std::vector<const std::vector<std::vector<Int>>*> candidates;
  std::vector<std::vector<std::vector<Int>>> pools;  // one pool per distinct norm
};

void search_from(const SearchContext& ctx, std::vector<std::vector<Int>>& cols, std::size_t j,
                 std::vector<IntMatrix>& found) {
  if (j == ctx.n) {
    IntMatrix a(ctx.n, ctx.n);
    for (std::size_t c = 0; c < ctx.n; ++c)
      for (std::size_t r = 0; r < ctx.n; ++r) a(r, c) = cols[c][r];
    found.push_back(canonical_signed_perm_form(a));
    return;
  }
  for (const auto& cand : *ctx.candidates[j]) {
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) ok = dot(cols[i], cand) == ctx.q(i, j);
    if (!ok) continue;
    cols[j] = cand;
    search_from(ctx, cols, j + 1, found);
  }
}

}  // namespace

std::vector<IntMatrix> enumerate_embeddings(const IntMatrix& q, int threads) {
  if (!q.is_symmetric()) throw std::invalid_argument("enumerate_embeddings: form not symmetric");
  if (!is_positive_definite(q))
    throw std::invalid_argument("enumerate_embeddings: form not positive definite");
  std::size_t n = q.rows();
  if (n == 0) return {IntMatrix(0, 0)};

  SearchContext ctx{q, n, {}, {}};
  std::map<Int, std::size_t> pool_of_norm;
  for (std::size_t j = 0; j < n; ++j) {
    auto [it, inserted] = pool_of_norm.try_emplace(q(j, j), ctx.pools.size());
    if (inserted) {
      ctx.pools.emplace_back();
      vectors_of_norm(n, q(j, j), ctx.pools.back());
    }
  }
  for (std::size_t j = 0; j < n; ++j) ctx.candidates.push_back(&ctx.pools[pool_of_norm[q(j, j)]]);

  // Symmetry breaking: the first column may be fixed to the canonical member
  // of its orbit under signed permutations (entries non-increasing and
  // non-negative); some signed permutation of any solution has this shape.
  std::vector<std::vector<Int>> first;
  for (const auto& v : *ctx.candidates[0]) {
    bool canon = true;
    for (std::size_t i = 0; canon && i < n; ++i) {
      if (v[i] < 0) canon = false;
      if (i + 1 < n && v[i] < v[i + 1]) canon = false;
    }
    if (canon) first.push_back(v);
  }

  int workers = threads < 1 ? 1 : threads;
  if (static_cast<std::size_t>(workers) > first.size() && !first.empty())
    workers = static_cast<int>(first.size());
  std::vector<std::vector<IntMatrix>> per_start(first.size());
  auto run_range = [&](std::size_t begin, std::size_t end) {
    std::vector<std::vector<Int>> cols(n);
    for (std::size_t s = begin; s < end; ++s) {
      cols[0] = first[s];
      search_from(ctx, cols, 1, per_start[s]);
    }
  };
  if (workers <= 1) {
    run_range(0, first.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (first.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(first.size(), begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<IntMatrix> all;
  for (auto& part : per_start)
    for (auto& a : part) all.push_back(std::move(a));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace eqslice
