#pragma once

#include "eqslice/int_matrix.hpp"

#include <vector>

namespace eqslice {

/// True iff a^T a = q exactly.
bool is_embedding(const IntMatrix& a, const IntMatrix& q);

/// Canonical form of a under signed permutations of its rows: orient each row
/// so its first nonzero entry is negative, then sort rows ascending. This is
/// the lexicographically minimal matrix (read row-major) in the orbit.
IntMatrix canonical_signed_perm_form(const IntMatrix& a);

/// All integer matrices a with a^T a = q, one canonical representative per
/// orbit under signed row permutations, sorted. An empty result certifies
/// that no embedding of (Z^n, q) into the standard cubical lattice exists.
/// q must be symmetric positive definite. Deterministic for any thread count.
std::vector<IntMatrix> enumerate_embeddings(const IntMatrix& q, int threads = 1);

}  // namespace eqslice
