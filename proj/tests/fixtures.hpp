#pragma once

// Frozen regression data for the bundled 12a1105 presentation: the reduced
// oriented incidence matrices, the Goeritz form, the two embedding classes,
// the 17-element metabolizer class set of the first embedding, and the odd
// witness vector, all as printed values.

#include "eqslice/checkerboard.hpp"
#include "eqslice/int_matrix.hpp"

#include <string>
#include <vector>

namespace fixtures {

using eqslice::Int;
using eqslice::IntMatrix;

inline std::string data_dir() { return EQSLICE_DATA_DIR; }
inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

inline const IntMatrix kJPlus{{1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0},
                              {-1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                              {0, -1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1},
                              {0, 0, -1, 1, 0, 0, 0, 0, 0, 1, 0, -1},
                              {0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0}};

inline const IntMatrix kJMinus{{0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 1},
                               {0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0},
                               {1, 0, 0, 0, 0, -1, -1, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 1, 1, 0, 0, 0, -1, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 1, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1}};

inline const IntMatrix kGoeritzPlus{{3, -1, 0, 0, -1, -1}, {-1, 3, -1, 0, 0, 0},
                                    {0, -1, 4, -2, 0, 0},  {0, 0, -2, 4, -1, 0},
                                    {-1, 0, 0, -1, 3, 0},  {-1, 0, 0, 0, 0, 2}};

// The embeddings are printed transposed.
inline const IntMatrix kA1Transpose{{-1, 1, 1, 0, 0, 0},  {0, -1, 0, 1, 1, 0},
                                    {1, 0, 1, 0, -1, -1}, {-1, -1, 0, -1, 0, 1},
                                    {0, 0, -1, 1, -1, 0}, {1, 0, 0, 0, 0, 1}};

inline const IntMatrix kA2Transpose{{-1, 1, 1, 0, 0, 0},  {0, -1, 0, 1, 1, 0},
                                    {-1, 0, -1, -1, 0, 1}, {1, 1, 0, 0, 1, -1},
                                    {0, 0, -1, 1, -1, 0}, {1, 0, 0, 0, 0, 1}};

inline std::vector<Int> vec(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

inline const std::vector<std::vector<Int>> kMetabolizerA1 = {
    vec({1, 1, -2, -2, 1, -2}),  vec({3, -3, 2, 0, -1, -2}), vec({3, 1, 0, -2, -1, -2}),
    vec({-1, 1, -4, 4, -1, 0}),  vec({1, -3, 4, -2, -1, 0}), vec({1, 1, -2, 4, -3, 0}),
    vec({3, -1, -2, 2, -3, 0}),  vec({-1, -3, 6, -4, -1, 2}), vec({-1, 1, 0, 2, -3, 2}),
    vec({1, -1, 0, -2, 3, -2}),  vec({1, 3, -6, 4, 1, -2}),  vec({-3, 1, 2, -2, 3, 0}),
    vec({-1, -1, 2, -4, 3, 0}),  vec({-1, 3, -4, 2, 1, 0}),  vec({1, -1, 4, -4, 1, 0}),
    vec({-3, -1, 0, 2, 1, 2}),   vec({-3, 3, -2, 0, 1, 2})};

inline const std::vector<Int> kWitnessClass = vec({3, -3, 2, 0, -1, -2});
inline const std::vector<Int> kWitnessImage = vec({1, 3, 16, -8, 3, 2});
inline const std::vector<Int> kOddWitness = vec({7, 3, 3, 3, 1, -3, -5, 1, 1, 1, 1, 1});

}  // namespace fixtures
