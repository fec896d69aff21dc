#include "mhw/known_values.hpp"

namespace mhw {

// M(n) for n = 1..1000 (OEIS A086342).
const int kKnownFirst1000[1000] = {
    1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 2, 2, 2, 3, 4, 1, 2, 2, 2, 2, 3, 2, 3, 2, 2,
    2, 2, 3, 2, 4, 5, 1, 2, 2, 3, 2, 2, 2, 3, 2, 2, 3, 2, 2, 4, 3, 3, 2, 3, 2,
    4, 2, 2, 2, 3, 3, 2, 2, 2, 4, 2, 5, 6, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 2, 4,
    2, 3, 3, 3, 2, 2, 2, 2, 3, 4, 2, 3, 2, 4, 4, 3, 3, 5, 3, 3, 2, 2, 3, 2, 2,
    2, 4, 3, 2, 4, 2, 2, 2, 2, 3, 3, 3, 2, 2, 3, 2, 4, 2, 3, 4, 2, 2, 4, 5, 2,
    6, 7, 1, 2, 2, 2, 2, 3, 2, 4, 2, 2, 3, 2, 3, 3, 3, 3, 2, 2, 3, 3, 2, 2, 4,
    3, 2, 4, 3, 5, 3, 2, 3, 3, 2, 3, 2, 2, 2, 4, 2, 3, 3, 2, 4, 2, 2, 2, 3, 3,
    2, 2, 4, 2, 4, 2, 3, 3, 3, 2, 5, 3, 3, 6, 3, 3, 2, 2, 2, 4, 3, 2, 2, 3, 2,
    2, 2, 3, 4, 2, 3, 3, 2, 2, 4, 2, 2, 3, 2, 4, 2, 5, 2, 3, 3, 4, 3, 4, 3, 4,
    2, 2, 2, 2, 3, 3, 2, 4, 4, 3, 2, 3, 3, 3, 4, 2, 2, 2, 2, 3, 4, 3, 5, 2, 2,
    2, 6, 3, 7, 8, 1, 2, 2, 3, 2, 3, 2, 3, 2, 2, 3, 4, 2, 2, 4, 3, 2, 3, 2, 4,
    3, 2, 2, 5, 3, 2, 3, 2, 3, 4, 3, 3, 2, 2, 2, 3, 3, 2, 3, 3, 2, 2, 2, 3, 4,
    3, 3, 3, 2, 2, 4, 2, 3, 3, 5, 3, 3, 2, 2, 6, 3, 2, 3, 3, 2, 2, 3, 3, 2, 2,
    2, 3, 2, 3, 4, 2, 2, 3, 3, 3, 3, 3, 2, 4, 4, 5, 2, 3, 2, 4, 2, 2, 3, 2, 3,
    4, 2, 2, 2, 3, 4, 4, 2, 3, 4, 2, 2, 2, 3, 3, 3, 3, 3, 4, 2, 3, 5, 2, 3, 4,
    3, 2, 6, 2, 3, 7, 3, 3, 2, 3, 2, 2, 2, 2, 4, 3, 3, 2, 2, 3, 2, 2, 3, 5, 2,
    2, 2, 5, 2, 4, 3, 3, 4, 2, 2, 3, 3, 3, 3, 3, 2, 2, 2, 2, 4, 2, 2, 3, 2, 4,
    3, 3, 2, 3, 4, 4, 2, 2, 5, 4, 2, 3, 3, 3, 3, 6, 4, 2, 3, 4, 4, 3, 3, 2, 4,
    4, 2, 3, 2, 6, 2, 2, 2, 4, 3, 2, 3, 3, 2, 5, 4, 2, 4, 3, 3, 4, 2, 2, 3, 3,
    3, 3, 3, 3, 4, 2, 2, 3, 2, 4, 2, 3, 2, 2, 3, 2, 4, 3, 3, 4, 5, 3, 2, 2, 2,
    3, 2, 3, 6, 2, 3, 3, 7, 2, 8, 9, 1, 2, 2, 3, 2, 3, 3, 3, 2, 2, 3, 2, 2, 4,
    3, 5, 2, 3, 2, 2, 3, 2, 4, 3, 2, 2, 2, 3, 4, 2, 3, 3, 2, 2, 3, 2, 2, 4, 4,
    3, 3, 3, 2, 4, 2, 2, 5, 3, 3, 4, 2, 2, 3, 2, 2, 6, 3, 2, 4, 2, 3, 3, 3, 3,
    2, 2, 2, 3, 2, 3, 3, 3, 3, 4, 2, 2, 3, 5, 3, 3, 2, 2, 2, 4, 2, 3, 3, 3, 4,
    4, 3, 2, 3, 3, 3, 3, 2, 3, 2, 3, 4, 2, 2, 4, 3, 2, 3, 2, 5, 3, 3, 4, 3, 2,
    2, 2, 2, 3, 6, 3, 3, 2, 2, 7, 3, 3, 3, 3, 2, 2, 2, 2, 3, 4, 3, 3, 2, 2, 2,
    5, 2, 2, 3, 3, 2, 4, 3, 2, 4, 2, 2, 4, 2, 3, 3, 3, 3, 4, 3, 4, 3, 2, 3, 4,
    2, 2, 4, 3, 4, 2, 5, 2, 2, 2, 3, 3, 2, 2, 4, 2, 2, 6, 2, 3, 3, 4, 2, 4, 3,
    2, 4, 3, 2, 4, 2, 3, 2, 2, 3, 3, 4, 5, 4, 3, 2, 3, 3, 3, 4, 3, 2, 3, 2, 2,
    2, 3, 3, 2, 3, 4, 3, 2, 3, 4, 3, 2, 4, 2, 2, 4, 3, 3, 5, 2, 2, 2, 3, 3, 4,
    3, 3, 2, 2, 3, 6, 2, 2, 3, 3, 2, 7, 4, 3, 8, 3, 3, 2, 2, 3, 4, 2, 2, 2, 5,
    2, 4, 2, 3, 4, 3, 3, 3, 3, 2, 2, 2, 2, 3, 3, 3, 2, 2, 2, 4, 3, 2, 5, 3, 2,
    4, 2, 3, 2, 3, 5, 3, 2, 2, 4, 2, 3, 3, 3, 3, 4, 2, 2, 6, 2, 2, 3, 3, 3, 4,
    3, 2, 3, 2, 3, 4, 2, 3, 2, 3, 2, 5, 2, 3, 4, 2, 2, 2, 2, 2, 3, 3, 2, 2, 4,
    3, 3, 2, 3, 4, 2, 2, 3, 2, 4, 4, 4, 3, 2, 2, 2, 4, 5, 3, 4, 3, 2, 4, 3, 3,
    3, 2, 3, 3, 3, 4, 6, 2, 4, 4, 2, 3, 3, 7, 4, 2, 4, 3, 3, 3, 3, 3, 2, 5, 4,
    3, 4, 3, 2, 2, 3, 2, 2, 3, 6, 4, 2, 2, 2, 4, 2, 3, 4, 3, 3, 2, 2, 3, 3, 2,
    3, 3, 2, 2, 5, 3, 4, 3, 2, 4, 4, 3, 3, 3, 3, 2, 4, 3, 2, 6, 2, 2, 3, 4, 3,
    3, 3, 2, 3, 3, 3, 3, 3, 3, 4, 5, 2, 2, 2, 3, 3, 3, 2, 4, 4, 2, 2, 3, 3, 4,
    2, 2, 2, 4, 3, 4, 2, 3, 4, 2, 3, 3, 3, 3, 4, 3, 5, 2, 3, 3, 2, 2, 2, 4, 2,
};

// C_av(j) for j = 1..18, in lowest terms.
const KnownFraction kKnownCav[18] = {
    {1, 1},
    {3, 2},
    {2, 1},
    {9, 4},
    {39, 16},
    {21, 8},
    {45, 16},
    {183, 64},
    {47, 16},
    {761, 256},
    {3079, 1024},
    {3111, 1024},
    {6253, 2048},
    {25213, 8192},
    {25327, 8192},
    {101849, 32768},
    {12781, 4096},
    {410497, 131072},
};

}  // namespace mhw
