// Expected table contents for the four reference parameter sweeps, used by
// both the unit tests and the acceptance suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cartqec::testdata {

struct ExpectedRow {
  std::uint64_t delta;
  std::uint64_t css_k;
  std::uint64_t steane_k;
  std::uint64_t d;
  const char* css_gv;
  const char* steane_gv;
  std::uint32_t prop4;
  std::uint64_t cor1;
  bool cor1_exact;
  std::uint64_t actual;
};

struct ExpectedTable {
  const char* name;
  std::uint32_t p;
  std::vector<std::uint32_t> r;
  std::uint64_t q;
  std::uint64_t n;
  std::uint64_t delta_lo, delta_hi;
  std::vector<ExpectedRow> rows;
};

inline std::vector<ExpectedTable> expected_tables() {
  std::vector<ExpectedTable> tables;

  tables.push_back({"q8_r33", 2, {3, 3}, 8, 64, 3, 8,
                    {
                        {3, 58, 60, 3, "meets", "exceeds", 2, 2, true, 2},
                        {4, 54, 56, 4, "meets", "exceeds", 2, 2, true, 2},
                        {5, 48, 51, 5, "neither", "meets", 2, 3, false, 3},
                        {6, 44, 46, 6, "neither", "meets", 2, 2, true, 2},
                        {7, 36, 40, 7, "neither", "neither", 2, 4, false, 4},
                        {8, 32, 34, 8, "neither", "neither", 2, 2, true, 2},
                    }});

  // The delta=5 refinement bound is K + C(K,2) = 4 + 6 = 10 (s = 4 is a
  // composite square and K = 4); it coincides with the actual increase.
  tables.push_back({"q5_r1111", 5, {1, 1, 1, 1}, 5, 625, 3, 6,
                    {
                        {3, 615, 619, 3, "meets", "exceeds", 4, 4, true, 4},
                        {4, 607, 611, 4, "meets", "exceeds", 4, 4, true, 4},
                        {5, 587, 597, 5, "neither", "neither", 4, 10, false, 10},
                        {6, 579, 583, 6, "neither", "neither", 4, 4, true, 4},
                    }});

  tables.push_back({"q16_r442", 2, {4, 4, 2}, 16, 1024, 3, 17,
                    {
                        {3, 1016, 1019, 3, "meets", "exceeds", 3, 3, true, 3},
                        {4, 1010, 1013, 4, "meets", "meets", 3, 3, true, 3},
                        {5, 998, 1004, 5, "neither", "neither", 3, 6, false, 6},
                        {6, 994, 996, 6, "neither", "neither", 2, 2, true, 2},
                        {7, 978, 986, 7, "neither", "neither", 2, 4, false, 8},
                        {8, 974, 976, 8, "neither", "neither", 2, 2, true, 2},
                        {9, 956, 965, 9, "neither", "neither", 2, 4, false, 9},
                        {10, 946, 951, 10, "neither", "neither", 2, 3, false, 5},
                        {11, 934, 940, 11, "neither", "neither", 2, 4, false, 6},
                        {12, 930, 932, 12, "neither", "neither", 2, 2, true, 2},
                        {13, 900, 915, 13, "neither", "neither", 2, 4, false, 15},
                        {14, 896, 898, 14, "neither", "neither", 2, 2, true, 2},
                        {15, 884, 890, 15, "neither", "neither", 2, 4, false, 6},
                        {16, 872, 878, 16, "neither", "neither", 2, 4, false, 6},
                        {17, 848, 860, 17, "neither", "neither", 2, 3, false, 12},
                    }});

  tables.push_back({"q8_r3331", 2, {3, 3, 3, 1}, 8, 1024, 3, 9,
                    {
                        {3, 1014, 1018, 3, "meets", "exceeds", 4, 4, true, 4},
                        {4, 1008, 1011, 4, "meets", "meets", 3, 3, true, 3},
                        {5, 990, 999, 5, "neither", "neither", 3, 6, false, 9},
                        {6, 984, 987, 6, "neither", "neither", 3, 3, true, 3},
                        {7, 960, 972, 7, "neither", "neither", 3, 9, false, 12},
                        {8, 954, 957, 8, "neither", "neither", 3, 3, true, 3},
                        {9, 922, 938, 9, "neither", "neither", 3, 9, false, 16},
                    }});

  return tables;
}

/// The 27 footprint values of the p=3, r=(2,1) grid, row per a_2.
inline std::vector<std::vector<std::uint64_t>> expected_grid_3_21() {
  return {
      {27, 24, 21, 18, 15, 12, 9, 6, 3},
      {18, 16, 14, 12, 10, 8, 6, 4, 2},
      {9, 8, 7, 6, 5, 4, 3, 2, 1},
  };
}

}  // namespace cartqec::testdata
