#include "opack/bench_tables.hpp"

#include <stdexcept>

namespace opack {

const std::vector<ExpectedRow>& expected_table() {
  static const std::vector<ExpectedRow> rows = {
      {"beasley1", 10, 10, 5, 10, 164, {}, {}, 5},
      {"beasley2", 10, 10, 7, 17, 230, {}, {}, 5},
      {"beasley3", 10, 10, 10, 21, 247, {}, {}, 7},
      {"beasley4", 15, 10, 5, 7, 268, {}, {}, 6},
      {"beasley5", 15, 10, 7, 14, 358, {}, {}, 6},
      {"beasley6", 15, 10, 10, 15, 289, {}, {}, 7},
      {"beasley7", 20, 20, 5, 8, 430, {}, {}, 8},
      {"beasley8", 20, 20, 7, 13, 834, {}, {}, 8},
      {"beasley9", 20, 20, 10, 18, 924, {}, {}, 11},
      {"beasley10", 30, 30, 5, 13, 1452, {}, {}, 6},
      {"beasley11", 30, 30, 7, 15, 1688, {}, {}, 9},
      {"beasley12", 30, 30, 10, 22, 1865, {}, {}, 9},
      {"hadchr3", 30, 30, 7, 7, 1178, {}, {}, 5},
      {"hadchr7", 30, 30, 10, 22, 1865, {}, {}, 9},
      {"hadchr8", 40, 40, 10, 10, 2517, {}, {}, 6, false, true},
      {"hadchr11", 30, 30, 15, 15, 1270, {}, {}, 5},
      {"hadchr12", 40, 40, 15, 15, 2949, {}, {}, 7, false, true},
      {"wang20", 70, 40, 20, 42, 2726, {}, {}, 8},
      {"chrwhi62", 40, 70, 20, 62, 1860, {}, {}, 10},
      {"hifi3", 40, 70, 20, 62, 1860, {}, {}, 10},
      {"hifi3s", 40, 70, 20, 62, 2726, {}, {}, 8},
      {"hifiA1", 50, 60, 20, 62, 2020, {}, {}, 11},
      {"hifiA1s", 50, 60, 20, 62, 2956, {}, {}, 7},
      {"hifiA2", 60, 60, 20, 53, 2615, {}, {}, 11},
      {"hifiA2s", 60, 60, 20, 53, 3535, {}, {}, 8},
      {"hifiCHL2", 62, 55, 10, 19, 2326, {}, {}, 9},
      {"hifiCHL2s", 62, 55, 10, 19, 3336, {}, {}, 10},
      {"hifiCHL3", 157, 121, 15, 35, 5283, {}, {}, 35},
      {"hifiCHL3s", 157, 121, 15, 35, 7402, {}, {}, 35},
      {"hifiCHL4", 207, 231, 15, 27, 8998, {}, {}, 27},
      {"hifiCHL4s", 207, 231, 15, 27, 13932, {}, {}, 27},
      {"hifiCHL5", 30, 20, 10, 18, 589, {}, {}, 11},
      {"cgcut1", 15, 10, 7, 16, 244, {}, {}, 8},
      {"cgcut2", 40, 70, 10, 23, 2892, {}, {}, 12, true},
      {"cgcut3", 40, 70, 20, 62, 1860, {}, {}, 10},
      {"gcut1", 250, 250, 10, 10, 48368, {}, {}, 3},
      {"gcut2", 250, 250, 20, 20, 59798, {}, {}, 6},
      {"gcut3", 250, 250, 30, 30, 61275, {}, {}, 6},
      {"gcut4", 250, 250, 50, 50, 61380, {}, {}, 4, true},
      {"gcut5", 500, 500, 10, 10, 195582, {}, {}, 5},
      {"gcut6", 500, 500, 20, 20, 236305, {}, {}, 4},
      {"gcut7", 500, 500, 30, 30, 240143, {}, {}, 4},
      {"gcut8", 500, 500, 50, 50, 245758, {}, {}, 4, true},
      {"gcut9", 1000, 1000, 10, 10, 939600, {}, {}, 5},
      {"gcut10", 1000, 1000, 20, 20, 937349, {}, {}, 5},
      {"gcut11", 1000, 1000, 30, 30, 969709, {}, {}, 6},
      {"gcut12", 1000, 1000, 50, 50, 979521, {}, {}, 5, true},
      {"gcut13", 3000, 3000, 32, 32, {}, 8622498, 9000000, -1, true},
      {"okp1", 100, 100, 15, 50, 27718, {}, {}, 11},
      {"okp2", 100, 100, 30, 30, 22502, {}, {}, 11},
      {"okp3", 100, 100, 30, 30, 24019, {}, {}, 11},
      {"okp4", 100, 100, 33, 61, 32893, {}, {}, 10},
      {"okp5", 100, 100, 29, 97, 27923, {}, {}, 8},
  };
  return rows;
}

const ExpectedRow* expected_row(const std::string& name) {
  for (const ExpectedRow& row : expected_table())
    if (row.name == name) return &row;
  return nullptr;
}

std::vector<std::string> suite_instances(const std::string& suite) {
  if (suite == "paper-small")
    return {"beasley1", "beasley2", "beasley3", "beasley4", "beasley5", "beasley6",
            "beasley7", "beasley8", "beasley9", "beasley10", "beasley11", "beasley12",
            "cgcut1", "cgcut3", "wang20", "chrwhi62"};
  if (suite == "paper-medium")
    return {"okp1", "okp2", "okp3", "okp4", "okp5", "gcut1", "gcut2", "gcut3", "gcut4",
            "gcut5", "gcut6", "gcut7", "gcut8", "gcut9", "gcut10", "gcut11", "gcut12",
            "cgcut2"};
  throw std::invalid_argument("unknown suite: " + suite);
}

const std::vector<std::pair<std::string, std::string>>& embedded_okp_fixtures() {
  static const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"okp1",
       "2\n100 100\n15\n"
       "4 90 838 5\n22 21 521 2\n22 80 4735 3\n1 88 181 5\n6 40 706 5\n"
       "100 9 2538 5\n46 14 1349 3\n10 96 1685 1\n70 27 5336 3\n57 18 1775 1\n"
       "10 84 1131 1\n100 1 129 5\n2 41 179 5\n36 63 6668 2\n51 24 3551 4\n"},
      {"okp2",
       "2\n100 100\n30\n"
       "8 81 953 1\n5 76 389 1\n42 19 1668 1\n6 80 676 1\n41 48 3580 1\n"
       "6 86 1416 1\n58 20 3166 1\n99 3 537 1\n9 52 1176 1\n100 14 3434 1\n"
       "7 53 676 1\n24 54 1408 1\n23 77 2362 1\n42 32 4031 1\n17 30 1152 1\n"
       "11 90 2255 1\n26 65 3570 1\n11 84 1913 1\n100 11 1552 1\n29 81 4559 1\n"
       "10 64 713 1\n25 48 1279 1\n17 93 3989 1\n77 31 4850 1\n3 71 299 1\n"
       "89 9 1577 1\n1 6 12 1\n12 99 2116 1\n33 72 2932 1\n21 26 1214 1\n"},
      {"okp3",
       "2\n100 100\n30\n"
       "3 98 756 1\n34 36 2712 1\n100 6 1633 1\n49 26 2332 1\n14 56 2187 1\n"
       "100 3 470 1\n10 90 1569 1\n23 95 4947 1\n10 97 2757 1\n50 47 4274 1\n"
       "41 45 4347 1\n13 12 396 1\n19 68 3866 1\n50 46 5447 1\n23 70 2904 1\n"
       "28 82 6032 1\n12 65 1799 1\n9 86 929 1\n21 96 5186 1\n19 64 2120 1\n"
       "21 75 1629 1\n45 26 2059 1\n19 77 2583 1\n5 84 953 1\n16 21 1000 1\n"
       "23 69 2900 1\n5 89 1102 1\n22 63 2234 1\n41 6 458 1\n76 30 5458 1\n"},
      {"okp4",
       "2\n100 100\n33\n"
       "48 48 5145 1\n6 85 874 2\n100 14 2924 1\n17 85 3182 1\n69 20 2862 1\n"
       "12 72 1224 1\n5 48 531 3\n1 97 249 3\n66 36 6601 2\n15 53 1005 1\n"
       "29 80 6228 3\n19 77 3362 1\n97 7 907 1\n7 57 473 2\n63 37 6137 2\n"
       "71 14 1556 1\n3 76 313 3\n34 54 4123 1\n5 91 581 2\n14 87 1999 1\n"
       "62 28 5004 3\n6 7 2040 3\n20 71 3143 1\n92 7 795 1\n10 77 1460 2\n"
       "99 4 841 3\n14 44 1107 2\n100 2 280 3\n56 40 5898 2\n86 14 2096 1\n"
       "22 93 4411 1\n13 99 3456 3\n7 76 1406 3\n"},
      {"okp5",
       "2\n100 100\n29\n"
       "8 81 953 3\n5 76 389 4\n42 19 1668 4\n6 80 676 4\n41 48 3580 1\n"
       "6 86 1416 5\n58 20 3166 5\n99 3 537 5\n9 52 1176 5\n100 14 3434 4\n"
       "7 53 676 5\n24 54 1408 1\n23 77 2362 1\n42 32 4031 5\n17 30 1152 5\n"
       "11 90 2255 4\n26 65 3570 2\n11 84 1913 3\n100 11 1552 1\n29 81 4559 1\n"
       "10 64 713 2\n25 48 1279 1\n17 93 3989 4\n77 31 4850 1\n3 71 299 5\n"
       "89 9 1577 4\n1 6 12 5\n12 99 2116 2\n21 26 1214 5\n"},
  };
  return fixtures;
}

}  // namespace opack
