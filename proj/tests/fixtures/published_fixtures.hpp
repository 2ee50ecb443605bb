#pragma once

// Grids and word lists transcribed from published tables and worked
// examples. Kept verbatim, including entries that turn out to be inconsistent
// with the construction; tests state which ones are.

#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

inline nonoverlap::BinaryMatrix grid(std::initializer_list<const char*> rows) {
  std::vector<nonoverlap::BitString> out;
  for (const char* r : rows) {
    out.emplace_back(r);
  }
  return nonoverlap::BinaryMatrix(std::move(out));
}

// The forbidden-run family for k = 3, n = 13, by word length, as printed.
// The n = 12 column repeats 111010011000.
inline const std::map<int, std::vector<std::string>>& v13_k3_table() {
  static const std::map<int, std::vector<std::string>> table{
      {8, {"11101000"}},
      {9, {"111011000", "111001000"}},
      {10, {"1110101000", "1110011000"}},
      {11, {"11101101000", "11101001000", "11101011000", "11100101000"}},
      {12,
       {"111010011000", "111011011000", "111011001000", "111010101000", "111010011000",
        "111001101000", "111001001000"}},
      {13,
       {"1110011011000", "1110010011000", "1110011001000", "1110010101000", "1110110011000",
        "1110110101000", "1110100101000", "1110101101000", "1110101011000",
        "1110101001000"}},
  };
  return table;
}

struct OverlapFixture {
  nonoverlap::BinaryMatrix left;
  nonoverlap::BinaryMatrix right;
  int row_offset; // placement shown in the example
  int col_offset;
  nonoverlap::OverlapKind kind;
};

// The three 4x6 pairs illustrating horizontal, diagonal and vertical overlap.
inline std::vector<OverlapFixture> overlap_examples() {
  using nonoverlap::OverlapKind;
  return {
      {grid({"010101", "011101", "111100", "100011"}),
       grid({"011110", "011110", "001000", "110101"}), 0, 4, OverlapKind::horizontal},
      {grid({"010101", "011101", "111100", "100011"}),
       grid({"100111", "011110", "111000", "010101"}), 2, 3, OverlapKind::diagonal},
      {grid({"010101", "011101", "111100", "100110"}),
       grid({"111100", "100110", "111000", "110101"}), 2, 0, OverlapKind::vertical},
  };
}

// Two 4x10 matrices given as a non-overlapping example.
inline nonoverlap::BinaryMatrix nonoverlap_example_left() {
  return grid({"1100100100", "0110010110", "0100110010", "1111100000"});
}
inline nonoverlap::BinaryMatrix nonoverlap_example_right() {
  return grid({"1100100100", "0010110110", "1101101010", "1110000000"});
}

// Rows from V^{12,(3)} without the fixed first/last row: D is rows 3..5 of C.
inline nonoverlap::BinaryMatrix counterexample_c() {
  return grid({"111010011000", "111011011000", "111011001000", "111010101000", "111010011000",
               "111001101000", "111001001000"});
}
inline nonoverlap::BinaryMatrix counterexample_d() {
  return grid({"111011001000", "111010101000", "111010011000"});
}

enum class ExampleStatus { member, inner_equals_frame, forbidden_run };

struct ExampleEntry {
  const char* label;
  nonoverlap::BinaryMatrix matrix;
  ExampleStatus status;
};

// Every matrix drawn in the k = 3 variable-dimension example, with
// what the construction says about it.
inline std::vector<ExampleEntry> variable_width_examples() {
  using S = ExampleStatus;
  return {
      {"n9", grid({"111011000", "111001000"}), S::member},
      {"n10", grid({"1110101000", "1110011000"}), S::member},
      {"n11a", grid({"11101011000", "11100101000"}), S::member},
      {"n11b", grid({"11101011000", "11100101000", "11101101000", "11100101000"}),
       S::inner_equals_frame},
      {"n11c", grid({"11101011000", "11101011000", "11100101000"}), S::inner_equals_frame},
      {"n11d",
       grid({"11101011000", "11100101000", "11101101000", "11101101000", "11100101000"}),
       S::inner_equals_frame},
      {"n12a", grid({"111010101000", "111001011000", "111001001000", "111001011000"}),
       S::inner_equals_frame},
      {"n12b", grid({"111010101000", "111001001000", "111011001000", "111001011000"}),
       S::member},
      {"n12c", grid({"111010101000", "111010011000", "111001011000"}), S::member},
      {"n12d",
       grid({"111010101000", "111000101000", "111011001000", "111011001000", "111001011000"}),
       S::forbidden_run},
      {"n13a",
       grid({"1110101011000", "1110010011000", "1110010111000", "1110010011000",
             "1110010101000"}),
       S::forbidden_run},
      {"n13b", grid({"1110101011000", "1110011001000", "1110011001000", "1110010101000"}),
       S::member},
      {"n13c",
       grid({"1110101011000", "1110101011000", "1110110101000", "1110110101000",
             "1110010101000"}),
       S::inner_equals_frame},
      {"n13d",
       grid({"1110101011000", "1110100101000", "1110110101000", "1110100101000",
             "1110100101000", "1110010101000"}),
       S::member},
  };
}

} // namespace fixtures
