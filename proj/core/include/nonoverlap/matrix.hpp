#pragma once

#include "nonoverlap/bitstring.hpp"

#include <compare>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace nonoverlap {

/// Rectangular grid of bits stored row by row. At least one row; every row
/// has the same length.
class BinaryMatrix {
public:
  /// Throws std::invalid_argument on an empty or ragged row list.
  explicit BinaryMatrix(std::vector<BitString> rows);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return rows_.front().size(); }
  const BitString& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitString>& rows() const noexcept { return rows_; }
  std::size_t popcount() const noexcept;

  /// Rows as bit masks with column 0 in the most significant used bit.
  /// Empty when the matrix is wider than 64 columns.
  const std::vector<std::uint64_t>& packed_rows() const noexcept { return packed_; }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  /// Orders by column count, then row count, then rows lexicographically.
  friend std::strong_ordering operator<=>(const BinaryMatrix& a, const BinaryMatrix& b);

private:
  std::vector<BitString> rows_;
  std::vector<std::uint64_t> packed_;
};

using MatrixFamily = std::vector<BinaryMatrix>;

enum class OverlapMode {
  strict,          ///< every matching placement counts, containment included
  factor_tolerant, ///< placements where one domain contains the other are ignored
};

enum class OverlapKind { horizontal, vertical, diagonal, containment };

std::string_view to_string(OverlapKind kind) noexcept;
std::string_view to_string(OverlapMode mode) noexcept;

/// A matching placement of the right matrix over the left one. Offsets give
/// the position of the right matrix's top-left cell in the left matrix's
/// coordinates; region_* is the size of the shared area.
struct OverlapReport {
  int row_offset = 0;
  int col_offset = 0;
  int region_rows = 0;
  int region_cols = 0;
  OverlapKind kind = OverlapKind::diagonal;

  friend bool operator==(const OverlapReport&, const OverlapReport&) = default;
};

/// Classification of a placement by its offsets and the two shapes.
/// A zero offset pair on crossing shapes (neither contains the other) is
/// reported as diagonal.
OverlapKind classify_placement(const BinaryMatrix& a, const BinaryMatrix& b, int row_offset,
                               int col_offset) noexcept;

/// Whether placing b at (row_offset, col_offset) over a makes all shared
/// entries agree. False when the domains do not intersect.
bool placement_matches(const BinaryMatrix& a, const BinaryMatrix& b, int row_offset,
                       int col_offset) noexcept;

/// First matching placement of b over a, or nullopt.
///
/// The full offset rectangle is scanned. Placements are visited quadrant by
/// quadrant: first b moved down and/or right from the corner-aligned start
/// (both offsets >= 0), then a moved down and/or right over b (both <= 0),
/// then the two mixed quadrants (rows > 0, cols < 0; rows < 0, cols > 0).
/// Within a quadrant, offsets grow in magnitude row-major. The (0,0) placement
/// is skipped when a == b. factor_tolerant additionally skips containment.
std::optional<OverlapReport> matrix_overlap(const BinaryMatrix& a, const BinaryMatrix& b,
                                            OverlapMode mode);

/// Every matching placement in the same order matrix_overlap visits them.
std::vector<OverlapReport> all_overlaps(const BinaryMatrix& a, const BinaryMatrix& b,
                                        OverlapMode mode);

/// Matrices with first row canonical_t(s), last row canonical_b(s) and h-2
/// inner rows (repetition allowed) from gen_v_level(s) minus {T, B}.
/// Requires h >= 2, s >= 2k+3.
MatrixFamily build_m(int h, int s, int k);

/// Union of build_m over 2 <= h <= m and 2k+3 <= s <= n, sorted.
/// Throws LimitExceeded when the family would exceed `max_size` matrices.
MatrixFamily build_v_matrix_family(int m, int n, int k, std::size_t max_size = 20000);

/// The Dyck analogue of build_m at width 2s (s >= 3): inner rows 1w0 with w a
/// Dyck word of semilength s-1, excluding the canonical T and B.
MatrixFamily build_m_dyck(int h, int cols);

/// Union of build_m_dyck over 2 <= h <= m and even widths 6 .. 2*floor(n/2).
MatrixFamily build_d_matrix_family(int m, int n, std::size_t max_size = 20000);

/// The frame rows shared by every matrix of a family at a given width.
struct FrameRows {
  BitString top;
  BitString bottom;
  StringSet inner; ///< admissible inner rows, T and B removed
};

FrameRows v_frame(int s, int k);
FrameRows d_frame(int cols);

} // namespace nonoverlap
