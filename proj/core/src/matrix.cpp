#include "nonoverlap/matrix.hpp"

#include "nonoverlap/dyck.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nonoverlap {

BinaryMatrix::BinaryMatrix(std::vector<BitString> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw std::invalid_argument("BinaryMatrix: no rows");
  }
  const std::size_t cols = rows_.front().size();
  if (cols == 0) {
    throw std::invalid_argument("BinaryMatrix: empty rows");
  }
  for (const BitString& r : rows_) {
    if (r.size() != cols) {
      throw std::invalid_argument("BinaryMatrix: ragged rows (" + std::to_string(r.size()) +
                                  " vs " + std::to_string(cols) + ")");
    }
  }
  if (cols <= 64) {
    packed_.reserve(rows_.size());
    for (const BitString& r : rows_) {
      std::uint64_t bits = 0;
      for (char c : r.view()) {
        bits = (bits << 1) | (c == '1' ? 1U : 0U);
      }
      packed_.push_back(bits);
    }
  }
}

std::size_t BinaryMatrix::popcount() const noexcept {
  std::size_t total = 0;
  for (const BitString& r : rows_) {
    total += r.popcount();
  }
  return total;
}

std::strong_ordering operator<=>(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (auto c = a.col_count() <=> b.col_count(); c != 0) {
    return c;
  }
  if (auto c = a.row_count() <=> b.row_count(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < a.row_count(); ++i) {
    if (auto c = a.rows_[i] <=> b.rows_[i]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(OverlapKind kind) noexcept {
  switch (kind) {
  case OverlapKind::horizontal:
    return "horizontal";
  case OverlapKind::vertical:
    return "vertical";
  case OverlapKind::diagonal:
    return "diagonal";
  case OverlapKind::containment:
    return "containment";
  }
  return "unknown";
}

std::string_view to_string(OverlapMode mode) noexcept {
  return mode == OverlapMode::strict ? "strict" : "factor-tolerant";
}

namespace {

struct Extent {
  int rows;
  int cols;
};

Extent extent(const BinaryMatrix& m) {
  return {static_cast<int>(m.row_count()), static_cast<int>(m.col_count())};
}

// b's domain, shifted by the offsets, inside a's domain (or the reverse)
bool is_containment(Extent a, Extent b, int dr, int dc) {
  const bool b_in_a = dr >= 0 && dc >= 0 && dr + b.rows <= a.rows && dc + b.cols <= a.cols;
  const bool a_in_b = dr <= 0 && dc <= 0 && a.rows <= dr + b.rows && a.cols <= dc + b.cols;
  return b_in_a || a_in_b;
}

} // namespace

OverlapKind classify_placement(const BinaryMatrix& a, const BinaryMatrix& b, int row_offset,
                               int col_offset) noexcept {
  if (is_containment(extent(a), extent(b), row_offset, col_offset)) {
    return OverlapKind::containment;
  }
  if (row_offset == 0 && col_offset != 0) {
    return OverlapKind::horizontal;
  }
  if (col_offset == 0 && row_offset != 0) {
    return OverlapKind::vertical;
  }
  return OverlapKind::diagonal;
}

bool placement_matches(const BinaryMatrix& a, const BinaryMatrix& b, int row_offset,
                       int col_offset) noexcept {
  const Extent ea = extent(a);
  const Extent eb = extent(b);
  const int r0 = std::max(0, row_offset);
  const int r1 = std::min(ea.rows, row_offset + eb.rows);
  const int c0 = std::max(0, col_offset);
  const int c1 = std::min(ea.cols, col_offset + eb.cols);
  if (r0 >= r1 || c0 >= c1) {
    return false;
  }
  const auto width = static_cast<std::size_t>(c1 - c0);
  if (!a.packed_rows().empty() && !b.packed_rows().empty()) {
    // column c of an n-wide row sits at bit n-1-c
    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    const int shift_a = ea.cols - c1;
    const int shift_b = eb.cols - (c1 - col_offset);
    const auto& pa = a.packed_rows();
    const auto& pb = b.packed_rows();
    for (int r = r0; r < r1; ++r) {
      const std::uint64_t ra = pa[static_cast<std::size_t>(r)] >> shift_a;
      const std::uint64_t rb = pb[static_cast<std::size_t>(r - row_offset)] >> shift_b;
      if (((ra ^ rb) & mask) != 0) {
        return false;
      }
    }
    return true;
  }
  for (int r = r0; r < r1; ++r) {
    const std::string_view ra =
        a.rows()[static_cast<std::size_t>(r)].view().substr(static_cast<std::size_t>(c0), width);
    const std::string_view rb = b.rows()[static_cast<std::size_t>(r - row_offset)].view().substr(
        static_cast<std::size_t>(c0 - col_offset), width);
    if (ra != rb) {
      return false;
    }
  }
  return true;
}

namespace {

// Visits placements in the documented quadrant order; stops when `visit`
// returns true.
template <typename Visit>
void scan_placements(const BinaryMatrix& a, const BinaryMatrix& b, OverlapMode mode,
                     Visit&& visit) {
  const Extent ea = extent(a);
  const Extent eb = extent(b);
  const bool same = (a == b);

  auto attempt = [&](int dr, int dc) -> bool {
    if (dr == 0 && dc == 0 && same) {
      return false;
    }
    const bool contained = is_containment(ea, eb, dr, dc);
    if (mode == OverlapMode::factor_tolerant && contained) {
      return false;
    }
    if (!placement_matches(a, b, dr, dc)) {
      return false;
    }
    OverlapReport rep;
    rep.row_offset = dr;
    rep.col_offset = dc;
    rep.region_rows = std::min(ea.rows, dr + eb.rows) - std::max(0, dr);
    rep.region_cols = std::min(ea.cols, dc + eb.cols) - std::max(0, dc);
    rep.kind = classify_placement(a, b, dr, dc);
    return visit(rep);
  };

  // b moved down/right over a
  for (int dr = 0; dr < ea.rows; ++dr) {
    for (int dc = 0; dc < ea.cols; ++dc) {
      if (attempt(dr, dc)) {
        return;
      }
    }
  }
  // a moved down/right over b
  for (int dr = 0; dr > -eb.rows; --dr) {
    for (int dc = 0; dc > -eb.cols; --dc) {
      if ((dr != 0 || dc != 0) && attempt(dr, dc)) {
        return;
      }
    }
  }
  // b down and left
  for (int dr = 1; dr < ea.rows; ++dr) {
    for (int dc = -1; dc > -eb.cols; --dc) {
      if (attempt(dr, dc)) {
        return;
      }
    }
  }
  // b up and right
  for (int dr = -1; dr > -eb.rows; --dr) {
    for (int dc = 1; dc < ea.cols; ++dc) {
      if (attempt(dr, dc)) {
        return;
      }
    }
  }
}

} // namespace

std::optional<OverlapReport> matrix_overlap(const BinaryMatrix& a, const BinaryMatrix& b,
                                            OverlapMode mode) {
  std::optional<OverlapReport> found;
  scan_placements(a, b, mode, [&](const OverlapReport& rep) {
    found = rep;
    return true;
  });
  return found;
}

std::vector<OverlapReport> all_overlaps(const BinaryMatrix& a, const BinaryMatrix& b,
                                        OverlapMode mode) {
  std::vector<OverlapReport> found;
  scan_placements(a, b, mode, [&](const OverlapReport& rep) {
    found.push_back(rep);
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------

namespace {

// |inner|^(h-2), saturating at max_size + 1
std::size_t framed_count(std::size_t inner, int h, std::size_t max_size) {
  std::size_t count = 1;
  for (int i = 0; i < h - 2; ++i) {
    if (inner != 0 && count > (max_size + 1) / inner) {
      return max_size + 1;
    }
    count *= inner;
  }
  return count;
}

// Appends every h-row matrix framed by (top, bottom) with inner rows drawn
// from `inner`, in lexicographic order of the inner tuple.
void append_framed(const FrameRows& frame, int h, MatrixFamily& out) {
  const std::size_t inner_rows = static_cast<std::size_t>(h - 2);
  if (inner_rows > 0 && frame.inner.empty()) {
    return;
  }
  std::vector<std::size_t> pick(inner_rows, 0);
  while (true) {
    std::vector<BitString> rows;
    rows.reserve(inner_rows + 2);
    rows.push_back(frame.top);
    for (std::size_t idx : pick) {
      rows.push_back(frame.inner[idx]);
    }
    rows.push_back(frame.bottom);
    out.emplace_back(std::move(rows));

    // odometer, last inner row fastest
    std::size_t pos = inner_rows;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < frame.inner.size()) {
        break;
      }
      pick[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
    if (inner_rows == 0) {
      return;
    }
  }
}

StringSet without(StringSet rows, const BitString& x, const BitString& y) {
  std::erase_if(rows, [&](const BitString& r) { return r == x || r == y; });
  return rows;
}

} // namespace

FrameRows v_frame(int s, int k) {
  const RunParams params{k};
  params.validate();
  FrameRows f{canonical_t(s, params), canonical_b(s, params), {}};
  f.inner = without(gen_v_level(s, params), f.top, f.bottom);
  return f;
}

FrameRows d_frame(int cols) {
  FrameRows f{canonical_t_dyck(cols), canonical_b_dyck(cols), {}};
  StringSet rows;
  for (const BitString& w : gen_dyck(cols / 2 - 1)) {
    rows.push_back(BitString("1") + w + BitString("0"));
  }
  f.inner = without(std::move(rows), f.top, f.bottom);
  return f;
}

MatrixFamily build_m(int h, int s, int k) {
  if (h < 2) {
    throw DomainError("build_m: h must be >= 2");
  }
  const FrameRows frame = v_frame(s, k);
  MatrixFamily out;
  append_framed(frame, h, out);
  return out;
}

MatrixFamily build_m_dyck(int h, int cols) {
  if (h < 2) {
    throw DomainError("build_m_dyck: h must be >= 2");
  }
  const FrameRows frame = d_frame(cols);
  MatrixFamily out;
  append_framed(frame, h, out);
  return out;
}

namespace {

template <typename FrameAt>
MatrixFamily build_family(int m, const std::vector<int>& widths, std::size_t max_size,
                          FrameAt&& frame_at, const char* what) {
  if (m < 2) {
    throw DomainError(std::string(what) + ": m must be >= 2");
  }
  std::vector<FrameRows> frames;
  std::size_t total = 0;
  for (int w : widths) {
    frames.push_back(frame_at(w));
    for (int h = 2; h <= m; ++h) {
      total += framed_count(frames.back().inner.size(), h, max_size);
      if (total > max_size) {
        throw LimitExceeded(std::string(what) + ": family exceeds " + std::to_string(max_size) +
                            " matrices");
      }
    }
  }
  MatrixFamily out;
  out.reserve(total);
  for (const FrameRows& f : frames) {
    for (int h = 2; h <= m; ++h) {
      append_framed(f, h, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

MatrixFamily build_v_matrix_family(int m, int n, int k, std::size_t max_size) {
  RunParams{k}.validate();
  std::vector<int> widths;
  for (int s = 2 * k + 3; s <= n; ++s) {
    widths.push_back(s);
  }
  return build_family(
      m, widths, max_size, [k](int s) { return v_frame(s, k); }, "build_v_matrix_family");
}

MatrixFamily build_d_matrix_family(int m, int n, std::size_t max_size) {
  if (n < 0) {
    throw DomainError("build_d_matrix_family: n must be >= 0");
  }
  std::vector<int> widths;
  for (int s = 3; s <= n / 2; ++s) {
    widths.push_back(2 * s);
  }
  return build_family(m, widths, max_size, d_frame, "build_d_matrix_family");
}

} // namespace nonoverlap
