#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonoverlap {

/// Raised when an operation is called outside its parameter domain.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive routine would exceed its work guard.
class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite word over {0,1}. Textual form is '0'/'1' characters, leftmost
/// symbol first. Ordering is lexicographic on that text.
class BitString {
public:
  BitString() = default;

  /// Throws std::invalid_argument if `text` contains anything but '0'/'1'.
  explicit BitString(std::string_view text);

  static BitString repeat(char bit, std::size_t count);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const noexcept { return bits_[i]; }

  std::string_view view() const noexcept { return bits_; }
  const std::string& str() const noexcept { return bits_; }

  BitString prefix(std::size_t len) const;
  BitString suffix(std::size_t len) const;
  std::size_t popcount() const noexcept;

  BitString& operator+=(const BitString& rhs);
  friend BitString operator+(BitString lhs, const BitString& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_.compare(b.bits_) <=> 0;
  }

private:
  std::string bits_;
};

using StringSet = std::vector<BitString>;

/// Forbidden run length k; the constructions require k >= 3.
struct RunParams {
  int k = 3;

  /// Throws DomainError when k < 3.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Prefix / suffix predicates
// ---------------------------------------------------------------------------

/// Direction of a string-level overlap between an ordered pair (left, right).
enum class OverlapDirection {
  left_suffix_right_prefix, ///< a suffix of left equals a prefix of right
  left_prefix_right_suffix, ///< a prefix of left equals a suffix of right
};

struct StringOverlap {
  std::size_t length = 0;
  OverlapDirection direction = OverlapDirection::left_suffix_right_prefix;

  friend bool operator==(const StringOverlap&, const StringOverlap&) = default;
};

/// True iff some length l in [1, min(|u|,|v|)-1] has a proper prefix of one
/// word equal to a proper suffix of the other. Containment is not an overlap.
/// Throws DomainError on an empty argument.
bool strings_overlap(const BitString& u, const BitString& v);

/// The longest proper prefix/suffix coincidence between u and v, or nullopt.
/// Ties between directions resolve to left_suffix_right_prefix.
std::optional<StringOverlap> longest_overlap(const BitString& u, const BitString& v);

/// Checks the coincidence described by `w` on the pair (u, v).
bool overlap_holds(const BitString& u, const BitString& v, const StringOverlap& w);

/// Self non-overlapping. Throws DomainError on empty input.
bool is_bifix_free(const BitString& u);

/// True iff u occurs contiguously inside v.
bool is_factor(const BitString& u, const BitString& v);

/// True iff `s` has no run of `k` equal symbols.
bool avoids_runs(std::string_view s, int k) noexcept;

// ---------------------------------------------------------------------------
// The forbidden-run family
// ---------------------------------------------------------------------------

/// Length-`len` words that start with 0, end with 1 and avoid 0^k and 1^k,
/// in lexicographic order. len == 0 yields the single empty word.
StringSet gen_inner_strings(int len, const RunParams& params);

/// All words 1^k 0u1 0^k of length `i` with 0u1 run-avoiding. Requires
/// i >= 2k+2.
StringSet gen_v_level(int i, const RunParams& params);

/// Union of gen_v_level over 2k+2 .. n, lexicographically sorted.
StringSet gen_v_family(int n, const RunParams& params);

/// Fixed first row for width `s` (s >= 2k+3): the inner part alternates
/// starting with 1.
BitString canonical_t(int s, const RunParams& params);

/// Fixed last row for width `s` (s >= 2k+3): the inner part alternates
/// starting with 0.
BitString canonical_b(int s, const RunParams& params);

} // namespace nonoverlap
