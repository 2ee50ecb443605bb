#include "nonoverlap/bitstring.hpp"

#include <algorithm>
#include <string>

namespace nonoverlap {

BitString::BitString(std::string_view text) : bits_(text) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString: symbol outside {0,1}: '" + std::string(1, c) + "'");
    }
  }
}

BitString BitString::repeat(char bit, std::size_t count) {
  return BitString(std::string(count, bit));
}

BitString BitString::prefix(std::size_t len) const {
  BitString out;
  out.bits_ = bits_.substr(0, std::min(len, bits_.size()));
  return out;
}

BitString BitString::suffix(std::size_t len) const {
  BitString out;
  len = std::min(len, bits_.size());
  out.bits_ = bits_.substr(bits_.size() - len);
  return out;
}

std::size_t BitString::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

BitString& BitString::operator+=(const BitString& rhs) {
  bits_ += rhs.bits_;
  return *this;
}

void RunParams::validate() const {
  if (k < 3) {
    throw DomainError("forbidden run length k must be >= 3, got " + std::to_string(k));
  }
}

namespace {

void require_nonempty(const BitString& u, const char* what) {
  if (u.empty()) {
    throw DomainError(std::string(what) + ": empty string");
  }
}

// suffix of `a` of length len equals prefix of `b` of length len
bool suffix_meets_prefix(std::string_view a, std::string_view b, std::size_t len) {
  return a.substr(a.size() - len) == b.substr(0, len);
}

} // namespace

std::optional<StringOverlap> longest_overlap(const BitString& u, const BitString& v) {
  require_nonempty(u, "longest_overlap");
  require_nonempty(v, "longest_overlap");
  const std::size_t max_len = std::min(u.size(), v.size()) - 1;
  for (std::size_t len = max_len; len >= 1; --len) {
    if (suffix_meets_prefix(u.view(), v.view(), len)) {
      return StringOverlap{len, OverlapDirection::left_suffix_right_prefix};
    }
    if (suffix_meets_prefix(v.view(), u.view(), len)) {
      return StringOverlap{len, OverlapDirection::left_prefix_right_suffix};
    }
  }
  return std::nullopt;
}

bool strings_overlap(const BitString& u, const BitString& v) {
  return longest_overlap(u, v).has_value();
}

bool overlap_holds(const BitString& u, const BitString& v, const StringOverlap& w) {
  if (u.empty() || v.empty() || w.length == 0 || w.length >= std::min(u.size(), v.size())) {
    return false;
  }
  return w.direction == OverlapDirection::left_suffix_right_prefix
             ? suffix_meets_prefix(u.view(), v.view(), w.length)
             : suffix_meets_prefix(v.view(), u.view(), w.length);
}

bool is_bifix_free(const BitString& u) {
  require_nonempty(u, "is_bifix_free");
  return !strings_overlap(u, u);
}

bool is_factor(const BitString& u, const BitString& v) {
  return v.view().find(u.view()) != std::string_view::npos;
}

bool avoids_runs(std::string_view s, int k) noexcept {
  int run = 0;
  char prev = '\0';
  for (char c : s) {
    run = (c == prev) ? run + 1 : 1;
    prev = c;
    if (run >= k) {
      return false;
    }
  }
  return true;
}

namespace {

// Depth-first extension of `buf` keeping every run shorter than k. Branching
// '0' before '1' yields lexicographic order.
void extend_inner(std::string& buf, int target, int k, int run, StringSet& out) {
  const int len = static_cast<int>(buf.size());
  if (len == target) {
    if (buf.back() == '1') {
      out.emplace_back(buf);
    }
    return;
  }
  for (char c : {'0', '1'}) {
    const int next_run = (c == buf.back()) ? run + 1 : 1;
    if (next_run >= k) {
      continue;
    }
    buf.push_back(c);
    extend_inner(buf, target, k, next_run, out);
    buf.pop_back();
  }
}

} // namespace

StringSet gen_inner_strings(int len, const RunParams& params) {
  params.validate();
  if (len < 0) {
    throw DomainError("gen_inner_strings: negative length");
  }
  StringSet out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  std::string buf = "0";
  extend_inner(buf, len, params.k, 1, out);
  return out;
}

StringSet gen_v_level(int i, const RunParams& params) {
  params.validate();
  const int k = params.k;
  if (i < 2 * k + 2) {
    throw DomainError("gen_v_level: length " + std::to_string(i) + " is below 2k+2 = " +
                      std::to_string(2 * k + 2));
  }
  const BitString head = BitString::repeat('1', static_cast<std::size_t>(k));
  const BitString tail = BitString::repeat('0', static_cast<std::size_t>(k));
  StringSet out;
  for (const BitString& inner : gen_inner_strings(i - 2 * k, params)) {
    out.push_back(head + inner + tail);
  }
  // head and tail are fixed, so inner order carries over
  return out;
}

StringSet gen_v_family(int n, const RunParams& params) {
  params.validate();
  if (n < 2 * params.k + 2) {
    throw DomainError("gen_v_family: n = " + std::to_string(n) + " is below 2k+2 = " +
                      std::to_string(2 * params.k + 2));
  }
  StringSet out;
  for (int i = 2 * params.k + 2; i <= n; ++i) {
    StringSet level = gen_v_level(i, params);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string alternate(char first, int len) {
  std::string s;
  s.reserve(static_cast<std::size_t>(len));
  char c = first;
  for (int i = 0; i < len; ++i) {
    s.push_back(c);
    c = (c == '0') ? '1' : '0';
  }
  return s;
}

BitString framed_row(int s, const RunParams& params, char first_inner, const char* what) {
  params.validate();
  const int k = params.k;
  if (s < 2 * k + 3) {
    throw DomainError(std::string(what) + ": width " + std::to_string(s) +
                      " is below 2k+3 = " + std::to_string(2 * k + 3));
  }
  // Width s leaves s-2k-2 free symbols between the fixed "1^k 0" and "1 0^k".
  // Even: (10)^j or (01)^j. Odd: 1(01)^j or 0(10)^j. Both are one alternating
  // run beginning with `first_inner`.
  const std::string middle = alternate(first_inner, s - 2 * k - 2);
  return BitString(std::string(static_cast<std::size_t>(k), '1') + "0" + middle + "1" +
                   std::string(static_cast<std::size_t>(k), '0'));
}

} // namespace

BitString canonical_t(int s, const RunParams& params) {
  return framed_row(s, params, '1', "canonical_t");
}

BitString canonical_b(int s, const RunParams& params) {
  return framed_row(s, params, '0', "canonical_b");
}

} // namespace nonoverlap
