#include "nonoverlap/dyck.hpp"

#include <algorithm>
#include <string>

namespace nonoverlap {

bool is_dyck(const BitString& w) noexcept {
  long height = 0;
  for (char c : w.view()) {
    height += (c == '1') ? 1 : -1;
    if (height < 0) {
      return false;
    }
  }
  return height == 0;
}

namespace {

void extend_dyck(std::string& buf, int ups_left, int downs_left, StringSet& out) {
  if (ups_left == 0 && downs_left == 0) {
    out.emplace_back(buf);
    return;
  }
  // A down-step is legal while the path is above ground, i.e. more downs
  // than ups remain. '0' first keeps lexicographic order.
  if (downs_left > ups_left) {
    buf.push_back('0');
    extend_dyck(buf, ups_left, downs_left - 1, out);
    buf.pop_back();
  }
  if (ups_left > 0) {
    buf.push_back('1');
    extend_dyck(buf, ups_left - 1, downs_left, out);
    buf.pop_back();
  }
}

int dyck_semilength_for(int cols, const char* what) {
  if (cols % 2 != 0 || cols < 6) {
    throw DomainError(std::string(what) + ": width must be even and at least 6, got " +
                      std::to_string(cols));
  }
  return cols / 2;
}

} // namespace

StringSet gen_dyck(int semilength) {
  if (semilength < 0) {
    throw DomainError("gen_dyck: negative semilength");
  }
  StringSet out;
  std::string buf;
  buf.reserve(static_cast<std::size_t>(2 * semilength));
  extend_dyck(buf, semilength, semilength, out);
  return out;
}

StringSet gen_d_family(int n) {
  if (n < 2) {
    throw DomainError("gen_d_family: n must be >= 2, got " + std::to_string(n));
  }
  const BitString up("1");
  const BitString down("0");
  StringSet out;
  for (int i = 0; i <= (n - 2) / 2; ++i) {
    for (const BitString& w : gen_dyck(i)) {
      out.push_back(up + w + down);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BitString canonical_t_dyck(int cols) {
  const int s = dyck_semilength_for(cols, "canonical_t_dyck");
  std::string row = "1";
  for (int i = 0; i < s - 1; ++i) {
    row += "10";
  }
  row += "0";
  return BitString(row);
}

BitString canonical_b_dyck(int cols) {
  const int s = dyck_semilength_for(cols, "canonical_b_dyck");
  return BitString::repeat('1', static_cast<std::size_t>(s)) +
         BitString::repeat('0', static_cast<std::size_t>(s));
}

} // namespace nonoverlap
