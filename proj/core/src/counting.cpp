#include "nonoverlap/counting.hpp"

#include "nonoverlap/bitstring.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nonoverlap {

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

Rational ipow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

BigInt kbonacci(int k, int l) {
  if (k < 2) {
    throw DomainError("kbonacci: order must be >= 2, got " + std::to_string(k));
  }
  if (l < 0) {
    throw DomainError("kbonacci: negative index");
  }
  // the printed base case stops at l < k-1; f_{k-1} = 2^{k-1} closes the gap
  std::vector<BigInt> f;
  f.reserve(static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= l; ++i) {
    if (i <= k - 1) {
      f.push_back(BigInt(1) << i);
    } else {
      BigInt sum = 0;
      for (int j = 1; j <= k; ++j) {
        sum += f[static_cast<std::size_t>(i - j)];
      }
      f.push_back(std::move(sum));
    }
  }
  return f.back();
}

int d_correction(int k, int l) {
  if (k < 2 || l < 0) {
    throw DomainError("d_correction: requires k >= 2 and l >= 0");
  }
  switch (l % k) {
  case 0:
    return 1;
  case 1:
    return -1;
  default:
    return 0;
  }
}

BigInt r_count(int k, int l) {
  RunParams{k}.validate();
  if (l < 0) {
    throw DomainError("r_count: negative length");
  }
  if (l == 0) {
    return 1;
  }
  const BigInt numerator = kbonacci(k - 1, l - 1) + d_correction(k, l);
  if ((numerator & 1) != 0) {
    throw std::logic_error("r_count: odd numerator at k=" + std::to_string(k) +
                           ", l=" + std::to_string(l));
  }
  return numerator / 2;
}

BigInt catalan(int s) {
  if (s < 0) {
    throw DomainError("catalan: negative index");
  }
  BigInt c = 1;
  for (int i = 0; i < s; ++i) {
    // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step
    c = c * (2 * (2 * i + 1)) / (i + 2);
  }
  return c;
}

BigInt card_v_matrices(int m, int n, int k) {
  RunParams{k}.validate();
  if (m < 2) {
    throw DomainError("card_v_matrices: m must be >= 2");
  }
  BigInt total = 0;
  for (int s = 2 * k + 3; s <= n; ++s) {
    const BigInt inner = r_count(k, s - 2 * k) - 2;
    for (int h = 2; h <= m; ++h) {
      total += ipow(inner, static_cast<unsigned>(h - 2));
    }
  }
  return total;
}

BoundPair card_v_bounds(int m, int n, int k) {
  RunParams{k}.validate();
  if (m < 2) {
    throw DomainError("card_v_bounds: m must be >= 2");
  }
  BoundPair out{0, 0};
  for (int s = 3; s <= n - 2 * k; ++s) {
    const BigInt f = kbonacci(k - 1, s - 1);
    const Rational lower_base(f - 5, 2);
    const Rational upper_base(f - 3, 2);
    for (int h = 2; h <= m; ++h) {
      const auto e = static_cast<unsigned>(h - 2);
      out.lower += ipow(lower_base, e);
      out.upper += ipow(upper_base, e);
    }
  }
  return out;
}

BigInt card_d_matrices(int m, int n, DyckCountMode mode) {
  if (m < 2 || n < 0) {
    throw DomainError("card_d_matrices: requires m >= 2 and n >= 0");
  }
  BigInt total = 0;
  const int first_s = (mode == DyckCountMode::published) ? 2 : 3;
  for (int s = first_s; s <= n / 2; ++s) {
    const BigInt base = catalan(s - 1) - 2;
    for (int h = 2; h <= m; ++h) {
      const auto e = static_cast<unsigned>(mode == DyckCountMode::published ? h : h - 2);
      total += ipow(base, e);
    }
  }
  return total;
}

BigInt card_d_strings(int n) {
  if (n < 2) {
    throw DomainError("card_d_strings: n must be >= 2");
  }
  BigInt total = 0;
  for (int i = 0; i <= (n - 2) / 2; ++i) {
    total += catalan(i);
  }
  return total;
}

} // namespace nonoverlap
