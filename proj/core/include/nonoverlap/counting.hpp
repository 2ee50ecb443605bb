#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nonoverlap {

/// Exact signed integer. Cardinalities are non-negative; the published Dyck
/// formula can go negative, so the type is signed.
using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, used for the bound sums whose bases are halves.
using Rational = boost::multiprecision::cpp_rational;

/// Two-sided bound on the V matrix family size.
struct BoundPair {
  Rational lower;
  Rational upper;
};

/// Which closed form to evaluate for the Dyck matrix family.
enum class DyckCountMode {
  published, ///< exponent h, columns from s = 2, exactly as printed
  corrected, ///< exponent h-2, columns from s = 3; agrees with enumeration
};

/// b^e with 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned exponent);
Rational ipow(const Rational& base, unsigned exponent);

/// k-generalized Fibonacci number: 2^l for l <= k-1, otherwise the sum of
/// the previous k terms. Throws DomainError for k < 2 or l < 0.
BigInt kbonacci(int k, int l);

/// +1 when l mod k == 0, -1 when l mod k == 1, 0 otherwise.
int d_correction(int k, int l);

/// Number of length-l words starting with 0, ending with 1 and avoiding
/// runs of k equal symbols, from the k-bonacci closed form. Requires k >= 3.
BigInt r_count(int k, int l);

BigInt catalan(int s);

/// Closed-form size of the V matrix family with at most m rows and n columns.
BigInt card_v_matrices(int m, int n, int k);

/// Lower/upper sums obtained by replacing d with -1 and +1 in the r formula.
BoundPair card_v_bounds(int m, int n, int k);

/// Closed-form size of the Dyck matrix family.
BigInt card_d_matrices(int m, int n, DyckCountMode mode);

/// |gen_d_family(n)| as a sum of Catalan numbers.
BigInt card_d_strings(int n);

} // namespace nonoverlap
