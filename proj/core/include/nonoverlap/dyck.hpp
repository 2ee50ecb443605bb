#pragma once

#include "nonoverlap/bitstring.hpp"

namespace nonoverlap {

// Dyck words use 1 for an up-step and 0 for a down-step.

/// Balanced and never below the start. The empty word qualifies.
bool is_dyck(const BitString& w) noexcept;

/// All Dyck words of length 2*semilength, lexicographically sorted.
StringSet gen_dyck(int semilength);

/// { 1 w 0 : w Dyck, |w| = 0, 2, ..., 2*floor((n-2)/2) }, sorted. Requires n >= 2.
StringSet gen_d_family(int n);

/// First row of the Dyck matrix family at even width 2s, s >= 3:
/// 1 (10)^(s-1) 0.
BitString canonical_t_dyck(int cols);

/// Last row of the Dyck matrix family at even width 2s, s >= 3: 1^s 0^s.
BitString canonical_b_dyck(int cols);

} // namespace nonoverlap
