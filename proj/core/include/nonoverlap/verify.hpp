#pragma once

#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/counting.hpp"
#include "nonoverlap/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nonoverlap {

enum class FamilyTag { v, d };

/// Identifies one constructed family. `k` is only meaningful for the V family.
struct FamilyParams {
  FamilyTag family = FamilyTag::v;
  int k = 3;
  int m = 2;
  int n = 0;
};

/// A pair of elements (by index into the checked set) that overlap, with the
/// witness found on (elements[left], elements[right]). left <= right.
struct Violation {
  std::size_t left = 0;
  std::size_t right = 0;
  std::variant<StringOverlap, OverlapReport> witness;
};

/// Checks every unordered pair, self-pairs included. The result is sorted by
/// (left, right) and reports the longest overlap for each violating pair.
std::vector<Violation> verify_string_set(const StringSet& set);

/// Checks every ordered pair with matrix_overlap, self-pairs included. Both
/// orders of a pair must agree on whether they overlap; a disagreement is a
/// bug and raises std::logic_error. One Violation per unordered pair, sorted.
/// Refuses families larger than `max_size` with LimitExceeded.
std::vector<Violation> verify_matrix_family(const MatrixFamily& family, OverlapMode mode,
                                            std::size_t max_size = 20000);

/// Re-runs the primitive predicate on the cited pair.
bool revalidate(const Violation& v, const StringSet& set);
bool revalidate(const Violation& v, const MatrixFamily& family, OverlapMode mode);

/// Independent count of r_l by filtering all 2^l words. Refuses l > 24.
BigInt brute_r_oracle(int l, int k);

/// The words counted by brute_r_oracle, in lexicographic order.
StringSet brute_inner_strings(int l, int k);

template <typename Candidate>
struct WitnessOutcome {
  Candidate candidate;
  bool self_ok = false; ///< candidate does not overlap itself
  bool set_ok = false;  ///< family plus candidate is still non-overlapping
};

using StringWitness = WitnessOutcome<BitString>;
using MatrixWitness = WitnessOutcome<BinaryMatrix>;

/// 1^ceil(l/2) 0^floor(l/2)
BitString half_split_word(int l);

/// For l = 2k .. n, checks that adding 1^ceil(l/2) 0^floor(l/2) to the V
/// string family keeps it non-overlapping. Requires n >= 2k; the family is
/// empty while n < 2k+2.
std::vector<StringWitness> string_expansion_witnesses(int n, int k);

/// For s = 2k+3 .. n, checks that adding the 2-row matrix
/// (canonical_t(s); 1^ceil(s/2) 0^floor(s/2)) to the V matrix family keeps it
/// non-overlapping in strict mode. Requires m >= 2 and n >= 2k+3.
std::vector<MatrixWitness> matrix_expansion_witnesses(int m, int n, int k);

/// One (rows, cols) cell of a closed-form vs enumeration comparison.
struct CountCell {
  int rows = 0;
  int cols = 0;
  BigInt enumerated;
  BigInt formula;                  ///< V closed form, or the corrected Dyck form
  std::optional<BigInt> published; ///< Dyck family only
};

struct CountReport {
  FamilyParams params;
  std::vector<CountCell> cells;
  BigInt enumerated_total;
  BigInt formula_total;
  std::optional<BigInt> published_total;

  bool formula_agrees() const;
  bool published_agrees() const;
};

/// Enumerates the family cell by cell and lines each cell up against the
/// closed form. For the Dyck family cells cover widths 4 .. 2*floor(n/2) so
/// the printed formula's extra s = 2 column is visible.
CountReport reconcile_counts(const FamilyParams& params);

} // namespace nonoverlap
