#include "nonoverlap/verify.hpp"

#include "nonoverlap/dyck.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace nonoverlap {

std::vector<Violation> verify_string_set(const StringSet& set) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      if (auto w = longest_overlap(set[i], set[j])) {
        out.push_back(Violation{i, j, *w});
      }
    }
  }
  return out;
}

namespace {

// Runs body(i) for i in [0, count) across hardware threads with dynamic
// scheduling. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      next.store(count);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) {
      pool.emplace_back(work);
    }
    work();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

} // namespace

std::vector<Violation> verify_matrix_family(const MatrixFamily& family, OverlapMode mode,
                                            std::size_t max_size) {
  if (family.size() > max_size) {
    throw LimitExceeded("verify_matrix_family: " + std::to_string(family.size()) +
                        " matrices exceeds the limit of " + std::to_string(max_size));
  }
  std::vector<std::vector<Violation>> per_row(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      const auto forward = matrix_overlap(family[i], family[j], mode);
      if (i != j) {
        const auto backward = matrix_overlap(family[j], family[i], mode);
        if (forward.has_value() != backward.has_value()) {
          throw std::logic_error("matrix_overlap is not symmetric on pair (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
        }
      }
      if (forward) {
        per_row[i].push_back(Violation{i, j, *forward});
      }
    }
  });
  std::vector<Violation> out;
  for (auto& row : per_row) {
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

bool revalidate(const Violation& v, const StringSet& set) {
  const auto* w = std::get_if<StringOverlap>(&v.witness);
  if (w == nullptr || v.left >= set.size() || v.right >= set.size()) {
    return false;
  }
  return overlap_holds(set[v.left], set[v.right], *w);
}

bool revalidate(const Violation& v, const MatrixFamily& family, OverlapMode mode) {
  const auto* w = std::get_if<OverlapReport>(&v.witness);
  if (w == nullptr || v.left >= family.size() || v.right >= family.size()) {
    return false;
  }
  const BinaryMatrix& a = family[v.left];
  const BinaryMatrix& b = family[v.right];
  if (v.left == v.right && w->row_offset == 0 && w->col_offset == 0) {
    return false;
  }
  const OverlapKind kind = classify_placement(a, b, w->row_offset, w->col_offset);
  if (mode == OverlapMode::factor_tolerant && kind == OverlapKind::containment) {
    return false;
  }
  return kind == w->kind && placement_matches(a, b, w->row_offset, w->col_offset);
}

// ---------------------------------------------------------------------------

StringSet brute_inner_strings(int l, int k) {
  if (l < 0) {
    throw DomainError("brute_inner_strings: negative length");
  }
  if (l > 24) {
    throw LimitExceeded("brute_inner_strings: length " + std::to_string(l) +
                        " exceeds the exhaustive limit of 24");
  }
  const std::string zeros(static_cast<std::size_t>(k), '0');
  const std::string ones(static_cast<std::size_t>(k), '1');
  StringSet out;
  const std::uint64_t total = std::uint64_t{1} << l;
  std::string word(static_cast<std::size_t>(l), '0');
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // most significant bit first, so ascending masks are lexicographic
    for (int bit = 0; bit < l; ++bit) {
      word[static_cast<std::size_t>(bit)] = ((mask >> (l - 1 - bit)) & 1U) ? '1' : '0';
    }
    if (l > 0 && (word.front() != '0' || word.back() != '1')) {
      continue;
    }
    if (word.find(zeros) != std::string::npos || word.find(ones) != std::string::npos) {
      continue;
    }
    out.emplace_back(word);
  }
  return out;
}

BigInt brute_r_oracle(int l, int k) {
  return BigInt(brute_inner_strings(l, k).size());
}

// ---------------------------------------------------------------------------

BitString half_split_word(int l) {
  if (l < 1) {
    throw DomainError("half_split_word: length must be positive");
  }
  const auto ones = static_cast<std::size_t>((l + 1) / 2);
  const auto zeros = static_cast<std::size_t>(l / 2);
  return BitString::repeat('1', ones) + BitString::repeat('0', zeros);
}

std::vector<StringWitness> string_expansion_witnesses(int n, int k) {
  const RunParams params{k};
  params.validate();
  if (n < 2 * k) {
    throw DomainError("string_expansion_witnesses: n = " + std::to_string(n) +
                      " is below 2k = " + std::to_string(2 * k));
  }
  const StringSet family = (n >= 2 * k + 2) ? gen_v_family(n, params) : StringSet{};
  std::vector<StringWitness> out;
  for (int l = 2 * k; l <= n; ++l) {
    StringWitness w{half_split_word(l), false, false};
    w.self_ok = is_bifix_free(w.candidate);
    if (w.self_ok) {
      StringSet extended = family;
      extended.push_back(w.candidate);
      w.set_ok = verify_string_set(extended).empty();
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<MatrixWitness> matrix_expansion_witnesses(int m, int n, int k) {
  const RunParams params{k};
  params.validate();
  if (m < 2) {
    throw DomainError("matrix_expansion_witnesses: m must be >= 2");
  }
  if (n < 2 * k + 3) {
    throw DomainError("matrix_expansion_witnesses: n = " + std::to_string(n) +
                      " leaves no width >= 2k+3");
  }
  const MatrixFamily family = build_v_matrix_family(m, n, k);
  const bool family_clean = verify_matrix_family(family, OverlapMode::strict).empty();
  std::vector<MatrixWitness> out;
  for (int s = 2 * k + 3; s <= n; ++s) {
    MatrixWitness w{BinaryMatrix({canonical_t(s, params), half_split_word(s)}), false, false};
    w.self_ok = !matrix_overlap(w.candidate, w.candidate, OverlapMode::strict).has_value();
    if (w.self_ok) {
      // the family's own pairs were checked once above
      bool clean = family_clean;
      for (const BinaryMatrix& member : family) {
        if (member == w.candidate ||
            matrix_overlap(member, w.candidate, OverlapMode::strict).has_value() ||
            matrix_overlap(w.candidate, member, OverlapMode::strict).has_value()) {
          clean = false;
          break;
        }
      }
      w.set_ok = clean;
    }
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool CountReport::formula_agrees() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const CountCell& c) { return c.enumerated == c.formula; });
}

bool CountReport::published_agrees() const {
  return std::all_of(cells.begin(), cells.end(), [](const CountCell& c) {
    return !c.published || *c.published == c.enumerated;
  });
}

CountReport reconcile_counts(const FamilyParams& params) {
  if (params.m < 2) {
    throw DomainError("reconcile_counts: m must be >= 2");
  }
  CountReport report;
  report.params = params;
  if (params.family == FamilyTag::v) {
    const int k = params.k;
    RunParams{k}.validate();
    for (int s = 2 * k + 3; s <= params.n; ++s) {
      const BigInt base = r_count(k, s - 2 * k) - 2;
      for (int h = 2; h <= params.m; ++h) {
        CountCell cell;
        cell.rows = h;
        cell.cols = s;
        cell.enumerated = BigInt(build_m(h, s, k).size());
        cell.formula = ipow(base, static_cast<unsigned>(h - 2));
        report.enumerated_total += cell.enumerated;
        report.formula_total += cell.formula;
        report.cells.push_back(std::move(cell));
      }
    }
    return report;
  }

  report.published_total = BigInt(0);
  for (int s = 2; s <= params.n / 2; ++s) {
    const BigInt base = catalan(s - 1) - 2;
    for (int h = 2; h <= params.m; ++h) {
      CountCell cell;
      cell.rows = h;
      cell.cols = 2 * s;
      if (s >= 3) {
        cell.enumerated = BigInt(build_m_dyck(h, 2 * s).size());
        cell.formula = ipow(base, static_cast<unsigned>(h - 2));
      }
      cell.published = ipow(base, static_cast<unsigned>(h));
      report.enumerated_total += cell.enumerated;
      report.formula_total += cell.formula;
      *report.published_total += *cell.published;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

} // namespace nonoverlap
