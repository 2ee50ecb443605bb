// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any of them fails.

#include "cli.hpp"

#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/counting.hpp"
#include "nonoverlap/dyck.hpp"
#include "nonoverlap/matrix.hpp"
#include "nonoverlap/serialize.hpp"
#include "nonoverlap/verify.hpp"

#include "published_fixtures.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace nonoverlap;

namespace {

// Collects the reasons a criterion failed; an empty log means it passed.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      failures_.push_back(what);
    }
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds; // 0 means no budget
  std::function<void(Check&)> body;
};

std::set<std::string> as_strings(const StringSet& s) {
  std::set<std::string> out;
  for (const auto& w : s) {
    out.insert(w.str());
  }
  return out;
}

// ---------------------------------------------------------------------------

void reference_table(Check& c) {
  const RunParams k3{3};
  const StringSet family = gen_v_family(13, k3);
  c.expect(family.size() == 26, "family size " + std::to_string(family.size()) + " != 26");

  const std::vector<std::size_t> sizes{1, 2, 2, 4, 7, 10};
  for (int i = 8; i <= 13; ++i) {
    const std::size_t got = gen_v_level(i, k3).size();
    c.expect(got == sizes[static_cast<std::size_t>(i - 8)],
             "level " + std::to_string(i) + " has " + std::to_string(got) + " words");
  }

  for (const auto& [len, words] : fixtures::v13_k3_table()) {
    const std::set<std::string> generated = as_strings(gen_v_level(len, k3));
    const std::set<std::string> printed(words.begin(), words.end());
    if (len == 12) {
      std::size_t shared = 0;
      for (const auto& w : printed) {
        shared += generated.count(w);
      }
      c.expect(generated.size() == 7, "level 12 has " + std::to_string(generated.size()) +
                                          " distinct words");
      c.expect(words.size() == 7 && printed.size() == 6,
               "level 12 fixture is expected to repeat one line");
      c.expect(shared == 6, "level 12 shares " + std::to_string(shared) + " of 6 printed words");
      continue;
    }
    c.expect(generated == printed,
             "level " + std::to_string(len) + " differs from the reference table");
  }
}

void oracle_agreement(Check& c) {
  for (int k : {3, 4, 5}) {
    for (int l = 0; l <= 18; ++l) {
      const BigInt f = r_count(k, l);
      const BigInt o = brute_r_oracle(l, k);
      c.expect(f == o, "r(" + std::to_string(k) + "," + std::to_string(l) + ") = " + f.str() +
                           " but oracle gives " + o.str());
    }
  }
}

void string_families(Check& c) {
  for (int k : {3, 4, 5}) {
    for (int n = 2 * k + 2; n <= 16; ++n) {
      const StringSet family = gen_v_family(n, RunParams{k});
      c.expect(verify_string_set(family).empty(),
               "V n=" + std::to_string(n) + " k=" + std::to_string(k) + " overlaps");
      for (const auto& u : family) {
        for (const auto& v : family) {
          if (u != v && is_factor(u, v)) {
            c.expect(false, u.str() + " is a factor of " + v.str());
          }
        }
      }
    }
  }
  bool factor_seen = false;
  for (int n = 2; n <= 16; ++n) {
    const StringSet family = gen_d_family(n);
    c.expect(verify_string_set(family).empty(), "D n=" + std::to_string(n) + " overlaps");
    for (const auto& u : family) {
      for (const auto& v : family) {
        factor_seen = factor_seen || (u != v && is_factor(u, v));
      }
    }
  }
  const BitString u("11011000");
  const BitString v("1110110000");
  const StringSet d10 = gen_d_family(10);
  c.expect(std::binary_search(d10.begin(), d10.end(), u) &&
               std::binary_search(d10.begin(), d10.end(), v),
           "factor example words missing from D_10");
  c.expect(is_factor(u, v) && v == BitString("1") + u + BitString("0"),
           "11011000 is not an inner factor of 1110110000");
  c.expect(!strings_overlap(u, v), "factor example pair overlaps");
  c.expect(factor_seen, "no factor pair found in any D family");
}

void matrix_counts(Check& c) {
  for (int k : {3, 4}) {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 0; n <= 14; ++n) {
        const std::size_t enumerated = build_v_matrix_family(m, n, k).size();
        const BigInt formula = card_v_matrices(m, n, k);
        c.expect(BigInt(enumerated) == formula,
                 "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" +
                     std::to_string(k) + ": enumerated " + std::to_string(enumerated) +
                     ", formula " + formula.str());
      }
    }
  }
  c.expect(card_v_matrices(4, 13, 3) == 113, "card V(4,13,3) != 113");
  c.expect(build_v_matrix_family(4, 13, 3).size() == 113, "|V(4,13,3)| != 113");
}

void matrix_nonoverlap(Check& c) {
  const MatrixFamily v = build_v_matrix_family(4, 13, 3);
  const auto v_viol = verify_matrix_family(v, OverlapMode::strict);
  c.expect(v_viol.empty(), "V(4,13,3) strict: " + std::to_string(v_viol.size()) + " violations");

  const MatrixFamily d = build_d_matrix_family(4, 12);
  const auto d_viol = verify_matrix_family(d, OverlapMode::factor_tolerant);
  c.expect(d_viol.empty(),
           "D(4,12) factor-tolerant: " + std::to_string(d_viol.size()) + " violations");

  for (const auto& fx : fixtures::overlap_examples()) {
    const auto first = matrix_overlap(fx.left, fx.right, OverlapMode::strict);
    c.expect(first.has_value(), std::string(to_string(fx.kind)) + " fixture not detected");
    if (first) {
      c.expect(first->kind == fx.kind, std::string(to_string(fx.kind)) + " fixture reported as " +
                                           std::string(to_string(first->kind)));
    }
    const auto all = all_overlaps(fx.left, fx.right, OverlapMode::strict);
    const bool drawn = std::any_of(all.begin(), all.end(), [&](const OverlapReport& r) {
      return r.row_offset == fx.row_offset && r.col_offset == fx.col_offset && r.kind == fx.kind;
    });
    c.expect(drawn, std::string(to_string(fx.kind)) + " fixture: drawn placement not found");
  }

  const auto cd = matrix_overlap(fixtures::counterexample_c(), fixtures::counterexample_d(),
                                 OverlapMode::strict);
  c.expect(cd && cd->row_offset == 2 && cd->col_offset == 0, "C/D not detected at (2,0)");
}

void bounds(Check& c) {
  for (int k : {3, 4}) {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 0; n <= 14; ++n) {
        const Rational count(card_v_matrices(m, n, k));
        const BoundPair b = card_v_bounds(m, n, k);
        std::ostringstream os;
        os << "m=" << m << " n=" << n << " k=" << k << ": " << b.lower << " <= " << count
           << " <= " << b.upper << " fails";
        c.expect(b.lower <= count && count <= b.upper, os.str());
      }
    }
  }
  const BoundPair spot = card_v_bounds(4, 13, 3);
  c.expect(spot.lower == Rational(403, 4) && spot.upper == Rational(543, 4),
           "bounds for (4,13,3) are not 100.75 and 135.75");
}

void dyck_counts(Check& c) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 12; ++n) {
      const std::size_t enumerated = build_d_matrix_family(m, n).size();
      const BigInt corrected = card_d_matrices(m, n, DyckCountMode::corrected);
      c.expect(BigInt(enumerated) == corrected,
               "D m=" + std::to_string(m) + " n=" + std::to_string(n) + ": enumerated " +
                   std::to_string(enumerated) + ", corrected " + corrected.str());
    }
  }
  c.expect(build_d_matrix_family(3, 8).size() == 5, "|D(3,8)| != 5");
  const BigInt published = card_d_matrices(3, 8, DyckCountMode::published);
  c.expect(published == 36, "published form at (3,8) gives " + published.str() + ", not 36");
  c.expect(published != BigInt(build_d_matrix_family(3, 8).size()),
           "published form unexpectedly agrees at (3,8)");
}

void witnesses(Check& c) {
  const auto strings = string_expansion_witnesses(13, 3);
  c.expect(strings.size() == 8, std::to_string(strings.size()) + " string candidates, not 8");
  for (const auto& w : strings) {
    c.expect(w.self_ok && w.set_ok, "string witness " + w.candidate.str() + " fails");
  }
  const auto matrices = matrix_expansion_witnesses(4, 13, 3);
  c.expect(matrices.size() == 5, std::to_string(matrices.size()) + " matrix candidates, not 5");
  for (const auto& w : matrices) {
    c.expect(w.self_ok && w.set_ok,
             "matrix witness of width " + std::to_string(w.candidate.col_count()) + " fails");
  }
}

// -- CLI ---------------------------------------------------------------------

struct RunResult {
  int code;
  std::string out;
};

RunResult in_process(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str()};
}

// Runs the installed-style binary through the shell; stderr is discarded.
RunResult spawn(const std::string& args) {
  const std::string cmd = std::string("'") + NONOVERLAP_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return {-1, ""};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_contract(Check& c) {
  struct Grid {
    std::string what;
    std::vector<std::string> family;
    std::string mode;
  };
  std::vector<Grid> grids;
  for (int k : {3, 4, 5}) {
    for (int n = 2 * k + 2; n <= 16; ++n) {
      grids.push_back({"strings", {"--family", "v", "--k", std::to_string(k), "--n",
                                   std::to_string(n)}, "strict"});
    }
  }
  for (int n = 2; n <= 16; ++n) {
    grids.push_back({"strings", {"--family", "d", "--n", std::to_string(n)}, "strict"});
  }
  for (int k : {3, 4}) {
    for (int m = 2; m <= 5; ++m) {
      for (int n = 2 * k + 3; n <= 14; ++n) {
        grids.push_back({"matrices", {"--family", "v", "--k", std::to_string(k), "--m",
                                      std::to_string(m), "--n", std::to_string(n)}, "strict"});
      }
    }
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = 6; n <= 12; ++n) {
      grids.push_back({"matrices", {"--family", "d", "--m", std::to_string(m), "--n",
                                    std::to_string(n)}, "factor-tolerant"});
    }
  }

  std::size_t round_trips = 0;
  for (const Grid& g : grids) {
    for (const char* format : {"text", "json"}) {
      std::vector<std::string> gen{"gen", g.what};
      gen.insert(gen.end(), g.family.begin(), g.family.end());
      gen.insert(gen.end(), {"--format", format});
      const RunResult first = in_process(gen);
      std::string label;
      for (const auto& a : gen) {
        label += a + ' ';
      }
      c.expect(first.code == 0, label + "exits " + std::to_string(first.code));
      c.expect(in_process(gen).out == first.out, label + "is not deterministic");
      const RunResult back =
          in_process({"verify", "--input", "-", "--kind", g.what, "--mode", g.mode}, first.out);
      c.expect(back.code == 0, label + "| verify exits " + std::to_string(back.code));
      ++round_trips;
    }
  }
  c.expect(round_trips > 0, "no round trips ran");

  // The real executable: byte-identical reruns and the exit-code contract.
  const RunResult a = spawn("gen matrices --family v --k 3 --m 4 --n 13 --format json");
  const RunResult b = spawn("gen matrices --family v --k 3 --m 4 --n 13 --format json");
  c.expect(a.code == 0 && !a.out.empty() && a.out == b.out, "binary reruns differ");

  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "nonoverlap_acceptance_good.jsonl";
  const auto bad = dir / "nonoverlap_acceptance_cd.txt";
  std::ofstream(good, std::ios::binary) << a.out;
  std::ofstream(bad, std::ios::binary) << matrices_to_text(
      {fixtures::counterexample_c(), fixtures::counterexample_d()});

  const std::vector<std::pair<std::string, int>> expected_codes{
      {"verify --input '" + good.string() + "'", 0},
      {"verify --input '" + bad.string() + "'", 1},
      {"count --family d --m 3 --n 8 --compare", 0},
      {"witness --family v --k 3 --n 13", 0},
      {"gen strings --family v --k 2 --n 9", 2},
      {"gen strings --family q --n 9", 2},
      {"verify --input /nonexistent/path", 2},
      {"no-such-command", 2},
  };
  std::set<int> seen;
  for (const auto& [args, want] : expected_codes) {
    const int got = spawn(args).code;
    seen.insert(got);
    c.expect(got == want, "'" + args + "' exits " + std::to_string(got) + ", expected " +
                              std::to_string(want));
  }
  c.expect(seen == std::set<int>{0, 1, 2}, "exit codes outside {0,1,2} observed");
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "forbidden-run family for k=3, n=13 matches the published table", 1.0, reference_table},
      {2, "closed form for r agrees with brute-force oracle", 30.0, oracle_agreement},
      {3, "string families are non-overlapping; factor behaviour", 0.0, string_families},
      {4, "matrix family count equals enumeration", 60.0, matrix_counts},
      {5, "matrix families are non-overlapping; overlap kinds detected", 120.0,
       matrix_nonoverlap},
      {6, "bounds bracket the matrix count", 0.0, bounds},
      {7, "Dyck matrix count: corrected form vs published form", 0.0, dyck_counts},
      {8, "expansion witnesses keep families non-overlapping", 0.0, witnesses},
      {9, "CLI round trip, determinism and exit codes", 0.0, cli_contract},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds) {
      check.expect(false, "took " + std::to_string(secs) + " s, budget " +
                              std::to_string(cr.budget_seconds) + " s");
    }
    std::printf("[%s] criterion %d: %s (%.3f s)\n", check.ok() ? "PASS" : "FAIL", cr.id,
                cr.title, secs);
    for (const auto& f : check.failures()) {
      std::printf("       - %s\n", f.c_str());
    }
    failed += check.ok() ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
