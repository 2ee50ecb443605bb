#include "cli.hpp"

#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/counting.hpp"
#include "nonoverlap/dyck.hpp"
#include "nonoverlap/matrix.hpp"
#include "nonoverlap/serialize.hpp"
#include "nonoverlap/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace nonoverlap::cli {
namespace {

enum class OutputFormat { text, json };

// Options shared by the subcommands that name a built-in family.
struct FamilyOptions {
  std::string family_name = "v";
  FamilyTag family = FamilyTag::v;
  int k = 3;
  std::optional<int> m;
  std::optional<int> n;

  FamilyParams params() const { return FamilyParams{family, k, m.value_or(2), n.value_or(0)}; }
};

OutputFormat format_from(const std::string& name) {
  return name == "json" ? OutputFormat::json : OutputFormat::text;
}

void add_family_options(CLI::App* cmd, FamilyOptions& opts, bool family_required) {
  auto* family =
      cmd->add_option("--family", opts.family_name, "Family: v (forbidden runs) or d (Dyck)")
          ->check(CLI::IsMember({"v", "d"}, CLI::ignore_case))
          ->each([&opts](const std::string& name) {
            opts.family = (name == "d" || name == "D") ? FamilyTag::d : FamilyTag::v;
          });
  if (family_required) {
    family->required();
  }
  cmd->add_option("--k", opts.k, "Forbidden run length for the v family (>= 3)")
      ->capture_default_str();
  cmd->add_option("--m", opts.m, "Maximum number of rows");
  cmd->add_option("--n", opts.n, "Maximum length / number of columns");
}

int require(const std::optional<int>& value, const char* flag) {
  if (!value) {
    throw CLI::RequiredError(flag);
  }
  return *value;
}

std::string params_text(const FamilyParams& p) {
  std::ostringstream os;
  os << "family " << to_string(p.family);
  if (p.family == FamilyTag::v) {
    os << " k=" << p.k;
  }
  os << " m=" << p.m << " n=" << p.n;
  return os.str();
}

std::string matrix_inline(const BinaryMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    if (i > 0) {
      out += '/';
    }
    out += m.row(i).str();
  }
  return out;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string what;
  FamilyOptions family;
  std::string format = "text";
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const int n = require(args.family.n, "--n");
  if (args.what == "strings") {
    const StringSet set = args.family.family == FamilyTag::v
                              ? gen_v_family(n, RunParams{args.family.k})
                              : gen_d_family(n);
    out << (format_from(args.format) == OutputFormat::json ? strings_to_json(set) : strings_to_text(set));
    return exit_ok;
  }
  const int m = require(args.family.m, "--m");
  const MatrixFamily family = args.family.family == FamilyTag::v
                                  ? build_v_matrix_family(m, n, args.family.k)
                                  : build_d_matrix_family(m, n);
  out << (format_from(args.format) == OutputFormat::json ? matrices_to_json(family)
                                            : matrices_to_text(family));
  return exit_ok;
}

// ---------------------------------------------------------------------------

struct CountArgs {
  FamilyOptions family;
  bool compare = false;
  std::string format = "text";
};

int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err) {
  FamilyParams p = args.family.params();
  p.m = require(args.family.m, "--m");
  p.n = require(args.family.n, "--n");

  std::optional<BoundPair> bounds;
  BigInt closed;
  std::optional<BigInt> published;
  if (p.family == FamilyTag::v) {
    closed = card_v_matrices(p.m, p.n, p.k);
    bounds = card_v_bounds(p.m, p.n, p.k);
  } else {
    closed = card_d_matrices(p.m, p.n, DyckCountMode::corrected);
    published = card_d_matrices(p.m, p.n, DyckCountMode::published);
  }

  if (!args.compare) {
    if (format_from(args.format) == OutputFormat::json) {
      CountReport bare;
      bare.params = p;
      bare.formula_total = closed;
      bare.enumerated_total = closed;
      bare.published_total = published;
      out << count_report_to_json(bare, bounds ? &*bounds : nullptr);
      return exit_ok;
    }
    out << params_text(p) << '\n' << "count " << closed << '\n';
    if (bounds) {
      out << "bounds " << bounds->lower << " <= count <= " << bounds->upper << '\n';
    }
    if (published) {
      out << "published_formula " << *published << '\n';
    }
    return exit_ok;
  }

  const CountReport report = reconcile_counts(p);
  if (format_from(args.format) == OutputFormat::json) {
    out << count_report_to_json(report, bounds ? &*bounds : nullptr);
  } else {
    out << params_text(p) << '\n';
    for (const CountCell& c : report.cells) {
      out << "rows=" << c.rows << " cols=" << c.cols << " enumerated=" << c.enumerated
          << " formula=" << c.formula;
      if (c.published) {
        out << " published=" << *c.published;
      }
      out << ' ' << (c.enumerated == c.formula ? "ok" : "MISMATCH") << '\n';
    }
    out << "count " << report.formula_total << '\n'
        << "enumerated " << report.enumerated_total << '\n';
    if (bounds) {
      out << "bounds " << bounds->lower << " <= count <= " << bounds->upper << '\n';
    }
    if (report.published_total) {
      out << "published_formula " << *report.published_total << '\n';
    }
    out << (report.formula_agrees() ? "all cells agree" : "closed form DISAGREES with enumeration")
        << '\n';
  }
  if (report.published_total && !report.published_agrees()) {
    err << "warning: the published Dyck formula gives " << *report.published_total
        << " but enumeration gives " << report.enumerated_total
        << "; the corrected form is authoritative\n";
  }
  if (bounds && (Rational(report.enumerated_total) < bounds->lower ||
                 Rational(report.enumerated_total) > bounds->upper)) {
    err << "warning: enumerated count " << report.enumerated_total << " lies outside the bounds ["
        << bounds->lower << ", " << bounds->upper << "]\n";
  }
  return report.formula_agrees() ? exit_ok : exit_violation;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::optional<std::string> input;
  std::string kind = "auto";
  FamilyOptions family;
  bool family_given = false;
  std::string mode = "strict";
};

std::string read_all(std::istream& is) {
  return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out) {
  ParsedFamily elements;
  std::string label = "input";
  std::optional<FamilyParams> params;

  if (args.input) {
    if (args.family_given) {
      throw CLI::ValidationError("--input", "cannot be combined with --family");
    }
    std::string text;
    if (*args.input == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(*args.input, std::ios::binary);
      if (!file) {
        throw ParseError("cannot open " + *args.input);
      }
      text = read_all(file);
    }
    const InputKind kind = args.kind == "strings"    ? InputKind::strings
                           : args.kind == "matrices" ? InputKind::matrices
                                                     : InputKind::automatic;
    elements = parse_family(text, kind);
  } else {
    if (!args.family_given) {
      throw CLI::ValidationError("verify", "either --input or --family is required");
    }
    FamilyParams p = args.family.params();
    p.n = require(args.family.n, "--n");
    const bool matrices =
        args.kind == "matrices" || (args.kind == "auto" && args.family.m.has_value());
    if (matrices) {
      p.m = require(args.family.m, "--m");
      elements = p.family == FamilyTag::v ? build_v_matrix_family(p.m, p.n, p.k)
                                          : build_d_matrix_family(p.m, p.n);
    } else {
      elements = p.family == FamilyTag::v ? gen_v_family(p.n, RunParams{p.k}) : gen_d_family(p.n);
    }
    label = std::string(to_string(p.family));
    params = p;
  }

  std::vector<Violation> violations;
  std::optional<OverlapMode> mode;
  if (const auto* set = std::get_if<StringSet>(&elements)) {
    violations = verify_string_set(*set);
  } else {
    mode = args.mode == "factor-tolerant" ? OverlapMode::factor_tolerant : OverlapMode::strict;
    violations = verify_matrix_family(std::get<MatrixFamily>(elements), *mode);
  }
  if (violations.empty()) {
    out << "OK\n";
    return exit_ok;
  }
  out << violations_to_json(label, params, mode, violations);
  return exit_violation;
}

// ---------------------------------------------------------------------------

struct WitnessArgs {
  FamilyOptions family;
  std::string kind = "string";
};

int cmd_witness(const WitnessArgs& args, std::ostream& out) {
  if (args.family.family != FamilyTag::v) {
    throw CLI::ValidationError("--family", "expansion witnesses are defined for the v family");
  }
  const int n = require(args.family.n, "--n");
  const int k = args.family.k;
  std::size_t passed = 0;
  std::size_t total = 0;
  if (args.kind == "string") {
    for (const StringWitness& w : string_expansion_witnesses(n, k)) {
      ++total;
      passed += w.set_ok ? 1 : 0;
      out << w.candidate.str() << " self_ok=" << (w.self_ok ? "yes" : "no")
          << " set_ok=" << (w.set_ok ? "yes" : "no") << ' ' << (w.set_ok ? "PASS" : "FAIL")
          << '\n';
    }
  } else {
    const int m = require(args.family.m, "--m");
    for (const MatrixWitness& w : matrix_expansion_witnesses(m, n, k)) {
      ++total;
      passed += w.set_ok ? 1 : 0;
      out << matrix_inline(w.candidate) << " self_ok=" << (w.self_ok ? "yes" : "no")
          << " set_ok=" << (w.set_ok ? "yes" : "no") << ' ' << (w.set_ok ? "PASS" : "FAIL")
          << '\n';
    }
  }
  out << passed << '/' << total << " witnesses keep the family non-overlapping\n";
  return passed == total ? exit_ok : exit_violation;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Non-overlapping binary string and matrix families"};
  app.name("nonoverlap");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family to standard output");
  gen_cmd->add_option("what", gen.what, "strings or matrices")
      ->required()
      ->check(CLI::IsMember({"strings", "matrices"}));
  add_family_options(gen_cmd, gen.family, true);
  gen_cmd->add_option("--format", gen.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Closed-form size of a matrix family");
  add_family_options(count_cmd, count.family, true);
  count_cmd->add_flag("--compare", count.compare, "Also enumerate and compare cell by cell");
  count_cmd->add_option("--format", count.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a set is non-overlapping");
  verify_cmd->add_option("--input", verify.input, "File to check, or - for standard input");
  verify_cmd->add_option("--kind", verify.kind, "auto, strings or matrices")
      ->check(CLI::IsMember({"auto", "strings", "matrices"}))
      ->capture_default_str();
  add_family_options(verify_cmd, verify.family, false);
  verify_cmd->add_option("--mode", verify.mode, "strict or factor-tolerant")
      ->check(CLI::IsMember({"strict", "factor-tolerant"}))
      ->capture_default_str();

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Check the non-expandability witnesses");
  add_family_options(witness_cmd, witness.family, true);
  witness_cmd->add_option("--kind", witness.kind, "string or matrix")
      ->check(CLI::IsMember({"string", "matrix"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    verify.family_given = verify_cmd->count("--family") > 0;

    if (gen_cmd->parsed()) {
      return cmd_gen(gen, out);
    }
    if (count_cmd->parsed()) {
      return cmd_count(count, out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify, in, out);
    }
    return cmd_witness(witness, out);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage;
  } catch (const std::exception& e) {
    // DomainError, ParseError, LimitExceeded, invalid_argument
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

} // namespace nonoverlap::cli
