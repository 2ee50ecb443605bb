#pragma once

#include "nonoverlap/bitstring.hpp"
#include "nonoverlap/matrix.hpp"
#include "nonoverlap/verify.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nonoverlap {

// Text forms:
//   string set  one word per line, newline-terminated
//   matrices    one row per line, matrices separated by a blank line
// JSON forms are newline-delimited, one element per line:
//   string set  "0110"
//   matrices    {"rows":["…","…"]}

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class InputKind { automatic, strings, matrices };

using ParsedFamily = std::variant<StringSet, MatrixFamily>;

std::string strings_to_text(const StringSet& set);
std::string strings_to_json(const StringSet& set);
std::string matrices_to_text(const MatrixFamily& family);
std::string matrices_to_json(const MatrixFamily& family);

/// Parses any of the four forms. With InputKind::automatic, a JSON object
/// line or a blank separator line selects matrices; otherwise strings.
/// Element order is preserved. Throws ParseError on malformed input.
ParsedFamily parse_family(std::string_view text, InputKind kind = InputKind::automatic);

std::string_view to_string(FamilyTag tag) noexcept;

/// {"family":…,"params":…,"mode":…,"violations":[…],"cells":[]}
/// `params` is omitted (null) when the elements came from a file.
std::string violations_to_json(std::string_view family_label,
                               const std::optional<FamilyParams>& params,
                               std::optional<OverlapMode> mode,
                               const std::vector<Violation>& violations);

/// Same envelope with the per-cell comparison filled in. Counts are decimal
/// strings so arbitrary-precision values survive.
std::string count_report_to_json(const CountReport& report, const BoundPair* bounds);

} // namespace nonoverlap
