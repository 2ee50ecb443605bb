#include "nonoverlap/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace nonoverlap {

using nlohmann::json;

std::string strings_to_text(const StringSet& set) {
  std::string out;
  for (const BitString& s : set) {
    out += s.str();
    out += '\n';
  }
  return out;
}

std::string strings_to_json(const StringSet& set) {
  std::string out;
  for (const BitString& s : set) {
    out += json(s.str()).dump();
    out += '\n';
  }
  return out;
}

std::string matrices_to_text(const MatrixFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) {
      out += '\n';
    }
    for (const BitString& row : family[i].rows()) {
      out += row.str();
      out += '\n';
    }
  }
  return out;
}

std::string matrices_to_json(const MatrixFamily& family) {
  std::string out;
  for (const BinaryMatrix& m : family) {
    json rows = json::array();
    for (const BitString& row : m.rows()) {
      rows.push_back(row.str());
    }
    out += json{{"rows", std::move(rows)}}.dump();
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

BitString parse_word(std::string_view text, std::size_t line_no) {
  try {
    return BitString(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
}

BinaryMatrix make_matrix(std::vector<BitString> rows, std::size_t line_no) {
  try {
    return BinaryMatrix(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError("matrix ending at line " + std::to_string(line_no) + ": " + e.what());
  }
}

ParsedFamily parse_json_lines(const std::vector<std::string_view>& lines, InputKind kind) {
  StringSet strings;
  MatrixFamily matrices;
  std::optional<bool> is_matrix;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty()) {
      continue;
    }
    json value;
    try {
      value = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("line " + std::to_string(i + 1) + ": invalid JSON: " + e.what());
    }
    const bool object = value.is_object();
    if (is_matrix && *is_matrix != object) {
      throw ParseError("line " + std::to_string(i + 1) + ": mixes strings and matrices");
    }
    is_matrix = object;
    if (object) {
      if (!value.contains("rows") || !value["rows"].is_array()) {
        throw ParseError("line " + std::to_string(i + 1) + ": matrix object lacks a \"rows\" array");
      }
      std::vector<BitString> rows;
      for (const json& row : value["rows"]) {
        if (!row.is_string()) {
          throw ParseError("line " + std::to_string(i + 1) + ": row is not a string");
        }
        rows.push_back(parse_word(row.get<std::string>(), i + 1));
      }
      matrices.push_back(make_matrix(std::move(rows), i + 1));
    } else if (value.is_string()) {
      strings.push_back(parse_word(value.get<std::string>(), i + 1));
    } else {
      throw ParseError("line " + std::to_string(i + 1) + ": expected a string or an object");
    }
  }
  const bool want_matrix =
      kind == InputKind::matrices || (kind == InputKind::automatic && is_matrix.value_or(false));
  if (is_matrix && *is_matrix != want_matrix) {
    throw ParseError(want_matrix ? "expected matrix objects" : "expected JSON strings");
  }
  if (want_matrix) {
    return matrices;
  }
  return strings;
}

} // namespace

ParsedFamily parse_family(std::string_view text, InputKind kind) {
  const std::vector<std::string_view> lines = split_lines(text);

  std::size_t first = 0;
  while (first < lines.size() && trim(lines[first]).empty()) {
    ++first;
  }
  if (first < lines.size()) {
    const char lead = trim(lines[first]).front();
    if (lead == '{' || lead == '"') {
      return parse_json_lines(lines, kind);
    }
  }

  std::size_t last = lines.size();
  while (last > first && trim(lines[last - 1]).empty()) {
    --last;
  }
  bool has_separator = false;
  for (std::size_t i = first; i < last; ++i) {
    has_separator = has_separator || trim(lines[i]).empty();
  }
  const bool as_matrices =
      kind == InputKind::matrices || (kind == InputKind::automatic && has_separator);

  if (!as_matrices) {
    if (has_separator) {
      throw ParseError("blank line inside a string set");
    }
    StringSet out;
    for (std::size_t i = first; i < last; ++i) {
      out.push_back(parse_word(trim(lines[i]), i + 1));
    }
    return out;
  }

  MatrixFamily out;
  std::vector<BitString> block;
  for (std::size_t i = first; i <= last; ++i) {
    const bool at_end = (i == last);
    const std::string_view line = at_end ? std::string_view{} : trim(lines[i]);
    if (line.empty()) {
      if (!block.empty()) {
        out.push_back(make_matrix(std::move(block), i));
        block.clear();
      }
      continue;
    }
    block.push_back(parse_word(line, i + 1));
  }
  return out;
}

std::string_view to_string(FamilyTag tag) noexcept {
  return tag == FamilyTag::v ? "V" : "D";
}

namespace {

json params_json(const std::optional<FamilyParams>& params) {
  if (!params) {
    return nullptr;
  }
  json p = {{"m", params->m}, {"n", params->n}};
  if (params->family == FamilyTag::v) {
    p["k"] = params->k;
  }
  return p;
}

json witness_json(const Violation& v) {
  if (const auto* s = std::get_if<StringOverlap>(&v.witness)) {
    return {{"overlap_length", s->length},
            {"direction", s->direction == OverlapDirection::left_suffix_right_prefix
                              ? "left_suffix_right_prefix"
                              : "left_prefix_right_suffix"}};
  }
  const auto& r = std::get<OverlapReport>(v.witness);
  return {{"kind", std::string(to_string(r.kind))},
          {"row_offset", r.row_offset},
          {"col_offset", r.col_offset},
          {"region_rows", r.region_rows},
          {"region_cols", r.region_cols}};
}

std::string decimal(const BigInt& x) {
  return x.str();
}

std::string decimal(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

} // namespace

std::string violations_to_json(std::string_view family_label,
                               const std::optional<FamilyParams>& params,
                               std::optional<OverlapMode> mode,
                               const std::vector<Violation>& violations) {
  json list = json::array();
  for (const Violation& v : violations) {
    list.push_back({{"left", v.left}, {"right", v.right}, {"witness", witness_json(v)}});
  }
  json doc = {{"family", std::string(family_label)},
              {"params", params_json(params)},
              {"mode", mode ? json(std::string(to_string(*mode))) : json(nullptr)},
              {"violations", std::move(list)},
              {"cells", json::array()}};
  return doc.dump() + "\n";
}

std::string count_report_to_json(const CountReport& report, const BoundPair* bounds) {
  json cells = json::array();
  for (const CountCell& c : report.cells) {
    json cell = {{"rows", c.rows},
                 {"cols", c.cols},
                 {"enumerated", decimal(c.enumerated)},
                 {"formula", decimal(c.formula)},
                 {"agrees", c.enumerated == c.formula}};
    if (c.published) {
      cell["published"] = decimal(*c.published);
    }
    cells.push_back(std::move(cell));
  }
  json doc = {{"family", std::string(to_string(report.params.family))},
              {"params", params_json(report.params)},
              {"violations", json::array()},
              {"cells", std::move(cells)},
              {"enumerated_total", decimal(report.enumerated_total)},
              {"formula_total", decimal(report.formula_total)},
              {"formula_agrees", report.formula_agrees()}};
  if (report.published_total) {
    doc["published_total"] = decimal(*report.published_total);
    doc["published_agrees"] = report.published_agrees();
  }
  if (bounds != nullptr) {
    doc["bounds"] = {{"lower", decimal(bounds->lower)}, {"upper", decimal(bounds->upper)}};
  }
  return doc.dump() + "\n";
}

} // namespace nonoverlap
