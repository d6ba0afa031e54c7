#include "ivt/reference.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ivt {

namespace {

#include "reference_data.inc"

std::vector<std::string> split(const std::string &line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep))
    fields.push_back(field);
  return fields;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_line(int line_no, const std::string &line,
                           const std::string &why) {
  throw std::runtime_error("reference line " + std::to_string(line_no) +
                           ": " + why + ": '" + line + "'");
}

int parse_index(const std::string &text, int line_no, const std::string &line) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value < 0 || value >= BoolFn2::count)
      bad_line(line_no, line, "index out of range");
    return value;
  } catch (const std::logic_error &) {
    bad_line(line_no, line, "bad index");
  }
}

PairState parse_state(const std::string &label, int line_no,
                       const std::string &line) {
  if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
      (label[1] != '0' && label[1] != '1'))
    bad_line(line_no, line, "bad B2 state '" + label + "'");
  return PairState{label[0] == '1', label[1] == '1'};
}

template <class Row, class ParseFields>
std::vector<Row> parse_lines(std::string_view text, ParseFields parse_fields) {
  std::vector<Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty())
      continue;
    if (body.front() == '#') {
      int n = 0;
      if (std::sscanf(body.c_str(), "# row %d", &n) == 1)
        row = n;
      continue;
    }
    rows.push_back(parse_fields(split(body, ','), row, line_no, body));
  }
  return rows;
}

} // namespace

std::vector<ReferenceRow> parse_reference_table(int table, std::string_view text) {
  return parse_lines<ReferenceRow>(
      text, [table](const std::vector<std::string> &raw, int row, int line_no,
                    const std::string &line) {
        // B2_CYCLE{00,01} contains commas; glue the tail back together.
        if (raw.size() < 4)
          bad_line(line_no, line, "expected 4 fields");
        std::string form = raw[3];
        for (std::size_t k = 4; k < raw.size(); ++k)
          form += "," + raw[k];
        form = trim(form);

        ReferenceRow r;
        r.table = table;
        r.row = row;
        r.pair = PairMap(parse_index(trim(raw[0]), line_no, line),
                         parse_index(trim(raw[1]), line_no, line));
        const auto cls = parse_attractor_class(trim(raw[2]));
        if (!cls)
          bad_line(line_no, line, "class must be I, II, III or IV");
        r.cls = *cls;
        r.form = form;

        std::string name = form;
        if (const auto brace = form.find('{'); brace != std::string::npos) {
          if (form.back() != '}')
            bad_line(line_no, line, "unterminated state list");
          name = form.substr(0, brace);
          for (const std::string &label :
               split(form.substr(brace + 1, form.size() - brace - 2), ','))
            r.states.push_back(parse_state(trim(label), line_no, line));
          if (name != "B2_CYCLE")
            bad_line(line_no, line, "state list only allowed on B2_CYCLE");
        }
        if (name == "SENSITIVE") {
          r.sensitive = true;
        } else {
          r.tag = parse_attractor_tag(name);
          if (!r.tag)
            bad_line(line_no, line, "unknown form tag '" + name + "'");
        }
        return r;
      });
}

std::string_view to_string(AlgebraicCharacter c) noexcept {
  switch (c) {
  case AlgebraicCharacter::basis:
    return "BASIS";
  case AlgebraicCharacter::linear:
    return "LINEAR";
  case AlgebraicCharacter::isomorphism:
    return "ISOMORPHISM";
  case AlgebraicCharacter::bijective:
    return "BIJECTIVE";
  case AlgebraicCharacter::none:
    break;
  }
  return "NONE";
}

std::string_view to_string(DynamicsRemark r) noexcept {
  switch (r) {
  case DynamicsRemark::collatz:
    return "COLLATZ";
  case DynamicsRemark::period1:
    return "PERIOD1";
  case DynamicsRemark::period2:
    return "PERIOD2";
  case DynamicsRemark::period3:
    return "PERIOD3";
  case DynamicsRemark::period4:
    return "PERIOD4";
  case DynamicsRemark::sensitive:
    break;
  }
  return "SENSITIVE";
}

std::vector<AlgebraicReferenceRow> parse_algebraic_reference(std::string_view text) {
  return parse_lines<AlgebraicReferenceRow>(
      text, [](const std::vector<std::string> &raw, int, int line_no,
               const std::string &line) {
        if (raw.size() < 4)
          bad_line(line_no, line, "expected at least 4 fields");
        AlgebraicReferenceRow r;
        r.pair = PairMap(parse_index(trim(raw[0]), line_no, line),
                         parse_index(trim(raw[1]), line_no, line));
        const std::string character = trim(raw[2]);
        const std::string remark = trim(raw[3]);
        bool found = false;
        for (auto c : {AlgebraicCharacter::basis, AlgebraicCharacter::linear,
                       AlgebraicCharacter::isomorphism,
                       AlgebraicCharacter::bijective}) {
          if (to_string(c) == character) {
            r.character = c;
            found = true;
          }
        }
        if (!found)
          bad_line(line_no, line, "unknown character '" + character + "'");
        found = false;
        for (auto k : {DynamicsRemark::collatz, DynamicsRemark::period1,
                       DynamicsRemark::period2, DynamicsRemark::period3,
                       DynamicsRemark::period4, DynamicsRemark::sensitive}) {
          if (to_string(k) == remark) {
            r.remark = k;
            found = true;
          }
        }
        if (!found)
          bad_line(line_no, line, "unknown remark '" + remark + "'");
        for (std::size_t k = 4; k < raw.size(); ++k)
          r.note += (k > 4 ? "," : "") + raw[k];
        r.note = trim(r.note);
        return r;
      });
}

std::string_view embedded_reference_text(int table) {
  switch (table) {
  case 2:
    return reference_table2;
  case 3:
    return reference_table3;
  case 4:
    return reference_table4;
  case 5:
    return reference_table5;
  case 6:
    return reference_table6;
  default:
    throw std::out_of_range("no reference table " + std::to_string(table));
  }
}

std::vector<ReferenceRow> embedded_class_tables() {
  std::vector<ReferenceRow> rows;
  for (int table = 2; table <= 5; ++table) {
    auto part = parse_reference_table(table, embedded_reference_text(table));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<AlgebraicReferenceRow> embedded_algebraic_table() {
  return parse_algebraic_reference(embedded_reference_text(6));
}

} // namespace ivt
