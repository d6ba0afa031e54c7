#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivt/attractor.hpp"
#include "ivt/boolean.hpp"

namespace ivt {

// One line of a class table (tables 2-5). Text format, one record per line:
//
//   i,j,class,form-tag
//
// where class is I..IV and form-tag is an AttractorTag name, SENSITIVE, or
// B2_CYCLE{s1,s2,...} listing the cycle's states as 2-bit labels. Lines
// starting with '#' are comments; "# row N: ..." opens row N of the table.
struct ReferenceRow {
  int table = 0;
  int row = 0;
  PairMap pair{0, 0};
  AttractorClass cls = AttractorClass::I;
  std::string form;                // form-tag exactly as written
  std::optional<AttractorTag> tag; // empty for SENSITIVE
  bool sensitive = false;
  std::vector<PairState> states;   // B2_CYCLE{...} only
};

// Throws std::runtime_error naming the offending line.
std::vector<ReferenceRow> parse_reference_table(int table, std::string_view text);

enum class AlgebraicCharacter { basis, linear, isomorphism, bijective, none };
enum class DynamicsRemark { collatz, period1, period2, period3, period4, sensitive };

std::string_view to_string(AlgebraicCharacter c) noexcept;
std::string_view to_string(DynamicsRemark r) noexcept;

// Line format of the algebraic table: i,j,character,remark[,note]
struct AlgebraicReferenceRow {
  PairMap pair{0, 0};
  AlgebraicCharacter character = AlgebraicCharacter::none;
  DynamicsRemark remark = DynamicsRemark::collatz;
  std::string note;
};

std::vector<AlgebraicReferenceRow> parse_algebraic_reference(std::string_view text);

// Reference data compiled into the library from data/reference/.
// Valid table numbers are 2-6.
std::string_view embedded_reference_text(int table);
std::vector<ReferenceRow> embedded_class_tables(); // tables 2-5 combined
std::vector<AlgebraicReferenceRow> embedded_algebraic_table();

} // namespace ivt
