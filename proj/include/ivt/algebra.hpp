#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivt/boolean.hpp"
#include "ivt/classifier.hpp"
#include "ivt/reference.hpp"

namespace ivt {

// Fixed-length vector over GF(2); bit k is coordinate k. Lengths up to 32.
class GF2Vector {
public:
  GF2Vector(std::size_t length, std::uint32_t bits);

  std::size_t size() const noexcept { return length_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool operator[](std::size_t k) const noexcept { return (bits_ >> k) & 1U; }

  // Throws std::invalid_argument on mismatched lengths.
  GF2Vector operator^(const GF2Vector &other) const;

  // Coordinates in order, e.g. "0110".
  std::string to_string() const;

  friend bool operator==(const GF2Vector &, const GF2Vector &) = default;

private:
  std::size_t length_;
  std::uint32_t bits_;
};

// Truth table in input order 00, 01, 10, 11.
GF2Vector fn_to_vector(int i);
// fn_to_vector(i) followed by fn_to_vector(j).
GF2Vector pair_to_vector(int i, int j);
GF2Vector state_to_vector(PairState s);

// Gaussian elimination. Throws std::invalid_argument on mixed lengths.
std::size_t rank_gf2(std::span<const GF2Vector> vectors);
// Size of the span, by enumerating every subset sum.
std::uint64_t span_size_bruteforce(std::span<const GF2Vector> vectors);

enum class SpaceName { b2, s, t };

std::string_view to_string(SpaceName name) noexcept;

struct SpaceDescriptor {
  SpaceName name = SpaceName::b2;
  std::size_t element_count = 0;
  std::size_t vector_length = 0;
};

SpaceDescriptor describe_space(SpaceName name) noexcept;

// Exhaustive check of the vector-space axioms over F2, with addition and
// scalar multiplication defined pointwise on the elements themselves (states,
// Boolean functions, pair maps) rather than on their encodings.
bool check_axioms(const SpaceDescriptor &space);

bool is_linear_fn(int i);
bool is_linear_pair(int i, int j);
bool is_bijective_pair(int i, int j);
bool is_isomorphism(int i, int j);

// Pointwise XOR of two pair maps.
PairMap pair_sum(PairMap a, PairMap b) noexcept;
// outer after inner.
PairMap pair_compose(PairMap outer, PairMap inner) noexcept;

struct ClosureFailure {
  PairMap left{0, 0};
  PairMap right{0, 0};
  std::string operation; // "sum" or "composition"
  PairMap result{0, 0};
};

struct ClosureReport {
  std::size_t sums_checked = 0;
  std::size_t compositions_checked = 0;
  std::vector<ClosureFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

ClosureReport closure_checks();

struct BasisAudit {
  SpaceName space = SpaceName::b2;
  std::vector<GF2Vector> candidates;
  std::vector<std::string> candidate_names;
  std::size_t rank_elimination = 0;
  std::uint64_t span_size = 0;
  std::size_t rank_from_span = 0; // log2(span_size)
  std::size_t claimed_dimension = 0;
  std::size_t space_dimension = 0;

  bool oracles_agree() const noexcept { return rank_elimination == rank_from_span; }
  bool independent() const noexcept { return rank_elimination == candidates.size(); }
  bool spans_space() const noexcept { return rank_elimination == space_dimension; }
  bool matches_claim() const noexcept { return rank_elimination == claimed_dimension; }
};

struct AlgebraReport {
  bool axioms_b2 = false;
  bool axioms_s = false;
  bool axioms_t = false;
  std::vector<int> linear_functions;
  std::vector<PairMap> linear_pairs;
  std::vector<PairMap> bijective_pairs;
  std::vector<PairMap> isomorphisms;
  std::vector<BasisAudit> bases; // B2, S, T in that order
  ClosureReport closure;
  // linear(i,j) <=> linear(i) and linear(j), over all 256 pairs.
  bool linear_iff_components = false;
  // linearity and bijectivity both survive (i,j) -> (j,i).
  bool swap_symmetric = false;
  // None of the listed T basis candidates is linear.
  bool basis_candidates_nonlinear = false;
};

AlgebraReport build_algebra_report();

// The candidate basis of T as listed: (a, b) for a, b in {1, 2, 4, 8}.
std::vector<PairMap> listed_t_basis();

AlgebraicCharacter algebraic_character(PairMap f);
DynamicsRemark dynamics_remark(const ClassRecord &record);

struct AlgebraicTableRow {
  PairMap pair{0, 0};
  AlgebraicCharacter character = AlgebraicCharacter::none;
  DynamicsRemark remark = DynamicsRemark::collatz;
  AttractorTag family = AttractorTag::generic;
  std::vector<WordPair> attractor; // cycle of the first witness
  AlgebraicCharacter paper_character = AlgebraicCharacter::none;
  DynamicsRemark paper_remark = DynamicsRemark::collatz;
  std::string paper_note;

  bool agrees() const noexcept {
    return character == paper_character && remark == paper_remark;
  }
};

// One row per pair of the embedded algebraic reference table, joined with the
// classification of that pair.
std::vector<AlgebraicTableRow> algebraic_table(const ClassificationReport &report);

} // namespace ivt
