#include "ivt/algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace ivt {

GF2Vector::GF2Vector(std::size_t length, std::uint32_t bits)
    : length_(length), bits_(bits) {
  if (length == 0 || length > 32)
    throw std::invalid_argument("GF2Vector length must be in [1, 32]");
  if (length < 32 && (bits >> length) != 0)
    throw std::invalid_argument("GF2Vector bits exceed its length");
}

GF2Vector GF2Vector::operator^(const GF2Vector &other) const {
  if (other.length_ != length_)
    throw std::invalid_argument("GF2Vector length mismatch");
  return GF2Vector(length_, bits_ ^ other.bits_);
}

std::string GF2Vector::to_string() const {
  std::string text;
  for (std::size_t k = 0; k < length_; ++k)
    text += (*this)[k] ? '1' : '0';
  return text;
}

GF2Vector fn_to_vector(int i) {
  return GF2Vector(4, static_cast<std::uint32_t>(BoolFn2(i).index()));
}

GF2Vector pair_to_vector(int i, int j) {
  const PairMap f(i, j);
  return GF2Vector(8, static_cast<std::uint32_t>(f.i() | (f.j() << 4)));
}

GF2Vector state_to_vector(PairState s) {
  return GF2Vector(2, static_cast<std::uint32_t>(int(s.x) | (int(s.y) << 1)));
}

namespace {

void require_same_length(std::span<const GF2Vector> vectors) {
  for (const auto &v : vectors)
    if (v.size() != vectors.front().size())
      throw std::invalid_argument("rank_gf2: vectors of mixed length");
}

} // namespace

std::size_t rank_gf2(std::span<const GF2Vector> vectors) {
  if (vectors.empty())
    return 0;
  require_same_length(vectors);
  // pivots[b] holds a reduced row whose highest set bit is b.
  std::array<std::uint32_t, 32> pivots{};
  std::size_t rank = 0;
  for (const auto &v : vectors) {
    std::uint32_t row = v.bits();
    while (row != 0) {
      const int top = std::bit_width(row) - 1;
      if (pivots[top] == 0) {
        pivots[top] = row;
        ++rank;
        break;
      }
      row ^= pivots[top];
    }
  }
  return rank;
}

std::uint64_t span_size_bruteforce(std::span<const GF2Vector> vectors) {
  require_same_length(vectors);
  std::unordered_set<std::uint32_t> span{0};
  for (const auto &v : vectors) {
    std::vector<std::uint32_t> grown(span.begin(), span.end());
    for (std::uint32_t s : grown)
      span.insert(s ^ v.bits());
  }
  return span.size();
}

std::string_view to_string(SpaceName name) noexcept {
  switch (name) {
  case SpaceName::b2:
    return "B2";
  case SpaceName::s:
    return "S";
  case SpaceName::t:
    break;
  }
  return "T";
}

SpaceDescriptor describe_space(SpaceName name) noexcept {
  switch (name) {
  case SpaceName::b2:
    return {name, 4, 2};
  case SpaceName::s:
    return {name, 16, 4};
  case SpaceName::t:
    break;
  }
  return {SpaceName::t, 256, 8};
}

namespace {

BoolFn2 fn_sum(BoolFn2 a, BoolFn2 b) {
  const auto ta = a.truth_table();
  const auto tb = b.truth_table();
  std::array<bool, 4> out{};
  for (int k = 0; k < 4; ++k)
    out[k] = ta[k] != tb[k];
  return BoolFn2::from_truth_table(out);
}

PairState state_sum(PairState a, PairState b) noexcept {
  return PairState{a.x != b.x, a.y != b.y};
}

template <class E, class Add, class Scale>
bool vector_space_axioms(const std::vector<E> &elements, const E &zero, Add add,
                         Scale scale) {
  auto member = [&](const E &e) {
    return std::find(elements.begin(), elements.end(), e) != elements.end();
  };
  if (!member(zero))
    return false;
  for (const E &a : elements) {
    if (!(add(a, zero) == a) || !(add(a, a) == zero))
      return false;
    if (!(scale(true, a) == a) || !(scale(false, a) == zero))
      return false;
    for (bool alpha : {false, true})
      for (bool beta : {false, true}) {
        if (!(scale(alpha != beta, a) == add(scale(alpha, a), scale(beta, a))))
          return false;
        if (!(scale(alpha && beta, a) == scale(alpha, scale(beta, a))))
          return false;
      }
    for (const E &b : elements) {
      const E ab = add(a, b);
      if (!member(ab) || !(ab == add(b, a)))
        return false;
      for (bool alpha : {false, true})
        if (!(scale(alpha, ab) == add(scale(alpha, a), scale(alpha, b))))
          return false;
      for (const E &c : elements)
        if (!(add(ab, c) == add(a, add(b, c))))
          return false;
    }
  }
  return true;
}

} // namespace

bool check_axioms(const SpaceDescriptor &space) {
  switch (space.name) {
  case SpaceName::b2: {
    const std::vector<PairState> elements(all_pair_states.begin(),
                                          all_pair_states.end());
    return elements.size() == space.element_count &&
           vector_space_axioms(elements, PairState{}, state_sum,
                               [](bool alpha, PairState s) {
                                 return alpha ? s : PairState{};
                               });
  }
  case SpaceName::s: {
    std::vector<BoolFn2> elements;
    for (int i = 0; i < BoolFn2::count; ++i)
      elements.emplace_back(i);
    return elements.size() == space.element_count &&
           vector_space_axioms(elements, BoolFn2(0), fn_sum,
                               [](bool alpha, BoolFn2 f) {
                                 return alpha ? f : BoolFn2(0);
                               });
  }
  case SpaceName::t: {
    const auto elements = PairMap::all();
    return elements.size() == space.element_count &&
           vector_space_axioms(elements, PairMap(0, 0), pair_sum,
                               [](bool alpha, PairMap f) {
                                 return alpha ? f : PairMap(0, 0);
                               });
  }
  }
  return false;
}

bool is_linear_fn(int i) {
  const BoolFn2 f(i);
  for (PairState u : all_pair_states)
    for (PairState v : all_pair_states) {
      const PairState w = state_sum(u, v);
      if (f(w.x, w.y) != (f(u.x, u.y) != f(v.x, v.y)))
        return false;
    }
  return true;
}

bool is_linear_pair(int i, int j) {
  const PairMap f(i, j);
  for (PairState u : all_pair_states)
    for (PairState v : all_pair_states)
      if (f(state_sum(u, v)) != state_sum(f(u), f(v)))
        return false;
  return true;
}

bool is_bijective_pair(int i, int j) {
  const PairMap f(i, j);
  std::array<bool, 4> hit{};
  for (PairState s : all_pair_states)
    hit[f(s).code()] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_isomorphism(int i, int j) {
  return is_linear_pair(i, j) && is_bijective_pair(i, j);
}

PairMap pair_sum(PairMap a, PairMap b) noexcept {
  std::array<PairState, 4> images{};
  for (PairState s : all_pair_states)
    images[s.code()] = state_sum(a(s), b(s));
  return PairMap::from_images(images);
}

PairMap pair_compose(PairMap outer, PairMap inner) noexcept {
  std::array<PairState, 4> images{};
  for (PairState s : all_pair_states)
    images[s.code()] = outer(inner(s));
  return PairMap::from_images(images);
}

ClosureReport closure_checks() {
  std::vector<PairMap> linear;
  for (PairMap f : PairMap::all())
    if (is_linear_pair(f.i(), f.j()))
      linear.push_back(f);

  ClosureReport report;
  for (PairMap a : linear) {
    for (PairMap b : linear) {
      const PairMap sum = pair_sum(a, b);
      ++report.sums_checked;
      if (!is_linear_pair(sum.i(), sum.j()))
        report.failures.push_back({a, b, "sum", sum});
      const PairMap composed = pair_compose(a, b);
      ++report.compositions_checked;
      if (!is_linear_pair(composed.i(), composed.j()))
        report.failures.push_back({a, b, "composition", composed});
    }
  }
  return report;
}

std::vector<PairMap> listed_t_basis() {
  std::vector<PairMap> candidates;
  for (int a : {1, 2, 4, 8})
    for (int b : {1, 2, 4, 8})
      candidates.emplace_back(a, b);
  return candidates;
}

namespace {

BasisAudit audit(SpaceName space, std::vector<GF2Vector> candidates,
                 std::vector<std::string> names, std::size_t claimed) {
  BasisAudit a;
  a.space = space;
  a.rank_elimination = rank_gf2(candidates);
  a.span_size = span_size_bruteforce(candidates);
  a.rank_from_span = static_cast<std::size_t>(std::bit_width(a.span_size) - 1);
  a.claimed_dimension = claimed;
  a.space_dimension = describe_space(space).vector_length;
  a.candidates = std::move(candidates);
  a.candidate_names = std::move(names);
  return a;
}

std::string pair_name(PairMap f) {
  return "IVT_{" + std::to_string(f.i()) + "," + std::to_string(f.j()) + "}";
}

} // namespace

AlgebraReport build_algebra_report() {
  AlgebraReport r;
  r.axioms_b2 = check_axioms(describe_space(SpaceName::b2));
  r.axioms_s = check_axioms(describe_space(SpaceName::s));
  r.axioms_t = check_axioms(describe_space(SpaceName::t));

  for (int i = 0; i < BoolFn2::count; ++i)
    if (is_linear_fn(i))
      r.linear_functions.push_back(i);

  r.linear_iff_components = true;
  r.swap_symmetric = true;
  for (PairMap f : PairMap::all()) {
    const bool linear = is_linear_pair(f.i(), f.j());
    const bool bijective = is_bijective_pair(f.i(), f.j());
    if (linear)
      r.linear_pairs.push_back(f);
    if (bijective)
      r.bijective_pairs.push_back(f);
    if (linear && bijective)
      r.isomorphisms.push_back(f);
    r.linear_iff_components = r.linear_iff_components &&
                              linear == (is_linear_fn(f.i()) && is_linear_fn(f.j()));
    r.swap_symmetric = r.swap_symmetric &&
                       linear == is_linear_pair(f.j(), f.i()) &&
                       bijective == is_bijective_pair(f.j(), f.i());
  }

  r.bases.push_back(audit(SpaceName::b2,
                          {state_to_vector(PairState{false, true}),
                           state_to_vector(PairState{true, false})},
                          {"(0,1)", "(1,0)"}, 2));
  std::vector<GF2Vector> fns;
  std::vector<std::string> fn_names;
  for (int i : {1, 2, 4, 8}) {
    fns.push_back(fn_to_vector(i));
    fn_names.push_back("f_" + std::to_string(i));
  }
  r.bases.push_back(audit(SpaceName::s, fns, fn_names, 4));
  std::vector<GF2Vector> pairs;
  std::vector<std::string> pair_names;
  r.basis_candidates_nonlinear = true;
  for (PairMap f : listed_t_basis()) {
    pairs.push_back(pair_to_vector(f.i(), f.j()));
    pair_names.push_back(pair_name(f));
    r.basis_candidates_nonlinear =
        r.basis_candidates_nonlinear && !is_linear_pair(f.i(), f.j());
  }
  r.bases.push_back(audit(SpaceName::t, pairs, pair_names, 16));

  r.closure = closure_checks();
  return r;
}

AlgebraicCharacter algebraic_character(PairMap f) {
  if (is_isomorphism(f.i(), f.j()))
    return AlgebraicCharacter::isomorphism;
  const auto basis = listed_t_basis();
  if (std::find(basis.begin(), basis.end(), f) != basis.end())
    return AlgebraicCharacter::basis;
  if (is_linear_pair(f.i(), f.j()))
    return AlgebraicCharacter::linear;
  if (is_bijective_pair(f.i(), f.j()))
    return AlgebraicCharacter::bijective;
  return AlgebraicCharacter::none;
}

DynamicsRemark dynamics_remark(const ClassRecord &record) {
  if (record.collatz_like)
    return DynamicsRemark::collatz;
  if (record.sensitive)
    return DynamicsRemark::sensitive;
  switch (record.cls) {
  case AttractorClass::I:
    return DynamicsRemark::period1;
  case AttractorClass::II:
    return DynamicsRemark::period2;
  case AttractorClass::III:
    return DynamicsRemark::period3;
  case AttractorClass::IV:
    break;
  }
  return DynamicsRemark::period4;
}

std::vector<AlgebraicTableRow> algebraic_table(const ClassificationReport &report) {
  std::vector<AlgebraicTableRow> rows;
  for (const AlgebraicReferenceRow &ref : embedded_algebraic_table()) {
    const ClassRecord &record = report.record(ref.pair);
    AlgebraicTableRow row;
    row.pair = ref.pair;
    row.character = algebraic_character(ref.pair);
    row.remark = dynamics_remark(record);
    row.family = record.family;
    if (!record.witnesses.empty())
      row.attractor = record.witnesses.front().cycle;
    row.paper_character = ref.character;
    row.paper_remark = ref.remark;
    row.paper_note = ref.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace ivt
