// Copyright 2026 the speclat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECLAT_LATTICE_HPP_
#define SPECLAT_LATTICE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace speclat {

// Error codes shared across the library. The CLI maps them onto its
// exit-code contract (input = 2, cap = 3, internal = 4).
enum class Errc {
  not_a_partial_order,
  not_a_lattice,
  axiom_violation,
  cap_exceeded,
  not_join_preserving,
  not_compatible,
  not_a_frame,
  algebra_axiom_failure,
  not_commutative,
  not_distributive,
  bad_input,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

// Finite complete lattice given by its order relation. Elements are the
// indices 0..n-1; meet/join tables are fully tabulated and bottom/top are
// detected, not positionally fixed. For a finite poset, existence of all
// binary meets and joins already forces bottom, top and completeness, so
// a validated LatticeOrder is a complete lattice.
struct LatticeOrder {
  int n = 0;
  std::vector<uint8_t> leq_tab;  // n*n, leq_tab[x*n+y] != 0  <=>  x <= y
  std::vector<int> meet_tab;     // n*n
  std::vector<int> join_tab;     // n*n
  int bottom = 0;
  int top = 0;

  bool leq(int x, int y) const { return leq_tab[x * n + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  int meet(int x, int y) const { return meet_tab[x * n + y]; }
  int join(int x, int y) const { return join_tab[x * n + y]; }

  // y covers x in the Hasse diagram.
  bool covers(int x, int y) const;
};

// Complete multiplicative lattice: a lattice order plus a multiplication
// table with xy <= x /\ y for all pairs.
struct MulLattice {
  LatticeOrder order;
  std::vector<int> mult_tab;  // n*n

  int n() const { return order.n; }
  bool leq(int x, int y) const { return order.leq(x, y); }
  int meet(int x, int y) const { return order.meet(x, y); }
  int join(int x, int y) const { return order.join(x, y); }
  int mult(int x, int y) const { return mult_tab[x * order.n + y]; }
  int square(int x) const { return mult(x, x); }
  int bottom() const { return order.bottom; }
  int top() const { return order.top; }
};

// Side conditions the theorems hypothesize, decided by exhaustive
// quantifier elimination over the (finite) carrier.
struct ConditionProfile {
  bool commutative = false;
  bool monotone = false;         // x<=y & x'<=y'  =>  xx' <= yy'
  bool weakly_monotone = false;  // x<=y  =>  x^2 <= y^2
  bool distributive = false;     // x(y\/z) = xy\/xz and (x\/y)z = xz\/yz
  bool unit_idempotent = false;  // 1^2 = 1
  bool unit_neutral = false;     // 1x = x = x1
  bool is_frame = false;         // xy = x/\y
  bool kaplansky = false;        // x,y compact => xy compact
  bool weak_kaplansky = false;   // x compact => x^2 compact
  bool compact_lattice = false;  // 1 compact
  bool algebraic_lattice = false;
};

// Subset masks over lattice elements. Only meaningful for n <= 63; the
// subset-quantified checks guard on that.
constexpr int kMaskCap = 63;

int join_of_mask(const LatticeOrder& o, uint64_t mask);  // empty -> bottom
int meet_of_mask(const LatticeOrder& o, uint64_t mask);  // empty -> top
// Nonempty and every pair has an upper bound inside the subset.
bool mask_is_directed(const LatticeOrder& o, uint64_t mask);

// Tabulates meets/joins by exhaustive bound search and locates bottom/top.
// Throws Error(not_a_partial_order) or Error(not_a_lattice) with a witness
// pair on failure.
LatticeOrder validate_order(int n, const std::vector<uint8_t>& leq);

// Checks xy <= x/\y for every pair; throws Error(axiom_violation, {x, y}).
MulLattice new_mul_lattice(LatticeOrder order, std::vector<int> mult);

ConditionProfile condition_profile(const MulLattice& l);

// Compact elements per the definition (every subset S with x <= \/S has a
// finite F <= S with x <= \/F), decided through the equivalent directed-
// subset form. On a finite lattice this is the full universe; the
// definitional path is kept for n small enough to enumerate subsets and
// anchors the sanity tests.
std::vector<int> compact_elements(const LatticeOrder& o);

// Every element is a join of compact elements.
bool is_algebraic(const LatticeOrder& o);

// m != 1 with m < x => x = 1.
std::vector<int> maximal_elements(const LatticeOrder& o);

// m != 1 such that for every directed S, m = \/S forces m in S.
std::vector<int> join_inaccessible_elements(const LatticeOrder& o);

}  // namespace speclat

#endif  // SPECLAT_LATTICE_HPP_
