#pragma once

#include <vector>

#include "vcsys/set_system.hpp"

namespace vcsys {

// An order-property ladder: points a_1..a_N and concepts c_1..c_N with
// a_i ∈ c_j exactly when i < j.
struct LadderWitness {
  std::vector<int> points;      // domain indices, in ladder order
  std::vector<Mask> witnesses;  // concepts c_1..c_N

  bool empty() const noexcept { return points.empty(); }
};

struct LadderResult {
  int length = 0;
  LadderWitness witness;
};

// Largest N <= cap admitting a ladder, with the lexicographically least
// witness at that length (point tuple first, then concept tuple).
// Returns N = 0 with an empty witness only when even N = 1 fails.
LadderResult ladder_index(const SetSystem& system, int cap);

// True iff ladder_index(system, k) < k.
bool is_stable_family(const SetSystem& system, int k);

// Center and radius of the symmetric-difference ball that contains the
// whole family: every c ∈ C has |c Δ center| <= radius.
struct NormalForm {
  int radius = 0;
  Mask center = 0;
};

// Picks the concept minimizing the maximal symmetric-difference
// distance to the family (ties: lexicographically least concept).
// Centers are restricted to members of C.
NormalForm stable_normal_form(const SetSystem& system);

// Re-evaluates the defining biconditional of a witness; used by tests
// and the CLI to show witnesses are genuine.
bool ladder_witness_valid(const SetSystem& system, const LadderWitness& witness);

}  // namespace vcsys
