#pragma once

#include <vector>

#include "vcsys/numbers.hpp"
#include "vcsys/set_system.hpp"

namespace vcsys {

// The unique trace pattern missing from a maximum class on a
// (d+1)-set.  `pattern` is compact over the witness set (bit k is the
// k-th element of the witness in domain order); `forbidden_subset`
// expands the 1-bits of the pattern back onto the domain.
struct ForbiddenLabel {
  Mask witness_set = 0;
  Mask pattern = 0;
  Mask forbidden_subset = 0;
};

bool shatters(const SetSystem& system, Mask subset);

int vc_dimension(const SetSystem& system);

// Φ_d(n) = Σ_{i<=d} C(n,i), exact at any size.
BigInt sauer_phi(int d, int n);

// Fast path: computes d = vc_dimension and compares |C| with Φ_d(|X|).
// The definitional all-subsets check lives in the oracle module and the
// two are differential-tested against each other; this one is the
// production entry point.
bool is_maximum(const SetSystem& system);

// Proof token that a family passed the maximum check, carrying the
// dimension so downstream operations do not recompute it.
struct MaximumCertificate {
  int dimension = 0;
};

// Runs the maximum check and throws NotMaximumError when it fails.
MaximumCertificate certify_maximum(const SetSystem& system);

// True iff no labeling outside C can be added without raising the VC
// dimension past d.  `d` must equal vc_dimension(system).
bool is_maximal(const SetSystem& system, int d);

ForbiddenLabel forbidden_label(const SetSystem& system, Mask witness_set);
ForbiddenLabel forbidden_label(const SetSystem& system, MaximumCertificate cert,
                               Mask witness_set);

// One record per (d+1)-subset, in lexicographic order of witness sets.
std::vector<ForbiddenLabel> all_forbidden_labels(const SetSystem& system);

// Membership via forbidden labels: true iff the candidate avoids every
// witness set's forbidden pattern.  Equals direct membership on
// maximum families over finite domains.
bool member_by_forbidden_labels(const SetSystem& system, Mask candidate);
bool member_by_forbidden_labels(const std::vector<ForbiddenLabel>& labels,
                                Mask candidate);

// True iff some concept agrees with the partial labeling on its whole
// support.  Requires a maximum family; the local-to-global consistency
// property this feeds is exercised by the test suite.
bool helly_consistent(const SetSystem& system, const PartialType& type);

// Greedy completion: scans all labelings in canonical lexicographic
// order and adds each one that keeps the VC dimension at d.  For
// maximum input the output equals the input; in general the result is
// *a* d-maximal superclass (the greedy one for this scan order).
SetSystem maximal_completion(const SetSystem& system, int d);

namespace detail {

// Compact patterns of 2^A absent from the trace of C on A, lex-sorted.
std::vector<Mask> missing_patterns(const SetSystem& system, Mask subset);

// Greedy core shared by maximal_completion and the random-order
// generator: scans `candidates` once and adds each labeling that keeps
// every (d+1)-subset unshattered.  Requires VC(system) <= d < n.
SetSystem greedy_complete(const SetSystem& system, int d,
                          std::span<const Mask> candidates);

}  // namespace detail

}  // namespace vcsys
