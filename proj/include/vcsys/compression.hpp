#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vcsys/geometry.hpp"
#include "vcsys/set_system.hpp"

namespace vcsys {

// A <= d element labeled subset from which a full type is rebuilt.
struct CompressionRecord {
  Mask kept = 0;         // subset of the compressed type's support
  Mask kept_labels = 0;  // original labels restricted to kept

  bool operator==(const CompressionRecord& other) const noexcept {
    return kept == other.kept && kept_labels == other.kept_labels;
  }
};

// True iff some concept agrees with the type on its whole support.
bool realizable(const SetSystem& system, const PartialType& type);

// True iff the concepts agreeing with the type on support \ A realize
// all 2^|A| patterns on A.
bool internally_shatters(const SetSystem& system, const PartialType& type,
                         Mask shatter_set);

// Lexicographically least internally shattered subset of the support
// of size min(d, |support|), or nullopt.  On a d-maximum family a
// result always exists for realizable types.
std::optional<Mask> find_internally_shattered(const SetSystem& system,
                                              const PartialType& type, int d);

// Keeps a found internally shattered set together with the type's
// labels on it; |kept| <= d always.
CompressionRecord compress_type(const SetSystem& system, const PartialType& type,
                                int d);

// Rebuilds a type over B from a record: kept elements take the stored
// label; any other b gets label 1 iff every pattern over kept is
// realized by some concept containing b.
PartialType reconstruct_type(const SetSystem& system,
                             const CompressionRecord& record, Mask over);

using Compressor = std::function<CompressionRecord(const PartialType&)>;
// A reconstruction function maps a record to a total labeling of X.
using Reconstructor = std::function<Mask(const CompressionRecord&)>;

struct SchemeCounterexample {
  Mask support = 0;
  Mask labels = 0;
  // 1: kept set escapes the support; 2: no reconstructor extends f.
  int violated_axiom = 0;
};

struct SchemeVerification {
  bool ok = true;
  std::optional<SchemeCounterexample> counterexample;
};

// Checks, over every concept restriction to every support of size >= 2
// (supports by ascending size then lexicographic order, restrictions in
// pattern order), that kappa keeps only support elements and that some
// rho reconstructs the restriction.  Returns the first failure.
SchemeVerification verify_extended_compression(
    const SetSystem& system, int d, const Compressor& kappa,
    const std::vector<Reconstructor>& rhos);

struct L2Scheme {
  Compressor kappa;
  std::vector<Reconstructor> rhos;  // one per labeling of the kept set
};

// The type-compression scheme for a d-maximum family: kappa keeps an
// internally shattered <= d-set, and each rho stamps one kept-labeling
// onto the kept elements and fills the rest by the all-cells test.
// The returned closures reference `system` and must not outlive it.
L2Scheme make_l2_scheme(const SetSystem& system, int d);

// Extreme points (topmost, leftmost, rightmost, lowest) of F ∩ R,
// returned as ascending point indices; at most 4, empty when the
// intersection is empty.  Ties break toward the earlier point.
std::vector<int> rectangle_compress(const PointConfig& config, const Rect& rect);

// Minimal closed axis-parallel rectangle containing the given points;
// nullopt for the empty set (the empty region).
std::optional<Rect> rectangle_reconstruct(const PointConfig& config,
                                          const std::vector<int>& points);

}  // namespace vcsys
