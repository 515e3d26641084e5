#pragma once

#include "vcsys/compression.hpp"
#include "vcsys/set_system.hpp"
#include "vcsys/stability.hpp"

// Naive, strictly serial reference implementations used to
// differential-test the production kernels.  Nothing here shares
// algorithmic code with the main modules beyond the core data types,
// and none of it is tuned: clarity over speed throughout.
namespace vcsys::oracle {

// Enumerates every subset and materializes every pattern set.
int vc_dimension(const SetSystem& system);

// The definitional check: |C(A)| = Phi_d(|A|) for every A ⊆ X.
bool is_maximum(const SetSystem& system);

// Literal reading: adding any missing labeling raises the dimension.
bool is_maximal(const SetSystem& system, int d);

// Interleaved point/concept search with direct pairwise constraint
// checks; no prefix-pattern bookkeeping.
int ladder_index(const SetSystem& system, int cap);

// Reconstructs by enumerating all realizable types over B consistent
// with the record; throws unless exactly one survives.
PartialType reconstruct(const SetSystem& system, const CompressionRecord& record,
                        Mask over);

}  // namespace vcsys::oracle
