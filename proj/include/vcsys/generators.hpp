#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vcsys/geometry.hpp"
#include "vcsys/linear.hpp"
#include "vcsys/set_system.hpp"

namespace vcsys {

// A function basis evaluated on a point configuration: rows are points,
// columns are basis functions; f0_values is the target function.
struct LinearFamilySpec {
  RationalMatrix basis_values;
  RationalRow f0_values;

  int dims() const noexcept {
    return basis_values.empty() ? 0 : static_cast<int>(basis_values[0].size());
  }
};

// All subsets of size <= d of an n-element chain domain x1..xn.
SetSystem gen_k_subsets(int n, int d, Caps caps = {});

// Subsets of size 1..d (no empty set).
SetSystem gen_nonempty_k_subsets(int n, int d, Caps caps = {});

// Subsets of the n-chain whose indicator has at most m maximal runs of
// ones.
SetSystem gen_interval_unions(int n, int m, Caps caps = {});

// The n+1 initial segments of the n-chain, including the empty set and
// the whole chain.
SetSystem gen_prefixes(int n, Caps caps = {});

enum class GpViolation { rank_deficient, interpolated };

struct GpReport {
  bool ok = true;
  GpViolation kind = GpViolation::rank_deficient;
  std::vector<int> subset;  // first violating point subset, canonical order
};

// (a) every n-row submatrix of the basis has rank n; (b) no n+1 points
// can be simultaneously interpolated by f0 - H.  First violation wins,
// sizes n before n+1, subsets in lexicographic order.
GpReport validate_general_position(const PointConfig& config,
                                   const LinearFamilySpec& spec);

// The family of strict positivity sets {x : f0(x) - f(x) > 0} as f
// ranges over the span of the basis columns, by sign-pattern search
// with exact feasibility pruning.  Requires general position.
SetSystem gen_pos_family(const PointConfig& config, const LinearFamilySpec& spec,
                         Caps caps = {});

// Basis columns (y, x, 1) with f0 = -x^2 - y^2: the positivity sets are
// exactly the point sets strictly inside circles, plus the half-plane
// patterns the linear span also realizes.
LinearFamilySpec circle_spec(const PointConfig& config);
SetSystem gen_circles(const PointConfig& config, Caps caps = {});

// Threshold family: basis column (1), f0 = x-coordinate.
LinearFamilySpec threshold_spec(const PointConfig& config);

// Parabola family: basis columns (y, x, 1), f0 = x^2.
LinearFamilySpec parabola_spec(const PointConfig& config);

// All distinct traces of closed axis-parallel rectangles on the
// configuration.
SetSystem gen_rectangles(const PointConfig& config, Caps caps = {});

// Greedy maximal completion starting from {∅}, scanning all 2^n
// labelings in the pseudo-random order given by a Fisher–Yates shuffle
// driven by std::mt19937_64(seed) with modulo-bounded draws.  The
// result is d-maximal with VC dimension exactly d.
SetSystem gen_random_maximal(int n, int d, std::uint64_t seed, Caps caps = {});

// Domain x1..xn used by the chain generators.
Domain chain_domain(int n);

}  // namespace vcsys
