#include "vcsys/stability.hpp"

#include <algorithm>
#include <cstdint>

namespace vcsys {

namespace {

// Depth-first ladder search.  A point tuple (a_1..a_k) extends to a
// ladder of length k iff for every j < k some concept traces to the
// prefix {a_1..a_j} on the tuple.  The search keeps, per prefix length,
// the list of concept indices still realizing that prefix, plus the
// list of concepts containing the whole tuple (candidates for the next
// prefix); both shrink monotonically along a branch.
class LadderSearch {
public:
  LadderSearch(const SetSystem& system, int cap)
      : system_(system), cap_(cap), best_(0) {}

  LadderResult run() {
    const std::size_t m = system_.size();
    std::vector<std::uint32_t> all(m);
    for (std::uint32_t i = 0; i < m; ++i) all[i] = i;
    // Depth 0: no points chosen; every concept still contains the
    // (empty) tuple.
    extend({}, 0, {}, all);
    LadderResult r;
    r.length = best_;
    r.witness = best_witness_;
    return r;
  }

private:
  void extend(std::vector<int> points, Mask used,
              std::vector<std::vector<std::uint32_t>> realizers,
              std::vector<std::uint32_t> supersets) {
    const int depth = static_cast<int>(points.size());
    if (depth > best_) {
      best_ = depth;
      best_witness_.points = points;
      best_witness_.witnesses.clear();
      for (const auto& r : realizers)
        best_witness_.witnesses.push_back(system_.concepts()[r.front()]);
    }
    if (depth == cap_) return;
    // Branch bound: even using every unused element this branch cannot
    // beat the current best.
    if (depth + (system_.n() - popcount(used)) <= best_) return;

    for (int a = 0; a < system_.n(); ++a) {
      if ((used >> a) & 1) continue;
      // Every existing prefix realizer must exclude the new point; the
      // new prefix (all current points) needs a realizer excluding it.
      std::vector<std::vector<std::uint32_t>> next_real;
      next_real.reserve(realizers.size() + 1);
      bool ok = true;
      for (const auto& r : realizers) {
        std::vector<std::uint32_t> filtered = filter(r, a, false);
        if (filtered.empty()) {
          ok = false;
          break;
        }
        next_real.push_back(std::move(filtered));
      }
      if (!ok) continue;
      std::vector<std::uint32_t> new_prefix = filter(supersets, a, false);
      if (new_prefix.empty()) continue;
      next_real.push_back(std::move(new_prefix));
      std::vector<std::uint32_t> next_super = filter(supersets, a, true);

      std::vector<int> next_points = points;
      next_points.push_back(a);
      extend(std::move(next_points), used | (Mask{1} << a), std::move(next_real),
             std::move(next_super));
      if (best_ == cap_) return;
    }
  }

  std::vector<std::uint32_t> filter(const std::vector<std::uint32_t>& concepts,
                                    int element, bool contains) const {
    std::vector<std::uint32_t> out;
    out.reserve(concepts.size());
    for (std::uint32_t idx : concepts) {
      const bool has = (system_.concepts()[idx] >> element) & 1;
      if (has == contains) out.push_back(idx);
    }
    return out;
  }

  const SetSystem& system_;
  int cap_;
  int best_;
  LadderWitness best_witness_;
};

}  // namespace

LadderResult ladder_index(const SetSystem& system, int cap) {
  if (cap < 1) throw PreconditionError("ladder cap must be at least 1");
  cap = std::min(cap, system.n());
  return LadderSearch(system, cap).run();
}

bool is_stable_family(const SetSystem& system, int k) {
  if (k < 1) throw PreconditionError("stability threshold must be at least 1");
  return ladder_index(system, k).length < k;
}

NormalForm stable_normal_form(const SetSystem& system) {
  const std::vector<Mask>& cs = system.concepts();
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(cs.size());
  int best_radius = system.n() + 1;
  std::ptrdiff_t best_idx = -1;

#pragma omp parallel
  {
    int local_radius = system.n() + 1;
    std::ptrdiff_t local_idx = -1;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      int radius = 0;
      for (std::ptrdiff_t j = 0; j < m; ++j) {
        radius = std::max(radius, popcount(cs[static_cast<std::size_t>(i)] ^
                                            cs[static_cast<std::size_t>(j)]));
      }
      if (radius < local_radius || (radius == local_radius && i < local_idx)) {
        local_radius = radius;
        local_idx = i;
      }
    }
#pragma omp critical
    {
      // Concepts are lex-sorted, so the smaller index is the
      // lexicographically least tie-break.
      if (local_idx >= 0 && (local_radius < best_radius ||
                             (local_radius == best_radius && local_idx < best_idx)))
      {
        best_radius = local_radius;
        best_idx = local_idx;
      }
    }
  }

  NormalForm nf;
  nf.radius = best_radius;
  nf.center = cs[static_cast<std::size_t>(best_idx)];
  return nf;
}

bool ladder_witness_valid(const SetSystem& system, const LadderWitness& w) {
  if (w.points.size() != w.witnesses.size()) return false;
  const int n = static_cast<int>(w.points.size());
  for (int i = 0; i < n; ++i) {
    if (w.points[static_cast<std::size_t>(i)] >= system.n()) return false;
    if (!system.contains(w.witnesses[static_cast<std::size_t>(i)])) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool in = (w.witnesses[static_cast<std::size_t>(j)] >>
                       w.points[static_cast<std::size_t>(i)]) & 1;
      if (in != (i < j)) return false;
    }
  }
  return true;
}

}  // namespace vcsys
