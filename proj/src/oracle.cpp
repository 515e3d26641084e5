#include "vcsys/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace vcsys::oracle {

namespace {

// Local helpers only; deliberately not shared with the main modules.

std::set<Mask> patterns_on(const std::vector<Mask>& concepts, Mask subset) {
  std::set<Mask> out;
  for (Mask c : concepts) {
    Mask p = 0;
    int t = 0;
    for (int i = 0; i < 64; ++i) {
      if ((subset >> i) & 1) {
        if ((c >> i) & 1) p |= Mask{1} << t;
        ++t;
      }
    }
    out.insert(p);
  }
  return out;
}

bool set_shattered(const std::vector<Mask>& concepts, Mask subset) {
  int k = 0;
  for (int i = 0; i < 64; ++i) k += static_cast<int>((subset >> i) & 1);
  if (k > 25) return false;
  return patterns_on(concepts, subset).size() == (std::size_t{1} << k);
}

std::uint64_t phi_by_pascal(int d, int n) {
  // Pascal's triangle row n; values stay far below 2^63 for n <= 26.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] +=
        row[static_cast<std::size_t>(j - 1)];
  }
  std::uint64_t sum = 0;
  for (int j = 0; j <= std::min(d, n); ++j) sum += row[static_cast<std::size_t>(j)];
  return sum;
}

}  // namespace

int vc_dimension(const SetSystem& system) {
  const int n = system.n();
  if (n > 26)
    throw CapExceededError("oracle vc_dimension enumerates 2^n subsets");
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += static_cast<int>((a >> i) & 1);
    if (k <= best) continue;
    if (set_shattered(system.concepts(), static_cast<Mask>(a))) best = k;
  }
  return best;
}

bool is_maximum(const SetSystem& system) {
  const int n = system.n();
  if (n > 26)
    throw CapExceededError("oracle is_maximum enumerates 2^n subsets");
  const int d = vc_dimension(system);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += static_cast<int>((a >> i) & 1);
    if (patterns_on(system.concepts(), static_cast<Mask>(a)).size() !=
        phi_by_pascal(d, k))
      return false;
  }
  return true;
}

bool is_maximal(const SetSystem& system, int d) {
  const int n = system.n();
  if (n > 22)
    throw CapExceededError("oracle is_maximal re-derives the dimension per candidate");
  if (vc_dimension(system) != d)
    throw PreconditionError("oracle is_maximal: wrong dimension supplied");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t cand = 0; cand < total; ++cand) {
    const Mask c = static_cast<Mask>(cand);
    if (std::find(system.concepts().begin(), system.concepts().end(), c) !=
        system.concepts().end())
      continue;
    std::vector<Mask> extended = system.concepts();
    extended.push_back(c);
    // Adding one concept raises the dimension by at most one, so it
    // kept the dimension iff no (d+1)-set became shattered.
    bool raised = false;
    for (std::uint64_t a = 0; a < total && !raised; ++a) {
      int k = 0;
      for (int i = 0; i < n; ++i) k += static_cast<int>((a >> i) & 1);
      if (k != d + 1) continue;
      if (set_shattered(extended, static_cast<Mask>(a))) raised = true;
    }
    if (!raised) return false;
  }
  return true;
}

namespace {

struct LadderState {
  std::vector<int> points;
  std::vector<Mask> concepts;
};

bool pairs_consistent(const LadderState& s) {
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (std::size_t j = 0; j < s.concepts.size(); ++j) {
      const bool in = (s.concepts[j] >> s.points[i]) & 1;
      if (in != (i < j)) return false;
    }
  }
  return true;
}

int ladder_dfs(const SetSystem& system, LadderState& s, int cap) {
  const int depth = static_cast<int>(s.points.size());
  int best = depth;
  if (depth == cap) return best;
  for (int a = 0; a < system.n(); ++a) {
    if (std::find(s.points.begin(), s.points.end(), a) != s.points.end()) continue;
    s.points.push_back(a);
    for (Mask c : system.concepts()) {
      s.concepts.push_back(c);
      if (pairs_consistent(s)) best = std::max(best, ladder_dfs(system, s, cap));
      s.concepts.pop_back();
      if (best == cap) break;
    }
    s.points.pop_back();
    if (best == cap) break;
  }
  return best;
}

}  // namespace

int ladder_index(const SetSystem& system, int cap) {
  if (cap < 1) throw PreconditionError("oracle ladder cap must be at least 1");
  cap = std::min(cap, system.n());
  LadderState s;
  return ladder_dfs(system, s, cap);
}

PartialType reconstruct(const SetSystem& system, const CompressionRecord& record,
                        Mask over) {
  system.check_subset(over);
  std::set<Mask> candidates;
  for (Mask c : system.concepts()) candidates.insert(c & over);
  std::vector<Mask> consistent;
  for (Mask labels : candidates) {
    if ((labels & record.kept) == record.kept_labels) consistent.push_back(labels);
  }
  if (consistent.size() != 1)
    throw Error("oracle reconstruct: " + std::to_string(consistent.size()) +
                " realizable types over B are consistent with the record");
  PartialType out;
  out.support = over;
  out.labels = consistent.front();
  return out;
}

}  // namespace vcsys::oracle
