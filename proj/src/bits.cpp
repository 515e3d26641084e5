#include "vcsys/bits.hpp"

#include <limits>

namespace vcsys {

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // r * num / i is exact at every step; guard the multiply anyway.
    if (r > std::numeric_limits<std::uint64_t>::max() / num)
      return std::numeric_limits<std::uint64_t>::max();
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

CombinationGen::CombinationGen(int n, int k) : n_(n), k_(k), done_(k > n || k < 0) {
  if (done_) return;
  idx_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
  mask_ = mask_all(k);
}

void CombinationGen::next() {
  if (done_) return;
  // Odometer step on the ascending index tuple.
  int i = k_ - 1;
  while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++idx_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k_; ++j)
    idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  mask_ = 0;
  for (int v : idx_) mask_ |= Mask{1} << v;
}

std::vector<Mask> combinations(int n, int k) {
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  for (CombinationGen g(n, k); !g.done(); g.next()) out.push_back(g.mask());
  return out;
}

std::vector<Mask> combinations_of(Mask support, int k) {
  const std::vector<int> pos = mask_to_indices(support);
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(static_cast<int>(pos.size()), k)));
  for (CombinationGen g(static_cast<int>(pos.size()), k); !g.done(); g.next()) {
    Mask m = 0;
    for (int i : g.indices()) m |= Mask{1} << pos[static_cast<std::size_t>(i)];
    out.push_back(m);
  }
  return out;
}

}  // namespace vcsys
