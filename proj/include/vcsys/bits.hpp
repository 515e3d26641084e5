#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace vcsys {

// A concept or element subset over a domain of at most 64 elements.
// Bit i corresponds to the element at domain position i.
using Mask = std::uint64_t;

inline constexpr int kMaxDomainBits = 64;

inline constexpr Mask mask_all(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) noexcept { return std::popcount(m); }

// Canonical order on concepts: ascending lexicographic order of their
// bit strings written in domain order (position 0 first).  The first
// position where two masks differ decides; the mask with a 0 there is
// smaller.
inline constexpr bool lex_less(Mask a, Mask b) noexcept {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int pos = std::countr_zero(diff);
  return ((a >> pos) & Mask{1}) == 0;
}

struct LexLess {
  constexpr bool operator()(Mask a, Mask b) const noexcept {
    return lex_less(a, b);
  }
};

// Compacts the bits of `value` selected by `subset` into the low
// popcount(subset) bits, preserving domain order.
inline Mask gather_bits(Mask value, Mask subset) noexcept {
  Mask out = 0;
  int t = 0;
  for (Mask s = subset; s != 0; s &= s - 1, ++t) {
    if ((value >> std::countr_zero(s)) & Mask{1}) out |= Mask{1} << t;
  }
  return out;
}

// Inverse of gather_bits: spreads the low bits of `pattern` onto the
// positions selected by `subset`.
inline Mask scatter_bits(Mask pattern, Mask subset) noexcept {
  Mask out = 0;
  int t = 0;
  for (Mask s = subset; s != 0; s &= s - 1, ++t) {
    if ((pattern >> t) & Mask{1}) out |= Mask{1} << std::countr_zero(s);
  }
  return out;
}

// Reinterprets the low n bits of `key` as a bit string with character 0
// in the most significant position, i.e. maps the k-th string in
// lexicographic order to its concept mask.
inline Mask mask_from_lex_rank(Mask key, int n) noexcept {
  Mask out = 0;
  for (int i = 0; i < n; ++i) {
    if ((key >> (n - 1 - i)) & Mask{1}) out |= Mask{1} << i;
  }
  return out;
}

inline std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (Mask s = m; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

inline Mask mask_from_indices(const std::vector<int>& idx) noexcept {
  Mask out = 0;
  for (int i : idx) out |= Mask{1} << i;
  return out;
}

// Exact C(n, k); saturates at UINT64_MAX on overflow (never reached for
// n <= 64 with the k values the library uses, but kept safe).
std::uint64_t binomial(int n, int k) noexcept;

// Enumerates k-subsets of {0,...,n-1} in lexicographic order of their
// ascending index tuples: (0,1,..,k-1) first, (n-k,..,n-1) last.
class CombinationGen {
public:
  CombinationGen(int n, int k);
  bool done() const noexcept { return done_; }
  Mask mask() const noexcept { return mask_; }
  const std::vector<int>& indices() const noexcept { return idx_; }
  void next();

private:
  int n_;
  int k_;
  bool done_;
  Mask mask_;
  std::vector<int> idx_;
};

// Materializes all k-subset masks in lexicographic tuple order.
std::vector<Mask> combinations(int n, int k);

// Same, but subsets of the set bits of `support` (k of them), in
// lexicographic order of the chosen element positions.
std::vector<Mask> combinations_of(Mask support, int k);

}  // namespace vcsys
