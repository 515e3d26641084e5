#include "vcsys/vc.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>

namespace vcsys {

namespace {

// Hard ceiling for the subset-sweep operations; above this the sweeps
// stop being desk-scale regardless of the configured caps.
constexpr int kMaxSweepDomain = 26;
constexpr std::uint64_t kMaxCombinations = 100'000'000ull;

bool shatters_unchecked(std::span<const Mask> concepts, Mask subset, int k) {
  if (k >= 64) return false;
  if (k > 20 || (std::uint64_t{1} << k) > concepts.size()) return false;
  const std::size_t nwords = (std::size_t{1} << k) / 64 + 1;
  std::uint64_t small[16];
  std::vector<std::uint64_t> large;
  std::uint64_t* seen;
  if (nwords <= 16) {
    std::fill(small, small + nwords, 0);
    seen = small;
  } else {
    large.assign(nwords, 0);
    seen = large.data();
  }
  std::size_t count = 0;
  const std::size_t want = std::size_t{1} << k;
  for (Mask c : concepts) {
    const Mask p = gather_bits(c, subset);
    std::uint64_t& w = seen[p >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (p & 63);
    if (!(w & bit)) {
      w |= bit;
      if (++count == want) return true;
    }
  }
  return false;
}

bool any_shattered_of_size(const SetSystem& system, int k) {
  const std::span<const Mask> cs(system.concepts());
  const std::uint64_t total = binomial(system.n(), k);
  if (total > kMaxCombinations)
    throw CapExceededError("subset sweep of size " + std::to_string(k) +
                           " over " + std::to_string(system.n()) +
                           " elements is beyond desk scale");
  if (total <= (std::uint64_t{1} << 22)) {
    const std::vector<Mask> combos = combinations(system.n(), k);
    bool any = false;
#pragma omp parallel for schedule(dynamic, 256) reduction(|| : any)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(combos.size()); ++i) {
      if (!any && shatters_unchecked(cs, combos[static_cast<std::size_t>(i)], k))
        any = true;
    }
    return any;
  }
  for (CombinationGen g(system.n(), k); !g.done(); g.next()) {
    if (shatters_unchecked(cs, g.mask(), k)) return true;
  }
  return false;
}

// Realized-pattern bitmaps for every (d+1)-subset.  Padding bits above
// 2^m are preset so that missing counts and zero-bit scans only ever
// see valid patterns.
class PatternTables {
public:
  PatternTables(const SetSystem& system, int m)
      : m_(m),
        npatterns_(std::uint64_t{1} << m),
        nwords_((npatterns_ + 63) / 64),
        combos_(combinations(system.n(), m)) {
    if (m_ > 21)
      throw CapExceededError("pattern tables for subsets of size " +
                             std::to_string(m_) + " are beyond desk scale");
    const std::uint64_t bytes =
        static_cast<std::uint64_t>(combos_.size()) * nwords_ * 8;
    if (bytes > (std::uint64_t{1} << 30))
      throw CapExceededError("pattern tables would need " +
                             std::to_string(bytes >> 20) + " MiB");
    bits_.assign(combos_.size() * nwords_, 0);
    missing_.assign(combos_.size(), 0);
    missing_pat_.assign(combos_.size(), 0);

    const std::span<const Mask> cs(system.concepts());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(combos_.size()); ++i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      std::uint64_t* w = &bits_[idx * nwords_];
      // Preset padding bits in the last word.
      const int used = static_cast<int>(npatterns_ & 63);
      if (used != 0) w[nwords_ - 1] = ~((std::uint64_t{1} << used) - 1);
      for (Mask c : cs) {
        const Mask p = gather_bits(c, combos_[idx]);
        w[p >> 6] |= std::uint64_t{1} << (p & 63);
      }
      std::uint64_t miss = 0;
      for (std::size_t j = 0; j < nwords_; ++j)
        miss += static_cast<std::uint64_t>(popcount(~w[j]));
      missing_[idx] = miss;
      if (miss == 1) missing_pat_[idx] = find_zero(idx);
    }
  }

  const std::vector<Mask>& combos() const noexcept { return combos_; }

  // True iff adding `candidate` would complete some subset's pattern
  // set, i.e. shatter a (d+1)-set.
  bool would_shatter(Mask candidate) const {
    for (std::size_t i = 0; i < combos_.size(); ++i) {
      if (missing_[i] == 1 &&
          gather_bits(candidate, combos_[i]) == missing_pat_[i])
        return true;
    }
    return false;
  }

  void add(Mask candidate) {
    for (std::size_t i = 0; i < combos_.size(); ++i) {
      const Mask p = gather_bits(candidate, combos_[i]);
      std::uint64_t& w = bits_[i * nwords_ + (p >> 6)];
      const std::uint64_t bit = std::uint64_t{1} << (p & 63);
      if (!(w & bit)) {
        w |= bit;
        if (--missing_[i] == 1) missing_pat_[i] = find_zero(i);
      }
    }
  }

private:
  Mask find_zero(std::size_t idx) const {
    const std::uint64_t* w = &bits_[idx * nwords_];
    for (std::size_t j = 0; j < nwords_; ++j) {
      if (~w[j] != 0)
        return static_cast<Mask>(j * 64 +
                                 static_cast<std::size_t>(std::countr_zero(~w[j])));
    }
    return 0;
  }

  int m_;
  std::uint64_t npatterns_;
  std::size_t nwords_;
  std::vector<Mask> combos_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> missing_;
  std::vector<Mask> missing_pat_;
};

class MemberBitmap {
public:
  explicit MemberBitmap(const SetSystem& system)
      : words_((std::size_t{1} << system.n()) / 64 + 1, 0) {
    for (Mask c : system.concepts()) set(c);
  }
  bool test(Mask m) const {
    return (words_[static_cast<std::size_t>(m >> 6)] >>
            (m & 63)) & 1;
  }
  void set(Mask m) {
    words_[static_cast<std::size_t>(m >> 6)] |= std::uint64_t{1} << (m & 63);
  }

private:
  std::vector<std::uint64_t> words_;
};

void require_dimension(const SetSystem& system, int d, const char* op) {
  const int actual = vc_dimension(system);
  if (d != actual)
    throw PreconditionError(std::string(op) + ": supplied dimension " +
                            std::to_string(d) + " but the family has VC dimension " +
                            std::to_string(actual));
}

void require_sweepable(const SetSystem& system, const char* op) {
  if (system.n() > kMaxSweepDomain)
    throw CapExceededError(std::string(op) + " sweeps all 2^" +
                           std::to_string(system.n()) +
                           " labelings; domains above " +
                           std::to_string(kMaxSweepDomain) + " are rejected");
}

}  // namespace

bool shatters(const SetSystem& system, Mask subset) {
  system.check_subset(subset);
  return shatters_unchecked(std::span<const Mask>(system.concepts()), subset,
                            popcount(subset));
}

int vc_dimension(const SetSystem& system) {
  int max_k = 0;
  while ((std::size_t{1} << (max_k + 1)) <= system.size()) ++max_k;
  max_k = std::min(max_k, system.n());
  int d = 0;
  for (int k = 1; k <= max_k; ++k) {
    if (!any_shattered_of_size(system, k)) return k - 1;
    d = k;
  }
  return d;
}

BigInt sauer_phi(int d, int n) {
  if (d < 0 || n < 0) throw PreconditionError("sauer_phi needs d, n >= 0");
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, 0)
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      if (i > n) break;  // C(n, i) = 0 from here on
      binom = binom * (n - i + 1) / i;
    }
    sum += binom;
  }
  return sum;
}

bool is_maximum(const SetSystem& system) {
  const int d = vc_dimension(system);
  return BigInt(system.size()) == sauer_phi(d, system.n());
}

MaximumCertificate certify_maximum(const SetSystem& system) {
  const int d = vc_dimension(system);
  if (BigInt(system.size()) != sauer_phi(d, system.n()))
    throw NotMaximumError(
        "family is not maximum: VC dimension " + std::to_string(d) + " with " +
        std::to_string(system.size()) + " concepts, but Phi_d(n) = " +
        sauer_phi(d, system.n()).str());
  return MaximumCertificate{d};
}

bool is_maximal(const SetSystem& system, int d) {
  require_dimension(system, d, "is_maximal");
  require_sweepable(system, "is_maximal");
  const int m = d + 1;
  if (m > system.n()) return true;  // VC = n forces C = 2^X

  const PatternTables tables(system, m);
  const MemberBitmap member(system);
  const std::int64_t total = std::int64_t{1} << system.n();
  bool maximal = true;
#pragma omp parallel for schedule(dynamic, 4096) reduction(&& : maximal)
  for (std::int64_t key = 0; key < total; ++key) {
    if (!maximal) continue;
    const Mask cand = static_cast<Mask>(key);
    if (member.test(cand)) continue;
    if (!tables.would_shatter(cand)) maximal = false;
  }
  return maximal;
}

SetSystem maximal_completion(const SetSystem& system, int d) {
  require_dimension(system, d, "maximal_completion");
  require_sweepable(system, "maximal_completion");
  if (d + 1 > system.n()) return system;  // VC = n forces C = 2^X already

  std::vector<Mask> order;
  order.reserve(std::size_t{1} << system.n());
  const std::uint64_t total = std::uint64_t{1} << system.n();
  for (std::uint64_t key = 0; key < total; ++key)
    order.push_back(mask_from_lex_rank(key, system.n()));
  return detail::greedy_complete(system, d, order);
}

namespace detail {

SetSystem greedy_complete(const SetSystem& system, int d,
                          std::span<const Mask> candidates) {
  require_sweepable(system, "greedy_complete");
  const int m = d + 1;
  if (m > system.n())
    throw PreconditionError("greedy_complete needs d < n");

  PatternTables tables(system, m);
  MemberBitmap member(system);
  std::vector<Mask> result = system.concepts();
  // Once a labeling is rejected it stays rejected (realized-pattern
  // sets only grow along the scan), so a single pass reaches a
  // fixpoint.
  for (Mask cand : candidates) {
    if (member.test(cand)) continue;
    if (tables.would_shatter(cand)) continue;
    member.set(cand);
    tables.add(cand);
    result.push_back(cand);
  }
  return SetSystem(system.domain(), std::move(result), system.caps());
}

}  // namespace detail

namespace detail {

std::vector<Mask> missing_patterns(const SetSystem& system, Mask subset) {
  system.check_subset(subset);
  const int k = popcount(subset);
  if (k > 21)
    throw CapExceededError("missing-pattern scan over 2^" + std::to_string(k) +
                           " patterns is beyond desk scale");
  const std::uint64_t npat = std::uint64_t{1} << k;
  std::vector<std::uint64_t> seen(static_cast<std::size_t>((npat + 63) / 64), 0);
  for (Mask c : system.concepts()) {
    const Mask p = gather_bits(c, subset);
    seen[static_cast<std::size_t>(p >> 6)] |= std::uint64_t{1} << (p & 63);
  }
  std::vector<Mask> out;
  // Lexicographic order over length-k bit strings.
  for (std::uint64_t r = 0; r < npat; ++r) {
    const Mask p = mask_from_lex_rank(r, k);
    if (!((seen[static_cast<std::size_t>(p >> 6)] >> (p & 63)) & 1))
      out.push_back(p);
  }
  return out;
}

}  // namespace detail

ForbiddenLabel forbidden_label(const SetSystem& system, Mask witness_set) {
  return forbidden_label(system, certify_maximum(system), witness_set);
}

ForbiddenLabel forbidden_label(const SetSystem& system, MaximumCertificate cert,
                               Mask witness_set) {
  system.check_subset(witness_set);
  const int k = popcount(witness_set);
  if (k != cert.dimension + 1)
    throw PreconditionError("forbidden_label: witness set has " +
                            std::to_string(k) + " elements, expected d+1 = " +
                            std::to_string(cert.dimension + 1));
  const std::vector<Mask> missing = detail::missing_patterns(system, witness_set);
  if (missing.size() != 1)
    throw NotMaximumOnSetError(
        "witness set misses " + std::to_string(missing.size()) +
            " patterns instead of exactly one",
        static_cast<int>(missing.size()));
  ForbiddenLabel label;
  label.witness_set = witness_set;
  label.pattern = missing.front();
  label.forbidden_subset = scatter_bits(missing.front(), witness_set);
  return label;
}

std::vector<ForbiddenLabel> all_forbidden_labels(const SetSystem& system) {
  const MaximumCertificate cert = certify_maximum(system);
  const int m = cert.dimension + 1;
  if (m > system.n()) return {};
  const std::vector<Mask> combos = combinations(system.n(), m);
  std::vector<ForbiddenLabel> labels(combos.size());
  std::vector<int> status(combos.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(combos.size()); ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    const std::vector<Mask> missing =
        detail::missing_patterns(system, combos[idx]);
    if (missing.size() != 1) {
      status[idx] = static_cast<int>(missing.size()) + 1;  // distinguish 0
      continue;
    }
    labels[idx].witness_set = combos[idx];
    labels[idx].pattern = missing.front();
    labels[idx].forbidden_subset = scatter_bits(missing.front(), combos[idx]);
  }
  for (std::size_t i = 0; i < combos.size(); ++i) {
    if (status[i] != 0)
      throw NotMaximumOnSetError(
          "witness set misses " + std::to_string(status[i] - 1) +
              " patterns instead of exactly one",
          status[i] - 1);
  }
  return labels;
}

bool member_by_forbidden_labels(const SetSystem& system, Mask candidate) {
  const MaximumCertificate cert = certify_maximum(system);
  system.check_subset(candidate);
  const int m = cert.dimension + 1;
  if (m > system.n()) return true;  // maximum with d = n means C = 2^X
  for (CombinationGen g(system.n(), m); !g.done(); g.next()) {
    const std::vector<Mask> missing = detail::missing_patterns(system, g.mask());
    if (missing.size() == 1 && gather_bits(candidate, g.mask()) == missing.front())
      return false;
  }
  return true;
}

bool member_by_forbidden_labels(const std::vector<ForbiddenLabel>& labels,
                                Mask candidate) {
  for (const ForbiddenLabel& l : labels) {
    if (gather_bits(candidate, l.witness_set) == l.pattern) return false;
  }
  return true;
}

bool helly_consistent(const SetSystem& system, const PartialType& type) {
  certify_maximum(system);
  check_partial(system, type);
  for (Mask c : system.concepts()) {
    if ((c & type.support) == type.labels) return true;
  }
  return false;
}

}  // namespace vcsys
