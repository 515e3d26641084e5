#include "vcsys/compression.hpp"

#include <algorithm>

namespace vcsys {

bool realizable(const SetSystem& system, const PartialType& type) {
  check_partial(system, type);
  for (Mask c : system.concepts()) {
    if ((c & type.support) == type.labels) return true;
  }
  return false;
}

namespace {

bool internally_shatters_unchecked(const SetSystem& system,
                                   const PartialType& type, Mask shatter_set) {
  const Mask outside = type.support & ~shatter_set;
  const Mask outside_labels = type.labels & outside;
  const int k = popcount(shatter_set);
  if (k > 20 || (std::size_t{1} << k) > system.size()) return false;
  std::vector<std::uint64_t> seen((std::size_t{1} << k) / 64 + 1, 0);
  std::size_t count = 0;
  const std::size_t want = std::size_t{1} << k;
  for (Mask c : system.concepts()) {
    if ((c & outside) != outside_labels) continue;
    const Mask p = gather_bits(c, shatter_set);
    std::uint64_t& w = seen[static_cast<std::size_t>(p >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (p & 63);
    if (!(w & bit)) {
      w |= bit;
      if (++count == want) return true;
    }
  }
  return count == want;
}

}  // namespace

bool internally_shatters(const SetSystem& system, const PartialType& type,
                         Mask shatter_set) {
  if (!realizable(system, type))
    throw PreconditionError("partial type is not realizable");
  if ((shatter_set & ~type.support) != 0)
    throw PreconditionError("shatter set must lie inside the type's support");
  return internally_shatters_unchecked(system, type, shatter_set);
}

std::optional<Mask> find_internally_shattered(const SetSystem& system,
                                              const PartialType& type, int d) {
  if (d < 0) throw PreconditionError("dimension must be non-negative");
  if (!realizable(system, type))
    throw PreconditionError("partial type is not realizable");
  const int k = std::min(d, popcount(type.support));
  for (const Mask a : combinations_of(type.support, k)) {
    if (internally_shatters_unchecked(system, type, a)) return a;
  }
  return std::nullopt;
}

CompressionRecord compress_type(const SetSystem& system, const PartialType& type,
                                int d) {
  const std::optional<Mask> kept = find_internally_shattered(system, type, d);
  if (!kept)
    throw NotCompressibleError(
        "no internally shattered set of size min(d, |support|) exists");
  return CompressionRecord{*kept, type.labels & *kept};
}

namespace {

// True iff every pattern over `kept` is realized by a concept
// containing `element`.
bool meets_all_cells(const SetSystem& system, Mask kept, int element) {
  const int k = popcount(kept);
  if (k > 20) return false;
  const std::size_t want = std::size_t{1} << k;
  std::vector<std::uint64_t> seen(want / 64 + 1, 0);
  std::size_t count = 0;
  for (Mask c : system.concepts()) {
    if (!((c >> element) & Mask{1})) continue;
    const Mask p = gather_bits(c, kept);
    std::uint64_t& w = seen[static_cast<std::size_t>(p >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (p & 63);
    if (!(w & bit)) {
      w |= bit;
      if (++count == want) return true;
    }
  }
  return count == want;
}

}  // namespace

PartialType reconstruct_type(const SetSystem& system,
                             const CompressionRecord& record, Mask over) {
  system.check_subset(over);
  if ((record.kept & ~over) != 0)
    throw PreconditionError("reconstruction target must contain the kept set");
  PartialType out;
  out.support = over;
  out.labels = record.kept_labels;
  for (int b : mask_to_indices(over & ~record.kept)) {
    if (meets_all_cells(system, record.kept, b)) out.labels |= Mask{1} << b;
  }
  return out;
}

SchemeVerification verify_extended_compression(
    const SetSystem& system, int d, const Compressor& kappa,
    const std::vector<Reconstructor>& rhos) {
  SchemeVerification v;
  for (int size = 2; size <= system.n(); ++size) {
    for (CombinationGen g(system.n(), size); !g.done(); g.next()) {
      const Mask support = g.mask();
      const std::vector<Mask> pats =
          trace_patterns(std::span<const Mask>(system.concepts()), support);
      for (Mask pat : pats) {
        PartialType f;
        f.support = support;
        f.labels = scatter_bits(pat, support);
        const CompressionRecord rec = kappa(f);
        if ((rec.kept & ~support) != 0 || popcount(rec.kept) > d) {
          v.ok = false;
          v.counterexample = SchemeCounterexample{support, f.labels, 1};
          return v;
        }
        bool reconstructed = false;
        for (const Reconstructor& rho : rhos) {
          if ((rho(rec) & support) == f.labels) {
            reconstructed = true;
            break;
          }
        }
        if (!reconstructed) {
          v.ok = false;
          v.counterexample = SchemeCounterexample{support, f.labels, 2};
          return v;
        }
      }
    }
  }
  return v;
}

L2Scheme make_l2_scheme(const SetSystem& system, int d) {
  L2Scheme scheme;
  scheme.kappa = [&system, d](const PartialType& type) {
    return compress_type(system, type, d);
  };
  const std::size_t variants = std::size_t{1} << d;
  for (std::size_t eta = 0; eta < variants; ++eta) {
    scheme.rhos.push_back([&system, eta](const CompressionRecord& rec) {
      // Stamp this rho's own labeling onto the kept positions (the
      // record's labels are deliberately ignored), then fill every
      // other element by the all-cells test.
      const Mask kept_labels = scatter_bits(static_cast<Mask>(eta), rec.kept);
      Mask out = kept_labels;
      for (int b = 0; b < system.n(); ++b) {
        if ((rec.kept >> b) & Mask{1}) continue;
        if (meets_all_cells(system, rec.kept, b)) out |= Mask{1} << b;
      }
      return out;
    });
  }
  return scheme;
}

std::vector<int> rectangle_compress(const PointConfig& config, const Rect& rect) {
  int top = -1, left = -1, right = -1, low = -1;
  for (int i = 0; i < config.size(); ++i) {
    const Point& p = config.at(i);
    if (!rect.contains(p)) continue;
    if (top < 0 || p.y > config.at(top).y) top = i;
    if (left < 0 || p.x < config.at(left).x) left = i;
    if (right < 0 || p.x > config.at(right).x) right = i;
    if (low < 0 || p.y < config.at(low).y) low = i;
  }
  std::vector<int> s;
  for (int i : {top, left, right, low}) {
    if (i >= 0) s.push_back(i);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<Rect> rectangle_reconstruct(const PointConfig& config,
                                          const std::vector<int>& points) {
  if (points.empty()) return std::nullopt;
  Rect r{config.at(points[0]).x, config.at(points[0]).x, config.at(points[0]).y,
         config.at(points[0]).y};
  for (int i : points) {
    const Point& p = config.at(i);
    r.x_lo = std::min(r.x_lo, p.x);
    r.x_hi = std::max(r.x_hi, p.x);
    r.y_lo = std::min(r.y_lo, p.y);
    r.y_hi = std::max(r.y_hi, p.y);
  }
  return r;
}

}  // namespace vcsys
