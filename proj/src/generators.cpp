#include "vcsys/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "vcsys/vc.hpp"

namespace vcsys {

Domain chain_domain(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Domain(std::move(names));
}

namespace {

Domain point_domain(int m) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) names.push_back("p" + std::to_string(i));
  return Domain(std::move(names));
}

void require_enumerable(int n, const char* op) {
  if (n > 26)
    throw CapExceededError(std::string(op) + " enumerates 2^" +
                           std::to_string(n) + " labelings; beyond desk scale");
}

int run_count(Mask m) { return popcount(m & ~(m << 1)); }

std::string subset_string(const std::vector<int>& subset) {
  std::ostringstream out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out << ',';
    out << subset[i];
  }
  return out.str();
}

}  // namespace

SetSystem gen_k_subsets(int n, int d, Caps caps) {
  if (n < 1 || d < 0 || d > n)
    throw PreconditionError("gen_k_subsets needs 0 <= d <= n, n >= 1");
  std::vector<Mask> concepts;
  for (int k = 0; k <= d; ++k) {
    for (CombinationGen g(n, k); !g.done(); g.next()) concepts.push_back(g.mask());
  }
  return SetSystem(chain_domain(n), std::move(concepts), caps);
}

SetSystem gen_nonempty_k_subsets(int n, int d, Caps caps) {
  if (d < 1 || d >= n)
    throw PreconditionError("gen_nonempty_k_subsets needs 1 <= d < n");
  std::vector<Mask> concepts;
  for (int k = 1; k <= d; ++k) {
    for (CombinationGen g(n, k); !g.done(); g.next()) concepts.push_back(g.mask());
  }
  return SetSystem(chain_domain(n), std::move(concepts), caps);
}

SetSystem gen_interval_unions(int n, int m, Caps caps) {
  if (n < 1 || m < 1)
    throw PreconditionError("gen_interval_unions needs n >= 1 and m >= 1");
  require_enumerable(n, "gen_interval_unions");
  std::vector<Mask> concepts;
  const Mask total = mask_all(n);
  for (Mask c = 0;; ++c) {
    if (run_count(c) <= m) concepts.push_back(c);
    if (c == total) break;
  }
  return SetSystem(chain_domain(n), std::move(concepts), caps);
}

SetSystem gen_prefixes(int n, Caps caps) {
  if (n < 1) throw PreconditionError("gen_prefixes needs n >= 1");
  std::vector<Mask> concepts;
  for (int k = 0; k <= n; ++k) concepts.push_back(mask_all(k));
  return SetSystem(chain_domain(n), std::move(concepts), caps);
}

GpReport validate_general_position(const PointConfig& config,
                                   const LinearFamilySpec& spec) {
  const int m = config.size();
  const int n = spec.dims();
  if (n < 1) throw Error("basis must have at least one column");
  if (static_cast<int>(spec.basis_values.size()) != m ||
      static_cast<int>(spec.f0_values.size()) != m)
    throw Error("spec rows do not match the point configuration");
  for (const RationalRow& row : spec.basis_values) {
    if (static_cast<int>(row.size()) != n) throw Error("ragged basis matrix");
  }

  GpReport report;
  for (CombinationGen g(m, n); !g.done(); g.next()) {
    RationalMatrix sub;
    for (int i : g.indices())
      sub.push_back(spec.basis_values[static_cast<std::size_t>(i)]);
    if (matrix_rank(std::move(sub)) != n) {
      report.ok = false;
      report.kind = GpViolation::rank_deficient;
      report.subset = g.indices();
      return report;
    }
  }
  for (CombinationGen g(m, n + 1); !g.done(); g.next()) {
    RationalMatrix sub;
    RationalRow rhs;
    for (int i : g.indices()) {
      sub.push_back(spec.basis_values[static_cast<std::size_t>(i)]);
      rhs.push_back(spec.f0_values[static_cast<std::size_t>(i)]);
    }
    if (system_solvable(sub, rhs)) {
      report.ok = false;
      report.kind = GpViolation::interpolated;
      report.subset = g.indices();
      return report;
    }
  }
  return report;
}

namespace {

// Sign-pattern DFS: fixes the strict sign of f0(x_i) - f(x_i) point by
// point and prunes by exact feasibility of the accumulated system over
// the basis coefficients.
void pos_family_dfs(const LinearFamilySpec& spec, int next,
                    std::vector<LinConstraint>& active, Mask pattern,
                    std::vector<Mask>& out) {
  const int m = static_cast<int>(spec.f0_values.size());
  const int n = spec.dims();
  if (!feasible(active, n)) return;
  if (next == m) {
    out.push_back(pattern);
    return;
  }

  // f0 - f > 0 at this point: -basis·w + f0 > 0.
  LinConstraint pos;
  pos.coeffs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    pos.coeffs[static_cast<std::size_t>(j)] =
        -spec.basis_values[static_cast<std::size_t>(next)][static_cast<std::size_t>(j)];
  pos.constant = spec.f0_values[static_cast<std::size_t>(next)];
  pos.strict = true;

  // f0 - f <= 0: basis·w - f0 >= 0.
  LinConstraint neg;
  neg.coeffs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    neg.coeffs[static_cast<std::size_t>(j)] =
        spec.basis_values[static_cast<std::size_t>(next)][static_cast<std::size_t>(j)];
  neg.constant = -spec.f0_values[static_cast<std::size_t>(next)];
  neg.strict = false;

  active.push_back(std::move(pos));
  pos_family_dfs(spec, next + 1, active, pattern | (Mask{1} << next), out);
  active.pop_back();

  active.push_back(std::move(neg));
  pos_family_dfs(spec, next + 1, active, pattern, out);
  active.pop_back();
}

}  // namespace

SetSystem gen_pos_family(const PointConfig& config, const LinearFamilySpec& spec,
                         Caps caps) {
  const GpReport gp = validate_general_position(config, spec);
  if (!gp.ok) {
    throw PreconditionError(
        std::string("general-position violation: ") +
        (gp.kind == GpViolation::rank_deficient
             ? "rank-deficient basis on points "
             : "f0 interpolated by the span on points ") +
        subset_string(gp.subset));
  }
  std::vector<Mask> patterns;
  std::vector<LinConstraint> active;
  pos_family_dfs(spec, 0, active, 0, patterns);
  return SetSystem(point_domain(config.size()), std::move(patterns), caps);
}

LinearFamilySpec circle_spec(const PointConfig& config) {
  LinearFamilySpec spec;
  for (const Point& p : config.points()) {
    spec.basis_values.push_back({p.y, p.x, Rational(1)});
    spec.f0_values.push_back(-p.x * p.x - p.y * p.y);
  }
  return spec;
}

LinearFamilySpec threshold_spec(const PointConfig& config) {
  LinearFamilySpec spec;
  for (const Point& p : config.points()) {
    spec.basis_values.push_back({Rational(1)});
    spec.f0_values.push_back(p.x);
  }
  return spec;
}

LinearFamilySpec parabola_spec(const PointConfig& config) {
  LinearFamilySpec spec;
  for (const Point& p : config.points()) {
    spec.basis_values.push_back({p.y, p.x, Rational(1)});
    spec.f0_values.push_back(p.x * p.x);
  }
  return spec;
}

SetSystem gen_circles(const PointConfig& config, Caps caps) {
  return gen_pos_family(config, circle_spec(config), caps);
}

SetSystem gen_rectangles(const PointConfig& config, Caps caps) {
  const int m = config.size();
  std::vector<Rational> xs, ys;
  for (const Point& p : config.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::set<Mask> traces;
  traces.insert(0);  // the empty rectangle sentinel
  for (std::size_t xl = 0; xl < xs.size(); ++xl) {
    for (std::size_t xh = xl; xh < xs.size(); ++xh) {
      for (std::size_t yl = 0; yl < ys.size(); ++yl) {
        for (std::size_t yh = yl; yh < ys.size(); ++yh) {
          const Rect r{xs[xl], xs[xh], ys[yl], ys[yh]};
          Mask t = 0;
          for (int i = 0; i < m; ++i) {
            if (r.contains(config.at(i))) t |= Mask{1} << i;
          }
          traces.insert(t);
        }
      }
    }
  }
  return SetSystem(point_domain(m),
                   std::vector<Mask>(traces.begin(), traces.end()), caps);
}

SetSystem gen_random_maximal(int n, int d, std::uint64_t seed, Caps caps) {
  if (n < 1 || d < 0 || d >= n)
    throw PreconditionError("gen_random_maximal needs 0 <= d < n");
  require_enumerable(n, "gen_random_maximal");

  std::vector<Mask> order;
  order.reserve(std::size_t{1} << n);
  const Mask total = mask_all(n);
  for (Mask c = 0;; ++c) {
    order.push_back(c);
    if (c == total) break;
  }
  // Fisher–Yates with modulo-bounded draws; fully determined by the
  // seed across platforms since mt19937_64 is pinned by the standard.
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const SetSystem start(chain_domain(n), {0}, caps);
  return detail::greedy_complete(start, d, order);
}

}  // namespace vcsys
