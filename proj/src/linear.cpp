#include "vcsys/linear.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "vcsys/errors.hpp"

namespace vcsys {

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Rational inv = m[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / inv;
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool system_solvable(const RationalMatrix& a, const RationalRow& b) {
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  return matrix_rank(a) == matrix_rank(std::move(aug));
}

namespace {

// Scales a constraint so its first nonzero entry is ±1; gives a
// canonical representative for deduplication.
void normalize(LinConstraint& c) {
  Rational scale = 0;
  for (const Rational& v : c.coeffs) {
    if (v != 0) {
      scale = abs(v);
      break;
    }
  }
  if (scale == 0) {
    if (c.constant != 0) scale = abs(c.constant);
  }
  if (scale == 0 || scale == 1) return;
  for (Rational& v : c.coeffs) v /= scale;
  c.constant /= scale;
}

// Deduplicates, keeping the strict variant when both appear (it
// subsumes the non-strict one).
void dedup(std::vector<LinConstraint>& cs) {
  std::map<std::pair<RationalRow, Rational>, bool> seen;
  for (LinConstraint& c : cs) {
    normalize(c);
    auto key = std::make_pair(c.coeffs, c.constant);
    auto it = seen.find(key);
    if (it == seen.end())
      seen.emplace(std::move(key), c.strict);
    else
      it->second = it->second || c.strict;
  }
  cs.clear();
  for (auto& [key, strict] : seen)
    cs.push_back(LinConstraint{key.first, key.second, strict});
}

}  // namespace

bool feasible(std::vector<LinConstraint> constraints, int nvars) {
  constexpr std::size_t kBlowupGuard = 200'000;

  for (int v = 0; v < nvars; ++v) {
    dedup(constraints);
    std::vector<LinConstraint> pos, neg, rest;
    for (LinConstraint& c : constraints) {
      const Rational& a = c.coeffs[static_cast<std::size_t>(v)];
      if (a > 0)
        pos.push_back(std::move(c));
      else if (a < 0)
        neg.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    if (pos.size() * neg.size() + rest.size() > kBlowupGuard)
      throw CapExceededError("inequality elimination blew up beyond desk scale");
    for (const LinConstraint& p : pos) {
      const Rational a = p.coeffs[static_cast<std::size_t>(v)];
      for (const LinConstraint& q : neg) {
        const Rational mb = -q.coeffs[static_cast<std::size_t>(v)];  // > 0
        LinConstraint combined;
        combined.coeffs.resize(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i) {
          const std::size_t si = static_cast<std::size_t>(i);
          combined.coeffs[si] = a * q.coeffs[si] + mb * p.coeffs[si];
        }
        combined.constant = a * q.constant + mb * p.constant;
        combined.strict = p.strict || q.strict;
        rest.push_back(std::move(combined));
      }
    }
    constraints = std::move(rest);

    // Constant rows can be decided immediately.
    std::vector<LinConstraint> remaining;
    for (LinConstraint& c : constraints) {
      bool all_zero = true;
      for (const Rational& x : c.coeffs) {
        if (x != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        if (c.strict ? !(c.constant > 0) : !(c.constant >= 0)) return false;
      } else {
        remaining.push_back(std::move(c));
      }
    }
    constraints = std::move(remaining);
  }

  for (const LinConstraint& c : constraints) {
    if (c.strict ? !(c.constant > 0) : !(c.constant >= 0)) return false;
  }
  return true;
}

}  // namespace vcsys
