#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcsys/errors.hpp"
#include "vcsys/numbers.hpp"

namespace vcsys {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& other) const {
    return x == other.x && y == other.y;
  }
};

// Planar points with exact rational coordinates.  Canonical order is
// input order; points must be pairwise distinct.
class PointConfig {
public:
  explicit PointConfig(std::vector<Point> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& at(int i) const { return points_.at(static_cast<std::size_t>(i)); }

private:
  std::vector<Point> points_;
};

// A closed axis-parallel rectangle with rational bounds.
struct Rect {
  Rational x_lo, x_hi, y_lo, y_hi;

  bool contains(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
};

// Validates x_lo <= x_hi and y_lo <= y_hi.
Rect make_rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);

// `.pts` format: one point per line, `x_num/x_den y_num/y_den` with
// `/1` omissible; `#` starts a comment.
PointConfig parse_pts(const std::string& text);
std::string serialize_pts(const PointConfig& config);

std::string to_string(const Rational& r);

}  // namespace vcsys
