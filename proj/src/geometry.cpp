#include "vcsys/geometry.hpp"

#include <cctype>
#include <sstream>

namespace vcsys {

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error("point configuration must be non-empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j])
        throw Error("points " + std::to_string(i) + " and " + std::to_string(j) +
                    " coincide");
    }
  }
}

Rect make_rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi) {
  if (x_lo > x_hi || y_lo > y_hi)
    throw PreconditionError("rectangle bounds must satisfy lo <= hi");
  return Rect{std::move(x_lo), std::move(x_hi), std::move(y_lo), std::move(y_hi)};
}

namespace {

Rational parse_rational(const std::string& tok, int line, int col) {
  const std::size_t slash = tok.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(tok));
    const std::string num = tok.substr(0, slash);
    const std::string den = tok.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::runtime_error("empty part");
    const BigInt d(den);
    if (d == 0) throw ParseError("zero denominator", line, col);
    return Rational(BigInt(num), d);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("invalid rational '" + tok + "'", line, col);
  }
}

}  // namespace

PointConfig parse_pts(const std::string& text) {
  std::vector<Point> points;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comment.
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);

    std::vector<std::pair<std::string, int>> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      toks.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError("expected 'x y' per line", lineno,
                       toks.size() > 2 ? toks[2].second : toks[0].second);
    Point p;
    p.x = parse_rational(toks[0].first, lineno, toks[0].second);
    p.y = parse_rational(toks[1].first, lineno, toks[1].second);
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError("no points found", lineno > 0 ? lineno : 1, 1);
  try {
    return PointConfig(std::move(points));
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

std::string serialize_pts(const PointConfig& config) {
  std::ostringstream out;
  for (const Point& p : config.points())
    out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  return out.str();
}

}  // namespace vcsys
