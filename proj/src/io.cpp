#include "vcsys/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>

namespace vcsys {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based column of the first character
};

// Splits a line into whitespace-separated tokens, tracking columns and
// dropping `#` comments.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

SetSystem parse_ssys(const std::string& text, Caps caps) {
  const std::vector<std::string> lines = split_lines(text);

  std::optional<Domain> domain;
  std::vector<Mask> concepts;
  std::map<std::string, int> names;       // concept name -> line
  std::map<Mask, int> contents;           // concept mask -> line

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    const std::vector<Token> tok = tokenize(lines[li]);
    if (tok.empty()) continue;

    if (!domain) {
      if (tok[0].text != "domain:")
        throw ParseError("expected 'domain:' as the first directive", lineno,
                         tok[0].col);
      if (tok.size() == 1)
        throw ParseError("domain line lists no elements", lineno,
                         tok[0].col + static_cast<int>(tok[0].text.size()));
      std::vector<std::string> elems;
      for (std::size_t t = 1; t < tok.size(); ++t) elems.push_back(tok[t].text);
      try {
        domain.emplace(std::move(elems));
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, tok[1].col);
      }
      continue;
    }

    if (tok[0].text != "concept")
      throw ParseError("expected 'concept NAME: ...'", lineno, tok[0].col);
    if (tok.size() < 2 || tok[1].text.empty() || tok[1].text.back() != ':')
      throw ParseError("concept name must be followed by ':'", lineno,
                       tok.size() < 2 ? tok[0].col : tok[1].col);
    const std::string name = tok[1].text.substr(0, tok[1].text.size() - 1);
    if (name.empty())
      throw ParseError("empty concept name", lineno, tok[1].col);
    if (!names.emplace(name, lineno).second)
      throw ParseError("duplicate concept name '" + name + "'", lineno, tok[1].col);

    Mask mask = 0;
    if (tok.size() == 3 && tok[2].text == "-") {
      // empty concept
    } else {
      if (tok.size() == 2)
        throw ParseError("concept lists no elements; use '-' for the empty set",
                         lineno, tok[1].col + static_cast<int>(tok[1].text.size()));
      for (std::size_t t = 2; t < tok.size(); ++t) {
        auto idx = domain->index_of(tok[t].text);
        if (!idx)
          throw ParseError("unknown element '" + tok[t].text + "'", lineno,
                           tok[t].col);
        const Mask bit = Mask{1} << *idx;
        if (mask & bit)
          throw ParseError("element '" + tok[t].text + "' repeated in concept",
                           lineno, tok[t].col);
        mask |= bit;
      }
    }
    auto ins = contents.emplace(mask, lineno);
    if (!ins.second)
      throw ParseError("duplicate concept contents (first at line " +
                           std::to_string(ins.first->second) + ")",
                       lineno, tok[0].col);
    concepts.push_back(mask);
  }

  if (!domain) throw ParseError("no domain line found", 1, 1);
  if (concepts.empty()) throw ParseError("no concepts found", 1, 1);
  try {
    return SetSystem(std::move(*domain), std::move(concepts), caps);
  } catch (const CapExceededError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string serialize_ssys(const SetSystem& system) {
  std::ostringstream out;
  out << "domain:";
  for (const std::string& e : system.domain().elements()) out << ' ' << e;
  out << '\n';
  for (std::size_t i = 0; i < system.size(); ++i) {
    out << "concept c" << i << ':';
    const Mask c = system.concepts()[i];
    if (c == 0) {
      out << " -";
    } else {
      for (int idx : mask_to_indices(c)) out << ' ' << system.domain().name(idx);
    }
    out << '\n';
  }
  return out.str();
}

SetSystem parse_mat(const std::string& text, Caps caps) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t li = 0;
  auto next_significant = [&]() -> std::optional<std::size_t> {
    while (li < lines.size()) {
      if (!tokenize(lines[li]).empty()) return li;
      ++li;
    }
    return std::nullopt;
  };

  auto header_line = next_significant();
  if (!header_line) throw ParseError("empty matrix input", 1, 1);
  const std::vector<Token> head = tokenize(lines[*header_line]);
  long m = -1, n = -1;
  for (const Token& t : head) {
    if (t.text.rfind("concepts=", 0) == 0)
      m = std::strtol(t.text.c_str() + 9, nullptr, 10);
    else if (t.text.rfind("elements=", 0) == 0)
      n = std::strtol(t.text.c_str() + 9, nullptr, 10);
    else
      throw ParseError("unexpected header token '" + t.text + "'",
                       static_cast<int>(*header_line) + 1, t.col);
  }
  if (m <= 0 || n <= 0)
    throw ParseError("header must read 'concepts=<m> elements=<n>'",
                     static_cast<int>(*header_line) + 1, 1);
  ++li;

  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Mask> concepts;
  std::map<Mask, int> contents;
  for (long row = 0; row < m; ++row) {
    auto rl = next_significant();
    if (!rl)
      throw ParseError("expected " + std::to_string(m) + " rows, got " +
                           std::to_string(row),
                       static_cast<int>(lines.size()) + 1, 1);
    const std::vector<Token> tok = tokenize(lines[*rl]);
    const int lineno = static_cast<int>(*rl) + 1;
    if (tok.size() != 1)
      throw ParseError("matrix row must be a single 0/1 string", lineno,
                       tok.size() > 1 ? tok[1].col : 1);
    const std::string& bits = tok[0].text;
    if (static_cast<long>(bits.size()) != n)
      throw ParseError("row has " + std::to_string(bits.size()) +
                           " characters, expected " + std::to_string(n),
                       lineno, tok[0].col);
    Mask mask = 0;
    for (long j = 0; j < n; ++j) {
      const char ch = bits[static_cast<std::size_t>(j)];
      if (ch == '1')
        mask |= Mask{1} << j;
      else if (ch != '0')
        throw ParseError(std::string("invalid character '") + ch + "' in row",
                         lineno, tok[0].col + static_cast<int>(j));
    }
    auto ins = contents.emplace(mask, lineno);
    if (!ins.second)
      throw ParseError("duplicate concept contents (first at line " +
                           std::to_string(ins.first->second) + ")",
                       lineno, tok[0].col);
    concepts.push_back(mask);
    ++li;
  }
  if (next_significant())
    throw ParseError("unexpected trailing content", static_cast<int>(li) + 1, 1);
  try {
    return SetSystem(Domain(std::move(names)), std::move(concepts), caps);
  } catch (const CapExceededError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string serialize_mat(const SetSystem& system) {
  std::ostringstream out;
  out << "concepts=" << system.size() << " elements=" << system.n() << '\n';
  for (Mask c : system.concepts()) {
    for (int j = 0; j < system.n(); ++j) out << (((c >> j) & 1) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

SetSystem parse_auto(const std::string& text, Caps caps) {
  for (const std::string& line : split_lines(text)) {
    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0].text == "domain:") return parse_ssys(text, caps);
    if (tok[0].text.rfind("concepts=", 0) == 0) return parse_mat(text, caps);
    throw ParseError("unrecognized input format", 1, tok[0].col);
  }
  throw ParseError("empty input", 1, 1);
}

}  // namespace vcsys
