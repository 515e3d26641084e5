#include "vcsys/set_system.hpp"

#include <algorithm>
#include <cctype>

namespace vcsys {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Domain::Domain(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("domain must have at least one element");
  if (static_cast<int>(elements_.size()) > kMaxDomainBits)
    throw CapExceededError("domain has " + std::to_string(elements_.size()) +
                           " elements; the structural limit is 64");
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const std::string& e = elements_[i];
    if (!valid_identifier(e))
      throw Error("invalid element identifier '" + e + "'");
    if (!index_.emplace(e, static_cast<int>(i)).second)
      throw Error("duplicate element identifier '" + e + "'");
  }
}

std::optional<int> Domain::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Mask Domain::subset_of(std::span<const std::string> names) const {
  Mask m = 0;
  for (const std::string& name : names) {
    auto idx = index_of(name);
    if (!idx)
      throw DomainMismatchError("element '" + name + "' is not in the domain");
    m |= Mask{1} << *idx;
  }
  return m;
}

std::vector<std::string> Domain::names_of(Mask subset) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(popcount(subset)));
  for (int i : mask_to_indices(subset)) out.push_back(name(i));
  return out;
}

SetSystem::SetSystem(Domain domain, std::vector<Mask> concepts, Caps caps)
    : domain_(std::move(domain)), concepts_(std::move(concepts)), caps_(caps) {
  if (domain_.size() > caps_.max_domain)
    throw CapExceededError("domain size " + std::to_string(domain_.size()) +
                           " exceeds the cap of " + std::to_string(caps_.max_domain));
  if (concepts_.empty())
    throw Error("a set system must contain at least one concept");
  if (concepts_.size() > caps_.max_concepts)
    throw CapExceededError("concept count " + std::to_string(concepts_.size()) +
                           " exceeds the cap of " + std::to_string(caps_.max_concepts));
  const Mask full = domain_.full_mask();
  for (Mask c : concepts_) {
    if ((c & ~full) != 0)
      throw DomainMismatchError("concept uses bits outside the domain");
  }
  std::sort(concepts_.begin(), concepts_.end(), LexLess{});
  auto dup = std::adjacent_find(concepts_.begin(), concepts_.end());
  if (dup != concepts_.end())
    throw Error("duplicate concept contents are a hard error");
}

bool SetSystem::contains(Mask concept_mask) const {
  return std::binary_search(concepts_.begin(), concepts_.end(), concept_mask,
                            LexLess{});
}

void SetSystem::check_subset(Mask subset) const {
  if ((subset & ~full_mask()) != 0)
    throw DomainMismatchError("subset uses elements outside the domain");
}

void check_partial(const SetSystem& system, const PartialType& type) {
  system.check_subset(type.support);
  if ((type.labels & ~type.support) != 0)
    throw DomainMismatchError("labels outside the support of the partial type");
}

std::vector<Mask> trace_patterns(std::span<const Mask> concepts, Mask subset) {
  std::vector<Mask> pats;
  pats.reserve(concepts.size());
  for (Mask c : concepts) pats.push_back(gather_bits(c, subset));
  std::sort(pats.begin(), pats.end(), LexLess{});
  pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
  return pats;
}

std::size_t trace_count(std::span<const Mask> concepts, Mask subset) {
  const int k = popcount(subset);
  // More patterns than concepts is impossible, so a small subset can be
  // counted with a bitmap; large subsets fall back to sort-unique.
  if (k <= 20) {
    std::vector<std::uint64_t> seen((std::size_t{1} << k) / 64 + 1, 0);
    std::size_t count = 0;
    for (Mask c : concepts) {
      const Mask p = gather_bits(c, subset);
      std::uint64_t& word = seen[static_cast<std::size_t>(p >> 6)];
      const std::uint64_t bit = std::uint64_t{1} << (p & 63);
      if (!(word & bit)) {
        word |= bit;
        ++count;
      }
    }
    return count;
  }
  return trace_patterns(concepts, subset).size();
}

std::size_t trace_count(const SetSystem& system, Mask subset) {
  system.check_subset(subset);
  return trace_count(std::span<const Mask>(system.concepts()), subset);
}

Trace restrict(const SetSystem& system, Mask subset) {
  system.check_subset(subset);
  Trace t;
  t.sub_elements = system.domain().names_of(subset);
  t.patterns = trace_patterns(std::span<const Mask>(system.concepts()), subset);
  return t;
}

SetSystem dual(const SetSystem& system) { return dual(system, system.caps()); }

SetSystem dual(const SetSystem& system, Caps caps) {
  const std::size_t m = system.size();
  if (m > static_cast<std::size_t>(kMaxDomainBits))
    throw CapExceededError(
        "dual needs one domain element per concept; " + std::to_string(m) +
        " concepts exceed the structural limit of 64");
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));

  std::vector<Mask> rows;
  rows.reserve(static_cast<std::size_t>(system.n()));
  for (int i = 0; i < system.n(); ++i) {
    Mask row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((system.concepts()[j] >> i) & Mask{1}) row |= Mask{1} << j;
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), LexLess{});
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return SetSystem(Domain(std::move(names)), std::move(rows), caps);
}

SetSystem delta_shift(const SetSystem& system, Mask b) {
  system.check_subset(b);
  std::vector<Mask> shifted;
  shifted.reserve(system.size());
  for (Mask c : system.concepts()) shifted.push_back(c ^ b);
  return SetSystem(system.domain(), std::move(shifted), system.caps());
}

SetSystem trace_as_system(const Trace& trace, Caps caps) {
  return SetSystem(Domain(trace.sub_elements), trace.patterns, caps);
}

}  // namespace vcsys
