#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vcsys/bits.hpp"
#include "vcsys/errors.hpp"

namespace vcsys {

// Size policy for construction.  Everything downstream is exponential,
// so systems are kept at desk scale unless the caller raises the caps.
// The 64-element structural limit comes from the mask representation
// and cannot be raised.
struct Caps {
  int max_domain = 24;
  std::size_t max_concepts = std::size_t{1} << 20;
};

// An ordered ground set of distinct identifiers.  The order is fixed at
// construction and defines every bit position and lexicographic
// tie-break in the library.
class Domain {
public:
  explicit Domain(std::vector<std::string> elements);

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& name(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(std::string_view name) const;

  Mask full_mask() const noexcept { return mask_all(size()); }

  // Resolves element names to a subset mask; unknown names raise
  // DomainMismatchError.
  Mask subset_of(std::span<const std::string> names) const;

  std::vector<std::string> names_of(Mask subset) const;

  bool operator==(const Domain& other) const noexcept {
    return elements_ == other.elements_;
  }

private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
};

// A finite family of concepts over a Domain.  Concepts are stored in
// ascending lexicographic bit-string order, deduplicated and nonempty
// as a family; every value is immutable after construction.
class SetSystem {
public:
  SetSystem(Domain domain, std::vector<Mask> concepts, Caps caps = {});

  const Domain& domain() const noexcept { return domain_; }
  int n() const noexcept { return domain_.size(); }
  const std::vector<Mask>& concepts() const noexcept { return concepts_; }
  std::size_t size() const noexcept { return concepts_.size(); }
  Mask full_mask() const noexcept { return domain_.full_mask(); }
  const Caps& caps() const noexcept { return caps_; }

  bool contains(Mask concept_mask) const;

  // Raises DomainMismatchError unless subset fits inside the domain.
  void check_subset(Mask subset) const;

  bool operator==(const SetSystem& other) const noexcept {
    return domain_ == other.domain_ && concepts_ == other.concepts_;
  }

private:
  Domain domain_;
  std::vector<Mask> concepts_;
  Caps caps_;
};

// The family {c ∩ A : c ∈ C} after deduplication.  Patterns are masks
// over the |A| chosen positions, in canonical order of A's elements.
struct Trace {
  std::vector<std::string> sub_elements;
  std::vector<Mask> patterns;  // deduplicated, lex-sorted over |A| bits

  std::size_t count() const noexcept { return patterns.size(); }
  bool operator==(const Trace& other) const noexcept {
    return sub_elements == other.sub_elements && patterns == other.patterns;
  }
};

// A labeling of a subset of the ground set.  labels ⊆ support, both
// masks over the parent domain.
struct PartialType {
  Mask support = 0;
  Mask labels = 0;
};

// Validates a PartialType against a system's domain.
void check_partial(const SetSystem& system, const PartialType& type);

Trace restrict(const SetSystem& system, Mask subset);

// Number of distinct patterns of C on `subset`, without materializing
// the trace.
std::size_t trace_count(const SetSystem& system, Mask subset);
std::size_t trace_count(std::span<const Mask> concepts, Mask subset);

// Deduplicated, lex-sorted compact patterns of `concepts` on `subset`.
std::vector<Mask> trace_patterns(std::span<const Mask> concepts, Mask subset);

// Ground set of the result = the concepts of the input (identifier
// "cK" for canonical index K); concept for each input element x is
// {c : x ∈ c}, with duplicate rows deduplicated.  Needs the concept
// count to fit the domain cap, so pass raised caps for large inputs.
SetSystem dual(const SetSystem& system);
SetSystem dual(const SetSystem& system, Caps caps);

// Replaces every concept c by c Δ B.  Injective, so the concept count
// is preserved; an involution for fixed B.
SetSystem delta_shift(const SetSystem& system, Mask b);

// Builds a standalone system from a trace (requires |A| >= 1).
SetSystem trace_as_system(const Trace& trace, Caps caps = {});

}  // namespace vcsys
