#pragma once

// Finite permutation groups stored as explicit element lists.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "galchar/permutation.hpp"

namespace galchar {

inline constexpr std::size_t kDefaultElementCap = 20000;

class FiniteGroup {
 public:
  using Index = std::uint32_t;

  /// Closure of the generators. Elements are listed breadth-first from the
  /// identity, multiplying each element on the right by the generators in
  /// the given order, so the identity always has index 0.
  /// Throws SizeError once more than element_cap elements are found.
  static FiniteGroup generate(std::size_t degree, std::vector<Permutation> generators,
                              std::size_t element_cap = kDefaultElementCap);

  /// Group with an explicitly supplied element list (must be closed and
  /// start with the identity). Generators are picked greedily in list order.
  static FiniteGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& element(Index i) const { return elements_[i]; }
  static constexpr Index identity() noexcept { return 0; }

  std::optional<Index> index_of(const Permutation& p) const;
  /// Like index_of but throws DomainError when p is not an element.
  Index require_index(const Permutation& p) const;

  Index mul(Index a, Index b) const;
  Index inv(Index a) const noexcept { return inverses_[a]; }
  Index pow(Index a, long long e) const;
  /// b^-1 a b
  Index conjugate(Index a, Index by) const { return mul(mul(inv(by), a), by); }

  unsigned element_order(Index a) const noexcept { return orders_[a]; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index> index_;
  std::vector<Index> inverses_;
  std::vector<unsigned> orders_;
  unsigned exponent_ = 1;
  std::vector<Index> table_;  // full multiplication table for small groups
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyClass {
  FiniteGroup::Index representative;  // member with the smallest index
  std::vector<FiniteGroup::Index> members;  // sorted
  unsigned element_order;
  std::string name;  // element order plus a letter, e.g. "5b"
};

/// Conjugacy classes ordered by (element order, size, representative index).
class ConjugacyClassSet {
 public:
  explicit ConjugacyClassSet(const FiniteGroup& group);

  std::size_t size() const noexcept { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(FiniteGroup::Index element) const { return class_of_[element]; }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline ConjugacyClassSet conjugacy_classes(const FiniteGroup& g) { return ConjugacyClassSet(g); }

/// {k : kg = gk}, listed in the order the elements have in G.
FiniteGroup centralizer(const FiniteGroup& group, FiniteGroup::Index g);

inline unsigned element_order(const FiniteGroup& group, FiniteGroup::Index g) { return group.element_order(g); }
inline unsigned exponent(const FiniteGroup& group) { return group.exponent(); }

/// Class index i -> class of (rep_i)^ell; ell is reduced modulo the exponent.
std::vector<std::size_t> power_map_on_classes(const FiniteGroup& group, const ConjugacyClassSet& classes,
                                              long long ell);

/// S<k> (k<=7), A<k> (k<=7), Z<k>, D<k> and Q8 as permutation groups.
FiniteGroup builtin(std::string_view name, std::size_t element_cap = kDefaultElementCap);

/// Subgroup generated by some elements, as element indices of the parent in BFS order.
std::vector<FiniteGroup::Index> generated_subgroup(const FiniteGroup& group,
                                                   const std::vector<FiniteGroup::Index>& gens);

}  // namespace galchar
