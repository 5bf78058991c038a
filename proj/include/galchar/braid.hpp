#pragma once

// Commuting pairs up to simultaneous conjugation, the right SL2(Z) action
// (g,h).(a b; c d) = (g^a h^c, g^b h^d), and the braid group B3 acting on
// pairs and on triples.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "galchar/group.hpp"

namespace galchar {

using Index = FiniteGroup::Index;

struct ElementPair {
  Index first;
  Index second;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
  friend auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

struct ElementTriple {
  Index x, y, z;
  friend bool operator==(const ElementTriple&, const ElementTriple&) = default;
};

inline constexpr std::size_t kDefaultPairGroupCap = 2000;

struct PairClass {
  ElementPair representative;  // lexicographically least member
  std::vector<ElementPair> members;
};

class PairClassSet {
 public:
  PairClassSet(GroupPtr group, std::vector<PairClass> classes);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const PairClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<PairClass>& classes() const noexcept { return classes_; }
  /// Throws DomainError for a non-commuting pair.
  std::size_t class_of(ElementPair p) const;
  std::size_t commuting_pair_count() const noexcept { return class_of_.size(); }

 private:
  static std::uint64_t key(ElementPair p) { return (std::uint64_t{p.first} << 32U) | p.second; }

  GroupPtr group_;
  std::vector<PairClass> classes_;
  std::unordered_map<std::uint64_t, std::size_t> class_of_;
};

/// Commuting pairs modulo simultaneous conjugation; classes ordered by representative.
PairClassSet pair_classes(GroupPtr group, std::size_t group_cap = kDefaultPairGroupCap);

/// Independent count: sum over class representatives g of the number of
/// conjugacy classes of the centralizer of g.
std::size_t pair_class_count_oracle(const FiniteGroup& group);

struct SL2Matrix {
  long long a, b, c, d;
  /// Throws DomainError unless ad - bc = 1.
  SL2Matrix(long long a, long long b, long long c, long long d);
  static SL2Matrix identity() { return {1, 0, 0, 1}; }
  friend SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n);
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

/// (g^a h^c, g^b h^d); a right action on commuting pairs.
ElementPair sl2_act(const FiniteGroup& group, const SL2Matrix& m, ElementPair pair);

enum class BraidLetter : std::uint8_t { s1, s1_inv, s2, s2_inv };

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {}
  /// Letters `s1`, `s2`, `s1^-1`, `s2^-1` separated by optional whitespace
  /// or `*`; `e` or the empty string is the empty word. Throws ParseError.
  static BraidWord parse(std::string_view text);

  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  BraidWord inverse() const;
  BraidWord power(unsigned k) const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<BraidLetter> letters_;
};

std::string to_string(const BraidWord& w);

/// Letters applied left to right: s1 (g,h) -> (g, gh), s2 (g,h) -> (gh^-1, h),
/// s1^-1 (g,h) -> (g, g^-1 h), s2^-1 (g,h) -> (gh, h).
ElementPair braid_act_pair(const FiniteGroup& group, const BraidWord& w, ElementPair pair);

/// Letters applied left to right: s1 (x,y,z) -> (xyx^-1, x, z),
/// s2 (x,y,z) -> (x, yzy^-1, y) and their inverses.
ElementTriple braid_act_triple(const FiniteGroup& group, const BraidWord& w, ElementTriple t);

/// (g1 g2^-1, g2 g3^-1)
ElementPair collapse(const FiniteGroup& group, ElementTriple t);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of;
};

/// Orbits of the pair classes under (1 1; 0 1) and (1 0; -1 1), breadth-first
/// from the lowest unvisited class.
OrbitPartition sl2_orbits(const PairClassSet& classes);

/// Whether z^2 = (s1 s2)^6 fixes every pair class.
bool center_acts_trivially(const PairClassSet& classes);

inline constexpr std::size_t kDefaultTupleCap = 4'000'000;

/// Number of orbits of G^n under simultaneous conjugation together with
/// permutation of coordinates. Throws SizeError when |G|^n exceeds the cap.
std::size_t tuple_classes(const FiniteGroup& group, unsigned n, std::size_t cap = kDefaultTupleCap);

}  // namespace galchar
