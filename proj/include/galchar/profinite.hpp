#pragma once

// Truncated profinite integers and units, their action on Hom(Z^, G) = G, and
// two explicit coverings of the punctured line whose deck groups carry a
// Galois action: the cyclic cover x1^n x2 = 1 and the dihedral cover
// f(x) = (2 - x^n - x^-n)/4.

#include <cstddef>
#include <string>
#include <vector>

#include "galchar/cyclo.hpp"
#include "galchar/group.hpp"

namespace galchar {

/// k^ mod N.
class TruncatedProfinite {
 public:
  TruncatedProfinite(unsigned modulus, long long value);

  unsigned modulus() const noexcept { return modulus_; }
  unsigned residue() const noexcept { return residue_; }
  /// Image under Z/N -> Z/m; m must divide N.
  TruncatedProfinite truncate(unsigned m) const;

  friend TruncatedProfinite operator+(const TruncatedProfinite& a, const TruncatedProfinite& b);
  friend TruncatedProfinite operator*(const TruncatedProfinite& a, const TruncatedProfinite& b);
  friend bool operator==(const TruncatedProfinite&, const TruncatedProfinite&) = default;

 private:
  unsigned modulus_;
  unsigned residue_;
};

/// ell^ mod N with gcd(ell, N) = 1.
class ProfiniteUnit {
 public:
  /// Throws DomainError when gcd(value, modulus) != 1.
  ProfiniteUnit(unsigned modulus, long long value);

  unsigned modulus() const noexcept { return modulus_; }
  unsigned residue() const noexcept { return residue_; }
  ProfiniteUnit truncate(unsigned m) const;
  ProfiniteUnit inverse() const;

  friend ProfiniteUnit operator*(const ProfiniteUnit& a, const ProfiniteUnit& b);
  friend bool operator==(const ProfiniteUnit&, const ProfiniteUnit&) = default;

 private:
  unsigned modulus_;
  unsigned residue_;
};

/// g -> g^ell. Throws DomainError unless exponent(G) divides u.modulus().
FiniteGroup::Index profinite_act_on_group(const ProfiniteUnit& u, const FiniteGroup& group, FiniteGroup::Index g);

struct HomCount {
  std::size_t count;
  /// homs[i] is the image of 1^ under the i-th homomorphism.
  std::vector<FiniteGroup::Index> homs;
};

HomCount hom_count(const FiniteGroup& group);

struct DeckTransformation {
  enum class Kind { cyclic, dihedral };
  Kind kind;
  unsigned n;
  int eps;     // always +1 for cyclic
  unsigned k;  // reduced mod n

  static DeckTransformation cyclic(unsigned n, long long k);
  static DeckTransformation dihedral(unsigned n, int eps, long long k);
  friend bool operator==(const DeckTransformation&, const DeckTransformation&) = default;
};

/// `g<k>` for cyclic, `(eps,k)` for dihedral, e.g. `(-1,2)`.
std::string to_string(const DeckTransformation& d);

using FiberPerm = std::vector<std::size_t>;

/// Y_n = {x1^n x2 = 1} over the base point (1,1). The second coordinate of
/// every fiber point is 1, so only x1 is stored.
struct CyclicCover {
  unsigned n;
  std::vector<CycNumber> fiber;     // fiber[j] = z_n^j
  std::vector<FiberPerm> deck;      // deck[k] is gamma_k on fiber indices
  std::vector<std::vector<unsigned>> table;  // table[a][b] = c with gamma_a o gamma_b = gamma_c
};

/// Builds and verifies the model; throws InvariantError if a check fails.
CyclicCover cyclic_cover(unsigned n);

/// sigma o gamma o sigma^-1 on the fiber, identified as gamma_{ell k} and
/// checked against that closed form. Throws DomainError unless gcd(ell, n) = 1.
DeckTransformation galois_on_cyclic_deck(const CyclicCover& cover, long long ell, const DeckTransformation& gamma);
DeckTransformation galois_on_cyclic_deck(unsigned n, long long ell, const DeckTransformation& gamma);

/// The fiber of f over 1/2 and deck maps x -> x^eps z_4n^{4k}.
struct DihedralCover {
  unsigned n;
  std::vector<long long> exponents;  // odd j in (-2n, 2n], ascending
  std::vector<CycNumber> fiber;      // z_4n^j
  std::vector<DeckTransformation> deck;  // (1,0..n-1) then (-1,0..n-1)
  std::vector<FiberPerm> action;
  std::vector<std::vector<std::size_t>> table;  // deck index of deck[a] o deck[b]

  std::size_t index_of(const DeckTransformation& d) const;
};

/// Builds and verifies the model; throws InvariantError if a check fails.
DihedralCover dihedral_cover(unsigned n);

/// f(x) = (2 - x^n - x^-n)/4 evaluated exactly.
CycNumber dihedral_f(unsigned n, const CycNumber& x);

/// Throws DomainError unless gcd(ell, 4n) = 1.
DeckTransformation galois_on_dihedral_deck(const DihedralCover& cover, long long ell, const DeckTransformation& d);
DeckTransformation galois_on_dihedral_deck(unsigned n, long long ell, const DeckTransformation& d);

struct DeckActionRow {
  DeckTransformation element;
  DeckTransformation covering_image;  // (eps, ell k)
  DeckTransformation power_image;     // element^ell in the deck group
  bool differs;
};

std::vector<DeckActionRow> compare_actions_on_dihedral(const DihedralCover& cover, long long ell);
std::vector<DeckActionRow> compare_actions_on_dihedral(unsigned n, long long ell);

/// (g1^ell, ..., gm^ell). Throws ScopeError unless <g1, ..., gm> is cyclic.
std::vector<FiniteGroup::Index> tuple_galois_action(const ProfiniteUnit& u, const FiniteGroup& group,
                                                    const std::vector<FiniteGroup::Index>& tuple);

}  // namespace galchar
