#include "galchar/profinite.hpp"

#include <algorithm>
#include <numeric>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"

namespace galchar {

namespace {

void require_modulus(unsigned m) {
  if (m == 0) throw DomainError("modulus must be positive");
}

unsigned reduce(long long v, unsigned m) { return static_cast<unsigned>(mod(v, m)); }

std::size_t locate(const std::vector<CycNumber>& fiber, const CycNumber& x) {
  auto it = std::find(fiber.begin(), fiber.end(), x);
  if (it == fiber.end()) throw InvariantError("deck map leaves the fiber: " + to_string(x));
  return static_cast<std::size_t>(it - fiber.begin());
}

FiberPerm compose(const FiberPerm& outer, const FiberPerm& inner) {
  FiberPerm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

void require_bijection(const FiberPerm& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto i : p) {
    if (hit[i]) throw InvariantError("deck map is not injective on the fiber");
    hit[i] = true;
  }
}

// sigma o gamma o sigma^-1 on fiber indices, computed on the exact coordinates.
FiberPerm conjugate_by_galois(const std::vector<CycNumber>& fiber, const FiberPerm& gamma, const GaloisAut& s) {
  const GaloisAut s_inv = s.inverse();
  FiberPerm out(fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const std::size_t pre = locate(fiber, galois_apply(s_inv, fiber[i]));
    out[i] = locate(fiber, galois_apply(s, fiber[gamma[pre]]));
  }
  return out;
}

}  // namespace

TruncatedProfinite::TruncatedProfinite(unsigned modulus, long long value)
    : modulus_(modulus), residue_(0) {
  require_modulus(modulus);
  residue_ = reduce(value, modulus);
}

TruncatedProfinite TruncatedProfinite::truncate(unsigned m) const {
  require_modulus(m);
  if (modulus_ % m != 0)
    throw DomainError("cannot truncate modulo " + std::to_string(modulus_) + " to " + std::to_string(m));
  return {m, residue_};
}

TruncatedProfinite operator+(const TruncatedProfinite& a, const TruncatedProfinite& b) {
  if (a.modulus_ != b.modulus_) throw DomainError("profinite truncations with different moduli");
  return {a.modulus_, static_cast<long long>(a.residue_) + b.residue_};
}

TruncatedProfinite operator*(const TruncatedProfinite& a, const TruncatedProfinite& b) {
  if (a.modulus_ != b.modulus_) throw DomainError("profinite truncations with different moduli");
  return {a.modulus_, static_cast<long long>(mul_mod(a.residue_, b.residue_, a.modulus_))};
}

ProfiniteUnit::ProfiniteUnit(unsigned modulus, long long value) : modulus_(modulus), residue_(0) {
  require_modulus(modulus);
  residue_ = reduce(value, modulus);
  if (std::gcd(residue_, modulus_) != 1 && modulus_ != 1)
    throw DomainError(std::to_string(value) + " is not a unit modulo " + std::to_string(modulus));
}

ProfiniteUnit ProfiniteUnit::truncate(unsigned m) const {
  require_modulus(m);
  if (modulus_ % m != 0)
    throw DomainError("cannot truncate modulo " + std::to_string(modulus_) + " to " + std::to_string(m));
  return {m, residue_};
}

ProfiniteUnit ProfiniteUnit::inverse() const {
  if (modulus_ == 1) return *this;
  return {modulus_, mod_inverse(residue_, modulus_)};
}

ProfiniteUnit operator*(const ProfiniteUnit& a, const ProfiniteUnit& b) {
  if (a.modulus_ != b.modulus_) throw DomainError("profinite units with different moduli");
  return {a.modulus_, static_cast<long long>(mul_mod(a.residue_, b.residue_, a.modulus_))};
}

FiniteGroup::Index profinite_act_on_group(const ProfiniteUnit& u, const FiniteGroup& group, FiniteGroup::Index g) {
  if (u.modulus() % group.exponent() != 0)
    throw DomainError("group exponent " + std::to_string(group.exponent()) + " does not divide the modulus " +
                      std::to_string(u.modulus()));
  return group.pow(g, u.residue() % group.element_order(g));
}

HomCount hom_count(const FiniteGroup& group) {
  HomCount out{group.order(), std::vector<FiniteGroup::Index>(group.order())};
  std::iota(out.homs.begin(), out.homs.end(), FiniteGroup::Index{0});
  return out;
}

DeckTransformation DeckTransformation::cyclic(unsigned n, long long k) {
  require_modulus(n);
  return {Kind::cyclic, n, 1, reduce(k, n)};
}

DeckTransformation DeckTransformation::dihedral(unsigned n, int eps, long long k) {
  require_modulus(n);
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  return {Kind::dihedral, n, eps, reduce(k, n)};
}

std::string to_string(const DeckTransformation& d) {
  if (d.kind == DeckTransformation::Kind::cyclic) return "g" + std::to_string(d.k);
  return "(" + std::to_string(d.eps) + "," + std::to_string(d.k) + ")";
}

CyclicCover cyclic_cover(unsigned n) {
  require_modulus(n);
  CyclicCover cover{n, {}, {}, {}};
  for (unsigned j = 0; j < n; ++j) cover.fiber.push_back(cyc_root(n, j));
  const CycNumber one(n, 1);
  for (const auto& x : cover.fiber)
    if (!(pow(x, n) * one == one)) throw InvariantError("fiber point off the curve x1^n x2 = 1");

  for (unsigned k = 0; k < n; ++k) {
    const CycNumber shift = cyc_root(n, k);
    FiberPerm p;
    for (const auto& x : cover.fiber) {
      CycNumber image = shift * x;
      if (!(pow(image, n) * one == one)) throw InvariantError("deck map does not preserve x1^n x2 = 1");
      p.push_back(locate(cover.fiber, image));
    }
    require_bijection(p);
    cover.deck.push_back(std::move(p));
  }

  cover.table.assign(n, std::vector<unsigned>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      auto c = std::find(cover.deck.begin(), cover.deck.end(), compose(cover.deck[a], cover.deck[b]));
      if (c == cover.deck.end()) throw InvariantError("deck maps are not closed under composition");
      cover.table[a][b] = static_cast<unsigned>(c - cover.deck.begin());
    }
  // Cyclic of order n: gamma_1 generates.
  std::vector<bool> seen(n, false);
  unsigned g = 0;
  for (unsigned i = 0; i < n; ++i, g = cover.table[g][n > 1 ? 1 : 0]) seen[g] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InvariantError("deck group is not cyclic");
  // Free and transitive action on the fiber.
  for (unsigned k = 0; k < n; ++k)
    if (cover.deck[k][0] != k) throw InvariantError("deck group does not act simply transitively");
  return cover;
}

DeckTransformation galois_on_cyclic_deck(const CyclicCover& cover, long long ell, const DeckTransformation& gamma) {
  const unsigned n = cover.n;
  if (gamma.kind != DeckTransformation::Kind::cyclic || gamma.n != n)
    throw DomainError("deck transformation does not belong to the cyclic cover of degree " + std::to_string(n));
  GaloisAut s(n, ell);
  const FiberPerm conj = conjugate_by_galois(cover.fiber, cover.deck[gamma.k], s);
  auto it = std::find(cover.deck.begin(), cover.deck.end(), conj);
  if (it == cover.deck.end()) throw InvariantError("conjugated map is not a deck transformation");
  auto found = DeckTransformation::cyclic(n, it - cover.deck.begin());
  auto expected = DeckTransformation::cyclic(n, static_cast<long long>(mul_mod(s.ell() % n, gamma.k, n)));
  if (!(found == expected))
    throw InvariantError("conjugate of " + to_string(gamma) + " is " + to_string(found) + ", expected " +
                         to_string(expected));
  return found;
}

DeckTransformation galois_on_cyclic_deck(unsigned n, long long ell, const DeckTransformation& gamma) {
  return galois_on_cyclic_deck(cyclic_cover(n), ell, gamma);
}

CycNumber dihedral_f(unsigned n, const CycNumber& x) {
  const CycNumber xn = pow(x, n);
  return (CycNumber(x.order(), 2) - xn - inverse(xn)) * Rational(1, 4);
}

std::size_t DihedralCover::index_of(const DeckTransformation& d) const {
  if (d.kind != DeckTransformation::Kind::dihedral || d.n != n)
    throw DomainError("deck transformation does not belong to the dihedral cover of degree " + std::to_string(n));
  return (d.eps == 1 ? 0 : n) + d.k;
}

DihedralCover dihedral_cover(unsigned n) {
  require_modulus(n);
  const unsigned N = 4 * n;
  DihedralCover cover{n, {}, {}, {}, {}, {}};
  const CycNumber half(N, Rational(1, 2));
  for (long long j = -2LL * n + 1; j <= 2LL * n; j += 2) {
    cover.exponents.push_back(j);
    cover.fiber.push_back(cyc_root(N, j));
    if (!(dihedral_f(n, cover.fiber.back()) == half))
      throw InvariantError("f(z^" + std::to_string(j) + ") != 1/2");
  }
  for (int eps : {1, -1})
    for (unsigned k = 0; k < n; ++k) cover.deck.push_back(DeckTransformation::dihedral(n, eps, k));

  for (const auto& d : cover.deck) {
    const CycNumber shift = cyc_root(N, 4LL * d.k);
    FiberPerm p;
    for (const auto& x : cover.fiber) {
      CycNumber image = (d.eps == 1 ? x : inverse(x)) * shift;
      if (!(dihedral_f(n, image) == dihedral_f(n, x))) throw InvariantError("deck map does not preserve f");
      p.push_back(locate(cover.fiber, image));
    }
    require_bijection(p);
    cover.action.push_back(std::move(p));
  }

  const std::size_t size = cover.deck.size();
  cover.table.assign(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      auto c = std::find(cover.action.begin(), cover.action.end(), compose(cover.action[a], cover.action[b]));
      if (c == cover.action.end()) throw InvariantError("deck maps are not closed under composition");
      const auto& x = cover.deck[a];
      const auto& y = cover.deck[b];
      auto expected = DeckTransformation::dihedral(n, x.eps * y.eps, static_cast<long long>(x.eps) * y.k + x.k);
      const auto idx = static_cast<std::size_t>(c - cover.action.begin());
      if (!(cover.deck[idx] == expected))
        throw InvariantError("deck group multiplication differs from the dihedral law at " + to_string(x) + "*" +
                             to_string(y));
      cover.table[a][b] = idx;
    }
  if (cover.fiber.size() != size) throw InvariantError("deck group order differs from the fiber size");
  for (std::size_t a = 1; a < size; ++a)
    for (std::size_t x = 0; x < size; ++x)
      if (cover.action[a][x] == x) throw InvariantError("deck group does not act freely");
  std::vector<bool> reached(size, false);
  for (std::size_t a = 0; a < size; ++a) reached[cover.action[a][0]] = true;
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw InvariantError("deck group is not transitive on the fiber");
  return cover;
}

DeckTransformation galois_on_dihedral_deck(const DihedralCover& cover, long long ell, const DeckTransformation& d) {
  const unsigned n = cover.n;
  const std::size_t idx = cover.index_of(d);
  GaloisAut s(4 * n, ell);
  const FiberPerm conj = conjugate_by_galois(cover.fiber, cover.action[idx], s);
  auto it = std::find(cover.action.begin(), cover.action.end(), conj);
  if (it == cover.action.end()) throw InvariantError("conjugated map is not a deck transformation");
  const auto& found = cover.deck[static_cast<std::size_t>(it - cover.action.begin())];
  auto expected = DeckTransformation::dihedral(n, d.eps, static_cast<long long>(mul_mod(s.ell() % n, d.k, n)));
  if (!(found == expected))
    throw InvariantError("conjugate of " + to_string(d) + " is " + to_string(found) + ", expected " +
                         to_string(expected));
  return found;
}

DeckTransformation galois_on_dihedral_deck(unsigned n, long long ell, const DeckTransformation& d) {
  return galois_on_dihedral_deck(dihedral_cover(n), ell, d);
}

std::vector<DeckActionRow> compare_actions_on_dihedral(const DihedralCover& cover, long long ell) {
  GaloisAut s(4 * cover.n, ell);
  std::vector<DeckActionRow> rows;
  for (std::size_t i = 0; i < cover.deck.size(); ++i) {
    const auto& d = cover.deck[i];
    std::size_t power = 0;  // identity (1,0)
    for (unsigned e = 0; e < s.ell(); ++e) power = cover.table[power][i];
    auto covering = galois_on_dihedral_deck(cover, ell, d);
    const auto& powered = cover.deck[power];
    rows.push_back({d, covering, powered, !(covering == powered)});
  }
  return rows;
}

std::vector<DeckActionRow> compare_actions_on_dihedral(unsigned n, long long ell) {
  return compare_actions_on_dihedral(dihedral_cover(n), ell);
}

std::vector<FiniteGroup::Index> tuple_galois_action(const ProfiniteUnit& u, const FiniteGroup& group,
                                                    const std::vector<FiniteGroup::Index>& tuple) {
  const auto h = generated_subgroup(group, tuple);
  const bool cyclic =
      std::any_of(h.begin(), h.end(), [&](FiniteGroup::Index g) { return group.element_order(g) == h.size(); });
  if (!cyclic)
    throw ScopeError("Gr_H is only available for cyclic H; the tuple generates a non-cyclic subgroup of order " +
                     std::to_string(h.size()));
  std::vector<FiniteGroup::Index> out;
  for (auto g : tuple) out.push_back(group.pow(g, u.residue()));
  return out;
}

}  // namespace galchar
