#pragma once

// The Galois group of Q[z_n] acting on a character table: on rows through
// the values, on columns through g -> g^ell.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galchar/chartab.hpp"

namespace galchar {

using IndexPerm = std::vector<std::size_t>;

/// i -> index of the row sigma_ell(row i). ell must be coprime to the field order.
/// Throws InvariantError if some transformed row is not in the table.
IndexPerm row_action(const CharacterTable& table, long long ell);

/// c -> class of rep(c)^ell. ell must be coprime to the field order.
IndexPerm column_action(const CharacterTable& table, long long ell);

struct GaloisTableAction {
  unsigned ell;  // reduced into [1, n]
  IndexPerm row_perm;
  IndexPerm col_perm;
};

GaloisTableAction galois_table_action(const CharacterTable& table, long long ell);

struct CompatibilityWitness {
  std::size_t row;
  std::size_t cls;
  long long ell;
  std::string reason;
};

struct CompatibilityResult {
  bool compatible = true;
  std::optional<CompatibilityWitness> witness;
};

/// Checks sigma_ell(T[r][c]) == T[row_action(r)][c] == T[r][column_action(c)]
/// for every entry. The row action is only meaningful on a genuine table of
/// irreducible characters, so a table failing the orthogonality relations is
/// reported incompatible too, with the offending row and class as witness.
CompatibilityResult verify_compatibility(const CharacterTable& table, long long ell);

struct GaloisOrbits {
  std::vector<std::vector<std::size_t>> row_orbits;
  std::vector<std::vector<std::size_t>> column_orbits;
  std::vector<std::size_t> row_orbit_of;
  std::vector<std::size_t> column_orbit_of;
  /// Conductor of the field generated by each row's values.
  std::vector<unsigned> row_conductor;
};

/// Orbits under every ell coprime to the field order.
GaloisOrbits galois_orbits(const CharacterTable& table);

/// Cycle form with the given labels, e.g. `(ch3 ch3')`; `()` for the identity.
std::string perm_cycle_form(const IndexPerm& perm, const std::vector<std::string>& labels);

std::vector<std::string> class_names(const CharacterTable& table);

}  // namespace galchar
