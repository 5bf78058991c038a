#pragma once

// Character tables over cyclotomic fields.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galchar/cyclo.hpp"
#include "galchar/group.hpp"

namespace galchar {

using Character = std::vector<CycNumber>;

/// Irreducible characters of a group as rows of exact values in Q[z_n],
/// n = exponent(G), one column per conjugacy class.
class CharacterTable {
 public:
  /// Checks only the shape (rows x classes, every entry of order field_order);
  /// verify_table checks the mathematics.
  CharacterTable(GroupPtr group, ConjugacyClassSet classes, std::vector<Character> rows);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const ConjugacyClassSet& classes() const noexcept { return classes_; }
  unsigned field_order() const noexcept { return field_order_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<Character>& rows() const noexcept { return rows_; }
  const Character& row(std::size_t i) const { return rows_[i]; }
  const CycNumber& entry(std::size_t row, std::size_t cls) const { return rows_[row][cls]; }
  /// Values at the identity class.
  std::vector<CycNumber> degrees() const;

  /// ch<degree> with primes distinguishing rows of equal degree: ch1, ch3, ch3', ...
  const std::vector<std::string>& row_names() const noexcept { return row_names_; }

  /// Copy with one entry replaced (fault injection in tests).
  CharacterTable with_entry(std::size_t row, std::size_t cls, CycNumber value) const;
  CharacterTable with_rows(std::vector<Character> rows) const;

 private:
  void name_rows();

  GroupPtr group_;
  ConjugacyClassSet classes_;
  unsigned field_order_;
  std::vector<Character> rows_;
  std::vector<std::string> row_names_;
};

/// Dixon-Burnside: common eigenvectors of the class matrices modulo a prime
/// p = 1 mod exponent, lifted to exact cyclotomic integers.
/// Throws SizeError above the class or element caps.
CharacterTable compute_character_table(GroupPtr group);
CharacterTable compute_character_table(const FiniteGroup& group);

inline constexpr std::size_t kMaxTableClasses = 160;

/// Prime used by compute_character_table: smallest p = 1 (mod exponent) with p > 2 sqrt|G|.
unsigned long long dixon_prime(std::size_t group_order, unsigned exponent);

/// Number of pairs (x, y) in K_i x K_j with xy = z for a fixed z in K_k.
unsigned long long class_multiplication_coefficient(const FiniteGroup& group, const ConjugacyClassSet& classes,
                                                    std::size_t i, std::size_t j, std::size_t k);

/// (1/|G|) sum over classes |K| chi(K) conj(psi(K)).
CycNumber inner_product(const CharacterTable& table, const Character& chi, const Character& psi);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  // first failure, empty when passed
};

struct TableReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult& check(const std::string& name) const;
  /// First row / class taking part in a failed orthogonality relation.
  std::optional<std::size_t> failing_row;
  std::optional<std::size_t> failing_class;
};

/// Checks: square, integrality, degree_squares, degree_divisibility,
/// row_orthonormality, column_orthogonality (against centralizer orders
/// computed from the group).
TableReport verify_table(const CharacterTable& table);

struct RowSymmetry {
  std::size_t linear_row;            // the degree-1 character
  std::vector<std::size_t> row_perm;  // i -> index of linear_row * row i
};

struct ColumnSymmetry {
  std::size_t central_class;            // a class of size 1
  std::vector<std::size_t> column_perm;  // c -> class of z * rep(c)
};

struct TableSymmetries {
  std::vector<RowSymmetry> rows;
  std::vector<ColumnSymmetry> columns;
};

/// Row permutations from multiplying by linear characters and column
/// permutations from multiplying by central elements, each verified against
/// the table: rows exactly, columns via chi(zg) = (chi(z)/chi(1)) chi(g).
/// Throws InvariantError if a symmetry fails to map the table to itself.
TableSymmetries table_symmetries(const CharacterTable& table);

/// True when the rows are linearly independent over Q[z_n] (so they span the
/// class functions).
bool class_function_space_check(const CharacterTable& table);

}  // namespace galchar
