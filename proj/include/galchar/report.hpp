#pragma once

// Rendered reports. Every report carries a plain-text rendering and a
// Record tree; Record::render() gives the structured format:
//
//   key: value
//   key {
//     nested: value
//   }
//
// Keys may repeat. Values never contain newlines.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galchar/braid.hpp"
#include "galchar/chartab.hpp"
#include "galchar/profinite.hpp"

namespace galchar {

enum class OutputFormat { text, structured };

class Record {
 public:
  struct Entry {
    std::string key;
    std::string value;
    std::shared_ptr<Record> child;  // set for blocks
  };

  Record& field(std::string key, std::string value);
  Record& field(std::string key, std::size_t value) { return field(std::move(key), std::to_string(value)); }
  Record& field(std::string key, bool value) { return field(std::move(key), std::string(value ? "true" : "false")); }
  /// Appends a nested block and returns it.
  Record& block(std::string key);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::string render() const;

 private:
  void render_into(std::string& out, std::size_t indent) const;
  std::vector<Entry> entries_;
};

struct Report {
  std::string text;
  Record record;
  std::string render(OutputFormat format) const { return format == OutputFormat::text ? text : record.render(); }
};

/// `a+bi` style numeric value with ten decimals; the imaginary part is
/// omitted when it vanishes.
std::string numeric_string(const CycNumber& a);

Report table_report(const std::string& label, const CharacterTable& table);

/// One action entry per ell, in the given order.
Report galois_report(const std::string& label, const CharacterTable& table, const std::vector<long long>& ells);

Report pairs_report(const std::string& label, const PairClassSet& classes);

Report braid_report(const std::string& label, const FiniteGroup& group, const BraidWord& word,
                    std::optional<ElementPair> pair, std::optional<ElementTriple> triple);

/// ell = nullopt tabulates every unit modulo n.
Report cyclic_cover_report(unsigned n, std::optional<long long> ell);
/// ell = nullopt tabulates every unit modulo 4n.
Report dihedral_cover_report(unsigned n, std::optional<long long> ell);

/// Counts for every tuple length 1..n.
Report tuples_report(const std::string& label, const FiniteGroup& group, unsigned n);

/// `(a,b)` with both entries in cycle notation.
std::string pair_string(const FiniteGroup& group, ElementPair p);
std::string triple_string(const FiniteGroup& group, ElementTriple t);

/// Parses "(..),(..)" (optionally wrapped in one more pair of parentheses)
/// into elements of the group. Throws ParseError or DomainError.
std::vector<FiniteGroup::Index> parse_element_tuple(const FiniteGroup& group, std::string_view text);

}  // namespace galchar
