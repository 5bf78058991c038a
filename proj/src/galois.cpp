#include "galchar/galois.hpp"

#include <algorithm>
#include <numeric>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"

namespace galchar {

namespace {

Character apply_to_row(const GaloisAut& s, const Character& row) {
  Character out;
  out.reserve(row.size());
  for (const auto& v : row) out.push_back(galois_apply(s, v));
  return out;
}

std::optional<std::size_t> find_row(const CharacterTable& table, const Character& row) {
  auto it = std::find(table.rows().begin(), table.rows().end(), row);
  if (it == table.rows().end()) return std::nullopt;
  return static_cast<std::size_t>(it - table.rows().begin());
}

}  // namespace

IndexPerm row_action(const CharacterTable& table, long long ell) {
  GaloisAut s(table.field_order(), ell);
  IndexPerm perm;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto target = find_row(table, apply_to_row(s, table.row(i)));
    if (!target)
      throw InvariantError("sigma_" + std::to_string(s.ell()) + " of " + table.row_names()[i] +
                           " is not a row of the table");
    perm.push_back(*target);
  }
  return perm;
}

IndexPerm column_action(const CharacterTable& table, long long ell) {
  GaloisAut s(table.field_order(), ell);  // validates coprimality
  return power_map_on_classes(table.group(), table.classes(), s.ell());
}

GaloisTableAction galois_table_action(const CharacterTable& table, long long ell) {
  GaloisAut s(table.field_order(), ell);
  return {s.ell(), row_action(table, ell), column_action(table, ell)};
}

CompatibilityResult verify_compatibility(const CharacterTable& table, long long ell) {
  GaloisAut s(table.field_order(), ell);
  const std::size_t classes = table.classes().size();
  auto fail = [&](std::size_t row, std::size_t cls, std::string reason) {
    return CompatibilityResult{false, CompatibilityWitness{row, cls, static_cast<long long>(s.ell()), std::move(reason)}};
  };

  const IndexPerm cols = column_action(table, ell);
  std::vector<Character> images;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Character image = apply_to_row(s, table.row(i));
    for (std::size_t c = 0; c < classes; ++c)
      if (!(image[c] == table.entry(i, cols[c])))
        return fail(i, c, "sigma(T[row][cls]) != T[row][cls^ell]");
    images.push_back(std::move(image));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto target = find_row(table, images[i]);
    if (!target) {
      std::size_t c = 0;
      while (c + 1 < classes && images[i][c] == table.entry(i, c)) ++c;
      return fail(i, c, "sigma(row) is not a row of the table");
    }
    for (std::size_t c = 0; c < classes; ++c)
      if (!(images[i][c] == table.entry(*target, c))) return fail(i, c, "sigma(T[row][cls]) != T[sigma row][cls]");
  }

  auto report = verify_table(table);
  if (!report.all_passed()) {
    std::string failed;
    for (const auto& c : report.checks)
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
    return fail(report.failing_row.value_or(0), report.failing_class.value_or(0),
                "rows are not irreducible characters (" + failed + ")");
  }
  return {};
}

namespace {

struct Orbits {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of;
};

Orbits orbits_of(std::size_t size, const std::vector<IndexPerm>& perms) {
  Orbits out;
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.orbit_of.assign(size, unset);
  for (std::size_t start = 0; start < size; ++start) {
    if (out.orbit_of[start] != unset) continue;
    std::vector<std::size_t> orbit{start};
    out.orbit_of[start] = out.orbits.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& p : perms) {
        auto next = p[orbit[head]];
        if (out.orbit_of[next] == unset) {
          out.orbit_of[next] = out.orbits.size();
          orbit.push_back(next);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

GaloisOrbits galois_orbits(const CharacterTable& table) {
  std::vector<IndexPerm> rows, cols;
  for (unsigned l : units_mod(table.field_order())) {
    rows.push_back(row_action(table, l));
    cols.push_back(column_action(table, l));
  }
  auto r = orbits_of(table.size(), rows);
  auto c = orbits_of(table.classes().size(), cols);
  GaloisOrbits out{std::move(r.orbits), std::move(c.orbits), std::move(r.orbit_of), std::move(c.orbit_of), {}};
  for (const auto& row : table.rows()) {
    unsigned cond = 1;
    for (const auto& v : row) cond = std::lcm(cond, conductor(v));
    out.row_conductor.push_back(cond);
  }
  return out;
}

std::string perm_cycle_form(const IndexPerm& perm, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += '(';
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      if (i != start) out += ' ';
      out += labels.at(i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::string> class_names(const CharacterTable& table) {
  std::vector<std::string> out;
  for (const auto& c : table.classes().classes()) out.push_back(c.name);
  return out;
}

}  // namespace galchar
