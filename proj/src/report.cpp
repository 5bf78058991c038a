#include "galchar/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"
#include "galchar/galois.hpp"

namespace galchar {

Record& Record::field(std::string key, std::string value) {
  entries_.push_back({std::move(key), std::move(value), nullptr});
  return *this;
}

Record& Record::block(std::string key) {
  entries_.push_back({std::move(key), {}, std::make_shared<Record>()});
  return *entries_.back().child;
}

std::string Record::render() const {
  std::string out;
  render_into(out, 0);
  return out;
}

void Record::render_into(std::string& out, std::size_t indent) const {
  const std::string pad(indent, ' ');
  for (const auto& e : entries_) {
    if (e.child) {
      out += pad + e.key + " {\n";
      e.child->render_into(out, indent + 2);
      out += pad + "}\n";
    } else {
      out += pad + e.key + ": " + e.value + "\n";
    }
  }
}

namespace {

std::string fixed10(double x) {
  if (std::fabs(x) < 5e-11) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string numeric_string(const CycNumber& a) {
  const auto z = to_complex(a);
  std::string out = fixed10(z.real());
  if (std::fabs(z.imag()) >= 5e-11) out += (z.imag() < 0 ? "-" : "+") + fixed10(std::fabs(z.imag())) + "i";
  return out;
}

std::string pair_string(const FiniteGroup& group, ElementPair p) {
  return "(" + to_cycle_string(group.element(p.first)) + "," + to_cycle_string(group.element(p.second)) + ")";
}

std::string triple_string(const FiniteGroup& group, ElementTriple t) {
  return "(" + to_cycle_string(group.element(t.x)) + "," + to_cycle_string(group.element(t.y)) + "," +
         to_cycle_string(group.element(t.z)) + ")";
}

Report table_report(const std::string& label, const CharacterTable& table) {
  Report r;
  const auto& group = table.group();
  const auto& classes = table.classes();
  const auto names = table.row_names();
  const auto cls_names = class_names(table);

  r.text = "group " + label + " order=" + std::to_string(group.order()) +
           " exponent=" + std::to_string(table.field_order()) + " classes=" + std::to_string(classes.size()) + "\n";
  r.record.field("group", label).field("order", group.order());
  r.record.field("exponent", std::to_string(table.field_order())).field("classes", classes.size());

  std::string name_line = "name", class_line = "class";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& cls = classes[c];
    const std::string rep = to_cycle_string(group.element(cls.representative));
    name_line += "\t" + cls.name;
    class_line += "\t" + rep + "|" + std::to_string(cls.members.size());
    auto& b = r.record.block("class");
    b.field("name", cls.name).field("rep", rep).field("size", cls.members.size());
    b.field("element_order", std::to_string(cls.element_order));
  }
  r.text += name_line + "\n" + class_line + "\n";

  r.record.field("rows", table.size());
  std::vector<std::string> irrational;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string line = names[i];
    auto& b = r.record.block("row");
    b.field("name", names[i]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& v = table.entry(i, c);
      const std::string s = to_display_string(v);
      line += "\t" + s;
      b.field(cls_names[c], s);
      if (!v.is_rational() && std::find(irrational.begin(), irrational.end(), s) == irrational.end())
        irrational.push_back(s);
    }
    r.text += line + "\n";
  }
  for (const auto& s : irrational) {
    const std::string approx = numeric_string(parse_cyc(s));
    r.text += "value " + s + " ~ " + approx + "\n";
    r.record.block("value").field("exact", s).field("approx", approx);
  }
  return r;
}

Report galois_report(const std::string& label, const CharacterTable& table, const std::vector<long long>& ells) {
  Report r;
  const auto names = table.row_names();
  const auto cls_names = class_names(table);
  r.text = "group " + label + " order=" + std::to_string(table.group().order()) +
           " exponent=" + std::to_string(table.field_order()) + "\n";
  r.record.field("group", label).field("order", table.group().order());
  r.record.field("exponent", std::to_string(table.field_order()));
  for (long long ell : ells) {
    const auto result = verify_compatibility(table, ell);
    const std::string rows_s =
        result.compatible ? perm_cycle_form(row_action(table, ell), names) : std::string("?");
    const std::string cols_s = perm_cycle_form(column_action(table, ell), cls_names);
    const std::string ell_s = std::to_string(ell);
    r.text += "ell=" + ell_s + " rows=" + rows_s + " cols=" + cols_s +
              " compatible=" + (result.compatible ? "true" : "false");
    auto& b = r.record.block("action");
    b.field("ell", ell_s).field("row_perm", rows_s).field("col_perm", cols_s).field("compatible", result.compatible);
    if (result.witness) {
      const auto& w = *result.witness;
      const std::string row = w.row < names.size() ? names[w.row] : std::to_string(w.row);
      const std::string cls = w.cls < cls_names.size() ? cls_names[w.cls] : std::to_string(w.cls);
      r.text += " witness=" + row + "," + cls + " reason=" + w.reason;
      b.field("witness", row + "," + cls).field("reason", w.reason);
    }
    r.text += "\n";
  }
  return r;
}

Report pairs_report(const std::string& label, const PairClassSet& classes) {
  Report r;
  const auto& group = classes.group();
  const auto orbits = sl2_orbits(classes);
  const bool center = center_acts_trivially(classes);
  r.text = "group " + label + " order=" + std::to_string(group.order()) + "\n";
  r.record.field("group", label).field("order", group.order());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string rep = pair_string(group, classes[i].representative);
    r.text += "class " + std::to_string(i) + ": rep=" + rep + " size=" + std::to_string(classes[i].members.size()) +
              " orbit=" + std::to_string(orbits.orbit_of[i]) + "\n";
    auto& b = r.record.block("class");
    b.field("index", i).field("rep", rep).field("size", classes[i].members.size()).field("orbit", orbits.orbit_of[i]);
  }
  r.text += "classes=" + std::to_string(classes.size()) + " orbits=" + std::to_string(orbits.orbits.size()) + "\n";
  r.text += std::string("center_trivial=") + (center ? "true" : "false") + "\n";
  r.record.field("pair_classes", classes.size()).field("orbits", orbits.orbits.size());
  r.record.field("center_trivial", center);
  return r;
}

Report braid_report(const std::string& label, const FiniteGroup& group, const BraidWord& word,
                    std::optional<ElementPair> pair, std::optional<ElementTriple> triple) {
  Report r;
  const std::string w = to_string(word);
  r.text = "group " + label + " word=" + w + "\n";
  r.record.field("group", label).field("word", w);
  if (pair) {
    const auto image = braid_act_pair(group, word, *pair);
    const std::string from = pair_string(group, *pair), to = pair_string(group, image);
    r.text += "pair " + from + " -> " + to + "\n";
    r.record.field("pair", from).field("image", to);
  }
  if (triple) {
    const auto image = braid_act_triple(group, word, *triple);
    const std::string from = triple_string(group, *triple), to = triple_string(group, image);
    const std::string collapsed = pair_string(group, collapse(group, image));
    r.text += "triple " + from + " -> " + to + " collapse=" + collapsed + "\n";
    r.record.field("triple", from).field("triple_image", to).field("collapse", collapsed);
  }
  return r;
}

namespace {

std::vector<long long> ells_for(unsigned modulus, std::optional<long long> ell) {
  if (ell) return {*ell};
  std::vector<long long> out;
  for (unsigned l : units_mod(modulus)) out.push_back(l);
  return out;
}

}  // namespace

Report cyclic_cover_report(unsigned n, std::optional<long long> ell) {
  const auto cover = cyclic_cover(n);
  const auto ells = ells_for(n, ell);
  for (long long l : ells) GaloisAut(n, l);  // validate before rendering anything
  Report r;
  r.text = "cover cyclic n=" + std::to_string(n) + " fiber=" + std::to_string(cover.fiber.size()) +
           " deck=" + std::to_string(cover.deck.size()) + "\n";
  r.record.field("cover", std::string("cyclic")).field("n", std::to_string(n));
  auto& fiber = r.record.block("fiber");
  for (std::size_t j = 0; j < cover.fiber.size(); ++j) {
    const std::string point = "(" + to_string(cover.fiber[j]) + ", 1)";
    r.text += "fiber " + std::to_string(j) + ": " + point + "\n";
    fiber.field("point", point);
  }
  std::vector<std::string> labels;
  for (unsigned k = 0; k < n; ++k) labels.push_back(to_string(DeckTransformation::cyclic(n, k)));
  r.text += "deck\t" + join(labels, "\t") + "\n";
  auto& deck = r.record.block("deck");
  for (unsigned a = 0; a < n; ++a) {
    std::vector<std::string> row;
    for (unsigned b = 0; b < n; ++b) row.push_back(labels[cover.table[a][b]]);
    r.text += labels[a] + "\t" + join(row, "\t") + "\n";
    deck.block("element").field("name", labels[a]).field("products", join(row, " "));
  }
  for (long long l : ells) {
    r.text += "ell=" + std::to_string(l) + "\n";
    auto& action = r.record.block("action");
    action.field("ell", std::to_string(l));
    for (unsigned k = 0; k < n; ++k) {
      const auto image = galois_on_cyclic_deck(cover, l, DeckTransformation::cyclic(n, k));
      const std::string line = labels[k] + " -> " + to_string(image);
      r.text += "  " + line + "\n";
      action.field("map", line);
    }
  }
  return r;
}

Report dihedral_cover_report(unsigned n, std::optional<long long> ell) {
  const auto cover = dihedral_cover(n);
  const auto ells = ells_for(4 * n, ell);
  for (long long l : ells) GaloisAut(4 * n, l);
  Report r;
  r.text = "cover dihedral n=" + std::to_string(n) + " fiber=" + std::to_string(cover.fiber.size()) +
           " deck=" + std::to_string(cover.deck.size()) + "\n";
  r.record.field("cover", std::string("dihedral")).field("n", std::to_string(n));
  auto& fiber = r.record.block("fiber");
  for (std::size_t j = 0; j < cover.fiber.size(); ++j) {
    const std::string point = to_string(cover.fiber[j]);
    r.text += "fiber j=" + std::to_string(cover.exponents[j]) + ": " + point + "\n";
    fiber.field("point", point);
  }
  std::vector<std::string> labels;
  for (const auto& d : cover.deck) labels.push_back(to_string(d));
  r.text += "deck\t" + join(labels, "\t") + "\n";
  auto& deck = r.record.block("deck");
  for (std::size_t a = 0; a < cover.deck.size(); ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < cover.deck.size(); ++b) row.push_back(labels[cover.table[a][b]]);
    r.text += labels[a] + "\t" + join(row, "\t") + "\n";
    deck.block("element").field("name", labels[a]).field("products", join(row, " "));
  }
  for (long long l : ells) {
    const auto rows = compare_actions_on_dihedral(cover, l);
    std::size_t differ = 0;
    r.text += "ell=" + std::to_string(l) + "\n";
    auto& action = r.record.block("action");
    action.field("ell", std::to_string(l));
    for (const auto& row : rows) {
      const std::string line = to_string(row.element) + " -> " + to_string(row.covering_image);
      const std::string power = to_string(row.element) + " -> " + to_string(row.power_image);
      r.text += "  " + line + " power=" + to_string(row.power_image) + (row.differs ? " differs" : "") + "\n";
      action.field("map", line).field("power", power);
      if (row.differs) ++differ;
    }
    r.text += "  differences=" + std::to_string(differ) + "\n";
    action.field("differences", differ);
  }
  return r;
}

Report tuples_report(const std::string& label, const FiniteGroup& group, unsigned n) {
  Report r;
  r.text = "group " + label + " order=" + std::to_string(group.order()) + "\n";
  r.record.field("group", label).field("order", group.order());
  for (unsigned k = 1; k <= n; ++k) {
    const std::size_t count = tuple_classes(group, k);
    r.text += "n=" + std::to_string(k) + " tuple_classes=" + std::to_string(count) + "\n";
    r.record.block("tuples").field("n", std::to_string(k)).field("tuple_classes", count);
  }
  return r;
}

std::vector<FiniteGroup::Index> parse_element_tuple(const FiniteGroup& group, std::string_view text) {
  auto split = [&](std::size_t begin, std::size_t end) {
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    std::size_t depth = 0, start = begin;
    for (std::size_t i = begin; i < end; ++i) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')' && depth > 0) --depth;
      else if (text[i] == ',' && depth == 0) {
        pieces.emplace_back(start, i);
        start = i + 1;
      }
    }
    pieces.emplace_back(start, end);
    return pieces;
  };
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError(0, "expected elements in cycle notation");
  auto pieces = split(begin, end);
  if (pieces.size() == 1 && text[begin] == '(' && text[end - 1] == ')') {
    auto inner = split(begin + 1, end - 1);
    if (inner.size() > 1) pieces = inner;
  }
  std::vector<FiniteGroup::Index> out;
  for (auto [b, e] : pieces) {
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    if (b == e) throw ParseError(b < text.size() ? b : text.size() - 1, "expected element in cycle notation");
    const auto p = parse_cycles(text.substr(b, e - b), group.degree(), b);
    auto idx = group.index_of(p);
    if (!idx) throw DomainError(to_cycle_string(p) + " is not an element of the group");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace galchar
