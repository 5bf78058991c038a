#include "galchar/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "galchar/error.hpp"

namespace galchar {

PairClassSet::PairClassSet(GroupPtr group, std::vector<PairClass> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (auto p : classes_[i].members) class_of_.emplace(key(p), i);
}

std::size_t PairClassSet::class_of(ElementPair p) const {
  auto it = class_of_.find(key(p));
  if (it == class_of_.end()) throw DomainError("pair is not a commuting pair of the group");
  return it->second;
}

PairClassSet pair_classes(GroupPtr group_ptr, std::size_t group_cap) {
  const FiniteGroup& group = *group_ptr;
  const std::size_t n = group.order();
  if (n > group_cap)
    throw SizeError("pair classification is limited to groups of order " + std::to_string(group_cap) + ", got " +
                    std::to_string(n));
  std::vector<Index> gens;
  for (const auto& g : group.generators()) gens.push_back(group.require_index(g));
  // conj[k][i] = index of k^-1 g_i k
  std::vector<std::vector<Index>> conj(gens.size(), std::vector<Index>(n));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Index i = 0; i < n; ++i) conj[k][i] = group.conjugate(i, gens[k]);

  std::unordered_map<std::uint64_t, bool> visited;
  auto key = [](ElementPair p) { return (std::uint64_t{p.first} << 32U) | p.second; };
  std::vector<PairClass> classes;
  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h) {
      if (group.mul(g, h) != group.mul(h, g)) continue;
      ElementPair start{g, h};
      if (visited.contains(key(start))) continue;
      PairClass cls{start, {start}};
      visited.emplace(key(start), true);
      for (std::size_t head = 0; head < cls.members.size(); ++head)
        for (const auto& c : conj) {
          ElementPair next{c[cls.members[head].first], c[cls.members[head].second]};
          if (visited.emplace(key(next), true).second) cls.members.push_back(next);
        }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
  return PairClassSet(std::move(group_ptr), std::move(classes));
}

std::size_t pair_class_count_oracle(const FiniteGroup& group) {
  std::size_t total = 0;
  ConjugacyClassSet classes(group);
  for (const auto& cls : classes.classes()) total += ConjugacyClassSet(centralizer(group, cls.representative)).size();
  return total;
}

SL2Matrix::SL2Matrix(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
  if (a * d - b * c != 1) throw DomainError("matrix determinant is not 1");
}

SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

ElementPair sl2_act(const FiniteGroup& group, const SL2Matrix& m, ElementPair p) {
  const Index g = p.first, h = p.second;
  return {group.mul(group.pow(g, m.a), group.pow(h, m.c)), group.mul(group.pow(g, m.b), group.pow(h, m.d))};
}

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  if (text.substr(pos) == "e") return {};
  while (pos < text.size()) {
    if (text[pos] != 's' && text[pos] != 'S') throw ParseError(pos, "expected s1 or s2");
    ++pos;
    if (pos == text.size() || (text[pos] != '1' && text[pos] != '2'))
      throw ParseError(pos < text.size() ? pos : text.size() - 1, "expected generator number 1 or 2");
    const bool first = text[pos] == '1';
    ++pos;
    bool inverse = false;
    if (text.substr(pos, 3) == "^-1") {
      inverse = true;
      pos += 3;
    } else if (pos < text.size() && text[pos] == '^') {
      throw ParseError(pos, "only ^-1 exponents are supported");
    }
    letters.push_back(first ? (inverse ? BraidLetter::s1_inv : BraidLetter::s1)
                            : (inverse ? BraidLetter::s2_inv : BraidLetter::s2));
    skip();
  }
  return BraidWord(std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    switch (*it) {
      case BraidLetter::s1: out.push_back(BraidLetter::s1_inv); break;
      case BraidLetter::s1_inv: out.push_back(BraidLetter::s1); break;
      case BraidLetter::s2: out.push_back(BraidLetter::s2_inv); break;
      case BraidLetter::s2_inv: out.push_back(BraidLetter::s2); break;
    }
  }
  return BraidWord(std::move(out));
}

BraidWord BraidWord::power(unsigned k) const {
  BraidWord out;
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  auto letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(std::move(letters));
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (auto l : w.letters()) {
    if (!out.empty()) out += ' ';
    switch (l) {
      case BraidLetter::s1: out += "s1"; break;
      case BraidLetter::s1_inv: out += "s1^-1"; break;
      case BraidLetter::s2: out += "s2"; break;
      case BraidLetter::s2_inv: out += "s2^-1"; break;
    }
  }
  return out;
}

ElementPair braid_act_pair(const FiniteGroup& group, const BraidWord& w, ElementPair p) {
  for (auto l : w.letters()) {
    const Index g = p.first, h = p.second;
    switch (l) {
      case BraidLetter::s1: p = {g, group.mul(g, h)}; break;
      case BraidLetter::s1_inv: p = {g, group.mul(group.inv(g), h)}; break;
      case BraidLetter::s2: p = {group.mul(g, group.inv(h)), h}; break;
      case BraidLetter::s2_inv: p = {group.mul(g, h), h}; break;
    }
  }
  return p;
}

ElementTriple braid_act_triple(const FiniteGroup& group, const BraidWord& w, ElementTriple t) {
  auto conj_by = [&](Index a, Index by) {  // by a by^-1
    return group.mul(group.mul(by, a), group.inv(by));
  };
  for (auto l : w.letters()) {
    const Index x = t.x, y = t.y, z = t.z;
    switch (l) {
      case BraidLetter::s1: t = {conj_by(y, x), x, z}; break;
      case BraidLetter::s1_inv: t = {y, group.conjugate(x, y), z}; break;
      case BraidLetter::s2: t = {x, conj_by(z, y), y}; break;
      case BraidLetter::s2_inv: t = {x, z, group.conjugate(y, z)}; break;
    }
  }
  return t;
}

ElementPair collapse(const FiniteGroup& group, ElementTriple t) {
  return {group.mul(t.x, group.inv(t.y)), group.mul(t.y, group.inv(t.z))};
}

OrbitPartition sl2_orbits(const PairClassSet& classes) {
  const auto& group = classes.group();
  const SL2Matrix gens[] = {SL2Matrix(1, 1, 0, 1), SL2Matrix(1, 0, -1, 1)};
  OrbitPartition out;
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.orbit_of.assign(classes.size(), unset);
  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (out.orbit_of[start] != unset) continue;
    std::vector<std::size_t> orbit{start};
    out.orbit_of[start] = out.orbits.size();
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& m : gens) {
        auto next = classes.class_of(sl2_act(group, m, classes[orbit[head]].representative));
        if (out.orbit_of[next] == unset) {
          out.orbit_of[next] = out.orbits.size();
          orbit.push_back(next);
        }
      }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

bool center_acts_trivially(const PairClassSet& classes) {
  const BraidWord z2 = BraidWord({BraidLetter::s1, BraidLetter::s2}).power(6);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto p : classes[i].members)
      if (classes.class_of(braid_act_pair(classes.group(), z2, p)) != i) return false;
  return true;
}

std::size_t tuple_classes(const FiniteGroup& group, unsigned n, std::size_t cap) {
  if (n == 0) return 1;
  const std::size_t order = group.order();
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > cap / order) throw SizeError("|G|^n exceeds the tuple cap " + std::to_string(cap));
    total *= order;
  }
  std::vector<Index> gens;
  for (const auto& g : group.generators()) gens.push_back(group.require_index(g));
  std::vector<std::vector<Index>> conj(gens.size(), std::vector<Index>(order));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Index i = 0; i < order; ++i) conj[k][i] = group.conjugate(i, gens[k]);

  // Union-find over tuples encoded in base |G|.
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  std::vector<Index> digits(n);
  std::vector<std::size_t> place(n, 1);
  for (unsigned i = 1; i < n; ++i) place[i] = place[i - 1] * order;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (unsigned i = 0; i < n; ++i) {
      digits[i] = static_cast<Index>(rest % order);
      rest /= order;
    }
    for (const auto& c : conj) {
      std::size_t image = 0;
      for (unsigned i = 0; i < n; ++i) image += c[digits[i]] * place[i];
      unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(image));
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
      std::size_t image = code - digits[i] * place[i] - digits[i + 1] * place[i + 1] + digits[i + 1] * place[i] +
                          digits[i] * place[i + 1];
      unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(image));
    }
  }
  std::size_t roots = 0;
  for (std::size_t code = 0; code < total; ++code)
    if (find(static_cast<std::uint32_t>(code)) == code) ++roots;
  return roots;
}

}  // namespace galchar
