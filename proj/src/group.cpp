#include "galchar/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"

namespace galchar {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Permutation> generators, std::size_t element_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DomainError("generator " + to_cycle_string(g) + " has degree " + std::to_string(g.degree()) +
                        ", expected " + std::to_string(degree));
  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.push_back(Permutation(degree));
  group.index_.emplace(group.elements_.front(), 0);
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& gen : group.generators_) {
      Permutation next = group.elements_[head] * gen;
      if (group.index_.contains(next)) continue;
      if (group.elements_.size() >= element_cap)
        throw SizeError("group has more than " + std::to_string(element_cap) + " elements");
      group.index_.emplace(next, static_cast<Index>(group.elements_.size()));
      group.elements_.push_back(std::move(next));
    }
  }
  group.finish();
  return group;
}

FiniteGroup FiniteGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  if (elements.empty() || !elements.front().is_identity())
    throw DomainError("element list must start with the identity");
  FiniteGroup group;
  group.degree_ = degree;
  group.elements_ = std::move(elements);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    if (group.elements_[i].degree() != degree) throw DomainError("element has the wrong degree");
    if (!group.index_.emplace(group.elements_[i], static_cast<Index>(i)).second)
      throw DomainError("duplicate element in element list");
  }
  // Greedy generating set in list order.
  std::vector<bool> reached(group.elements_.size(), false);
  reached[0] = true;
  std::vector<Index> span{0};
  for (Index i = 1; i < group.elements_.size(); ++i) {
    if (reached[i]) continue;
    group.generators_.push_back(group.elements_[i]);
    std::fill(reached.begin(), reached.end(), false);
    span.assign(1, 0);
    reached[0] = true;
    for (std::size_t head = 0; head < span.size(); ++head) {
      for (const auto& gen : group.generators_) {
        auto it = group.index_.find(group.elements_[span[head]] * gen);
        if (it == group.index_.end()) throw DomainError("element list is not closed under multiplication");
        if (!reached[it->second]) {
          reached[it->second] = true;
          span.push_back(it->second);
        }
      }
    }
  }
  group.finish();
  return group;
}

void FiniteGroup::finish() {
  const std::size_t n = elements_.size();
  inverses_.resize(n);
  orders_.resize(n);
  exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = index_.find(elements_[i].inverse());
    if (it == index_.end()) throw DomainError("element list is not closed under inverses");
    inverses_[i] = it->second;
    orders_[i] = static_cast<unsigned>(elements_[i].order());
    exponent_ = std::lcm(exponent_, orders_[i]);
  }
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index_.find(elements_[a] * elements_[b]);
        if (it == index_.end()) throw DomainError("element list is not closed under multiplication");
        table_[a * n + b] = it->second;
      }
  }
}

std::optional<FiniteGroup::Index> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup::Index FiniteGroup::require_index(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw DomainError(to_cycle_string(p) + " is not an element of the group");
  return *idx;
}

FiniteGroup::Index FiniteGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

FiniteGroup::Index FiniteGroup::pow(Index a, long long e) const {
  long long k = mod(e, orders_[a]);
  Index result = identity();
  Index base = a;
  while (k != 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

ConjugacyClassSet::ConjugacyClassSet(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<FiniteGroup::Index> gens;
  for (const auto& g : group.generators()) gens.push_back(group.require_index(g));

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, unset);
  std::vector<ConjugacyClass> raw;
  for (FiniteGroup::Index start = 0; start < n; ++start) {
    if (raw_class[start] != unset) continue;
    ConjugacyClass cls{start, {start}, group.element_order(start), {}};
    raw_class[start] = raw.size();
    for (std::size_t head = 0; head < cls.members.size(); ++head)
      for (auto k : gens) {
        auto c = group.conjugate(cls.members[head], k);
        if (raw_class[c] == unset) {
          raw_class[c] = raw.size();
          cls.members.push_back(c);
        }
      }
    std::sort(cls.members.begin(), cls.members.end());
    raw.push_back(std::move(cls));
  }

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = raw[a];
    const auto& y = raw[b];
    return std::tuple(x.element_order, x.members.size(), x.representative) <
           std::tuple(y.element_order, y.members.size(), y.representative);
  });
  std::vector<std::size_t> new_index(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_index[perm[i]] = i;

  unsigned last_order = 0;
  int letter = 0;
  for (std::size_t i : perm) {
    auto cls = std::move(raw[i]);
    letter = cls.element_order == last_order ? letter + 1 : 0;
    last_order = cls.element_order;
    std::string suffix;
    for (int l = letter;; l = l / 26 - 1) {
      suffix.insert(suffix.begin(), static_cast<char>('a' + l % 26));
      if (l < 26) break;
    }
    cls.name = std::to_string(cls.element_order) + suffix;
    classes_.push_back(std::move(cls));
  }
  class_of_.resize(n);
  for (std::size_t e = 0; e < n; ++e) class_of_[e] = new_index[raw_class[e]];
}

FiniteGroup centralizer(const FiniteGroup& group, FiniteGroup::Index g) {
  if (g >= group.order()) throw DomainError("element index out of range");
  std::vector<Permutation> elements;
  for (FiniteGroup::Index k = 0; k < group.order(); ++k)
    if (group.mul(k, g) == group.mul(g, k)) elements.push_back(group.element(k));
  return FiniteGroup::from_elements(group.degree(), std::move(elements));
}

std::vector<std::size_t> power_map_on_classes(const FiniteGroup& group, const ConjugacyClassSet& classes,
                                              long long ell) {
  std::vector<std::size_t> out(classes.size());
  long long e = mod(ell, group.exponent());
  for (std::size_t i = 0; i < classes.size(); ++i)
    out[i] = classes.class_of(group.pow(classes[i].representative, e));
  return out;
}

std::vector<FiniteGroup::Index> generated_subgroup(const FiniteGroup& group,
                                                   const std::vector<FiniteGroup::Index>& gens) {
  std::vector<FiniteGroup::Index> out{FiniteGroup::identity()};
  std::vector<bool> seen(group.order(), false);
  seen[FiniteGroup::identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (auto g : gens) {
      auto next = group.mul(out[head], g);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  return out;
}

namespace {

using Point = Permutation::Point;

Permutation cycle_of(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range(Point from, Point to) {
  std::vector<Point> out;
  for (Point p = from; p < to; ++p) out.push_back(p);
  return out;
}

FiniteGroup quaternion_group() {
  // Regular action on {1,-1,i,-i,j,-j,k,-k} by right multiplication with i and j.
  // Unit u encoded as 2*axis + sign, axis 0..3 = 1,i,j,k.
  static constexpr int axis_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mul = [](int axis) {
    std::vector<Point> images(8);
    for (int u = 0; u < 8; ++u) {
      int a = u / 2, s = u % 2;
      int prod_axis = axis_product[a][axis];
      int prod_sign = s ^ sign_product[a][axis];
      images[static_cast<std::size_t>(u)] = static_cast<Point>(2 * prod_axis + prod_sign);
    }
    return Permutation(images);
  };
  return FiniteGroup::generate(8, {right_mul(1), right_mul(2)});
}

}  // namespace

FiniteGroup builtin(std::string_view name, std::size_t element_cap) {
  if (name == "Q8") return quaternion_group();
  if (name.size() < 2) throw DomainError("unknown builtin group '" + std::string(name) + "'");
  char family = name.front();
  unsigned long k = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || (digits.size() > 1 && digits.front() == '0'))
    throw DomainError("unknown builtin group '" + std::string(name) + "'");
  auto out_of_range = [&](unsigned long lo, unsigned long hi) {
    if (k < lo || k > hi)
      throw DomainError(std::string("builtin ") + family + " needs 1 <= k <= " + std::to_string(hi) + ", got " +
                        std::to_string(k));
  };
  switch (family) {
    case 'S': {
      out_of_range(1, 7);
      std::vector<Permutation> gens;
      if (k >= 2) gens.push_back(cycle_of(k, {0, 1}));
      if (k >= 3) gens.push_back(cycle_of(k, range(0, static_cast<Point>(k))));
      return FiniteGroup::generate(k, gens, element_cap);
    }
    case 'A': {
      out_of_range(1, 7);
      std::vector<Permutation> gens;
      // 3-cycles (0 1 i) generate A_k.
      for (Point i = 2; i < k; ++i) gens.push_back(cycle_of(k, {0, 1, i}));
      return FiniteGroup::generate(k, gens, element_cap);
    }
    case 'Z': {
      out_of_range(1, element_cap);
      std::vector<Permutation> gens;
      if (k >= 2) gens.push_back(cycle_of(k, range(0, static_cast<Point>(k))));
      return FiniteGroup::generate(k, gens, element_cap);
    }
    case 'D': {
      out_of_range(1, element_cap / 2);
      if (k == 1) return FiniteGroup::generate(2, {cycle_of(2, {0, 1})}, element_cap);
      if (k == 2)
        return FiniteGroup::generate(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                                     element_cap);
      // Rotation and the reflection i -> -i on the vertices of a k-gon.
      std::vector<Point> reflection(k);
      for (Point i = 0; i < k; ++i) reflection[i] = static_cast<Point>((k - i) % k);
      return FiniteGroup::generate(k, {cycle_of(k, range(0, static_cast<Point>(k))), Permutation(reflection)},
                                   element_cap);
    }
    default:
      throw DomainError("unknown builtin group '" + std::string(name) + "'");
  }
}

}  // namespace galchar
