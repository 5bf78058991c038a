#include "galchar/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"

namespace galchar {

CharacterTable::CharacterTable(GroupPtr group, ConjugacyClassSet classes, std::vector<Character> rows)
    : group_(std::move(group)), classes_(std::move(classes)), field_order_(group_->exponent()), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != classes_.size())
      throw DomainError("character has " + std::to_string(row.size()) + " values but the group has " +
                        std::to_string(classes_.size()) + " classes");
    for (const auto& v : row)
      if (v.order() != field_order_)
        throw DomainError("character value of order " + std::to_string(v.order()) + " in a table over order " +
                          std::to_string(field_order_));
  }
  name_rows();
}

std::vector<CycNumber> CharacterTable::degrees() const {
  std::vector<CycNumber> out;
  for (const auto& row : rows_) out.push_back(row.front());
  return out;
}

void CharacterTable::name_rows() {
  row_names_.clear();
  std::vector<std::string> bases;
  for (const auto& row : rows_) {
    const auto& d = row.front();
    bases.push_back("ch" + (d.is_rational() ? d.constant_term().get_str() : std::string("?")));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto primes = std::count(bases.begin(), bases.begin() + static_cast<std::ptrdiff_t>(i), bases[i]);
    row_names_.push_back(bases[i] + std::string(static_cast<std::size_t>(primes), '\''));
  }
}

CharacterTable CharacterTable::with_entry(std::size_t row, std::size_t cls, CycNumber value) const {
  auto rows = rows_;
  rows.at(row).at(cls) = std::move(value);
  return with_rows(std::move(rows));
}

CharacterTable CharacterTable::with_rows(std::vector<Character> rows) const {
  return CharacterTable(group_, classes_, std::move(rows));
}

namespace {

using u64 = std::uint64_t;
using Matrix = std::vector<std::vector<u64>>;

// Row-reduced echelon form over Z/p; zero rows dropped.
struct EchelonSpace {
  Matrix basis;
  std::vector<std::size_t> pivots;
};

EchelonSpace echelon(Matrix rows, u64 p) {
  EchelonSpace out;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    u64 inv = inv_mod_prime(rows[rank][c], p);
    for (auto& x : rows[rank]) x = mul_mod(x, inv, p);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == rank || rows[o][c] == 0) continue;
      u64 f = rows[o][c];
      for (std::size_t k = 0; k < cols; ++k) rows[o][k] = (rows[o][k] + p - mul_mod(f, rows[rank][k], p)) % p;
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.basis = std::move(rows);
  return out;
}

// Basis of {v : m v = 0}.
Matrix nullspace(const Matrix& m, u64 p) {
  const std::size_t n = m.size();
  auto e = echelon(m, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = (p - e.basis[r][free]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (coefficients, constant term first) via
// reduction to upper Hessenberg form.
std::vector<u64> characteristic_polynomial(Matrix h, u64 p) {
  const std::size_t d = h.size();
  for (std::size_t c = 0; c + 2 < d; ++c) {
    std::size_t i = c + 1;
    while (i < d && h[i][c] == 0) ++i;
    if (i == d) continue;
    if (i != c + 1) {
      std::swap(h[i], h[c + 1]);
      for (auto& row : h) std::swap(row[i], row[c + 1]);
    }
    u64 inv = inv_mod_prime(h[c + 1][c], p);
    for (std::size_t r = c + 2; r < d; ++r) {
      u64 f = mul_mod(h[r][c], inv, p);
      if (f == 0) continue;
      for (std::size_t k = 0; k < d; ++k) h[r][k] = (h[r][k] + p - mul_mod(f, h[c + 1][k], p)) % p;
      for (std::size_t k = 0; k < d; ++k) h[k][c + 1] = (h[k][c + 1] + mul_mod(f, h[k][r], p)) % p;
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
  std::vector<std::vector<u64>> polys{{1}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<u64> next(k + 2, 0);
    const auto& pk = polys[k];
    for (std::size_t t = 0; t < pk.size(); ++t) {
      next[t + 1] = (next[t + 1] + pk[t]) % p;
      next[t] = (next[t] + p - mul_mod(h[k][k], pk[t], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mul_mod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      u64 f = mul_mod(h[i][k], prod, p);
      for (std::size_t t = 0; t < polys[i].size(); ++t) next[t] = (next[t] + p - mul_mod(f, polys[i][t], p)) % p;
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

u64 evaluate(const std::vector<u64>& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + poly[i]) % p;
  return acc;
}

u64 primitive_root(u64 p) {
  auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p == 2
}

std::string render_key(const Character& row) {
  std::string key;
  for (const auto& v : row) key += to_display_string(v) + '\x1f';
  return key;
}

}  // namespace

unsigned long long dixon_prime(std::size_t group_order, unsigned exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  for (unsigned long long p = exponent + 1;; p += exponent)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

unsigned long long class_multiplication_coefficient(const FiniteGroup& group, const ConjugacyClassSet& classes,
                                                    std::size_t i, std::size_t j, std::size_t k) {
  const auto z = classes[k].representative;
  unsigned long long count = 0;
  for (auto x : classes[i].members)
    if (classes.class_of(group.mul(group.inv(x), z)) == j) ++count;
  return count;
}

CharacterTable compute_character_table(const FiniteGroup& group) {
  return compute_character_table(std::make_shared<const FiniteGroup>(group));
}

CharacterTable compute_character_table(GroupPtr group_ptr) {
  const FiniteGroup& group = *group_ptr;
  ConjugacyClassSet classes(group);
  const std::size_t r = classes.size();
  if (r > kMaxTableClasses)
    throw SizeError("group has " + std::to_string(r) + " conjugacy classes; the table limit is " +
                    std::to_string(kMaxTableClasses));
  const unsigned n = group.exponent();
  const u64 p = dixon_prime(group.order(), n);
  if (p >= (1ULL << 31)) throw SizeError("no suitable prime below 2^31");

  // (A_j)[i][k] = #{x in K_i : x^-1 z_k in K_j}; omega is a right eigenvector of every A_j.
  auto class_matrix = [&](std::size_t j) {
    Matrix a(r, std::vector<u64>(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      const auto z = classes[k].representative;
      for (FiniteGroup::Index x = 0; x < group.order(); ++x)
        if (classes.class_of(group.mul(group.inv(x), z)) == j) ++a[classes.class_of(x)][k];
    }
    for (auto& row : a)
      for (auto& v : row) v %= p;
    return a;
  };

  Matrix identity(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<EchelonSpace> spaces{echelon(identity, p)};

  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.basis.size() == 1; })) break;
    const Matrix a = class_matrix(j);
    std::vector<EchelonSpace> next;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Matrix of A_j restricted to the space, in the echelon basis.
      Matrix m(d, std::vector<u64>(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        const auto& b = space.basis[c];
        for (std::size_t row = 0; row < d; ++row) {
          const auto& arow = a[space.pivots[row]];
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + mul_mod(arow[k], b[k], p)) % p;
          m[row][c] = acc;
        }
      }
      auto poly = characteristic_polynomial(m, p);
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        if (evaluate(poly, lambda, p) != 0) continue;
        Matrix shifted = m;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        Matrix coords = nullspace(shifted, p);
        Matrix vectors;
        for (const auto& cv : coords) {
          std::vector<u64> v(r, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mul_mod(cv[c], space.basis[c][k], p)) % p;
          vectors.push_back(std::move(v));
        }
        found += vectors.size();
        next.push_back(echelon(std::move(vectors), p));
      }
      if (found != d) throw InvariantError("class matrix is not diagonalisable modulo " + std::to_string(p));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw InvariantError("class matrices did not separate the characters");

  std::vector<u64> class_size(r), inverse_class(r);
  for (std::size_t i = 0; i < r; ++i) {
    class_size[i] = classes[i].members.size() % p;
    inverse_class[i] = classes.class_of(group.inv(classes[i].representative));
  }
  const u64 w = pow_mod(primitive_root(p), (p - 1) / n, p);  // image of z_n

  std::vector<Character> rows;
  for (const auto& space : spaces) {
    std::vector<u64> omega = space.basis.front();
    if (omega[0] == 0) throw InvariantError("central character vanishes at the identity");
    u64 scale = inv_mod_prime(omega[0], p);
    for (auto& v : omega) v = mul_mod(v, scale, p);

    // chi(1)^2 = |G| / sum_i omega_i omega_i' / |K_i|
    u64 s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = (s + mul_mod(mul_mod(omega[i], omega[inverse_class[i]], p), inv_mod_prime(class_size[i], p), p)) % p;
    u64 deg_sq = mul_mod(group.order() % p, inv_mod_prime(s, p), p);
    u64 degree = 0;
    for (u64 d = 1; d * d <= group.order(); ++d)
      if (mul_mod(d, d, p) == deg_sq) {
        degree = d;
        break;
      }
    if (degree == 0) throw InvariantError("no character degree matches modulo " + std::to_string(p));

    std::vector<u64> chi(r);
    for (std::size_t i = 0; i < r; ++i)
      chi[i] = mul_mod(mul_mod(omega[i], degree, p), inv_mod_prime(class_size[i], p), p);

    Character row;
    for (std::size_t c = 0; c < r; ++c) {
      const auto rep = classes[c].representative;
      const unsigned o = group.element_order(rep);
      const u64 z = pow_mod(w, n / o, p);
      const u64 z_inv = inv_mod_prime(z, p);
      const u64 o_inv = inv_mod_prime(o % p, p);
      std::vector<u64> values(o);
      for (unsigned l = 0; l < o; ++l) values[l] = chi[classes.class_of(group.pow(rep, l))];
      std::vector<long long> by_power(n, 0);
      u64 total = 0;
      for (unsigned k = 0; k < o; ++k) {
        // multiplicity of eigenvalue z_o^k
        u64 acc = 0;
        const u64 step = pow_mod(z_inv, k, p);
        u64 twiddle = 1;
        for (unsigned l = 0; l < o; ++l) {
          acc = (acc + mul_mod(values[l], twiddle, p)) % p;
          twiddle = mul_mod(twiddle, step, p);
        }
        u64 mult = mul_mod(acc, o_inv, p);
        if (mult > degree) throw InvariantError("eigenvalue multiplicity exceeds the degree");
        total += mult;
        by_power[static_cast<std::size_t>(k) * (n / o)] = static_cast<long long>(mult);
      }
      if (total != degree) throw InvariantError("eigenvalue multiplicities do not sum to the degree");
      row.push_back(CycNumber::from_powers(n, std::span<const long long>(by_power)));
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::pair<std::string, std::size_t>> keyed;
  auto is_trivial = [&](const Character& row) {
    return std::all_of(row.begin(), row.end(), [&](const CycNumber& v) { return v == CycNumber(n, 1); });
  };
  for (std::size_t i = 0; i < rows.size(); ++i) keyed.emplace_back(render_key(rows[i]), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    const auto& ra = rows[a.second];
    const auto& rb = rows[b.second];
    bool ta = is_trivial(ra), tb = is_trivial(rb);
    if (ta != tb) return ta;
    const Rational& da = ra.front().constant_term();
    const Rational& db = rb.front().constant_term();
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::vector<Character> sorted;
  for (const auto& [key, idx] : keyed) sorted.push_back(std::move(rows[idx]));

  CharacterTable table(std::move(group_ptr), std::move(classes), std::move(sorted));
  auto report = verify_table(table);
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw InvariantError("computed table failed " + c.name + ": " + c.counterexample);
  }
  return table;
}

CycNumber inner_product(const CharacterTable& table, const Character& chi, const Character& psi) {
  const unsigned n = table.field_order();
  CycNumber sum(n);
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    auto term = chi[c] * conj(psi[c]);
    term *= Rational(static_cast<long>(table.classes()[c].members.size()));
    sum += term;
  }
  sum *= Rational(1, static_cast<long>(table.group().order()));
  return sum;
}

bool TableReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& TableReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw DomainError("no check named " + name);
}

TableReport verify_table(const CharacterTable& table) {
  TableReport report;
  const auto& classes = table.classes();
  const auto& group = table.group();
  const std::size_t r = classes.size();
  const unsigned n = table.field_order();
  const auto& names = table.row_names();
  auto cell = [&](std::size_t row, std::size_t c) {
    return names[row] + " at " + classes[c].name + " = " + to_string(table.entry(row, c));
  };

  CheckResult square{"square", true, {}};
  if (table.size() != r) {
    square.passed = false;
    square.counterexample = std::to_string(table.size()) + " rows for " + std::to_string(r) + " classes";
  }
  report.checks.push_back(square);

  CheckResult integrality{"integrality", true, {}};
  for (std::size_t i = 0; i < table.size() && integrality.passed; ++i)
    for (std::size_t c = 0; c < r; ++c) {
      auto k = classify(table.entry(i, c));
      if (k != CycClass::rational_integer && k != CycClass::cyclotomic_integer) {
        integrality.passed = false;
        integrality.counterexample = cell(i, c);
        break;
      }
    }
  report.checks.push_back(integrality);

  CheckResult squares{"degree_squares", true, {}};
  CheckResult divides{"degree_divisibility", true, {}};
  mpz_class sum_sq = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& d = table.entry(i, 0);
    if (!d.is_rational() || d.constant_term().get_den() != 1 || sgn(d.constant_term()) <= 0) {
      if (squares.passed) squares.counterexample = "degree " + cell(i, 0) + " is not a positive integer";
      squares.passed = divides.passed = false;
      if (divides.counterexample.empty()) divides.counterexample = squares.counterexample;
      continue;
    }
    mpz_class deg = d.constant_term().get_num();
    sum_sq += deg * deg;
    if (mpz_class(static_cast<unsigned long>(group.order())) % deg != 0 && divides.passed) {
      divides.passed = false;
      divides.counterexample = "degree of " + names[i] + " = " + deg.get_str() + " does not divide " +
                               std::to_string(group.order());
    }
  }
  if (squares.passed && sum_sq != static_cast<unsigned long>(group.order())) {
    squares.passed = false;
    squares.counterexample =
        "sum of squared degrees " + sum_sq.get_str() + " != |G| = " + std::to_string(group.order());
  }
  report.checks.push_back(squares);
  report.checks.push_back(divides);

  if (!report.checks.front().passed) return report;

  std::vector<Character> conjugates;
  for (const auto& row : table.rows()) {
    Character c;
    for (const auto& v : row) c.push_back(conj(v));
    conjugates.push_back(std::move(c));
  }

  CheckResult rows{"row_orthonormality", true, {}};
  for (std::size_t i = 0; i < r && rows.passed; ++i)
    for (std::size_t j = i; j < r; ++j) {
      CycNumber sum(n);
      for (std::size_t c = 0; c < r; ++c) {
        auto term = table.entry(i, c) * conjugates[j][c];
        term *= Rational(static_cast<long>(classes[c].members.size()));
        sum += term;
      }
      CycNumber expected(n, i == j ? Rational(static_cast<long>(group.order())) : Rational(0));
      if (!(sum == expected)) {
        rows.passed = false;
        rows.counterexample = "<" + names[i] + ", " + names[j] + "> = " + to_string(sum * Rational(1, static_cast<long>(group.order())));
        report.failing_row = i;
        break;
      }
    }
  report.checks.push_back(rows);

  CheckResult cols{"column_orthogonality", true, {}};
  for (std::size_t a = 0; a < r && cols.passed; ++a) {
    const auto g = classes[a].representative;
    unsigned long centralizer_order = 0;
    for (FiniteGroup::Index k = 0; k < group.order(); ++k)
      if (group.mul(k, g) == group.mul(g, k)) ++centralizer_order;
    for (std::size_t b = a; b < r; ++b) {
      CycNumber sum(n);
      for (std::size_t i = 0; i < r; ++i) sum += table.entry(i, a) * conjugates[i][b];
      CycNumber expected(n, a == b ? Rational(centralizer_order) : Rational(0));
      if (!(sum == expected)) {
        cols.passed = false;
        cols.counterexample = "columns " + classes[a].name + ", " + classes[b].name + " give " + to_string(sum) +
                              ", expected " + to_string(expected);
        report.failing_class = a;
        break;
      }
    }
  }
  report.checks.push_back(cols);
  return report;
}

TableSymmetries table_symmetries(const CharacterTable& table) {
  TableSymmetries out;
  const unsigned n = table.field_order();
  const auto& classes = table.classes();
  const auto& group = table.group();
  const std::size_t r = table.size();
  const CycNumber one(n, 1);

  for (std::size_t l = 0; l < r; ++l) {
    if (!(table.entry(l, 0) == one)) continue;
    RowSymmetry sym{l, {}};
    for (std::size_t i = 0; i < r; ++i) {
      Character product;
      for (std::size_t c = 0; c < classes.size(); ++c) product.push_back(table.entry(l, c) * table.entry(i, c));
      auto it = std::find(table.rows().begin(), table.rows().end(), product);
      if (it == table.rows().end())
        throw InvariantError(table.row_names()[l] + " * " + table.row_names()[i] + " is not a row of the table");
      sym.row_perm.push_back(static_cast<std::size_t>(it - table.rows().begin()));
    }
    out.rows.push_back(std::move(sym));
  }

  for (std::size_t z = 0; z < classes.size(); ++z) {
    if (classes[z].members.size() != 1) continue;
    ColumnSymmetry sym{z, {}};
    const auto zrep = classes[z].representative;
    for (std::size_t c = 0; c < classes.size(); ++c)
      sym.column_perm.push_back(classes.class_of(group.mul(zrep, classes[c].representative)));
    for (std::size_t i = 0; i < r; ++i) {
      const auto& deg = table.entry(i, 0);
      if (!deg.is_rational() || sgn(deg.constant_term()) == 0) throw InvariantError("degree is not a nonzero rational");
      CycNumber factor = table.entry(i, z) * (1 / deg.constant_term());
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (!(table.entry(i, sym.column_perm[c]) == factor * table.entry(i, c)))
          throw InvariantError("central element " + classes[z].name + " does not act on column " + classes[c].name +
                               " of " + table.row_names()[i]);
    }
    out.columns.push_back(std::move(sym));
  }
  return out;
}

bool class_function_space_check(const CharacterTable& table) {
  auto m = table.rows();
  const std::size_t rows = m.size();
  const std::size_t cols = table.classes().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    CycNumber inv = inverse(m[rank][c]);
    for (auto& v : m[rank]) v = v * inv;
    for (std::size_t o = rank + 1; o < rows; ++o) {
      if (m[o][c].is_zero()) continue;
      CycNumber f = m[o][c];
      for (std::size_t k = c; k < cols; ++k) m[o][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank == rows && rows == cols;
}

}  // namespace galchar
