#include "galchar/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "galchar/arith.hpp"
#include "galchar/error.hpp"

namespace galchar {

namespace detail {

// Reduction data for one order n: z^k for phi <= k < n written in the power
// basis. Built once per order and never mutated afterwards.
struct CyclotomicBasis {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<std::vector<long long>> high_powers;  // index k - phi
};

namespace {

constexpr unsigned kMaxOrder = 2048;

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
  // Phi_n = x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    auto den = cyclotomic_polynomial(d);
    std::size_t dn = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      mpz_class c = num[i];  // den is monic
      quot[i - dn] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

std::unique_ptr<CyclotomicBasis> build_basis(unsigned n) {
  auto basis = std::make_unique<CyclotomicBasis>();
  basis->n = n;
  basis->phi = euler_phi(n);
  const unsigned phi = basis->phi;
  auto poly = cyclotomic_polynomial(n);
  std::vector<long long> low(phi);
  for (unsigned i = 0; i < phi; ++i) low[i] = -poly[i].get_si();  // z^phi = -sum poly[i] z^i

  std::vector<long long> cur(phi, 0);
  if (phi < n) {
    cur = low;
    basis->high_powers.push_back(cur);
  }
  for (unsigned k = phi + 1; k < n; ++k) {
    long long top = cur[phi - 1];
    std::vector<long long> next(phi, 0);
    for (unsigned i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
    for (unsigned i = 0; i < phi; ++i) {
      long long prod = 0;
      if (__builtin_mul_overflow(top, low[i], &prod) || __builtin_add_overflow(next[i], prod, &next[i]))
        throw SizeError("cyclotomic reduction overflow for order " + std::to_string(n));
    }
    cur = std::move(next);
    basis->high_powers.push_back(cur);
  }
  return basis;
}

}  // namespace

const CyclotomicBasis* basis_for(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic order must be positive");
  if (n > kMaxOrder)
    throw SizeError("cyclotomic order " + std::to_string(n) + " exceeds the supported maximum " +
                    std::to_string(kMaxOrder));
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const CyclotomicBasis>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_basis(n)).first;
  return it->second.get();
}

namespace {

// Reduce a dense vector indexed by exponent in [0, n) to canonical coordinates.
std::vector<Rational> reduce_dense(const CyclotomicBasis& b, std::vector<Rational>& dense) {
  std::vector<Rational> out(dense.begin(), dense.begin() + b.phi);
  Rational tmp;
  for (unsigned k = b.phi; k < b.n; ++k) {
    const Rational& c = dense[k];
    if (sgn(c) == 0) continue;
    const auto& row = b.high_powers[k - b.phi];
    for (unsigned i = 0; i < b.phi; ++i) {
      if (row[i] == 0) continue;
      tmp = c * static_cast<long>(row[i]);
      out[i] += tmp;
    }
  }
  return out;
}

}  // namespace
}  // namespace detail

using detail::basis_for;

CycNumber::CycNumber() : CycNumber(1u) {}

CycNumber::CycNumber(unsigned order) : basis_(basis_for(order)), coeffs_(basis_->phi) {}

CycNumber::CycNumber(unsigned order, const Rational& q) : CycNumber(order) {
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

CycNumber::CycNumber(const detail::CyclotomicBasis* basis, std::vector<Rational> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::from_powers(unsigned order, std::span<const Rational> by_power) {
  const auto* b = basis_for(order);
  std::vector<Rational> dense(b->n);
  Rational term;
  for (std::size_t k = 0; k < by_power.size(); ++k) {
    term = by_power[k];
    term.canonicalize();
    dense[k % b->n] += term;
  }
  return CycNumber(b, detail::reduce_dense(*b, dense));
}

CycNumber CycNumber::from_powers(unsigned order, std::span<const long long> by_power) {
  const auto* b = basis_for(order);
  std::vector<Rational> dense(b->n);
  for (std::size_t k = 0; k < by_power.size(); ++k)
    if (by_power[k] != 0) dense[k % b->n] += Rational(static_cast<long>(by_power[k]));
  return CycNumber(b, detail::reduce_dense(*b, dense));
}

CycNumber CycNumber::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  const auto* b = basis_for(order);
  if (coeffs.size() != b->phi)
    throw DomainError("expected " + std::to_string(b->phi) + " coefficients for order " + std::to_string(order));
  for (auto& c : coeffs) c.canonicalize();
  return CycNumber(b, std::move(coeffs));
}

unsigned CycNumber::order() const noexcept { return basis_->n; }

bool CycNumber::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNumber::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

void CycNumber::require_same_order(const CycNumber& rhs, const char* op) const {
  if (basis_ != rhs.basis_)
    throw DomainError(std::string("cannot ") + op + " elements of orders " + std::to_string(order()) + " and " +
                      std::to_string(rhs.order()) + "; embed them into a common order first");
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  require_same_order(rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) {
  require_same_order(rhs, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& scalar) {
  Rational s = scalar;
  s.canonicalize();
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.require_same_order(b, "multiply");
  if (a.is_rational()) return b * a.coeffs_[0];
  if (b.is_rational()) return a * b.coeffs_[0];
  const auto& basis = *a.basis_;
  std::vector<Rational> dense(basis.n);
  Rational tmp;
  for (unsigned i = 0; i < basis.phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (unsigned j = 0; j < basis.phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      dense[(i + j) % basis.n] += tmp;
    }
  }
  return CycNumber(&basis, detail::reduce_dense(basis, dense));
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
}

CycNumber cyc_root(unsigned n, long long k) {
  const auto* b = basis_for(n);
  std::vector<long long> powers(b->n, 0);
  powers[static_cast<std::size_t>(mod(k, n))] = 1;
  return CycNumber::from_powers(n, std::span<const long long>(powers));
}

CycNumber arith(const CycNumber& a, const CycNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw DomainError("unknown arithmetic operation");
}

CycNumber embed(const CycNumber& a, unsigned m) {
  const unsigned n = a.order();
  if (m == 0 || m % n != 0)
    throw DomainError("cannot embed order " + std::to_string(n) + " into order " + std::to_string(m) +
                      ": not a divisor");
  if (m == n) return a;
  const unsigned step = m / n;
  std::vector<Rational> dense(m);
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) dense[i * step] = c[i];
  return CycNumber::from_powers(m, std::span<const Rational>(dense));
}

CycNumber inverse(const CycNumber& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative inverse");
  if (a.is_rational()) return CycNumber(a.order(), 1 / a.constant_term());
  // When a * conj(a) is rational (roots of unity, for instance) one product suffices.
  CycNumber bar = conj(a);
  CycNumber abs2 = a * bar;
  if (abs2.is_rational()) return bar * (1 / abs2.constant_term());
  // a^-1 = (prod over sigma != 1 of sigma(a)) / norm(a)
  CycNumber others(a.order(), 1);
  for (unsigned l : units_mod(a.order()))
    if (l != 1) others *= galois_apply(GaloisAut(a.order(), l), a);
  CycNumber norm = a * others;
  if (!norm.is_rational()) throw InvariantError("field norm is not rational");
  return others * (1 / norm.constant_term());
}

CycNumber pow(const CycNumber& a, long long e) {
  CycNumber base = e < 0 ? inverse(a) : a;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  CycNumber result(a.order(), 1);
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

GaloisAut::GaloisAut(unsigned order, long long ell) : order_(order), ell_(0) {
  if (order == 0) throw DomainError("Galois automorphism needs a positive order");
  long long r = mod(ell, order);
  if (std::gcd(static_cast<unsigned long long>(r == 0 ? order : r), static_cast<unsigned long long>(order)) != 1)
    throw DomainError("ell=" + std::to_string(ell) + " is not coprime to " + std::to_string(order));
  ell_ = r == 0 ? order : static_cast<unsigned>(r);
}

GaloisAut GaloisAut::inverse() const { return GaloisAut(order_, mod_inverse(ell_, order_)); }

GaloisAut operator*(const GaloisAut& a, const GaloisAut& b) {
  if (a.order_ != b.order_) throw DomainError("cannot compose Galois automorphisms of different orders");
  return GaloisAut(a.order_, static_cast<long long>(a.ell_) * b.ell_);
}

CycNumber galois_apply_unchecked(unsigned ell, const CycNumber& a) {
  const auto& b = *a.basis_;
  if (ell % b.n == 1 % b.n || a.is_rational()) return a;
  std::vector<Rational> out(b.phi);
  Rational tmp;
  for (unsigned i = 0; i < b.phi; ++i) {
    const Rational& c = a.coeffs_[i];
    if (sgn(c) == 0) continue;
    const auto k = static_cast<unsigned>((static_cast<unsigned long long>(ell) * i) % b.n);
    if (k < b.phi) {
      out[k] += c;
      continue;
    }
    const auto& row = b.high_powers[k - b.phi];
    for (unsigned j = 0; j < b.phi; ++j) {
      if (row[j] == 0) continue;
      tmp = c * static_cast<long>(row[j]);
      out[j] += tmp;
    }
  }
  return CycNumber(&b, std::move(out));
}

CycNumber galois_apply(const GaloisAut& s, const CycNumber& a) {
  if (s.order() != a.order())
    throw DomainError("Galois automorphism of order " + std::to_string(s.order()) + " applied to element of order " +
                      std::to_string(a.order()));
  return galois_apply_unchecked(s.ell(), a);
}

CycNumber conj(const CycNumber& a) { return galois_apply(GaloisAut(a.order(), -1), a); }

CycClass classify(const CycNumber& a) {
  bool integral = true;
  for (const auto& c : a.coeffs())
    if (c.get_den() != 1) integral = false;
  if (a.is_rational()) return integral ? CycClass::rational_integer : CycClass::rational;
  return integral ? CycClass::cyclotomic_integer : CycClass::general;
}

std::string_view to_string(CycClass c) {
  switch (c) {
    case CycClass::rational_integer:
      return "rational_integer";
    case CycClass::rational:
      return "rational";
    case CycClass::cyclotomic_integer:
      return "cyclotomic_integer";
    case CycClass::general:
      return "general";
  }
  return "unknown";
}

std::complex<double> to_complex(const CycNumber& a) {
  std::complex<double> sum = 0;
  const double n = a.order();
  auto c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    sum += c[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

unsigned conductor(const CycNumber& a) {
  if (a.is_rational()) return 1;
  const unsigned n = a.order();
  const auto units = units_mod(n);
  for (unsigned d : divisors(n)) {
    bool fixed = true;
    for (unsigned l : units) {
      if (l % d != 1 % d) continue;
      if (!(galois_apply_unchecked(l, a) == a)) {
        fixed = false;
        break;
      }
    }
    if (fixed) return d;
  }
  return n;
}

std::optional<CycNumber> restrict_to(const CycNumber& a, unsigned d) {
  const unsigned n = a.order();
  if (d == 0 || n % d != 0)
    throw DomainError(std::to_string(d) + " does not divide the order " + std::to_string(n));
  if (d == n) return a;
  const unsigned rows = euler_phi(n);
  const unsigned cols = euler_phi(d);
  // Columns: images of z_d^i in Q[z_n]; augmented with a.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (unsigned i = 0; i < cols; ++i) {
    auto v = cyc_root(n, static_cast<long long>(i) * (n / d));
    for (unsigned r = 0; r < rows; ++r) m[r][i] = v.coeffs()[r];
  }
  for (unsigned r = 0; r < rows; ++r) m[r][cols] = a.coeffs()[r];

  std::vector<unsigned> pivot_col;
  unsigned row = 0;
  for (unsigned col = 0; col < cols && row < rows; ++col) {
    unsigned p = row;
    while (p < rows && sgn(m[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (unsigned r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (unsigned c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (unsigned r = row; r < rows; ++r)
    if (sgn(m[r][cols]) != 0) return std::nullopt;
  std::vector<Rational> coeffs(cols);
  for (unsigned r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = m[r][cols];
  return CycNumber::from_coeffs(d, std::move(coeffs));
}

CycNumber minimal_form(const CycNumber& a) {
  auto r = restrict_to(a, conductor(a));
  if (!r) throw InvariantError("element does not lie in the field of its conductor");
  return *r;
}

std::string to_string(const CycNumber& a) {
  std::string out;
  auto c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty())
      out += sgn(c[k]) < 0 ? "-" : "";
    else
      out += sgn(c[k]) < 0 ? " - " : " + ";
    out += mag.get_str();
    if (k != 0) out += "*z^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " @" + std::to_string(a.order());
}

std::string to_display_string(const CycNumber& a) {
  if (a.is_rational()) return a.constant_term().get_str();
  return to_string(minimal_form(a));
}

namespace {

struct ParsedTerm {
  Rational coeff;
  long long exponent;
};

class CycParser {
 public:
  explicit CycParser(std::string_view text) : text_(text) {}

  CycNumber parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      skip_ws();
      ParsedTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      char ch = peek();
      if (ch == '+' || ch == '-') {
        negative = ch == '-';
        ++pos_;
        continue;
      }
      break;
    }
    unsigned order = 1;
    if (peek() == '@') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      unsigned long long n = parse_uint("order");
      if (n == 0) throw ParseError(at, "order must be positive");
      if (n > 1u << 20) throw ParseError(at, "order too large");
      order = static_cast<unsigned>(n);
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    std::vector<Rational> dense(order);
    for (const auto& t : terms) dense[static_cast<std::size_t>(mod(t.exponent, order))] += t.coeff;
    return CycNumber::from_powers(order, std::span<const Rational>(dense));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t error_pos() const { return pos_ < text_.size() ? pos_ : (text_.empty() ? 0 : text_.size() - 1); }

  unsigned long long parse_uint(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(error_pos(), std::string("expected ") + what);
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (v > (1ULL << 40)) throw ParseError(pos_ - 1, std::string(what) + " out of range");
    }
    return v;
  }

  ParsedTerm parse_term() {
    ParsedTerm out{Rational(1), 0};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(std::to_string(parse_uint("coefficient")));
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = mpz_class(std::to_string(parse_uint("denominator")));
        if (den == 0) throw ParseError(at, "zero denominator");
      }
      out.coeff = Rational(num, den);
      out.coeff.canonicalize();
      skip_ws();
      if (peek() != '*') return out;
      ++pos_;
      skip_ws();
    }
    if (peek() != 'z') throw ParseError(error_pos(), "expected coefficient or 'z'");
    ++pos_;
    out.exponent = 1;
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      auto e = static_cast<long long>(parse_uint("exponent"));
      out.exponent = neg ? -e : e;
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyc(std::string_view text) { return CycParser(text).parse(); }

}  // namespace galchar
