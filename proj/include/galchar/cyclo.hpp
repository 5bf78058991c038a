#pragma once

// Exact arithmetic in the cyclotomic fields Q[z] with z = exp(2 pi i / n).
//
// An element of order n is stored as its coefficient vector in the power
// basis {1, z, ..., z^(phi(n)-1)} after reduction modulo the n-th cyclotomic
// polynomial. The power basis is an integral basis of Z[z], so the stored
// coefficients are integers exactly when the element is a cyclotomic
// integer, and two elements of the same order are equal exactly when their
// coefficient vectors are.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace galchar {

using Rational = mpq_class;

namespace detail {
struct CyclotomicBasis;
}

class CycNumber {
 public:
  /// Zero of Q[z_1] = Q.
  CycNumber();
  /// Zero of Q[z_n].
  explicit CycNumber(unsigned order);
  /// The rational q viewed in Q[z_n].
  CycNumber(unsigned order, const Rational& q);

  /// Sum over k of by_power[k] * z_n^k; indices at or beyond n wrap around.
  static CycNumber from_powers(unsigned order, std::span<const Rational> by_power);
  static CycNumber from_powers(unsigned order, std::span<const long long> by_power);
  /// Construct directly from canonical coordinates (length must be phi(order)).
  static CycNumber from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const noexcept;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Coefficient of 1; equals the value when is_rational().
  const Rational& constant_term() const noexcept { return coeffs_.front(); }

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator*=(const Rational& scalar);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(CycNumber a, const Rational& s) { return a *= s; }
  friend CycNumber operator*(const Rational& s, CycNumber a) { return a *= s; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

 private:
  CycNumber(const detail::CyclotomicBasis* basis, std::vector<Rational> coeffs);
  void require_same_order(const CycNumber& rhs, const char* op) const;

  const detail::CyclotomicBasis* basis_;
  std::vector<Rational> coeffs_;

  friend CycNumber galois_apply_unchecked(unsigned ell, const CycNumber& a);
};

/// z_n^k with k taken mod n.
CycNumber cyc_root(unsigned n, long long k);

enum class ArithOp { add, sub, mul };
/// Field arithmetic on operands of equal order; mismatched orders are rejected.
CycNumber arith(const CycNumber& a, const CycNumber& b, ArithOp op);

/// Image of a under Q[z_n] -> Q[z_m], z_n -> z_m^(m/n). Requires order(a) | m.
CycNumber embed(const CycNumber& a, unsigned m);

/// Multiplicative inverse; throws DomainError on zero.
CycNumber inverse(const CycNumber& a);

/// a^e for any integer e (negative exponents need a != 0).
CycNumber pow(const CycNumber& a, long long e);

/// The Galois automorphism sigma_ell of Q[z_n], z_n -> z_n^ell.
class GaloisAut {
 public:
  /// ell is reduced into [1, n]; throws DomainError unless gcd(ell, n) = 1.
  GaloisAut(unsigned order, long long ell);
  unsigned order() const noexcept { return order_; }
  unsigned ell() const noexcept { return ell_; }
  GaloisAut inverse() const;
  friend GaloisAut operator*(const GaloisAut& a, const GaloisAut& b);
  friend bool operator==(const GaloisAut&, const GaloisAut&) = default;

 private:
  unsigned order_;
  unsigned ell_;
};

CycNumber galois_apply(const GaloisAut& s, const CycNumber& a);

/// Complex conjugation, i.e. sigma_(n-1).
CycNumber conj(const CycNumber& a);

enum class CycClass { rational_integer, rational, cyclotomic_integer, general };
CycClass classify(const CycNumber& a);
std::string_view to_string(CycClass c);

/// Double-precision value of a. Test oracle and display only.
std::complex<double> to_complex(const CycNumber& a);

/// Smallest d dividing order(a) such that a lies in Q[z_d].
unsigned conductor(const CycNumber& a);

/// The element of Q[z_d] that embeds to a, if a lies in that subfield (d | order(a)).
std::optional<CycNumber> restrict_to(const CycNumber& a, unsigned d);

/// a re-expressed over Q[z_conductor(a)].
CycNumber minimal_form(const CycNumber& a);

/// Renders `a/b*z^k` terms joined by ` + ` / ` - ` followed by ` @n`,
/// e.g. `1 - 1*z^2 @5`. The constant term has no `*z^0`.
std::string to_string(const CycNumber& a);

/// to_string(minimal_form(a)), with rationals printed bare (`-1`, `1/2`).
std::string to_display_string(const CycNumber& a);

/// Parses the to_string grammar. A missing `@n` suffix means order 1; a bare
/// `z` or `z^k` term has coefficient 1. Throws ParseError.
CycNumber parse_cyc(std::string_view text);

}  // namespace galchar
