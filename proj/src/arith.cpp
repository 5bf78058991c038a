#include "galchar/arith.hpp"

#include <numeric>
#include <string>

#include "galchar/error.hpp"

namespace galchar {

long long mod_inverse(long long a, long long m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  long long old_r = mod(a, m), r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (auto p : prime_factors(n)) result = result / static_cast<unsigned>(p) * (static_cast<unsigned>(p) - 1);
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; static_cast<unsigned long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<unsigned long long> prime_factors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> units_mod(unsigned n) {
  std::vector<unsigned> out;
  if (n == 1) return {1};
  for (unsigned l = 1; l < n; ++l)
    if (std::gcd(l, n) == 1) out.push_back(l);
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("zero has no inverse modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

}  // namespace galchar
