#pragma once

// Small integer helpers shared by the cyclotomic, group and covering code.

#include <cstdint>
#include <vector>

namespace galchar {

/// Least non-negative residue of a mod m (m > 0).
inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
long long mod_inverse(long long a, long long m);

unsigned euler_phi(unsigned n);

/// Positive divisors of n in increasing order.
std::vector<unsigned> divisors(unsigned n);

/// Distinct prime factors of n in increasing order.
std::vector<unsigned long long> prime_factors(unsigned long long n);

bool is_prime(unsigned long long n);

/// Residues in [1, n] coprime to n, increasing (for n = 1 this is {1}).
std::vector<unsigned> units_mod(unsigned n);

// Arithmetic in Z/p for p < 2^32.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);

}  // namespace galchar
