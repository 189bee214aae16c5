#pragma once

namespace solvagraph {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns the prime p when n = p^t (t >= 1), otherwise 0.
inline long long prime_power_base(long long n) {
  if (n < 2) return 0;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1 ? d : 0;
    }
  }
  return n;  // n itself prime
}

inline long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace solvagraph
