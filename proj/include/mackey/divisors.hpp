#pragma once

#include <vector>

#include "mackey/intmat.hpp"

namespace mackey {

// Divisor-lattice arithmetic for the cyclic group of order n.

std::vector<long> divisors(long n);            // ascending
std::vector<long> prime_factors(long n);       // distinct primes, ascending
long valuation(long a, long p);                // p-adic valuation
long prime_part(long a, long p);               // p^{v_p(a)}
long prime_copart(long a, long p);             // a / prime_part(a, p)
long gcd_of(long a, long b);
long lcm_of(long a, long b);
bool divides(long a, long b);                  // a | b

// The unique epsilon modulo [a,c] with epsilon ≡ 1 (mod a) and
// epsilon ≡ 1-(a,c) (mod c).  Requires a | n and c | n.
long epsilon_twist(long a, long c, long n);

}  // namespace mackey
