#include "mackey/divisors.hpp"

#include <algorithm>
#include <numeric>

namespace mackey {

std::vector<long> divisors(long n) {
    if (n < 1) throw MackeyError("divisors: n must be positive");
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long valuation(long a, long p) {
    long v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

long prime_part(long a, long p) {
    long q = 1;
    while (a % p == 0) {
        a /= p;
        q *= p;
    }
    return q;
}

long prime_copart(long a, long p) { return a / prime_part(a, p); }

long gcd_of(long a, long b) { return std::gcd(a, b); }
long lcm_of(long a, long b) { return std::lcm(a, b); }
bool divides(long a, long b) { return a != 0 && b % a == 0; }

long epsilon_twist(long a, long c, long n) {
    if (!divides(a, n) || !divides(c, n)) throw MackeyError("epsilon_twist: arguments must divide n");
    const long g = std::gcd(a, c);
    const long l = std::lcm(a, c);
    // CRT: eps ≡ 1 (mod a), eps ≡ 1-g (mod c); consistent since g | (1 - (1-g)).
    for (long eps = 0; eps < l; ++eps) {
        if (eps % a == 1 % a && ((eps - (1 - g)) % c + c) % c == 0) return eps;
    }
    throw MackeyError("epsilon_twist: no solution (unreachable)");
}

}  // namespace mackey
