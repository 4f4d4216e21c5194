#ifndef PRIMEGRAPH_NUMTHEORY_HPP
#define PRIMEGRAPH_NUMTHEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pg::numtheory {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);

/// Deterministic primality test. Miller-Rabin with a base set that is
/// proven complete below 2^64; fixed extended bases above that (inputs
/// in this project stay below 2^128).
bool is_prime(u128 n);

/// A positive integer together with its complete prime factorization.
/// Invariant: product of p^e over factors equals value; factors empty iff value == 1.
struct FactoredInteger {
    u128 value = 1;
    std::map<u128, unsigned> factors;

    bool is_prime_power() const { return factors.size() == 1; }
    std::string str() const;  // e.g. "273 = 3 * 7 * 13"
};

/// Full factorization: trial division to 10^6, then Brent's rho with a
/// fixed seed. Deterministic. Throws std::invalid_argument on n == 0.
FactoredInteger factor(u128 n);

/// pi(n): sorted prime divisors of n. pi(1) is empty. Rejects n == 0.
std::vector<u128> prime_support(u128 n);

/// (p, k) with n = p^k if n >= 2 is a prime power, nullopt otherwise.
/// Rejects n <= 1.
std::optional<std::pair<u128, unsigned>> prime_power_part(u128 n);

/// Smallest primitive prime divisor of a^n - 1: the least prime dividing
/// a^n - 1 but no a^m - 1 for 1 <= m < n. Empty exactly in the two
/// classical exception patterns. Requires a >= 2, n >= 2 and a^n < 2^127.
std::optional<u128> zsigmondy(u64 a, unsigned n);

struct RatioPrimePowerResult {
    FactoredInteger ratio;     // (2^(2f)-1) / (2^(2b)-1), fully factored
    bool is_prime_power;
};

/// Checks whether (2^(2f)-1)/(2^(2b)-1) is a prime power, for f = n*b
/// with n = f/b an odd prime and f >= 6. Rejects inputs outside that range.
RatioPrimePowerResult ratio_prime_power_check(unsigned f, unsigned b);

/// q = p^f with p prime, f >= 1; nullopt if q is not a prime power (or q < 2).
std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q);

}  // namespace pg::numtheory

#endif
