#include "primegraph/numtheory.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pg::numtheory {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: non-digit in input");
        u128 next = v * 10 + static_cast<unsigned>(c - '0');
        if (next < v) throw std::invalid_argument("parse_u128: overflow");
        v = next;
    }
    return v;
}

namespace {

u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= static_cast<u128>(UINT64_MAX)) return (a % m) * (b % m) % m;
    // shift-add; operands can exceed 64 bits
    a %= m;
    b %= m;
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m || r < a) r -= m;  // wrap-safe: m < 2^127 is required
        }
        u128 a2 = a + a;
        if (a2 >= m || a2 < a) a2 -= m;
        a = a2;
        b >>= 1;
    }
    return r;
}

u128 powmod(u128 b, u128 e, u128 m) {
    u128 r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool miller_rabin(u128 n, u128 a) {
    if (a % n == 0) return true;
    u128 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Complete below 2^64 (Sinclair base set plus small primes); kept as
// fixed extra rounds above 2^64.
constexpr u64 kBases64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr u64 kBasesBig[] = {41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
                             103, 107, 109, 113, 127, 131, 137, 139, 149, 151};

u128 integer_sqrt(u128 n) {
    if (n < 2) return n;
    u128 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

constexpr u64 kTrialBound = 1000000;

// Brent's cycle-finding variant of Pollard rho. n must be odd composite,
// not a prime power residue of trial division.
u128 pollard_brent(u128 n, std::mt19937_64& rng) {
    while (true) {
        u128 y = rng() % (n - 1) + 1;
        u128 c = rng() % (n - 1) + 1;
        u128 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u128 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            u128 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u128 lim = std::min<u128>(m, r - k);
                for (u128 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd128(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = gcd128(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; retry with fresh parameters
    }
}

void factor_rec(u128 n, std::map<u128, unsigned>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (u128 r = integer_sqrt(n); r * r == n) {
        factor_rec(r, out, rng);
        factor_rec(r, out, rng);
        return;
    }
    u128 d = pollard_brent(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

bool is_prime(u128 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : kBases64)
        if (!miller_rabin(n, a)) return false;
    if (n >> 64 != 0) {
        for (u64 a : kBasesBig)
            if (!miller_rabin(n, a)) return false;
    }
    return true;
}

FactoredInteger factor(u128 n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    FactoredInteger out;
    out.value = n;
    while ((n & 1) == 0) {
        ++out.factors[2];
        n >>= 1;
    }
    for (u64 d = 3; d <= kTrialBound && static_cast<u128>(d) * d <= n; d += 2) {
        while (n % d == 0) {
            ++out.factors[d];
            n /= d;
        }
    }
    if (n > 1) {
        if (n <= static_cast<u128>(kTrialBound) * kTrialBound || is_prime(n)) {
            ++out.factors[n];
        } else {
            std::mt19937_64 rng(0x5eed0fbeefcafe01ULL);  // fixed seed: deterministic output
            factor_rec(n, out.factors, rng);
        }
    }
    return out;
}

std::string FactoredInteger::str() const {
    std::string s = to_string(value);
    if (factors.empty()) return s;
    s += " = ";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) s += " * ";
        first = false;
        s += to_string(p);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

std::vector<u128> prime_support(u128 n) {
    FactoredInteger f = factor(n);
    std::vector<u128> out;
    out.reserve(f.factors.size());
    for (const auto& [p, e] : f.factors) out.push_back(p);
    return out;
}

std::optional<std::pair<u128, unsigned>> prime_power_part(u128 n) {
    if (n <= 1) throw std::invalid_argument("prime_power_part: n must be >= 2");
    FactoredInteger f = factor(n);
    if (f.factors.size() != 1) return std::nullopt;
    const auto& [p, e] = *f.factors.begin();
    return std::make_pair(p, e);
}

std::optional<u128> zsigmondy(u64 a, unsigned n) {
    if (a < 2 || n < 2) throw std::invalid_argument("zsigmondy: requires a >= 2 and n >= 2");
    u128 pow = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (pow > (static_cast<u128>(1) << 120) / a)
            throw std::invalid_argument("zsigmondy: a^n out of supported range");
        pow *= a;
    }
    FactoredInteger f = factor(pow - 1);
    for (const auto& [p, e] : f.factors) {
        // primitive iff the multiplicative order of a mod p is exactly n
        bool primitive = true;
        for (unsigned m = 1; m < n; ++m) {
            if (powmod(a, m, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return p;  // factors iterate in ascending order
    }
    return std::nullopt;
}

RatioPrimePowerResult ratio_prime_power_check(unsigned f, unsigned b) {
    if (b < 1 || f < 6 || f % b != 0)
        throw std::invalid_argument("ratio_prime_power_check: requires f = n*b with f >= 6");
    unsigned n = f / b;
    if (n < 3 || !is_prime(n))
        throw std::invalid_argument("ratio_prime_power_check: f/b must be a prime >= 3");
    if (f > 63) throw std::invalid_argument("ratio_prime_power_check: f out of supported range");
    u128 num = ((static_cast<u128>(1) << (2 * f)) - 1);
    u128 den = ((static_cast<u128>(1) << (2 * b)) - 1);
    RatioPrimePowerResult out;
    out.ratio = factor(num / den);
    out.is_prime_power = out.ratio.is_prime_power();
    return out;
}

std::optional<std::pair<u64, unsigned>> prime_power_decompose(u64 q) {
    if (q < 2) return std::nullopt;
    auto pp = prime_power_part(q);
    if (!pp) return std::nullopt;
    return std::make_pair(static_cast<u64>(pp->first), pp->second);
}

}  // namespace pg::numtheory
