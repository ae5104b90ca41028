#include "korolat/modp.hpp"

#include <algorithm>
#include <string>

#include "korolat/errors.hpp"

namespace korolat {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1u;
    }
    return acc;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++r;
    }
    // Fixed witness set, deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> factors;
    if (n < 1) fail(Errc::OutOfRange, "factorize expects n >= 1");
    for (std::int64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            factors.emplace_back(q, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<std::int64_t> divisors_sorted(std::int64_t n) {
    std::vector<std::int64_t> divs{1};
    for (auto [q, e] : factorize(n)) {
        std::size_t base = divs.size();
        std::int64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        fail(Errc::NotPrime, "p must be a prime >= 3 (got " + std::to_string(p) + ")");
}

std::int64_t multiplicative_order(std::int64_t a, const PrimeModulus& p) {
    std::int64_t m = p.value();
    a = mod_norm(a, m);
    if (a == 0) fail(Errc::OutOfRange, "order of 0 is undefined");
    std::int64_t order = m - 1;
    for (auto [q, e] : factorize(m - 1)) {
        (void)e;
        while (order % q == 0 && mod_pow(a, order / q, m) == 1) order /= q;
    }
    return order;
}

std::int64_t primitive_root(const PrimeModulus& p) {
    std::int64_t m = p.value();
    auto factors = factorize(m - 1);
    for (std::int64_t g = 2; g < m; ++g) {
        bool primitive = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (mod_pow(g, (m - 1) / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    fail(Errc::Internal, "no primitive root found for prime " + std::to_string(m));
}

Subgroup subgroup_of_order(const PrimeModulus& p, std::int64_t d) {
    std::int64_t m = p.value();
    if (d < 1 || (m - 1) % d != 0)
        fail(Errc::NonDivisorOrder,
             "subgroup order " + std::to_string(d) + " does not divide p-1 = " + std::to_string(m - 1));
    std::int64_t g = primitive_root(p);
    std::int64_t h = mod_pow(g, (m - 1) / d, m);
    std::vector<std::int64_t> elements;
    elements.reserve(static_cast<std::size_t>(d));
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < d; ++j) {
        elements.push_back(x);
        x = mod_mul(x, h, m);
    }
    std::sort(elements.begin(), elements.end());
    return Subgroup{p, d, h, std::move(elements)};
}

Subgroup smallest_subgroup_meeting(const PrimeModulus& p, const Rational& delta) {
    if (delta <= 0 || delta >= 1)
        fail(Errc::OutOfDomain, "delta must lie in (0,1)");
    BigInt num = boost::multiprecision::numerator(delta);
    BigInt den = boost::multiprecision::denominator(delta);
    BigInt p_num = pow_bigint(BigInt(p.value()), num.convert_to<std::uint64_t>());
    for (std::int64_t d : divisors_sorted(p.value() - 1)) {
        // d >= p^(num/den)  <=>  d^den >= p^num
        if (pow_bigint(BigInt(d), den.convert_to<std::uint64_t>()) >= p_num)
            return subgroup_of_order(p, d);
    }
    fail(Errc::Internal, "no divisor of p-1 meets p^delta with delta < 1");
}

Coset coset(std::int64_t v, const Subgroup& base) {
    std::int64_t m = base.modulus.value();
    v = mod_norm(v, m);
    if (v == 0) fail(Errc::ZeroRepresentative, "coset representative must be nonzero mod p");
    std::vector<std::int64_t> elements;
    elements.reserve(base.elements.size());
    for (std::int64_t u : base.elements) elements.push_back(mod_mul(v, u, m));
    std::sort(elements.begin(), elements.end());
    return Coset{v, base, std::move(elements)};
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) fail(Errc::OutOfRange, "euler_phi expects n >= 1");
    std::int64_t phi = n;
    for (auto [q, e] : factorize(n)) {
        (void)e;
        phi -= phi / q;
    }
    return phi;
}

} // namespace korolat
