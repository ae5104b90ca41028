#include "korolat/numeric.hpp"

#include <cctype>
#include <cstdlib>

#include "korolat/errors.hpp"

namespace korolat {

std::int64_t mod_norm(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(mod_norm(a, m)) * mod_norm(b, m) % m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t acc = 1 % m;
    std::int64_t b = mod_norm(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, b, m);
        b = mod_mul(b, b, m);
        exp >>= 1;
    }
    return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_norm(a, m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        fail(Errc::OutOfDomain, "element is not invertible modulo " + std::to_string(m));
    return mod_norm(t0, m);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
            fail(Errc::OutOfRange, "cannot parse rational '" + text + "'");
        value = Rational(BigInt(num), BigInt(den));
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
            fail(Errc::OutOfRange, "cannot parse rational '" + text + "'");
        BigInt scale = pow_bigint(BigInt(10), fp.size());
        BigInt num = BigInt(ip) * scale + (fp.empty() ? BigInt(0) : BigInt(fp));
        value = Rational(num, scale);
    } else {
        if (!all_digits(s))
            fail(Errc::OutOfRange, "cannot parse rational '" + text + "'");
        value = Rational(BigInt(s));
    }
    return negative ? -value : value;
}

std::string to_fraction_string(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

BigInt pow_bigint(const BigInt& base, std::uint64_t exp) {
    BigInt acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1u) acc *= b;
        b *= b;
        exp >>= 1u;
    }
    return acc;
}

} // namespace korolat
