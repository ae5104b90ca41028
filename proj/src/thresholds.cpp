#include "korolat/thresholds.hpp"

#include <string>

#include "korolat/errors.hpp"

namespace korolat {

namespace {

// floor(10^244 / ln 2): 1/ln2 lies in [kInvLn2Digits, kInvLn2Digits + 1] / 10^244.
const char* const kInvLn2Digits =
    "1442695040888963407359924681001892137426645954152985934135449406931109219181"
    "1850798855266228935063444969975183096525442555931016871683596427206621582234"
    "7933627453736988471849363070138766353201553389431891666483764312861542404747"
    "84222894979047950";
constexpr int kInvLn2Scale = 244;

const Rational& inv_ln2_lo() {
    static const Rational v(BigInt(kInvLn2Digits), pow_bigint(BigInt(10), kInvLn2Scale));
    return v;
}

const Rational& inv_ln2_hi() {
    static const Rational v(BigInt(kInvLn2Digits) + 1, pow_bigint(BigInt(10), kInvLn2Scale));
    return v;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt rational_floor(const Rational& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

BigInt rational_ceil(const Rational& q) {
    BigInt f = rational_floor(q);
    return f + (Rational(f) == q ? 0 : 1);
}

void check_domain(const Rational& delta) {
    if (delta <= 0 || delta >= 1)
        fail(Errc::OutOfDomain, "delta must lie in (0,1)");
}

BigInt two_pow(int e) { return pow_bigint(BigInt(2), static_cast<std::uint64_t>(e)); }

} // namespace

Rational alpha_threshold(int m) {
    if (m < 1) fail(Errc::OutOfRange, "alpha_m requires m >= 1");
    return Rational(two_pow(m - 1), two_pow(m + 1) - m - 2);
}

Rational beta_threshold(int m) {
    if (m < 1) fail(Errc::OutOfRange, "beta_m requires m >= 1");
    return Rational(two_pow(m), two_pow(m + 2) - m - 4);
}

BranchInfo find_branch(const Rational& delta) {
    check_domain(delta);
    if (delta <= Rational(1, 4))
        fail(Errc::NoBranch,
             "delta = " + to_fraction_string(delta) +
                 " <= 1/4: no Case1/Case2 interval covers it");
    Rational alpha = alpha_threshold(1);
    for (int m = 1; m <= 100000; ++m) {
        Rational beta = beta_threshold(m);
        Rational alpha_next = alpha_threshold(m + 1);
        if (beta <= delta && delta < alpha) return BranchInfo{m, Branch::Case1, alpha, beta};
        if (alpha_next <= delta && delta < beta) return BranchInfo{m, Branch::Case2, alpha, beta};
        alpha = alpha_next;
    }
    fail(Errc::Internal, "branch descent did not terminate");
}

BigInt n_delta(const Rational& delta) {
    check_domain(delta);
    Rational base = Rational(81) / delta - 160;
    BigInt lo = rational_ceil(base + inv_ln2_lo());
    BigInt hi = rational_ceil(base + inv_ln2_hi());
    if (lo != hi)
        fail(Errc::Internal,
             "n_delta: 81/delta + 1/ln2 - 160 is within 1e-244 of an integer; "
             "widen the constant to resolve delta = " + to_fraction_string(delta));
    return lo < 3 ? BigInt(3) : lo;
}

BigInt s_prime(const Rational& delta) {
    BranchInfo info = find_branch(delta);
    int m = info.m;
    Rational inv2m(1, two_pow(m));
    Rational num, den;
    if (info.branch == Branch::Case1) {
        num = Rational(2 * m * m) * (delta - 1);
        den = Rational(4) * delta * (inv2m - 1) + 1;
    } else {
        num = Rational(2 * m * (m + 1)) * (delta - 1);
        den = delta * (Rational(3) * inv2m - 4) + 1;
    }
    // Both factors are negative on the branch interval.
    return rational_ceil(num / den) + 2;
}

SDoublePrime s_double_prime(const Rational& delta) {
    check_domain(delta);
    BigInt n = n_delta(delta);
    if (n > 1000000) return SDoublePrime{true, BigInt(0)};
    Rational num = (Rational(1) - delta) * Rational(two_pow(static_cast<int>(n.convert_to<long>())));
    Rational den = (delta * Rational(BigInt(160) + n, 81) - 1) * Rational(9, 20);
    return SDoublePrime{false, rational_floor(num / den) + 3};
}

ThresholdProfile threshold_profile(const Rational& delta) {
    check_domain(delta);
    ThresholdProfile profile;
    profile.delta = delta;
    profile.n_delta = n_delta(delta);
    if (delta > Rational(1, 4)) {
        profile.branch = find_branch(delta);
        profile.s_prime = s_prime(delta);
    }
    profile.s_double_prime = s_double_prime(delta);

    std::optional<BigInt> s_min;
    if (profile.s_prime) s_min = *profile.s_prime;
    if (!profile.s_double_prime.overflow) {
        if (!s_min || profile.s_double_prime.value < *s_min) s_min = profile.s_double_prime.value;
    }
    if (s_min && *s_min < 3) s_min = BigInt(3);  // the theorem additionally requires s >= 3
    profile.s_min = s_min;
    return profile;
}

std::vector<CorollaryRow> corollary_table() {
    struct Fixture {
        const char* left;
        const char* right;
        int s;
    };
    static const Fixture fixture[18] = {
        {"3/4", "1", 3},      {"2/3", "3/4", 4},    {"14/23", "2/3", 5},
        {"4/7", "14/23", 6},  {"6/11", "4/7", 7},   {"10/19", "6/11", 8},
        {"22/43", "10/19", 9}, {"1/2", "22/43", 10}, {"17/35", "1/2", 11},
        {"9/19", "17/35", 12}, {"19/41", "9/19", 13}, {"5/11", "19/41", 14},
        {"21/47", "5/11", 15}, {"11/25", "21/47", 16}, {"23/53", "11/25", 17},
        {"3/7", "23/53", 18}, {"25/59", "3/7", 19}, {"13/31", "25/59", 20},
    };
    std::vector<CorollaryRow> rows;
    rows.reserve(18);
    for (const Fixture& f : fixture) {
        Rational left = parse_rational(f.left);
        Rational right = parse_rational(f.right);
        Rational mid = (left + right) / 2;
        ThresholdProfile at_left = threshold_profile(left);
        ThresholdProfile at_mid = threshold_profile(mid);
        if (!at_left.s_min || !at_mid.s_min)
            fail(Errc::Internal, "corollary row has no finite s_min");
        CorollaryRow row{left, right, f.s, *at_left.s_min, *at_mid.s_min, false};
        row.pass = (row.s_left == f.s && row.s_mid == f.s);
        rows.push_back(row);
    }
    return rows;
}

void verify_corollary_table() {
    for (const CorollaryRow& row : corollary_table()) {
        if (!row.pass)
            fail(Errc::TableMismatch,
                 "row [" + to_fraction_string(row.left) + ", " + to_fraction_string(row.right) +
                     ") expected s = " + std::to_string(row.expected_s) + ", computed " +
                     row.s_left.str() + " / " + row.s_mid.str());
    }
}

} // namespace korolat
