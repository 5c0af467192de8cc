#pragma once

namespace bundlelabel {

// Nonnegative residue in [0, n), also for negative x.  n >= 1.
constexpr long long mod_floor(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

// True iff d <= (|x - y| mod n) <= n - d.  This is the cyclic
// separation test: it is sufficient for |(x mod n) - (y mod n)| >= d,
// and it is the form every distance argument in this library uses.
// The converse fails in wrap cases, e.g. (6, 0, 7, 2).
constexpr bool mod_abs_diff_in_range(long long x, long long y, long long n,
                                     long long d) {
    long long r = mod_floor(x >= y ? x - y : y - x, n);
    return d <= r && r <= n - d;
}

// |(a mod n) - (b mod n)| is either (|a-b| mod n) or n - (|a-b| mod n).
// Always true; exposed as an oracle for property tests.
constexpr bool residue_diff_dichotomy(long long a, long long b, long long n) {
    long long lhs = mod_floor(a, n) - mod_floor(b, n);
    if (lhs < 0) lhs = -lhs;
    long long r = mod_floor(a >= b ? a - b : b - a, n);
    return lhs == r || lhs == n - r;
}

// |a*n - b| mod n is either (b mod n) or n - (b mod n).  Always true;
// exposed as an oracle for property tests.
constexpr bool multiple_offset_dichotomy(long long a, long long b,
                                         long long n) {
    long long v = a * n - b;
    if (v < 0) v = -v;
    v = mod_floor(v, n);
    long long bm = mod_floor(b, n);
    return v == bm || v == n - bm;
}

}  // namespace bundlelabel
