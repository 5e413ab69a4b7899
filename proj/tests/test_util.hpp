#pragma once

// Shared builders and independent oracles for the test suites. The oracles
// recompute results straight from the definitions (naive left-to-right
// matrix products in machine integers, cofactor-expansion determinants,
// generate-and-test enumeration, pairwise sum search), so library answers
// are always checked against a second, unrelated implementation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <quiddity/quiddity.hpp>

namespace testutil {

using namespace quiddity;

// ---------------------------------------------------------------------------
// Tuple builders
// ---------------------------------------------------------------------------

inline RingValue zv(long long v) { return RingValue::integer(v); }

inline RingTuple zt(const std::vector<long long>& vs) {
    std::vector<RingValue> entries;
    entries.reserve(vs.size());
    for (long long v : vs) entries.push_back(zv(v));
    return RingTuple(RingId::integers(), std::move(entries));
}

inline RingValue pv(const std::vector<long long>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(BigInt(v));
    return RingValue::polynomial(std::move(c));
}

inline RingTuple pt(const std::vector<std::vector<long long>>& polys) {
    std::vector<RingValue> entries;
    entries.reserve(polys.size());
    for (const auto& coeffs : polys) entries.push_back(pv(coeffs));
    return RingTuple(RingId::poly(), std::move(entries));
}

inline RingValue gv(long long re, long long im_half) { return RingValue::gauss(re, im_half); }

inline RingTuple gt(const std::vector<std::pair<long long, long long>>& vs) {
    std::vector<RingValue> entries;
    entries.reserve(vs.size());
    for (const auto& [re, im_half] : vs) entries.push_back(gv(re, im_half));
    return RingTuple(RingId::gauss_even(), std::move(entries));
}

inline RingTuple mt(std::uint64_t n, const std::vector<long long>& vs) {
    std::vector<RingValue> entries;
    entries.reserve(vs.size());
    for (long long v : vs) entries.push_back(RingValue::modular(n, BigInt(v)));
    return RingTuple(RingId::mod(n), std::move(entries));
}

// ---------------------------------------------------------------------------
// Naive 2x2 machine-integer matrices (independent of the library types)
// ---------------------------------------------------------------------------

struct M64 {
    long long a, b, c, d;
    bool operator==(const M64& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

inline M64 mul64(const M64& x, const M64& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

inline M64 elem64(long long v) { return {v, -1, 1, 0}; }

// Accumulated left to right as written, E(a_n) * E(a_{n-1}) * ... * E(a_1),
// the opposite association order from the library's builder.
inline M64 word64(const std::vector<long long>& t) {
    M64 acc = elem64(t.back());
    for (std::size_t i = t.size() - 1; i-- > 0;) acc = mul64(acc, elem64(t[i]));
    return acc;
}

// +1 for Id, -1 for -Id, 0 otherwise.
inline int pm_id64(const M64& m) {
    if (m == M64{1, 0, 0, 1}) return 1;
    if (m == M64{-1, 0, 0, -1}) return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// Cofactor-expansion determinant of the tridiagonal continuant matrix
// ---------------------------------------------------------------------------

inline BigInt det_cofactor(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t k = m.size();
    if (k == 0) return BigInt(1);
    if (k == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        minor.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<BigInt> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        BigInt term = m[0][j] * det_cofactor(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// K_k(x_1..x_k) as the determinant of the k x k tridiagonal matrix with the
// entries on the diagonal and 1 on both off-diagonals.
inline BigInt continuant_det_oracle(const std::vector<long long>& xs) {
    const std::size_t k = xs.size();
    std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k, BigInt(0)));
    for (std::size_t i = 0; i < k; ++i) {
        m[i][i] = BigInt(xs[i]);
        if (i + 1 < k) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return det_cofactor(m);
}

// ---------------------------------------------------------------------------
// Generate-and-test enumeration over Z (odometer over the box)
// ---------------------------------------------------------------------------

struct NaiveQuiddity {
    std::vector<long long> tuple;
    int sign;  // +1 or -1
};

inline std::vector<NaiveQuiddity> naive_z_quiddities(long long bound, std::size_t n) {
    std::vector<NaiveQuiddity> out;
    std::vector<long long> t(n, -bound);
    while (true) {
        int s = pm_id64(word64(t));
        if (s != 0) out.push_back(NaiveQuiddity{t, s});
        std::size_t i = 0;
        while (i < n && t[i] == bound) t[i++] = -bound;
        if (i == n) break;
        ++t[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force reducibility oracle over Z: scan every dihedral image of t
// and every pair of quiddity operands with entries in [-bound, bound].
// ---------------------------------------------------------------------------

inline std::vector<long long> sum64(const std::vector<long long>& a,
                                    const std::vector<long long>& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<long long> out;
    out.reserve(n + m - 2);
    out.push_back(a[0] + b[m - 1]);
    for (std::size_t j = 1; j + 1 < n; ++j) out.push_back(a[j]);
    out.push_back(a[n - 1] + b[0]);
    for (std::size_t j = 1; j + 1 < m; ++j) out.push_back(b[j]);
    return out;
}

inline std::vector<std::vector<long long>> orbit64(std::vector<long long> t) {
    std::vector<std::vector<long long>> out;
    const std::size_t n = t.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<long long> img(n);
            for (std::size_t j = 0; j < n; ++j) img[j] = t[(j + r) % n];
            out.push_back(std::move(img));
        }
        std::reverse(t.begin(), t.end());
    }
    return out;
}

inline const std::vector<std::vector<long long>>& quiddity_pool(long long bound, std::size_t size) {
    static std::map<std::pair<long long, std::size_t>, std::vector<std::vector<long long>>> cache;
    auto key = std::make_pair(bound, size);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<std::vector<long long>> pool;
        for (const auto& q : naive_z_quiddities(bound, size)) pool.push_back(q.tuple);
        it = cache.emplace(key, std::move(pool)).first;
    }
    return it->second;
}

inline std::vector<long long> canonical64(const std::vector<long long>& t) {
    auto orbit = orbit64(t);
    return *std::min_element(orbit.begin(), orbit.end());
}

// Canonical forms of every sum of two quiddity operands of sizes >= 3
// totalling n + 2, with operand entries in [-bound, bound]. Built once per
// (n, bound) from the pools, so membership answers reducibility for any
// candidate of that size in one lookup.
inline const std::set<std::vector<long long>>& reducible_canon_set(std::size_t n,
                                                                   long long bound) {
    static std::map<std::pair<std::size_t, long long>, std::set<std::vector<long long>>> cache;
    auto key = std::make_pair(n, bound);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::set<std::vector<long long>> sums;
        for (std::size_t m = 3; m + 1 <= n; ++m) {
            const std::size_t l = n + 2 - m;
            for (const auto& a : quiddity_pool(bound, m))
                for (const auto& b : quiddity_pool(bound, l))
                    sums.insert(canonical64(sum64(a, b)));
        }
        it = cache.emplace(key, std::move(sums)).first;
    }
    return it->second;
}

// Is some dihedral image of t a sum of two quiddities of size >= 3 with
// entries in [-operand_bound, operand_bound]? For tuples of size <= 6 any
// decomposition forces the right operand's entries below max|t_i| + 1 and
// the left operand's below 2 max|t_i| + 1, so the search is complete once
// operand_bound >= 2 max|t_i| + 1.
inline bool oracle_reducible64(const std::vector<long long>& t, long long operand_bound) {
    if (t.size() < 4) return false;  // operands need size >= 3 and m + l - 2 = n
    return reducible_canon_set(t.size(), operand_bound).count(canonical64(t)) > 0;
}

// ---------------------------------------------------------------------------
// Witness validation
// ---------------------------------------------------------------------------

inline bool witness_ok(const RingTuple& original, const DecompositionWitness& w) {
    if (w.left.size() < 3 || w.right.size() < 3) return false;
    if (w.left.size() + w.right.size() != original.size() + 2) return false;
    if (!is_quiddity(w.left) || !is_quiddity(w.right)) return false;
    return sum(w.left, w.right) == apply_transform(w.transform, original);
}

}  // namespace testutil
