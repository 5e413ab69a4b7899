#pragma once

/// Operations on lambda-quiddities: the size-(n+m-2) sum, the dihedral
/// equivalence (rotations and reversal), canonical forms, the two explicit
/// reduction moves (at a +-1 entry, at a 0 entry), and a complete
/// decomposition decision with witness.

#include <optional>
#include <utility>
#include <vector>

#include "quiddity/core.hpp"

namespace quiddity {

/// One element of the dihedral group acting on tuples: reverse first when
/// `reversed`, then rotate left by `rotation` positions.
struct DihedralTransform {
    std::size_t rotation = 0;
    bool reversed = false;

    bool operator==(const DihedralTransform& other) const {
        return rotation == other.rotation && reversed == other.reversed;
    }
};

namespace detail {

inline std::vector<RingValue> rotate_left(const std::vector<RingValue>& v, std::size_t r) {
    const std::size_t n = v.size();
    std::vector<RingValue> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back(v[(j + r) % n]);
    return out;
}

}  // namespace detail

inline RingTuple apply_transform(const DihedralTransform& tr, const RingTuple& t) {
    std::vector<RingValue> v = t.entries();
    if (tr.reversed) std::reverse(v.begin(), v.end());
    return RingTuple(t.ring(), detail::rotate_left(v, tr.rotation % t.size()));
}

/// All 2n transform/image pairs: rotations 0..n-1 of the tuple, then
/// rotations 0..n-1 of its reversal. Images may repeat on symmetric tuples.
inline std::vector<std::pair<DihedralTransform, RingTuple>> dihedral_orbit(const RingTuple& t) {
    std::vector<std::pair<DihedralTransform, RingTuple>> out;
    const std::size_t n = t.size();
    out.reserve(2 * n);
    for (bool reversed : {false, true})
        for (std::size_t r = 0; r < n; ++r) {
            DihedralTransform tr{r, reversed};
            out.emplace_back(tr, apply_transform(tr, t));
        }
    return out;
}

/// Lexicographically least element of the dihedral orbit. Exact rings only.
inline RingTuple canonical_form(const RingTuple& t) {
    if (!t.ring().is_exact())
        throw std::domain_error("canonical_form: no canonical order on inexact real values");
    std::optional<RingTuple> best;
    for (const auto& [tr, image] : dihedral_orbit(t)) {
        (void)tr;
        if (!best || compare(image, *best) == std::strong_ordering::less) best = image;
    }
    return *best;
}

/// Dihedral equivalence. Tuples of different sizes are never equivalent;
/// the rings must agree and be exact.
inline bool equivalent(const RingTuple& a, const RingTuple& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("equivalent: ring mismatch");
    if (!a.ring().is_exact())
        throw std::domain_error("equivalent: no exact equality on the real ring");
    if (a.size() != b.size()) return false;
    for (const auto& [tr, image] : dihedral_orbit(a)) {
        (void)tr;
        if (image == b) return true;
    }
    return false;
}

/// (a_1..a_n) + (b_1..b_m) = (a_1 + b_m, a_2..a_{n-1}, a_n + b_1, b_2..b_{m-1}),
/// of size n + m - 2. Neither commutative nor associative.
inline RingTuple sum(const RingTuple& a, const RingTuple& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("sum: ring mismatch");
    const std::size_t n = a.size(), m = b.size();
    if (n < 2 || m < 2) throw std::invalid_argument("sum: operands must have size >= 2");
    std::vector<RingValue> out;
    out.reserve(n + m - 2);
    out.push_back(a[0] + b[m - 1]);
    for (std::size_t j = 1; j + 1 < n; ++j) out.push_back(a[j]);
    out.push_back(a[n - 1] + b[0]);
    for (std::size_t j = 1; j + 1 < m; ++j) out.push_back(b[j]);
    return RingTuple(a.ring(), std::move(out));
}

/// Certificate that `transform` applied to the decomposed tuple equals
/// sum(left, right), with both operands lambda-quiddities of size >= 3.
struct DecompositionWitness {
    DihedralTransform transform;
    RingTuple left;
    RingTuple right;
};

namespace detail {

inline void require_quiddity(const RingTuple& t, const char* who) {
    if (!is_quiddity(t)) throw std::domain_error(std::string(who) + ": not a lambda-quiddity");
}

}  // namespace detail

/// Splits off (e,e,e) at a unit entry e = t[index] in {+1,-1}: rotating so
/// the unit is last, both its cyclic neighbours lose e and the unit itself
/// is dropped. Requires a quiddity of size >= 4; the result's operands are
/// quiddities again.
inline DecompositionWitness reduce_by_unit(const RingTuple& t, std::size_t index) {
    const std::size_t n = t.size();
    if (n < 4) throw std::invalid_argument("reduce_by_unit: tuple must have size >= 4");
    if (index >= n) throw std::invalid_argument("reduce_by_unit: index out of range");
    if (is_pm_one(t[index]) == PmOne::neither)
        throw std::invalid_argument("reduce_by_unit: entry is not +1 or -1");
    detail::require_quiddity(t, "reduce_by_unit");

    const RingValue& eps = t[index];
    DihedralTransform tr{(index + 1) % n, false};
    RingTuple r = apply_transform(tr, t);  // unit entry now last
    std::vector<RingValue> left;
    left.reserve(n - 1);
    left.push_back(r[0] - eps);
    for (std::size_t j = 1; j + 2 < n; ++j) left.push_back(r[j]);
    left.push_back(r[n - 2] - eps);
    RingTuple right(t.ring(), {eps, eps, eps});
    return DecompositionWitness{tr, RingTuple(t.ring(), std::move(left)), std::move(right)};
}

/// Splits off (-v, 0, v, 0) at a zero entry t[index], where v is the zero's
/// cyclic successor: rotating so the zero sits second-to-last, the last two
/// entries collapse into the new last entry. Requires a quiddity of
/// size >= 5.
inline DecompositionWitness reduce_by_zero(const RingTuple& t, std::size_t index) {
    const std::size_t n = t.size();
    if (n < 5) throw std::invalid_argument("reduce_by_zero: tuple must have size >= 5");
    if (index >= n) throw std::invalid_argument("reduce_by_zero: index out of range");
    if (!t[index].is_zero()) throw std::invalid_argument("reduce_by_zero: entry is not 0");
    detail::require_quiddity(t, "reduce_by_zero");

    const RingId& ring = t.ring();
    const RingValue& v = t[(index + 1) % n];
    DihedralTransform tr{(index + 2) % n, false};
    RingTuple r = apply_transform(tr, t);  // ends with (..., 0, v) up to rotation
    std::vector<RingValue> left;
    left.reserve(n - 2);
    for (std::size_t j = 0; j + 3 < n; ++j) left.push_back(r[j]);
    left.push_back(r[n - 3] + v);
    RingTuple right(ring, {-v, RingValue::zero(ring), v, RingValue::zero(ring)});
    return DecompositionWitness{tr, RingTuple(ring, std::move(left)), std::move(right)};
}

/// Complete decomposition decision for a quiddity of size n >= 3 over an
/// exact ring: returns the first witness in scan order (rotation ascending,
/// unreversed before reversed, left size m ascending, sign -1 before +1),
/// or nullopt iff no dihedral image of t is a sum of two quiddities of
/// size >= 3.
///
/// For a fixed image c and split (m, l = n+2-m), the right operand is
/// forced: its interior is c[m..n), and writing P for the word matrix of
/// that interior, a sum of quiddities with signs multiplying to eps
/// requires P_11 = -eps, b_first = eps P_12, b_last = -eps P_21.
inline std::optional<DecompositionWitness> decompose(const RingTuple& t) {
    const RingId& ring = t.ring();
    if (!ring.is_exact()) throw std::domain_error("decompose: no exact equality on the real ring");
    const std::size_t n = t.size();
    if (n < 3) throw std::invalid_argument("decompose: tuple must have size >= 3");
    detail::require_quiddity(t, "decompose");

    const RingValue one = RingValue::one(ring);
    std::vector<RingValue> eps_candidates{RingValue::minus_one(ring)};
    if (one != eps_candidates[0]) eps_candidates.push_back(one);

    for (std::size_t rot = 0; rot < n; ++rot) {
        for (bool reversed : {false, true}) {
            DihedralTransform tr{rot, reversed};
            RingTuple c = apply_transform(tr, t);
            for (std::size_t m = 3; m + 1 <= n; ++m) {
                const std::size_t l = n + 2 - m;
                if (l < 3) break;
                Mat2 p = word_matrix(ring, c.span().subspan(m, n - m));
                for (const RingValue& eps : eps_candidates) {
                    if (p.m11() != -eps) continue;
                    RingValue b_first = eps * p.m12();
                    RingValue b_last = -(eps * p.m21());
                    if (p.m22() != eps * (b_first * b_last - one)) continue;

                    std::vector<RingValue> left;
                    left.reserve(m);
                    left.push_back(c[0] - b_last);
                    for (std::size_t j = 1; j + 1 < m; ++j) left.push_back(c[j]);
                    left.push_back(c[m - 1] - b_first);

                    std::vector<RingValue> right;
                    right.reserve(l);
                    right.push_back(std::move(b_first));
                    for (std::size_t j = m; j < n; ++j) right.push_back(c[j]);
                    right.push_back(std::move(b_last));

                    DecompositionWitness w{tr, RingTuple(ring, std::move(left)),
                                           RingTuple(ring, std::move(right))};
                    if (!is_quiddity(w.left) || !is_quiddity(w.right) || sum(w.left, w.right) != c)
                        throw std::logic_error("decompose: witness failed re-verification");
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

/// A quiddity is irreducible when it has size >= 3 and no dihedral image
/// splits as a sum of two quiddities of size >= 3. The size-2 quiddity
/// (0,0) is not considered irreducible.
inline bool is_irreducible(const RingTuple& t) {
    detail::require_quiddity(t, "is_irreducible");
    if (t.size() == 2) return false;
    return !decompose(t).has_value();
}

}  // namespace quiddity
