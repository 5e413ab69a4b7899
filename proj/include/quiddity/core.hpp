#pragma once

/// Core objects of the lambda-quiddity calculus: the elementary matrices
/// E(x) = [[x,-1],[1,0]], their ordered products M_n = E(a_n)...E(a_1),
/// continuants, and the verdict "is (a_1,...,a_n) a lambda-quiddity",
/// i.e. M_n = +Id or -Id.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <utility>

#include "quiddity/rings.hpp"

namespace quiddity {

enum class QuidditySign { plus, minus };

inline const char* to_string(QuidditySign s) {
    return s == QuidditySign::plus ? "plus" : "minus";
}

/// Sign of the identity reached by the word matrix. `ambiguous` is set when
/// +Id and -Id coincide in the ring (Z/2Z); the sign then reads `plus` by
/// convention.
struct QuiddityVerdict {
    QuidditySign sign;
    bool ambiguous = false;
};

/// 2x2 matrix over one ring of the tower.
class Mat2 {
public:
    Mat2(RingValue m11, RingValue m12, RingValue m21, RingValue m22)
        : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)), m22_(std::move(m22)) {
        if (m11_.ring() != m12_.ring() || m11_.ring() != m21_.ring() ||
            m11_.ring() != m22_.ring())
            throw std::invalid_argument("Mat2: entries from different rings");
    }

    static Mat2 identity(const RingId& ring) {
        return Mat2(RingValue::one(ring), RingValue::zero(ring), RingValue::zero(ring),
                    RingValue::one(ring));
    }

    static Mat2 minus_identity(const RingId& ring) {
        return Mat2(RingValue::minus_one(ring), RingValue::zero(ring), RingValue::zero(ring),
                    RingValue::minus_one(ring));
    }

    const RingId& ring() const noexcept { return m11_.ring(); }
    const RingValue& m11() const noexcept { return m11_; }
    const RingValue& m12() const noexcept { return m12_; }
    const RingValue& m21() const noexcept { return m21_; }
    const RingValue& m22() const noexcept { return m22_; }

    Mat2 operator*(const Mat2& other) const {
        return Mat2(m11_ * other.m11_ + m12_ * other.m21_, m11_ * other.m12_ + m12_ * other.m22_,
                    m21_ * other.m11_ + m22_ * other.m21_, m21_ * other.m12_ + m22_ * other.m22_);
    }

    Mat2 operator-() const { return Mat2(-m11_, -m12_, -m21_, -m22_); }

    bool operator==(const Mat2& other) const {
        return m11_ == other.m11_ && m12_ == other.m12_ && m21_ == other.m21_ &&
               m22_ == other.m22_;
    }
    bool operator!=(const Mat2& other) const { return !(*this == other); }

    RingValue det() const { return m11_ * m22_ - m12_ * m21_; }

private:
    RingValue m11_, m12_, m21_, m22_;
};

/// E(x) = [[x, -1], [1, 0]].
inline Mat2 elementary(const RingValue& x) {
    const RingId& ring = x.ring();
    return Mat2(x, RingValue::minus_one(ring), RingValue::one(ring), RingValue::zero(ring));
}

/// Non-empty tuple of values from a single ring.
class RingTuple {
public:
    RingTuple(RingId ring, std::vector<RingValue> entries)
        : ring_(ring), entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("RingTuple: tuple must be non-empty");
        for (const auto& e : entries_)
            if (e.ring() != ring_)
                throw std::invalid_argument("RingTuple: entry from a different ring");
    }

    const RingId& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const RingValue& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<RingValue>& entries() const noexcept { return entries_; }
    std::span<const RingValue> span() const noexcept { return entries_; }

    bool operator==(const RingTuple& other) const {
        if (ring_ != other.ring_)
            throw std::invalid_argument("RingTuple: comparing tuples over different rings");
        if (entries_.size() != other.entries_.size()) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] != other.entries_[i]) return false;
        return true;
    }
    bool operator!=(const RingTuple& other) const { return !(*this == other); }

private:
    RingId ring_;
    std::vector<RingValue> entries_;
};

/// Size-then-lexicographic order on tuples of one exact ring.
inline std::strong_ordering compare(const RingTuple& a, const RingTuple& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("compare: ring mismatch");
    if (a.size() != b.size())
        return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = compare(a[i], b[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

/// M_k = E(x_k)...E(x_1) over a non-empty span.
inline Mat2 word_matrix(const RingId& ring, std::span<const RingValue> xs) {
    if (xs.empty()) return Mat2::identity(ring);
    Mat2 m = elementary(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) m = elementary(xs[i]) * m;
    return m;
}

inline Mat2 word_matrix(const RingTuple& t) { return word_matrix(t.ring(), t.span()); }

/// Continuant K_k(x_1,...,x_k) by the recurrence
/// K_i = x_i K_{i-1} - K_{i-2}, K_0 = 1, K_{-1} = 0. The empty span gives K_0.
inline RingValue continuant(const RingId& ring, std::span<const RingValue> xs) {
    RingValue prev2 = RingValue::zero(ring);  // K_{i-2}
    RingValue prev = RingValue::one(ring);    // K_{i-1}
    for (const RingValue& x : xs) {
        RingValue cur = x * prev - prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

inline RingValue continuant(const RingTuple& t) { return continuant(t.ring(), t.span()); }

/// The boundary value K_{-1} = 0 of the continuant recurrence.
inline RingValue continuant_minus_one(const RingId& ring) { return RingValue::zero(ring); }

/// Checks the closed form of the word matrix,
///   M_n = [[ K_n(x_1..x_n),    -K_{n-1}(x_2..x_n)   ],
///          [ K_{n-1}(x_1..x_{n-1}), -K_{n-2}(x_2..x_{n-1}) ]],
/// entrywise. Requires n >= 2.
inline bool continuant_matrix_identity_check(const RingTuple& t) {
    const std::size_t n = t.size();
    if (n < 2)
        throw std::invalid_argument("continuant_matrix_identity_check: tuple must have size >= 2");
    const RingId& ring = t.ring();
    std::span<const RingValue> xs = t.span();
    Mat2 m = word_matrix(t);
    return m.m11() == continuant(ring, xs) &&
           m.m12() == -continuant(ring, xs.subspan(1, n - 1)) &&
           m.m21() == continuant(ring, xs.subspan(0, n - 1)) &&
           m.m22() == -continuant(ring, xs.subspan(1, n - 2));
}

/// Exact verdict: engaged iff the word matrix is +Id or -Id.
/// Rejects the real ring; use is_quiddity_approx there.
inline std::optional<QuiddityVerdict> is_quiddity(const RingTuple& t) {
    const RingId& ring = t.ring();
    if (!ring.is_exact())
        throw std::domain_error("is_quiddity: real ring needs the tolerance-based check");
    Mat2 m = word_matrix(t);
    bool ambiguous = RingValue::one(ring) == RingValue::minus_one(ring);
    if (m == Mat2::identity(ring)) return QuiddityVerdict{QuidditySign::plus, ambiguous};
    if (m == Mat2::minus_identity(ring)) return QuiddityVerdict{QuidditySign::minus, false};
    return std::nullopt;
}

/// Tolerance-based verdict over the real ring: engaged with sign s iff the
/// max-norm distance from M_n to s*Id is < tol.
inline std::optional<QuidditySign> is_quiddity_approx(const RingTuple& t, double tol) {
    if (t.ring().tag() != RingTag::real)
        throw std::domain_error("is_quiddity_approx: tuple is not over the real ring");
    if (!(tol > 0)) throw std::invalid_argument("is_quiddity_approx: tolerance must be > 0");
    double m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    for (const RingValue& e : t.entries()) {
        double x = e.as_real();
        // left-multiply by E(x)
        double n11 = x * m11 - m21, n12 = x * m12 - m22;
        double n21 = m11, n22 = m12;
        m11 = n11, m12 = n12, m21 = n21, m22 = n22;
    }
    double to_plus = std::max({std::abs(m11 - 1), std::abs(m12), std::abs(m21), std::abs(m22 - 1)});
    double to_minus =
        std::max({std::abs(m11 + 1), std::abs(m12), std::abs(m21), std::abs(m22 + 1)});
    if (to_plus < tol) return QuidditySign::plus;
    if (to_minus < tol) return QuidditySign::minus;
    return std::nullopt;
}

/// The constant real tuple (u_n, ..., u_n) of size n with u_n = 2cos(pi/n),
/// a lambda-quiddity of sign minus for every n >= 2.
inline RingTuple cos_quiddity(int n) {
    if (n < 2) throw std::invalid_argument("cos_quiddity: size must be >= 2");
    double u = 2.0 * std::cos(std::numbers::pi / n);
    std::vector<RingValue> entries(static_cast<std::size_t>(n), RingValue::real_number(u));
    return RingTuple(RingId::real(), std::move(entries));
}

/// Tuple grammar: comma-separated values, optionally parenthesized,
/// whitespace insignificant. Commas inside '[' ']' belong to the value.
inline RingTuple parse_tuple(const RingId& ring, std::string_view text) {
    detail::Scanner s{text};
    s.skip_ws();
    bool paren = !s.at_end() && s.peek() == '(';
    if (paren) ++s.pos;
    std::vector<RingValue> entries;
    std::size_t piece_start = s.pos;
    int bracket_depth = 0;
    auto flush = [&](std::size_t end) {
        std::string_view piece = text.substr(piece_start, end - piece_start);
        try {
            entries.push_back(parse_value(ring, piece));
        } catch (const parse_error& e) {
            throw parse_error(e.what(), piece_start + e.position());
        }
    };
    while (true) {
        if (s.at_end()) {
            if (paren) throw parse_error("missing ')' at end of tuple", s.pos);
            flush(s.pos);
            break;
        }
        char c = s.peek();
        if (c == '[') ++bracket_depth;
        if (c == ']') --bracket_depth;
        if (c == ',' && bracket_depth == 0) {
            flush(s.pos);
            ++s.pos;
            piece_start = s.pos;
            continue;
        }
        if (c == ')' && bracket_depth == 0) {
            if (!paren) throw parse_error("unexpected ')'", s.pos);
            flush(s.pos);
            ++s.pos;
            s.require_end("trailing characters after tuple");
            break;
        }
        ++s.pos;
    }
    return RingTuple(ring, std::move(entries));
}

/// Always parenthesized, no whitespace; re-parses to an equal tuple.
inline std::string format_tuple(const RingTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += format_value(t[i]);
    }
    out += ')';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RingTuple& t) {
    return os << format_tuple(t);
}

}  // namespace quiddity
