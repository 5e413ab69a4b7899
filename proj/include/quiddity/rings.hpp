#pragma once

/// Exact ring tower: arbitrary-precision integers, integers mod n, integer
/// polynomials Z[X] (one indeterminate, modelling Z[alpha] for alpha
/// transcendental), the subring Z[2i] = {a + 2bi} of the Gaussian integers,
/// and an inexact double-precision real ring.
///
/// Values are immutable after construction and every operation is a pure
/// function, so values can be shared freely across threads.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiddity {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Thrown by the text parsers; position() is a byte offset into the input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class RingTag { integers, mod, poly, gauss_even, real };

/// Identifies one ring of the tower; Mod carries its modulus n >= 2.
class RingId {
public:
    static RingId integers() { return RingId(RingTag::integers, 0); }

    static RingId mod(std::uint64_t n) {
        if (n < 2) throw std::invalid_argument("RingId::mod: modulus must be >= 2");
        return RingId(RingTag::mod, n);
    }

    static RingId poly() { return RingId(RingTag::poly, 0); }
    static RingId gauss_even() { return RingId(RingTag::gauss_even, 0); }
    static RingId real() { return RingId(RingTag::real, 0); }

    RingTag tag() const noexcept { return tag_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_exact() const noexcept { return tag_ != RingTag::real; }

    bool operator==(const RingId& other) const noexcept {
        return tag_ == other.tag_ && modulus_ == other.modulus_;
    }
    bool operator!=(const RingId& other) const noexcept { return !(*this == other); }

    /// Selector string: "z", "zmod:<n>", "zx", "z2i", "real".
    std::string selector() const {
        switch (tag_) {
            case RingTag::integers: return "z";
            case RingTag::mod: return "zmod:" + std::to_string(modulus_);
            case RingTag::poly: return "zx";
            case RingTag::gauss_even: return "z2i";
            case RingTag::real: return "real";
        }
        return "?";
    }

    static RingId from_selector(std::string_view text) {
        if (text == "z") return integers();
        if (text == "zx") return poly();
        if (text == "z2i") return gauss_even();
        if (text == "real") return real();
        constexpr std::string_view prefix = "zmod:";
        if (text.substr(0, prefix.size()) == prefix) {
            std::string_view digits = text.substr(prefix.size());
            std::uint64_t n = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
            if (ec != std::errc() || ptr != digits.data() + digits.size())
                throw parse_error("invalid modulus in ring selector", prefix.size());
            if (n < 2) throw parse_error("modulus must be >= 2", prefix.size());
            return mod(n);
        }
        throw parse_error("unknown ring selector '" + std::string(text) + "'", 0);
    }

private:
    RingId(RingTag tag, std::uint64_t modulus) : tag_(tag), modulus_(modulus) {}

    RingTag tag_;
    std::uint64_t modulus_;
};

enum class PmOne { plus, minus, neither };

namespace detail {

inline std::strong_ordering cmp_big(const BigInt& a, const BigInt& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline BigInt reduce_mod(const BigInt& v, std::uint64_t n) {
    BigInt m(n);
    BigInt r = v % m;
    if (r < 0) r += m;
    return r;
}

// Canonical coefficient form: no trailing zero, the zero polynomial is [0].
inline void normalize_poly(std::vector<BigInt>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(BigInt(0));
}

}  // namespace detail

struct GaussPair {
    BigInt re;       // a
    BigInt im_half;  // b, the represented value is a + 2bi
    bool operator==(const GaussPair& other) const {
        return re == other.re && im_half == other.im_half;
    }
};

/// One element of one ring of the tower. The payload representation is
/// exact for every ring except Real:
///   integers    signed arbitrary-precision integer
///   mod         residue in [0, n-1]
///   poly        ascending coefficient list, normalized
///   gauss_even  pair (a, b) standing for a + 2bi
///   real        double
class RingValue {
public:
    RingValue() : ring_(RingId::integers()), payload_(BigInt(0)) {}

    static RingValue integer(BigInt v) {
        return RingValue(RingId::integers(), Payload(std::move(v)));
    }

    static RingValue modular(std::uint64_t modulus, const BigInt& v) {
        return RingValue(RingId::mod(modulus), Payload(detail::reduce_mod(v, modulus)));
    }

    static RingValue polynomial(std::vector<BigInt> coeffs) {
        detail::normalize_poly(coeffs);
        return RingValue(RingId::poly(), Payload(std::move(coeffs)));
    }

    static RingValue gauss(BigInt re, BigInt im_half) {
        return RingValue(RingId::gauss_even(), Payload(GaussPair{std::move(re), std::move(im_half)}));
    }

    static RingValue real_number(double v) { return RingValue(RingId::real(), Payload(v)); }

    /// Image of the rational integer k under the canonical embedding.
    static RingValue from_integer(const RingId& ring, const BigInt& k) {
        switch (ring.tag()) {
            case RingTag::integers: return integer(k);
            case RingTag::mod: return modular(ring.modulus(), k);
            case RingTag::poly: return polynomial({k});
            case RingTag::gauss_even: return gauss(k, 0);
            case RingTag::real: return real_number(static_cast<double>(k));
        }
        throw std::logic_error("from_integer: bad ring tag");
    }

    static RingValue zero(const RingId& ring) { return from_integer(ring, BigInt(0)); }
    static RingValue one(const RingId& ring) { return from_integer(ring, BigInt(1)); }
    static RingValue minus_one(const RingId& ring) { return from_integer(ring, BigInt(-1)); }

    const RingId& ring() const noexcept { return ring_; }

    const BigInt& as_integer() const {
        if (ring_.tag() != RingTag::integers && ring_.tag() != RingTag::mod)
            throw std::invalid_argument("as_integer: value is not an integer or residue");
        return std::get<BigInt>(payload_);
    }

    const std::vector<BigInt>& coefficients() const {
        if (ring_.tag() != RingTag::poly)
            throw std::invalid_argument("coefficients: value is not a polynomial");
        return std::get<std::vector<BigInt>>(payload_);
    }

    /// Degree of the stored coefficient list; the zero polynomial has degree 0.
    int degree() const { return static_cast<int>(coefficients().size()) - 1; }

    const GaussPair& gauss_parts() const {
        if (ring_.tag() != RingTag::gauss_even)
            throw std::invalid_argument("gauss_parts: value is not in Z[2i]");
        return std::get<GaussPair>(payload_);
    }

    double as_real() const {
        if (ring_.tag() != RingTag::real)
            throw std::invalid_argument("as_real: value is not in the real ring");
        return std::get<double>(payload_);
    }

    bool is_zero() const {
        switch (ring_.tag()) {
            case RingTag::integers:
            case RingTag::mod: return std::get<BigInt>(payload_) == 0;
            case RingTag::poly: {
                const auto& c = std::get<std::vector<BigInt>>(payload_);
                return c.size() == 1 && c[0] == 0;
            }
            case RingTag::gauss_even: {
                const auto& g = std::get<GaussPair>(payload_);
                return g.re == 0 && g.im_half == 0;
            }
            case RingTag::real: return std::get<double>(payload_) == 0.0;
        }
        return false;
    }

    RingValue operator+(const RingValue& other) const {
        require_same_ring(other);
        switch (ring_.tag()) {
            case RingTag::integers:
                return integer(std::get<BigInt>(payload_) + std::get<BigInt>(other.payload_));
            case RingTag::mod:
                return modular(ring_.modulus(),
                               std::get<BigInt>(payload_) + std::get<BigInt>(other.payload_));
            case RingTag::poly: {
                const auto& a = std::get<std::vector<BigInt>>(payload_);
                const auto& b = std::get<std::vector<BigInt>>(other.payload_);
                std::vector<BigInt> out(std::max(a.size(), b.size()), BigInt(0));
                for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
                for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
                return polynomial(std::move(out));
            }
            case RingTag::gauss_even: {
                const auto& a = std::get<GaussPair>(payload_);
                const auto& b = std::get<GaussPair>(other.payload_);
                return gauss(a.re + b.re, a.im_half + b.im_half);
            }
            case RingTag::real:
                return real_number(std::get<double>(payload_) + std::get<double>(other.payload_));
        }
        throw std::logic_error("operator+: bad ring tag");
    }

    RingValue operator*(const RingValue& other) const {
        require_same_ring(other);
        switch (ring_.tag()) {
            case RingTag::integers:
                return integer(std::get<BigInt>(payload_) * std::get<BigInt>(other.payload_));
            case RingTag::mod:
                return modular(ring_.modulus(),
                               std::get<BigInt>(payload_) * std::get<BigInt>(other.payload_));
            case RingTag::poly: {
                const auto& a = std::get<std::vector<BigInt>>(payload_);
                const auto& b = std::get<std::vector<BigInt>>(other.payload_);
                std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
                return polynomial(std::move(out));
            }
            case RingTag::gauss_even: {
                // (a + 2bi)(c + 2di) = (ac - 4bd) + 2(ad + bc)i
                const auto& x = std::get<GaussPair>(payload_);
                const auto& y = std::get<GaussPair>(other.payload_);
                return gauss(x.re * y.re - 4 * x.im_half * y.im_half,
                             x.re * y.im_half + x.im_half * y.re);
            }
            case RingTag::real:
                return real_number(std::get<double>(payload_) * std::get<double>(other.payload_));
        }
        throw std::logic_error("operator*: bad ring tag");
    }

    RingValue operator-() const {
        switch (ring_.tag()) {
            case RingTag::integers: return integer(-std::get<BigInt>(payload_));
            case RingTag::mod: return modular(ring_.modulus(), -std::get<BigInt>(payload_));
            case RingTag::poly: {
                std::vector<BigInt> out = std::get<std::vector<BigInt>>(payload_);
                for (auto& c : out) c = -c;
                return RingValue(ring_, Payload(std::move(out)));
            }
            case RingTag::gauss_even: {
                const auto& g = std::get<GaussPair>(payload_);
                return gauss(-g.re, -g.im_half);
            }
            case RingTag::real: return real_number(-std::get<double>(payload_));
        }
        throw std::logic_error("operator-: bad ring tag");
    }

    RingValue operator-(const RingValue& other) const { return *this + (-other); }

    bool operator==(const RingValue& other) const {
        require_same_ring(other);
        return payload_ == other.payload_;
    }
    bool operator!=(const RingValue& other) const { return !(*this == other); }

private:
    using Payload = std::variant<BigInt, std::vector<BigInt>, GaussPair, double>;

    RingValue(RingId ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {}

    void require_same_ring(const RingValue& other) const {
        if (ring_ != other.ring_)
            throw std::invalid_argument("ring mismatch between '" + ring_.selector() + "' and '" +
                                        other.ring_.selector() + "'");
    }

    RingId ring_;
    Payload payload_;
};

/// Classifies a value against the ring's 1 and -1. In Z/2Z the two
/// coincide and `plus` is returned.
inline PmOne is_pm_one(const RingValue& x) {
    if (x == RingValue::one(x.ring())) return PmOne::plus;
    if (x == RingValue::minus_one(x.ring())) return PmOne::minus;
    return PmOne::neither;
}

/// Total order used for canonical forms. Rejects the real ring.
/// Poly orders by degree, then coefficients from highest to lowest, so
/// constant polynomials order like integers.
inline std::strong_ordering compare(const RingValue& x, const RingValue& y) {
    if (x.ring() != y.ring()) throw std::invalid_argument("compare: ring mismatch");
    switch (x.ring().tag()) {
        case RingTag::integers:
        case RingTag::mod: return detail::cmp_big(x.as_integer(), y.as_integer());
        case RingTag::poly: {
            const auto& a = x.coefficients();
            const auto& b = y.coefficients();
            if (a.size() != b.size())
                return a.size() < b.size() ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
            for (std::size_t i = a.size(); i-- > 0;) {
                auto c = detail::cmp_big(a[i], b[i]);
                if (c != std::strong_ordering::equal) return c;
            }
            return std::strong_ordering::equal;
        }
        case RingTag::gauss_even: {
            const auto& a = x.gauss_parts();
            const auto& b = y.gauss_parts();
            auto c = detail::cmp_big(a.re, b.re);
            if (c != std::strong_ordering::equal) return c;
            return detail::cmp_big(a.im_half, b.im_half);
        }
        case RingTag::real:
            throw std::domain_error("compare: no canonical order on inexact real values");
    }
    throw std::logic_error("compare: bad ring tag");
}

namespace detail {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    void expect(char c, const char* what) {
        if (at_end() || text[pos] != c) throw parse_error(what, pos);
        ++pos;
    }

    // -?[0-9]+
    BigInt parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (!at_end() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    BigInt parse_unsigned() {
        skip_ws();
        std::size_t start = pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected digits", start);
        return BigInt(std::string(text.substr(start, pos - start)));
    }

    double parse_double() {
        skip_ws();
        std::size_t start = pos;
        double v = 0.0;
        auto [ptr, ec] =
            std::from_chars(text.data() + start, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + start)
            throw parse_error("expected a decimal number", start);
        pos = static_cast<std::size_t>(ptr - text.data());
        return v;
    }

    void require_end(const char* what) {
        skip_ws();
        if (!at_end()) throw parse_error(what, pos);
    }
};

}  // namespace detail

/// Shortest-style decimal printing that round-trips doubles.
inline std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return os.str();
}

/// Value grammar, one form per ring:
///   z      -?[0-9]+
///   zmod   -?[0-9]+  (reduced mod n, out-of-range accepted)
///   zx     [c0,c1,...,cd]
///   z2i    a, a+bi or a-bi with b even
///   real   decimal float
inline RingValue parse_value(const RingId& ring, std::string_view text) {
    detail::Scanner s{text};
    switch (ring.tag()) {
        case RingTag::integers: {
            BigInt v = s.parse_int();
            s.require_end("trailing characters after integer");
            return RingValue::integer(std::move(v));
        }
        case RingTag::mod: {
            BigInt v = s.parse_int();
            s.require_end("trailing characters after residue");
            return RingValue::modular(ring.modulus(), v);
        }
        case RingTag::poly: {
            s.skip_ws();
            s.expect('[', "expected '[' to open a coefficient list");
            std::vector<BigInt> coeffs;
            while (true) {
                coeffs.push_back(s.parse_int());
                s.skip_ws();
                if (!s.at_end() && s.peek() == ',') {
                    ++s.pos;
                    continue;
                }
                s.expect(']', "expected ',' or ']' in coefficient list");
                break;
            }
            s.require_end("trailing characters after polynomial");
            return RingValue::polynomial(std::move(coeffs));
        }
        case RingTag::gauss_even: {
            BigInt re = s.parse_int();
            s.skip_ws();
            if (s.at_end()) return RingValue::gauss(std::move(re), 0);
            char sign = s.peek();
            if (sign != '+' && sign != '-')
                throw parse_error("expected '+', '-' or end after real part", s.pos);
            ++s.pos;
            std::size_t im_start = s.pos;
            BigInt im = s.parse_unsigned();
            s.skip_ws();
            s.expect('i', "expected 'i' after imaginary part");
            s.require_end("trailing characters after Gaussian value");
            if (im % 2 != 0)
                throw parse_error("imaginary part must be even in Z[2i]", im_start);
            if (sign == '-') im = -im;
            return RingValue::gauss(std::move(re), im / 2);
        }
        case RingTag::real: {
            double v = s.parse_double();
            s.require_end("trailing characters after real number");
            return RingValue::real_number(v);
        }
    }
    throw std::logic_error("parse_value: bad ring tag");
}

inline std::string format_value(const RingValue& x) {
    switch (x.ring().tag()) {
        case RingTag::integers:
        case RingTag::mod: return x.as_integer().str();
        case RingTag::poly: {
            std::string out = "[";
            const auto& c = x.coefficients();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ',';
                out += c[i].str();
            }
            out += ']';
            return out;
        }
        case RingTag::gauss_even: {
            const auto& g = x.gauss_parts();
            std::string out = g.re.str();
            if (g.im_half != 0) {
                BigInt im = 2 * g.im_half;
                out += im > 0 ? "+" + im.str() : im.str();
                out += 'i';
            }
            return out;
        }
        case RingTag::real: return format_double(x.as_real());
    }
    throw std::logic_error("format_value: bad ring tag");
}

inline std::ostream& operator<<(std::ostream& os, const RingValue& x) {
    return os << format_value(x);
}

/// Evaluation homomorphism Z[X] -> Z at X = a, by Horner's scheme.
inline RingValue eval_poly_at(const RingValue& p, const BigInt& a) {
    const auto& c = p.coefficients();
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i];
    return RingValue::integer(std::move(acc));
}

}  // namespace quiddity
