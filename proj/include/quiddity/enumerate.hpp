#pragma once

/// Bounded exhaustive enumeration of lambda-quiddities and the named
/// verification suites built on top of it.
///
/// The search fixes the first n-2 entries from the alphabet and solves for
/// the closing pair: with M the word matrix of the prefix and a target sign
/// eps, matching E(a_n)E(a_{n-1}) M = eps*Id forces M_11 = -eps,
/// a_{n-1} = -eps*M_21 and a_n = eps*M_12, so each prefix completes in at
/// most one way per sign and the scan is exhaustive without pruning.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/ops.hpp"

namespace quiddity {

/// Search box. coeff_bound B limits |a_i| over the integers, every
/// coefficient over Z[X] (with degree <= degree_bound) and the real part
/// over Z[2i]; gauss_im_bound, defaulting to B, limits |b| in a + 2bi.
struct SearchBounds {
    RingId ring = RingId::integers();
    std::size_t size_min = 2;
    std::size_t size_max = 2;
    std::int64_t coeff_bound = 0;
    std::int64_t degree_bound = 0;
    std::optional<std::int64_t> gauss_im_bound = std::nullopt;
};

class ceiling_error : public std::runtime_error {
public:
    ceiling_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

namespace detail {

inline void validate_bounds(const SearchBounds& b) {
    if (!b.ring.is_exact())
        throw std::domain_error("enumerate: the real ring cannot be enumerated");
    if (b.size_min < 2) throw std::invalid_argument("enumerate: size_min must be >= 2");
    if (b.size_max < b.size_min)
        throw std::invalid_argument("enumerate: size_max must be >= size_min");
    if (b.coeff_bound < 0) throw std::invalid_argument("enumerate: coeff_bound must be >= 0");
    if (b.degree_bound < 0) throw std::invalid_argument("enumerate: degree_bound must be >= 0");
    if (b.gauss_im_bound && *b.gauss_im_bound < 0)
        throw std::invalid_argument("enumerate: gauss_im_bound must be >= 0");
}

inline double alphabet_size(const SearchBounds& b) {
    const double B = static_cast<double>(b.coeff_bound);
    switch (b.ring.tag()) {
        case RingTag::integers: return 2 * B + 1;
        case RingTag::mod: return static_cast<double>(b.ring.modulus());
        case RingTag::poly: {
            // constants, plus leading coefficient != 0 for each degree d >= 1
            double total = 2 * B + 1;
            double lower = 2 * B + 1;
            for (std::int64_t d = 1; d <= b.degree_bound; ++d) {
                total += 2 * B * lower;
                lower *= 2 * B + 1;
            }
            return total;
        }
        case RingTag::gauss_even: {
            const double I = static_cast<double>(b.gauss_im_bound.value_or(b.coeff_bound));
            return (2 * B + 1) * (2 * I + 1);
        }
        case RingTag::real: break;
    }
    throw std::logic_error("alphabet_size: bad ring tag");
}

}  // namespace detail

/// Number of raw tuples the box spans: sum over sizes of |alphabet|^n.
inline double estimate_search_space(const SearchBounds& b) {
    detail::validate_bounds(b);
    const double a = detail::alphabet_size(b);
    double total = 0;
    for (std::size_t n = b.size_min; n <= b.size_max; ++n) total += std::pow(a, n);
    return total;
}

/// All alphabet values of the box in ascending canonical order.
inline std::vector<RingValue> ring_alphabet(const SearchBounds& b) {
    detail::validate_bounds(b);
    std::vector<RingValue> out;
    const std::int64_t B = b.coeff_bound;
    switch (b.ring.tag()) {
        case RingTag::integers:
            for (std::int64_t v = -B; v <= B; ++v) out.push_back(RingValue::integer(v));
            break;
        case RingTag::mod:
            for (std::uint64_t v = 0; v < b.ring.modulus(); ++v)
                out.push_back(RingValue::modular(b.ring.modulus(), v));
            break;
        case RingTag::poly: {
            std::vector<BigInt> coeffs;
            std::function<void(std::int64_t)> build = [&](std::int64_t remaining) {
                if (remaining == 0) {
                    if (coeffs.size() > 1 && coeffs.back() == 0) return;  // fixed degree
                    out.push_back(RingValue::polynomial(coeffs));
                    return;
                }
                for (std::int64_t c = -B; c <= B; ++c) {
                    coeffs.push_back(BigInt(c));
                    build(remaining - 1);
                    coeffs.pop_back();
                }
            };
            for (std::int64_t d = 0; d <= b.degree_bound; ++d) build(d + 1);
            std::sort(out.begin(), out.end(), [](const RingValue& x, const RingValue& y) {
                return compare(x, y) == std::strong_ordering::less;
            });
            break;
        }
        case RingTag::gauss_even: {
            const std::int64_t I = b.gauss_im_bound.value_or(b.coeff_bound);
            for (std::int64_t re = -B; re <= B; ++re)
                for (std::int64_t im = -I; im <= I; ++im)
                    out.push_back(RingValue::gauss(re, im));
            break;
        }
        case RingTag::real: break;
    }
    return out;
}

struct EnumerationRecord {
    RingTuple tuple;
    QuidditySign sign;
    bool ambiguous = false;  // +Id == -Id in the ring
    bool irreducible = false;
    RingTuple canonical;
};

struct EnumerationReport {
    SearchBounds bounds;
    std::vector<EnumerationRecord> quiddities;  // size ascending, then lexicographic
    std::map<std::size_t, std::size_t> count_by_size;
    std::map<std::size_t, std::size_t> irreducible_by_size;
    double estimated_tuples = 0;
    double elapsed_seconds = 0;
};

/// Exhaustive search of the box. Throws ceiling_error before any work when
/// the raw tuple estimate exceeds `ceiling`.
inline EnumerationReport enumerate_quiddities(const SearchBounds& bounds, double ceiling = 1e8) {
    const auto start = std::chrono::steady_clock::now();
    double estimate = estimate_search_space(bounds);
    if (estimate > ceiling) {
        std::ostringstream os;
        os << "search space of about " << estimate << " tuples exceeds the ceiling of " << ceiling;
        throw ceiling_error(os.str(), estimate);
    }

    const RingId& ring = bounds.ring;
    const std::vector<RingValue> alphabet = ring_alphabet(bounds);
    auto in_alphabet = [&](const RingValue& v) {
        return std::binary_search(alphabet.begin(), alphabet.end(), v,
                                  [](const RingValue& x, const RingValue& y) {
                                      return compare(x, y) == std::strong_ordering::less;
                                  });
    };

    const RingValue one = RingValue::one(ring);
    const RingValue minus_one = RingValue::minus_one(ring);
    const bool ambiguous = one == minus_one;
    std::vector<std::pair<RingValue, QuidditySign>> signs{{minus_one, QuidditySign::minus}};
    if (!ambiguous) signs.emplace_back(one, QuidditySign::plus);

    EnumerationReport report;
    report.bounds = bounds;
    report.estimated_tuples = estimate;

    for (std::size_t n = bounds.size_min; n <= bounds.size_max; ++n) {
        std::vector<RingTuple> found;
        std::vector<RingValue> prefix;
        prefix.reserve(n);

        std::function<void(const Mat2&)> descend = [&](const Mat2& m) {
            if (prefix.size() == n - 2) {
                for (const auto& [eps, sign] : signs) {
                    (void)sign;
                    if (m.m11() != -eps) continue;
                    RingValue a_second_last = -(eps * m.m21());
                    RingValue a_last = eps * m.m12();
                    if (!in_alphabet(a_second_last) || !in_alphabet(a_last)) continue;
                    std::vector<RingValue> entries = prefix;
                    entries.push_back(std::move(a_second_last));
                    entries.push_back(std::move(a_last));
                    found.emplace_back(ring, std::move(entries));
                }
                return;
            }
            for (const RingValue& x : alphabet) {
                prefix.push_back(x);
                descend(elementary(x) * m);
                prefix.pop_back();
            }
        };
        descend(Mat2::identity(ring));

        std::sort(found.begin(), found.end(), [](const RingTuple& a, const RingTuple& b) {
            return compare(a, b) == std::strong_ordering::less;
        });

        report.count_by_size[n] = found.size();
        report.irreducible_by_size[n] = 0;
        for (RingTuple& t : found) {
            auto verdict = is_quiddity(t);
            if (!verdict) throw std::logic_error("enumerate: closing pair produced a non-quiddity");
            bool irr = is_irreducible(t);
            if (irr) ++report.irreducible_by_size[n];
            RingTuple canon = canonical_form(t);
            report.quiddities.push_back(EnumerationRecord{std::move(t), verdict->sign,
                                                          verdict->ambiguous, irr,
                                                          std::move(canon)});
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

struct VerdictCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerdictReport {
    std::string suite;
    bool pass = true;
    std::vector<VerdictCheck> checks;
    std::vector<std::pair<std::string, std::int64_t>> counts;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back(VerdictCheck{name, ok, detail});
        if (!ok) pass = false;
    }
    void count(const std::string& key, std::int64_t v) { counts.emplace_back(key, v); }
};

namespace detail {

struct TupleLess {
    bool operator()(const RingTuple& a, const RingTuple& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
};

using TupleSet = std::set<RingTuple, TupleLess>;

inline TupleSet found_of_size(const EnumerationReport& report, std::size_t n,
                              bool irreducible_only = false) {
    TupleSet out;
    for (const auto& rec : report.quiddities)
        if (rec.tuple.size() == n && (!irreducible_only || rec.irreducible))
            out.insert(rec.tuple);
    return out;
}

inline std::string describe_difference(const TupleSet& found, const TupleSet& expected) {
    for (const auto& t : found)
        if (!expected.count(t)) return "unexpected " + format_tuple(t);
    for (const auto& t : expected)
        if (!found.count(t)) return "missing " + format_tuple(t);
    return "";
}

inline void check_set_equal(VerdictReport& report, const std::string& name, const TupleSet& found,
                            const TupleSet& expected) {
    std::string diff = describe_difference(found, expected);
    report.add(name, diff.empty(),
               diff.empty() ? "" : diff + " (found " + std::to_string(found.size()) +
                                       ", expected " + std::to_string(expected.size()) + ")");
}

inline RingTuple make_tuple(const RingId& ring, std::vector<RingValue> entries) {
    return RingTuple(ring, std::move(entries));
}

// The closed families of sizes 2..4: (0,0); (1,1,1) and (-1,-1,-1);
// (-a,b,a,-b) with ab = 0 and (a,b,a,b) with ab = 2.
inline TupleSet family_size2(const RingId& ring) {
    TupleSet out;
    RingValue z = RingValue::zero(ring);
    out.insert(make_tuple(ring, {z, z}));
    return out;
}

inline TupleSet family_size3(const RingId& ring, const std::vector<RingValue>& alphabet) {
    TupleSet out;
    RingValue one = RingValue::one(ring);
    RingValue minus = RingValue::minus_one(ring);
    auto contains = [&](const RingValue& v) {
        return std::find(alphabet.begin(), alphabet.end(), v) != alphabet.end();
    };
    if (contains(one)) out.insert(make_tuple(ring, {one, one, one}));
    if (contains(minus)) out.insert(make_tuple(ring, {minus, minus, minus}));
    return out;
}

inline TupleSet family_size4(const RingId& ring, const std::vector<RingValue>& alphabet) {
    TupleSet out;
    RingValue z = RingValue::zero(ring);
    RingValue two = RingValue::from_integer(ring, 2);
    for (const RingValue& v : alphabet) {
        out.insert(make_tuple(ring, {-v, z, v, z}));
        out.insert(make_tuple(ring, {z, v, z, -v}));
    }
    for (const RingValue& a : alphabet)
        for (const RingValue& b : alphabet)
            if (a * b == two) out.insert(make_tuple(ring, {a, b, a, b}));
    return out;
}

// Size-4 zero families with the unit parameters excluded: the irreducibles
// (0,v,0,-v) and (v,0,-v,0) for v not in {1,-1}.
inline TupleSet irreducible_size4(const RingId& ring, const std::vector<RingValue>& alphabet) {
    TupleSet out;
    RingValue z = RingValue::zero(ring);
    for (const RingValue& v : alphabet) {
        if (is_pm_one(v) != PmOne::neither) continue;
        out.insert(make_tuple(ring, {z, v, z, -v}));
        out.insert(make_tuple(ring, {v, z, -v, z}));
    }
    return out;
}

}  // namespace detail

/// Sizes 2..4 over Z and over Z[X] (degree <= 1) against the closed
/// families, inside the box |coefficient| <= bound.
inline VerdictReport verify_small_sizes(std::int64_t bound, double ceiling = 1e8) {
    VerdictReport report;
    report.suite = "small-sizes";
    for (const char* selector : {"z", "zx"}) {
        SearchBounds bounds;
        bounds.ring = RingId::from_selector(selector);
        bounds.size_min = 2;
        bounds.size_max = 4;
        bounds.coeff_bound = bound;
        bounds.degree_bound = 1;
        EnumerationReport run = enumerate_quiddities(bounds, ceiling);
        std::vector<RingValue> alphabet = ring_alphabet(bounds);
        std::string prefix = std::string(selector) + ":";
        detail::check_set_equal(report, prefix + "size2", detail::found_of_size(run, 2),
                                detail::family_size2(bounds.ring));
        detail::check_set_equal(report, prefix + "size3", detail::found_of_size(run, 3),
                                detail::family_size3(bounds.ring, alphabet));
        detail::check_set_equal(report, prefix + "size4", detail::found_of_size(run, 4),
                                detail::family_size4(bounds.ring, alphabet));
        report.count(prefix + "quiddities", static_cast<std::int64_t>(run.quiddities.size()));
    }
    return report;
}

/// Classification of irreducibles over Z[X] inside the box: exactly the two
/// constant triples and the size-4 zero families with non-unit parameter,
/// and nothing of size >= 5.
inline VerdictReport verify_poly_irreducibles(std::int64_t degree_bound, std::int64_t coeff_bound,
                                      std::size_t size_max, double ceiling = 1e8) {
    VerdictReport report;
    report.suite = "poly-irreducibles";
    SearchBounds bounds;
    bounds.ring = RingId::poly();
    bounds.size_min = 3;
    bounds.size_max = size_max;
    bounds.coeff_bound = coeff_bound;
    bounds.degree_bound = degree_bound;
    EnumerationReport run = enumerate_quiddities(bounds, ceiling);
    std::vector<RingValue> alphabet = ring_alphabet(bounds);

    detail::check_set_equal(report, "size3-irreducibles", detail::found_of_size(run, 3, true),
                            detail::family_size3(bounds.ring, alphabet));
    if (size_max >= 4)
        detail::check_set_equal(report, "size4-irreducibles", detail::found_of_size(run, 4, true),
                                detail::irreducible_size4(bounds.ring, alphabet));
    std::int64_t large = 0;
    for (const auto& rec : run.quiddities)
        if (rec.irreducible && rec.tuple.size() >= 5) ++large;
    report.add("no-irreducible-of-size-5-or-more", large == 0,
               large ? std::to_string(large) + " found" : "");

    std::int64_t irreducibles = 0;
    for (const auto& rec : run.quiddities) irreducibles += rec.irreducible;
    report.count("quiddities", static_cast<std::int64_t>(run.quiddities.size()));
    report.count("irreducible", irreducibles);
    return report;
}

/// Same classification over Z[2i]: triples plus (v,0,-v,0)/(0,v,0,-v) for
/// v not a unit, and nothing irreducible of size >= 5.
inline VerdictReport verify_z2i(std::int64_t coeff_bound, std::size_t size_max,
                                std::optional<std::int64_t> im_bound = std::nullopt,
                                double ceiling = 1e8) {
    VerdictReport report;
    report.suite = "z2i";
    SearchBounds bounds;
    bounds.ring = RingId::gauss_even();
    bounds.size_min = 3;
    bounds.size_max = size_max;
    bounds.coeff_bound = coeff_bound;
    bounds.gauss_im_bound = im_bound;
    EnumerationReport run = enumerate_quiddities(bounds, ceiling);
    std::vector<RingValue> alphabet = ring_alphabet(bounds);

    detail::check_set_equal(report, "size3-irreducibles", detail::found_of_size(run, 3, true),
                            detail::family_size3(bounds.ring, alphabet));
    if (size_max >= 4)
        detail::check_set_equal(report, "size4-irreducibles", detail::found_of_size(run, 4, true),
                                detail::irreducible_size4(bounds.ring, alphabet));
    std::int64_t large = 0;
    for (const auto& rec : run.quiddities)
        if (rec.irreducible && rec.tuple.size() >= 5) ++large;
    report.add("no-irreducible-of-size-5-or-more", large == 0,
               large ? std::to_string(large) + " found" : "");

    std::int64_t irreducibles = 0;
    for (const auto& rec : run.quiddities) irreducibles += rec.irreducible;
    report.count("quiddities", static_cast<std::int64_t>(run.quiddities.size()));
    report.count("irreducible", irreducibles);
    return report;
}

/// Every quiddity in the report has at least two entries of modulus < 2.
/// Z and Z[2i] use the exact modulus; Z[X] is checked through evaluation at
/// each a in {-2,...,2}. Mod rings carry no archimedean modulus.
inline VerdictReport verify_cuntz_holm(const EnumerationReport& run) {
    const RingId& ring = run.bounds.ring;
    if (ring.tag() == RingTag::mod)
        throw std::domain_error("verify_cuntz_holm: residue rings carry no modulus bound");
    if (ring.tag() == RingTag::real)
        throw std::domain_error("verify_cuntz_holm: exact rings only");

    VerdictReport report;
    report.suite = "cuntz-holm";
    std::int64_t violations = 0;
    std::string first;
    auto small_int = [](const BigInt& v) { return v >= -1 && v <= 1; };
    for (const auto& rec : run.quiddities) {
        bool ok = true;
        switch (ring.tag()) {
            case RingTag::integers: {
                int small = 0;
                for (const auto& e : rec.tuple.entries()) small += small_int(e.as_integer());
                ok = small >= 2;
                break;
            }
            case RingTag::gauss_even: {
                int small = 0;
                for (const auto& e : rec.tuple.entries()) {
                    const auto& g = e.gauss_parts();
                    // |a + 2bi|^2 = a^2 + 4b^2 < 4
                    small += g.re * g.re + 4 * g.im_half * g.im_half < 4;
                }
                ok = small >= 2;
                break;
            }
            case RingTag::poly: {
                for (std::int64_t a = -2; a <= 2 && ok; ++a) {
                    int small = 0;
                    for (const auto& e : rec.tuple.entries())
                        small += small_int(eval_poly_at(e, BigInt(a)).as_integer());
                    ok = small >= 2;
                }
                break;
            }
            default: break;
        }
        if (!ok) {
            ++violations;
            if (first.empty()) first = format_tuple(rec.tuple);
        }
    }
    report.add("two-entries-of-modulus-below-2", violations == 0,
               violations ? std::to_string(violations) + " violations, first " + first : "");
    report.count("quiddities", static_cast<std::int64_t>(run.quiddities.size()));
    report.count("violations", violations);
    return report;
}

/// The constant tuples (2cos(pi/n), ..., 2cos(pi/n)) are quiddities of sign
/// minus, and no entry can shrink: every entry meets the bound 2 - eps with
/// eps = 2 - 2cos(pi/n), up to the tolerance at the equality boundary.
inline VerdictReport verify_cos(int n_min = 2, int n_max = 12, double tol = 1e-9) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("verify_cos: bad size range");
    VerdictReport report;
    report.suite = "cos";
    for (int n = n_min; n <= n_max; ++n) {
        RingTuple t = cos_quiddity(n);
        auto sign = is_quiddity_approx(t, tol);
        bool minus = sign.has_value() && *sign == QuidditySign::minus;
        double u = t[0].as_real();
        double eps = 2.0 - u;
        bool sharp = true;
        for (const auto& e : t.entries()) sharp = sharp && e.as_real() >= 2.0 - eps - tol;
        report.add("n" + std::to_string(n), minus && sharp,
                   !minus ? "word matrix is not -Id within tolerance" : !sharp ? "entry below 2-eps"
                                                                               : "");
    }
    report.count("cases", n_max - n_min + 1);
    return report;
}

namespace detail {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
    }

    RingValue value(const RingId& ring, std::int64_t bound) {
        switch (ring.tag()) {
            case RingTag::integers: return RingValue::integer(pick(-bound, bound));
            case RingTag::mod:
                return RingValue::modular(ring.modulus(), BigInt(pick(-bound, bound)));
            case RingTag::poly: {
                std::vector<BigInt> coeffs;
                std::int64_t degree = pick(0, 2);
                for (std::int64_t i = 0; i <= degree; ++i)
                    coeffs.push_back(BigInt(pick(-bound, bound)));
                return RingValue::polynomial(std::move(coeffs));
            }
            case RingTag::gauss_even:
                return RingValue::gauss(pick(-bound, bound), pick(-bound, bound));
            case RingTag::real: return RingValue::real_number(static_cast<double>(pick(-bound, bound)));
        }
        throw std::logic_error("Rng::value: bad ring tag");
    }

    RingTuple tuple(const RingId& ring, std::size_t size, std::int64_t bound) {
        std::vector<RingValue> entries;
        entries.reserve(size);
        for (std::size_t i = 0; i < size; ++i) entries.push_back(value(ring, bound));
        return RingTuple(ring, std::move(entries));
    }
};

}  // namespace detail

/// Randomized (fixed-seed, deterministic) structural invariants: ring
/// axioms, parse/format round trips, the evaluation homomorphism, word
/// matrix determinants, the continuant closed form, sum/quiddity interplay
/// and canonical-form laws.
inline VerdictReport verify_properties(std::uint64_t seed = 20260816) {
    VerdictReport report;
    report.suite = "properties";
    detail::Rng rng(seed);
    const std::vector<RingId> exact_rings{RingId::integers(), RingId::mod(2), RingId::mod(7),
                                          RingId::poly(), RingId::gauss_even()};

    {  // commutative unital ring axioms
        bool ok = true;
        std::string detail_msg;
        for (const RingId& ring : exact_rings) {
            for (int i = 0; i < 200 && ok; ++i) {
                RingValue a = rng.value(ring, 9), b = rng.value(ring, 9), c = rng.value(ring, 9);
                RingValue zero = RingValue::zero(ring), unit = RingValue::one(ring);
                ok = (a + b) + c == a + (b + c) && a + b == b + a && a * b == b * a &&
                     (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                     a + (-a) == zero && a * unit == a && a + zero == a;
                if (!ok) detail_msg = ring.selector() + ": " + format_value(a);
            }
        }
        report.add("ring-axioms", ok, detail_msg);
    }

    {  // parse(format(x)) == x
        bool ok = true;
        std::string detail_msg;
        for (const RingId& ring : exact_rings) {
            for (int i = 0; i < 200 && ok; ++i) {
                RingValue x = rng.value(ring, 40);
                ok = parse_value(ring, format_value(x)) == x;
                if (!ok) detail_msg = ring.selector() + ": " + format_value(x);
            }
        }
        report.add("parse-format-round-trip", ok, detail_msg);
    }

    {  // evaluation at X=a is a ring homomorphism Z[X] -> Z
        bool ok = true;
        RingId ring = RingId::poly();
        for (int i = 0; i < 300 && ok; ++i) {
            RingValue p = rng.value(ring, 9), q = rng.value(ring, 9);
            BigInt a(rng.pick(-9, 9));
            ok = eval_poly_at(p + q, a) == eval_poly_at(p, a) + eval_poly_at(q, a) &&
                 eval_poly_at(p * q, a) == eval_poly_at(p, a) * eval_poly_at(q, a);
        }
        report.add("evaluation-homomorphism", ok);
    }

    {  // no non-constant polynomial is a unit +-1
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            std::vector<BigInt> coeffs{BigInt(rng.pick(-9, 9))};
            std::int64_t degree = rng.pick(1, 3);
            for (std::int64_t d = 1; d < degree; ++d) coeffs.push_back(BigInt(rng.pick(-9, 9)));
            coeffs.push_back(BigInt(rng.pick(0, 1) ? rng.pick(1, 9) : rng.pick(-9, -1)));
            ok = is_pm_one(RingValue::polynomial(coeffs)) == PmOne::neither;
        }
        report.add("non-constant-never-unit", ok);
    }

    {  // word matrix closed form and determinant 1
        bool ok = true;
        std::string detail_msg;
        for (const RingId& ring : exact_rings) {
            for (int i = 0; i < 120 && ok; ++i) {
                RingTuple t = rng.tuple(ring, static_cast<std::size_t>(rng.pick(2, 8)), 9);
                ok = continuant_matrix_identity_check(t) &&
                     word_matrix(t).det() == RingValue::one(ring);
                if (!ok) detail_msg = ring.selector() + ": " + format_tuple(t);
            }
        }
        report.add("continuant-closed-form-and-det", ok, detail_msg);
    }

    {  // with b a quiddity, sum(a, b) is a quiddity iff a is
        bool ok = true;
        std::string detail_msg;
        SearchBounds pool_bounds;
        pool_bounds.coeff_bound = 2;
        pool_bounds.size_min = 2;
        pool_bounds.size_max = 5;
        EnumerationReport pool = enumerate_quiddities(pool_bounds);
        RingId ring = RingId::integers();
        for (int i = 0; i < 300 && ok; ++i) {
            const RingTuple& b =
                pool.quiddities[static_cast<std::size_t>(
                                    rng.pick(0, static_cast<std::int64_t>(pool.quiddities.size()) - 1))]
                    .tuple;
            RingTuple a = rng.tuple(ring, static_cast<std::size_t>(rng.pick(2, 6)), 3);
            ok = is_quiddity(sum(a, b)).has_value() == is_quiddity(a).has_value();
            if (!ok) detail_msg = format_tuple(a) + " + " + format_tuple(b);
        }
        report.add("sum-with-quiddity-preserves-verdict", ok, detail_msg);
    }

    {  // canonical form: idempotent, orbit-constant, equivalence-deciding
        bool ok = true;
        std::string detail_msg;
        for (const RingId& ring : {RingId::integers(), RingId::poly()}) {
            for (int i = 0; i < 150 && ok; ++i) {
                RingTuple t = rng.tuple(ring, static_cast<std::size_t>(rng.pick(1, 7)), 4);
                RingTuple canon = canonical_form(t);
                ok = canonical_form(canon) == canon && equivalent(t, canon);
                for (const auto& [tr, image] : dihedral_orbit(t)) {
                    (void)tr;
                    ok = ok && canonical_form(image) == canon;
                }
                if (!ok) detail_msg = format_tuple(t);
            }
        }
        report.add("canonical-form-laws", ok, detail_msg);
    }

    {  // fixed counterexamples: the sum is neither commutative nor associative
        RingId ring = RingId::integers();
        auto mk = [&](std::vector<std::int64_t> vs) {
            std::vector<RingValue> entries;
            for (auto v : vs) entries.push_back(RingValue::integer(v));
            return RingTuple(ring, std::move(entries));
        };
        RingTuple a = mk({1, 0, 1}), b = mk({1, 2, 1}), c = mk({1, 1, 1});
        bool non_commutative = sum(a, b) != sum(b, a);
        bool non_associative = sum(sum(c, c), c) != sum(c, sum(c, c));
        report.add("sum-not-commutative", non_commutative);
        report.add("sum-not-associative", non_associative);
    }

    return report;
}

}  // namespace quiddity
