#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace pnc {

// Gaussian integer a = re + im*i with overflow-checked arithmetic.
// All magnitudes in this project stay tiny (moduli of norm <= 121), so an
// overflow is always a logic bug; we throw instead of wrapping.
struct GInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GInt() = default;
    constexpr GInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    friend constexpr bool operator==(const GInt&, const GInt&) = default;
};

[[noreturn]] inline void throw_overflow() {
    throw std::overflow_error("GInt arithmetic overflow");
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
    return r;
}

inline GInt operator+(GInt a, GInt b) {
    return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

inline GInt operator-(GInt a, GInt b) {
    return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}

inline GInt operator-(GInt a) { return {checked_sub(0, a.re), checked_sub(0, a.im)}; }

inline GInt operator*(GInt a, GInt b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

inline GInt conj(GInt a) { return {a.re, checked_sub(0, a.im)}; }

inline std::int64_t norm(GInt a) {
    return checked_add(checked_mul(a.re, a.re), checked_mul(a.im, a.im));
}

inline bool is_zero(GInt a) { return a.re == 0 && a.im == 0; }
inline bool is_unit(GInt a) { return norm(a) == 1; }

// The four units of Z[i].
constexpr std::array<GInt, 4> units() {
    return {GInt{1, 0}, GInt{-1, 0}, GInt{0, 1}, GInt{0, -1}};
}

// {a, -a, ia, -ia}; collapses to {0} for a = 0.
std::array<GInt, 4> associates(GInt a);

// Unique associate with re > 0 and im >= 0 (0 maps to 0).  Resolves the
// associate ambiguity of gcds once and for all.
GInt canonical_associate(GInt a);

struct DivRem {
    GInt quot;
    GInt rem;
};

// Euclidean division: a = quot*b + rem with norm(rem) <= norm(b)/2.
// Quotient components are the nearest integers of a/b; exact half-integers
// round toward negative infinity (any fixed rule works, this one is ours).
DivRem div_rem(GInt a, GInt b);

// True iff b divides a exactly (b != 0).
bool divides(GInt b, GInt a);

// Canonical-associate gcd via the Euclidean algorithm; gcd(0, a) = canonical_associate(a).
GInt gcd(GInt a, GInt b);

struct BezoutResult {
    GInt x;
    GInt y;
    GInt g;  // canonical gcd, a*x + b*y == g
};

// Extended Euclid with the a*x + b*y = g sign convention.
BezoutResult bezout(GInt a, GInt b);

// Gaussian primality: norm(a) is a rational prime, or a is an associate of a
// rational prime p with p = 3 (mod 4).
bool is_gaussian_prime(GInt a);

// Canonical representative r of Z[i]/q with a*r = 1 (mod q); q must be a
// Gaussian prime and a must be nonzero mod q.
GInt inverse_mod(GInt a, GInt q);

// Deterministic total order used everywhere an element list or tie-break is
// needed: ascending (norm, re, im).
inline bool norm_lex_less(GInt a, GInt b) {
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

struct GIntHash {
    std::size_t operator()(const GInt& a) const {
        std::uint64_t h = static_cast<std::uint64_t>(a.re) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(a.im) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Text format: "a+bi" / "a-bi" / "a" / "bi"; a lone "i" means coefficient 1.
std::string to_string(GInt a);
GInt parse_gint(const std::string& text);

}  // namespace pnc
