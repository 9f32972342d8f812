#include "pnc/gaussint.hpp"

#include <cctype>
#include <cstdlib>

namespace pnc {

std::array<GInt, 4> associates(GInt a) {
    GInt ia{-a.im, a.re};
    return {a, -a, ia, -ia};
}

GInt canonical_associate(GInt a) {
    if (is_zero(a)) return a;
    for (GInt c : associates(a)) {
        if (c.re > 0 && c.im >= 0) return c;
    }
    // Unreachable: exactly one rotation of any nonzero point lands in the
    // half-open quadrant {re > 0, im >= 0}.
    throw std::logic_error("canonical_associate: no associate in canonical quadrant");
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0 in all uses here.
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Nearest integer to x/n (n > 0), exact halves rounding toward -infinity.
std::int64_t round_nearest_half_down(std::int64_t x, std::int64_t n) {
    return floor_div(checked_sub(checked_add(checked_mul(2, x), n), 1), checked_mul(2, n));
}

bool is_rational_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

DivRem div_rem(GInt a, GInt b) {
    if (is_zero(b)) throw std::domain_error("div_rem: division by zero");
    const std::int64_t n = norm(b);
    const GInt num = a * conj(b);  // a/b == num/n componentwise
    const GInt q{round_nearest_half_down(num.re, n), round_nearest_half_down(num.im, n)};
    return {q, a - q * b};
}

bool divides(GInt b, GInt a) {
    if (is_zero(b)) return false;
    const std::int64_t n = norm(b);
    const GInt num = a * conj(b);
    return num.re % n == 0 && num.im % n == 0;
}

GInt gcd(GInt a, GInt b) {
    if (is_zero(a) && is_zero(b)) throw std::domain_error("gcd(0, 0) is undefined");
    while (!is_zero(b)) {
        GInt r = div_rem(a, b).rem;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

BezoutResult bezout(GInt a, GInt b) {
    if (is_zero(a) && is_zero(b)) throw std::domain_error("bezout(0, 0) is undefined");
    // Invariants: r0 = a*x0 + b*y0 and r1 = a*x1 + b*y1.
    GInt r0 = a, r1 = b;
    GInt x0{1, 0}, x1{0, 0};
    GInt y0{0, 0}, y1{1, 0};
    while (!is_zero(r1)) {
        auto [q, r] = div_rem(r0, r1);
        r0 = r1;
        r1 = r;
        GInt x2 = x0 - q * x1;
        x0 = x1;
        x1 = x2;
        GInt y2 = y0 - q * y1;
        y0 = y1;
        y1 = y2;
    }
    // Scale by the unit that canonicalizes the gcd.
    const GInt g = canonical_associate(r0);
    for (GInt u : units()) {
        if (u * r0 == g) return {u * x0, u * y0, g};
    }
    throw std::logic_error("bezout: canonicalizing unit not found");
}

bool is_gaussian_prime(GInt a) {
    const std::int64_t n = norm(a);
    if (n < 2) return false;
    if (is_rational_prime(n)) return true;
    // Associates of a rational prime p = 3 (mod 4) are the remaining primes.
    if (a.re == 0 || a.im == 0) {
        const std::int64_t p = std::llabs(a.re != 0 ? a.re : a.im);
        return is_rational_prime(p) && p % 4 == 3;
    }
    return false;
}

GInt inverse_mod(GInt a, GInt q) {
    if (!is_gaussian_prime(q)) throw std::domain_error("inverse_mod: modulus is not a Gaussian prime");
    if (divides(q, a)) throw std::domain_error("inverse_mod: element is 0 mod q");
    auto [x, y, g] = bezout(a, q);
    // q prime and q does not divide a, so the gcd is a unit.
    if (!is_unit(g)) throw std::logic_error("inverse_mod: non-unit gcd with prime modulus");
    GInt inv = x * conj(g);  // unit inverse is its conjugate
    if (norm(q) == 2) {
        // Z[i]/(1+i) has representatives {0, 1}; the only invertible residue is 1.
        return {1, 0};
    }
    // For odd-norm q the nearest-integer remainder is the Definition-1
    // representative (the tie boundary holds no lattice points).
    return div_rem(inv, q).rem;
}

std::string to_string(GInt a) {
    if (a.im == 0) return std::to_string(a.re);
    std::string imag;
    if (a.im == 1) {
        imag = "i";
    } else if (a.im == -1) {
        imag = "-i";
    } else {
        imag = std::to_string(a.im) + "i";
    }
    if (a.re == 0) return imag;
    if (a.im > 0) return std::to_string(a.re) + "+" + imag;
    return std::to_string(a.re) + imag;
}

namespace {

[[noreturn]] void bad_gint(const std::string& text) {
    throw std::invalid_argument("malformed Gaussian integer literal: '" + text + "'");
}

std::int64_t parse_signed(const std::string& s, const std::string& whole) {
    if (s.empty() || (s.size() == 1 && (s[0] == '+' || s[0] == '-'))) bad_gint(whole);
    std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    for (std::size_t j = k; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) bad_gint(whole);
    }
    return std::strtoll(s.c_str(), nullptr, 10);
}

}  // namespace

GInt parse_gint(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) bad_gint(text);
    const std::size_t ipos = s.find('i');
    if (ipos == std::string::npos) return {parse_signed(s, text), 0};
    if (ipos != s.size() - 1) bad_gint(text);
    std::string body = s.substr(0, ipos);
    // Split off the real part: the last sign not at position 0 starts the
    // imaginary term ("a+bi" / "a-bi"); otherwise the whole literal is "bi".
    std::size_t split = std::string::npos;
    for (std::size_t j = body.size(); j-- > 1;) {
        if (body[j] == '+' || body[j] == '-') {
            split = j;
            break;
        }
    }
    std::string re_str, im_str;
    if (split == std::string::npos) {
        re_str = "0";
        im_str = body;
    } else {
        re_str = body.substr(0, split);
        im_str = body.substr(split);
    }
    std::int64_t im;
    if (im_str.empty() || im_str == "+") {
        im = 1;
    } else if (im_str == "-") {
        im = -1;
    } else {
        im = parse_signed(im_str, text);
    }
    return {parse_signed(re_str, text), im};
}

}  // namespace pnc
