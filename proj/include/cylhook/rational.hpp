#pragma once

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cylhook/errors.hpp"

namespace cylhook {

/// Arbitrary-precision rational with a canonical representation:
/// denominator > 0 and gcd(num, den) = 1. All arithmetic is exact;
/// nothing in this class ever rounds.
class Rational {
  public:
    Rational() { mpq_init(q_); }

    Rational(long n) { // NOLINT(google-explicit-constructor) numeric literal convenience
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw Error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }

    /// Parses "p", "p/q", or a decimal/scientific literal such as "1e-9" or "0.25".
    explicit Rational(const std::string& text) {
        mpq_init(q_);
        assign_from_string(text);
    }

    Rational(const Rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    Rational(Rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    Rational& operator=(Rational&& other) noexcept {
        if (this != &other) mpq_swap(q_, other.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    // ----- arithmetic -----

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw Error("Rational: reciprocal of zero");
        Rational r(*this);
        mpq_inv(r.q_, r.q_);
        return r;
    }

    // ----- comparisons -----

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    // ----- queries -----

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    /// Value as long; requires an integer that fits (used for counts).
    long to_long() const {
        if (!is_integer() || !mpz_fits_slong_p(mpq_numref(q_)))
            throw Error("Rational: not representable as long");
        return mpz_get_si(mpq_numref(q_));
    }

    double to_double() const { return mpq_get_d(q_); }

    // ----- string I/O -----

    std::string num_string() const { return mpz_string(mpq_numref(q_)); }
    std::string den_string() const { return mpz_string(mpq_denref(q_)); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (is_integer()) return num_string();
        return num_string() + "/" + den_string();
    }

    /// Normalized scientific rendering with `sig` significant digits,
    /// e.g. 1/4 -> "2.50000000000e-01". Deterministic; round-half-up.
    std::string to_decimal(int sig = 12) const;

    /// Exact value of a decimal literal (plain or scientific).
    static Rational from_decimal(const std::string& text);

    static Rational factorial(unsigned long n) {
        Rational r;
        mpz_fac_ui(mpq_numref(r.q_), n);
        return r;
    }

    /// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
    static Rational binomial(long n, long k) {
        if (n < 0) throw Error("Rational::binomial: negative n");
        if (k < 0 || k > n) return Rational(0);
        Rational r;
        mpz_bin_uiui(mpq_numref(r.q_), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }

    /// 1 / (f[0] * f[1] * ...); every factor must be positive.
    static Rational reciprocal_of_product(const std::vector<long>& factors) {
        Rational r(1);
        mpz_ptr den = mpq_denref(r.q_);
        for (long f : factors) {
            if (f <= 0) throw Error("Rational::reciprocal_of_product: nonpositive factor");
            mpz_mul_ui(den, den, static_cast<unsigned long>(f));
        }
        // gcd(1, den) == 1, so the value is already canonical.
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    static std::string mpz_string(mpz_srcptr z) {
        char* raw = mpz_get_str(nullptr, 10, z);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    void assign_from_string(const std::string& text) {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            std::string num = text.substr(0, slash);
            std::string den = text.substr(slash + 1);
            if (mpz_set_str(mpq_numref(q_), num.c_str(), 10) != 0 ||
                mpz_set_str(mpq_denref(q_), den.c_str(), 10) != 0 ||
                mpz_sgn(mpq_denref(q_)) == 0)
                throw Error("Rational: cannot parse '" + text + "'");
            mpq_canonicalize(q_);
            return;
        }
        if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
            text.find('E') != std::string::npos) {
            *this = from_decimal(text);
            return;
        }
        if (mpz_set_str(mpq_numref(q_), text.c_str(), 10) != 0)
            throw Error("Rational: cannot parse '" + text + "'");
        mpz_set_ui(mpq_denref(q_), 1);
    }

    mpq_t q_;
};

inline Rational Rational::from_decimal(const std::string& text) {
    // [sign] digits [ '.' digits ] [ (e|E) [sign] digits ]
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_len = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        digits += text[pos++];
        any = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            digits += text[pos++];
            ++frac_len;
            any = true;
        }
    }
    long exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            eneg = text[pos] == '-';
            ++pos;
        }
        bool edig = false;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            exp10 = exp10 * 10 + (text[pos++] - '0');
            edig = true;
        }
        if (!edig) throw Error("Rational::from_decimal: bad exponent in '" + text + "'");
        if (eneg) exp10 = -exp10;
    }
    if (!any || pos != text.size())
        throw Error("Rational::from_decimal: cannot parse '" + text + "'");

    Rational r;
    if (mpz_set_str(mpq_numref(r.q_), digits.empty() ? "0" : digits.c_str(), 10) != 0)
        throw Error("Rational::from_decimal: cannot parse '" + text + "'");
    long net = exp10 - frac_len;
    mpz_t p;
    mpz_init(p);
    mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(net >= 0 ? net : -net));
    if (net >= 0)
        mpz_mul(mpq_numref(r.q_), mpq_numref(r.q_), p);
    else
        mpz_set(mpq_denref(r.q_), p);
    mpz_clear(p);
    mpq_canonicalize(r.q_);
    if (neg) mpq_neg(r.q_, r.q_);
    return r;
}

inline std::string Rational::to_decimal(int sig) const {
    if (sig < 1) sig = 1;
    if (is_zero()) return "0";
    std::string sign_str = sign() < 0 ? "-" : "";

    mpz_t num, den, scaled, pow;
    mpz_inits(num, den, scaled, pow, nullptr);
    mpz_abs(num, mpq_numref(q_));
    mpz_set(den, mpq_denref(q_));

    // Decimal exponent E with 10^E <= num/den < 10^(E+1).
    long e = static_cast<long>(mpz_sizeinbase(num, 10)) - static_cast<long>(mpz_sizeinbase(den, 10));
    auto less_than_pow10 = [&](long k) {
        // num/den < 10^k ?
        if (k >= 0) {
            mpz_ui_pow_ui(pow, 10, static_cast<unsigned long>(k));
            mpz_mul(scaled, den, pow);
            return mpz_cmp(num, scaled) < 0;
        }
        mpz_ui_pow_ui(pow, 10, static_cast<unsigned long>(-k));
        mpz_mul(scaled, num, pow);
        return mpz_cmp(scaled, den) < 0;
    };
    while (!less_than_pow10(e + 1)) ++e;
    while (less_than_pow10(e)) --e;

    // sig digits, round half up: floor(num * 10^(sig-e) / den + 1/2) then drop one digit.
    long shift = sig - e;
    if (shift >= 0) {
        mpz_ui_pow_ui(pow, 10, static_cast<unsigned long>(shift));
        mpz_mul(scaled, num, pow);
        mpz_fdiv_q(scaled, scaled, den);
    } else {
        mpz_ui_pow_ui(pow, 10, static_cast<unsigned long>(-shift));
        mpz_mul(pow, pow, den);
        mpz_fdiv_q(scaled, num, pow);
    }
    mpz_add_ui(scaled, scaled, 5);
    mpz_fdiv_q_ui(scaled, scaled, 10);

    std::string d = mpz_string(scaled);
    if (static_cast<int>(d.size()) > sig) { // rounding carried into a new digit
        d.pop_back();
        ++e;
    }
    while (static_cast<int>(d.size()) < sig) d += '0';

    std::string mant = d.substr(0, 1);
    if (sig > 1) mant += "." + d.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    mpz_clears(num, den, scaled, pow, nullptr);
    return sign_str + mant + buf;
}

} // namespace cylhook
