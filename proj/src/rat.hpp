#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace igusa {

// Arbitrary-precision rational, always canonical: reduced to lowest terms,
// denominator > 0, zero is 0/1. Immutable value semantics; every operation
// returns a canonical result.
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rat(int n) : Rat(static_cast<long>(n)) {}
    Rat(long num, long den);

    Rat(const Rat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rat(Rat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Accepts "p", "-p", "p/q" with optional sign; canonicalizes.
    static Rat from_string(std::string_view text);

    static Rat factorial(unsigned long n);
    // Integer power with negative exponents allowed (throws on 0^negative).
    static Rat pow(const Rat& base, long e);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rat operator-() const {
        Rat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rat abs() const {
        Rat r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rat inv() const;

    friend Rat operator+(const Rat& a, const Rat& b) {
        Rat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        Rat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        Rat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rat& operator/=(const Rat& o);

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    double to_double() const { return mpq_get_d(q_); }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    // Decimal digit count of |num| + den; the pivot-size measure used by the
    // exact elimination code.
    std::size_t digit_size() const;

    bool numerator_fits_slong() const { return mpz_fits_slong_p(mpq_numref(q_)) != 0; }
    long numerator_slong() const { return mpz_get_si(mpq_numref(q_)); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    // gcd of numerators over lcm of denominators; positive unless all zero.
    static Rat vector_content(const std::vector<Rat>& v);

private:
    mpq_t q_;
};

inline Rat abs(const Rat& a) { return a.abs(); }

}  // namespace igusa
