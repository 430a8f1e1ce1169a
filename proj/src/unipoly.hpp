#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace igusa {

// Dense univariate polynomial over Rat. coeff(i) is the coefficient of the
// i-th power; the stored vector carries no trailing zeros, so the zero
// polynomial is the empty vector and degree() == -1 for it.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static UniPoly monomial(Rat coeff, unsigned deg);
    // (x + shift), convenience for building factors like (s - s0)
    static UniPoly linear(Rat shift) { return UniPoly(std::vector<Rat>{std::move(shift), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const Rat& k) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    UniPoly derivative() const;
    // p(x + shift)
    UniPoly compose_shift(const Rat& shift) const;

    // Quotient and remainder; throws BadArgument on zero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    // Exact division; throws Internal if the remainder is nonzero.
    UniPoly div_exact(const UniPoly& d) const;

    static UniPoly gcd(UniPoly a, UniPoly b);  // monic (or zero)

    // Multiplicity of the root x0 (0 when p(x0) != 0 or p == 0).
    int root_multiplicity(const Rat& x0) const;

    std::string str(const std::string& var = "s") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    Rat eval(const Rat& x) const;  // throws PoleAt when den(x) == 0
    double eval_double(double x) const;

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

private:
    UniPoly num_, den_;
};

// Divide out the common monic polynomial gcd, then scale so all coefficients
// are integers with collective content 1 and the leading coefficient of the
// last polynomial is positive. Canonical up to nothing; no-op on all-zero.
void normalize_poly_family(std::vector<UniPoly>& ps);

}  // namespace igusa
