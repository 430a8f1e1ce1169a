#pragma once

#include <vector>

#include "rat.hpp"
#include "unipoly.hpp"

namespace igusa {

// Truncated Laurent series in a local variable eps. Coefficients are either
// exact rationals or doubles; the mode is fixed per series and mixing modes
// in arithmetic is a checked error. Exact mode backs closed-form regression
// tests, float mode is the production continuation path.
enum class CoeffMode { Exact, Float };

struct LaurentConfig {
    // Relative threshold under which a float leading coefficient counts as
    // zero when renormalizing min_exp.
    double rel_zero_threshold = 1e-12;
};
LaurentConfig& laurent_config();

// Coefficients are valid for exponents min_exp()..trunc_order() inclusive and
// the leading one is nonzero; the zero series stores no coefficients but
// still remembers through which order it is known to vanish. Every operation
// propagates the tightest valid truncation window.
class LaurentSeries {
public:
    static LaurentSeries zero(CoeffMode mode, int trunc_order);
    static LaurentSeries one(CoeffMode mode, int trunc_order);
    static LaurentSeries exact(std::vector<Rat> coeffs, int min_exp, int trunc_order);
    static LaurentSeries floating(std::vector<double> coeffs, int min_exp, int trunc_order);
    // Polynomial in eps as an exact series; polynomials are globally valid so
    // any truncation order may be requested.
    static LaurentSeries from_poly(const UniPoly& p, int trunc_order);

    CoeffMode mode() const { return mode_; }
    bool is_zero() const { return size() == 0; }
    int min_exp() const { return min_exp_; }
    int trunc_order() const { return trunc_; }
    std::size_t size() const {
        return mode_ == CoeffMode::Exact ? xc_.size() : fc_.size();
    }

    // Coefficient of eps^e; zero outside the stored window (exponents above
    // trunc_order are not valid and also return zero — callers gate on
    // trunc_order).
    Rat coeff_exact(int e) const;
    double coeff_double(int e) const;

    double max_abs_coeff() const;

    LaurentSeries to_float() const;
    LaurentSeries truncated(int trunc_order) const;
    // multiply by eps^k
    LaurentSeries shifted(int k) const;
    LaurentSeries scaled(const Rat& k) const;
    LaurentSeries scaled_double(double k) const;
    LaurentSeries operator-() const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);

private:
    LaurentSeries(CoeffMode mode, int min_exp, int trunc)
        : mode_(mode), min_exp_(min_exp), trunc_(trunc) {}
    void normalize();
    // min_exp of the first coefficient that could be nonzero; trunc+1 for the
    // zero series (used in truncation bookkeeping).
    int eff_min() const { return is_zero() ? trunc_ + 1 : min_exp_; }

    friend LaurentSeries laurent_mul(const LaurentSeries&, const LaurentSeries&);
    friend LaurentSeries laurent_inv(const LaurentSeries&);

    CoeffMode mode_;
    int min_exp_ = 0;
    int trunc_ = -1;
    std::vector<Rat> xc_;
    std::vector<double> fc_;
};

// Exact Cauchy product with the correctly propagated truncation window.
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);

// Multiplicative inverse: laurent_mul(a, laurent_inv(a)) == 1 up to the
// propagated truncation. Throws ZeroSeries on the zero series (or a float
// leading coefficient below threshold).
LaurentSeries laurent_inv(const LaurentSeries& a);

// Laurent expansion of r(s0 + eps) valid through `order`; poles of r at s0
// show up as a negative min_exp.
LaurentSeries ratfunc_expand(const RatFunc& r, const Rat& s0, int order);

}  // namespace igusa
