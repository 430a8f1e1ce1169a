#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rat.hpp"

namespace igusa {

// Multivariate polynomial over Rat in nvars variables. Terms map exponent
// vectors (length nvars) to nonzero coefficients; iteration order is the
// map's lexicographic order, so hashing and printing are deterministic.
class MPoly {
public:
    using ExpVec = std::vector<unsigned>;

    explicit MPoly(int nvars);
    static MPoly constant(int nvars, Rat c);
    static MPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial
    int total_degree() const;
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    void add_term(const ExpVec& exps, const Rat& coeff);

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly scaled(const Rat& k) const;
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rat eval(std::span<const Rat> point) const;
    double eval_double(std::span<const double> point) const;

    // Substitute variable i by subs[i]; all substitutes share one variable
    // count, which becomes the result's.
    MPoly substitute(std::span<const MPoly> subs) const;

    std::string str(std::span<const std::string> var_names = {}) const;

private:
    int nvars_;
    std::map<ExpVec, Rat> terms_;
};

// Exact k-th power by binary exponentiation.
MPoly poly_pow(const MPoly& f, unsigned k);

// Substitutes x0 := 1 - x1 - ... - xn into f(x0, ..., xn), landing in the
// affine chart with variables x1..xn.
MPoly restrict_chart(const MPoly& f);

// Grammar: terms separated by +/-; term = [rational coefficient][*] monomial;
// monomial = product of name[^e] with * separators; whitespace ignored.
// Throws ParseError (with position) or UnknownVariable.
MPoly parse_poly(std::string_view text, std::span<const std::string> var_names);

// Default variable names x1..xn (or x0..xn when homogeneous).
std::vector<std::string> default_var_names(int n, bool homogeneous = false);

// Flattened double-precision form for quadrature inner loops.
struct CompiledPoly {
    struct Term {
        double coeff;
        std::vector<unsigned> exps;
    };
    int nvars = 0;
    std::vector<Term> terms;

    double eval(const double* x) const;
};
CompiledPoly compile(const MPoly& f);

}  // namespace igusa
