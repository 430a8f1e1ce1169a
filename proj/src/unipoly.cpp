#include "unipoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace igusa {

UniPoly UniPoly::monomial(Rat coeff, unsigned deg) {
    if (coeff.is_zero()) return UniPoly();
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = std::move(coeff);
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const Rat& r : c_) c.push_back(-r);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rat& k) const {
    if (k.is_zero()) return UniPoly();
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (const Rat& r : c_) c.push_back(r * k);
    return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::compose_shift(const Rat& shift) const {
    // Horner: p(x + shift) built from the top coefficient down.
    UniPoly acc;
    UniPoly lin = UniPoly::linear(shift);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::BadArgument, "polynomial division by zero");
    UniPoly r = *this;
    std::vector<Rat> q;
    int dd = d.degree();
    Rat lead_inv = d.leading().inv();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Rat f = r.leading() * lead_inv;
        if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, Rat(0));
        q[k] = f;
        r = r - UniPoly::monomial(f, static_cast<unsigned>(k)) * d;
    }
    return {UniPoly(std::move(q)), std::move(r)};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) fail(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inv());  // monic
}

int UniPoly::root_multiplicity(const Rat& x0) const {
    if (is_zero()) return 0;
    UniPoly p = *this;
    UniPoly factor = UniPoly::linear(-x0);  // (x - x0)
    int mult = 0;
    while (p.eval(x0).is_zero()) {
        p = p.div_exact(factor);
        ++mult;
    }
    return mult;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rat a = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = a.is_one() && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::BadArgument, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(Rat(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Rat lead = den_.leading();
    if (!lead.is_one()) {
        Rat inv = lead.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) fail(ErrorKind::PoleAt, "rational function pole at " + x.str());
    return num_.eval(x) / d;
}

double RatFunc::eval_double(double x) const { return num_.eval_double(x) / den_.eval_double(x); }

void normalize_poly_family(std::vector<UniPoly>& ps) {
    UniPoly g;
    for (const UniPoly& p : ps) g = UniPoly::gcd(g, p);
    if (g.degree() > 0)
        for (UniPoly& p : ps) p = p.div_exact(g);

    std::vector<Rat> all;
    for (const UniPoly& p : ps)
        for (const Rat& c : p.coeffs()) all.push_back(c);
    Rat content = Rat::vector_content(all);
    if (content.is_zero()) return;

    int lead_sign = 0;
    for (auto it = ps.rbegin(); it != ps.rend() && lead_sign == 0; ++it)
        if (!it->is_zero()) lead_sign = it->leading().sign();
    if (lead_sign < 0) content = -content;

    Rat inv = content.inv();
    for (UniPoly& p : ps) p = p.scaled(inv);
}

}  // namespace igusa
