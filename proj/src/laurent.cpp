#include "laurent.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace igusa {

LaurentConfig& laurent_config() {
    static LaurentConfig cfg;
    return cfg;
}

namespace {

void require_same_mode(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.mode() != b.mode())
        fail(ErrorKind::ModeMix, "mixed exact/float Laurent series operands");
}

}  // namespace

LaurentSeries LaurentSeries::zero(CoeffMode mode, int trunc_order) {
    return LaurentSeries(mode, 0, trunc_order);
}

LaurentSeries LaurentSeries::one(CoeffMode mode, int trunc_order) {
    LaurentSeries s(mode, 0, trunc_order);
    if (trunc_order < 0) return s;
    if (mode == CoeffMode::Exact)
        s.xc_.assign(static_cast<std::size_t>(trunc_order) + 1, Rat(0)), s.xc_[0] = Rat(1);
    else
        s.fc_.assign(static_cast<std::size_t>(trunc_order) + 1, 0.0), s.fc_[0] = 1.0;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::exact(std::vector<Rat> coeffs, int min_exp, int trunc_order) {
    if (static_cast<int>(coeffs.size()) != trunc_order - min_exp + 1)
        fail(ErrorKind::BadArgument, "laurent coefficient count does not match window");
    LaurentSeries s(CoeffMode::Exact, min_exp, trunc_order);
    s.xc_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::floating(std::vector<double> coeffs, int min_exp, int trunc_order) {
    if (static_cast<int>(coeffs.size()) != trunc_order - min_exp + 1)
        fail(ErrorKind::BadArgument, "laurent coefficient count does not match window");
    LaurentSeries s(CoeffMode::Float, min_exp, trunc_order);
    s.fc_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_poly(const UniPoly& p, int trunc_order) {
    std::vector<Rat> c;
    for (int e = 0; e <= trunc_order; ++e) c.push_back(p.coeff(static_cast<std::size_t>(e)));
    return exact(std::move(c), 0, trunc_order);
}

void LaurentSeries::normalize() {
    if (mode_ == CoeffMode::Exact) {
        std::size_t lead = 0;
        while (lead < xc_.size() && xc_[lead].is_zero()) ++lead;
        if (lead == xc_.size()) {
            xc_.clear();
            min_exp_ = 0;
            return;
        }
        xc_.erase(xc_.begin(), xc_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<int>(lead);
    } else {
        double mx = 0.0;
        for (double c : fc_) mx = std::max(mx, std::fabs(c));
        double thresh = mx * laurent_config().rel_zero_threshold;
        std::size_t lead = 0;
        while (lead < fc_.size() && std::fabs(fc_[lead]) <= thresh) ++lead;
        if (lead == fc_.size()) {
            fc_.clear();
            min_exp_ = 0;
            return;
        }
        fc_.erase(fc_.begin(), fc_.begin() + static_cast<std::ptrdiff_t>(lead));
        min_exp_ += static_cast<int>(lead);
    }
}

Rat LaurentSeries::coeff_exact(int e) const {
    if (mode_ != CoeffMode::Exact) fail(ErrorKind::ModeMix, "exact coefficient of a float series");
    int i = e - min_exp_;
    if (is_zero() || i < 0 || i >= static_cast<int>(xc_.size())) return Rat(0);
    return xc_[static_cast<std::size_t>(i)];
}

double LaurentSeries::coeff_double(int e) const {
    int i = e - min_exp_;
    if (is_zero() || i < 0 || i >= static_cast<int>(size())) return 0.0;
    return mode_ == CoeffMode::Exact ? xc_[static_cast<std::size_t>(i)].to_double()
                                     : fc_[static_cast<std::size_t>(i)];
}

double LaurentSeries::max_abs_coeff() const {
    double mx = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        mx = std::max(mx, std::fabs(mode_ == CoeffMode::Exact ? xc_[i].to_double() : fc_[i]));
    return mx;
}

LaurentSeries LaurentSeries::to_float() const {
    if (mode_ == CoeffMode::Float) return *this;
    LaurentSeries s(CoeffMode::Float, min_exp_, trunc_);
    s.fc_.reserve(xc_.size());
    for (const Rat& c : xc_) s.fc_.push_back(c.to_double());
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::truncated(int trunc_order) const {
    if (trunc_order >= trunc_) return *this;
    LaurentSeries s(mode_, min_exp_, trunc_order);
    int keep = trunc_order - min_exp_ + 1;
    if (!is_zero() && keep > 0) {
        if (mode_ == CoeffMode::Exact)
            s.xc_.assign(xc_.begin(), xc_.begin() + std::min<std::ptrdiff_t>(keep, xc_.size()));
        else
            s.fc_.assign(fc_.begin(), fc_.begin() + std::min<std::ptrdiff_t>(keep, fc_.size()));
    } else {
        s.min_exp_ = 0;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries s = *this;
    s.trunc_ += k;
    if (!s.is_zero()) s.min_exp_ += k;
    return s;
}

LaurentSeries LaurentSeries::scaled(const Rat& k) const {
    if (mode_ != CoeffMode::Exact) fail(ErrorKind::ModeMix, "rational scale of a float series");
    LaurentSeries s = *this;
    for (Rat& c : s.xc_) c *= k;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::scaled_double(double k) const {
    if (mode_ != CoeffMode::Float) fail(ErrorKind::ModeMix, "double scale of an exact series");
    LaurentSeries s = *this;
    for (double& c : s.fc_) c *= k;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (Rat& c : s.xc_) c = -c;
    for (double& c : s.fc_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_mode(a, b);
    int trunc = std::min(a.trunc_order(), b.trunc_order());
    if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(a.mode(), trunc);
    int lo = std::min(a.eff_min(), b.eff_min());
    if (lo > trunc) return LaurentSeries::zero(a.mode(), trunc);
    if (a.mode() == CoeffMode::Exact) {
        std::vector<Rat> c;
        for (int e = lo; e <= trunc; ++e) c.push_back(a.coeff_exact(e) + b.coeff_exact(e));
        return LaurentSeries::exact(std::move(c), lo, trunc);
    }
    std::vector<double> c;
    for (int e = lo; e <= trunc; ++e) c.push_back(a.coeff_double(e) + b.coeff_double(e));
    return LaurentSeries::floating(std::move(c), lo, trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_mode(a, b);
    int trunc = std::min(a.trunc_order() + b.eff_min(), b.trunc_order() + a.eff_min());
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(a.mode(), trunc);
    int lo = a.min_exp() + b.min_exp();
    if (lo > trunc) return LaurentSeries::zero(a.mode(), trunc);
    if (a.mode() == CoeffMode::Exact) {
        std::vector<Rat> c(static_cast<std::size_t>(trunc - lo + 1), Rat(0));
        for (int i = a.min_exp(); i <= a.trunc_order(); ++i) {
            Rat ai = a.coeff_exact(i);
            if (ai.is_zero()) continue;
            for (int j = b.min_exp(); j <= b.trunc_order(); ++j) {
                int e = i + j;
                if (e > trunc) break;
                c[static_cast<std::size_t>(e - lo)] += ai * b.coeff_exact(j);
            }
        }
        return LaurentSeries::exact(std::move(c), lo, trunc);
    }
    std::vector<double> c(static_cast<std::size_t>(trunc - lo + 1), 0.0);
    for (int i = a.min_exp(); i <= a.trunc_order(); ++i) {
        double ai = a.coeff_double(i);
        for (int j = b.min_exp(); j <= b.trunc_order(); ++j) {
            int e = i + j;
            if (e > trunc) break;
            c[static_cast<std::size_t>(e - lo)] += ai * b.coeff_double(j);
        }
    }
    return LaurentSeries::floating(std::move(c), lo, trunc);
}

LaurentSeries laurent_inv(const LaurentSeries& a) {
    if (a.is_zero())
        fail(ErrorKind::ZeroSeries, "inverse of the zero series");
    int m = a.min_exp();
    int len = a.trunc_order() - m;  // usable Taylor length after factoring eps^m
    if (len < 0) fail(ErrorKind::ZeroSeries, "inverse of a series with empty window");
    if (a.mode() == CoeffMode::Exact) {
        Rat lead = a.coeff_exact(m);
        Rat lead_inv = lead.inv();
        std::vector<Rat> b(static_cast<std::size_t>(len) + 1, Rat(0));
        b[0] = lead_inv;
        for (int k = 1; k <= len; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += a.coeff_exact(m + j) * b[static_cast<std::size_t>(k - j)];
            b[static_cast<std::size_t>(k)] = -(lead_inv * acc);
        }
        return LaurentSeries::exact(std::move(b), -m, -m + len);
    }
    double lead = a.coeff_double(m);
    // normalize() guarantees the leading float coefficient is above the
    // configured threshold, but guard against a degenerate exact zero
    if (lead == 0.0) fail(ErrorKind::ZeroSeries, "inverse with zero leading coefficient");
    double lead_inv = 1.0 / lead;
    std::vector<double> b(static_cast<std::size_t>(len) + 1, 0.0);
    b[0] = lead_inv;
    for (int k = 1; k <= len; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += a.coeff_double(m + j) * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -lead_inv * acc;
    }
    return LaurentSeries::floating(std::move(b), -m, -m + len);
}

LaurentSeries ratfunc_expand(const RatFunc& r, const Rat& s0, int order) {
    UniPoly num = r.num().compose_shift(s0);
    UniPoly den = r.den().compose_shift(s0);
    if (num.is_zero()) return LaurentSeries::zero(CoeffMode::Exact, order);
    int vd = den.root_multiplicity(Rat(0));
    LaurentSeries sn = LaurentSeries::from_poly(num, order + vd);
    LaurentSeries sd = LaurentSeries::from_poly(den, order + 2 * vd);
    LaurentSeries out = laurent_mul(sn, laurent_inv(sd));
    return out.truncated(order);
}

}  // namespace igusa
