#include "quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>

#include "errors.hpp"

namespace igusa {

const GaussRule& gauss_rule(int npts) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(npts);
    if (it != cache.end()) return it->second;
    if (npts < 1) fail(ErrorKind::BadArgument, "gauss rule needs >= 1 point");

    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(npts));
    r.weights.resize(static_cast<std::size_t>(npts));
    for (int i = 0; i < npts; ++i) {
        // Newton on P_n over [-1, 1]
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(npts) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= npts; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        r.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);  // map to [0,1], ascending
        r.weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    std::reverse(r.nodes.begin(), r.nodes.end());
    std::reverse(r.weights.begin(), r.weights.end());
    return cache.emplace(npts, std::move(r)).first->second;
}

namespace detail {

namespace {

struct Cell {
    std::vector<double> lo, hi;
    int depth = 0;
};

struct CellEval {
    double value = 0.0;   // high rule
    double err = 0.0;     // |high - low|
    double minf = DBL_MAX;
    double volume = 0.0;
};

double tensor_eval(const CubeFn& fn, const Cell& c, const GaussRule& rule, double* minf_io) {
    int dim = static_cast<int>(c.lo.size());
    int p = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    std::vector<double> pt(static_cast<std::size_t>(dim));
    double sum = 0.0, comp = 0.0;  // Kahan
    for (;;) {
        double w = 1.0;
        for (int k = 0; k < dim; ++k) {
            std::size_t ks = static_cast<std::size_t>(k);
            std::size_t is = static_cast<std::size_t>(idx[ks]);
            pt[ks] = c.lo[ks] + rule.nodes[is] * (c.hi[ks] - c.lo[ks]);
            w *= rule.weights[is];
        }
        double fprobe = DBL_MAX;
        double v = fn(pt.data(), minf_io ? &fprobe : nullptr);
        if (minf_io && fprobe < *minf_io) *minf_io = fprobe;
        double term = w * v - comp;
        double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
        int k = 0;
        while (k < dim && ++idx[static_cast<std::size_t>(k)] == p) {
            idx[static_cast<std::size_t>(k)] = 0;
            ++k;
        }
        if (k == dim) break;
    }
    double vol = 1.0;
    for (int k = 0; k < dim; ++k)
        vol *= c.hi[static_cast<std::size_t>(k)] - c.lo[static_cast<std::size_t>(k)];
    return sum * vol;
}

CellEval evaluate_cell(const CubeFn& fn, const Cell& c, const QuadConfig& cfg) {
    CellEval e;
    const GaussRule& lo_rule = gauss_rule(cfg.base_rule);
    const GaussRule& hi_rule = gauss_rule(2 * cfg.base_rule);
    double lo_val = tensor_eval(fn, c, lo_rule, &e.minf);
    e.value = tensor_eval(fn, c, hi_rule, &e.minf);
    e.err = std::fabs(e.value - lo_val);
    e.volume = 1.0;
    for (std::size_t k = 0; k < c.lo.size(); ++k) e.volume *= c.hi[k] - c.lo[k];
    return e;
}

int split_axis(const CubeFn& fn, const Cell& c) {
    int dim = static_cast<int>(c.lo.size());
    if (dim == 1) return 0;
    std::vector<double> center(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        std::size_t ks = static_cast<std::size_t>(k);
        center[ks] = 0.5 * (c.lo[ks] + c.hi[ks]);
    }
    double fc = fn(center.data(), nullptr);
    int best = 0;
    double best_score = -1.0, best_width = -1.0;
    std::vector<double> pt = center;
    for (int k = 0; k < dim; ++k) {
        std::size_t ks = static_cast<std::size_t>(k);
        double h = c.hi[ks] - c.lo[ks];
        double d = 0.3 * h;
        pt[ks] = center[ks] + d;
        double fp = fn(pt.data(), nullptr);
        pt[ks] = center[ks] - d;
        double fm = fn(pt.data(), nullptr);
        pt[ks] = center[ks];
        double score = std::fabs(fp - 2.0 * fc + fm);
        if (score > best_score * (1.0 + 1e-12) ||
            (score >= best_score * (1.0 - 1e-12) && h > best_width)) {
            best = k;
            best_score = score;
            best_width = h;
        }
    }
    return best;
}

}  // namespace

QuadResult adaptive_cube(int dim, const CubeFn& fn, double sing_threshold,
                         const QuadConfig& cfg, double tol_override) {
    double tol = tol_override > 0.0 ? tol_override : cfg.tol;
    if (tol <= 0.0 || cfg.max_depth < 0 || cfg.base_rule < 2)
        fail(ErrorKind::BadArgument, "invalid quadrature configuration");

    const long max_cells = 300000;
    QuadResult out;
    double vsum = 0.0, vcomp = 0.0, esum = 0.0, ecomp = 0.0;
    bool aborted = false;

    std::vector<Cell> stack;
    Cell root;
    root.lo.assign(static_cast<std::size_t>(dim), 0.0);
    root.hi.assign(static_cast<std::size_t>(dim), 1.0);
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        Cell c = std::move(stack.back());
        stack.pop_back();
        CellEval e = evaluate_cell(fn, c, cfg);
        bool want_refine = e.err > tol * e.volume ||
                           (sing_threshold > 0.0 && e.minf < sing_threshold);
        if (want_refine && c.depth < cfg.max_depth &&
            out.cells_used + static_cast<long>(stack.size()) < max_cells) {
            int ax = split_axis(fn, c);
            std::size_t axs = static_cast<std::size_t>(ax);
            double mid = 0.5 * (c.lo[axs] + c.hi[axs]);
            Cell left = c, right = c;
            left.hi[axs] = mid;
            right.lo[axs] = mid;
            left.depth = right.depth = c.depth + 1;
            stack.push_back(std::move(right));
            stack.push_back(std::move(left));
            continue;
        }
        if (want_refine && c.depth >= cfg.max_depth) {
            // accepted at the depth cap; its difference stays in the estimate
        } else if (want_refine) {
            aborted = true;
        }
        double tv = e.value - vcomp;
        double t = vsum + tv;
        vcomp = (t - vsum) - tv;
        vsum = t;
        double te = e.err - ecomp;
        double t2 = esum + te;
        ecomp = (t2 - esum) - te;
        esum = t2;
        ++out.cells_used;
    }

    out.value = vsum;
    out.err_estimate = esum;
    out.converged = !aborted && esum <= tol;
    return out;
}

}  // namespace detail

namespace {

struct PieceMapD {
    std::vector<double> v0;
    std::vector<double> edges;  // column-major: edges[j*n + i] = coord i of edge j
    double signed_weight = 1.0;  // sign * |det|
    int n = 0;
};

PieceMapD build_piece_map(const MPoly& f, const SimplexDomain& piece) {
    PiecePullback pb = pullback_to_standard(f, piece);  // exact det + degeneracy check
    PieceMapD m;
    m.n = f.nvars();
    m.v0.resize(static_cast<std::size_t>(m.n));
    m.edges.resize(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) {
        m.v0[static_cast<std::size_t>(i)] = piece.vertices[0][static_cast<std::size_t>(i)].to_double();
        for (int j = 0; j < m.n; ++j)
            m.edges[static_cast<std::size_t>(j) * m.n + i] =
                piece.vertices[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(i)].to_double() -
                m.v0[static_cast<std::size_t>(i)];
    }
    m.signed_weight = pb.abs_det.to_double() * piece.sign;
    return m;
}

// u (first n cube coords) -> point of the piece; returns Duffy jacobian
double map_point(const PieceMapD& m, const double* u, double* x_out) {
    int n = m.n;
    double xs[16];
    double scale = 1.0, jac = 1.0;
    for (int i = 0; i < n; ++i) {
        xs[i] = u[i] * scale;
        for (int k = i + 1; k < n; ++k) jac *= 1.0 - u[i];
        scale *= 1.0 - u[i];
    }
    for (int i = 0; i < n; ++i) {
        double x = m.v0[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) x += m.edges[static_cast<std::size_t>(j) * n + i] * xs[j];
        x_out[i] = x;
    }
    return jac;
}

QuadResult sum_pieces(const MPoly& f, const Domain& d, int extra_dims, double sing_threshold,
                      bool check_negative, const QuadConfig& cfg,
                      const std::function<double(double F)>& value_of_f,
                      const std::function<double(double F, const double* t)>& value_of_f_t) {
    if (f.nvars() != d.nvars()) fail(ErrorKind::BadArgument, "variable count mismatch");
    if (d.nvars() > 15) fail(ErrorKind::BadArgument, "dimension cap is 15");
    CompiledPoly cf = compile(f);
    double piece_tol = cfg.tol / static_cast<double>(d.pieces().size());
    QuadResult total;
    total.converged = true;
    for (const SimplexDomain& piece : d.pieces()) {
        PieceMapD m = build_piece_map(f, piece);
        detail::CubeFn fn = [&](const double* u, double* f_probe) -> double {
            double x[16];
            double jac = map_point(m, u, x);
            double F = cf.eval(x);
            if (f_probe) *f_probe = F;
            if (check_negative && F < -cfg.tol)
                fail(ErrorKind::NegativeIntegrand,
                     "integrand negative at a quadrature node (f = " + std::to_string(F) + ")");
            double v = value_of_f ? value_of_f(F) : value_of_f_t(F, u + m.n);
            return v * jac * m.signed_weight;
        };
        QuadResult r = detail::adaptive_cube(m.n + extra_dims, fn, sing_threshold, cfg, piece_tol);
        total.value += r.value;
        total.err_estimate += r.err_estimate;
        total.cells_used += r.cells_used;
        total.converged = total.converged && r.converged;
    }
    total.converged = total.converged && total.err_estimate <= cfg.tol;
    return total;
}

}  // namespace

QuadResult integrate_power_log(const MPoly& f, double sigma, int l, const Domain& d,
                               const QuadConfig& cfg) {
    if (!(sigma > 0.0)) fail(ErrorKind::BadArgument, "power exponent must be positive");
    if (l < 0) fail(ErrorKind::BadArgument, "log power must be >= 0");
    double sing = std::pow(10.0 * DBL_EPSILON, 1.0 / sigma);
    auto value = [sigma, l](double F) -> double {
        if (F <= 0.0) return 0.0;
        double v = std::pow(F, sigma);
        if (l > 0) {
            double lg = std::log(F);
            for (int k = 0; k < l; ++k) v *= lg;
        }
        return v;
    };
    return sum_pieces(f, d, 0, sing, true, cfg, value, nullptr);
}

QuadResult integrate_box_rep(const MPoly& f, int s0, int l, const Domain& d,
                             const QuadConfig& cfg) {
    if (s0 < 1) fail(ErrorKind::BadArgument, "box representation needs s0 >= 1");
    if (l < 0) fail(ErrorKind::BadArgument, "log power must be >= 0");
    auto value = [s0, l](double F, const double* t) -> double {
        if (F <= 0.0) return 0.0;  // f^{s0} kills the bounded log factors
        double v = 1.0;
        for (int k = 0; k < s0; ++k) v *= F;
        double g = F - 1.0;
        for (int j = 0; j < l; ++j) v *= g / (g * t[j] + 1.0);
        return v;
    };
    return sum_pieces(f, d, l, 0.0, true, cfg, nullptr, value);
}

QuadResult j_value(const MPoly& f, double t, const Domain& d, const QuadConfig& cfg) {
    double radius = sup_estimate(f, d, 128);
    if (std::fabs(t) * radius >= 1.0)
        fail(ErrorKind::RadiusExceeded,
             "|t| * sup estimate = " + std::to_string(std::fabs(t) * radius) + " >= 1");
    auto value = [t](double F) -> double { return 1.0 / (1.0 - t * F); };
    return sum_pieces(f, d, 0, 0.0, false, cfg, value, nullptr);
}

}  // namespace igusa
