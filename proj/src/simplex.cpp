#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "digest.hpp"
#include "errors.hpp"

namespace igusa {

namespace {

// Exact determinant by fraction Gaussian elimination; matrices here are tiny.
Rat det_exact(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = m[col][col].inv();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

struct PieceFrameD {
    std::vector<double> v0;
    std::vector<double> lu;       // row-major LU of edge matrix, no pivoting guarantees
    std::vector<int> perm;
    bool singular = false;
    int n = 0;

    static PieceFrameD build(const SimplexDomain& p) {
        PieceFrameD f;
        f.n = static_cast<int>(p.vertices.empty() ? 0 : p.vertices[0].size());
        int n = f.n;
        f.v0.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) f.v0[static_cast<std::size_t>(j)] = p.vertices[0][static_cast<std::size_t>(j)].to_double();
        f.lu.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                f.lu[static_cast<std::size_t>(j) * n + i] =
                    p.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)].to_double() -
                    f.v0[static_cast<std::size_t>(j)];
        f.perm.resize(static_cast<std::size_t>(n));
        std::iota(f.perm.begin(), f.perm.end(), 0);
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::fabs(f.lu[static_cast<std::size_t>(r) * n + c]) >
                    std::fabs(f.lu[static_cast<std::size_t>(piv) * n + c]))
                    piv = r;
            if (piv != c) {
                for (int k = 0; k < n; ++k)
                    std::swap(f.lu[static_cast<std::size_t>(piv) * n + k],
                              f.lu[static_cast<std::size_t>(c) * n + k]);
                std::swap(f.perm[static_cast<std::size_t>(piv)], f.perm[static_cast<std::size_t>(c)]);
            }
            double d = f.lu[static_cast<std::size_t>(c) * n + c];
            if (std::fabs(d) < 1e-300) {
                f.singular = true;
                return f;
            }
            for (int r = c + 1; r < n; ++r) {
                double m = f.lu[static_cast<std::size_t>(r) * n + c] / d;
                f.lu[static_cast<std::size_t>(r) * n + c] = m;
                for (int k = c + 1; k < n; ++k)
                    f.lu[static_cast<std::size_t>(r) * n + k] -= m * f.lu[static_cast<std::size_t>(c) * n + k];
            }
        }
        return f;
    }

    // barycentric coordinates (lambda_1..lambda_n) of p
    bool barycentric(std::span<const double> p, std::span<double> lambda) const {
        if (singular) return false;
        std::vector<double> b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            b[static_cast<std::size_t>(i)] =
                p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] -
                v0[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < r; ++c)
                b[static_cast<std::size_t>(r)] -= lu[static_cast<std::size_t>(r) * n + c] * b[static_cast<std::size_t>(c)];
        for (int r = n - 1; r >= 0; --r) {
            for (int c = r + 1; c < n; ++c)
                b[static_cast<std::size_t>(r)] -= lu[static_cast<std::size_t>(r) * n + c] * b[static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] /= lu[static_cast<std::size_t>(r) * n + r];
        }
        std::copy(b.begin(), b.end(), lambda.begin());
        return true;
    }

    bool strictly_inside(std::span<const double> p, double margin) const {
        std::vector<double> lam(static_cast<std::size_t>(n));
        if (!barycentric(p, lam)) return false;
        double sum = 0.0;
        for (double l : lam) {
            if (l <= margin) return false;
            sum += l;
        }
        return sum < 1.0 - margin;
    }
};

void piece_point(const SimplexDomain& piece, std::span<const double> simplex_pt,
                 std::span<double> out) {
    std::size_t n = simplex_pt.size();
    double lam0 = 1.0;
    for (double l : simplex_pt) lam0 -= l;
    for (std::size_t j = 0; j < n; ++j) {
        double x = lam0 * piece.vertices[0][j].to_double();
        for (std::size_t i = 0; i < n; ++i) x += simplex_pt[i] * piece.vertices[i + 1][j].to_double();
        out[j] = x;
    }
}

}  // namespace

void duffy_map(std::span<const double> u, std::span<double> x_out) {
    double scale = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        x_out[i] = u[i] * scale;
        scale *= 1.0 - u[i];
    }
}

double duffy_jacobian(std::span<const double> u) {
    double j = 1.0;
    std::size_t n = u.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double f = 1.0 - u[i];
        for (std::size_t k = i + 1; k < n; ++k) j *= f;
    }
    return j;
}

void halton_point(unsigned long index, std::span<double> out) {
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13};
    if (out.size() > 6) fail(ErrorKind::BadArgument, "halton dimension too large");
    for (std::size_t d = 0; d < out.size(); ++d) {
        unsigned long i = index + 1;
        double f = 1.0, r = 0.0;
        while (i > 0) {
            f /= bases[d];
            r += f * static_cast<double>(i % bases[d]);
            i /= bases[d];
        }
        out[d] = r;
    }
}

Domain::Domain(int nvars, std::vector<SimplexDomain> pieces)
    : nvars_(nvars), pieces_(std::move(pieces)) {
    if (nvars_ < 1) fail(ErrorKind::DomainFormat, "domain needs dimension >= 1");
    if (pieces_.empty()) fail(ErrorKind::DomainFormat, "domain needs at least one piece");
    for (const SimplexDomain& p : pieces_) {
        if (p.sign != 1 && p.sign != -1) fail(ErrorKind::DomainFormat, "piece sign must be +1 or -1");
        if (static_cast<int>(p.vertices.size()) != nvars_ + 1)
            fail(ErrorKind::DomainFormat, "piece needs n+1 vertices");
        for (const auto& v : p.vertices)
            if (static_cast<int>(v.size()) != nvars_)
                fail(ErrorKind::DomainFormat, "vertex dimension mismatch");
    }

    // probabilistic disjointness probe of piece interiors
    if (pieces_.size() > 1 && nvars_ <= 6) {
        std::vector<PieceFrameD> frames;
        for (const SimplexDomain& p : pieces_) frames.push_back(PieceFrameD::build(p));
        std::vector<double> u(static_cast<std::size_t>(nvars_));
        std::vector<double> x(static_cast<std::size_t>(nvars_));
        std::vector<double> pt(static_cast<std::size_t>(nvars_));
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            for (unsigned long k = 0; k < 24; ++k) {
                halton_point(k * 7 + 3, u);
                duffy_map(u, x);
                piece_point(pieces_[i], x, pt);
                if (!frames[i].strictly_inside(pt, 1e-7)) continue;
                for (std::size_t j = 0; j < pieces_.size(); ++j) {
                    if (j == i) continue;
                    if (frames[j].strictly_inside(pt, 1e-7)) {
                        warn("domain pieces " + std::to_string(i) + " and " + std::to_string(j) +
                             " appear to have overlapping interiors");
                        return;
                    }
                }
            }
        }
    }
}

Domain Domain::standard_simplex(int n) {
    if (n < 1) fail(ErrorKind::DomainFormat, "standard simplex needs n >= 1");
    SimplexDomain p;
    p.sign = 1;
    p.vertices.assign(static_cast<std::size_t>(n) + 1,
                      std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        p.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = Rat(1);
    return Domain(n, {std::move(p)});
}

Domain Domain::from_json_text(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        fail(ErrorKind::DomainFormat, std::string("domain JSON parse failure: ") + e.what());
    }
    if (j.is_string() && j.get<std::string>() == "standard")
        fail(ErrorKind::DomainFormat, "\"standard\" shorthand needs the variable count from -n");
    if (!j.is_object() || !j.contains("nvars") || !j.contains("pieces"))
        fail(ErrorKind::DomainFormat, "domain JSON needs \"nvars\" and \"pieces\"");
    int n = 0;
    try {
        n = j.at("nvars").get<int>();
    } catch (const std::exception&) {
        fail(ErrorKind::DomainFormat, "\"nvars\" must be an integer");
    }
    auto coord = [](const nlohmann::json& c) -> Rat {
        if (c.is_string()) return Rat::from_string(c.get<std::string>());
        if (c.is_number_integer()) return Rat(c.get<long>());
        fail(ErrorKind::DomainFormat, "vertex coordinates must be rational strings");
    };
    std::vector<SimplexDomain> pieces;
    if (!j.at("pieces").is_array()) fail(ErrorKind::DomainFormat, "\"pieces\" must be an array");
    for (const auto& pj : j.at("pieces")) {
        SimplexDomain p;
        p.sign = pj.value("sign", 1);
        if (!pj.contains("vertices") || !pj.at("vertices").is_array())
            fail(ErrorKind::DomainFormat, "piece needs a \"vertices\" array");
        for (const auto& vj : pj.at("vertices")) {
            std::vector<Rat> v;
            for (const auto& c : vj) v.push_back(coord(c));
            p.vertices.push_back(std::move(v));
        }
        pieces.push_back(std::move(p));
    }
    return Domain(n, std::move(pieces));
}

std::string Domain::canonical_json() const {
    std::string out = "{\"nvars\":" + std::to_string(nvars_) + ",\"pieces\":[";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += ",";
        out += "{\"sign\":" + std::to_string(pieces_[i].sign) + ",\"vertices\":[";
        for (std::size_t v = 0; v < pieces_[i].vertices.size(); ++v) {
            if (v) out += ",";
            out += "[";
            for (std::size_t c = 0; c < pieces_[i].vertices[v].size(); ++c) {
                if (c) out += ",";
                out += "\"" + pieces_[i].vertices[v][c].str() + "\"";
            }
            out += "]";
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

Rat Domain::signed_volume() const {
    Rat fact = Rat::factorial(static_cast<unsigned long>(nvars_));
    Rat acc(0);
    for (const SimplexDomain& p : pieces_) {
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(nvars_),
                                        std::vector<Rat>(static_cast<std::size_t>(nvars_)));
        for (int i = 0; i < nvars_; ++i)
            for (int jx = 0; jx < nvars_; ++jx)
                m[static_cast<std::size_t>(jx)][static_cast<std::size_t>(i)] =
                    p.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(jx)] -
                    p.vertices[0][static_cast<std::size_t>(jx)];
        acc += Rat(p.sign) * det_exact(m).abs() / fact;
    }
    return acc;
}

Rat Domain::abs_volume() const {
    Rat fact = Rat::factorial(static_cast<unsigned long>(nvars_));
    Rat acc(0);
    for (const SimplexDomain& p : pieces_) {
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(nvars_),
                                        std::vector<Rat>(static_cast<std::size_t>(nvars_)));
        for (int i = 0; i < nvars_; ++i)
            for (int jx = 0; jx < nvars_; ++jx)
                m[static_cast<std::size_t>(jx)][static_cast<std::size_t>(i)] =
                    p.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(jx)] -
                    p.vertices[0][static_cast<std::size_t>(jx)];
        acc += det_exact(m).abs() / fact;
    }
    return acc;
}

Rat integrate_monomial(std::span<const unsigned> exponents) {
    if (exponents.empty()) fail(ErrorKind::BadArgument, "monomial integral needs n >= 1");
    unsigned long total = 0;
    Rat num(1);
    for (unsigned a : exponents) {
        num *= Rat::factorial(a);
        total += a;
    }
    return num / Rat::factorial(static_cast<unsigned long>(exponents.size()) + total);
}

PiecePullback pullback_to_standard(const MPoly& f, const SimplexDomain& piece) {
    int n = f.nvars();
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                piece.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] -
                piece.vertices[0][static_cast<std::size_t>(j)];
    Rat det = det_exact(m);
    if (det.is_zero())
        fail(ErrorKind::DegenerateSimplex, "piece vertices are affinely dependent");

    // x_j = v0_j + sum_i u_i (v_i_j - v0_j)
    std::vector<MPoly> subs;
    for (int j = 0; j < n; ++j) {
        MPoly xj = MPoly::constant(n, piece.vertices[0][static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i) {
            Rat d = piece.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] -
                    piece.vertices[0][static_cast<std::size_t>(j)];
            if (!d.is_zero()) xj = xj + MPoly::variable(n, i).scaled(d);
        }
        subs.push_back(std::move(xj));
    }
    return PiecePullback{f.substitute(subs), det.abs(), piece.sign};
}

namespace {

Rat integrate_standard(const MPoly& g) {
    Rat acc(0);
    for (const auto& [e, c] : g.terms()) acc += c * integrate_monomial(e);
    return acc;
}

void check_nonnegative_sampled(const MPoly& f, const Domain& d) {
    std::vector<double> u(static_cast<std::size_t>(d.nvars()));
    std::vector<double> x(static_cast<std::size_t>(d.nvars()));
    std::vector<double> pt(static_cast<std::size_t>(d.nvars()));
    double minval = 0.0, maxabs = 0.0;
    for (const SimplexDomain& piece : d.pieces()) {
        for (const auto& v : piece.vertices) {
            for (std::size_t j = 0; j < v.size(); ++j) pt[j] = v[j].to_double();
            double val = f.eval_double(pt);
            minval = std::min(minval, val);
            maxabs = std::max(maxabs, std::fabs(val));
        }
        if (d.nvars() <= 6) {
            for (unsigned long k = 0; k < 64; ++k) {
                halton_point(k, u);
                duffy_map(u, x);
                piece_point(piece, x, pt);
                double val = f.eval_double(pt);
                minval = std::min(minval, val);
                maxabs = std::max(maxabs, std::fabs(val));
            }
        }
    }
    if (minval < -1e-12 * (1.0 + maxabs))
        warn("integrand appears negative on the domain (sampled min ~= " +
             std::to_string(minval) + ")");
}

}  // namespace

Rat integrate_poly(const MPoly& f, const Domain& d) {
    if (f.nvars() != d.nvars()) fail(ErrorKind::BadArgument, "variable count mismatch");
    Rat acc(0);
    for (const SimplexDomain& piece : d.pieces()) {
        PiecePullback pb = pullback_to_standard(f, piece);
        acc += Rat(pb.sign) * pb.abs_det * integrate_standard(pb.integrand);
    }
    return acc;
}

MomentSequence moments(const MPoly& f, const Domain& d, int N) {
    if (N < 0) fail(ErrorKind::BadArgument, "moment count must be >= 0");
    if (f.nvars() != d.nvars()) fail(ErrorKind::BadArgument, "variable count mismatch");
    check_nonnegative_sampled(f, d);

    MomentSequence seq;
    seq.values.assign(static_cast<std::size_t>(N) + 1, Rat(0));
    for (const SimplexDomain& piece : d.pieces()) {
        PiecePullback pb = pullback_to_standard(f, piece);
        Rat weight = Rat(pb.sign) * pb.abs_det;
        // incremental powers: value-equal to integrating poly_pow(f, k)
        MPoly power = MPoly::constant(f.nvars(), Rat(1));
        for (int k = 0; k <= N; ++k) {
            if (k > 0) power = power * pb.integrand;
            seq.values[static_cast<std::size_t>(k)] += weight * integrate_standard(power);
        }
    }
    seq.f_digest = digest64_hex(f.str());
    seq.domain_digest = digest64_hex(d.canonical_json());
    return seq;
}

std::vector<std::string> decompose_union(int n_count, int m_count) {
    if (n_count < 1 || m_count < 1)
        fail(ErrorKind::BadArgument, "decompose_union needs n, m >= 1");
    if (n_count + m_count > 24) fail(ErrorKind::BadArgument, "sign string length cap is 24");
    int len = n_count + m_count;
    std::vector<std::string> out;
    // counting order with bit 0 -> '+' is exactly lexicographic with '+' < '-'
    for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
        bool all_a = true, all_b = true;
        for (int i = 0; i < n_count; ++i)
            if (mask & (1ul << (len - 1 - i))) all_a = false;
        for (int i = 0; i < m_count; ++i)
            if (mask & (1ul << (len - 1 - n_count - i))) all_b = false;
        if (!all_a && !all_b) continue;
        std::string s(static_cast<std::size_t>(len), '+');
        for (int i = 0; i < len; ++i)
            if (mask & (1ul << (len - 1 - i))) s[static_cast<std::size_t>(i)] = '-';
        out.push_back(std::move(s));
    }
    return out;
}

double sup_estimate(const MPoly& f, const Domain& d, int samples) {
    if (samples < 1) fail(ErrorKind::BadArgument, "sup_estimate needs samples >= 1");
    double best = 0.0;
    std::vector<double> pt(static_cast<std::size_t>(d.nvars()));
    std::vector<double> u(static_cast<std::size_t>(d.nvars()));
    std::vector<double> x(static_cast<std::size_t>(d.nvars()));
    for (const SimplexDomain& piece : d.pieces()) {
        for (const auto& v : piece.vertices) {
            for (std::size_t j = 0; j < v.size(); ++j) pt[j] = v[j].to_double();
            best = std::max(best, std::fabs(f.eval_double(pt)));
        }
        // barycenter
        for (std::size_t j = 0; j < pt.size(); ++j) {
            double s = 0.0;
            for (const auto& v : piece.vertices) s += v[j].to_double();
            pt[j] = s / static_cast<double>(piece.vertices.size());
        }
        best = std::max(best, std::fabs(f.eval_double(pt)));
        if (d.nvars() <= 6) {
            for (int k = 0; k < samples; ++k) {
                halton_point(static_cast<unsigned long>(k), u);
                duffy_map(u, x);
                piece_point(piece, x, pt);
                best = std::max(best, std::fabs(f.eval_double(pt)));
            }
        }
    }
    return best * 1.1;
}

}  // namespace igusa
