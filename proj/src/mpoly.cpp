#include "mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "errors.hpp"

namespace igusa {

MPoly::MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) fail(ErrorKind::BadArgument, "polynomial needs at least one variable");
}

MPoly MPoly::constant(int nvars, Rat c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<std::size_t>(nvars), 0), std::move(c));
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) fail(ErrorKind::BadArgument, "variable index out of range");
    MPoly p(nvars);
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return deg;
}

void MPoly::add_term(const ExpVec& exps, const Rat& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        fail(ErrorKind::BadArgument, "exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::BadArgument, "variable count mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::BadArgument, "variable count mismatch");
    MPoly r(a.nvars_);
    MPoly::ExpVec e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::scaled(const Rat& k) const {
    MPoly r(nvars_);
    if (k.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Rat MPoly::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        fail(ErrorKind::BadArgument, "evaluation point dimension mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= Rat::pow(point[i], static_cast<long>(e[i]));
        acc += t;
    }
    return acc;
}

double MPoly::eval_double(std::span<const double> point) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::substitute(std::span<const MPoly> subs) const {
    if (static_cast<int>(subs.size()) != nvars_)
        fail(ErrorKind::BadArgument, "substitution arity mismatch");
    int out_vars = subs.empty() ? 1 : subs[0].nvars();
    for (const MPoly& s : subs)
        if (s.nvars() != out_vars) fail(ErrorKind::BadArgument, "substitutes disagree on variables");

    // memoized powers of each substitute
    std::vector<std::vector<MPoly>> pows(static_cast<std::size_t>(nvars_));
    for (std::size_t i = 0; i < pows.size(); ++i) pows[i].push_back(MPoly::constant(out_vars, Rat(1)));

    MPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(out_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (pows[i].size() <= e[i]) pows[i].push_back(pows[i].back() * subs[i]);
            if (e[i] != 0) t = t * pows[i][e[i]];
        }
        r = r + t;
    }
    return r;
}

MPoly poly_pow(const MPoly& f, unsigned k) {
    MPoly acc = MPoly::constant(f.nvars(), Rat(1));
    MPoly base = f;
    while (k != 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return acc;
}

MPoly restrict_chart(const MPoly& f) {
    int n = f.nvars() - 1;
    if (n < 1) fail(ErrorKind::BadArgument, "chart restriction needs at least two variables");
    std::vector<MPoly> subs;
    MPoly x0 = MPoly::constant(n, Rat(1));
    for (int i = 0; i < n; ++i) x0 = x0 - MPoly::variable(n, i);
    subs.push_back(std::move(x0));
    for (int i = 0; i < n; ++i) subs.push_back(MPoly::variable(n, i));
    return f.substitute(subs);
}

std::vector<std::string> default_var_names(int n, bool homogeneous) {
    std::vector<std::string> names;
    for (int i = homogeneous ? 0 : 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string MPoly::str(std::span<const std::string> var_names) const {
    std::vector<std::string> defaults;
    if (var_names.empty()) {
        defaults = default_var_names(nvars_);
        var_names = defaults;
    }
    if (static_cast<int>(var_names.size()) != nvars_)
        fail(ErrorKind::BadArgument, "variable name count mismatch");
    if (terms_.empty()) return "0";

    // print by total degree descending, then exponent vector descending
    std::vector<const std::pair<const ExpVec, Rat>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    auto tdeg = [](const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0u); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        unsigned da = tdeg(a->first), db = tdeg(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rat a = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool is_const = tdeg(e) == 0;
        bool unit = a.is_one() && !is_const;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!unit) out += a.str();
        if (!mono.empty()) {
            if (!unit) out += "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::span<const std::string> vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void err(const std::string& what) {
        fail(ErrorKind::ParseError, what + " at position " + std::to_string(pos));
    }

    std::string read_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) err("expected digits");
        return std::string(text.substr(start, pos - start));
    }

    Rat read_rational() {
        std::string num = read_uint();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den = read_uint();
            return Rat::from_string(num + "/" + den);
        }
        return Rat::from_string(num);
    }

    int read_variable() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            err("expected variable or number");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name(text.substr(start, pos - start));
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        fail(ErrorKind::UnknownVariable,
             "unknown variable '" + name + "' at position " + std::to_string(start));
    }

    // [coefficient] [*] var[^e] ('*' var[^e])*
    MPoly read_term(int nvars) {
        MPoly t = MPoly::constant(nvars, Rat(1));
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t = t.scaled(read_rational());
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') ++pos;
            else if (pos >= text.size() || text[pos] == '+' || text[pos] == '-')
                return t;
        }
        for (;;) {
            int v = read_variable();
            unsigned e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = static_cast<unsigned>(std::stoul(read_uint()));
            }
            t = t * poly_pow(MPoly::variable(nvars, v), e);
            saw_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                // a '*' may also precede a numeric factor, e.g. "x1*2"
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    t = t.scaled(read_rational());
                    skip_ws();
                    if (pos < text.size() && text[pos] == '*') ++pos;
                    else break;
                }
                continue;
            }
            break;
        }
        if (!saw_factor) err("empty term");
        return t;
    }

    MPoly parse() {
        if (vars.empty()) fail(ErrorKind::BadArgument, "no variables given");
        int nvars = static_cast<int>(vars.size());
        MPoly acc(nvars);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            char c = peek();
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                err("expected '+' or '-'");
            }
            if (at_end()) err("dangling sign");
            MPoly t = read_term(nvars);
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        }
        if (first) err("empty polynomial");
        return acc;
    }
};

}  // namespace

MPoly parse_poly(std::string_view text, std::span<const std::string> var_names) {
    PolyParser p{text, var_names};
    return p.parse();
}

double CompiledPoly::eval(const double* x) const {
    double acc = 0.0;
    for (const Term& t : terms) {
        double v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            double b = x[i];
            unsigned e = t.exps[i];
            while (e >= 2) {
                if (e & 1u) v *= b;
                b *= b;
                e >>= 1u;
            }
            if (e) v *= b;
        }
        acc += v;
    }
    return acc;
}

CompiledPoly compile(const MPoly& f) {
    CompiledPoly c;
    c.nvars = f.nvars();
    for (const auto& [e, r] : f.terms()) c.terms.push_back({r.to_double(), e});
    return c;
}

}  // namespace igusa
