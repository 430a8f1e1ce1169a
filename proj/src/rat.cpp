#include "rat.hpp"

#include <cctype>

#include "errors.hpp"

namespace igusa {

Rat::Rat(long num, long den) {
    mpq_init(q_);
    if (den == 0) fail(ErrorKind::BadArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(q_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(q_);
}

Rat Rat::from_string(std::string_view text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) fail(ErrorKind::ParseError, "empty rational literal");
    // mpq_set_str accepts "num/den" but tolerates junk less strictly than we
    // want; validate shape first.
    std::size_t slash = t.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    bool ok;
    if (slash == std::string::npos) {
        ok = check_int(t, true);
    } else {
        ok = check_int(std::string_view(t).substr(0, slash), true) &&
             check_int(std::string_view(t).substr(slash + 1), false) &&
             t.find('/', slash + 1) == std::string::npos;
    }
    if (!ok) fail(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
    Rat r;
    if (mpq_set_str(r.q_, t.c_str(), 10) != 0)
        fail(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_canonicalize(r.q_);
    return r;
}

Rat Rat::factorial(unsigned long n) {
    Rat r;
    mpz_fac_ui(mpq_numref(r.q_), n);
    return r;
}

Rat Rat::pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : base.inv();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(b.q_), k);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(b.q_), k);
    // powers of a canonical rational stay canonical
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) fail(ErrorKind::BadArgument, "division by zero rational");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail(ErrorKind::BadArgument, "division by zero rational");
    Rat r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorKind::BadArgument, "division by zero rational");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::string Rat::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freef)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freef);
    freef(s, out.size() + 1);
    return out;
}

std::size_t Rat::digit_size() const {
    return mpz_sizeinbase(mpq_numref(q_), 10) + mpz_sizeinbase(mpq_denref(q_), 10);
}

Rat Rat::vector_content(const std::vector<Rat>& v) {
    mpz_t g, l;
    mpz_init_set_ui(g, 0);
    mpz_init_set_ui(l, 1);
    for (const Rat& r : v) {
        mpz_gcd(g, g, mpq_numref(r.q_));
        mpz_lcm(l, l, mpq_denref(r.q_));
    }
    Rat c;
    if (mpz_sgn(g) != 0) {
        mpz_set(mpq_numref(c.q_), g);
        mpz_set(mpq_denref(c.q_), l);
        mpq_canonicalize(c.q_);
    }
    mpz_clear(g);
    mpz_clear(l);
    return c;
}

}  // namespace igusa
