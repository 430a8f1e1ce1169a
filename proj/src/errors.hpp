#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace igusa {

// Error taxonomy shared by the whole library. The C API maps these 1:1 onto
// status codes; the CLI maps them onto exit classes (input/domain -> 2,
// convergence -> 3).
enum class ErrorKind {
    ParseError,
    UnknownVariable,
    DomainFormat,
    DegenerateSimplex,
    RadiusExceeded,
    ZeroSeries,
    ModeMix,
    BadArgument,
    InsufficientMoments,
    NotFound,
    AmbiguousRelation,
    PoleAt,
    NegativeIntegrand,
    NotConverged,
    OrderExhausted,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::DomainFormat: return "DomainFormat";
        case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
        case ErrorKind::RadiusExceeded: return "RadiusExceeded";
        case ErrorKind::ZeroSeries: return "ZeroSeries";
        case ErrorKind::ModeMix: return "ModeMix";
        case ErrorKind::BadArgument: return "BadArgument";
        case ErrorKind::InsufficientMoments: return "InsufficientMoments";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::AmbiguousRelation: return "AmbiguousRelation";
        case ErrorKind::PoleAt: return "PoleAt";
        case ErrorKind::NegativeIntegrand: return "NegativeIntegrand";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::OrderExhausted: return "OrderExhausted";
        case ErrorKind::Internal: return "Internal";
    }
    return "Internal";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string detail) {
    throw Error(kind, std::move(detail));
}

// Non-fatal diagnostics (e.g. the sampled nonnegativity check). Redirectable
// so embedders and tests can capture them.
using WarnSink = void (*)(const std::string&);

inline WarnSink& warn_sink() {
    static WarnSink sink = nullptr;
    return sink;
}

inline void warn(const std::string& msg) {
    if (warn_sink())
        warn_sink()(msg);
    else
        std::fprintf(stderr, "igusa: warning: %s\n", msg.c_str());
}

}  // namespace igusa
