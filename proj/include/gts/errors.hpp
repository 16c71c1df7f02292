#ifndef GTS_ERRORS_HPP
#define GTS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gts {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// scalar / poly
struct MixedDomainError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct DivisionByZeroPolynomialError : Error {
    using Error::Error;
};

// modulus
struct DuplicateNodeError : Error {
    using Error::Error;
};

// func
struct SyntaxError : Error {
    std::size_t offset;
    std::string expected;
    SyntaxError(std::size_t off, std::string exp, const std::string& msg)
        : Error(msg), offset(off), expected(std::move(exp)) {}
};
struct DomainError : Error {
    using Error::Error;
};
struct PoleError : Error {
    using Error::Error;
};

// interp
struct WitnessNotBracketedError : Error {
    double q;
    double sampled_lo;
    double sampled_hi;
    WitnessNotBracketedError(double q_, double lo, double hi, const std::string& msg)
        : Error(msg), q(q_), sampled_lo(lo), sampled_hi(hi) {}
};

// ratapprox
struct DegenerateTableError : Error {
    using Error::Error;
};
struct PoleAtNodeError : Error {
    using Error::Error;
};

}  // namespace gts

#endif
