#ifndef MATSLOCC_ERRORS_HPP
#define MATSLOCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matslocc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct DenominatorDivisibleByP : Error { using Error::Error; };
struct SizeGuardExceeded : Error {
    long largest_k_tested = 0;
    explicit SizeGuardExceeded(const std::string& msg, long k = 0)
        : Error(msg), largest_k_tested(k) {}
};
struct SingularTransform : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotInSpace : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct NotMaximalCompression : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct InconsistentEvidence : Error { using Error::Error; };
struct ZeroPQ : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct EvenD : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };

} // namespace matslocc

#endif
