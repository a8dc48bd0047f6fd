#ifndef ELLCMM_ERRORS_HPP
#define ELLCMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellcmm {

// Every failure mode of the engine derives from Error so callers can catch the
// whole family, while tests still discriminate on the concrete type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ELLCMM_DEFINE_ERROR(Name)                                            \
    struct Name : Error {                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

ELLCMM_DEFINE_ERROR(DivisionByZero);
ELLCMM_DEFINE_ERROR(PoleAtOrigin);
ELLCMM_DEFINE_ERROR(EvaluationPole);
ELLCMM_DEFINE_ERROR(OddPowerResidue);
ELLCMM_DEFINE_ERROR(NonExactDivision);
ELLCMM_DEFINE_ERROR(NotInSpan);
ELLCMM_DEFINE_ERROR(ZeroDenominator);
ELLCMM_DEFINE_ERROR(InstableTruncation);
ELLCMM_DEFINE_ERROR(ParseError);
ELLCMM_DEFINE_ERROR(CacheError);

#undef ELLCMM_DEFINE_ERROR

}  // namespace ellcmm

#endif  // ELLCMM_ERRORS_HPP
