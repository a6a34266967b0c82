#pragma once

#include <stdexcept>
#include <string>

namespace ebchan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EBCHAN_DEFINE_ERROR(Name)              \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

EBCHAN_DEFINE_ERROR(NotHermitian);
EBCHAN_DEFINE_ERROR(DimensionMismatch);
EBCHAN_DEFINE_ERROR(BadDimension);
EBCHAN_DEFINE_ERROR(NonFinite);
EBCHAN_DEFINE_ERROR(NotAState);
EBCHAN_DEFINE_ERROR(BadAxis);
EBCHAN_DEFINE_ERROR(NotCP);
EBCHAN_DEFINE_ERROR(PreconditionViolated);
EBCHAN_DEFINE_ERROR(NegativeTime);
EBCHAN_DEFINE_ERROR(BadRange);
EBCHAN_DEFINE_ERROR(BadParameter);
EBCHAN_DEFINE_ERROR(NonPositiveOutput);
EBCHAN_DEFINE_ERROR(ParseError);

#undef EBCHAN_DEFINE_ERROR

}  // namespace ebchan
