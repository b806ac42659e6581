#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define FUSION_ERROR(Name)                                                \
    struct Name : Error {                                                 \
        using Error::Error;                                               \
        const char* kind() const noexcept override { return #Name; }      \
    }

FUSION_ERROR(ParseError);
FUSION_ERROR(ContainmentError);
FUSION_ERROR(ParityError);
FUSION_ERROR(DivisionByZero);
// A limit that should exist has a pole.
FUSION_ERROR(PoleAtLimit);
FUSION_ERROR(DegreeMismatch);
FUSION_ERROR(SkewShapeError);
FUSION_ERROR(WrongTableau);
FUSION_ERROR(NonStandardNeighbor);
FUSION_ERROR(SampleAtPole);
FUSION_ERROR(IndexError);
FUSION_ERROR(SingularForm);
FUSION_ERROR(AmbientMismatch);
FUSION_ERROR(NotApplicable);
FUSION_ERROR(SizeLimitExceeded);
FUSION_ERROR(InvalidLabel);

#undef FUSION_ERROR

}  // namespace fusion
