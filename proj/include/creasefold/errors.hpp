#pragma once

#include <stdexcept>
#include <string>

namespace creasefold {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

#define CREASEFOLD_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
        const char* kind() const noexcept override { return #Name; }        \
    }

CREASEFOLD_ERROR(DomainError);
CREASEFOLD_ERROR(NonFiniteEvaluation);
CREASEFOLD_ERROR(QuadratureFailure);
CREASEFOLD_ERROR(NonMonotone);
CREASEFOLD_ERROR(VanishingCurvature);
CREASEFOLD_ERROR(DegenerateAngle);
CREASEFOLD_ERROR(OutOfDomain);
CREASEFOLD_ERROR(EndpointSingularity);
CREASEFOLD_ERROR(WeldFailure);
CREASEFOLD_ERROR(NonGraph);
CREASEFOLD_ERROR(ScheduleViolation);
CREASEFOLD_ERROR(GridTooCoarse);
CREASEFOLD_ERROR(DegenerateMetric);
CREASEFOLD_ERROR(CollinearSamples);
CREASEFOLD_ERROR(DegenerateTriangle);
CREASEFOLD_ERROR(NotClosed);
CREASEFOLD_ERROR(InconsistentOrientation);
CREASEFOLD_ERROR(EvaluationFailure);
CREASEFOLD_ERROR(IoError);
CREASEFOLD_ERROR(InvalidDescriptor);

#undef CREASEFOLD_ERROR

} // namespace creasefold
