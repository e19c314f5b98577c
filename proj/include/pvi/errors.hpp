#pragma once

#include <stdexcept>
#include <string>

namespace pvi {

// Every failure carries a stable kind name so the CLI and tests can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PVI_DEFINE_ERROR(Name)                                           \
    struct Name : Error {                                                \
        explicit Name(const std::string& what) : Error(#Name, what) {}   \
    };

PVI_DEFINE_ERROR(IncompatibleField)
PVI_DEFINE_ERROR(ContextMismatch)
PVI_DEFINE_ERROR(DivisionByZero)
PVI_DEFINE_ERROR(ResonantMu)
PVI_DEFINE_ERROR(BudgetExceeded)
PVI_DEFINE_ERROR(NotApplicable)
PVI_DEFINE_ERROR(ResourceLimit)
PVI_DEFINE_ERROR(NotASolution)
PVI_DEFINE_ERROR(OutOfRange)
PVI_DEFINE_ERROR(Irrational)
PVI_DEFINE_ERROR(CapExceeded)
PVI_DEFINE_ERROR(ZeroPivot)
PVI_DEFINE_ERROR(Inconsistent)
PVI_DEFINE_ERROR(DegenerateTriple)
PVI_DEFINE_ERROR(SingularC)
PVI_DEFINE_ERROR(InconsistentData)
PVI_DEFINE_ERROR(SingularParameter)
PVI_DEFINE_ERROR(DegenerateSample)
PVI_DEFINE_ERROR(VanishingDenominator)
PVI_DEFINE_ERROR(SingularPoint)
PVI_DEFINE_ERROR(StepCollapse)
PVI_DEFINE_ERROR(PathThroughSingularity)
PVI_DEFINE_ERROR(PoorFit)
PVI_DEFINE_ERROR(InvalidArgument)
PVI_DEFINE_ERROR(SchemaMismatch)

#undef PVI_DEFINE_ERROR

} // namespace pvi
