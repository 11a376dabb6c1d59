#ifndef CIRCLERIG_ERRORS_HPP
#define CIRCLERIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace circlerig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidMap : Error { using Error::Error; };
struct AmbiguousAtTolerance : Error { using Error::Error; };
struct NoFixedPoint : Error { using Error::Error; };
struct FixedPointInInterval : Error { using Error::Error; };
struct NotPeriodic : Error { using Error::Error; };
struct ExchangedFixedPoints : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };
struct NotIdentityLift : Error { using Error::Error; };
struct MixedPresentations : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct RelatorNotSatisfied : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct ConstructionFailed : Error { using Error::Error; };
struct NotDiscreteRange : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct CoincidentFixedPoints : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NoGlobalFixedPoint : Error { using Error::Error; };
struct DiscontinuityDetected : Error { using Error::Error; };

}  // namespace circlerig

#endif
