#ifndef PSCERT_ERRORS_HPP
#define PSCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pscert {

struct NotRealValued : std::runtime_error {
    long k, l;
    NotRealValued(long k_, long l_)
        : std::runtime_error("polynomial is not real-valued: p(" + std::to_string(k_) + "," +
                             std::to_string(l_) + ") != conj(p(" + std::to_string(l_) + "," +
                             std::to_string(k_) + "))"),
          k(k_), l(l_) {}
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RedundantHole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonpositiveLowerBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeCoefficientAtBound : std::logic_error {
    using std::logic_error::logic_error;
};

struct TermBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfVerificationFailed : std::logic_error {
    using std::logic_error::logic_error;
};

struct MissingCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResolventConditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeltaTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GammaTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pscert

#endif  // PSCERT_ERRORS_HPP
