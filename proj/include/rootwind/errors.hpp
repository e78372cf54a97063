#ifndef ROOTWIND_ERRORS_HPP
#define ROOTWIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootwind {

// Domain-level failures carry a stable code so the CLI can map them to exit
// status 2 and machine-readable error documents. Anything else (bad usage,
// malformed input) is reported as std::invalid_argument and maps to status 1.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* zero_divisor = "ZeroDivisor";
inline constexpr const char* zero_input = "ZeroInput";
inline constexpr const char* structure_violation = "StructureTheoremViolation";
inline constexpr const char* not_coprime = "NotCoprime";
inline constexpr const char* degree_order = "DegreeOrder";
inline constexpr const char* sign_condition = "SignConditionFails";
inline constexpr const char* common_root = "CommonRoot";
inline constexpr const char* root_on_boundary = "RootOnBoundary";
inline constexpr const char* soundness = "SoundnessViolation";
inline constexpr const char* point_is_root = "PointIsRoot";
inline constexpr const char* degree_bound = "DegreeBoundViolation";
inline constexpr const char* constant_input = "ConstantInput";
} // namespace errc

} // namespace rootwind

#endif
