#pragma once

#include <stdexcept>
#include <string>

namespace ypgl2 {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// poly-core
struct NonzeroRemainder : Error {
    explicit NonzeroRemainder(const std::string& what) : Error(what) {}
};
struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

// straightening
struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(what) {}
};

// window modules
struct NotGeneric : Error {
    explicit NotGeneric(const std::string& what) : Error(what) {}
};
struct DivisibilityViolation : Error {
    explicit DivisibilityViolation(const std::string& what) : Error(what) {}
};
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& what) : Error(what) {}
};
struct PathLeavesWindow : Error {
    explicit PathLeavesWindow(const std::string& what) : Error(what) {}
};

// quiver machinery
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};
struct BadInterval : Error {
    explicit BadInterval(const std::string& what) : Error(what) {}
};
struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error(what) {}
};
struct NotIndecomposable : Error {
    explicit NotIndecomposable(const std::string& what) : Error(what) {}
};
struct SupportTouchesBoundary : Error {
    explicit SupportTouchesBoundary(const std::string& what) : Error(what) {}
};

}  // namespace ypgl2
