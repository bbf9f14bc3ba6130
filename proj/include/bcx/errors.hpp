#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bcx {

/// Which idempotent component(s) of a value an error refers to.
enum class Components : unsigned { none = 0, minus = 1, plus = 2, both = 3 };

constexpr Components operator|(Components a, Components b) {
    return static_cast<Components>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}

constexpr bool has_component(Components set, Components c) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(c)) != 0u;
}

inline std::string to_string(Components c) {
    switch (c) {
        case Components::minus: return "minus";
        case Components::plus: return "plus";
        case Components::both: return "both";
        default: return "none";
    }
}

/// Classification of a bicomplex scalar by its idempotent components.
enum class ScalarClass { Zero, ZeroDivisor, Invertible };

inline std::string to_string(ScalarClass c) {
    switch (c) {
        case ScalarClass::Zero: return "zero";
        case ScalarClass::ZeroDivisor: return "zero-divisor";
        default: return "invertible";
    }
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or length mismatch between operands.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Rejected text input; position is a 0-based offset into the input string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Inversion attempted on a singular scalar, matrix or map.  For scalars the
/// classification (zero / zero-divisor) is recorded; for matrices and maps
/// the failing idempotent component(s) are.
class NotInvertibleError : public Error {
public:
    NotInvertibleError(const std::string& what, ScalarClass cls)
        : Error(what), components_(Components::none), scalar_class_(cls) {}

    NotInvertibleError(const std::string& what, Components failed)
        : Error(what), components_(failed) {}

    Components failed_components() const noexcept { return components_; }
    std::optional<ScalarClass> scalar_classification() const noexcept { return scalar_class_; }

private:
    Components components_;
    std::optional<ScalarClass> scalar_class_;
};

/// Inconsistent linear system; names the component system(s) that failed.
class NoSolutionError : public Error {
public:
    NoSolutionError(const std::string& what, Components failed)
        : Error(what), components_(failed) {}

    Components failed_components() const noexcept { return components_; }

private:
    Components components_;
};

/// Basis construction from linearly dependent vectors.
class SingularBasisError : public Error {
public:
    using Error::Error;
};

}  // namespace bcx
