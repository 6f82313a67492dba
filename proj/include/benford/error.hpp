#pragma once

#include <stdexcept>
#include <string>

namespace benford {

/// Coarse failure classes. The CLI maps these onto exit codes.
enum class ErrorCategory { Usage, Data, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

/// Zero, negative, NaN or infinite value where a positive finite real is required.
class NonPositiveInput : public Error {
public:
    explicit NonPositiveInput(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCategory::Usage, what) {}
};

class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error(ErrorCategory::Numeric, what) {}
};

class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what) : Error(ErrorCategory::Numeric, what) {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& what) : Error(ErrorCategory::Numeric, what) {}
};

class EmptyData : public Error {
public:
    explicit EmptyData(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

class UnsupportedRatio : public Error {
public:
    explicit UnsupportedRatio(const std::string& what) : Error(ErrorCategory::Usage, what) {}
};

}  // namespace benford

namespace benford {

/// Unreadable input file, missing column, malformed document.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorCategory::Data, what) {}
};

}  // namespace benford
