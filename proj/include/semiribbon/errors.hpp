#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace semiribbon {

// Exit-code classes used by the command line front end.
enum class ErrorKind { InvalidInput = 1, Precondition = 2, Contradiction = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string reason, const std::string& message)
        : std::runtime_error(message), kind_(kind), reason_(std::move(reason)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    ErrorKind kind_;
    std::string reason_;
};

class InvalidMapError : public Error {
public:
    InvalidMapError(std::string reason, const std::string& message,
                    std::vector<std::string> violations = {})
        : Error(ErrorKind::InvalidInput, std::move(reason), message),
          violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class PreconditionError : public Error {
public:
    PreconditionError(std::string reason, const std::string& message)
        : Error(ErrorKind::Precondition, std::move(reason), message) {}
};

class ContradictionError : public Error {
public:
    ContradictionError(std::string reason, const std::string& message)
        : Error(ErrorKind::Contradiction, std::move(reason), message) {}
};

}  // namespace semiribbon
