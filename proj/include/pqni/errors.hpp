#ifndef PQNI_ERRORS_HPP
#define PQNI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pqni {

// Error taxonomy shared by the library and the CLI exit codes:
// validation -> 2, I/O -> 3, numerical -> 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Raised when a record contains no detectable transient component.
class DetectionFailure : public NumericalError {
public:
    explicit DetectionFailure(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace pqni

#endif
