#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |alpha|^2 - |beta|^2 (or the real determinant) is not 1 within tolerance.
class DeterminantViolation : public Error {
public:
    using Error::Error;
};

class ZeroTransmission : public Error {
public:
    using Error::Error;
};

/// A layer would carry an evanescent (non-propagating) wave.
class EvanescentWave : public Error {
public:
    using Error::Error;
};

/// +/- identity has every point fixed and no canonical reduction.
class DegenerateMatrix : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

class DuplicatePoints : public Error {
public:
    using Error::Error;
};

}  // namespace su11
