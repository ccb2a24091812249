#pragma once

#include <stdexcept>
#include <string>

namespace lodgednet {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor/image shapes that do not line up. Messages name the offending axis.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An argument value outside its documented domain (rates, ratios, bin edges).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Dataset problems: empty splits, bad labels, malformed manifests.
class DataError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failures (missing file, short read, unwritable path).
class IoError : public Error {
public:
    using Error::Error;
};

// Structurally invalid file contents (bad magic, version, truncation).
class FormatError : public Error {
public:
    using Error::Error;
};

// Non-finite values where finite ones are required, training divergence.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace lodgednet
