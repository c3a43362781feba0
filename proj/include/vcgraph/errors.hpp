#pragma once

#include <stdexcept>
#include <string>

namespace vcgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction would exceed the configured vertex capacity.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed input: bad parameters, out-of-range ids, malformed labels.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A document (JSON, CSV) does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace vcgraph
