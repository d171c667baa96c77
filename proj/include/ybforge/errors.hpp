#ifndef YBFORGE_ERRORS_HPP
#define YBFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ybforge {

/// Operand shapes do not fit (matrix product, tensor dims, table sizes).
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (rationals, matrices, JSON structure files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity job whose grids cannot certify the requested degree bound.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ybforge

#endif // YBFORGE_ERRORS_HPP
