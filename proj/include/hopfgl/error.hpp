#ifndef HOPFGL_ERROR_HPP
#define HOPFGL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfgl
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different coefficient rings.
class RingMismatch : public Error
{
public:
    using Error::Error;
};

// A morphism has no image for a generator it was asked to map.
class MissingImage : public Error
{
public:
    using Error::Error;
};

// A construction precondition does not hold (non-monic series, missing
// tensor square, non-cocommutative descriptor, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace hopfgl

#endif
