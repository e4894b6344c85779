#ifndef QTRI_ERRORS_HPP
#define QTRI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qtri
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error
{
public:
    using Error::Error;
};

// Requested data lies outside what a sequence or triangle provides.
class RangeError : public Error
{
public:
    using Error::Error;
};

// A coefficient scheme or generator was configured inconsistently.
class ConfigError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept
    {
        return line_;
    }

private:
    std::size_t line_;
};

} // namespace qtri

#endif
