#pragma once

#include <stdexcept>
#include <string>

namespace acp
{
    /// Malformed arguments: out-of-range vertices, bad family parameters, inconsistent partitions.
    class InputError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A textual encoding (graph6, family spec, edge list) could not be decoded.
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A formula was asked for outside the range where it is known to hold.
    class PreconditionError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// A configured size or node limit was exceeded.
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
