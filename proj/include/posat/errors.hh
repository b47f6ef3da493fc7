/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef POSAT_GUARD_ERRORS_HH
#define POSAT_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace posat
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A relation list whose transitive closure relates an element to itself.
    class CycleError : public Error
    {
        public:
            using Error::Error;
    };

    class IndexError : public Error
    {
        public:
            using Error::Error;
    };

    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    /// Raised when a full scan of P([n]) would exceed the configured limit.
    class GroundTooLarge : public Error
    {
        public:
            using Error::Error;
    };

    class ParameterError : public Error
    {
        public:
            using Error::Error;
    };

    /// Base for searches that ran out of nodes or time. Subclasses carry the partial state.
    class BudgetExceeded : public Error
    {
        public:
            BudgetExceeded(const std::string & message, long long nodes) :
                Error(message),
                _nodes(nodes)
            {
            }

            auto nodes() const -> long long
            {
                return _nodes;
            }

        private:
            long long _nodes;
    };

    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, int line) :
                Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
                _line(line)
            {
            }

            auto line() const -> int
            {
                return _line;
            }

        private:
            int _line;
    };
}

#endif
