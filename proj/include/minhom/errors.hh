/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_ERRORS_HH
#define MINHOM_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace minhom
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An operation was called with arguments outside its contract.
    class PreconditionError : public Error
    {
        public:
            using Error::Error;
    };

    class OverflowError : public Error
    {
        public:
            using Error::Error;
    };

    /// An exhaustive search would exceed its configured work budget.
    class BudgetExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// Something that the mathematics says cannot happen did happen.
    class InternalError : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, int line, int column) :
                Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
                _line(line),
                _column(column)
            {
            }

            auto line() const -> int { return _line; }
            auto column() const -> int { return _column; }

        private:
            int _line, _column;
    };
}

#endif
