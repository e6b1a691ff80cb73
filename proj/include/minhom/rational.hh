/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_RATIONAL_HH
#define MINHOM_RATIONAL_HH 1

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace minhom
{
    auto checked_add(std::int64_t a, std::int64_t b) -> std::int64_t;
    auto checked_sub(std::int64_t a, std::int64_t b) -> std::int64_t;
    auto checked_mul(std::int64_t a, std::int64_t b) -> std::int64_t;
    auto checked_lcm(std::int64_t a, std::int64_t b) -> std::int64_t;

    /**
     * Exact fraction over 64-bit integers, always in lowest terms with a
     * positive denominator. Every operation that would overflow throws
     * OverflowError instead of wrapping.
     */
    class Rational
    {
        private:
            std::int64_t _num = 0, _den = 1;

        public:
            Rational() = default;
            Rational(std::int64_t n);
            Rational(std::int64_t n, std::int64_t d);

            /// "7", "-1/3", "2.50". Digits are read literally, never via floating point.
            static auto parse(std::string_view text) -> Rational;

            auto numerator() const -> std::int64_t { return _num; }
            auto denominator() const -> std::int64_t { return _den; }
            auto is_integer() const -> bool { return _den == 1; }

            auto operator+ (const Rational & o) const -> Rational;
            auto operator- (const Rational & o) const -> Rational;
            auto operator* (const Rational & o) const -> Rational;
            auto operator- () const -> Rational;
            auto operator+= (const Rational & o) -> Rational & { return *this = *this + o; }
            auto operator-= (const Rational & o) -> Rational & { return *this = *this - o; }

            auto operator== (const Rational & o) const -> bool = default;
            auto operator<=> (const Rational & o) const -> std::strong_ordering;

            /// "p" or "p/q".
            auto to_string() const -> std::string;
    };
}

#endif
