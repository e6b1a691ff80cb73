/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/rational.hh>
#include <minhom/errors.hh>

#include <cctype>
#include <limits>
#include <numeric>

using std::int64_t;
using std::string;
using std::string_view;

namespace minhom
{
    namespace
    {
        [[noreturn]] auto overflow() -> void
        {
            throw OverflowError("64-bit rational arithmetic overflowed");
        }

        auto malformed(string_view text) -> PreconditionError
        {
            return PreconditionError("malformed rational '" + string(text) + "'");
        }

        auto parse_integer(string_view text, string_view whole) -> int64_t
        {
            if (text.empty())
                throw malformed(whole);
            int64_t result = 0;
            for (char c : text) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw malformed(whole);
                result = checked_add(checked_mul(result, 10), c - '0');
            }
            return result;
        }
    }

    auto checked_add(int64_t a, int64_t b) -> int64_t
    {
        int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            overflow();
        return r;
    }

    auto checked_sub(int64_t a, int64_t b) -> int64_t
    {
        int64_t r;
        if (__builtin_sub_overflow(a, b, &r))
            overflow();
        return r;
    }

    auto checked_mul(int64_t a, int64_t b) -> int64_t
    {
        int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            overflow();
        return r;
    }

    auto checked_lcm(int64_t a, int64_t b) -> int64_t
    {
        if (a == 0 || b == 0)
            return 0;
        return checked_mul(a / std::gcd(a, b), b);
    }

    Rational::Rational(int64_t n) :
        _num(n)
    {
        if (n == std::numeric_limits<int64_t>::min())
            overflow();
    }

    Rational::Rational(int64_t n, int64_t d)
    {
        if (d == 0)
            throw PreconditionError("rational with zero denominator");
        if (n == std::numeric_limits<int64_t>::min() || d == std::numeric_limits<int64_t>::min())
            overflow();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        auto g = std::gcd(n, d);
        _num = n / g;
        _den = d / g;
    }

    auto Rational::parse(string_view text) -> Rational
    {
        auto whole = text;
        bool negative = false;
        if (! text.empty() && (text[0] == '-' || text[0] == '+')) {
            negative = text[0] == '-';
            text.remove_prefix(1);
        }

        Rational result;
        if (auto slash = text.find('/') ; slash != string_view::npos) {
            auto d = parse_integer(text.substr(slash + 1), whole);
            if (d == 0)
                throw malformed(whole);
            result = Rational(parse_integer(text.substr(0, slash), whole), d);
        }
        else if (auto dot = text.find('.') ; dot != string_view::npos) {
            auto int_part = text.substr(0, dot), frac_part = text.substr(dot + 1);
            if (int_part.empty() && frac_part.empty())
                throw malformed(whole);
            int64_t scale = 1;
            for (std::size_t i = 0 ; i < frac_part.size() ; ++i)
                scale = checked_mul(scale, 10);
            int64_t i_val = int_part.empty() ? 0 : parse_integer(int_part, whole);
            int64_t f_val = frac_part.empty() ? 0 : parse_integer(frac_part, whole);
            result = Rational(checked_add(checked_mul(i_val, scale), f_val), scale);
        }
        else
            result = Rational(parse_integer(text, whole));

        return negative ? -result : result;
    }

    auto Rational::operator+ (const Rational & o) const -> Rational
    {
        auto g = std::gcd(_den, o._den);
        auto d = checked_mul(_den / g, o._den);
        return Rational(checked_add(checked_mul(_num, o._den / g), checked_mul(o._num, _den / g)), d);
    }

    auto Rational::operator- (const Rational & o) const -> Rational
    {
        return *this + (-o);
    }

    auto Rational::operator* (const Rational & o) const -> Rational
    {
        auto g1 = std::gcd(_num, o._den), g2 = std::gcd(o._num, _den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return Rational(checked_mul(_num / g1, o._num / g2), checked_mul(_den / g2, o._den / g1));
    }

    auto Rational::operator- () const -> Rational
    {
        Rational r;
        r._num = -_num;
        r._den = _den;
        return r;
    }

    auto Rational::operator<=> (const Rational & o) const -> std::strong_ordering
    {
        __int128 lhs = __int128(_num) * o._den, rhs = __int128(o._num) * _den;
        return lhs <=> rhs;
    }

    auto Rational::to_string() const -> string
    {
        if (_den == 1)
            return std::to_string(_num);
        return std::to_string(_num) + "/" + std::to_string(_den);
    }
}
