/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_BIT_MATRIX_HH
#define MINHOM_BIT_MATRIX_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace minhom
{
    /// Dense rows of bits, one row per source vertex. Used for every adjacency test.
    class BitMatrix
    {
        private:
            int _rows = 0, _columns = 0, _words_per_row = 0;
            std::vector<std::uint64_t> _bits;

        public:
            BitMatrix() = default;

            BitMatrix(int rows, int columns) :
                _rows(rows),
                _columns(columns),
                _words_per_row((columns + 63) / 64),
                _bits(std::size_t(rows) * std::size_t(_words_per_row), 0)
            {
            }

            auto rows() const -> int { return _rows; }
            auto columns() const -> int { return _columns; }

            auto test(int r, int c) const -> bool
            {
                return (_bits[std::size_t(r) * _words_per_row + c / 64] >> (c % 64)) & 1;
            }

            auto set(int r, int c, bool value = true) -> void
            {
                auto & word = _bits[std::size_t(r) * _words_per_row + c / 64];
                if (value)
                    word |= (std::uint64_t{1} << (c % 64));
                else
                    word &= ~(std::uint64_t{1} << (c % 64));
            }

            auto row_count(int r) const -> int
            {
                int result = 0;
                for (int w = 0 ; w < _words_per_row ; ++w)
                    result += std::popcount(_bits[std::size_t(r) * _words_per_row + w]);
                return result;
            }

            auto count() const -> long
            {
                long result = 0;
                for (auto w : _bits)
                    result += std::popcount(w);
                return result;
            }

            auto operator== (const BitMatrix &) const -> bool = default;
    };
}

#endif
