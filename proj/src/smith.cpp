#include "flowpoly/smith.hpp"

#include "flowpoly/errors.hpp"

#include <utility>

namespace flowpoly {

namespace {

BigInt magnitude(const BigInt& v)
{
    return v < 0 ? BigInt(-v) : v;
}

} // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    for (const auto& row : m) {
        if (row.size() != cols) throw PreconditionError("smith_invariant_factors: ragged matrix");
    }

    std::vector<BigInt> diagonal;
    for (std::size_t s = 0; s < rows && s < cols; ++s) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows;
            std::size_t pc = cols;
            BigInt best = 0;
            for (std::size_t r = s; r < rows; ++r) {
                for (std::size_t c = s; c < cols; ++c) {
                    if (m[r][c] != 0 && (best == 0 || magnitude(m[r][c]) < best)) {
                        best = magnitude(m[r][c]);
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (best == 0) return diagonal;
            std::swap(m[s], m[pr]);
            if (pc != s) {
                for (auto& row : m) std::swap(row[s], row[pc]);
            }

            bool dirty = false;
            const BigInt pivot = m[s][s];
            for (std::size_t r = s + 1; r < rows; ++r) {
                if (m[r][s] == 0) continue;
                BigInt q = m[r][s] / pivot;
                for (std::size_t c = s; c < cols; ++c) m[r][c] -= q * m[s][c];
                dirty = dirty || m[r][s] != 0;
            }
            for (std::size_t c = s + 1; c < cols; ++c) {
                if (m[s][c] == 0) continue;
                BigInt q = m[s][c] / pivot;
                for (std::size_t r = s; r < rows; ++r) m[r][c] -= q * m[r][s];
                dirty = dirty || m[s][c] != 0;
            }
            if (dirty) continue;

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row in and reduce again.
            std::size_t bad = rows;
            for (std::size_t r = s + 1; r < rows && bad == rows; ++r) {
                for (std::size_t c = s + 1; c < cols; ++c) {
                    if (m[r][c] % pivot != 0) {
                        bad = r;
                        break;
                    }
                }
            }
            if (bad == rows) break;
            for (std::size_t c = s; c < cols; ++c) m[s][c] += m[bad][c];
        }
        diagonal.push_back(magnitude(m[s][s]));
    }
    return diagonal;
}

std::size_t integer_rank(const IntMatrix& m)
{
    return smith_invariant_factors(m).size();
}

} // namespace flowpoly
