#include "bdecomp/combinatorics.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace bdecomp {

namespace {

// Lower-triangular table grown row by row from a recurrence. Readers take a
// shared lock; growth happens under the exclusive lock.
class TriangleCache {
public:
    using Step = void (*)(const std::vector<Integer>& prev, unsigned row, std::vector<Integer>& next);

    explicit TriangleCache(Step step) : step_(step) { rows_.push_back({Integer(1)}); }

    Integer get(unsigned row, unsigned col)
    {
        if (col > row) {
            return 0;
        }
        {
            std::shared_lock lock(mutex_);
            if (row < rows_.size()) {
                return rows_[row][col];
            }
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= row) {
            std::vector<Integer> next(rows_.size() + 1);
            step_(rows_.back(), static_cast<unsigned>(rows_.size() - 1), next);
            rows_.push_back(std::move(next));
        }
        return rows_[row][col];
    }

private:
    Step step_;
    std::shared_mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

// s(j+1,i) = s(j,i-1) - j s(j,i)
void stirling_first_step(const std::vector<Integer>& prev, unsigned j, std::vector<Integer>& next)
{
    for (unsigned i = 0; i <= j + 1; ++i) {
        Integer v = 0;
        if (i >= 1) {
            v += prev[i - 1];
        }
        if (i <= j) {
            v -= Integer(j) * prev[i];
        }
        next[i] = v;
    }
}

// S(m+1,i) = i S(m,i) + S(m,i-1)
void stirling_second_step(const std::vector<Integer>& prev, unsigned m, std::vector<Integer>& next)
{
    for (unsigned i = 0; i <= m + 1; ++i) {
        Integer v = 0;
        if (i >= 1) {
            v += prev[i - 1];
        }
        if (i <= m) {
            v += Integer(i) * prev[i];
        }
        next[i] = v;
    }
}

TriangleCache& first_kind()
{
    static TriangleCache cache(&stirling_first_step);
    return cache;
}

TriangleCache& second_kind()
{
    static TriangleCache cache(&stirling_second_step);
    return cache;
}

} // namespace

Integer stirling_first(unsigned j, unsigned i) { return first_kind().get(j, i); }

Integer stirling_second(unsigned m, unsigned j) { return second_kind().get(m, j); }

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer rising_factorial(unsigned base, unsigned count)
{
    Integer r = 1;
    for (unsigned i = 0; i < count; ++i) {
        r *= base + i;
    }
    return r;
}

Integer falling_factorial(unsigned base, unsigned count)
{
    Integer r = 1;
    for (unsigned i = 0; i < count; ++i) {
        r *= Integer(base) - i;
    }
    return r;
}

Rational divided_difference(std::span<const Rational> knots, std::span<const Rational> values)
{
    if (knots.size() != values.size()) {
        throw std::invalid_argument("divided difference: knots and values differ in length");
    }
    if (knots.empty()) {
        throw std::invalid_argument("divided difference: no knots");
    }
    std::vector<Rational> table(values.begin(), values.end());
    const std::size_t n = knots.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const Rational gap = knots[i + level] - knots[i];
            if (sgn(gap) == 0) {
                throw std::invalid_argument("coincident knots");
            }
            table[i] = (table[i + 1] - table[i]) / gap;
        }
    }
    return table[0];
}

} // namespace bdecomp
