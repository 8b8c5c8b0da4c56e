#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "heatsym/recursion.hpp"

namespace heatsym {

// Incremental exact rank over the rationals via fraction-free elimination.
// Columns are (monomial, jet-variable) pairs in canonical order; the pivot
// of a row is its first nonzero column. Rows are scaled to primitive
// integer vectors, so the elimination never leaves the integers.
class RankAccumulator {
public:
    // Returns true when f enlarges the span (rank goes up by one).
    bool insert(const DiffFunction& f);
    int rank() const { return rank_; }

private:
    using ColKey = std::pair<MonomialExp, DerivIndex>;
    struct ColOrder {
        bool operator()(const ColKey& p, const ColKey& q) const {
            MonomialOrder mo;
            if (mo(p.first, q.first)) return true;
            if (mo(q.first, p.first)) return false;
            return DerivOrder{}(p.second, q.second);
        }
    };
    // sparse integer row, entries sorted by column
    using Row = std::vector<std::pair<ColKey, mpz_class>>;

    static Row make_row(const DiffFunction& f);
    static void reduce_content(Row& row);

    std::map<ColKey, Row, ColOrder> pivots_;
    int rank_ = 0;
};

// Dimension of the rational span of the given characteristics.
int rank_of(const std::vector<DiffFunction>& characteristics);

struct IndependentCount {
    long long enumerated_rank = 0;
    long long formula_value = 0;
    bool agree = false;
};

// Rank of all nondecreasing words of length <= n applied to U, compared
// against the closed form.
IndependentCount independent_count(int n, int jobs = 1);

// Greedy basis in word order: the first word whose characteristic enlarges
// the span is kept. The result has exactly formula_N(n) entries.
std::vector<std::pair<OperatorWord, DiffFunction>> basis(int n, int jobs = 1);

}  // namespace heatsym
