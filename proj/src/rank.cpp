#include "heatsym/rank.hpp"

#include <algorithm>

#include "heatsym/counting.hpp"

namespace heatsym {

RankAccumulator::Row RankAccumulator::make_row(const DiffFunction& f) {
    // common denominator, then strip the integer content
    mpz_class lcm_den(1);
    for (const auto& [d, p] : f.terms())
        for (const auto& [e, c] : p.terms()) {
            mpz_class den = c.denominator();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
    Row row;
    for (const auto& [d, p] : f.terms())
        for (const auto& [e, c] : p.terms())
            row.emplace_back(ColKey{e, d}, mpz_class(c.numerator() * (lcm_den / c.denominator())));
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return ColOrder{}(a.first, b.first); });
    reduce_content(row);
    return row;
}

void RankAccumulator::reduce_content(Row& row) {
    if (row.empty()) return;
    mpz_class g(0);
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [col, v] : row) v /= g;
}

bool RankAccumulator::insert(const DiffFunction& f) {
    Row row = make_row(f);
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            pivots_.emplace(row.front().first, std::move(row));
            ++rank_;
            return true;
        }
        const Row& piv = it->second;
        const mpz_class a = piv.front().second;  // pivot entry
        const mpz_class b = row.front().second;  // entry to cancel
        // row := a*row - b*piv (leading entries cancel exactly)
        Row next;
        next.reserve(row.size() + piv.size());
        size_t ri = 0, pi = 0;
        ColOrder less;
        while (ri < row.size() || pi < piv.size()) {
            if (pi == piv.size() ||
                (ri < row.size() && less(row[ri].first, piv[pi].first))) {
                next.emplace_back(row[ri].first, mpz_class(a * row[ri].second));
                ++ri;
            } else if (ri == row.size() || less(piv[pi].first, row[ri].first)) {
                next.emplace_back(piv[pi].first, mpz_class(-b * piv[pi].second));
                ++pi;
            } else {
                mpz_class v = a * row[ri].second - b * piv[pi].second;
                if (v != 0) next.emplace_back(row[ri].first, std::move(v));
                ++ri;
                ++pi;
            }
        }
        reduce_content(next);
        row = std::move(next);
    }
    return false;
}

int rank_of(const std::vector<DiffFunction>& characteristics) {
    RankAccumulator acc;
    for (const auto& f : characteristics) acc.insert(f);
    return acc.rank();
}

IndependentCount independent_count(int n, int jobs) {
    RankAccumulator acc;
    for (const auto& [w, q] : word_characteristics(n, WordMode::nondecreasing, jobs))
        acc.insert(q);
    IndependentCount out;
    out.enumerated_rank = acc.rank();
    out.formula_value = formula_N(n);
    out.agree = out.enumerated_rank == out.formula_value;
    return out;
}

std::vector<std::pair<OperatorWord, DiffFunction>> basis(int n, int jobs) {
    std::vector<std::pair<OperatorWord, DiffFunction>> out;
    RankAccumulator acc;
    for (auto& [w, q] : word_characteristics(n, WordMode::nondecreasing, jobs))
        if (acc.insert(q)) out.emplace_back(std::move(w), std::move(q));
    return out;
}

}  // namespace heatsym
