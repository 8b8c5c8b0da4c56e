#include "heatsym/recursion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace heatsym {

namespace {

Polynomial two_t() {
    return Polynomial::monomial(MonomialExp{0, 0, 0, 1}, Rational(2));
}
Polynomial var(Var v) { return Polynomial::variable(v); }
Polynomial neg_var(Var v) { return -Polynomial::variable(v); }

}  // namespace

const std::array<RecursionOperator, 9>& recursion_operators() {
    static const std::array<RecursionOperator, 9> ops = {{
        {two_t(), {}, {}, var(Var::x)},            // R1
        {{}, two_t(), {}, var(Var::y)},            // R2
        {{}, {}, two_t(), var(Var::z)},            // R3
        {var(Var::y), neg_var(Var::x), {}, {}},    // R4
        {var(Var::z), {}, neg_var(Var::x), {}},    // R5
        {Polynomial::one(), {}, {}, {}},           // R6
        {{}, var(Var::z), neg_var(Var::y), {}},    // R7
        {{}, Polynomial::one(), {}, {}},           // R8
        {{}, {}, Polynomial::one(), {}},           // R9
    }};
    return ops;
}

DiffFunction apply_recursion(int index, const DiffFunction& q) {
    if (index < 1 || index > 9)
        throw std::out_of_range("apply_recursion: operator index must be in 1..9");
    const RecursionOperator& op = recursion_operators()[static_cast<size_t>(index - 1)];
    DiffFunction r;
    if (!op.xi_x.is_zero()) r += total_derivative(q, Var::x).times(op.xi_x);
    if (!op.xi_y.is_zero()) r += total_derivative(q, Var::y).times(op.xi_y);
    if (!op.xi_z.is_zero()) r += total_derivative(q, Var::z).times(op.xi_z);
    if (!op.phi.is_zero()) r += q.times(op.phi);
    return normalize(r).normal;
}

bool OperatorWord::nondecreasing() const {
    return std::is_sorted(indices.begin(), indices.end());
}

std::string OperatorWord::str() const {
    if (indices.empty()) return "1";
    std::string s;
    for (size_t n = 0; n < indices.size(); ++n) {
        if (n) s += ' ';
        s += 'R';
        s += std::to_string(indices[n]);
    }
    return s;
}

DiffFunction apply_word(const OperatorWord& w, const DiffFunction& seed) {
    DiffFunction q = seed;
    for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) q = apply_recursion(*it, q);
    return q;
}

namespace {

// Words of exactly length k in lexicographic order.
void words_of_length(int k, WordMode mode, std::vector<OperatorWord>& out) {
    std::vector<int> w(static_cast<size_t>(k), 1);
    if (k == 0) {
        out.push_back(OperatorWord{});
        return;
    }
    for (;;) {
        out.push_back(OperatorWord{w});
        int pos = k - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == 9) --pos;
        if (pos < 0) break;
        int next = ++w[static_cast<size_t>(pos)];
        for (int q = pos + 1; q < k; ++q)
            w[static_cast<size_t>(q)] = (mode == WordMode::nondecreasing) ? next : 1;
    }
}

}  // namespace

std::vector<OperatorWord> enumerate_words(int n, WordMode mode) {
    if (n < 0) throw std::invalid_argument("enumerate_words: order must be nonnegative");
    std::vector<OperatorWord> out;
    for (int k = 0; k <= n; ++k) words_of_length(k, mode, out);
    return out;
}

std::vector<std::pair<OperatorWord, DiffFunction>> word_characteristics(int n, WordMode mode,
                                                                        int jobs) {
    if (jobs < 1) jobs = 1;
    std::vector<std::pair<OperatorWord, DiffFunction>> result;
    result.emplace_back(OperatorWord{}, DiffFunction::u());

    // previous level's characteristics, addressable by word
    std::map<std::vector<int>, size_t> prev_index{{{}, 0}};
    std::vector<DiffFunction> prev{DiffFunction::u()};

    for (int k = 1; k <= n; ++k) {
        std::vector<OperatorWord> level;
        words_of_length(k, mode, level);

        // each word extends its tail from the previous level by one operator
        std::vector<size_t> parent(level.size());
        for (size_t idx = 0; idx < level.size(); ++idx) {
            std::vector<int> tail(level[idx].indices.begin() + 1, level[idx].indices.end());
            parent[idx] = prev_index.at(tail);
        }

        std::vector<DiffFunction> cur(level.size());
        auto run = [&](size_t lo, size_t hi) {
            for (size_t idx = lo; idx < hi; ++idx)
                cur[idx] = apply_recursion(level[idx].indices.front(), prev[parent[idx]]);
        };
        size_t njobs = std::min<size_t>(static_cast<size_t>(jobs), level.size());
        if (njobs <= 1) {
            run(0, level.size());
        } else {
            std::vector<std::thread> pool;
            size_t chunk = (level.size() + njobs - 1) / njobs;
            for (size_t w = 0; w < njobs; ++w) {
                size_t lo = w * chunk, hi = std::min(level.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(run, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        prev_index.clear();
        for (size_t idx = 0; idx < level.size(); ++idx) {
            result.emplace_back(level[idx], cur[idx]);
            prev_index.emplace(level[idx].indices, idx);
        }
        prev = std::move(cur);
    }
    return result;
}

}  // namespace heatsym
