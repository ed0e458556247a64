#include "drkit/combinatorics.hpp"

#include <stdexcept>

namespace drkit {

BigInt binomial(Index n, Index k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (Index i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

bool next_combination(std::vector<Index>& comb, Index n) {
    const Index k = static_cast<Index>(comb.size());
    Index i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<Index> unrank_combination(BigInt rank, Index n, Index k) {
    if (rank < 0 || rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
    std::vector<Index> comb;
    comb.reserve(static_cast<std::size_t>(k));
    Index next = 1;
    for (Index slot = k; slot >= 1; --slot) {
        // Smallest first element whose tail count exceeds the remaining rank.
        Index v = next;
        for (;;) {
            BigInt tail = binomial(n - v, slot - 1);
            if (rank < tail) break;
            rank -= tail;
            ++v;
        }
        comb.push_back(v);
        next = v + 1;
    }
    return comb;
}

}  // namespace drkit
