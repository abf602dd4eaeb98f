#include "hypermatch/combin.hpp"

#include <cassert>

namespace hm {

long long binom(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;  // exact: prefix products are binomials
    }
    return acc;
}

long long colex_rank(const std::vector<int>& combo) {
    long long rank = 0;
    for (size_t i = 0; i < combo.size(); ++i) rank += binom(combo[i], static_cast<long long>(i) + 1);
    return rank;
}

std::vector<int> colex_unrank(long long rank, int r) {
    std::vector<int> combo(r);
    for (int i = r; i >= 1; --i) {
        // Largest c with binom(c, i) <= rank. Ranks are small; linear descent from a
        // doubling upper bound keeps this simple and exact.
        int c = i - 1;
        while (binom(c + 1, i) <= rank) ++c;
        combo[i - 1] = c;
        rank -= binom(c, i);
    }
    assert(rank == 0);
    return combo;
}

bool next_combination(std::vector<int>& combo, int n) {
    int r = static_cast<int>(combo.size());
    for (int i = r - 1; i >= 0; --i) {
        if (combo[i] < n - r + i) {
            ++combo[i];
            for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int r) {
    std::vector<int> combo(r);
    for (int i = 0; i < r; ++i) combo[i] = i;
    return combo;
}

}  // namespace hm
