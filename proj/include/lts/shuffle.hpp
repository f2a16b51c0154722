#ifndef LTS_SHUFFLE_HPP
#define LTS_SHUFFLE_HPP

#include <cstddef>
#include <vector>

#include "lts/errors.hpp"

namespace lts {

// An (i,j)-shuffle: a permutation of {1..i+j} ascending on its first i and
// last j positions, together with its sign.  `perm` is 0-based in storage:
// perm[m] = sigma(m+1) - 1.
struct Shuffle {
    std::vector<std::size_t> perm;
    int sign = 1;
};

// All binomial(i+j, i) shuffles, enumerated by the lexicographic choice of
// the first ascending block.  If i = 0 or j = 0 the single identity shuffle
// is returned.
inline std::vector<Shuffle> shuffles(std::size_t i, std::size_t j) {
    const std::size_t n = i + j;
    std::vector<Shuffle> out;

    std::vector<std::size_t> pick(i);
    for (std::size_t m = 0; m < i; ++m) pick[m] = m;

    while (true) {
        Shuffle s;
        s.perm.resize(n);
        std::vector<bool> used(n, false);
        for (std::size_t m = 0; m < i; ++m) {
            s.perm[m] = pick[m];
            used[pick[m]] = true;
        }
        std::size_t w = i;
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) s.perm[w++] = v;

        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (s.perm[a] > s.perm[b]) ++inversions;
        s.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(s));

        if (i == 0) break;
        // next lexicographic i-subset of {0..n-1}
        std::size_t m = i;
        while (m-- > 0) {
            if (pick[m] != m + n - i) {
                ++pick[m];
                for (std::size_t t = m + 1; t < i; ++t) pick[t] = pick[t - 1] + 1;
                break;
            }
            if (m == 0) return out;
        }
    }
    return out;
}

}  // namespace lts

#endif
