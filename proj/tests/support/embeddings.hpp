#ifndef WV_TESTS_EMBEDDINGS_HPP
#define WV_TESTS_EMBEDDINGS_HPP

// Test helper: all injective node maps of a fiber diagram into an ambient
// diagram preserving Cartan integers, by brute-force backtracking. Used to
// generate random valid parabolic inductions.

#include <cstddef>
#include <vector>

#include "wv/rootsys.hpp"

namespace wv::tests {

/// Each embedding maps fiber node k+1 to embedding[k] (1-based labels).
inline std::vector<std::vector<std::size_t>> find_embeddings(const RootSystem& ambient,
                                                             const RootSystem& fiber) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t fr = fiber.rank(), ar = ambient.rank();
    if (fr > ar) return out;
    std::vector<std::size_t> map(fr, 0);
    std::vector<bool> used(ar + 1, false);

    auto consistent = [&](std::size_t placed) {
        for (std::size_t i = 0; i <= placed; ++i)
            for (std::size_t j = 0; j <= placed; ++j)
                if (fiber.cartan(i, j) != ambient.cartan(map[i] - 1, map[j] - 1)) return false;
        return true;
    };

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == fr) {
            out.push_back(map);
            return;
        }
        for (std::size_t node = 1; node <= ar; ++node) {
            if (used[node]) continue;
            map[k] = node;
            used[node] = true;
            if (consistent(k)) self(self, k + 1);
            used[node] = false;
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace wv::tests

#endif
