#ifndef WV_TESTS_FREUDENTHAL_HPP
#define WV_TESTS_FREUDENTHAL_HPP

// Test-side oracle: irreducible-module dimension by explicit weight
// enumeration with Freudenthal's multiplicity recursion,
//
//   (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1}
//                                           m(mu+k alpha) (mu+k alpha, alpha).
//
// Independent of the Weyl product formula used by the library. All
// arithmetic stays integral: with alpha = sum_i c_i alpha_i one has
// (nu, alpha) = sum_i c_i d_i nu_i, and the left factor equals
// (lambda-mu, lambda+mu+2rho) with lambda-mu in the root lattice.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wv/rootsys.hpp"

namespace wv::tests {

/// dim V_lambda by summing weight multiplicities.
inline BigInt freudenthal_dim(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant(rs, lambda)) throw std::domain_error("freudenthal_dim: non-dominant weight");
    const std::size_t rank = rs.rank();

    // Depth = root coordinates of lambda - mu; propagated incrementally.
    using Depth = std::vector<std::int64_t>;
    struct Info {
        BigInt mult;
        Depth depth;
    };
    std::map<Weight, Info> table;
    table.emplace(lambda, Info{1, Depth(rank, 0)});
    std::vector<Weight> level{lambda};
    BigInt dim = 1;

    Weight sum_shift = lambda + lambda; // placeholder, rebuilt per candidate below

    while (!level.empty()) {
        std::map<Weight, Depth> candidates;
        for (const auto& w : level) {
            const Depth& wd = table.at(w).depth;
            for (std::size_t i = 0; i < rank; ++i) {
                Depth d = wd;
                ++d[i];
                candidates.emplace(w - rs.simple_root(i + 1), std::move(d));
            }
        }

        std::vector<Weight> next;
        for (const auto& [mu, depth] : candidates) {
            if (table.count(mu)) continue;

            BigInt s = 0;
            for (const auto& root : rs.positive()) {
                for (std::int64_t k = 1;; ++k) {
                    bool in_cone = true;
                    for (std::size_t r = 0; r < rank && in_cone; ++r)
                        if (depth[r] - k * root.on_simple[r] < 0) in_cone = false;
                    if (!in_cone) break;
                    Weight up = mu;
                    for (std::size_t r = 0; r < rank; ++r) up[r] += k * root.in_fundamental[r];
                    const auto it = table.find(up);
                    if (it == table.end()) continue; // multiplicity 0 at that level
                    BigInt pairing = 0;
                    for (std::size_t r = 0; r < rank; ++r)
                        pairing += BigInt(root.on_simple[r]) * rs.symmetrizer(r) * up[r];
                    s += it->second.mult * pairing;
                }
            }
            if (s == 0) continue; // mu is not a weight of the module

            sum_shift = lambda + mu;
            for (std::size_t r = 0; r < rank; ++r) sum_shift[r] += 2; // lambda + mu + 2 rho
            BigInt denom = 0;
            for (std::size_t r = 0; r < rank; ++r)
                denom += BigInt(depth[r]) * rs.symmetrizer(r) * sum_shift[r];
            if (denom <= 0 || (2 * s) % denom != 0)
                throw std::logic_error("freudenthal: inconsistent recursion at " + mu.str());
            const BigInt m = (2 * s) / denom;

            table.emplace(mu, Info{m, depth});
            dim += m;
            next.push_back(mu);
        }
        level = std::move(next);
    }
    return dim;
}

} // namespace wv::tests

#endif
