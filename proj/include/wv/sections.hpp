#ifndef WV_SECTIONS_HPP
#define WV_SECTIONS_HPP

// Section spaces of line bundles: the decomposition of Gamma(X, L_lambda)
// into irreducible summands with highest weights lambda* - m*gamma, the
// closed-form bound on the admissible m, and the product-of-P1s dimension
// formula.

#include <cstdint>
#include <vector>

#include "wv/errors.hpp"
#include "wv/rootsys.hpp"
#include "wv/wonderful.hpp"

namespace wv {

struct Summand {
    std::int64_t m = 0;
    Weight head; ///< lambda* - m*gamma
    BigInt dim;
};

struct SectionDecomposition {
    Weight lambda;
    std::vector<Summand> summands;
    BigInt total_dim;
};

namespace detail {

inline void require_interval_splitting(const WonderfulVariety& x) {
    if (x.treatment() != Treatment::interval_splitting)
        throw unsupported_path_error(
            "variety " + x.label() + " has treatment " + to_string(x.treatment()) +
            ": the section decomposition applies to interval-splitting varieties only");
}

inline void require_pic_plus(const WonderfulVariety& x, const Weight& lambda) {
    if (!pic_plus_contains(x, lambda))
        throw std::domain_error("weight " + lambda.str() + " is not in pic+(" + x.label() + ")");
}

} // namespace detail

/// Largest m with w_star - m*gamma dominant, for an already-dualized weight;
/// each coordinate is linear in m, so the admissible set is the initial
/// interval {0, ..., M}.
inline std::int64_t m_bound_star(const RootSystem& rs, const Weight& gamma, const Weight& w_star) {
    check_weight(rs, gamma);
    check_weight(rs, w_star);
    std::int64_t best = -1;
    for (std::size_t k = 0; k < rs.rank(); ++k) {
        if (gamma[k] <= 0) continue;
        const std::int64_t cap = w_star[k] / gamma[k]; // floor: both nonnegative
        if (best < 0 || cap < best) best = cap;
    }
    if (best < 0)
        throw structural_error("spherical root " + gamma.str() +
                               " has no positive pairing; the summand interval is unbounded");
    return best;
}

/// Largest m with lambda* - m*gamma dominant.
inline std::int64_t m_bound(const WonderfulVariety& x, const Weight& lambda) {
    detail::require_interval_splitting(x);
    detail::require_pic_plus(x, lambda);
    return m_bound_star(x.ambient(), *x.gamma(), weight_star(x.ambient(), lambda));
}

/// Gamma(X, L_lambda) = sum over m = 0..M of the irreducible module with
/// highest weight lambda* - m*gamma.
inline SectionDecomposition decompose(const WonderfulVariety& x, const Weight& lambda) {
    detail::require_interval_splitting(x);
    detail::require_pic_plus(x, lambda);
    const RootSystem& rs = x.ambient();
    const Weight star = weight_star(rs, lambda);
    const Weight& gamma = *x.gamma();
    const std::int64_t bound = m_bound_star(rs, gamma, star);

    SectionDecomposition dec;
    dec.lambda = lambda;
    dec.total_dim = 0;
    for (std::int64_t m = 0; m <= bound; ++m) {
        Summand s;
        s.m = m;
        s.head = star - m * gamma;
        s.dim = weyl_dim(rs, s.head);
        dec.total_dim += s.dim;
        dec.summands.push_back(std::move(s));
    }
    return dec;
}

/// Sections of a sheaf labelled (lambda, k1, k2) on a P1xP1-type variety:
/// dim V_{lambda*} * (k1+1) * (k2+1).
inline BigInt dim_sections_p1xp1(const RootSystem& ambient, const Weight& lambda,
                                 std::int64_t k1, std::int64_t k2) {
    check_weight(ambient, lambda);
    if (!is_dominant(ambient, lambda))
        throw std::domain_error("dim_sections_p1xp1: weight " + lambda.str() + " is not dominant");
    if (k1 < 0 || k2 < 0) throw std::domain_error("dim_sections_p1xp1: negative bidegree");
    return weyl_dim(ambient, weight_star(ambient, lambda)) * BigInt(k1 + 1) * BigInt(k2 + 1);
}

} // namespace wv

#endif
