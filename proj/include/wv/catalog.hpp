#ifndef WV_CATALOG_HPP
#define WV_CATALOG_HPP

// The irreducible rank-one wonderful varieties handled by the checker, as
// pure data: acting group, spherical root, Picard generators and the
// treatment the multiplication check uses.

#include <optional>
#include <string>
#include <vector>

#include "wv/errors.hpp"
#include "wv/intlinalg.hpp"
#include "wv/rootsys.hpp"

namespace wv {

enum class Family { case_9b, case_9c, case_15, p1xp1, flag };

enum class Treatment { interval_splitting, borel_weil, p1xp1_special };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::case_9b: return "9B";
        case Family::case_9c: return "9C";
        case Family::case_15: return "15";
        case Family::p1xp1: return "P1xP1";
        case Family::flag: return "flag";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "9B" || s == "9b") return Family::case_9b;
    if (s == "9C" || s == "9c") return Family::case_9c;
    if (s == "15") return Family::case_15;
    if (s == "P1xP1" || s == "p1xp1") return Family::p1xp1;
    if (s == "flag") return Family::flag;
    throw lookup_error("unknown family '" + s + "' (expected 9B, 9C, 15, P1xP1 or flag)");
}

inline std::string to_string(Treatment t) {
    switch (t) {
        case Treatment::interval_splitting: return "interval-splitting";
        case Treatment::borel_weil: return "borel-weil";
        case Treatment::p1xp1_special: return "p1xp1-special";
    }
    return "?";
}

struct CatalogEntry {
    Family family;
    int n = 0; ///< rank parameter of 9B/9C; 0 otherwise
    RootSystem group;
    std::optional<Weight> gamma;        ///< spherical root, fundamental coordinates
    std::vector<Weight> pic_generators; ///< the lambda_i with L_{lambda_i} = O(D_i)
    std::size_t picard_rank = 1;
    Treatment treatment = Treatment::interval_splitting;
    std::string label;
};

namespace detail {

/// gamma in simple-root coordinates; integral in every catalog case.
inline std::vector<std::int64_t> root_coordinates(const RootSystem& rs, const Weight& w) {
    IntMat c(rs.rank(), rs.rank());
    std::vector<BigInt> rhs(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        for (std::size_t j = 0; j < rs.rank(); ++j) c(i, j) = rs.cartan(i, j);
        rhs[i] = w[i];
    }
    const auto sol = solve_unique(c, rhs);
    if (!sol) throw structural_error("weight " + w.str() + " is not in the root lattice span");
    std::vector<std::int64_t> out(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        const BigRat& v = (*sol)[i];
        if (boost::multiprecision::denominator(v) != 1)
            throw structural_error("weight " + w.str() + " has non-integral root coordinates");
        out[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
    return out;
}

inline void validate_entry(const CatalogEntry& e) {
    if (e.gamma) {
        check_weight(e.group, *e.gamma);
        // Integral on the root lattice; rational spherical roots never occur
        // in the catalog data.
        (void)root_coordinates(e.group, *e.gamma);
        // Exactly one simple coroot pairs positively with gamma, with value 1;
        // this is what makes the admissible-m bound additive.
        std::size_t positive = 0;
        for (std::size_t k = 0; k < e.group.rank(); ++k) {
            if ((*e.gamma)[k] > 0) {
                ++positive;
                if ((*e.gamma)[k] != 1)
                    throw structural_error("spherical root of " + e.label +
                                           " pairs with value != 1");
            }
        }
        if (positive != 1)
            throw structural_error("spherical root of " + e.label +
                                   " must pair positively with exactly one simple coroot");
    }
    if (e.pic_generators.empty())
        throw structural_error("catalog entry " + e.label + " has no Picard generators");
    for (const auto& g : e.pic_generators) {
        check_weight(e.group, g);
        if (!is_dominant(e.group, g))
            throw structural_error("Picard generator " + g.str() + " of " + e.label +
                                   " is not dominant");
    }
    if (e.family != Family::p1xp1) {
        // Linear independence. (The two P1xP1 classes restrict to the same
        // weight, which is exactly the non-injective case.)
        IntMat m(e.group.rank(), e.pic_generators.size());
        for (std::size_t j = 0; j < e.pic_generators.size(); ++j)
            for (std::size_t i = 0; i < e.group.rank(); ++i) m(i, j) = e.pic_generators[j][i];
        if (row_echelon_rank(std::move(m)) != e.pic_generators.size())
            throw structural_error("Picard generators of " + e.label +
                                   " are linearly dependent");
    }
    if (e.picard_rank != e.pic_generators.size())
        throw structural_error("Picard rank of " + e.label + " disagrees with its generators");
}

} // namespace detail

/// Built-in entry by family; n is required (and must be >= 2) for 9B and 9C.
inline CatalogEntry get_entry(Family family, int n = 0) {
    switch (family) {
        case Family::case_9b: {
            if (n < 2) throw std::domain_error("family 9B requires n >= 2");
            const std::size_t r = static_cast<std::size_t>(n);
            CatalogEntry e{family, n, RootSystem(Kind::B, r),
                           Weight::fundamental(r, 1),
                           {Weight::fundamental(r, 1)},
                           1, Treatment::interval_splitting,
                           "9B(" + std::to_string(n) + ")"};
            detail::validate_entry(e);
            return e;
        }
        case Family::case_9c: {
            if (n < 2) throw std::domain_error("family 9C requires n >= 2");
            const std::size_t r = static_cast<std::size_t>(n);
            CatalogEntry e{family, n, RootSystem(Kind::C, r),
                           Weight::fundamental(r, 2),
                           {Weight::fundamental(r, 2)},
                           1, Treatment::interval_splitting,
                           "9C(" + std::to_string(n) + ")"};
            detail::validate_entry(e);
            return e;
        }
        case Family::case_15: {
            CatalogEntry e{family, 0, RootSystem(Kind::G, 2),
                           Weight({-1, 1}), // omega_2 - omega_1
                           {Weight::fundamental(2, 1), Weight::fundamental(2, 2)},
                           2, Treatment::interval_splitting, "15"};
            detail::validate_entry(e);
            return e;
        }
        case Family::p1xp1: {
            // Pic = Z^2; both B-stable divisor classes restrict to omega_1.
            CatalogEntry e{family, 0, RootSystem(Kind::A, 1), std::nullopt,
                           {Weight::fundamental(1, 1), Weight::fundamental(1, 1)},
                           2, Treatment::p1xp1_special, "P1xP1"};
            detail::validate_entry(e);
            return e;
        }
        case Family::flag:
            throw lookup_error("flag entries carry user data; use make_flag_entry");
    }
    throw lookup_error("unknown catalog id");
}

/// Flag-type irreducible case (projective spaces, quadrics, Grassmannians,
/// ...): no spherical root, user-supplied Picard data, Borel-Weil treatment.
inline CatalogEntry make_flag_entry(RootSystem group, std::vector<Weight> pic_generators) {
    CatalogEntry e{Family::flag, 0, std::move(group), std::nullopt,
                   std::move(pic_generators), 0, Treatment::borel_weil, ""};
    e.picard_rank = e.pic_generators.size();
    e.label = "flag(" + e.group.name() + ")";
    detail::validate_entry(e);
    return e;
}

/// Membership in the nonnegative integer span of the Picard generators.
inline bool pic_plus_contains(const CatalogEntry& entry, const Weight& w) {
    check_weight(entry.group, w);
    if (entry.family == Family::p1xp1) {
        // Span of {omega_1, omega_1}.
        return w[0] >= 0;
    }
    IntMat m(entry.group.rank(), entry.pic_generators.size());
    std::vector<BigInt> rhs(entry.group.rank());
    for (std::size_t j = 0; j < entry.pic_generators.size(); ++j)
        for (std::size_t i = 0; i < entry.group.rank(); ++i) m(i, j) = entry.pic_generators[j][i];
    for (std::size_t i = 0; i < entry.group.rank(); ++i) rhs[i] = w[i];
    const auto sol = solve_unique(m, rhs);
    if (!sol) return false;
    for (const auto& v : *sol) {
        if (boost::multiprecision::denominator(v) != 1) return false;
        if (v < 0) return false;
    }
    return true;
}

} // namespace wv

#endif
