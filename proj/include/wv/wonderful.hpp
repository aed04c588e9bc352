#ifndef WV_WONDERFUL_HPP
#define WV_WONDERFUL_HPP

// Rank-one wonderful varieties as parabolic inductions of catalog entries:
// ambient group, Levi subset, fiber, the spherical root transported to the
// ambient lattice, and the Picard-lattice predicates.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wv/catalog.hpp"
#include "wv/errors.hpp"
#include "wv/rootsys.hpp"

namespace wv {

/// Divisor class sum n_i * D_i over the Picard basis.
struct PicClass {
    std::vector<std::int64_t> coeffs;
};

class WonderfulVariety {
public:
    /// `levi_nodes` and the correspondence values are 1-based Bourbaki node
    /// labels of the ambient diagram; `fiber_to_ambient[k]` is the image of
    /// fiber node k+1. The correspondence is explicit input: sub-diagram
    /// isomorphisms can be ambiguous, so it is never inferred.
    WonderfulVariety(RootSystem ambient, std::vector<std::size_t> levi_nodes,
                     CatalogEntry fiber, std::vector<std::size_t> fiber_to_ambient)
        : ambient_(std::move(ambient)),
          levi_(std::move(levi_nodes)),
          fiber_(std::move(fiber)),
          corr_(std::move(fiber_to_ambient)) {
        validate_diagram();
        if (fiber_.gamma) transport_gamma();
        build_pic_basis();
        label_ = fiber_.label;
        if (!irreducible())
            label_ = ambient_.name() + "/" + levi_string() + "/" + fiber_.label;
    }

    const RootSystem& ambient() const { return ambient_; }
    const CatalogEntry& fiber() const { return fiber_; }
    const std::vector<std::size_t>& levi_nodes() const { return levi_; }
    const std::vector<std::size_t>& correspondence() const { return corr_; }
    Treatment treatment() const { return fiber_.treatment; }
    const std::optional<Weight>& gamma() const { return gamma_; }
    const std::vector<Weight>& pic_basis() const { return pic_basis_; }
    const std::string& label() const { return label_; }

    bool irreducible() const { return levi_.size() == ambient_.rank(); }
    bool on_levi(std::size_t node) const { // 1-based
        return std::binary_search(levi_.begin(), levi_.end(), node);
    }

    /// Coordinates of w on the Levi nodes, read back as a fiber weight.
    Weight fiber_weight(const Weight& w) const {
        check_weight(ambient_, w);
        Weight out = Weight::zero(fiber_.group.rank());
        for (std::size_t k = 0; k < corr_.size(); ++k) out[k] = w[corr_[k] - 1];
        return out;
    }

    /// Split w into its Levi-supported and complementary coordinate parts.
    std::pair<Weight, Weight> split_levi_support(const Weight& w) const {
        check_weight(ambient_, w);
        Weight on = Weight::zero(ambient_.rank());
        Weight off = Weight::zero(ambient_.rank());
        for (std::size_t k = 0; k < ambient_.rank(); ++k)
            (on_levi(k + 1) ? on[k] : off[k]) = w[k];
        return {on, off};
    }

private:
    std::string levi_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < levi_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(levi_[k]);
        }
        return s + "}";
    }

    void validate_diagram() {
        const std::size_t fr = fiber_.group.rank();
        if (levi_.size() != fr)
            throw structural_error("Levi subset size " + std::to_string(levi_.size()) +
                                   " does not match fiber rank " + std::to_string(fr));
        if (corr_.size() != fr)
            throw structural_error("correspondence must list every fiber node");
        std::sort(levi_.begin(), levi_.end());
        for (std::size_t k = 0; k < levi_.size(); ++k) {
            if (levi_[k] < 1 || levi_[k] > ambient_.rank())
                throw structural_error("Levi node " + std::to_string(levi_[k]) + " out of range");
            if (k && levi_[k] == levi_[k - 1])
                throw structural_error("duplicate Levi node " + std::to_string(levi_[k]));
        }
        auto sorted = corr_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != levi_)
            throw structural_error("correspondence image is not the Levi subset");
        for (std::size_t i = 0; i < fr; ++i)
            for (std::size_t j = 0; j < fr; ++j)
                if (fiber_.group.cartan(i, j) != ambient_.cartan(corr_[i] - 1, corr_[j] - 1))
                    throw structural_error(
                        "diagram mismatch: Cartan integers of the Levi sub-diagram differ "
                        "from the fiber (" + fiber_.group.name() + ") at nodes " +
                        std::to_string(i + 1) + "," + std::to_string(j + 1));
    }

    void transport_gamma() {
        // Expand the fiber spherical root on the fiber simple roots, push the
        // coefficients through the correspondence, re-read in ambient
        // fundamental coordinates.
        const auto fiber_coords = detail::root_coordinates(fiber_.group, *fiber_.gamma);
        std::vector<std::int64_t> amb(ambient_.rank(), 0);
        for (std::size_t k = 0; k < fiber_coords.size(); ++k) amb[corr_[k] - 1] = fiber_coords[k];
        Weight g = Weight::zero(ambient_.rank());
        for (std::size_t i = 0; i < ambient_.rank(); ++i)
            for (std::size_t j = 0; j < ambient_.rank(); ++j)
                g[i] += amb[j] * ambient_.cartan(i, j);
        for (std::size_t k = 0; k < ambient_.rank(); ++k)
            if (!on_levi(k + 1) && g[k] > 0)
                throw structural_error("spherical root pairs positively with external node " +
                                       std::to_string(k + 1));
        gamma_ = std::move(g);
    }

    void build_pic_basis() {
        pic_basis_.clear();
        for (std::size_t node = 1; node <= ambient_.rank(); ++node)
            if (!on_levi(node)) pic_basis_.push_back(Weight::fundamental(ambient_.rank(), node));
        for (const auto& gen : fiber_.pic_generators) {
            Weight w = Weight::zero(ambient_.rank());
            for (std::size_t k = 0; k < corr_.size(); ++k) w[corr_[k] - 1] = gen[k];
            pic_basis_.push_back(std::move(w));
        }
    }

    RootSystem ambient_;
    std::vector<std::size_t> levi_;
    CatalogEntry fiber_;
    std::vector<std::size_t> corr_;
    std::optional<Weight> gamma_;
    std::vector<Weight> pic_basis_;
    std::string label_;
};

inline WonderfulVariety make_induced(RootSystem ambient, std::vector<std::size_t> levi_nodes,
                                     CatalogEntry fiber, std::vector<std::size_t> fiber_to_ambient) {
    return WonderfulVariety(std::move(ambient), std::move(levi_nodes), std::move(fiber),
                            std::move(fiber_to_ambient));
}

/// The irreducible case: the whole diagram is the Levi, identity labels.
inline WonderfulVariety make_irreducible(CatalogEntry fiber) {
    std::vector<std::size_t> all(fiber.group.rank());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k + 1;
    RootSystem ambient = fiber.group;
    return WonderfulVariety(std::move(ambient), all, std::move(fiber), all);
}

/// lambda indexes a globally generated line bundle iff it is dominant and the
/// Levi-supported part of lambda*, read as a fiber weight, lies in the fiber's
/// pic+ monoid. Coordinates off the Levi are unconstrained beyond dominance
/// (they extend to characters of the inducing parabolic).
inline bool pic_plus_contains(const WonderfulVariety& x, const Weight& lambda) {
    check_weight(x.ambient(), lambda);
    if (!is_dominant(x.ambient(), lambda)) return false;
    const Weight star = weight_star(x.ambient(), lambda);
    return pic_plus_contains(x.fiber(), x.fiber_weight(star));
}

/// A divisor class is globally generated iff all its coefficients on the
/// B-stable prime divisors are nonnegative.
inline bool is_globally_generated(const WonderfulVariety& x, const PicClass& c) {
    if (c.coeffs.size() != x.pic_basis().size())
        throw std::invalid_argument("class has " + std::to_string(c.coeffs.size()) +
                                    " coefficients, Picard basis has " +
                                    std::to_string(x.pic_basis().size()));
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](std::int64_t v) { return v >= 0; });
}

/// Restriction Pic(X) -> Pic(closed orbit) is injective unless the fiber is
/// P1 x P1, where two distinct classes share a restriction.
inline bool pic_restriction_injective(const WonderfulVariety& x) {
    return x.fiber().family != Family::p1xp1;
}

/// |external nodes| + fiber Picard rank; equals the Picard-basis size.
inline std::size_t pic_rank(const WonderfulVariety& x) {
    const std::size_t r = x.ambient().rank() - x.levi_nodes().size() + x.fiber().picard_rank;
    if (r != x.pic_basis().size())
        throw std::logic_error("Picard basis size disagrees with the exact-sequence count");
    return r;
}

/// Weight of the class sum n_i * D_i.
inline Weight class_to_weight(const WonderfulVariety& x, const PicClass& c) {
    if (c.coeffs.size() != x.pic_basis().size())
        throw std::invalid_argument("class length mismatch");
    Weight w = Weight::zero(x.ambient().rank());
    for (std::size_t k = 0; k < c.coeffs.size(); ++k) w += c.coeffs[k] * x.pic_basis()[k];
    return w;
}

} // namespace wv

#endif
