#ifndef WV_ROOTSYS_HPP
#define WV_ROOTSYS_HPP

// Exact root-system and weight-lattice engine: Cartan data, dominance,
// positive roots, the -w0 involution and Weyl dimensions.
//
// Conventions, used consistently across the library:
//   * simple roots carry Bourbaki numbering (node labels are 1-based);
//   * weights are stored in fundamental-weight coordinates, so coordinate
//     k (0-based array position) of lambda is <lambda, alpha_{k+1}^vee>;
//   * the Cartan matrix satisfies C[i][j] = <alpha_j, alpha_i^vee>, hence
//     column j holds the fundamental coordinates of alpha_j.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wv/intlinalg.hpp"

namespace wv {

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Kind kind_from_char(char c) {
    switch (c) {
        case 'A': return Kind::A;
        case 'B': return Kind::B;
        case 'C': return Kind::C;
        case 'D': return Kind::D;
        case 'E': return Kind::E;
        case 'F': return Kind::F;
        case 'G': return Kind::G;
        default: throw std::invalid_argument(std::string("unknown root-system type '") + c + "'");
    }
}

/// Integral weight in fundamental-weight coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

    /// omega_i for the 1-based node label i.
    static Weight fundamental(std::size_t rank, std::size_t i) {
        if (i < 1 || i > rank) throw std::out_of_range("fundamental weight index out of range");
        Weight w = zero(rank);
        w.c_[i - 1] = 1;
        return w;
    }

    std::size_t rank() const { return c_.size(); }
    std::int64_t operator[](std::size_t k) const { return c_[k]; }
    std::int64_t& operator[](std::size_t k) { return c_[k]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
    }

    Weight& operator+=(const Weight& o) {
        check_rank(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_rank(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Weight& operator*=(std::int64_t s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int64_t s, Weight a) { return a *= s; }
    friend Weight operator-(Weight a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c_[k]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

private:
    void check_rank(const Weight& o) const {
        if (o.c_.size() != c_.size())
            throw std::invalid_argument("weight rank mismatch: " + std::to_string(c_.size()) +
                                        " vs " + std::to_string(o.c_.size()));
    }
    std::vector<std::int64_t> c_;
};

/// A positive root, kept in both coordinate systems.
struct PositiveRoot {
    std::vector<std::int64_t> on_simple; ///< coefficients on the simple roots
    Weight in_fundamental;               ///< the same root as a weight
    std::vector<std::int64_t> sym;       ///< sym[i] = on_simple[i] * d_i
    std::int64_t half_norm = 0;          ///< (alpha, alpha)/2, short simple roots have 1
    std::int64_t height = 0;

    /// <w, alpha^vee>, exact.
    std::int64_t pairing(const Weight& w) const {
        std::int64_t num = 0;
        for (std::size_t k = 0; k < sym.size(); ++k) num += sym[k] * w[k];
        return num / half_norm;
    }
};

class RootSystem {
public:
    RootSystem(Kind kind, std::size_t rank) : kind_(kind), rank_(rank) {
        validate_rank();
        build_cartan();
        build_positive_roots();
        build_star_permutation();
        if (determinant(cartan_as_matrix()) == 0)
            throw std::logic_error("Cartan matrix is singular"); // unreachable for valid types
    }

    Kind kind() const { return kind_; }
    std::size_t rank() const { return rank_; }

    /// C[i][j] = <alpha_j, alpha_i^vee>, 0-based positions.
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }

    /// Symmetrizer d_i = (alpha_i, alpha_i)/2, short roots normalized to 1.
    int symmetrizer(std::size_t i) const { return dsym_[i]; }

    /// alpha_i in fundamental coordinates; i is the 1-based node label.
    Weight simple_root(std::size_t i) const {
        if (i < 1 || i > rank_) throw std::out_of_range("simple root index out of range");
        std::vector<std::int64_t> v(rank_);
        for (std::size_t r = 0; r < rank_; ++r) v[r] = cartan(r, i - 1);
        return Weight(std::move(v));
    }

    const std::vector<PositiveRoot>& positive() const { return positive_; }
    std::size_t num_positive_roots() const { return positive_.size(); }

    /// Image of coordinate position k (0-based) under -w0.
    std::size_t star_index(std::size_t k) const { return star_perm_[k]; }

    std::string name() const { return std::string(1, static_cast<char>(kind_)) + std::to_string(rank_); }

    friend bool operator==(const RootSystem& a, const RootSystem& b) {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_;
    }

private:
    void validate_rank() const {
        bool ok = false;
        switch (kind_) {
            case Kind::A: ok = rank_ >= 1; break;
            case Kind::B: ok = rank_ >= 2; break;
            case Kind::C: ok = rank_ >= 2; break;
            case Kind::D: ok = rank_ >= 3; break;
            case Kind::E: ok = rank_ >= 6 && rank_ <= 8; break;
            case Kind::F: ok = rank_ == 4; break;
            case Kind::G: ok = rank_ == 2; break;
        }
        if (!ok)
            throw std::invalid_argument("unsupported rank " + std::to_string(rank_) +
                                        " for type " + std::string(1, static_cast<char>(kind_)));
    }

    void add_edge(std::size_t i, std::size_t j) { // single bond, 1-based labels
        cartan_[(i - 1) * rank_ + (j - 1)] = -1;
        cartan_[(j - 1) * rank_ + (i - 1)] = -1;
    }

    void build_cartan() {
        cartan_.assign(rank_ * rank_, 0);
        dsym_.assign(rank_, 1);
        for (std::size_t i = 0; i < rank_; ++i) cartan_[i * rank_ + i] = 2;
        switch (kind_) {
            case Kind::A:
                for (std::size_t i = 1; i < rank_; ++i) add_edge(i, i + 1);
                break;
            case Kind::B:
                // alpha_n short; <alpha_{n-1}, alpha_n^vee> = -2.
                for (std::size_t i = 1; i + 1 < rank_; ++i) add_edge(i, i + 1);
                cartan_[(rank_ - 1) * rank_ + (rank_ - 2)] = -2;
                cartan_[(rank_ - 2) * rank_ + (rank_ - 1)] = -1;
                for (std::size_t i = 0; i + 1 < rank_; ++i) dsym_[i] = 2;
                break;
            case Kind::C:
                // alpha_n long; <alpha_n, alpha_{n-1}^vee> = -2.
                for (std::size_t i = 1; i + 1 < rank_; ++i) add_edge(i, i + 1);
                cartan_[(rank_ - 2) * rank_ + (rank_ - 1)] = -2;
                cartan_[(rank_ - 1) * rank_ + (rank_ - 2)] = -1;
                dsym_[rank_ - 1] = 2;
                break;
            case Kind::D:
                for (std::size_t i = 1; i + 2 < rank_; ++i) add_edge(i, i + 1);
                add_edge(rank_ - 2, rank_);
                add_edge(rank_ - 2, rank_ - 1);
                break;
            case Kind::E:
                add_edge(1, 3);
                add_edge(3, 4);
                add_edge(2, 4);
                add_edge(4, 5);
                add_edge(5, 6);
                if (rank_ >= 7) add_edge(6, 7);
                if (rank_ == 8) add_edge(7, 8);
                break;
            case Kind::F:
                // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
                add_edge(1, 2);
                add_edge(3, 4);
                cartan_[1 * rank_ + 2] = -1; // <alpha_3, alpha_2^vee>
                cartan_[2 * rank_ + 1] = -2; // <alpha_2, alpha_3^vee>
                dsym_[0] = dsym_[1] = 2;
                break;
            case Kind::G:
                // alpha_1 short, alpha_2 long.
                cartan_[0 * rank_ + 1] = -3; // <alpha_2, alpha_1^vee>
                cartan_[1 * rank_ + 0] = -1; // <alpha_1, alpha_2^vee>
                dsym_[1] = 3;
                break;
        }
    }

    IntMat cartan_as_matrix() const {
        IntMat m(rank_, rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) m(i, j) = cartan(i, j);
        return m;
    }

    std::size_t classical_positive_count() const {
        const std::size_t n = rank_;
        switch (kind_) {
            case Kind::A: return n * (n + 1) / 2;
            case Kind::B:
            case Kind::C: return n * n;
            case Kind::D: return n * (n - 1);
            case Kind::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
            case Kind::F: return 24;
            case Kind::G: return 6;
        }
        return 0;
    }

    void build_positive_roots() {
        // Closure from the simple roots: alpha + alpha_i is a root iff
        // p - <alpha, alpha_i^vee> > 0 where p is the depth of the alpha_i-string
        // below alpha. Roots are listed by height, then lexicographically.
        std::map<std::vector<std::int64_t>, Weight> known;
        std::vector<std::vector<std::int64_t>> level;
        for (std::size_t i = 0; i < rank_; ++i) {
            std::vector<std::int64_t> e(rank_, 0);
            e[i] = 1;
            known.emplace(e, simple_root(i + 1));
            level.push_back(std::move(e));
        }
        std::vector<std::vector<std::int64_t>> all = level;
        while (!level.empty()) {
            std::sort(level.begin(), level.end());
            std::vector<std::vector<std::int64_t>> next;
            for (const auto& r : level) {
                const Weight& fund = known.at(r);
                for (std::size_t i = 0; i < rank_; ++i) {
                    auto cand = r;
                    ++cand[i];
                    if (known.count(cand)) continue;
                    std::int64_t p = 0; // depth of the alpha_i-string below r
                    for (auto down = r;;) {
                        if (down[i] == 0) break;
                        --down[i];
                        const bool zero = std::all_of(down.begin(), down.end(),
                                                      [](std::int64_t v) { return v == 0; });
                        if (zero || !known.count(down)) break;
                        ++p;
                    }
                    if (p - fund[i] > 0) {
                        Weight f = fund + simple_root(i + 1);
                        known.emplace(cand, std::move(f));
                        next.push_back(cand);
                        all.push_back(cand);
                    }
                }
            }
            level = std::move(next);
        }

        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            const auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
            const auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
            if (ha != hb) return ha < hb;
            return a < b;
        });

        positive_.clear();
        positive_.reserve(all.size());
        for (auto& c : all) {
            PositiveRoot pr;
            pr.in_fundamental = known.at(c);
            pr.height = std::accumulate(c.begin(), c.end(), std::int64_t{0});
            pr.sym.resize(rank_);
            for (std::size_t k = 0; k < rank_; ++k) pr.sym[k] = c[k] * dsym_[k];
            std::int64_t two_norm = 0;
            for (std::size_t k = 0; k < rank_; ++k) two_norm += pr.sym[k] * pr.in_fundamental[k];
            pr.half_norm = two_norm / 2;
            pr.on_simple = std::move(c);
            positive_.push_back(std::move(pr));
        }

        if (positive_.size() != classical_positive_count())
            throw std::logic_error("positive root count mismatch for " + name());
    }

    // Raise a weight to the dominant chamber by reflecting at negative
    // coordinates; each step strictly reduces the number of positive roots
    // pairing negatively, so it terminates.
    Weight raise(Weight w) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t k = 0; k < rank_; ++k) {
                if (w[k] < 0) {
                    const std::int64_t wk = w[k];
                    for (std::size_t r = 0; r < rank_; ++r) w[r] -= wk * cartan(r, k);
                    moved = true;
                    break;
                }
            }
        }
        return w;
    }

    void build_star_permutation() {
        star_perm_.assign(rank_, rank_);
        for (std::size_t k = 0; k < rank_; ++k) {
            Weight w = Weight::zero(rank_);
            w[k] = -1;
            const Weight img = raise(w); // -w0(omega_{k+1})
            std::size_t hit = rank_;
            for (std::size_t r = 0; r < rank_; ++r) {
                if (img[r] == 1 && hit == rank_)
                    hit = r;
                else if (img[r] != 0)
                    throw std::logic_error("-w0 does not permute the fundamental weights");
            }
            if (hit == rank_) throw std::logic_error("-w0 image of a fundamental weight is not fundamental");
            star_perm_[k] = hit;
        }
    }

    friend Weight dominant_representative(const RootSystem& rs, Weight w);

    Kind kind_;
    std::size_t rank_;
    std::vector<int> cartan_;
    std::vector<int> dsym_;
    std::vector<PositiveRoot> positive_;
    std::vector<std::size_t> star_perm_;
};

inline void check_weight(const RootSystem& rs, const Weight& w) {
    if (w.rank() != rs.rank())
        throw std::invalid_argument("weight has " + std::to_string(w.rank()) +
                                    " coordinates, expected " + std::to_string(rs.rank()));
}

/// All coordinates nonnegative.
inline bool is_dominant(const RootSystem& rs, const Weight& w) {
    check_weight(rs, w);
    for (std::size_t k = 0; k < rs.rank(); ++k)
        if (w[k] < 0) return false;
    return true;
}

/// s_i(w) = w - <w, alpha_i^vee> alpha_i; i is the 1-based node label.
inline Weight simple_reflection(const RootSystem& rs, std::size_t i, Weight w) {
    check_weight(rs, w);
    if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
    const std::int64_t wi = w[i - 1];
    for (std::size_t r = 0; r < rs.rank(); ++r) w[r] -= wi * rs.cartan(r, i - 1);
    return w;
}

/// The dominant element of the Weyl orbit of w.
inline Weight dominant_representative(const RootSystem& rs, Weight w) {
    check_weight(rs, w);
    return rs.raise(std::move(w));
}

/// w* = -w0(w). The permutation that -w0 induces on the fundamental weights
/// is recovered from the raising algorithm, then extended linearly, which
/// makes the map additive and involutive on the whole weight lattice.
inline Weight weight_star(const RootSystem& rs, const Weight& w) {
    check_weight(rs, w);
    Weight out = Weight::zero(rs.rank());
    for (std::size_t k = 0; k < rs.rank(); ++k) out[rs.star_index(k)] = w[k];
    return out;
}

/// Dimension of the irreducible module of highest weight w (Weyl's formula).
inline BigInt weyl_dim(const RootSystem& rs, const Weight& w) {
    check_weight(rs, w);
    if (!is_dominant(rs, w)) throw std::domain_error("weyl_dim: weight " + w.str() + " is not dominant");
    BigInt num = 1, den = 1;
    for (const auto& root : rs.positive()) {
        BigInt n = 0, d = 0;
        for (std::size_t k = 0; k < rs.rank(); ++k) {
            n += BigInt(root.sym[k]) * (w[k] + 1);
            d += root.sym[k];
        }
        num *= n;
        den *= d;
    }
    return num / den;
}

/// The positive roots in fundamental coordinates, ordered by height.
inline std::vector<Weight> positive_roots(const RootSystem& rs) {
    std::vector<Weight> out;
    out.reserve(rs.num_positive_roots());
    for (const auto& r : rs.positive()) out.push_back(r.in_fundamental);
    return out;
}

} // namespace wv

#endif
