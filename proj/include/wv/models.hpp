#ifndef WV_MODELS_HPP
#define WV_MODELS_HPP

// Explicit graded coordinate rings for projective space, P1 x P1 and the
// quadric x_0^2 = x_1^2 + ... + x_n^2: monomial bases, the integer matrix of
// the multiplication map, and a surjectivity oracle by exact rank.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wv/intlinalg.hpp"

namespace wv {

enum class ModelKind { projective_space, p1xp1, quadric };

/// Graded degree; `b` is used only by the bigraded P1 x P1 model.
struct Degree {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend Degree operator+(Degree x, Degree y) { return {x.a + y.a, x.b + y.b}; }
    friend bool operator==(Degree x, Degree y) { return x.a == y.a && x.b == y.b; }
};

/// A monomial is its exponent vector. Projective space and the quadric use
/// exponents of x_0..x_n; P1 x P1 uses (i, j) = exponents of the first
/// variable in each factor, the complements being degree-determined.
using Monomial = std::vector<std::int64_t>;

class GradedModel {
public:
    static GradedModel projective_space(int n) {
        if (n < 1) throw std::domain_error("projective space needs n >= 1");
        return GradedModel(ModelKind::projective_space, n);
    }
    static GradedModel p1xp1() { return GradedModel(ModelKind::p1xp1, 1); }
    static GradedModel quadric(int n) {
        if (n < 2) throw std::domain_error("a smooth quadric needs n >= 2");
        return GradedModel(ModelKind::quadric, n);
    }

    ModelKind kind() const { return kind_; }
    int n() const { return n_; }
    bool bigraded() const { return kind_ == ModelKind::p1xp1; }

    std::string name() const {
        switch (kind_) {
            case ModelKind::projective_space: return "P" + std::to_string(n_);
            case ModelKind::p1xp1: return "P1xP1";
            case ModelKind::quadric: return "Q" + std::to_string(n_);
        }
        return "?";
    }

    /// Ordered monomial basis of the degree-d graded piece.
    std::vector<Monomial> basis(Degree d) const {
        check_degree(d);
        std::vector<Monomial> out;
        switch (kind_) {
            case ModelKind::projective_space:
                enumerate(n_ + 1, d.a, false, out);
                break;
            case ModelKind::quadric:
                // Canonical basis: x_0-exponent at most 1; the relation
                // rewrites everything else.
                enumerate(n_ + 1, d.a, true, out);
                break;
            case ModelKind::p1xp1:
                for (std::int64_t i = d.a; i >= 0; --i)
                    for (std::int64_t j = d.b; j >= 0; --j) out.push_back({i, j});
                break;
        }
        return out;
    }

    /// Closed-form dimension of basis(d).
    BigInt basis_dim(Degree d) const {
        check_degree(d);
        switch (kind_) {
            case ModelKind::projective_space: return binom(n_ + d.a, d.a);
            case ModelKind::quadric: return binom(n_ + d.a, d.a) - binom(n_ + d.a - 2, d.a - 2);
            case ModelKind::p1xp1: return BigInt(d.a + 1) * BigInt(d.b + 1);
        }
        return 0;
    }

    /// Quadric normal form of a monomial: a Z-combination of basis monomials.
    /// Idempotent and degree-preserving; the identity map for other kinds.
    std::map<Monomial, std::int64_t> reduce(const Monomial& m) const {
        std::map<Monomial, std::int64_t> acc;
        if (kind_ == ModelKind::quadric)
            reduce_quadric(m, 1, acc);
        else
            acc[m] = 1;
        return acc;
    }

    /// Matrix of basis(d) (x) basis(d') -> basis(d+d'); rows indexed by the
    /// target basis, columns by input pairs in row-major (u-major) order.
    IntMat multiplication_matrix(Degree d, Degree dp) const {
        const auto bu = basis(d);
        const auto bv = basis(dp);
        const auto bt = basis(d + dp);
        std::map<Monomial, std::size_t> row_of;
        for (std::size_t r = 0; r < bt.size(); ++r) row_of.emplace(bt[r], r);

        IntMat m(bt.size(), bu.size() * bv.size());
        for (std::size_t u = 0; u < bu.size(); ++u) {
            for (std::size_t v = 0; v < bv.size(); ++v) {
                Monomial prod(bu[u].size());
                for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = bu[u][k] + bv[v][k];
                const std::size_t col = u * bv.size() + v;
                for (const auto& [mono, coeff] : reduce(prod)) m(row_of.at(mono), col) += coeff;
            }
        }
        return m;
    }

private:
    GradedModel(ModelKind k, int n) : kind_(k), n_(n) {}

    void check_degree(Degree d) const {
        if (d.a < 0 || d.b < 0) throw std::domain_error("negative degree");
        if (!bigraded() && d.b != 0)
            throw std::domain_error("model " + name() + " is singly graded");
    }

    static BigInt binom(std::int64_t n, std::int64_t k) {
        if (k < 0 || n < 0 || k > n) return 0;
        BigInt r = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            r *= n - i;
            r /= i + 1;
        }
        return r;
    }

    // Degree-total monomials in `vars` variables, lexicographic from the
    // first variable; cap0 restricts the first exponent to 0 or 1.
    static void enumerate(int vars, std::int64_t total, bool cap0, std::vector<Monomial>& out) {
        Monomial cur(vars, 0);
        walk(cur, 0, total, cap0, out);
    }

    static void walk(Monomial& cur, int pos, std::int64_t left, bool cap0,
                     std::vector<Monomial>& out) {
        if (pos == static_cast<int>(cur.size()) - 1) {
            cur[pos] = left;
            if (!(cap0 && pos == 0 && left > 1)) out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        const std::int64_t top = (cap0 && pos == 0) ? std::min<std::int64_t>(left, 1) : left;
        for (std::int64_t e = top; e >= 0; --e) {
            cur[pos] = e;
            walk(cur, pos + 1, left - e, cap0, out);
        }
        cur[pos] = 0;
    }

    void reduce_quadric(Monomial m, std::int64_t coeff,
                        std::map<Monomial, std::int64_t>& acc) const {
        if (m[0] <= 1) {
            acc[m] += coeff;
            return;
        }
        m[0] -= 2; // x_0^2 -> x_1^2 + ... + x_n^2
        for (int i = 1; i <= n_; ++i) {
            Monomial t = m;
            t[i] += 2;
            reduce_quadric(std::move(t), coeff, acc);
        }
    }

    ModelKind kind_;
    int n_;
};

struct OracleResult {
    std::size_t rows = 0;  ///< dim of the target graded piece
    std::size_t cols = 0;  ///< dim of the source tensor product
    std::size_t rank = 0;  ///< exact rank over Z
    bool surjective = false;
};

/// Surjectivity of multiplication basis(d) (x) basis(d') -> basis(d+d') by
/// exact integer rank.
inline OracleResult oracle_surjective(const GradedModel& model, Degree d, Degree dp) {
    const IntMat m = model.multiplication_matrix(d, dp);
    OracleResult res;
    res.rows = m.rows();
    res.cols = m.cols();
    res.rank = row_echelon_rank(m);
    res.surjective = res.rank == res.rows;
    return res;
}

} // namespace wv

#endif
