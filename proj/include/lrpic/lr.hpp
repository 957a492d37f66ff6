#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/picture.hpp"
#include "lrpic/reading.hpp"
#include "lrpic/tableau.hpp"

namespace lrpic {

/// Raised by the checked map overloads when an input or output falls outside
/// the set the map is supposed to act on.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Orders for a picture X -> Y: `a` on the codomain Y, `a_prime` on the domain X.
struct OrderPair {
    AdmissibleOrder a;
    AdmissibleOrder a_prime;
};

namespace detail {

/// Row-major cell index visited at each step of `order`.
inline std::vector<std::size_t> order_to_index(const SkewShape& shape, const AdmissibleOrder& order) {
    auto rank = order.ranks(shape);
    std::vector<std::size_t> idx(rank.size());
    for (std::size_t k = 0; k < rank.size(); ++k) idx[rank[k]] = k;
    return idx;
}

/// y[codes read in `walk` order] == z, with every prefix a Young diagram.
inline bool grows_to(std::span<const int> codes, std::span<const std::size_t> walk,
                     const Partition& y, const Partition& z, std::vector<int>& scratch) {
    scratch.assign(y.rows().begin(), y.rows().end());
    for (std::size_t k : walk) {
        int j = codes[k];
        if (static_cast<std::size_t>(j) > z.num_rows()) return false;
        if (!add_box_raw(scratch, j)) return false;
        if (scratch[static_cast<std::size_t>(j - 1)] > z.row(static_cast<std::size_t>(j))) return false;
    }
    return std::equal(scratch.begin(), scratch.end(), z.rows().begin(), z.rows().end());
}

inline Partition partition_from_content(const std::vector<int>& mu, const char* what) {
    try {
        return Partition(mu);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(what) + ": content is not a partition");
    }
}

inline int num_rows(const Partition& p) { return static_cast<int>(p.num_rows()); }

}  // namespace detail

/// Condition (i)-(ii) for gl(r) LR tableaux: the reading word grows y into z
/// one box at a time through Young diagrams. The shape of t may be skew.
inline bool is_lr_member_glr(const Tableau& t, const Partition& y, const Partition& z,
                             const AdmissibleOrder& order) {
    auto w = reading(t, order);
    auto g = add_boxes(y, w);
    return g && *g.result == z;
}

/// B(w)_y^z[order] over {1..max_entry}, in row-major lexicographic order.
inline std::vector<Tableau> enumerate_B_W_Y_Z(const SkewShape& w, const Partition& y,
                                              const Partition& z, const AdmissibleOrder& order,
                                              int max_entry) {
    std::vector<Tableau> out;
    if (static_cast<std::size_t>(y.size()) + w.size() != static_cast<std::size_t>(z.size()))
        return out;
    if (!y.contained_in(z)) return out;
    auto walk = detail::order_to_index(w, order);
    // Every member has content z - y; cap letter counts accordingly.
    std::vector<int> cap(std::min<std::size_t>(static_cast<std::size_t>(std::max(max_entry, 0)),
                                               z.num_rows()));
    for (std::size_t k = 0; k < cap.size(); ++k)
        cap[k] = z.row(k + 1) - y.row(k + 1);
    std::vector<int> scratch;
    for_each_ssyt_capped(w, cap, [&](std::span<const int> codes) {
        if (detail::grows_to(codes, walk, y, z, scratch))
            out.push_back(detail::tableau_from_codes(w, codes));
    });
    return out;
}

/// Shape z/y, content w, lattice reading word, classical semistandard.
inline bool is_lr_tableau_glmn(const Tableau& q, const Partition& y, const Partition& w,
                               const Partition& z, const AdmissibleOrder& order) {
    if (!y.contained_in(z)) return false;
    if (q.shape() != SkewShape(z, y)) return false;
    if (!q.all_unbarred() || !is_semistandard(q)) return false;
    auto mu = content(q);
    if (!std::equal(mu.begin(), mu.end(), w.rows().begin(), w.rows().end())) return false;
    return is_lattice_permutation(reading(q, order));
}

/// LR(y,w)^z[order], in row-major lexicographic order. Entries are bounded by
/// the number of rows of w because cont(Q) = w.
inline std::vector<Tableau> enumerate_LR(const Partition& y, const Partition& w, const Partition& z,
                                         const AdmissibleOrder& order) {
    std::vector<Tableau> out;
    if (y.size() + w.size() != z.size() || !y.contained_in(z)) return out;
    SkewShape shape(z, y);
    auto walk = detail::order_to_index(shape, order);
    const int rows = detail::num_rows(w);
    std::vector<int> count;
    for_each_ssyt_capped(shape, w.rows(), [&](std::span<const int> codes) {
        count.assign(static_cast<std::size_t>(rows) + 2, 0);
        for (std::size_t k : walk) {
            auto i = static_cast<std::size_t>(codes[k]);
            if (++count[i] > w.row(i)) return;
            if (i > 1 && count[i] > count[i - 1]) return;
        }
        out.push_back(detail::tableau_from_codes(shape, codes));
    });
    return out;
}

/// Phi(f)_ij = f_1(i,j). Also serves as Phi-tilde.
inline Tableau phi(const Picture& p) {
    std::vector<Entry> e;
    e.reserve(p.size());
    for (const Cell& c : p.image()) e.push_back(Entry::unbarred(c.row));
    return Tableau(p.domain(), std::move(e));
}

/// Psi(T)(i,j) = (T_ij, y_{T_ij} + p(T;i,j)). The codomain z/y has
/// z_k = y_k + (number of k's in T).
inline Picture psi(const Tableau& t, const Partition& y) {
    auto mu = content(t);
    std::vector<int> zr(std::max(mu.size(), y.num_rows()), 0);
    for (std::size_t k = 0; k < zr.size(); ++k)
        zr[k] = y.row(k + 1) + (k < mu.size() ? mu[k] : 0);
    Partition z = detail::partition_from_content(zr, "psi");
    auto p = p_indices(t);
    auto e = t.entries();
    std::vector<Cell> image;
    image.reserve(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        int row = e[k].index();
        image.push_back({row, y.row(static_cast<std::size_t>(row)) + p[k]});
    }
    return Picture(t.shape(), SkewShape(std::move(z), y), std::move(image));
}

/// Phi-tilde(f)_ij = f_1(i,j) for f: z/y -> w.
inline Tableau phi_tilde(const Picture& p) { return phi(p); }

/// Psi-tilde(Q)(i,j) = (Q_ij, p(Q;i,j)); the codomain is cont(Q).
inline Picture psi_tilde(const Tableau& q) {
    Partition w = detail::partition_from_content(content(q), "psi_tilde");
    auto p = p_indices(q);
    auto e = q.entries();
    std::vector<Cell> image;
    image.reserve(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) image.push_back({e[k].index(), p[k]});
    return Picture(q.shape(), SkewShape(std::move(w)), std::move(image));
}

/// Phi-hat = Phi . Omega . Psi-tilde: LR(y,w)^z -> B(w)_y^z.
inline Tableau phi_hat(const Tableau& q) { return phi(omega(psi_tilde(q))); }

// Checked overloads. For a picture X -> Y, orders.a orders Y and
// orders.a_prime orders X.

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw VerificationError(what);
}

inline bool in_B(const Tableau& t, const Partition& y, const Partition& z,
                 const AdmissibleOrder& order) {
    return is_semistandard(t) && is_lr_member_glr(t, y, z, order);
}

}  // namespace detail

/// Phi on P(W, Z/Y; A, A'), checking that the result lies in B(W)_Y^Z[A'].
inline Tableau phi(const Picture& p, const OrderPair& orders) {
    detail::require(is_admissible_picture(p, orders.a, orders.a_prime),
                    "phi: input is not an (A,A')-admissible picture");
    Tableau t = phi(p);
    detail::require(detail::in_B(t, p.codomain().inner(), p.codomain().outer(), orders.a_prime),
                    "phi: result is not in B(W)_Y^Z[A']");
    return t;
}

/// Psi on B(W)_Y^Z[A'], checking that the result is (A,A')-admissible.
inline Picture psi(const Tableau& t, const Partition& y, const OrderPair& orders) {
    Picture p;
    try {
        p = psi(t, y);
    } catch (const std::invalid_argument& e) {
        throw VerificationError(std::string("psi: input is not in B(W)_Y^Z[A']: ") + e.what());
    }
    detail::require(detail::in_B(t, y, p.codomain().outer(), orders.a_prime),
                    "psi: input is not in B(W)_Y^Z[A']");
    detail::require(is_admissible_picture(p, orders.a, orders.a_prime),
                    "psi: result is not an (A,A')-admissible picture");
    return p;
}

/// Phi-tilde on P(Z/Y, W; A, A'), checking that the result lies in LR(Y,W)^Z[A'].
inline Tableau phi_tilde(const Picture& p, const OrderPair& orders) {
    detail::require(p.codomain().is_straight(), "phi_tilde: codomain must be a straight shape");
    detail::require(is_admissible_picture(p, orders.a, orders.a_prime),
                    "phi_tilde: input is not an (A,A')-admissible picture");
    Tableau q = phi_tilde(p);
    detail::require(is_lr_tableau_glmn(q, p.domain().inner(), p.codomain().outer(),
                                       p.domain().outer(), orders.a_prime),
                    "phi_tilde: result is not in LR(Y,W)^Z[A']");
    return q;
}

/// Psi-tilde on LR(Y,W)^Z[A'], checking that the result is (A,A')-admissible.
inline Picture psi_tilde(const Tableau& q, const OrderPair& orders) {
    Picture p;
    try {
        p = psi_tilde(q);
    } catch (const std::invalid_argument& e) {
        throw VerificationError(std::string("psi_tilde: input is not in LR(Y,W)^Z[A']: ") + e.what());
    }
    detail::require(is_lr_tableau_glmn(q, q.shape().inner(), p.codomain().outer(),
                                       q.shape().outer(), orders.a_prime),
                    "psi_tilde: input is not in LR(Y,W)^Z[A']");
    detail::require(is_admissible_picture(p, orders.a, orders.a_prime),
                    "psi_tilde: result is not an (A,A')-admissible picture");
    return p;
}

/// Phi-hat with `lr_order` on Z/Y (A') and `glr_order` on W (A).
inline Tableau phi_hat(const Tableau& q, const AdmissibleOrder& lr_order,
                       const AdmissibleOrder& glr_order) {
    Picture f = psi_tilde(q, OrderPair{glr_order, lr_order});
    return phi(omega(f), OrderPair{lr_order, glr_order});
}

/// c (gl(r) side) and N (gl(m,n) side) for one triple.
struct LrCoefficient {
    std::size_t c = 0;
    std::size_t n_super = 0;
    int r = 0;

    bool equal() const noexcept { return c == n_super; }
};

/// r = max(#rows W, #rows Z), as used for the gl(r) side.
inline int glr_rank(const Partition& w, const Partition& z) {
    return std::max(detail::num_rows(w), detail::num_rows(z));
}

/// c via B(W)_Y^Z and N via LR(Y,W)^Z, both under the Middle Eastern order.
/// Throws if any of y, w, z is not an (m,n)-hook diagram.
inline LrCoefficient lr_coefficient(const Partition& y, const Partition& w, const Partition& z,
                                    int m, int n) {
    for (const Partition* p : {&y, &w, &z})
        if (!is_hook(*p, m, n))
            throw std::invalid_argument("(" + p->to_string() + ") is not an (" + std::to_string(m) +
                                        "," + std::to_string(n) + ")-hook diagram");
    LrCoefficient out;
    out.r = glr_rank(w, z);
    if (y.size() + w.size() != z.size()) return out;
    SkewShape ws(w);
    out.c = enumerate_B_W_Y_Z(ws, y, z, middle_eastern(ws), out.r).size();
    if (y.contained_in(z)) out.n_super = enumerate_LR(y, w, z, middle_eastern(SkewShape(z, y))).size();
    return out;
}

}  // namespace lrpic
