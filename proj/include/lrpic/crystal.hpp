#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/reading.hpp"
#include "lrpic/tableau.hpp"

namespace lrpic {

/// An element of B^{(x)N} for the gl(r) vector crystal 1 -> 2 -> ... -> r.
struct TensorWord {
    Word letters;
    int r = 1;

    TensorWord() = default;
    TensorWord(Word w, int rank) : letters(std::move(w)), r(rank) {
        for (int x : letters)
            if (x < 1 || x > r)
                throw std::invalid_argument("letter " + std::to_string(x) + " outside 1.." +
                                            std::to_string(r));
    }

    friend bool operator==(const TensorWord&, const TensorWord&) = default;
};

namespace detail {

inline void check_color(const TensorWord& w, int i) {
    if (i < 1 || i >= w.r)
        throw std::invalid_argument("crystal index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(w.r - 1));
}

/// Signature rule: i is "+", i+1 is "-"; each "-" cancels the nearest
/// unmatched "+" to its left. What survives reads "- ... - + ... +"; f_i
/// acts on the first surviving "+" and e_i on the last surviving "-", which
/// makes them mutually inverse.
struct Signature {
    std::optional<std::size_t> first_plus;
    std::optional<std::size_t> last_minus;
};

inline Signature signature(std::span<const int> letters, int i) {
    Signature s;
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] == i) {
            open.push_back(k);
        } else if (letters[k] == i + 1) {
            if (!open.empty())
                open.pop_back();
            else
                s.last_minus = k;
        }
    }
    if (!open.empty()) s.first_plus = open.front();
    return s;
}

}  // namespace detail

/// Position of the letter f_i changes, if f_i(w) is defined.
inline std::optional<std::size_t> lower_position(const TensorWord& w, int i) {
    detail::check_color(w, i);
    return detail::signature(w.letters, i).first_plus;
}

/// f_i: the first unmatched i becomes i+1.
inline std::optional<TensorWord> lower(const TensorWord& w, int i) {
    auto pos = lower_position(w, i);
    if (!pos) return std::nullopt;
    TensorWord out = w;
    out.letters[*pos] = i + 1;
    return out;
}

/// e_i: the last unmatched i+1 becomes i.
inline std::optional<TensorWord> raise(const TensorWord& w, int i) {
    detail::check_color(w, i);
    auto pos = detail::signature(w.letters, i).last_minus;
    if (!pos) return std::nullopt;
    TensorWord out = w;
    out.letters[*pos] = i;
    return out;
}

inline bool is_highest_weight(const TensorWord& w) {
    for (int i = 1; i < w.r; ++i)
        if (detail::signature(w.letters, i).last_minus) return false;
    return true;
}

/// Weight of a word: multiplicity of each letter 1..r.
inline std::vector<int> weight(const TensorWord& w) {
    std::vector<int> mu(static_cast<std::size_t>(w.r), 0);
    for (int x : w.letters) ++mu[static_cast<std::size_t>(x - 1)];
    return mu;
}

/// Outcome of a tensor-product decomposition check.
struct DecompositionReport {
    std::size_t lhs_card = 0;  ///< |B(Y) x B(W)|
    std::size_t rhs_card = 0;  ///< sum over Z of mult(Z) * |B(Z)|
    std::map<Partition, std::size_t> per_shape;
    bool pass = false;
};

/// Checks B(Y) (x) B(W) = sum over T in B(W) of B(Y[R_A(T)]) for gl(r):
/// the shapes reached by growing y along the ME and FE readings of every
/// T in B(W) must match each other and the weights of the highest-weight
/// words R_A(S) R_A(T), S in B(Y), under both readings.
inline DecompositionReport verify_decomposition_glr(const Partition& y, const Partition& w, int r) {
    if (static_cast<int>(y.num_rows()) > r || static_cast<int>(w.num_rows()) > r)
        throw std::invalid_argument("diagrams must have at most r rows");
    SkewShape ys(y), ws(w);
    auto by = enumerate_ssyt(ys, r);
    auto bw = enumerate_ssyt(ws, r);

    using Multiset = std::map<Partition, std::size_t>;
    auto grown = [&](const AdmissibleOrder& order) {
        Multiset m;
        for (const auto& t : bw)
            if (auto g = add_boxes(y, reading(t, order))) ++m[*g.result];
        return m;
    };
    auto highest = [&](const AdmissibleOrder& oy, const AdmissibleOrder& ow) {
        Multiset m;
        std::vector<Word> wr;
        for (const auto& t : bw) wr.push_back(reading(t, ow));
        for (const auto& s : by) {
            Word head = reading(s, oy);
            for (const auto& tail : wr) {
                Word full = head;
                full.insert(full.end(), tail.begin(), tail.end());
                TensorWord tw(std::move(full), r);
                if (is_highest_weight(tw)) ++m[Partition(weight(tw))];
            }
        }
        return m;
    };

    Multiset grown_me = grown(middle_eastern(ws));
    Multiset grown_fe = grown(far_eastern(ws));
    Multiset hw_me = highest(middle_eastern(ys), middle_eastern(ws));
    Multiset hw_fe = highest(far_eastern(ys), far_eastern(ws));

    DecompositionReport rep;
    rep.lhs_card = by.size() * bw.size();
    rep.per_shape = grown_fe;
    for (const auto& [z, mult] : grown_fe)
        rep.rhs_card += mult * enumerate_ssyt(SkewShape(z), r).size();
    rep.pass = grown_me == grown_fe && grown_fe == hw_me && hw_me == hw_fe &&
               rep.lhs_card == rep.rhs_card;
    return rep;
}

namespace detail {

using WeightMultiset = std::map<std::vector<int>, std::size_t>;

/// Weight vector over 1..m, 1'..n' for every gl(m,n)-tableau of `shape`.
inline WeightMultiset glmn_weights(const SkewShape& shape, int m, int n) {
    WeightMultiset out;
    std::vector<int> wt;
    for_each_glmn(shape, m, n, [&](std::span<const int> codes) {
        wt.assign(static_cast<std::size_t>(m + n), 0);
        for (int c : codes) ++wt[static_cast<std::size_t>(c > 0 ? c - 1 : m - c - 1)];
        ++out[wt];
    });
    return out;
}

}  // namespace detail

/// Character-level check of B(Y) (x) B(W) = sum over Z in H(m,n) of
/// N_{Y,W}^Z copies of B(Z) for gl(m,n).
inline DecompositionReport verify_decomposition_glmn(const Partition& y, const Partition& w, int m,
                                                     int n) {
    if (!is_hook(y, m, n) || !is_hook(w, m, n))
        throw std::invalid_argument("diagrams must be (m,n)-hook diagrams");
    auto wy = detail::glmn_weights(SkewShape(y), m, n);
    auto ww = detail::glmn_weights(SkewShape(w), m, n);

    DecompositionReport rep;
    detail::WeightMultiset lhs;
    for (const auto& [a, ca] : wy)
        for (const auto& [b, cb] : ww) {
            std::vector<int> sum(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
            lhs[sum] += ca * cb;
            rep.lhs_card += ca * cb;
        }

    detail::WeightMultiset rhs;
    for (const auto& z : partitions_of(y.size() + w.size())) {
        if (!is_hook(z, m, n)) continue;
        if (!y.contained_in(z)) continue;
        std::size_t mult = enumerate_LR(y, w, z, middle_eastern(SkewShape(z, y))).size();
        if (mult == 0) continue;
        rep.per_shape[z] = mult;
        for (const auto& [wt, c] : detail::glmn_weights(SkewShape(z), m, n)) {
            rhs[wt] += mult * c;
            rep.rhs_card += mult * c;
        }
    }
    rep.pass = lhs == rhs;
    return rep;
}

}  // namespace lrpic
