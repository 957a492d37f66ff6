#pragma once
// Brute-force reference implementations used only by the tests. Nothing here
// calls into the enumerators or maps it is used to check.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/reading.hpp"

namespace oracle {

using lrpic::Cell;

/// Cells of outer/inner straight from the definition {(i,j) : inner_i < j <= outer_i}.
inline std::vector<Cell> cell_set(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        int lo = i < inner.size() ? inner[i] : 0;
        for (int j = lo + 1; j <= outer[i]; ++j) out.push_back({static_cast<int>(i + 1), j});
    }
    return out;
}

using Filling = std::map<Cell, int>;

inline bool semistandard(const Filling& f) {
    for (const auto& [c, v] : f) {
        auto right = f.find({c.row, c.col + 1});
        if (right != f.end() && right->second < v) return false;
        auto below = f.find({c.row + 1, c.col});
        if (below != f.end() && below->second <= v) return false;
    }
    return true;
}

/// Every filling of `cs` with letters 1..k, in lexicographic order of the
/// row-major value vector, filtered by `keep`.
template <typename Keep>
std::vector<std::vector<int>> all_fillings(const std::vector<Cell>& cs, int k, Keep keep) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(cs.size(), 1);
    if (k < 1 && !cs.empty()) return out;
    while (true) {
        Filling f;
        for (std::size_t i = 0; i < cs.size(); ++i) f[cs[i]] = v[i];
        if (keep(f)) out.push_back(v);
        std::size_t i = cs.size();
        while (i > 0 && v[i - 1] == k) v[--i] = 1;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

/// Whether every cell weakly northeast of another precedes it.
inline bool admissible(const std::vector<Cell>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j < seq.size(); ++j)
            if (i != j && seq[i].row <= seq[j].row && seq[i].col >= seq[j].col && i > j) return false;
    return true;
}

/// Pictures x -> y by trying all |x|! bijections. Result: image lists in
/// row-major domain order, lexicographically sorted.
inline std::vector<std::vector<Cell>> pictures(const std::vector<Cell>& x, const std::vector<Cell>& y,
                                               const std::vector<Cell>& order_y,
                                               const std::vector<Cell>& order_x) {
    std::vector<std::vector<Cell>> out;
    if (x.size() != y.size()) return out;
    std::map<Cell, std::size_t> ry, rx;
    for (std::size_t i = 0; i < order_y.size(); ++i) ry[order_y[i]] = i;
    for (std::size_t i = 0; i < order_x.size(); ++i) rx[order_x[i]] = i;
    auto le_p = [](const Cell& u, const Cell& v) { return u.row <= v.row && u.col <= v.col; };
    std::vector<std::size_t> perm(x.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i)
            for (std::size_t j = 0; j < x.size() && ok; ++j) {
                const Cell& fi = y[perm[i]];
                const Cell& fj = y[perm[j]];
                if (le_p(x[i], x[j]) && ry[fi] > ry[fj]) ok = false;  // f PA-standard
                if (le_p(fi, fj) && rx[x[i]] > rx[x[j]]) ok = false;  // f^-1 PA'-standard
            }
        if (ok) {
            std::vector<Cell> img;
            for (std::size_t i : perm) img.push_back(y[i]);
            out.push_back(img);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Kashiwara tensor rule on words, as an independent route to the signature
/// rule: b1 (x) b2 with f_i acting on b1 iff phi(b1) > eps(b2).
struct Letter {
    int eps = 0;
    int phi = 0;
};

inline Letter letter_data(int x, int i) {
    if (x == i) return {0, 1};
    if (x == i + 1) return {1, 0};
    return {0, 0};
}

inline Letter tensor(Letter a, Letter b) {
    return {std::max(a.eps, a.eps + b.eps - a.phi), std::max(b.phi, a.phi + b.phi - b.eps)};
}

inline Letter word_data(const std::vector<int>& w, std::size_t from, int i) {
    Letter acc{0, 0};
    bool first = true;
    for (std::size_t k = from; k < w.size(); ++k) {
        Letter l = letter_data(w[k], i);
        acc = first ? l : tensor(acc, l);
        first = false;
    }
    return acc;
}

inline std::optional<std::vector<int>> f_kashiwara(std::vector<int> w, int i) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        Letter head = letter_data(w[k], i);
        Letter rest = word_data(w, k + 1, i);
        if (k + 1 == w.size() || head.phi > rest.eps) {
            if (w[k] != i) return std::nullopt;
            w[k] = i + 1;
            return w;
        }
    }
    return std::nullopt;
}

inline bool highest_weight_kashiwara(const std::vector<int>& w, int r) {
    for (int i = 1; i < r; ++i)
        if (word_data(w, 0, i).eps > 0) return false;
    return true;
}

/// Prefix-count definition of a lattice word.
inline bool lattice(const std::vector<int>& w) {
    for (std::size_t k = 1; k <= w.size(); ++k) {
        std::map<int, int> cnt;
        for (std::size_t t = 0; t < k; ++t) ++cnt[w[t]];
        for (const auto& [letter, c] : cnt)
            if (letter > 1 && c > cnt[letter - 1]) return false;
    }
    return true;
}

}  // namespace oracle
