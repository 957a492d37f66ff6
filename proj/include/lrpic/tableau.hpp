#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrpic/diagram.hpp"

namespace lrpic {

/// A letter of the super alphabet 1 < 2 < ... < m < 1' < 2' < ... < n'.
/// Classical tableaux use unbarred letters only.
class Entry {
public:
    constexpr Entry() = default;

    static constexpr Entry unbarred(int k) { return Entry(k); }
    static constexpr Entry barred(int k) { return Entry(-k); }
    /// Signed encoding: k for an unbarred letter, -k for a barred one.
    static Entry from_code(int code) {
        if (code == 0) throw std::invalid_argument("entry code 0 is not a letter");
        return Entry(code);
    }

    constexpr bool is_barred() const noexcept { return code_ < 0; }
    /// The k in k or k'.
    constexpr int index() const noexcept { return code_ < 0 ? -code_ : code_; }
    constexpr int code() const noexcept { return code_; }

    friend constexpr bool operator==(Entry, Entry) = default;
    friend constexpr std::strong_ordering operator<=>(Entry a, Entry b) noexcept {
        if (a.is_barred() != b.is_barred()) return a.is_barred() ? std::strong_ordering::greater
                                                                 : std::strong_ordering::less;
        return a.index() <=> b.index();
    }

private:
    constexpr explicit Entry(int code) : code_(code) {}
    int code_ = 1;
};

/// A filling of a (skew) shape. Entries are stored in row-major cell order.
class Tableau {
public:
    Tableau() = default;

    Tableau(SkewShape shape, std::vector<Entry> entries)
        : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (entries_.size() != shape_.size())
            throw std::invalid_argument("tableau has " + std::to_string(entries_.size()) +
                                        " entries for a shape of size " +
                                        std::to_string(shape_.size()));
    }

    /// Builds from per-row entry lists; row i lists the skew cells of row i left to right.
    static Tableau from_rows(SkewShape shape, const std::vector<std::vector<Entry>>& rows) {
        if (rows.size() > shape.num_rows())
            throw std::invalid_argument("tableau has more rows than its shape");
        std::vector<Entry> flat;
        for (std::size_t i = 1; i <= shape.num_rows(); ++i) {
            std::size_t want = static_cast<std::size_t>(shape.row_length(i));
            std::size_t have = i <= rows.size() ? rows[i - 1].size() : 0;
            if (want != have)
                throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                            std::to_string(have) + " entries, shape needs " +
                                            std::to_string(want));
            if (have) flat.insert(flat.end(), rows[i - 1].begin(), rows[i - 1].end());
        }
        return Tableau(std::move(shape), std::move(flat));
    }

    /// Straight-shape classical tableau from integer rows.
    static Tableau from_int_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<int> lengths;
        std::vector<std::vector<Entry>> er;
        for (const auto& r : rows) {
            lengths.push_back(static_cast<int>(r.size()));
            er.emplace_back();
            for (int v : r) er.back().push_back(Entry::from_code(v));
        }
        return from_rows(SkewShape(Partition(lengths)), er);
    }

    const SkewShape& shape() const noexcept { return shape_; }
    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    Entry at(const Cell& c) const {
        auto idx = shape_.index_of(c);
        if (!idx) throw std::out_of_range("cell outside tableau shape");
        return entries_[*idx];
    }

    std::vector<std::vector<Entry>> rows() const {
        std::vector<std::vector<Entry>> out(shape_.num_rows());
        std::size_t k = 0;
        for (std::size_t i = 1; i <= shape_.num_rows(); ++i)
            for (int n = 0; n < shape_.row_length(i); ++n) out[i - 1].push_back(entries_[k++]);
        return out;
    }

    bool all_unbarred() const noexcept {
        return std::none_of(entries_.begin(), entries_.end(),
                            [](Entry e) { return e.is_barred(); });
    }

    friend bool operator==(const Tableau& a, const Tableau& b) noexcept {
        return a.shape_ == b.shape_ && a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
        if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    SkewShape shape_;
    std::vector<Entry> entries_;
};

namespace detail {

/// Row-major indices of the left and upper neighbours of each cell, or -1.
struct Neighbours {
    std::vector<std::ptrdiff_t> left;
    std::vector<std::ptrdiff_t> up;
};

inline Neighbours neighbours(const SkewShape& shape) {
    Neighbours nb;
    for (const Cell& c : cells(shape)) {
        auto l = shape.index_of({c.row, c.col - 1});
        auto u = shape.index_of({c.row - 1, c.col});
        nb.left.push_back(l ? static_cast<std::ptrdiff_t>(*l) : -1);
        nb.up.push_back(u ? static_cast<std::ptrdiff_t>(*u) : -1);
    }
    return nb;
}

}  // namespace detail

/// Rows weakly increase, columns strictly increase.
inline bool is_semistandard(const Tableau& t) {
    if (!t.all_unbarred()) throw std::invalid_argument("classical tableau has barred entries");
    auto nb = detail::neighbours(t.shape());
    auto e = t.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (nb.left[k] >= 0 && e[static_cast<std::size_t>(nb.left[k])] > e[k]) return false;
        if (nb.up[k] >= 0 && e[static_cast<std::size_t>(nb.up[k])] >= e[k]) return false;
    }
    return true;
}

/// gl(m,n) conditions: weak increase along rows and columns, unbarred letters
/// strict down columns, barred letters strict along rows.
inline bool is_glmn_semistandard(const Tableau& t, int m, int n) {
    auto nb = detail::neighbours(t.shape());
    auto e = t.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        Entry x = e[k];
        if (x.index() > (x.is_barred() ? n : m)) return false;
        if (nb.left[k] >= 0) {
            Entry l = e[static_cast<std::size_t>(nb.left[k])];
            if (l > x || (l == x && x.is_barred())) return false;
        }
        if (nb.up[k] >= 0) {
            Entry u = e[static_cast<std::size_t>(nb.up[k])];
            if (u > x || (u == x && !x.is_barred())) return false;
        }
    }
    return true;
}

/// cont(T): multiplicity of each letter 1, 2, ...; no trailing zeros.
inline std::vector<int> content(const Tableau& t) {
    std::vector<int> mu;
    for (Entry e : t.entries()) {
        if (e.is_barred()) throw std::invalid_argument("content of a tableau with barred entries");
        auto i = static_cast<std::size_t>(e.index());
        if (mu.size() < i) mu.resize(i, 0);
        ++mu[i - 1];
    }
    return mu;
}

/// p(T; i, j): number of boxes carrying T_ij in columns >= j, counted over the
/// whole tableau.
inline int p_index(const Tableau& t, const Cell& c) {
    Entry k = t.at(c);
    auto all = cells(t.shape());
    auto e = t.entries();
    int count = 0;
    std::vector<int> cols;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (e[i] != k) continue;
        cols.push_back(all[i].col);
        if (all[i].col >= c.col) ++count;
    }
    std::sort(cols.begin(), cols.end());
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw std::invalid_argument("equal entries share a column; p(T;i,j) is undefined");
    return count;
}

/// All p(T; cell) in row-major order, in one pass.
inline std::vector<int> p_indices(const Tableau& t) {
    auto all = cells(t.shape());
    auto e = t.entries();
    std::vector<int> out(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (e[j] != e[i]) continue;
            if (j != i && all[j].col == all[i].col)
                throw std::invalid_argument("equal entries share a column; p(T;i,j) is undefined");
            if (all[j].col >= all[i].col) ++out[i];
        }
    }
    return out;
}

/// Visits every semistandard filling with entries <= max_entry, in row-major
/// lexicographic order. The visitor receives the row-major entry codes.
template <typename Visitor>
void for_each_ssyt(const SkewShape& shape, int max_entry, Visitor&& visit) {
    auto nb = detail::neighbours(shape);
    const std::size_t n = shape.size();
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            visit(std::span<const int>(cur));
            return;
        }
        int lo = 1;
        if (nb.left[k] >= 0) lo = std::max(lo, cur[static_cast<std::size_t>(nb.left[k])]);
        if (nb.up[k] >= 0) lo = std::max(lo, cur[static_cast<std::size_t>(nb.up[k])] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            cur[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

/// Like for_each_ssyt, but letter v may occur at most cap[v-1] times
/// (and letters are bounded by cap.size()).
template <typename Visitor>
void for_each_ssyt_capped(const SkewShape& shape, std::span<const int> cap, Visitor&& visit) {
    auto nb = detail::neighbours(shape);
    const std::size_t n = shape.size();
    const int max_entry = static_cast<int>(cap.size());
    std::vector<int> cur(n, 0);
    std::vector<int> used(cap.size() + 1, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            visit(std::span<const int>(cur));
            return;
        }
        int lo = 1;
        if (nb.left[k] >= 0) lo = std::max(lo, cur[static_cast<std::size_t>(nb.left[k])]);
        if (nb.up[k] >= 0) lo = std::max(lo, cur[static_cast<std::size_t>(nb.up[k])] + 1);
        for (int v = lo; v <= max_entry; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (used[vi] >= cap[vi - 1]) continue;
            ++used[vi];
            cur[k] = v;
            self(self, k + 1);
            --used[vi];
        }
    };
    rec(rec, 0);
}

namespace detail {

inline Tableau tableau_from_codes(const SkewShape& shape, std::span<const int> codes) {
    std::vector<Entry> e;
    e.reserve(codes.size());
    for (int c : codes) e.push_back(Entry::from_code(c));
    return Tableau(shape, std::move(e));
}

}  // namespace detail

/// B(shape) over {1..max_entry}.
inline std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, max_entry, [&](std::span<const int> codes) {
        out.push_back(detail::tableau_from_codes(shape, codes));
    });
    return out;
}

/// Visits every gl(m,n)-semistandard filling, smallest letters first.
template <typename Visitor>
void for_each_glmn(const SkewShape& shape, int m, int n, Visitor&& visit) {
    std::vector<Entry> alphabet;
    for (int k = 1; k <= m; ++k) alphabet.push_back(Entry::unbarred(k));
    for (int k = 1; k <= n; ++k) alphabet.push_back(Entry::barred(k));
    auto nb = detail::neighbours(shape);
    const std::size_t size = shape.size();
    std::vector<std::size_t> cur(size, 0);
    std::vector<int> codes(size, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == size) {
            visit(std::span<const int>(codes));
            return;
        }
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            Entry x = alphabet[a];
            if (nb.left[k] >= 0) {
                auto l = cur[static_cast<std::size_t>(nb.left[k])];
                if (l > a || (l == a && x.is_barred())) continue;
            }
            if (nb.up[k] >= 0) {
                auto u = cur[static_cast<std::size_t>(nb.up[k])];
                if (u > a || (u == a && !x.is_barred())) continue;
            }
            cur[k] = a;
            codes[k] = x.code();
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

/// B(shape) for gl(m,n).
inline std::vector<Tableau> enumerate_glmn(const SkewShape& shape, int m, int n) {
    std::vector<Tableau> out;
    for_each_glmn(shape, m, n, [&](std::span<const int> codes) {
        out.push_back(detail::tableau_from_codes(shape, codes));
    });
    return out;
}

}  // namespace lrpic
