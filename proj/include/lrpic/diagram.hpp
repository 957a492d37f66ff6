#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrpic {

/// A box (row, col) of N x N, 1-based, rows increasing downward.
struct Cell {
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Componentwise order: (a,b) <=_P (c,d) iff a <= c and b <= d.
constexpr bool leq_p(const Cell& u, const Cell& v) noexcept {
    return u.row <= v.row && u.col <= v.col;
}

/// (a,b) is weakly northeast of (c,d): a <= c and b >= d.
constexpr bool weakly_northeast(const Cell& u, const Cell& v) noexcept {
    return u.row <= v.row && u.col >= v.col;
}

/// Weakly decreasing row lengths; trailing zeros are stripped on construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0)
                throw std::invalid_argument("partition has a negative row length");
            if (i > 0 && rows_[i] > rows_[i - 1])
                throw std::invalid_argument("partition rows must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// Length of row i (1-based); 0 past the last row.
    int row(std::size_t i) const noexcept {
        return (i >= 1 && i <= rows_.size()) ? rows_[i - 1] : 0;
    }

    std::span<const int> rows() const noexcept { return rows_; }
    std::size_t num_rows() const noexcept { return rows_.size(); }
    int size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }
    bool empty() const noexcept { return rows_.empty(); }

    /// Every row of *this fits inside the matching row of other.
    bool contained_in(const Partition& other) const noexcept {
        if (rows_.size() > other.rows_.size()) return false;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] > other.rows_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(rows_[i]);
        }
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

/// The cell set outer/inner. A straight shape has inner = empty.
class SkewShape {
public:
    SkewShape() = default;

    explicit SkewShape(Partition outer, Partition inner = {})
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!inner_.contained_in(outer_))
            throw std::invalid_argument("inner partition " + inner_.to_string() +
                                        " is not contained in outer " + outer_.to_string());
        offsets_.assign(outer_.num_rows() + 1, 0);
        for (std::size_t i = 1; i <= outer_.num_rows(); ++i)
            offsets_[i] = offsets_[i - 1] + row_length(i);
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    bool is_straight() const noexcept { return inner_.empty(); }

    std::size_t num_rows() const noexcept { return outer_.num_rows(); }
    /// Number of cells of the shape in row i.
    int row_length(std::size_t i) const noexcept { return outer_.row(i) - inner_.row(i); }
    /// First column of row i inside the shape.
    int row_start(std::size_t i) const noexcept { return inner_.row(i) + 1; }

    std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }

    bool contains(const Cell& c) const noexcept {
        if (c.row < 1 || c.col < 1) return false;
        auto r = static_cast<std::size_t>(c.row);
        return c.col > inner_.row(r) && c.col <= outer_.row(r);
    }

    /// Row-major position of a cell, or nullopt if it lies outside the shape.
    std::optional<std::size_t> index_of(const Cell& c) const noexcept {
        if (!contains(c)) return std::nullopt;
        auto r = static_cast<std::size_t>(c.row);
        return offsets_[r - 1] + static_cast<std::size_t>(c.col - row_start(r));
    }

    friend bool operator==(const SkewShape& a, const SkewShape& b) noexcept {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
        if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
        return a.inner_ <=> b.inner_;
    }

    std::string to_string() const {
        return inner_.empty() ? "(" + outer_.to_string() + ")"
                              : "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
    }

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::size_t> offsets_{0};
};

/// Cells of the shape in row-major order.
inline std::vector<Cell> cells(const SkewShape& shape) {
    std::vector<Cell> out;
    out.reserve(shape.size());
    for (std::size_t i = 1; i <= shape.num_rows(); ++i)
        for (int j = shape.row_start(i); j <= shape.outer().row(i); ++j)
            out.push_back({static_cast<int>(i), j});
    return out;
}

/// Outcome of growing a diagram box by box. On failure, `failed_step` is the
/// 1-based index of the first box that broke the Young condition and
/// `failed_row` the row it was added to.
struct Growth {
    std::optional<Partition> result;
    std::size_t failed_step = 0;
    int failed_row = 0;

    explicit operator bool() const noexcept { return result.has_value(); }
};

namespace detail {

/// In-place box addition on raw row lengths; false if not a Young diagram.
inline bool add_box_raw(std::vector<int>& rows, int j) {
    if (j < 1) return false;
    auto idx = static_cast<std::size_t>(j - 1);
    if (idx > rows.size()) return false;
    if (idx == rows.size()) {
        if (idx > 0 && rows[idx - 1] < 1) return false;
        rows.push_back(1);
        return true;
    }
    if (idx > 0 && rows[idx - 1] < rows[idx] + 1) return false;
    ++rows[idx];
    return true;
}

}  // namespace detail

/// Y[j]: adds a box at row j; fails if the result is not a Young diagram.
inline Growth add_box(const Partition& y, int j) {
    std::vector<int> rows(y.rows().begin(), y.rows().end());
    if (!detail::add_box_raw(rows, j)) return {std::nullopt, 1, j};
    return {Partition(std::move(rows))};
}

/// Y[j_1, ..., j_N]: left fold of add_box, failing at the first bad step.
inline Growth add_boxes(const Partition& y, std::span<const int> js) {
    std::vector<int> rows(y.rows().begin(), y.rows().end());
    for (std::size_t k = 0; k < js.size(); ++k)
        if (!detail::add_box_raw(rows, js[k])) return {std::nullopt, k + 1, js[k]};
    return {Partition(std::move(rows))};
}

/// No box at position (m+1, n+1).
inline bool is_hook(const Partition& y, int m, int n) noexcept {
    return y.row(static_cast<std::size_t>(m) + 1) <= n;
}

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// (m,n)-hook partitions of every size 0..max_size, smallest size first.
inline std::vector<Partition> hook_partitions(int max_size, int m, int n) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s)
        for (auto& p : partitions_of(s))
            if (is_hook(p, m, n)) out.push_back(std::move(p));
    return out;
}

/// Partitions contained in the rows x cols rectangle.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int depth, int max_part) -> void {
        out.emplace_back(cur);
        if (depth == rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, depth + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lrpic
