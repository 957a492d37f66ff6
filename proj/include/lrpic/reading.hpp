#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/tableau.hpp"

namespace lrpic {

using Word = std::vector<int>;

/// A total order on a cell set, smallest first. Construction only checks that
/// the cells are distinct; use is_admissible to validate against a shape.
class AdmissibleOrder {
public:
    AdmissibleOrder() = default;
    explicit AdmissibleOrder(std::vector<Cell> sequence) : sequence_(std::move(sequence)) {
        auto sorted = sequence_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("order lists a cell twice");
    }

    std::span<const Cell> sequence() const noexcept { return sequence_; }
    std::size_t size() const noexcept { return sequence_.size(); }

    /// rank[k] = position of the k-th row-major cell of `shape` in this order.
    std::vector<std::size_t> ranks(const SkewShape& shape) const {
        if (sequence_.size() != shape.size())
            throw std::invalid_argument("order does not cover the shape " + shape.to_string());
        std::vector<std::size_t> rank(shape.size(), shape.size());
        for (std::size_t pos = 0; pos < sequence_.size(); ++pos) {
            auto idx = shape.index_of(sequence_[pos]);
            if (!idx) throw std::invalid_argument("order contains a cell outside " + shape.to_string());
            rank[*idx] = pos;
        }
        return rank;
    }

    friend bool operator==(const AdmissibleOrder&, const AdmissibleOrder&) = default;

private:
    std::vector<Cell> sequence_;
};

/// Rows right to left, top to bottom.
inline AdmissibleOrder middle_eastern(const SkewShape& shape) {
    auto cs = cells(shape);
    std::sort(cs.begin(), cs.end(), [](const Cell& u, const Cell& v) {
        return u.row < v.row || (u.row == v.row && u.col > v.col);
    });
    return AdmissibleOrder(std::move(cs));
}

/// Columns top to bottom, right to left.
inline AdmissibleOrder far_eastern(const SkewShape& shape) {
    auto cs = cells(shape);
    std::sort(cs.begin(), cs.end(), [](const Cell& u, const Cell& v) {
        return u.col > v.col || (u.col == v.col && u.row < v.row);
    });
    return AdmissibleOrder(std::move(cs));
}

/// Every cell weakly northeast of another comes no later than it.
inline bool is_admissible(const AdmissibleOrder& order, const SkewShape& shape) {
    order.ranks(shape);  // throws unless a permutation of the cell set
    auto seq = order.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (weakly_northeast(seq[j], seq[i])) return false;
    return true;
}

/// R_A(T): entries of t listed in the given order.
inline Word reading(const Tableau& t, const AdmissibleOrder& order) {
    if (order.size() != t.size())
        throw std::invalid_argument("order does not match the tableau shape");
    Word w;
    w.reserve(t.size());
    auto e = t.entries();
    for (const Cell& c : order.sequence()) {
        auto idx = t.shape().index_of(c);
        if (!idx) throw std::invalid_argument("order contains a cell outside the tableau shape");
        if (e[*idx].is_barred()) throw std::invalid_argument("reading word of a barred entry");
        w.push_back(e[*idx].index());
    }
    return w;
}

/// Every prefix has at least as many i's as (i+1)'s.
inline bool is_lattice_permutation(std::span<const int> w) {
    std::vector<int> count;
    for (int x : w) {
        if (x < 1) return false;
        auto i = static_cast<std::size_t>(x);
        if (count.size() < i + 1) count.resize(i + 1, 0);
        ++count[i];
        if (i > 1 && count[i] > count[i - 1]) return false;
    }
    return true;
}

/// A linear extension of the "weakly northeast first" partial order, built by
/// repeatedly picking uniformly among the currently minimal cells.
inline AdmissibleOrder random_admissible_order(const SkewShape& shape, std::uint64_t seed) {
    auto cs = cells(shape);
    const std::size_t n = cs.size();
    std::vector<int> pending(n, 0);  // unplaced predecessors per cell
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && weakly_northeast(cs[j], cs[i])) ++pending[i];
    std::mt19937_64 rng(seed);
    std::vector<bool> placed(n, false);
    std::vector<Cell> seq;
    seq.reserve(n);
    std::vector<std::size_t> minimal;
    while (seq.size() < n) {
        minimal.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (!placed[i] && pending[i] == 0) minimal.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, minimal.size() - 1);
        std::size_t chosen = minimal[pick(rng)];
        placed[chosen] = true;
        seq.push_back(cs[chosen]);
        for (std::size_t i = 0; i < n; ++i)
            if (!placed[i] && weakly_northeast(cs[chosen], cs[i])) --pending[i];
    }
    return AdmissibleOrder(std::move(seq));
}

}  // namespace lrpic
