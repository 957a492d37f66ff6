#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/reading.hpp"

namespace lrpic {

using CellMap = std::map<Cell, Cell>;

/// A bijection between the cells of two shapes, stored in both directions.
class Picture {
public:
    Picture() = default;

    /// image[k] is the image of the k-th row-major cell of `domain`.
    Picture(SkewShape domain, SkewShape codomain, std::vector<Cell> image)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
        if (domain_.size() != codomain_.size())
            throw std::invalid_argument("picture shapes differ in size: " + domain_.to_string() +
                                        " vs " + codomain_.to_string());
        if (image_.size() != domain_.size())
            throw std::invalid_argument("picture map is not total on its domain");
        preimage_.assign(codomain_.size(), Cell{0, 0});
        std::vector<bool> hit(codomain_.size(), false);
        auto dom = cells(domain_);
        for (std::size_t k = 0; k < image_.size(); ++k) {
            auto idx = codomain_.index_of(image_[k]);
            if (!idx) throw std::invalid_argument("picture maps a cell outside its codomain");
            if (hit[*idx]) throw std::invalid_argument("picture map is not injective");
            hit[*idx] = true;
            preimage_[*idx] = dom[k];
        }
    }

    static Picture from_map(SkewShape domain, SkewShape codomain, const CellMap& forward) {
        if (forward.size() != domain.size())
            throw std::invalid_argument("picture map is not total on its domain");
        std::vector<Cell> image;
        for (const Cell& c : cells(domain)) {
            auto it = forward.find(c);
            if (it == forward.end()) throw std::invalid_argument("picture map is not total on its domain");
            image.push_back(it->second);
        }
        return Picture(std::move(domain), std::move(codomain), std::move(image));
    }

    const SkewShape& domain() const noexcept { return domain_; }
    const SkewShape& codomain() const noexcept { return codomain_; }
    std::size_t size() const noexcept { return image_.size(); }

    /// Images of the domain cells in row-major order.
    std::span<const Cell> image() const noexcept { return image_; }
    /// Preimages of the codomain cells in row-major order.
    std::span<const Cell> preimage() const noexcept { return preimage_; }

    Cell forward(const Cell& c) const {
        auto idx = domain_.index_of(c);
        if (!idx) throw std::out_of_range("cell outside picture domain");
        return image_[*idx];
    }
    Cell backward(const Cell& c) const {
        auto idx = codomain_.index_of(c);
        if (!idx) throw std::out_of_range("cell outside picture codomain");
        return preimage_[*idx];
    }

    CellMap forward_map() const { return zip(cells(domain_), image_); }
    CellMap backward_map() const { return zip(cells(codomain_), preimage_); }

    /// f -> f^{-1}.
    Picture inverse() const {
        Picture p;
        p.domain_ = codomain_;
        p.codomain_ = domain_;
        p.image_ = preimage_;
        p.preimage_ = image_;
        return p;
    }

    friend bool operator==(const Picture& a, const Picture& b) noexcept {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.image_ == b.image_;
    }
    /// Canonical order: shapes, then the forward map in row-major domain order.
    friend std::strong_ordering operator<=>(const Picture& a, const Picture& b) {
        if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
        if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(),
                                                      b.image_.begin(), b.image_.end());
    }

private:
    static CellMap zip(const std::vector<Cell>& keys, const std::vector<Cell>& values) {
        CellMap m;
        for (std::size_t k = 0; k < keys.size(); ++k) m.emplace(keys[k], values[k]);
        return m;
    }

    SkewShape domain_;
    SkewShape codomain_;
    std::vector<Cell> image_;
    std::vector<Cell> preimage_;
};

/// u <=_P v implies map(u) <=_A map(v).
inline bool is_pa_standard(const CellMap& map, const AdmissibleOrder& target_order) {
    std::map<Cell, std::size_t> rank;
    auto seq = target_order.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) rank.emplace(seq[i], i);
    std::vector<std::pair<Cell, std::size_t>> pts;
    pts.reserve(map.size());
    for (const auto& [from, to] : map) {
        auto it = rank.find(to);
        if (it == rank.end()) throw std::invalid_argument("image cell missing from the target order");
        pts.emplace_back(from, it->second);
    }
    for (const auto& [u, ru] : pts)
        for (const auto& [v, rv] : pts)
            if (leq_p(u, v) && ru > rv) return false;
    return true;
}

/// f is PA-standard for `a` (on the codomain) and f^{-1} is PA'-standard for
/// `a_prime` (on the domain).
inline bool is_admissible_picture(const Picture& p, const AdmissibleOrder& a,
                                  const AdmissibleOrder& a_prime) {
    a.ranks(p.codomain());
    a_prime.ranks(p.domain());
    return is_pa_standard(p.forward_map(), a) && is_pa_standard(p.backward_map(), a_prime);
}

/// Omega: f -> f^{-1}.
inline Picture omega(const Picture& p) { return p.inverse(); }

/// Visits every (A, A')-admissible picture x -> y, in no particular order.
/// `a` orders y, `a_prime` orders x.
template <typename Visitor>
void for_each_picture(const SkewShape& x, const SkewShape& y, const AdmissibleOrder& a,
                      const AdmissibleOrder& a_prime, Visitor&& visit) {
    if (x.size() != y.size()) return;
    const std::size_t n = x.size();
    if (n > 64) throw std::invalid_argument("picture enumeration supports at most 64 cells");
    const auto xc = cells(x);
    const auto yc = cells(y);
    const auto rank_y = a.ranks(y);
    const auto rank_x = a_prime.ranks(x);

    // above_x[u]: bitmask of domain cells v != u with u <=_P v; below_x the converse.
    std::vector<std::uint64_t> above_x(n, 0), below_x(n, 0), above_y(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (leq_p(xc[i], xc[j])) above_x[i] |= std::uint64_t{1} << j;
            if (leq_p(xc[j], xc[i])) below_x[i] |= std::uint64_t{1} << j;
            if (leq_p(yc[i], yc[j])) above_y[i] |= std::uint64_t{1} << j;
        }

    // Domain cells in A' order; by construction every earlier cell is A'-smaller.
    std::vector<std::size_t> by_rank_x(n);
    for (std::size_t i = 0; i < n; ++i) by_rank_x[rank_x[i]] = i;

    std::vector<std::size_t> img(n, n);  // domain index -> codomain index
    std::uint64_t assigned_x = 0, used_y = 0;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            visit(std::span<const std::size_t>(img));
            return;
        }
        const std::size_t u = by_rank_x[depth];
        for (std::size_t s = 0; s < n; ++s) {
            if (used_y >> s & 1) continue;
            // f^{-1} PA'-standard: no assigned image may lie <=_P-above s,
            // because its preimage is A'-earlier than u.
            if (above_y[s] & used_y) continue;
            bool ok = true;
            std::uint64_t rel = (above_x[u] | below_x[u]) & assigned_x;
            while (rel && ok) {
                auto v = static_cast<std::size_t>(__builtin_ctzll(rel));
                rel &= rel - 1;
                if ((above_x[u] >> v & 1) && rank_y[s] > rank_y[img[v]]) ok = false;
                if ((below_x[u] >> v & 1) && rank_y[img[v]] > rank_y[s]) ok = false;
            }
            if (!ok) continue;
            img[u] = s;
            assigned_x |= std::uint64_t{1} << u;
            used_y |= std::uint64_t{1} << s;
            self(self, depth + 1);
            assigned_x &= ~(std::uint64_t{1} << u);
            used_y &= ~(std::uint64_t{1} << s);
        }
    };
    rec(rec, 0);
}

/// Number of (A, A')-admissible pictures x -> y.
inline std::size_t count_pictures(const SkewShape& x, const SkewShape& y, const AdmissibleOrder& a,
                                  const AdmissibleOrder& a_prime) {
    std::size_t count = 0;
    for_each_picture(x, y, a, a_prime, [&](std::span<const std::size_t>) { ++count; });
    return count;
}

/// P(x, y; a, a_prime), sorted canonically.
inline std::vector<Picture> enumerate_pictures(const SkewShape& x, const SkewShape& y,
                                               const AdmissibleOrder& a,
                                               const AdmissibleOrder& a_prime) {
    std::vector<Picture> out;
    const auto yc = cells(y);
    for_each_picture(x, y, a, a_prime, [&](std::span<const std::size_t> img) {
        std::vector<Cell> image;
        image.reserve(img.size());
        for (std::size_t s : img) image.push_back(yc[s]);
        out.emplace_back(x, y, std::move(image));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lrpic
