#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lrpic/diagram.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/picture.hpp"
#include "lrpic/reading.hpp"

namespace lrpic {

/// How to pick an admissible order for an arbitrary shape: ME, FE, a seeded
/// random linear extension, or a fixed cell list (valid for one shape only).
class OrderSpec {
public:
    enum class Kind { middle_eastern, far_eastern, seeded, explicit_cells };

    static OrderSpec me() { return OrderSpec(Kind::middle_eastern, 0, {}); }
    static OrderSpec fe() { return OrderSpec(Kind::far_eastern, 0, {}); }
    static OrderSpec seeded(std::uint64_t seed) { return OrderSpec(Kind::seeded, seed, {}); }
    static OrderSpec fixed(AdmissibleOrder order) {
        return OrderSpec(Kind::explicit_cells, 0, std::move(order));
    }

    /// "ME", "FE" or "seed:<n>".
    static OrderSpec parse(const std::string& text) {
        if (text == "ME") return me();
        if (text == "FE") return fe();
        if (text.rfind("seed:", 0) == 0) {
            std::size_t used = 0;
            std::uint64_t seed = 0;
            try {
                seed = std::stoull(text.substr(5), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != text.size() - 5)
                throw std::invalid_argument("bad seed in order spec '" + text + "'");
            return seeded(seed);
        }
        throw std::invalid_argument("unknown order spec '" + text + "'");
    }

    Kind kind() const noexcept { return kind_; }

    std::string label() const {
        switch (kind_) {
            case Kind::middle_eastern: return "ME";
            case Kind::far_eastern: return "FE";
            case Kind::seeded: return "seed:" + std::to_string(seed_);
            case Kind::explicit_cells: return "explicit";
        }
        return {};
    }

    AdmissibleOrder on(const SkewShape& shape) const {
        switch (kind_) {
            case Kind::middle_eastern: return middle_eastern(shape);
            case Kind::far_eastern: return far_eastern(shape);
            case Kind::seeded: return random_admissible_order(shape, seed_);
            case Kind::explicit_cells:
                if (!is_admissible(*fixed_, shape))
                    throw std::invalid_argument("order is not admissible on " + shape.to_string());
                return *fixed_;
        }
        return {};
    }

private:
    OrderSpec(Kind k, std::uint64_t seed, std::optional<AdmissibleOrder> fixed)
        : kind_(k), seed_(seed), fixed_(std::move(fixed)) {}

    Kind kind_;
    std::uint64_t seed_;
    std::optional<AdmissibleOrder> fixed_;
};

/// ME, FE, then `random` seeded orders with seeds base_seed+1, base_seed+2, ...
inline std::vector<OrderSpec> standard_orders(int random, std::uint64_t base_seed) {
    std::vector<OrderSpec> out{OrderSpec::me(), OrderSpec::fe()};
    for (int k = 1; k <= random; ++k) out.push_back(OrderSpec::seeded(base_seed + static_cast<std::uint64_t>(k)));
    return out;
}

/// (Y, W, Z) with W possibly skew.
struct Triple {
    Partition y;
    SkewShape w;
    Partition z;

    bool sizes_match() const {
        return static_cast<std::size_t>(y.size()) + w.size() == static_cast<std::size_t>(z.size());
    }
    /// r = max(#rows W, #rows Z).
    int rank() const {
        return static_cast<int>(std::max(w.outer().num_rows(), z.num_rows()));
    }
};

/// Every triple of (m,n)-hook diagrams with |Y| + |W| = |Z| <= max_size.
inline std::vector<Triple> hook_triples(int max_size, int m, int n) {
    std::vector<Triple> out;
    auto hooks = hook_partitions(max_size, m, n);
    for (const auto& z : hooks)
        for (const auto& y : hooks)
            for (const auto& w : hooks)
                if (y.size() + w.size() == z.size()) out.push_back({y, SkewShape(w), z});
    return out;
}

/// Proper skew shapes W (inner non-empty) inside a rows x cols box with
/// 1 <= |W| <= max_w, paired with every Y inside Z with |Y| + |W| = |Z| <= max_z.
inline std::vector<Triple> skew_triples(int box_rows, int box_cols, int max_w, int max_z) {
    std::vector<SkewShape> ws;
    auto box = partitions_in_box(box_rows, box_cols);
    for (const auto& outer : box)
        for (const auto& inner : box) {
            if (inner.empty() || !inner.contained_in(outer)) continue;
            int s = outer.size() - inner.size();
            if (s >= 1 && s <= max_w) ws.emplace_back(outer, inner);
        }
    std::vector<Partition> parts;
    for (int s = 0; s <= max_z; ++s)
        for (auto& p : partitions_of(s)) parts.push_back(std::move(p));
    std::vector<Triple> out;
    for (const auto& w : ws)
        for (const auto& z : parts)
            for (const auto& y : parts)
                if (static_cast<std::size_t>(y.size()) + w.size() == static_cast<std::size_t>(z.size()) &&
                    y.contained_in(z))
                    out.push_back({y, w, z});
    return out;
}

/// Results of the bijection checks for one triple under one order choice.
struct RoundTrip {
    std::size_t lr_glr = 0;         ///< |B(W)_Y^Z[A']|
    std::size_t pictures = 0;       ///< |P(W, Z/Y; A, A')|
    std::size_t lr_glmn = 0;        ///< |LR(Y,W)^Z[A']| (straight W only)
    std::size_t pictures_tilde = 0; ///< |P(Z/Y, W; A, A')| (straight W only)
    bool ok = true;
    std::string failure;
};

namespace detail {

template <typename T>
bool sorted_contains(const std::vector<T>& sorted, const T& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// Phi . Psi = id on `tableaux` and Psi . Phi = id on `pictures`, with each
/// map landing in the other set.
template <typename Phi, typename Psi>
bool check_inverse_pair(const std::vector<Tableau>& tableaux, const std::vector<Picture>& pictures,
                        Phi phi_map, Psi psi_map, std::string& failure, const char* tag) {
    for (const auto& t : tableaux) {
        Picture f;
        try {
            f = psi_map(t);
        } catch (const std::exception& e) {
            failure = std::string(tag) + ": psi rejected a member: " + e.what();
            return false;
        }
        if (!sorted_contains(pictures, f)) {
            failure = std::string(tag) + ": psi(T) is not an admissible picture";
            return false;
        }
        if (phi_map(f) != t) {
            failure = std::string(tag) + ": phi(psi(T)) != T";
            return false;
        }
    }
    for (const auto& f : pictures) {
        Tableau t = phi_map(f);
        if (!sorted_contains(tableaux, t)) {
            failure = std::string(tag) + ": phi(f) is not in the tableau set";
            return false;
        }
        if (psi_map(t) != f) {
            failure = std::string(tag) + ": psi(phi(f)) != f";
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Phi/Psi on B(W)_Y^Z[A'] vs P(W, Z/Y; A, A') and, for straight W, the tilde
/// pair on LR(Y,W)^Z[A'] vs P(Z/Y, W; A, A'). Orders are drawn from `spec`
/// per shape.
inline RoundTrip check_roundtrip(const Triple& t, const OrderSpec& spec) {
    RoundTrip rt;
    if (!t.sizes_match() || !t.y.contained_in(t.z)) return rt;
    SkewShape zy(t.z, t.y);
    const AdmissibleOrder on_w = spec.on(t.w);
    const AdmissibleOrder on_zy = spec.on(zy);

    auto b = enumerate_B_W_Y_Z(t.w, t.y, t.z, on_w, t.rank());
    auto p = enumerate_pictures(t.w, zy, on_zy, on_w);
    rt.lr_glr = b.size();
    rt.pictures = p.size();
    if (b.size() != p.size()) {
        rt.ok = false;
        rt.failure = "|B(W)_Y^Z| != |P(W,Z/Y)|";
        return rt;
    }
    const Partition& y = t.y;
    rt.ok = detail::check_inverse_pair(
        b, p, [](const Picture& f) { return phi(f); },
        [&y](const Tableau& x) { return psi(x, y); }, rt.failure, "gl(r)");
    if (!rt.ok || !t.w.is_straight()) return rt;

    const Partition& w = t.w.outer();
    auto lr = enumerate_LR(t.y, w, t.z, on_zy);
    auto pt = enumerate_pictures(zy, t.w, on_w, on_zy);
    rt.lr_glmn = lr.size();
    rt.pictures_tilde = pt.size();
    if (lr.size() != pt.size()) {
        rt.ok = false;
        rt.failure = "|LR(Y,W)^Z| != |P(Z/Y,W)|";
        return rt;
    }
    rt.ok = detail::check_inverse_pair(
        lr, pt, [](const Picture& f) { return phi_tilde(f); },
        [](const Tableau& q) { return psi_tilde(q); }, rt.failure, "gl(m,n)");
    return rt;
}

/// c, N and both picture counts under Middle Eastern orders.
struct CoefficientCheck {
    LrCoefficient coeff;
    std::size_t pictures = 0;
    std::size_t pictures_tilde = 0;

    bool ok() const noexcept {
        return coeff.c == coeff.n_super && coeff.c == pictures && coeff.c == pictures_tilde;
    }
};

inline CoefficientCheck check_coefficients(const Triple& t, int m, int n) {
    if (!t.w.is_straight()) throw std::invalid_argument("coefficient check needs a straight W");
    CoefficientCheck out;
    out.coeff = lr_coefficient(t.y, t.w.outer(), t.z, m, n);
    if (t.sizes_match() && t.y.contained_in(t.z)) {
        SkewShape zy(t.z, t.y);
        out.pictures = count_pictures(t.w, zy, middle_eastern(zy), middle_eastern(t.w));
        out.pictures_tilde = count_pictures(zy, t.w, middle_eastern(t.w), middle_eastern(zy));
    }
    return out;
}

/// Order-independence of B(W)_Y^Z[A] and LR(Y,W)^Z[A] across `specs`, plus
/// LR(Y,W)^Z[A] = B(Z/Y)_empty^W[A] for every A.
struct OrderIndependence {
    bool glr_same = true;
    bool glmn_same = true;
    bool set_identity = true;
    std::size_t c = 0;

    bool ok() const noexcept { return glr_same && glmn_same && set_identity; }
};

inline OrderIndependence check_order_independence(const Triple& t, const std::vector<OrderSpec>& specs) {
    OrderIndependence out;
    if (!t.sizes_match() || !t.y.contained_in(t.z)) return out;
    SkewShape zy(t.z, t.y);
    const int r = t.rank();
    std::optional<std::vector<Tableau>> first_b, first_lr;
    for (const auto& spec : specs) {
        auto b = enumerate_B_W_Y_Z(t.w, t.y, t.z, spec.on(t.w), r);
        if (!first_b) {
            first_b = b;
            out.c = b.size();
        } else if (b != *first_b) {
            out.glr_same = false;
        }
        if (!t.w.is_straight()) continue;
        auto order_zy = spec.on(zy);
        auto lr = enumerate_LR(t.y, t.w.outer(), t.z, order_zy);
        if (!first_lr)
            first_lr = lr;
        else if (lr != *first_lr)
            out.glmn_same = false;
        auto b_skew = enumerate_B_W_Y_Z(zy, Partition{}, t.w.outer(), order_zy, r);
        if (lr != b_skew) out.set_identity = false;
    }
    return out;
}

/// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, int jobs, Fn fn) {
    std::vector<R> out(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                if (failed) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace lrpic
