// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lrpic/crystal.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/verify.hpp"

using namespace lrpic;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

Tableau skew_rows(const SkewShape& s, std::vector<std::vector<int>> rows) {
    std::vector<std::vector<Entry>> er;
    for (const auto& r : rows) {
        er.emplace_back();
        for (int v : r) er.back().push_back(Entry::unbarred(v));
    }
    return Tableau::from_rows(s, er);
}

Outcome worked_example() {
    const Partition y{5, 2, 1}, w{3, 2, 2, 1}, z{6, 4, 2, 2, 2};
    const SkewShape zy(z, y);
    const std::vector<std::pair<Tableau, Tableau>> pairs{
        {skew_rows(zy, {{1}, {1, 1}, {2}, {2, 3}, {3, 4}}), Tableau::from_int_rows({{1, 2, 2}, {3, 4}, {4, 5}, {5}})},
        {skew_rows(zy, {{1}, {1, 2}, {2}, {1, 3}, {3, 4}}), Tableau::from_int_rows({{1, 2, 4}, {2, 3}, {4, 5}, {5}})},
        {skew_rows(zy, {{1}, {1, 2}, {1}, {2, 3}, {3, 4}}), Tableau::from_int_rows({{1, 2, 3}, {2, 4}, {4, 5}, {5}})},
    };
    auto lr = enumerate_LR(y, w, z, middle_eastern(zy));
    auto coeff = lr_coefficient(y, w, z, 3, 3);
    std::size_t matched = 0;
    for (const auto& [q, t] : pairs) {
        bool member = std::binary_search(lr.begin(), lr.end(), q);
        bool image = phi_hat(q, middle_eastern(zy), middle_eastern(SkewShape(w))) == t;
        matched += member && image ? 1 : 0;
    }
    Outcome o;
    o.pass = matched == 3 && lr.size() == 3 && coeff.r == 5 && coeff.c == 3 && coeff.n_super == 3;
    o.detail = std::to_string(matched) + "/3 pairs, |LR|=" + std::to_string(lr.size()) +
               ", r=" + std::to_string(coeff.r);
    return o;
}

Outcome coefficient_sweep(const std::vector<Triple>& triples) {
    auto res = parallel_map<CoefficientCheck>(triples.size(), jobs(),
                                              [&](std::size_t i) { return check_coefficients(triples[i], 2, 2); });
    std::size_t bad = 0, nonzero = 0;
    for (const auto& c : res) {
        bad += c.ok() ? 0 : 1;
        nonzero += c.coeff.c ? 1 : 0;
    }
    return {bad == 0, std::to_string(triples.size()) + " triples, " + std::to_string(nonzero) + " nonzero, " +
                          std::to_string(bad) + " mismatches"};
}

Outcome roundtrip_sweep(const std::vector<Triple>& triples, std::uint64_t base_seed) {
    struct Tally {
        std::size_t elements = 0;
        std::string failure;
    };
    auto specs = standard_orders(3, base_seed);
    auto res = parallel_map<Tally>(triples.size(), jobs(), [&](std::size_t i) {
        Tally tally;
        for (const auto& spec : specs) {
            auto rt = check_roundtrip(triples[i], spec);
            tally.elements += rt.lr_glr + rt.pictures + rt.lr_glmn + rt.pictures_tilde;
            if (!rt.ok) {
                tally.failure = triples[i].y.to_string() + " " + triples[i].w.to_string() + " " +
                                triples[i].z.to_string() + " " + spec.label() + ": " + rt.failure;
                break;
            }
        }
        return tally;
    });
    std::size_t bad = 0, elements = 0;
    std::string first;
    for (const auto& t : res) {
        elements += t.elements;
        if (!t.failure.empty()) {
            if (!bad) first = t.failure;
            ++bad;
        }
    }
    return {bad == 0 && elements > 0,
            std::to_string(triples.size()) + " triples x " + std::to_string(specs.size()) + " orders, " +
                std::to_string(elements) + " elements mapped, " + std::to_string(bad) + " failures" +
                (first.empty() ? "" : " (" + first + ")")};
}

std::vector<OrderIndependence> order_sweep(const std::vector<Triple>& triples) {
    auto specs = standard_orders(5, 100);
    return parallel_map<OrderIndependence>(triples.size(), jobs(),
                                           [&](std::size_t i) { return check_order_independence(triples[i], specs); });
}

Outcome decompositions() {
    std::vector<Partition> glr;
    for (int s = 0; s <= 4; ++s)
        for (const auto& p : partitions_of(s))
            if (p.num_rows() <= 3) glr.push_back(p);
    std::size_t runs = 0, bad = 0;
    for (const auto& y : glr)
        for (const auto& w : glr) {
            ++runs;
            bad += verify_decomposition_glr(y, w, 3).pass ? 0 : 1;
        }
    for (int mn : {1, 2}) {
        auto hooks = hook_partitions(4, mn, mn);
        for (const auto& y : hooks)
            for (const auto& w : hooks) {
                ++runs;
                bad += verify_decomposition_glmn(y, w, mn, mn).pass ? 0 : 1;
            }
    }
    return {bad == 0, std::to_string(runs) + " decompositions, " + std::to_string(bad) + " failures"};
}

Outcome lattice_words() {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> letter(1, 5), len(0, 10);
    std::size_t bad = 0, lattice = 0;
    for (int k = 0; k < 10000; ++k) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (int& x : w) x = letter(rng);
        bool a = is_lattice_permutation(w);
        bool b = static_cast<bool>(add_boxes(Partition{}, w));
        bool c = is_highest_weight(TensorWord(w, 5));
        bad += a == b && b == c ? 0 : 1;
        lattice += a ? 1 : 0;
    }
    return {bad == 0, "10000 words, " + std::to_string(lattice) + " lattice, " + std::to_string(bad) + " disagreements"};
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const char* name, const std::function<Outcome()>& body) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
        return secs;
    };

    double t1 = run(1, "worked example", [] { return worked_example(); });
    if (t1 >= 10.0) {
        std::printf("[FAIL] 1 worked example exceeded 10s\n");
        ++failures;
    }

    const auto triples8 = hook_triples(8, 2, 2);
    run(2, "coefficient identity c = N = |P| (|Z| <= 8)", [&] { return coefficient_sweep(triples8); });
    run(3, "bijection round trips (|Z| <= 8, ME, FE, 3 seeded)", [&] { return roundtrip_sweep(triples8, 7); });

    const auto triples7 = hook_triples(7, 2, 2);
    std::vector<OrderIndependence> oi;
    run(4, "order independence (|Z| <= 7, ME, FE, 5 seeded)", [&] {
        oi = order_sweep(triples7);
        std::size_t bad = 0;
        for (const auto& r : oi) bad += r.glr_same && r.glmn_same ? 0 : 1;
        return Outcome{bad == 0, std::to_string(oi.size()) + " triples, " + std::to_string(bad) + " failures"};
    });
    run(5, "set identity LR = B(Z/Y) (|Z| <= 7)", [&] {
        std::size_t bad = 0;
        for (const auto& r : oi) bad += r.set_identity ? 0 : 1;
        return Outcome{!oi.empty() && bad == 0, std::to_string(oi.size()) + " triples, " + std::to_string(bad) + " failures"};
    });
    run(6, "tensor product decompositions", [] { return decompositions(); });
    run(7, "lattice word characterization", [] { return lattice_words(); });
    run(8, "skew W round trips (3x3 box, |W| <= 5)", [] { return roundtrip_sweep(skew_triples(3, 3, 5, 8), 7); });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
