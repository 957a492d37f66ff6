// lrpic: enumerate, map and verify LR tableaux and admissible pictures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrpic/io.hpp"
#include "lrpic/lrpic.hpp"

namespace {

using lrpic::io::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) { return lrpic::io::parse(read_file(path), path); }

/// ME | FE | seed:<n> | @file.json
lrpic::OrderSpec parse_order(const std::string& text) {
    if (!text.empty() && text[0] == '@')
        return lrpic::OrderSpec::fixed(lrpic::io::order_from_json(read_json(text.substr(1))));
    return lrpic::OrderSpec::parse(text);
}

/// Comma list of ME | FE | seed:<n> | random:<k>; random:<k> expands to k
/// seeded orders with seeds base+1..base+k.
std::vector<lrpic::OrderSpec> parse_order_list(const std::string& text, std::uint64_t base_seed) {
    std::vector<lrpic::OrderSpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("random:", 0) == 0) {
            int k = std::stoi(item.substr(7));
            for (int i = 1; i <= k; ++i)
                out.push_back(lrpic::OrderSpec::seeded(base_seed + static_cast<std::uint64_t>(i)));
        } else {
            out.push_back(lrpic::OrderSpec::parse(item));
        }
    }
    if (out.empty()) throw UsageError("empty order list");
    return out;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Json triple_json(const lrpic::Triple& t) {
    Json j;
    j["y"] = lrpic::io::to_json(t.y);
    if (t.w.is_straight())
        j["w"] = lrpic::io::to_json(t.w.outer());
    else
        j["w"] = lrpic::io::to_json(t.w);
    j["z"] = lrpic::io::to_json(t.z);
    return j;
}

struct Options {
    std::string y, w, z, shape;
    int m = 2, n = 2;
    int max_entry = 0;
    std::string order = "ME", order2 = "ME";
    std::string input;
    bool tilde = false;
    bool count_only = false;
    bool fast = false;
    int max_size = 4;
    std::string orders;
    std::uint64_t seed = 0;
    int jobs = 1;
    int r = 3;
    bool skew_w = false;
    std::string render = "ascii";
};

lrpic::Partition need_partition(const std::string& text, const char* flag) {
    try {
        return lrpic::io::parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

// ---- coeff -----------------------------------------------------------------

int run_coeff(const Options& o) {
    auto y = need_partition(o.y, "--y");
    auto w = need_partition(o.w, "--w");
    auto z = need_partition(o.z, "--z");
    for (const auto* p : {&y, &w, &z})
        if (!lrpic::is_hook(*p, o.m, o.n))
            throw UsageError("(" + p->to_string() + ") is not an (" + std::to_string(o.m) + "," +
                             std::to_string(o.n) + ")-hook diagram");
    auto spec = parse_order(o.order);
    lrpic::SkewShape ws(w);
    const int r = lrpic::glr_rank(w, z);
    std::size_t c = 0, n_super = 0, pictures = 0;
    if (y.size() + w.size() == z.size() && y.contained_in(z)) {
        lrpic::SkewShape zy(z, y);
        auto on_w = spec.on(ws);
        auto on_zy = spec.on(zy);
        c = lrpic::enumerate_B_W_Y_Z(ws, y, z, on_w, r).size();
        n_super = lrpic::enumerate_LR(y, w, z, on_zy).size();
        pictures = lrpic::count_pictures(ws, zy, on_zy, on_w);
    }
    Json j = triple_json({y, ws, z});
    j["m"] = o.m;
    j["n"] = o.n;
    j["order"] = spec.label();
    j["r"] = r;
    j["c"] = c;
    j["n_super"] = n_super;
    j["pictures"] = pictures;
    j["equal"] = c == n_super && c == pictures;
    emit(j);
    return c == n_super && c == pictures ? kOk : kVerifyFailed;
}

// ---- enumerate ---------------------------------------------------------------

template <typename Range>
int emit_all(const Range& items, bool count_only) {
    if (count_only) {
        emit(Json{{"count", items.size()}});
        return kOk;
    }
    for (const auto& x : items) emit(lrpic::io::to_json(x));
    return kOk;
}

lrpic::SkewShape need_shape(const std::string& text, const char* flag) {
    try {
        return lrpic::io::parse_shape(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

int run_enumerate(const std::string& what, const Options& o) {
    if (what == "ssyt") {
        if (o.max_entry < 1) throw UsageError("--max-entry must be positive");
        return emit_all(lrpic::enumerate_ssyt(need_shape(o.shape, "--shape"), o.max_entry), o.count_only);
    }
    if (what == "glmn")
        return emit_all(lrpic::enumerate_glmn(need_shape(o.shape, "--shape"), o.m, o.n), o.count_only);

    auto y = need_partition(o.y, "--y");
    auto z = need_partition(o.z, "--z");
    auto w = need_shape(o.w, "--w");
    if (what == "lr") {
        if (!w.is_straight()) throw UsageError("--w must be a straight shape for lr");
        if (!y.contained_in(z)) return emit_all(std::vector<lrpic::Tableau>{}, o.count_only);
        auto order = parse_order(o.order).on(lrpic::SkewShape(z, y));
        return emit_all(lrpic::enumerate_LR(y, w.outer(), z, order), o.count_only);
    }
    if (what == "lrglr") {
        int r = o.max_entry > 0 ? o.max_entry
                                : static_cast<int>(std::max(w.outer().num_rows(), z.num_rows()));
        auto order = parse_order(o.order).on(w);
        return emit_all(lrpic::enumerate_B_W_Y_Z(w, y, z, order, r), o.count_only);
    }
    if (what == "pictures") {
        if (!y.contained_in(z)) return emit_all(std::vector<lrpic::Picture>{}, o.count_only);
        lrpic::SkewShape zy(z, y);
        const lrpic::SkewShape& dom = o.tilde ? zy : w;
        const lrpic::SkewShape& cod = o.tilde ? w : zy;
        auto a = parse_order(o.order).on(cod);
        auto a_prime = parse_order(o.order2).on(dom);
        return emit_all(lrpic::enumerate_pictures(dom, cod, a, a_prime), o.count_only);
    }
    throw UsageError("unknown enumerate target " + what);
}

// ---- map -------------------------------------------------------------------

void check_shape(const lrpic::SkewShape& got, const std::optional<lrpic::SkewShape>& want,
                 const char* what) {
    if (want && got != *want)
        throw UsageError(std::string(what) + " has shape " + got.to_string() + ", expected " +
                         want->to_string());
}

/// Runs an unchecked map whose precondition failures count as verification failures.
template <typename Fn>
auto verified(const char* what, Fn fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        throw lrpic::VerificationError(std::string(what) + ": " + e.what());
    }
}

int run_map(const std::string& what, const Options& o) {
    std::optional<lrpic::Partition> y, z;
    std::optional<lrpic::SkewShape> w;
    if (!o.y.empty()) y = need_partition(o.y, "--y");
    if (!o.z.empty()) z = need_partition(o.z, "--z");
    if (!o.w.empty()) w = need_shape(o.w, "--w");
    std::optional<lrpic::SkewShape> zy;
    if (y && z) {
        if (!y->contained_in(*z)) throw UsageError("--y is not contained in --z");
        zy = lrpic::SkewShape(*z, *y);
    }
    const auto spec_a = parse_order(o.order);
    const auto spec_a2 = parse_order(o.order2);
    Json doc = read_json(o.input);

    // For a picture X -> Y, `a` orders Y and `a_prime` orders X.
    auto orders_for = [&](const lrpic::SkewShape& x, const lrpic::SkewShape& yy) {
        return lrpic::OrderPair{spec_a.on(yy), spec_a2.on(x)};
    };

    if (what == "phi" || what == "phitilde") {
        auto p = lrpic::io::picture_from_json(doc);
        check_shape(p.domain(), what == "phi" ? w : zy, "picture domain");
        check_shape(p.codomain(), what == "phi" ? zy : w, "picture codomain");
        lrpic::Tableau t;
        if (o.fast)
            t = lrpic::phi(p);
        else if (what == "phi")
            t = lrpic::phi(p, orders_for(p.domain(), p.codomain()));
        else
            t = lrpic::phi_tilde(p, orders_for(p.domain(), p.codomain()));
        emit(lrpic::io::to_json(t));
        return kOk;
    }
    if (what == "psi") {
        if (!y) throw UsageError("psi needs --y");
        auto t = lrpic::io::tableau_from_json(doc);
        check_shape(t.shape(), w, "tableau");
        auto p = o.fast ? lrpic::psi(t, *y) : [&] {
            auto f = verified("psi", [&] { return lrpic::psi(t, *y); });
            return lrpic::psi(t, *y, orders_for(f.domain(), f.codomain()));
        }();
        check_shape(p.codomain(), zy, "picture codomain");
        emit(lrpic::io::to_json(p));
        return kOk;
    }
    if (what == "psitilde") {
        auto q = lrpic::io::tableau_from_json(doc);
        check_shape(q.shape(), zy, "tableau");
        auto p = o.fast ? lrpic::psi_tilde(q) : [&] {
            auto f = verified("psi_tilde", [&] { return lrpic::psi_tilde(q); });
            return lrpic::psi_tilde(q, orders_for(f.domain(), f.codomain()));
        }();
        check_shape(p.codomain(), w, "picture codomain");
        emit(lrpic::io::to_json(p));
        return kOk;
    }
    if (what == "phihat") {
        auto q = lrpic::io::tableau_from_json(doc);
        check_shape(q.shape(), zy, "tableau");
        lrpic::Tableau t;
        if (o.fast) {
            t = lrpic::phi_hat(q);
        } else {
            auto wshape = verified("phi_hat", [&] { return lrpic::psi_tilde(q); }).codomain();
            t = lrpic::phi_hat(q, spec_a2.on(q.shape()), spec_a.on(wshape));
        }
        check_shape(t.shape(), w, "result");
        emit(lrpic::io::to_json(t));
        return kOk;
    }
    if (what == "omega") {
        auto p = lrpic::io::picture_from_json(doc);
        if (!o.fast) {
            auto ord = orders_for(p.domain(), p.codomain());
            if (!lrpic::is_admissible_picture(p, ord.a, ord.a_prime))
                throw lrpic::VerificationError("omega: input is not an (A,A')-admissible picture");
            auto inv = lrpic::omega(p);
            if (!lrpic::is_admissible_picture(inv, ord.a_prime, ord.a))
                throw lrpic::VerificationError("omega: result is not an (A',A)-admissible picture");
        }
        emit(lrpic::io::to_json(lrpic::omega(p)));
        return kOk;
    }
    throw UsageError("unknown map " + what);
}

// ---- verify ----------------------------------------------------------------

int finish(std::size_t records, std::size_t failures) {
    std::cerr << records << " records, " << failures << " failures\n";
    return failures ? kVerifyFailed : kOk;
}

int run_verify(const std::string& what, const Options& o) {
    if (o.max_size < 0) throw UsageError("--max-size must be non-negative");
    if (what == "decomposition-glr" || what == "decomposition-glmn") {
        const bool glr = what == "decomposition-glr";
        std::vector<lrpic::Partition> parts;
        for (int s = 0; s <= o.max_size; ++s)
            for (auto& p : lrpic::partitions_of(s))
                if (glr ? static_cast<int>(p.num_rows()) <= o.r : lrpic::is_hook(p, o.m, o.n))
                    parts.push_back(std::move(p));
        std::vector<std::pair<lrpic::Partition, lrpic::Partition>> pairs;
        for (const auto& a : parts)
            for (const auto& b : parts) pairs.emplace_back(a, b);
        auto reps = lrpic::parallel_map<lrpic::DecompositionReport>(pairs.size(), o.jobs, [&](std::size_t i) {
            return glr ? lrpic::verify_decomposition_glr(pairs[i].first, pairs[i].second, o.r)
                       : lrpic::verify_decomposition_glmn(pairs[i].first, pairs[i].second, o.m, o.n);
        });
        std::size_t failures = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            Json j;
            j["y"] = lrpic::io::to_json(pairs[i].first);
            j["w"] = lrpic::io::to_json(pairs[i].second);
            if (glr) {
                j["r"] = o.r;
            } else {
                j["m"] = o.m;
                j["n"] = o.n;
            }
            j.update(lrpic::io::to_json(reps[i]));
            emit(j);
            failures += reps[i].pass ? 0 : 1;
        }
        return finish(pairs.size(), failures);
    }

    std::vector<lrpic::Triple> triples =
        o.skew_w ? lrpic::skew_triples(3, 3, 5, o.max_size) : lrpic::hook_triples(o.max_size, o.m, o.n);
    auto base = [&](const lrpic::Triple& t) {
        Json j = triple_json(t);
        if (o.skew_w) {
            j["m"] = nullptr;
            j["n"] = nullptr;
        } else {
            j["m"] = o.m;
            j["n"] = o.n;
        }
        return j;
    };

    if (what == "coefficients") {
        if (o.skew_w) throw UsageError("coefficients needs straight W");
        auto res = lrpic::parallel_map<lrpic::CoefficientCheck>(triples.size(), o.jobs, [&](std::size_t i) {
            return lrpic::check_coefficients(triples[i], o.m, o.n);
        });
        std::size_t failures = 0;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            Json j = base(triples[i]);
            j["order"] = "ME";
            j["c"] = res[i].coeff.c;
            j["n_super"] = res[i].coeff.n_super;
            j["pictures"] = res[i].pictures;
            j["pictures_tilde"] = res[i].pictures_tilde;
            j["equal"] = res[i].ok();
            emit(j);
            failures += res[i].ok() ? 0 : 1;
        }
        return finish(triples.size(), failures);
    }
    if (what == "roundtrip") {
        auto specs = parse_order_list(o.orders.empty() ? "ME,FE" : o.orders, o.seed);
        const std::size_t k = specs.size();
        auto res = lrpic::parallel_map<lrpic::RoundTrip>(triples.size() * k, o.jobs, [&](std::size_t i) {
            return lrpic::check_roundtrip(triples[i / k], specs[i % k]);
        });
        std::size_t failures = 0;
        for (std::size_t i = 0; i < res.size(); ++i) {
            Json j = base(triples[i / k]);
            j["order"] = specs[i % k].label();
            j["c"] = res[i].lr_glr;
            j["pictures"] = res[i].pictures;
            if (triples[i / k].w.is_straight()) {
                j["n_super"] = res[i].lr_glmn;
                j["pictures_tilde"] = res[i].pictures_tilde;
            }
            j["roundtrip_ok"] = res[i].ok;
            if (!res[i].ok) j["failure"] = res[i].failure;
            emit(j);
            failures += res[i].ok ? 0 : 1;
        }
        return finish(res.size(), failures);
    }
    if (what == "order-independence") {
        auto specs = parse_order_list(o.orders.empty() ? "ME,FE,random:5" : o.orders, o.seed);
        std::string label;
        for (const auto& s : specs) label += (label.empty() ? "" : ",") + s.label();
        auto res = lrpic::parallel_map<lrpic::OrderIndependence>(triples.size(), o.jobs, [&](std::size_t i) {
            return lrpic::check_order_independence(triples[i], specs);
        });
        std::size_t failures = 0;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            Json j = base(triples[i]);
            j["order"] = label;
            j["c"] = res[i].c;
            j["order_independent"] = res[i].glr_same && res[i].glmn_same;
            j["set_identity"] = res[i].set_identity;
            emit(j);
            failures += res[i].ok() ? 0 : 1;
        }
        return finish(triples.size(), failures);
    }
    throw UsageError("unknown verify target " + what);
}

// ---- render ----------------------------------------------------------------

int run_render(const Options& o) {
    auto t = lrpic::io::tableau_from_json(read_json(o.input));
    if (o.render != "ascii" && o.render != "unicode") throw UsageError("--render must be ascii or unicode");
    std::cout << lrpic::io::render(t, o.render == "ascii" ? lrpic::io::RenderMode::ascii
                                                          : lrpic::io::RenderMode::unicode);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littlewood-Richardson tableaux and admissible pictures"};
    app.require_subcommand(1);
    Options o;

    auto add_triple = [&](CLI::App* sub, bool required) {
        auto* y = sub->add_option("--y", o.y, "partition Y, e.g. 5,2,1");
        auto* w = sub->add_option("--w", o.w, "shape W, e.g. 3,2,2,1 or 3,3/1");
        auto* z = sub->add_option("--z", o.z, "partition Z");
        if (required) {
            y->required();
            w->required();
            z->required();
        }
    };

    auto* coeff = app.add_subcommand("coeff", "c and N for one triple");
    add_triple(coeff, true);
    coeff->add_option("--m", o.m)->required();
    coeff->add_option("--n", o.n)->required();
    coeff->add_option("--order", o.order, "ME | FE | seed:<n> | @file.json");

    auto* enumerate = app.add_subcommand("enumerate", "list tableaux or pictures as JSON lines");
    std::string enum_what;
    enumerate->add_option("what", enum_what, "ssyt | glmn | lr | lrglr | pictures")
        ->required()
        ->check(CLI::IsMember({"ssyt", "glmn", "lr", "lrglr", "pictures"}));
    enumerate->add_option("--shape", o.shape, "shape for ssyt/glmn, e.g. 4,3/2,1");
    add_triple(enumerate, false);
    enumerate->add_option("--m", o.m);
    enumerate->add_option("--n", o.n);
    enumerate->add_option("--max-entry", o.max_entry);
    enumerate->add_option("--order", o.order, "order on the codomain (pictures) or the tableau shape");
    enumerate->add_option("--order2", o.order2, "order on the picture domain");
    enumerate->add_flag("--tilde", o.tilde, "pictures Z/Y -> W instead of W -> Z/Y");
    enumerate->add_flag("--count", o.count_only, "print only the number of results");

    auto* map = app.add_subcommand("map", "apply one of the bijections to a JSON input");
    std::string map_what;
    map->add_option("what", map_what, "phi | psi | phitilde | psitilde | phihat | omega")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "phitilde", "psitilde", "phihat", "omega"}));
    add_triple(map, false);
    map->add_option("--input", o.input, "JSON file, - for stdin")->required();
    map->add_option("--order", o.order, "order A (picture codomain; W for phihat)");
    map->add_option("--order2", o.order2, "order A' (picture domain; Z/Y for phihat)");
    map->add_flag("--fast", o.fast, "skip membership checks");

    auto* verify = app.add_subcommand("verify", "exhaustive checks, one JSON line per case");
    std::string verify_what;
    verify->add_option("what", verify_what)
        ->required()
        ->check(CLI::IsMember({"roundtrip", "order-independence", "coefficients", "decomposition-glr",
                               "decomposition-glmn"}));
    verify->add_option("--max-size", o.max_size)->required();
    verify->add_option("--orders", o.orders, "comma list of ME, FE, seed:<n>, random:<k>");
    verify->add_option("--seed", o.seed, "base seed for random:<k>");
    verify->add_option("--jobs", o.jobs);
    verify->add_option("--m", o.m);
    verify->add_option("--n", o.n);
    verify->add_option("--r", o.r, "rank for decomposition-glr");
    verify->add_flag("--skew-w", o.skew_w, "roundtrip over skew W inside a 3x3 box");

    auto* render = app.add_subcommand("render", "draw a tableau");
    render->add_option("--input", o.input)->required();
    render->add_option("--render", o.render, "ascii | unicode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*coeff) return run_coeff(o);
        if (*enumerate) return run_enumerate(enum_what, o);
        if (*map) return run_map(map_what, o);
        if (*verify) return run_verify(verify_what, o);
        if (*render) return run_render(o);
    } catch (const lrpic::VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
