#include <gtest/gtest.h>

#include "lrpic/lr.hpp"
#include "lrpic/verify.hpp"
#include "oracles.hpp"

using namespace lrpic;

namespace {

Entry e(int k) { return Entry::unbarred(k); }

const Partition kY{5, 2, 1};
const Partition kW{3, 2, 2, 1};
const Partition kZ{6, 4, 2, 2, 2};
const SkewShape kZY(kZ, kY);

Tableau lr_tableau(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<Entry>> er;
    for (const auto& r : rows) {
        er.emplace_back();
        for (int v : r) er.back().push_back(e(v));
    }
    return Tableau::from_rows(kZY, er);
}

// The three gl(3,3) LR tableaux of the worked example and their gl(5) partners.
Tableau q1() { return lr_tableau({{1}, {1, 1}, {2}, {2, 3}, {3, 4}}); }
Tableau q2() { return lr_tableau({{1}, {1, 2}, {2}, {1, 3}, {3, 4}}); }
Tableau q3() { return lr_tableau({{1}, {1, 2}, {1}, {2, 3}, {3, 4}}); }
Tableau t1() { return Tableau::from_int_rows({{1, 2, 2}, {3, 4}, {4, 5}, {5}}); }
Tableau t2() { return Tableau::from_int_rows({{1, 2, 4}, {2, 3}, {4, 5}, {5}}); }
Tableau t3() { return Tableau::from_int_rows({{1, 2, 3}, {2, 4}, {4, 5}, {5}}); }

std::vector<Cell> seq(const AdmissibleOrder& o) { return {o.sequence().begin(), o.sequence().end()}; }

}  // namespace

TEST(Lr, MembershipGlr) {
    SkewShape ws(kW);
    EXPECT_TRUE(is_lr_member_glr(t1(), kY, kZ, middle_eastern(ws)));
    EXPECT_TRUE(is_lr_member_glr(t1(), kY, kZ, far_eastern(ws)));
    auto starts_with_two = Tableau::from_int_rows({{2}});
    EXPECT_FALSE(is_lr_member_glr(starts_with_two, Partition{}, Partition{1},
                                  middle_eastern(starts_with_two.shape())));
    EXPECT_TRUE(is_lr_member_glr(Tableau(), Partition{}, Partition{}, AdmissibleOrder()));
    EXPECT_FALSE(is_lr_member_glr(t1(), kY, Partition{6, 4, 2, 2, 1, 1}, middle_eastern(ws)));
}

TEST(Lr, EnumerateBContainsWorkedExample) {
    SkewShape ws(kW);
    auto b = enumerate_B_W_Y_Z(ws, kY, kZ, middle_eastern(ws), 5);
    ASSERT_EQ(b.size(), 3u);
    for (const auto& t : {t1(), t2(), t3()}) EXPECT_TRUE(std::binary_search(b.begin(), b.end(), t));
    EXPECT_TRUE(enumerate_B_W_Y_Z(ws, kY, Partition{6, 4, 2, 2}, middle_eastern(ws), 5).empty());
}

// Independent route for the count: every bijection W -> Z/Y (8! of them)
// checked directly against the admissible-picture definition.
TEST(Lr, WorkedExampleCountMatchesBruteForcePictures) {
    SkewShape ws(kW);
    auto pics = oracle::pictures(cells(ws), cells(kZY), seq(middle_eastern(kZY)), seq(middle_eastern(ws)));
    EXPECT_EQ(pics.size(), 3u);
    EXPECT_EQ(enumerate_B_W_Y_Z(ws, kY, kZ, middle_eastern(ws), 5).size(), pics.size());
    EXPECT_EQ(enumerate_LR(kY, kW, kZ, middle_eastern(kZY)).size(), pics.size());
}

TEST(Lr, LrTableauGlmn) {
    auto me = middle_eastern(kZY);
    EXPECT_TRUE(is_lr_tableau_glmn(q1(), kY, kW, kZ, me));
    EXPECT_TRUE(is_lr_tableau_glmn(q2(), kY, kW, kZ, me));
    EXPECT_TRUE(is_lr_tableau_glmn(q3(), kY, kW, kZ, me));
    auto wrong_content = lr_tableau({{1}, {1, 1}, {2}, {2, 3}, {3, 3}});
    EXPECT_FALSE(is_lr_tableau_glmn(wrong_content, kY, kW, kZ, me));
    auto not_lattice = lr_tableau({{1}, {1, 2}, {1}, {2, 3}, {4, 3}});
    EXPECT_FALSE(is_lr_tableau_glmn(not_lattice, kY, kW, kZ, me));
    SkewShape empty(Partition{2, 1}, Partition{2, 1});
    EXPECT_TRUE(is_lr_tableau_glmn(Tableau(empty, {}), Partition{2, 1}, Partition{}, Partition{2, 1},
                                   AdmissibleOrder()));
}

TEST(Lr, EnumerateLr) {
    auto lr = enumerate_LR(kY, kW, kZ, middle_eastern(kZY));
    ASSERT_EQ(lr.size(), 3u);
    for (const auto& q : {q1(), q2(), q3()}) EXPECT_TRUE(std::binary_search(lr.begin(), lr.end(), q));

    auto single = enumerate_LR(Partition{1}, Partition{1}, Partition{2},
                               middle_eastern(SkewShape(Partition{2}, Partition{1})));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].at({1, 2}), e(1));
    EXPECT_TRUE(enumerate_LR(Partition{1}, Partition{1}, Partition{3}, AdmissibleOrder()).empty());
}

TEST(Lr, PhiOfWorkedPicture) {
    SkewShape x(Partition{2, 2});
    SkewShape y(Partition{4, 3}, Partition{2, 1});
    auto f = Picture::from_map(x, y, {{{1, 1}, {1, 4}}, {{1, 2}, {1, 3}}, {{2, 1}, {2, 3}}, {{2, 2}, {2, 2}}});
    EXPECT_EQ(phi(f), Tableau::from_int_rows({{1, 1}, {2, 2}}));
    EXPECT_EQ(phi(Picture()), Tableau());
    EXPECT_EQ(phi_tilde(Picture()), Tableau());
}

TEST(Lr, PsiOfWorkedTableau) {
    auto f = psi(t1(), kY);
    EXPECT_EQ(f.codomain(), kZY);
    EXPECT_EQ(f.forward({1, 1}), (Cell{1, 6}));
    EXPECT_EQ(f.forward({1, 2}), (Cell{2, 4}));
    auto single = psi(Tableau::from_int_rows({{2}}), Partition{3, 1});
    EXPECT_EQ(single.forward({1, 1}), (Cell{2, 2}));
}

TEST(Lr, PsiTildeOfWorkedTableau) {
    auto f = psi_tilde(q1());
    EXPECT_EQ(f.codomain(), SkewShape(kW));
    EXPECT_EQ(f.forward({1, 6}), (Cell{1, 1}));
    EXPECT_EQ(f.forward({2, 3}), (Cell{1, 3}));
    EXPECT_EQ(f.forward({2, 4}), (Cell{1, 2}));
    EXPECT_EQ(phi_tilde(f), q1());
}

TEST(Lr, PhiHatWorkedExample) {
    EXPECT_EQ(phi_hat(q1()), t1());
    EXPECT_EQ(phi_hat(q2()), t2());
    EXPECT_EQ(phi_hat(q3()), t3());
    auto me_zy = middle_eastern(kZY);
    auto me_w = middle_eastern(SkewShape(kW));
    EXPECT_EQ(phi_hat(q1(), me_zy, me_w), t1());
}

TEST(Lr, CheckedMapsRejectOutsiders) {
    SkewShape ws(kW);
    OrderPair orders{middle_eastern(kZY), middle_eastern(ws)};
    EXPECT_NO_THROW(psi(t1(), kY, orders));
    // Over the empty diagram the ME word 2,2,1,... is not a lattice word.
    EXPECT_THROW(psi(t1(), Partition{}, orders), VerificationError);
    // Content (1,2) is not a partition: psi_tilde has no straight codomain.
    auto q_bad = Tableau::from_rows(SkewShape(Partition{3}), {{e(1), e(2), e(2)}});
    EXPECT_THROW(psi_tilde(q_bad), std::invalid_argument);
    EXPECT_THROW(psi_tilde(q_bad, OrderPair{}), VerificationError);
    EXPECT_THROW(phi_hat(q_bad, AdmissibleOrder(), AdmissibleOrder()), VerificationError);
}

TEST(Lr, Coefficients) {
    auto a = lr_coefficient(Partition{1}, Partition{1}, Partition{2}, 1, 1);
    EXPECT_EQ(a.c, 1u);
    EXPECT_EQ(a.n_super, 1u);
    auto b = lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}, 1, 1);
    EXPECT_EQ(b.c, 1u);
    EXPECT_EQ(b.n_super, 1u);
    auto ex = lr_coefficient(kY, kW, kZ, 3, 3);
    EXPECT_EQ(ex.r, 5);
    EXPECT_EQ(ex.c, 3u);
    EXPECT_EQ(ex.n_super, 3u);
    auto mismatch = lr_coefficient(Partition{1}, Partition{1}, Partition{3}, 1, 1);
    EXPECT_EQ(mismatch.c, 0u);
    EXPECT_EQ(mismatch.n_super, 0u);
    EXPECT_THROW(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{3, 2}, 1, 1), std::invalid_argument);
}

// c(2,1),(2,1) -> (3,2,1) = 2 is the smallest coefficient above one.
TEST(Lr, KnownCoefficientTwo) {
    auto c = lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3, 3);
    EXPECT_EQ(c.c, 2u);
    EXPECT_EQ(c.n_super, 2u);
}

// Property: lattice words are exactly the words that grow the empty diagram.
TEST(LrProperty, LatticeIffGrowsFromEmpty) {
    for (int len = 0; len <= 6; ++len) {
        std::vector<int> w(static_cast<std::size_t>(len), 1);
        while (true) {
            ASSERT_EQ(is_lattice_permutation(w), static_cast<bool>(add_boxes(Partition{}, w)));
            ASSERT_EQ(is_lattice_permutation(w), oracle::lattice(w));
            std::size_t i = w.size();
            while (i > 0 && w[i - 1] == 4) w[--i] = 1;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
}

// Round trips of both bijection pairs on small triples and orders.
TEST(LrProperty, RoundTripsSmallTriples) {
    std::size_t nonzero = 0;
    for (const auto& t : hook_triples(5, 2, 2))
        for (const auto& spec : standard_orders(2, 11)) {
            auto rt = check_roundtrip(t, spec);
            ASSERT_TRUE(rt.ok) << rt.failure;
            ASSERT_EQ(rt.lr_glr, rt.lr_glmn);
            nonzero += rt.lr_glr ? 1 : 0;
        }
    EXPECT_GT(nonzero, 100u);
}

TEST(LrProperty, SetIdentityAndOrderIndependenceSmall) {
    for (const auto& t : hook_triples(5, 2, 2)) {
        auto oi = check_order_independence(t, standard_orders(3, 5));
        ASSERT_TRUE(oi.ok()) << t.y.to_string() << " " << t.w.to_string() << " " << t.z.to_string();
    }
}
