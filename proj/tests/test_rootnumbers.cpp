#include <gtest/gtest.h>

#include "weilrep/errors.hpp"
#include "weilrep/rootnumbers.hpp"

using namespace weilrep;

namespace {

const Cyclotomic kI = Cyclotomic::root_of_unity(4);

std::vector<QuadCharDatum> all_data() {
    return {QuadCharDatum{true, 1}, QuadCharDatum{true, -1}, QuadCharDatum{false, 1}, QuadCharDatum{false, -1}};
}

}  // namespace

TEST(RootNumbers, ChiSquared) {
    EXPECT_EQ(w_chi_squared(QuadCharDatum::make(true, 1)), Cyclotomic(1));
    EXPECT_EQ(w_chi_squared(QuadCharDatum::make(false, -1)), Cyclotomic(-1));
    EXPECT_EQ(w_chi_squared(QuadCharDatum::make(false, 1)), Cyclotomic(1));
    EXPECT_THROW(QuadCharDatum::make(true, -1), DomainError);
    EXPECT_THROW(QuadCharDatum::make(false, 0), DomainError);
}

TEST(RootNumbers, TwistedComponents) {
    TwistData d = genus2_twist_data();
    QuadCharDatum even = QuadCharDatum::make(false, 1);
    QuadCharDatum odd = QuadCharDatum::make(false, -1);
    EXPECT_EQ(twisted_root_number(d.first, even), Cyclotomic(1));
    EXPECT_EQ(twisted_root_number(d.second, even), Cyclotomic(-1));
    EXPECT_EQ(twisted_root_number(d.first, odd), Cyclotomic(-1));
    EXPECT_EQ(twisted_root_number(d.second, odd), Cyclotomic(1));
    EXPECT_EQ(twisted_root_number({Cyclotomic(1), Cyclotomic(1), 2}, odd), Cyclotomic(1));
    EXPECT_THROW(twisted_root_number(d.first, QuadCharDatum::make(true, 1)), DomainError);
    EXPECT_THROW(twisted_root_number({Cyclotomic(2), Cyclotomic(1), 1}, odd), DomainError);
}

TEST(RootNumbers, TwistIsAnInvolution) {
    for (const Cyclotomic& w : {Cyclotomic(1), Cyclotomic(-1), kI, -kI}) {
        for (const Cyclotomic& wf : {Cyclotomic(1), Cyclotomic(-1), kI}) {
            for (int g : {1, 2, 3}) {
                for (int s : {1, -1}) {
                    QuadCharDatum chi = QuadCharDatum::make(false, s);
                    Cyclotomic once = twisted_root_number({w, wf, g}, chi);
                    EXPECT_EQ(twisted_root_number({once, wf, g}, chi), w);
                }
            }
        }
    }
}

TEST(RootNumbers, GlobalProduct) {
    EXPECT_EQ(global_root_number({}), Cyclotomic(1));
    EXPECT_EQ(global_root_number({{"inf", Cyclotomic(1)}, {"13", Cyclotomic(-1)}, {"2633", Cyclotomic(1)}}), Cyclotomic(-1));
    EXPECT_EQ(global_root_number({{"3", Cyclotomic(-1)}, {"5", Cyclotomic(-1)}}), Cyclotomic(1));
    EXPECT_EQ(global_root_number({{"3", kI}, {"5", kI}}), Cyclotomic(-1));
}

TEST(RootNumbers, EveryTwistOfTheJacobianHasSignMinusOne) {
    for (const auto& chi : all_data()) {
        RootNumberReport r = j_twist_root_number(chi);
        EXPECT_EQ(r.value, Cyclotomic(-1)) << chi.str();
        ASSERT_EQ(r.ledger.size(), 3u);
        EXPECT_EQ(r.ledger[0].value, Cyclotomic(1));
        EXPECT_EQ(r.ledger[1].place, "13");
        EXPECT_EQ(r.ledger[1].value, Cyclotomic(-1));
        EXPECT_EQ(r.ledger[2].value, Cyclotomic(1));
    }
}

TEST(RootNumbers, OverriddenInputs) {
    TwistData good = genus2_twist_data();
    good.second = good.first;
    for (const auto& chi : all_data()) EXPECT_EQ(j_twist_root_number(chi, good).value, Cyclotomic(1));
    TwistData flipped = genus2_twist_data();
    flipped.semistable = {{"2633", Cyclotomic(-1)}};
    EXPECT_EQ(j_twist_root_number(QuadCharDatum::make(false, 1), flipped).value, Cyclotomic(1));
}
