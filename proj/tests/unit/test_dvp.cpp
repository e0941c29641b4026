#include "doctest.h"
#include "fixture.hpp"
#include "zkt/dvp/dvp_contract.hpp"
#include "zkt/harness/network.hpp"

using namespace zkt;
using namespace zkt::test;

namespace {

/// Two token types under one authority plus a DvP contract.
struct Swap {
    Swap() : usd(31, U256{1}), bond(usd.config(U256{2}), usd.sys), dvp(self, usd.auth, usd.sys) {
        bond.registerIssuer(usd.auth, usd.issuer, true);
        dvp.registerTokenContract(usd.auth, U256{1}, &usd.c);
        dvp.registerTokenContract(usd.auth, U256{2}, &bond);
    }

    TokenPreimage mintBond(const SecretKey& owner, std::uint64_t amount) {
        TokenPreimage t{getAccount(owner), U256{2}, usd.g.word(), U256{amount}, U256{}, std::nullopt};
        MintWitness w{{t}, std::nullopt, std::nullopt};
        bond.mint(proveTx(*usd.sys, w, buildMintPublic(w, U256{2})), usd.issuer);
        return t;
    }

    struct Leg {
        TransferWitness w;
        std::vector<TokenPreimage> give;
    };

    Leg leg(TokenContract& c, const SecretKey& payer, const TokenPreimage& in, const Account& payee,
            std::uint64_t pay) {
        Leg l;
        const U256& type = c.config().type_t;
        const auto& leaves = c.tree().leaves();
        auto at = std::find(leaves.begin(), leaves.end(), commit(in).value) - leaves.begin();
        l.w.inputs = {{in, c.tree().proofFor(at)}};
        l.give = {{payee, type, usd.g.word(), U256{pay}, U256{}, std::nullopt}};
        l.w.outputs = l.give;
        if (in.amount.low64() > pay) {
            l.w.outputs.push_back({getAccount(payer), type, usd.g.word(), U256{in.amount.low64() - pay}, U256{}, std::nullopt});
        }
        l.w.sk = payer;
        l.w.audit_pk = usd.auditorPk();
        return l;
    }

    DvpTx prove(TokenContract& c, const Leg& l, std::vector<TokenPreimage> delivery, const U256& type_d) {
        auto pub = buildTransferPublic(l.w, c.config().type_t, c.tree().root(), c.config().grab_nonce);
        auto payment = proveTx(*usd.sys, l.w, delegate(pub, l.w, self));
        DvpWitness dw{l.w, std::move(delivery)};
        return proveTx(*usd.sys, dw, buildDvpPublic(dw, payment, type_d));
    }

    Digest state() const { return hashJson(Json::array({usd.c.snapshot(), bond.snapshot(), dvp.snapshot()})); }

    Address self = addressFromName("dvp");
    Ledger usd;
    TokenContract bond;
    DvpContract dvp;
};

}  // namespace

TEST_CASE("matching legs settle together") {
    Swap s;
    auto cash = s.usd.mintOne(s.usd.alice_sk, 100);
    auto bond = s.mintBond(s.usd.bob_sk, 5);
    auto a = s.leg(s.usd.c, s.usd.alice_sk, cash, getAccount(s.usd.bob_sk), 60);
    auto b = s.leg(s.bond, s.usd.bob_sk, bond, getAccount(s.usd.alice_sk), 5);
    std::vector<TokenPreimage> set = a.give;
    set.insert(set.end(), b.give.begin(), b.give.end());

    auto ta = s.prove(s.usd.c, a, set, U256{2});
    auto tb = s.prove(s.bond, b, set, U256{1});
    CHECK(ta.pub.delivery == tb.pub.delivery);

    auto first = s.dvp.dvp(ta, s.usd.issuer);
    REQUIRE(first.size() == 1);
    CHECK(first[0].kind == "DvpPending");
    CHECK(s.dvp.pending().size() == 1);
    CHECK(s.usd.c.nullifierCount() == 0);

    auto second = s.dvp.dvp(tb, s.usd.issuer);
    CHECK(second[0].kind == "DvpMatched");
    CHECK(s.dvp.pending().empty());
    CHECK(s.usd.c.isNullified(ta.pub.payment.pub.pub.nulls[0]));
    CHECK(s.bond.isNullified(tb.pub.payment.pub.pub.nulls[0]));
    for (const auto& c : ta.pub.payment.pub.pub.comms) CHECK(s.usd.c.tree().contains(c.value));
    for (const auto& c : tb.pub.payment.pub.pub.comms) CHECK(s.bond.tree().contains(c.value));
}

TEST_CASE("a failing inner transfer rolls both contracts back and keeps the pending leg") {
    Swap s;
    auto cash = s.usd.mintOne(s.usd.alice_sk, 100);
    auto bond = s.mintBond(s.usd.bob_sk, 5);
    auto a = s.leg(s.usd.c, s.usd.alice_sk, cash, getAccount(s.usd.bob_sk), 60);
    auto b = s.leg(s.bond, s.usd.bob_sk, bond, getAccount(s.usd.alice_sk), 5);
    std::vector<TokenPreimage> set = a.give;
    set.insert(set.end(), b.give.begin(), b.give.end());
    auto ta = s.prove(s.usd.c, a, set, U256{2});
    auto tb = s.prove(s.bond, b, set, U256{1});
    s.dvp.dvp(ta, s.usd.issuer);

    // Bob spends his bond elsewhere before his leg arrives.
    auto w = s.leg(s.bond, s.usd.bob_sk, bond, getAccount(s.usd.bob_sk), 5).w;
    s.bond.transfer(proveTx(*s.usd.sys, w, buildTransferPublic(w, U256{2}, s.bond.tree().root(), s.bond.config().grab_nonce)));

    const Digest before = s.state();
    try {
        s.dvp.dvp(tb, s.usd.issuer);
        FAIL("expected InnerTransferFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InnerTransferFailed);
    }
    CHECK(s.state() == before);
    CHECK(s.dvp.pending().size() == 1);
    CHECK_FALSE(s.usd.c.isNullified(ta.pub.payment.pub.pub.nulls[0]));
}

TEST_CASE("legs with different delivery sets never match") {
    Swap s;
    auto cash = s.usd.mintOne(s.usd.alice_sk, 100);
    auto bond = s.mintBond(s.usd.bob_sk, 5);
    auto a = s.leg(s.usd.c, s.usd.alice_sk, cash, getAccount(s.usd.bob_sk), 60);
    auto b = s.leg(s.bond, s.usd.bob_sk, bond, getAccount(s.usd.alice_sk), 5);
    std::vector<TokenPreimage> set = a.give;
    set.insert(set.end(), b.give.begin(), b.give.end());
    auto other = set;
    other.push_back({getAccount(s.usd.bob_sk), U256{1}, s.usd.g.word(), U256{1}, U256{}, std::nullopt});

    s.dvp.dvp(s.prove(s.usd.c, a, set, U256{2}), s.usd.issuer);
    auto evs = s.dvp.dvp(s.prove(s.bond, b, other, U256{1}), s.usd.issuer);
    CHECK(evs[0].kind == "DvpPending");
    CHECK(s.dvp.pending().size() == 2);
    CHECK(s.usd.c.nullifierCount() == 0);
    CHECK(s.bond.nullifierCount() == 0);
}

TEST_CASE("dvp rejects bad proofs and unknown types") {
    Swap s;
    auto cash = s.usd.mintOne(s.usd.alice_sk, 10);
    auto a = s.leg(s.usd.c, s.usd.alice_sk, cash, getAccount(s.usd.bob_sk), 10);
    std::vector<TokenPreimage> set = a.give;
    set.push_back({getAccount(s.usd.alice_sk), U256{3}, U256{1}, U256{1}, U256{}, std::nullopt});
    auto t = s.prove(s.usd.c, a, set, U256{3});
    CHECK_THROWS_WITH_AS(s.dvp.dvp(t, s.usd.issuer), doctest::Contains("0x3"), Error);

    set.back().type = U256{2};
    auto ok = s.prove(s.usd.c, a, set, U256{2});
    ok.proof.binding.bytes[0] ^= 1;
    try {
        s.dvp.dvp(ok, s.usd.issuer);
        FAIL("expected ProofRejected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ProofRejected);
    }
    CHECK_THROWS_AS(s.dvp.registerTokenContract(s.usd.issuer, U256{3}, &s.bond), Error);
}
