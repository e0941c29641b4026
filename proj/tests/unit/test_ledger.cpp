#include "doctest.h"
#include "fixture.hpp"

using namespace zkt;
using namespace zkt::test;

TEST_CASE("only registered issuers mint in the clear") {
    Ledger L(1);
    auto t = L.token(L.alice_sk, 100);
    MintWitness w{{t}, std::nullopt, std::nullopt};
    auto tx = proveTx(*L.sys, w, buildMintPublic(w, L.type()));
    CHECK(rejectsCleanly(L.c, Errc::IssuerViolation, [&] { L.c.mint(tx, addressFromName("mallory")); }));
    auto evs = L.c.mint(tx, L.issuer);
    REQUIRE(evs.size() == 1);
    CHECK(evs[0].kind == "Mint");
    CHECK(L.c.tree().contains(commit(t).value));
    CHECK(rejectsCleanly(L.c, Errc::DuplicateCommitment, [&] { L.c.mint(tx, L.issuer); }));

    L.c.registerIssuer(L.auth, L.issuer, false);
    CHECK(rejectsCleanly(L.c, Errc::IssuerViolation, [&] { L.c.mint(tx, L.issuer); }));
    CHECK(rejectsCleanly(L.c, Errc::NotAuthority, [&] { L.c.registerIssuer(L.issuer, L.issuer, true); }));
}

TEST_CASE("hidden issuers mint through the issuer tree") {
    Ledger L(2);
    SecretKey hidden = L.g.key();
    L.c.registerHiddenIssuer(L.auth, getAccount(hidden));
    MintWitness w{{L.token(L.alice_sk, 5)}, hidden, L.c.issuerTree().proofFor(0)};
    auto tx = proveTx(*L.sys, w, buildMintPublic(w, L.type(), L.c.issuerTree().root()));
    CHECK(rejectsCleanly(L.c, Errc::IssuerViolation, [&] { L.c.mint(tx, L.issuer); }));
    CHECK_NOTHROW(L.c.mint(tx, addressFromName("anyone")));

    MintWitness w2{{L.token(L.alice_sk, 6)}, hidden, L.c.issuerTree().proofFor(0)};
    auto pub = buildMintPublic(w2, L.type(), Digest::fromU256(U256{42}));
    CHECK(rejectsCleanly(L.c, Errc::UnknownIssuerRoot, [&] { L.c.mint(L.forge(pub), addressFromName("anyone")); }));
    CHECK_THROWS_AS(proveTx(*L.sys, w2, pub), Error);
}

TEST_CASE("transfers spend once") {
    Ledger L(3);
    auto in = L.mintOne(L.alice_sk, 100);
    auto w = L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 60), L.token(L.alice_sk, 40)});
    auto tx = L.transferTx(w);
    auto evs = L.c.transfer(tx);
    REQUIRE(evs.size() == 2);
    CHECK(evs[0].kind == "Transfer");
    CHECK(evs[1].kind == "Burn");
    CHECK(L.c.isNullified(tx.pub.nulls[0]));
    CHECK(L.c.nullifierCount() == 1);

    CHECK(rejectsCleanly(L.c, Errc::DoubleSpend, [&] { L.c.transfer(tx); }));
    auto again = L.transferWitness(L.alice_sk, {in}, {L.token(L.alice_sk, 100)});
    CHECK(rejectsCleanly(L.c, Errc::DoubleSpend, [&] { L.c.transfer(L.transferTx(again)); }));
}

TEST_CASE("a nullifier repeated inside one call is a double spend") {
    Ledger L(4);
    auto in = L.mintOne(L.alice_sk, 10);
    auto w = L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 10)});
    auto pub = buildTransferPublic(w, L.type(), L.c.tree().root(), L.c.config().grab_nonce);
    pub.nulls.push_back(pub.nulls[0]);
    pub.grabs.push_back(pub.grabs[0]);
    CHECK(rejectsCleanly(L.c, Errc::DoubleSpend, [&] { L.c.transfer(L.forge(pub)); }));
}

TEST_CASE("historical roots stay valid and unknown roots are stale") {
    Ledger L(5);
    auto in = L.mintOne(L.alice_sk, 10);
    auto w = L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 10)});
    auto tx = L.transferTx(w);
    L.mintOne(L.bob_sk, 3);
    CHECK(L.c.tree().root() != tx.pub.root_c);
    CHECK_NOTHROW(L.c.transfer(tx));

    auto in2 = L.mintOne(L.alice_sk, 7);
    auto w2 = L.transferWitness(L.alice_sk, {in2}, {L.token(L.bob_sk, 7)});
    auto pub = buildTransferPublic(w2, L.type(), Digest::fromU256(U256{1}), L.c.config().grab_nonce);
    CHECK(rejectsCleanly(L.c, Errc::StaleRoot, [&] { L.c.transfer(L.forge(pub)); }));
}

TEST_CASE("tampered proofs and parameters are rejected") {
    Ledger L(6);
    auto in = L.mintOne(L.alice_sk, 10);
    auto tx = L.transferTx(L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 10)}));

    auto bad = tx;
    bad.proof.binding.bytes[3] ^= 1;
    CHECK(rejectsCleanly(L.c, Errc::ProofRejected, [&] { L.c.transfer(bad); }));
    bad = tx;
    bad.pub.comms[0].value.bytes[0] ^= 1;
    CHECK(rejectsCleanly(L.c, Errc::ProofRejected, [&] { L.c.transfer(bad); }));

    auto pub = tx.pub;
    pub.type_t = U256{99};
    CHECK(rejectsCleanly(L.c, Errc::TypeMismatch, [&] { L.c.transfer(L.forge(pub)); }));
    pub = tx.pub;
    pub.nonce_g = pub.nonce_g ^ U256{1};
    CHECK(rejectsCleanly(L.c, Errc::ParamMismatch, [&] { L.c.transfer(L.forge(pub)); }));
    pub = tx.pub;
    pub.audit_acc = getAccount(L.alice_sk);
    CHECK(rejectsCleanly(L.c, Errc::ParamMismatch, [&] { L.c.transfer(L.forge(pub)); }));
    pub = tx.pub;
    pub.comms.push_back(pub.comms[0]);
    CHECK(rejectsCleanly(L.c, Errc::DuplicateCommitment, [&] { L.c.transfer(L.forge(pub)); }));
    CHECK_NOTHROW(L.c.transfer(tx));
}

TEST_CASE("grab seizes a token and blocks its spending") {
    Ledger L(7);
    auto in = L.mintOne(L.alice_sk, 50);
    GrabWitness w;
    w.inputs = {L.pathOf(in)};
    w.outputs = {L.token(L.auth_sk, 50)};
    w.auth_sk = L.auth_sk;
    w.owner_pk = derivePublicKey(L.alice_sk);
    w.grabber_k = createGrabberKey(L.alice_sk, L.c.config().grab_nonce);
    auto tx = proveTx(*L.sys, w, buildGrabPublic(w, L.type(), L.c.tree().root(), L.c.config().grab_nonce));

    CHECK(rejectsCleanly(L.c, Errc::NotAuthority, [&] { L.c.grab(tx, L.issuer); }));
    auto evs = L.c.grab(tx, L.auth);
    REQUIRE(evs.size() == 1);
    CHECK(evs[0].kind == "Grab");
    CHECK(rejectsCleanly(L.c, Errc::GrabberReuse, [&] { L.c.grab(tx, L.auth); }));

    auto spend = L.transferTx(L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 50)}));
    CHECK(rejectsCleanly(L.c, Errc::GrabberReuse, [&] { L.c.transfer(spend); }));
}

TEST_CASE("grab proofs must name the configured authority") {
    Ledger L(8);
    auto in = L.mintOne(L.alice_sk, 5);
    GrabWitness w;
    w.inputs = {L.pathOf(in)};
    w.outputs = {L.token(L.bob_sk, 5)};
    w.auth_sk = L.bob_sk;
    w.owner_pk = derivePublicKey(L.alice_sk);
    w.grabber_k = createGrabberKey(L.alice_sk, L.c.config().grab_nonce);
    auto tx = proveTx(*L.sys, w, buildGrabPublic(w, L.type(), L.c.tree().root(), L.c.config().grab_nonce));
    CHECK(rejectsCleanly(L.c, Errc::NotAuthority, [&] { L.c.grab(tx, L.auth); }));
}

TEST_CASE("revealing credits contract accounts only") {
    Ledger L(9);
    auto in = L.mintOne(L.alice_sk, 30);
    auto nft = L.mintOne(L.alice_sk, 0, 77);
    auto reveal = [&](const Account& to) {
        RevealingWitness w{{L.pathOf(in), L.pathOf(nft)}, L.alice_sk, {L.token(L.alice_sk, 10)}, L.auditorPk()};
        std::vector<TokenPreimage> clear{{to, L.type(), U256{}, U256{20}, U256{}, std::nullopt},
                                         {to, L.type(), U256{}, U256{}, U256{77}, std::nullopt}};
        return proveTx(*L.sys, w, buildRevealingPublic(w, clear, L.type(), L.c.tree().root(), L.c.config().grab_nonce));
    };
    CHECK(rejectsCleanly(L.c, Errc::OwnerNotContract, [&] { L.c.revealingTransfer(reveal(getAccount(L.bob_sk))); }));
    auto evs = L.c.revealingTransfer(reveal(getAccount(L.escrow_sk)));
    CHECK(evs[0].kind == "RevealingTransfer");
    CHECK(L.c.balance(getAccount(L.escrow_sk)) == U256{20});
    CHECK(L.c.nfts(getAccount(L.escrow_sk)).count(U256{77}) == 1);
}

TEST_CASE("hiding debits the clear balance") {
    Ledger L(10);
    auto in = L.mintOne(L.alice_sk, 30);
    RevealingWitness rw{{L.pathOf(in)}, L.alice_sk, {}, L.auditorPk()};
    std::vector<TokenPreimage> clear{{getAccount(L.escrow_sk), L.type(), U256{}, U256{30}, U256{}, std::nullopt}};
    L.c.revealingTransfer(
        proveTx(*L.sys, rw, buildRevealingPublic(rw, clear, L.type(), L.c.tree().root(), L.c.config().grab_nonce)));

    auto hide = [&](std::uint64_t amount, std::vector<U256> ids, const Account& acc_i, std::optional<SecretKey> sk) {
        HidingWitness w{{}, sk, L.auditorPk()};
        if (amount) w.outputs.push_back(L.token(L.bob_sk, amount));
        for (const auto& id : ids) w.outputs.push_back(L.token(L.bob_sk, 0, id.low64()));
        return proveTx(*L.sys, w, buildHidingPublic(w, U256{amount}, ids, acc_i, L.type()));
    };
    CHECK(rejectsCleanly(L.c, Errc::InsufficientBalance, [&] { L.c.hidingTransfer(hide(31, {}, {}, {}), L.escrow); }));
    CHECK(rejectsCleanly(L.c, Errc::MissingNft, [&] { L.c.hidingTransfer(hide(1, {U256{5}}, {}, {}), L.escrow); }));
    CHECK(rejectsCleanly(L.c, Errc::OwnerNotContract, [&] { L.c.hidingTransfer(hide(1, {}, {}, {}), L.issuer); }));
    CHECK_NOTHROW(L.c.hidingTransfer(hide(12, {}, {}, {}), L.escrow));
    CHECK(L.c.balance(getAccount(L.escrow_sk)) == U256{18});

    // Account mode: whoever submits, the key holder of acc_i authorises.
    CHECK_NOTHROW(L.c.hidingTransfer(hide(18, {}, getAccount(L.escrow_sk), L.escrow_sk), L.issuer));
    CHECK(L.c.balance(getAccount(L.escrow_sk)).isZero());
}

TEST_CASE("delegated calls only accept the bound caller") {
    Ledger L(11);
    Address broker = addressFromName("broker");
    auto in = L.mintOne(L.alice_sk, 9);
    auto w = L.transferWitness(L.alice_sk, {in}, {L.token(L.bob_sk, 9)});
    auto pub = buildTransferPublic(w, L.type(), L.c.tree().root(), L.c.config().grab_nonce);
    auto tx = proveTx(*L.sys, w, delegate(pub, w, broker));
    CHECK(rejectsCleanly(L.c, Errc::NotDelegate, [&] { L.c.delegatedTransfer(tx, L.issuer); }));

    auto rebound = tx;
    rebound.pub.del_add = L.issuer;
    CHECK(rejectsCleanly(L.c, Errc::ProofRejected, [&] { L.c.delegatedTransfer(rebound, L.issuer); }));

    auto evs = L.c.delegatedTransfer(tx, broker);
    CHECK(evs[0].payload["delegate"] == Json(broker));
}

TEST_CASE("delegated mint needs an issuer delegate") {
    Ledger L(12);
    MintWitness w{{L.token(L.alice_sk, 4)}, std::nullopt, std::nullopt};
    auto to_broker = proveTx(*L.sys, w, delegate(buildMintPublic(w, L.type()), w, addressFromName("broker")));
    CHECK(rejectsCleanly(L.c, Errc::IssuerViolation,
                         [&] { L.c.delegatedMint(to_broker, addressFromName("broker")); }));
    auto to_issuer = proveTx(*L.sys, w, delegate(buildMintPublic(w, L.type()), w, L.issuer));
    CHECK(rejectsCleanly(L.c, Errc::NotDelegate, [&] { L.c.delegatedMint(to_issuer, L.auth); }));
    CHECK_NOTHROW(L.c.delegatedMint(to_issuer, L.issuer));
}

TEST_CASE("a full tree refuses further commitments") {
    Ledger L(13);
    TokenContractConfig cfg = L.c.config();
    cfg.tree_depth = 1;
    TokenContract small(cfg, L.sys);
    small.registerIssuer(L.auth, L.issuer, true);
    MintWitness w{{L.token(L.alice_sk, 1), L.token(L.alice_sk, 2), L.token(L.alice_sk, 3)}, std::nullopt, std::nullopt};
    auto tx = proveTx(*L.sys, w, buildMintPublic(w, L.type()));
    CHECK(rejectsCleanly(small, Errc::TreeFull, [&] { small.mint(tx, L.issuer); }));
}

TEST_CASE("snapshots are canonical") {
    Ledger a(14), b(14);
    a.mintOne(a.alice_sk, 3);
    b.mintOne(b.alice_sk, 3);
    CHECK(a.c.snapshot().dump() == b.c.snapshot().dump());
    CHECK(a.c.stateHash() == b.c.stateHash());
    TokenContract copy = a.c;
    a.mintOne(a.alice_sk, 4);
    CHECK(copy.stateHash() != a.c.stateHash());
}
