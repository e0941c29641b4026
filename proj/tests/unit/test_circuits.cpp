#include "doctest.h"
#include "gen.hpp"
#include "golden.hpp"
#include "zkt/circuits/builders.hpp"
#include "zkt/circuits/checks.hpp"
#include "zkt/circuits/encoding.hpp"
#include "zkt/circuits/json.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/crypto/seal.hpp"
#include "zkt/error.hpp"

using namespace zkt;
using namespace zkt::test;

namespace {

std::string failureOf(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        if (e.code() == Errc::ConstraintViolation) return e.detail();
        return std::string(e.name());
    }
    return "ok";
}

template <class W, class PI>
void proveAndVerify(const ProofSystem& sys, const W& w, const PI& pub) {
    auto r = checkStatement(w, pub);
    INFO("failed constraint: " << r.failure);
    REQUIRE(r);
    auto tx = proveTx(sys, w, pub);
    CHECK(verify(sys, tx));
    CHECK(Json(tx).template get<Transaction<PI>>() == tx);
}

}  // namespace

TEST_CASE("audit preimage encoding and seal match the reference vectors") {
    const auto& v = golden()["audit"];
    AuditPreimage a;
    for (const auto& t : v["inputs"]) a.inputs.push_back(goldenToken(t));
    for (const auto& t : v["outputs"]) a.outputs.push_back(goldenToken(t));
    a.burn_a = hexWord(v["burn_a"]);
    for (const auto& id : v["burn_ids"]) a.burn_ids.push_back(hexWord(id));
    SecretKey sk{hexWord(v["auditor_sk"])};
    Bytes sealed = sealAudit(derivePublicKey(sk), a);
    CHECK(toHex(sealed) == v["sealed"].get<std::string>());
    CHECK(decodeAuditPreimage(openWithKey(sk, parseSealedBox(sealed))) == a);
}

TEST_CASE("witness hash and burn commitment match the reference vectors") {
    const auto& v = golden()["burn"];
    TransferWitness w;
    MerklePath path;
    for (const auto& s : v["path"]) path.steps.push_back({hexDigest(s["sibling_hash"]), s["at_left"].get<bool>()});
    w.inputs.push_back({goldenToken(v["input"]), path});
    w.outputs.push_back(goldenToken(v["output"]));
    w.sk = SecretKey{hexWord(v["sk"])};
    w.audit_pk = PublicKey{hexBytes(v["audit_pk"])};
    w.burn_a = hexWord(v["burn_a"]);
    CHECK(witnessHash(w) == hexDigest(v["witness_hash"]));
    CHECK(burnCommitment(w) == hexDigest(v["burn_c"]));
}

TEST_CASE("delivery hashes match the reference vectors") {
    for (const auto& v : golden()["delivery"]) {
        std::vector<TokenPreimage> ts;
        for (const auto& t : v["tokens"]) ts.push_back(goldenToken(t));
        CHECK(deliveryHash(ts) == hexDigest(v["hash"]));
    }
}

TEST_CASE("honest instances satisfy every circuit") {
    ReferenceBackend sys(7);
    gen::Gen g(20);
    for (int i = 0; i < 40; ++i) {
        gen::World world(g);
        auto m = gen::mintInstance(g, world);
        proveAndVerify(sys, m.w, m.pub);
        auto t = gen::transferInstance(g, world);
        proveAndVerify(sys, t.w, t.pub);
        auto r = gen::revealingInstance(g, world);
        proveAndVerify(sys, r.w, r.pub);
        auto h = gen::hidingInstance(g, world);
        proveAndVerify(sys, h.w, h.pub);
        auto gr = gen::grabInstance(g, world);
        proveAndVerify(sys, gr.w, gr.pub);
        auto dm = gen::delegated(m, world.dvp_address);
        proveAndVerify(sys, dm.w, dm.pub);
        auto dt = gen::delegated(t, world.dvp_address);
        proveAndVerify(sys, dt.w, dt.pub);
        auto dr = gen::delegated(r, world.dvp_address);
        proveAndVerify(sys, dr.w, dr.pub);
        auto dh = gen::delegated(h, world.dvp_address);
        proveAndVerify(sys, dh.w, dh.pub);
        auto d = gen::dvpInstance(g, world, sys);
        proveAndVerify(sys, d.w, d.pub);
    }
}

TEST_CASE("transfer constraints") {
    ReferenceBackend sys(1);
    gen::Gen g(21);
    gen::World world(g);
    auto base = gen::transferInstance(g, world);
    auto attempt = [&](auto mutate) {
        auto c = base;
        mutate(c.w, c.pub);
        return failureOf([&] { proveTransfer(sys, c.w, c.pub); });
    };
    CHECK(attempt([](auto&, auto&) {}) == "ok");
    CHECK(attempt([](TransferWitness& w, auto&) { w.inputs.clear(); }) == "no_inputs");
    CHECK(attempt([&](TransferWitness& w, auto&) { w.sk = g.key(); }) == "nullifier");
    CHECK(attempt([](auto&, TransferPublic& p) { p.nonce_g = p.nonce_g ^ U256{1}; }) == "grabber");
    CHECK(attempt([](auto&, TransferPublic& p) { p.root_c.bytes[0] ^= 1; }) == "root_c");
    CHECK(attempt([](auto&, TransferPublic& p) { p.type_t = p.type_t ^ U256{1}; }) == "input_type");
    CHECK(attempt([](TransferWitness& w, TransferPublic& p) {
              w.burn_a = addOrThrow(w.burn_a, U256{1});
              p.burn_c = burnCommitment(w);
          }) == "mass_amount");
    CHECK(attempt([](auto&, TransferPublic& p) { p.burn_c.bytes[0] ^= 1; }) == "burn_c");
    CHECK(attempt([](auto&, TransferPublic& p) { p.audit_d.back() ^= 1; }) == "audit_d");
    CHECK(attempt([](auto&, TransferPublic& p) { p.audit_acc.value = p.audit_acc.value ^ U256{1}; }) == "audit_acc");
}

TEST_CASE("mass conservation rejects inflation and id swaps") {
    gen::Gen g(22);
    gen::World world(g);
    for (int i = 0; i < 50; ++i) {
        auto t = gen::transferInstance(g, world);
        if (t.w.outputs.empty()) continue;
        auto w = t.w;
        auto& o = w.outputs[0];
        if (o.id.isZero()) o.amount = addOrThrow(o.amount, U256{1});
        else o.id = o.id ^ U256{1};
        CHECK_FALSE(checkMassConservation(w));
    }
}

TEST_CASE("amount sums report overflow as a constraint") {
    TransferWitness w;
    TokenPreimage big{Account{U256{1}}, U256{1}, U256{1}, U256::max(), U256{}, std::nullopt};
    w.inputs.push_back({big, {}});
    w.outputs = {big, big};
    CHECK(checkMassConservation(w).failure == "overflow");
}

TEST_CASE("revealing constraints") {
    gen::Gen g(23);
    gen::World world(g);
    auto base = gen::revealingInstance(g, world);
    CHECK(checkStatement(base.w, base.pub));
    auto p = base.pub;
    p.outputs[0].nonce = U256{1};
    CHECK(checkStatement(base.w, p).failure == "nonce");
    p = base.pub;
    p.outputs[0].type = p.outputs[0].type ^ U256{1};
    CHECK(checkStatement(base.w, p).failure == "clear_type");
    p = base.pub;
    if (p.outputs[0].id.isZero()) p.outputs[0].amount = addOrThrow(p.outputs[0].amount, U256{1});
    else p.outputs[0].id = p.outputs[0].id ^ U256{1};
    auto f = checkStatement(base.w, p).failure;
    CHECK((f == "mass_amount" || f == "mass_ids"));
}

TEST_CASE("hiding constraints") {
    gen::Gen g(24);
    gen::World world(g);
    auto base = gen::hidingInstance(g, world);
    auto p = base.pub;
    p.acc_i = getAccount(g.key());
    auto w = base.w;
    w.sk = world.owner_sk;
    CHECK(checkStatement(w, p).failure == "acc_i");
    p = base.pub;
    p.amount_i = U256{};
    p.ids_i.clear();
    CHECK(checkStatement(base.w, p).failure == "no_inputs");
    p = base.pub;
    p.amount_i = addOrThrow(p.amount_i, U256{1});
    CHECK(checkStatement(base.w, p).failure == "mass_amount");
}

TEST_CASE("grab constraints") {
    gen::Gen g(25);
    gen::World world(g);
    auto base = gen::grabInstance(g, world);
    CHECK(checkStatement(base.w, base.pub));
    auto w = base.w;
    w.auth_sk = g.key();
    CHECK(checkStatement(w, base.pub).failure == "auth_acc");
    w = base.w;
    w.owner_pk = derivePublicKey(g.key());
    CHECK(checkStatement(w, base.pub).failure == "nonce_g");
    w = base.w;
    w.grabber_k.value = w.grabber_k.value ^ U256{1};
    CHECK_FALSE(checkStatement(w, base.pub));
}

TEST_CASE("mint with a hidden issuer needs a valid membership path") {
    gen::Gen g(26);
    gen::World world(g);
    for (int i = 0; i < 20; ++i) {
        auto m = gen::mintInstance(g, world);
        if (!m.pub.root_i) continue;
        auto w = m.w;
        w.issuer_sk = g.key();
        CHECK(checkStatement(w, m.pub).failure == "root_i");
        w = m.w;
        w.path_i.reset();
        CHECK(checkStatement(w, m.pub).failure == "root_i");
    }
}

TEST_CASE("delegation binds the witness to one address") {
    gen::Gen g(27);
    gen::World world(g);
    auto t = gen::transferInstance(g, world);
    auto d = delegate(t.pub, t.w, world.dvp_address);
    CHECK(checkStatement(t.w, d));
    auto other = d;
    other.del_add = addressFromName("mallory");
    CHECK(checkStatement(t.w, other).failure == "delegate");
    auto t2 = gen::transferInstance(g, world);
    CHECK(checkStatement(t2.w, d).failure == "delegate");
}

TEST_CASE("dvp constraints") {
    ReferenceBackend sys(3);
    gen::Gen g(28);
    gen::World world(g);
    auto base = gen::dvpInstance(g, world, sys);
    CHECK(checkStatement(base.w, base.pub));

    auto w = base.w;
    w.delivery_w.push_back(gen::tokenOf(g, Account{g.word()}, U256{g.range(5000, 6000)}, {U256{1}, U256{}}));
    auto p = buildDvpPublic(w, base.pub.payment, base.pub.type_d);
    CHECK(checkStatement(w, p).failure == "delivery_type");

    w = base.w;
    w.delivery_w.push_back(gen::tokenOf(g, Account{g.word()}, world.type, {U256{1}, U256{}}));
    p = buildDvpPublic(w, base.pub.payment, base.pub.type_d);
    CHECK(checkStatement(w, p).failure == "delivery_payment");

    w = base.w;
    std::erase_if(w.delivery_w, [&](const TokenPreimage& t) { return t.type == world.other_type; });
    p = buildDvpPublic(w, base.pub.payment, base.pub.type_d);
    CHECK(checkStatement(w, p).failure == "delivery_type");

    p = base.pub;
    p.delivery.bytes[0] ^= 1;
    CHECK(checkStatement(base.w, p).failure == "delivery");
}

TEST_CASE("public inputs round-trip through json") {
    ReferenceBackend sys(4);
    gen::Gen g(29);
    gen::World world(g);
    auto m = gen::mintInstance(g, world);
    CHECK(Json(m.pub).get<MintPublic>() == m.pub);
    auto r = gen::revealingInstance(g, world);
    CHECK(Json(r.pub).get<RevealingPublic>() == r.pub);
    auto h = gen::hidingInstance(g, world);
    CHECK(Json(h.pub).get<HidingPublic>() == h.pub);
    auto gr = gen::grabInstance(g, world);
    CHECK(Json(gr.pub).get<GrabPublic>() == gr.pub);
    auto d = gen::dvpInstance(g, world, sys);
    CHECK(Json(d.pub).get<DvpPublic>() == d.pub);
    AuditPreimage a = auditPreimageOf(gen::transferInstance(g, world).w);
    CHECK(Json(a).get<AuditPreimage>() == a);
}
