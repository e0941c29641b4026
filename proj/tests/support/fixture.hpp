#pragma once

#include <memory>

#include "gen.hpp"
#include "zkt/circuits/encoding.hpp"
#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/keys.hpp"
#include "zkt/error.hpp"
#include "zkt/ledger/token_contract.hpp"

namespace zkt::test {

/// One token contract with an authority, an auditor, a public issuer, two
/// banks and an escrow contract account.
struct Ledger {
    explicit Ledger(std::uint64_t seed = 1, U256 type = U256{1})
        : g(seed),
          sys(std::make_shared<ReferenceBackend>(seed)),
          auth_sk(g.key()),
          auditor_sk(g.key()),
          alice_sk(g.key()),
          bob_sk(g.key()),
          escrow_sk(g.key()),
          c(config(type), sys) {
        c.registerIssuer(auth, issuer, true);
        c.registerContractAccount(auth, escrow, getAccount(escrow_sk));
    }

    TokenContractConfig config(const U256& type) {
        TokenContractConfig cfg;
        cfg.type_t = type;
        cfg.address = addressFromName("token");
        cfg.auth_add = auth;
        cfg.auth_acc = getAccount(auth_sk);
        cfg.audit_acc = getAccount(auditor_sk);
        cfg.grab_nonce = g.word();
        cfg.tree_depth = 10;
        return cfg;
    }

    const U256& type() const { return c.config().type_t; }
    PublicKey auditorPk() const { return derivePublicKey(auditor_sk); }

    TokenPreimage token(const SecretKey& owner, std::uint64_t amount, std::uint64_t id = 0) {
        return {getAccount(owner), type(), g.word(), U256{amount}, U256{id}, std::nullopt};
    }

    std::vector<TokenPreimage> mint(std::vector<TokenPreimage> outs) {
        MintWitness w{outs, std::nullopt, std::nullopt};
        c.mint(proveTx(*sys, w, buildMintPublic(w, type())), issuer);
        return outs;
    }
    TokenPreimage mintOne(const SecretKey& owner, std::uint64_t amount, std::uint64_t id = 0) {
        return mint({token(owner, amount, id)})[0];
    }

    ImgPath pathOf(const TokenPreimage& t) const {
        const auto& leaves = c.tree().leaves();
        auto it = std::find(leaves.begin(), leaves.end(), commit(t).value);
        if (it == leaves.end()) throw Error(Errc::IndexOutOfRange, "token not in tree");
        return {t, c.tree().proofFor(static_cast<std::uint64_t>(it - leaves.begin()))};
    }

    TransferWitness transferWitness(const SecretKey& sk, const std::vector<TokenPreimage>& in,
                                    std::vector<TokenPreimage> out, std::uint64_t burn_a = 0) {
        TransferWitness w;
        for (const auto& t : in) w.inputs.push_back(pathOf(t));
        w.outputs = std::move(out);
        w.sk = sk;
        w.audit_pk = auditorPk();
        w.burn_a = U256{burn_a};
        return w;
    }

    TransferTx transferTx(const TransferWitness& w) {
        return proveTx(*sys, w, buildTransferPublic(w, type(), c.tree().root(), c.config().grab_nonce));
    }

    /// A proof the backend accepts for arbitrary public inputs, as a
    /// malicious prover holding the setup key could produce.
    template <class PI>
    Transaction<PI> forge(PI pub) const {
        Proof p = sys->prove(CircuitOf<PI>::id, canonicalBytes(pub), {});
        return {std::move(pub), std::move(p)};
    }

    gen::Gen g;
    std::shared_ptr<ReferenceBackend> sys;
    SecretKey auth_sk, auditor_sk, alice_sk, bob_sk, escrow_sk;
    Address auth = addressFromName("authority");
    Address issuer = addressFromName("issuer");
    Address escrow = addressFromName("escrow");
    TokenContract c;
};

/// Runs f, requires it to throw `code`, and requires the contract state to
/// be exactly as before.
template <class F>
bool rejectsCleanly(const TokenContract& c, Errc code, F&& f) {
    const Digest before = c.stateHash();
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code && c.stateHash() == before;
    }
    return false;
}

}  // namespace zkt::test
