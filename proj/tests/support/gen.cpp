#include "gen.hpp"

#include <algorithm>

#include "zkt/circuits/prover.hpp"
#include "zkt/crypto/keys.hpp"

namespace zkt::gen {

U256 Gen::word() {
    std::array<std::uint8_t, 32> b{};
    for (std::size_t i = 0; i < 32; i += 8) {
        std::uint64_t r = rng_();
        for (std::size_t k = 0; k < 8; ++k) b[i + k] = static_cast<std::uint8_t>(r >> (8 * k));
    }
    return U256::fromBigEndian(b);
}

std::uint64_t Gen::range(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

SecretKey Gen::key() {
    for (;;) {
        SecretKey sk{word()};
        if (!sk.isZero()) return sk;
    }
}

Bytes Gen::bytes(std::size_t max_len) {
    Bytes b(range(0, max_len));
    for (auto& x : b) x = static_cast<std::uint8_t>(rng_());
    return b;
}

Digest Gen::digest() { return Digest::fromU256(word()); }

World::World(Gen& g)
    : owner_sk(g.key()),
      auditor_sk(g.key()),
      auth_sk(g.key()),
      issuer_sk(g.key()),
      auditor_pk(derivePublicKey(auditor_sk)),
      recipient(getAccount(g.key())),
      contract_acc(getAccount(g.key())),
      type(g.range(1, 1000)),
      other_type(type.low64() + g.range(1, 1000)),
      nonce_g(g.word()),
      dvp_address(addressFromName("dvp")) {}

std::vector<Piece> randomPieces(Gen& g, unsigned n) {
    std::vector<Piece> out;
    for (unsigned i = 0; i < n; ++i) {
        if (g.coin(0.7)) {
            out.push_back({U256{g.range(1, kMaxAmount / kMaxInOut)}, U256{}});
        } else {
            out.push_back({U256{}, U256{g.range(1, ~std::uint64_t{0})}});
        }
    }
    return out;
}

std::vector<Piece> resplit(Gen& g, const std::vector<Piece>& in, unsigned max_parts) {
    std::vector<Piece> out;
    std::uint64_t total = 0;
    for (const auto& p : in) {
        total += p.amount.low64();
        if (!p.id.isZero()) out.push_back({U256{}, p.id});
    }
    if (total > 0) {
        std::uint64_t slots = max_parts - out.size();
        std::uint64_t k = g.range(1, std::min<std::uint64_t>(slots, total));
        std::uint64_t left = total;
        for (std::uint64_t i = 0; i + 1 < k; ++i) {
            std::uint64_t part = g.range(1, left - (k - 1 - i));
            out.push_back({U256{part}, U256{}});
            left -= part;
        }
        out.push_back({U256{left}, U256{}});
    }
    std::shuffle(out.begin(), out.end(), g.engine());
    return out;
}

TokenPreimage tokenOf(Gen& g, const Account& owner, const U256& type, const Piece& p) {
    TokenPreimage t{owner, type, g.word(), p.amount, p.id, std::nullopt};
    if (g.coin(0.15)) t.payload = g.bytes(24);
    return t;
}

std::vector<ImgPath> placeInTree(Gen& g, const std::vector<TokenPreimage>& tokens, unsigned depth, Digest& root) {
    CommitmentTree tree(depth);
    std::vector<std::uint64_t> at;
    for (const auto& t : tokens) {
        for (auto n = g.range(0, 3); n > 0; --n) tree.append(g.digest());
        at.push_back(tree.size());
        tree.append(commit(t).value);
    }
    root = tree.root();
    std::vector<ImgPath> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) out.push_back({tokens[i], tree.proofFor(at[i])});
    return out;
}

namespace {

constexpr unsigned kDepth = 8;

std::vector<TokenPreimage> tokensOf(Gen& g, const Account& owner, const U256& type, const std::vector<Piece>& ps) {
    std::vector<TokenPreimage> out;
    for (const auto& p : ps) out.push_back(tokenOf(g, owner, type, p));
    return out;
}

std::vector<Piece> piecesOf(const std::vector<ImgPath>& in) {
    std::vector<Piece> out;
    for (const auto& ip : in) out.push_back({ip.img.amount, ip.img.id});
    return out;
}

Instance<TransferWitness, TransferPublic> transferWith(Gen& g, const World& world, bool burn) {
    const Account owner = getAccount(world.owner_sk);
    Digest root;
    auto in = placeInTree(g, tokensOf(g, owner, world.type, randomPieces(g, g.range(1, kMaxInOut))), kDepth, root);

    TransferWitness w;
    w.inputs = in;
    w.sk = world.owner_sk;
    w.audit_pk = world.auditor_pk;
    std::vector<Piece> keep;
    for (const auto& p : piecesOf(in)) {
        if (!burn) {
            keep.push_back(p);
        } else if (!p.id.isZero() && g.coin(0.3)) {
            w.burn_ids.push_back(p.id);
        } else if (!p.amount.isZero() && g.coin(0.3)) {
            std::uint64_t b = g.range(1, p.amount.low64());
            w.burn_a = U256{w.burn_a.low64() + b};
            if (b < p.amount.low64()) keep.push_back({U256{p.amount.low64() - b}, U256{}});
        } else {
            keep.push_back(p);
        }
    }
    for (const auto& p : resplit(g, keep, kMaxInOut)) {
        w.outputs.push_back(tokenOf(g, g.coin() ? world.recipient : owner, world.type, p));
    }
    auto pub = buildTransferPublic(w, world.type, root, world.nonce_g);
    return {std::move(w), std::move(pub)};
}

}  // namespace

Instance<MintWitness, MintPublic> mintInstance(Gen& g, const World& world) {
    MintWitness w;
    w.outputs = tokensOf(g, world.recipient, world.type, randomPieces(g, g.range(1, kMaxInOut)));
    std::optional<Digest> root_i;
    if (g.coin()) {
        CommitmentTree issuers(kDepth);
        for (auto n = g.range(0, 5); n > 0; --n) issuers.append(g.digest());
        std::uint64_t at = issuers.size();
        issuers.append(issuerLeaf(getAccount(world.issuer_sk)));
        w.issuer_sk = world.issuer_sk;
        w.path_i = issuers.proofFor(at);
        root_i = issuers.root();
    }
    auto pub = buildMintPublic(w, world.type, root_i);
    return {std::move(w), std::move(pub)};
}

Instance<TransferWitness, TransferPublic> transferInstance(Gen& g, const World& world) {
    return transferWith(g, world, true);
}

Instance<RevealingWitness, RevealingPublic> revealingInstance(Gen& g, const World& world) {
    const Account owner = getAccount(world.owner_sk);
    Digest root;
    auto in = placeInTree(g, tokensOf(g, owner, world.type, randomPieces(g, g.range(1, kMaxInOut))), kDepth, root);
    auto parts = resplit(g, piecesOf(in), kMaxInOut);
    std::size_t clear = g.range(1, parts.size());

    RevealingWitness w;
    w.inputs = in;
    w.sk = world.owner_sk;
    w.audit_pk = world.auditor_pk;
    std::vector<TokenPreimage> clear_outputs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i < clear) {
            clear_outputs.push_back({world.contract_acc, world.type, U256{}, parts[i].amount, parts[i].id, std::nullopt});
        } else {
            w.outputs.push_back(tokenOf(g, owner, world.type, parts[i]));
        }
    }
    auto pub = buildRevealingPublic(w, std::move(clear_outputs), world.type, root, world.nonce_g);
    return {std::move(w), std::move(pub)};
}

Instance<HidingWitness, HidingPublic> hidingInstance(Gen& g, const World& world) {
    HidingWitness w;
    w.audit_pk = world.auditor_pk;
    U256 amount;
    std::vector<U256> ids;
    for (const auto& p : randomPieces(g, g.range(1, kMaxInOut))) {
        w.outputs.push_back(tokenOf(g, world.recipient, world.type, p));
        amount = U256{amount.low64() + p.amount.low64()};
        if (!p.id.isZero()) ids.push_back(p.id);
    }
    Account acc_i;
    if (g.coin()) {
        w.sk = world.owner_sk;
        acc_i = getAccount(world.owner_sk);
    }
    auto pub = buildHidingPublic(w, amount, ids, acc_i, world.type);
    return {std::move(w), std::move(pub)};
}

Instance<GrabWitness, GrabPublic> grabInstance(Gen& g, const World& world) {
    const Account owner = getAccount(world.owner_sk);
    Digest root;
    auto in = placeInTree(g, tokensOf(g, owner, world.type, randomPieces(g, g.range(1, kMaxInOut))), kDepth, root);
    GrabWitness w;
    w.inputs = in;
    w.outputs = tokensOf(g, getAccount(world.auth_sk), world.type, resplit(g, piecesOf(in), kMaxInOut));
    w.auth_sk = world.auth_sk;
    w.owner_pk = derivePublicKey(world.owner_sk);
    w.grabber_k = createGrabberKey(world.owner_sk, world.nonce_g);
    auto pub = buildGrabPublic(w, world.type, root, world.nonce_g);
    return {std::move(w), std::move(pub)};
}

Instance<DvpWitness, DvpPublic> dvpInstance(Gen& g, const World& world, const ProofSystem& sys) {
    auto pay = transferWith(g, world, false);
    auto payment = proveTx(sys, pay.w, delegate(pay.pub, pay.w, world.dvp_address));
    DvpWitness w{pay.w, pay.w.outputs};
    w.delivery_w.push_back(tokenOf(g, getAccount(world.owner_sk), world.other_type, randomPieces(g, 1)[0]));
    std::shuffle(w.delivery_w.begin(), w.delivery_w.end(), g.engine());
    auto pub = buildDvpPublic(w, std::move(payment), world.other_type);
    return {std::move(w), std::move(pub)};
}

namespace {

void bump(U256& v) { v = v ^ U256{1}; }
void bump(Digest& d) { d.bytes[31] ^= 1; }
template <class Tag>
void bump(WordOf<Tag>& w) { bump(w.value); }
template <class Tag>
void bump(DigestOf<Tag>& d) { bump(d.value); }
void bump(Bytes& b) {
    if (b.empty()) b.push_back(1);
    else b[b.size() / 2] ^= 1;
}
void bump(TokenPreimage& t) { bump(t.amount); }

template <class PI>
struct Recorder {
    const PI& base;
    Mutations<PI>& out;

    template <class F>
    void operator()(std::string name, F&& f) {
        PI copy = base;
        f(copy);
        out.emplace_back(std::move(name), std::move(copy));
    }

    template <class T>
    void scalar(const std::string& name, T PI::*m) {
        (*this)(name, [m](PI& p) { bump(p.*m); });
    }

    template <class T>
    void list(const std::string& name, std::vector<T> PI::*m) {
        if (!(base.*m).empty()) {
            (*this)(name + "[0]", [m](PI& p) { bump((p.*m)[0]); });
            (*this)(name + ".drop", [m](PI& p) { (p.*m).pop_back(); });
        }
        (*this)(name + ".push", [m](PI& p) {
            T extra = (p.*m).empty() ? T{} : (p.*m).back();
            bump(extra);
            (p.*m).push_back(extra);
        });
    }
};

}  // namespace

Mutations<MintPublic> mutations(const MintPublic& p) {
    Mutations<MintPublic> out;
    Recorder<MintPublic> r{p, out};
    r.scalar("type_t", &MintPublic::type_t);
    r.list("comms", &MintPublic::comms);
    if (p.root_i) {
        r("root_i", [](MintPublic& x) { bump(*x.root_i); });
        r("root_i.unset", [](MintPublic& x) { x.root_i.reset(); });
    } else {
        r("root_i.set", [](MintPublic& x) { x.root_i = Digest{}; });
    }
    return out;
}

Mutations<TransferPublic> mutations(const TransferPublic& p) {
    Mutations<TransferPublic> out;
    Recorder<TransferPublic> r{p, out};
    r.list("nulls", &TransferPublic::nulls);
    r.list("grabs", &TransferPublic::grabs);
    r.list("comms", &TransferPublic::comms);
    r.scalar("type_t", &TransferPublic::type_t);
    r.scalar("root_c", &TransferPublic::root_c);
    r.scalar("nonce_g", &TransferPublic::nonce_g);
    r.scalar("burn_c", &TransferPublic::burn_c);
    r.scalar("audit_acc", &TransferPublic::audit_acc);
    r.scalar("audit_d", &TransferPublic::audit_d);
    return out;
}

Mutations<RevealingPublic> mutations(const RevealingPublic& p) {
    Mutations<RevealingPublic> out;
    Recorder<RevealingPublic> r{p, out};
    r.list("nulls", &RevealingPublic::nulls);
    r.list("grabs", &RevealingPublic::grabs);
    r.list("comms", &RevealingPublic::comms);
    r.list("outputs", &RevealingPublic::outputs);
    r.scalar("type_t", &RevealingPublic::type_t);
    r.scalar("root_c", &RevealingPublic::root_c);
    r.scalar("nonce_g", &RevealingPublic::nonce_g);
    r.scalar("audit_d", &RevealingPublic::audit_d);
    r.scalar("audit_acc", &RevealingPublic::audit_acc);
    return out;
}

Mutations<HidingPublic> mutations(const HidingPublic& p) {
    Mutations<HidingPublic> out;
    Recorder<HidingPublic> r{p, out};
    r.scalar("amount_i", &HidingPublic::amount_i);
    r.list("ids_i", &HidingPublic::ids_i);
    r.scalar("acc_i", &HidingPublic::acc_i);
    r.list("comms", &HidingPublic::comms);
    r.scalar("type_t", &HidingPublic::type_t);
    r.scalar("audit_d", &HidingPublic::audit_d);
    r.scalar("audit_acc", &HidingPublic::audit_acc);
    return out;
}

Mutations<GrabPublic> mutations(const GrabPublic& p) {
    Mutations<GrabPublic> out;
    Recorder<GrabPublic> r{p, out};
    r.list("grabs", &GrabPublic::grabs);
    r.list("comms", &GrabPublic::comms);
    r.scalar("type_t", &GrabPublic::type_t);
    r.scalar("root_c", &GrabPublic::root_c);
    r.scalar("nonce_g", &GrabPublic::nonce_g);
    r.scalar("auth_acc", &GrabPublic::auth_acc);
    return out;
}

Mutations<DvpPublic> mutations(const DvpPublic& p) {
    Mutations<DvpPublic> out;
    for (auto& [name, pub] : mutations(p.payment.pub)) {
        DvpPublic copy = p;
        copy.payment.pub = pub;
        out.emplace_back("payment." + name, std::move(copy));
    }
    Recorder<DvpPublic> r{p, out};
    r("payment.proof.binding", [](DvpPublic& x) { bump(x.payment.proof.binding); });
    r("payment.proof.circuit_id", [](DvpPublic& x) { x.payment.proof.circuit_id = "transfer"; });
    r.scalar("delivery", &DvpPublic::delivery);
    r.scalar("type_d", &DvpPublic::type_d);
    r.scalar("dvp_bind", &DvpPublic::dvp_bind);
    return out;
}

}  // namespace zkt::gen
