#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zkt/harness/network.hpp"
#include "zkt/harness/participant.hpp"
#include "zkt/harness/value.hpp"

namespace zkt {

struct TokenSpec {
    std::string name;
    U256 type;
    std::vector<std::string> issuers;         // registered public issuers
    std::vector<std::string> hidden_issuers;  // registered in the issuer tree
};

struct SimulationConfig {
    std::uint64_t seed = 1;
    unsigned tree_depth = CommitmentTree::kDefaultDepth;
    /// Banks. A fixed key is optional; otherwise one is drawn from the seed.
    std::vector<std::pair<std::string, std::optional<SecretKey>>> participants;
    /// Contract identities whose account is registered as a contract account.
    std::vector<std::string> contracts;
    std::vector<TokenSpec> tokens;
    bool dvp = false;
    std::optional<SecretKey> auditor_sk;
    std::optional<SecretKey> authority_sk;
};

struct ConservationEntry {
    std::size_t step = 0;
    std::string token;
    U256 minted, hidden, open, burned;
    std::vector<U256> minted_ids, hidden_ids, open_ids, burned_ids;
    bool ok = false;
};

void to_json(Json& j, const ConservationEntry& c);

/// What the harness itself put into one audit_d, keyed by the event that
/// published it.
struct AuditTruth {
    std::size_t event_index = 0;
    AuditPreimage preimage;
};

struct ReserveAccount {
    U256 debited, credited;
    std::vector<U256> debited_ids, credited_ids;
};

struct IssueSpec {
    std::string token;
    std::string to;
    Value value;
    std::string mode = "public";  // public | hidden | delegated
    std::string issuer = "authority";
    std::string label;
};

struct TransferSpec {
    std::string token;
    std::string from;
    std::string to;  // empty for a pure withdrawal
    Value pay;
    Value burn;
    std::vector<std::string> inputs;  // explicit token labels; coin selection otherwise
    std::string label;
    std::string delegate;   // non-empty: delegated transfer bound to this contract
    std::string submitter;  // defaults to the delegate
};

struct RevealSpec {
    std::string token;
    std::string from;
    std::string to;  // contract identity receiving the clear value
    Value value;
    std::vector<std::string> inputs;
};

struct HideSpec {
    std::string token;
    std::string contract;  // whose clear balance is hidden
    std::string to;
    Value value;
    std::string mode = "caller";  // caller | account
    std::string signer;           // account mode: whose key signs, defaults to the contract
    std::string submitter;        // account mode: defaults to the recipient
    std::string label;
};

struct GrabSpec {
    std::string token;
    std::string target;  // token label
    std::string by = "authority";
};

struct DvpSpec {
    std::string a;
    std::string b;
    std::string a_token;
    Value a_pays;
    std::string b_token;
    Value b_pays;
    std::string order = "ab";    // ab | ba | a_only | b_only
    std::string inject = "none";  // none | spend_a | spend_b | wrong_delivery
};

/// Per-leg facts a DvP flow reports so callers can check atomicity.
struct DvpLegReport {
    std::string bank;
    std::string token;
    Digest delivery;
    std::vector<TokenNullifier> nulls;
    std::vector<TokenCommitment> comms;
    bool submitted = false;
    std::string status;  // outcome of this leg's own submission
};

struct DvpReport {
    DvpLegReport a, b;
    bool settled = false;
    std::size_t settled_at_record = 0;  // network record index of the settling call
};

void to_json(Json& j, const DvpLegReport& r);
void to_json(Json& j, const DvpReport& r);

/// The multi-party world: one Network plus every participant's private
/// state, the off-chain channel and the harness's own ground truth.
class Simulation {
public:
    explicit Simulation(const SimulationConfig& config);

    Network& network() noexcept { return net_; }
    const Network& network() const noexcept { return net_; }
    const Channel& channel() const noexcept { return channel_; }

    Participant& participant(const std::string& name);
    const Participant& participant(const std::string& name) const;
    const std::map<std::string, Participant>& participants() const noexcept { return people_; }
    U256 typeOf(const std::string& token) const;
    const std::string& tokenName(const U256& type) const;
    TokenContract& contract(const std::string& token) { return net_.token(typeOf(token)); }
    const TokenContract& contract(const std::string& token) const { return net_.token(typeOf(token)); }

    /// Tags conservation entries with the scenario step being executed.
    void setStep(std::size_t step) noexcept { step_ = step; }

    // Flows. Each throws the ledger's Error when a submission is rejected;
    // harness-side state is only updated from accepted events.
    void issue(const IssueSpec& s);
    void transfer(const TransferSpec& s);
    void reveal(const RevealSpec& s);
    void hide(const HideSpec& s);
    void grab(const GrabSpec& s);
    DvpReport dvp(const DvpSpec& s);

    const std::vector<ConservationEntry>& conservationLog() const noexcept { return conservation_; }
    const std::vector<AuditTruth>& auditTruth() const noexcept { return audit_truth_; }
    const std::map<std::string, std::map<U256, ReserveAccount>>& reserves() const noexcept { return reserves_; }
    /// Every token minted into `token` so far, for audit reconciliation.
    const std::vector<std::pair<std::string, TokenPreimage>>& issued() const noexcept { return issued_; }

    /// Wallet tokens that are not unspent leaves; empty when reconciled.
    std::vector<std::string> reconcile() const;
    /// Balance-style summary of every wallet.
    Json wallets() const;
    Json reservesJson() const;
    Json issuanceRecords() const;

private:
    struct Expected {
        std::string owner;
        TokenPreimage img;
        std::string label;
    };
    struct Known {
        std::string owner;
        TokenPreimage img;
        std::optional<std::uint64_t> leaf;
    };
    struct PendingBurn {
        std::string payer;
        U256 type;
        BurnPreimage preimage;
    };
    struct Selected {
        std::vector<OwnedToken> tokens;
        std::vector<ImgPath> paths;
    };

    U256 randomWord();
    SecretKey randomKey();
    Participant& addParticipant(const std::string& name, std::optional<SecretKey> sk);
    std::string freshLabel(const std::string& hint);

    TokenPreimage makeToken(const Account& owner, const U256& type, const U256& amount, const U256& id);
    std::vector<TokenPreimage> tokensFor(const Account& owner, const U256& type, const Value& v);
    Selected select(const std::string& owner, const U256& type, const Value& need,
                    const std::vector<std::string>& labels);
    ImgPath pathFor(const U256& type, const TokenPreimage& img, std::uint64_t leaf) const;
    Value changeOf(const Selected& in, const Value& out) const;

    void expect(const std::string& owner, const TokenPreimage& img, const std::string& label);
    void expectSpend(const std::string& owner, const TokenPreimage& img, const SecretKey& sk);
    void expectAudit(const Bytes& audit_d, AuditPreimage a);

    /// Applies every event the network emitted since the last call.
    void absorb();
    void absorbEvent(std::size_t index, const Event& e);
    void logConservation();
    template <class F>
    EventList submit(F&& f);

    std::mt19937_64 rng_;
    Network net_;
    Channel channel_;
    std::map<std::string, Participant> people_;
    std::map<std::string, U256> types_;
    std::map<U256, std::string> names_;
    std::map<Digest, Expected> expected_;                   // commitment -> future owner
    std::map<Digest, std::pair<std::string, Digest>> spent_;  // nullifier -> owner, commitment
    std::map<std::string, Known> known_;                    // label registry, never shrinks
    std::map<Digest, std::string> label_of_;                // commitment -> label
    std::map<Digest, PendingBurn> pending_burns_;
    std::map<std::string, AuditPreimage> pending_audit_;   // audit_d hex
    std::map<Digest, std::pair<U256, TokenPreimage>> live_;  // ground truth of hidden tokens
    std::map<U256, Value> minted_, burned_;
    std::vector<std::pair<std::string, TokenPreimage>> issued_;
    std::map<std::string, std::map<U256, ReserveAccount>> reserves_;
    std::vector<ConservationEntry> conservation_;
    std::vector<AuditTruth> audit_truth_;
    std::size_t absorbed_ = 0;
    std::size_t step_ = 0;
    std::size_t label_counter_ = 0;
};

}  // namespace zkt
