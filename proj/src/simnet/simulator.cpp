#include "hrchain/simnet/simulator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <variant>

#include "hrchain/consensus/approval.hpp"
#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/fork_choice.hpp"
#include "hrchain/hrm/hire.hpp"
#include "hrchain/ledger/chain_store.hpp"
#include "hrchain/ledger/hash.hpp"
#include "hrchain/ledger/validation.hpp"
#include "hrchain/registry/authority.hpp"
#include "hrchain/registry/directory.hpp"
#include "hrchain/simnet/bootstrap.hpp"

namespace hrchain::simnet {

namespace {

constexpr std::size_t kMaxSyncRounds = 64;

using ledger::Block;
using ledger::Chain;
using ledger::Digest;
using ledger::Transaction;
using registry::ParticipantId;

// Application-level messages carried by Deliver events.
struct ProfileSubmission {
  ParticipantId company;
  recruit::ApplicantProfile profile;
};
struct VerifyRequest {
  std::uint64_t round = 0;
  std::size_t applicant_index = 0;
  std::size_t claim_index = 0;
  ParticipantId authority;
  ParticipantId applicant;
  recruit::Claim claim;
};
struct VerifyReply {
  std::uint64_t round = 0;
  std::size_t applicant_index = 0;
  std::size_t claim_index = 0;
  recruit::VerificationRecord record;
};
struct ContractOffer {
  std::size_t step = 0;
  hrm::HireDecision decision;
  hrm::EmploymentContract contract;
};
struct ContractAccept {
  std::size_t step = 0;
  hrm::HireDecision decision;
  hrm::EmploymentContract contract;
};
struct SyncRequest {};
struct SyncReply {
  Chain chain;
};
struct BlockRejected {
  Digest block_id;
};
struct ProposalTimeout {
  Digest block_id;
};

using AppMessage = std::variant<ProfileSubmission, VerifyRequest, VerifyReply, ContractOffer,
                                ContractAccept, SyncRequest, SyncReply, BlockRejected, ProposalTimeout>;

struct CommitMessage {
  Block block;
  consensus::Approval approval;
};

enum class EventKind { Announce, Validate, Commit, Deliver, MinerDown, MinerUp, ClientAction };

using Payload = std::variant<Transaction, Block, CommitMessage, AppMessage, ParticipantId, std::size_t>;

struct Event {
  EventKind kind = EventKind::Deliver;
  std::size_t to = 0;
  std::size_t from = 0;
  Payload payload;
};

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

struct Simulator::Impl {
  Scenario s;
  registry::NameBook names;
  std::vector<SimNode> nodes;
  std::map<ParticipantId, std::size_t> host_of;
  std::map<std::string, std::size_t, std::less<>> node_index;
  consensus::DiversityRule rule;
  std::mt19937_64 rng;

  std::map<std::pair<std::uint64_t, std::uint64_t>, Event> queue;  // (tick, seq)
  std::uint64_t seq = 0;
  std::uint64_t now = 0;
  std::uint64_t base = 0;
  std::uint64_t rounds = 0;
  bool ran = false;

  std::map<ParticipantId, int> down_count;
  bool stalled = false;
  std::size_t sync_rounds = 0;

  SimReport report;
  std::map<Digest, std::uint64_t> first_append;
  std::map<Digest, std::size_t> trace_index;

  explicit Impl(Scenario scenario) : s(std::move(scenario)), rule(s.diversity), rng(s.seed) {
    check_scenario(s);
    auto miner_names = s.miner_names();
    auto miners = miner_set(s.roster, miner_names);
    Chain chain = s.initial_chain ? *s.initial_chain
                                  : Chain(make_deployment_genesis(s.roster, miner_names));
    if (chain.empty()) throw SimnetError(SimnetErrc::MalformedScenario, "empty initial chain");
    base = chain.tip().header.timestamp;
    now = base;
    names = registry::NameBook(s.roster);

    for (const auto& e : s.roster) {
      if (!e.is_node()) continue;
      SimNode node(miners);
      node.name = e.name;
      node.role = e.role;
      auto keys = e.keys();
      node.id = keys.id();
      node.keys.emplace(keys.id(), keys);
      adopt_chain(node, chain);
      host_of[node.id] = nodes.size();
      node_index[e.name] = nodes.size();
      nodes.push_back(std::move(node));
    }
    for (const auto& e : s.roster) {
      if (e.is_node()) continue;
      auto host = node_index.find(*e.host);
      auto keys = e.keys();
      nodes[host->second].keys.emplace(keys.id(), keys);
      host_of[keys.id()] = host->second;
    }

    for (const auto& w : s.inactivity) {
      auto id = names.id_of(w.miner).value();
      push(base + w.from, {EventKind::MinerDown, 0, 0, id});
      if (w.to) push(base + *w.to, {EventKind::MinerUp, 0, 0, id});
    }
    for (std::size_t i = 0; i < s.script.size(); ++i) {
      auto actor = actor_of(s.script[i].action);
      push(base + s.script[i].tick, {EventKind::ClientAction, host(actor), host(actor), i});
    }
  }

  // ---- plumbing ----

  void push(std::uint64_t tick, Event ev) { queue.emplace(std::pair{tick, seq++}, std::move(ev)); }

  std::size_t host(std::string_view name) const { return host_of.at(id(name)); }
  ParticipantId id(std::string_view name) const {
    auto v = names.id_of(name);
    if (!v) throw SimnetError(SimnetErrc::MalformedScenario, "unknown participant " + std::string(name));
    return *v;
  }

  static const std::string& actor_of(const Action& action) {
    return std::visit(Overloaded{
                          [](const RecordAction& a) -> const std::string& { return a.authority; },
                          [](const ClaimAction& a) -> const std::string& { return a.applicant; },
                          [](const ApplyAction& a) -> const std::string& { return a.applicant; },
                          [](const RequireAction& a) -> const std::string& { return a.company; },
                          [](const RankAction& a) -> const std::string& { return a.company; },
                          [](const HireAction& a) -> const std::string& { return a.company; },
                          [](const EventAction& a) -> const std::string& { return a.issuer; },
                          [](const GrantAction& a) -> const std::string& { return a.grantor; },
                      },
                      action);
  }

  bool lossy() const { return s.loss > Decimal() || s.reorder > 0; }

  void send(std::size_t from, std::size_t to, EventKind kind, Payload payload) {
    ++report.messages_sent;
    if (from != to && s.loss > Decimal()) {
      if (static_cast<std::int64_t>(rng() % Decimal::kScale) < s.loss.units()) {
        ++report.messages_dropped;
        return;
      }
    }
    std::uint64_t delay = 1 + s.latency;
    if (from != to && s.reorder > 0) delay += rng() % (s.reorder + 1);
    push(now + delay, {kind, to, from, std::move(payload)});
  }

  void broadcast(std::size_t from, EventKind kind, const Payload& payload) {
    for (std::size_t i = 0; i < nodes.size(); ++i) send(from, i, kind, payload);
  }

  void deliver(std::size_t from, std::size_t to, AppMessage msg) {
    send(from, to, EventKind::Deliver, std::move(msg));
  }

  void fail(std::size_t step, const std::string& error) { report.failures.push_back({now, step, error}); }

  // ---- transaction lifecycle ----

  void announce(std::size_t origin, const Transaction& tx) {
    auto txid = ledger::tx_id(tx);
    trace_index.emplace(txid, report.txs.size());
    report.txs.push_back({txid, tx.kind, tx.author, now, std::nullopt, std::nullopt});
    broadcast(origin, EventKind::Announce, tx);
  }

  void on_announce(std::size_t n, const Transaction& tx) {
    add_to_mempool(nodes[n], tx);
    try_propose(n);
  }

  void try_propose(std::size_t n) {
    auto& node = nodes[n];
    if (!node.miners.contains(node.id) || !node.miners.is_active(node.id)) return;
    const auto height = node.chain.height() + 1;
    if (node.pending && node.pending->height == height) return;
    auto txs = select_transactions(node, s.batch_contracts, s.max_block_txs);
    if (txs.empty()) return;
    auto eligible = consensus::eligible_miners(node.chain, node.miners, rule);
    auto proposer = consensus::designated_proposer(height, node.miners, eligible);
    if (!proposer || *proposer != node.id) return;
    auto validator = consensus::designated_validator(node.id, node.miners);
    if (!validator) return;

    auto block = ledger::build_block(node.chain.tip(), std::move(txs), node.id,
                                     std::max(now, node.chain.tip().header.timestamp));
    ledger::sign_block(block, node.keys.at(node.id));
    auto bid = ledger::block_id(block);
    node.pending = PendingProposal{height, bid, *validator};
    send(n, host_of.at(*validator), EventKind::Validate, std::move(block));
    if (lossy()) {
      push(now + 2 * (1 + s.latency + s.reorder) + 1,
           {EventKind::Deliver, n, n, AppMessage{ProposalTimeout{bid}}});
    }
  }

  void on_validate(std::size_t n, std::size_t from, const Block& block) {
    auto& node = nodes[n];
    // An inactive miner neither proposes nor validates.
    if (!node.miners.is_active(node.id)) return;
    auto bid = ledger::block_id(block);
    auto expected = consensus::designated_validator(block.header.miner, node.miners);
    if (!expected || *expected != node.id) {
      deliver(n, from, BlockRejected{bid});
      return;
    }
    if (block.header.height > node.chain.height() + 1) deliver(n, from, SyncRequest{});
    // Proposer missed a commit and is building on an old tip.
    if (block.header.height <= node.chain.height()) deliver(n, from, SyncReply{node.chain});
    auto outcome = consensus::approve_block(block, node.keys.at(node.id), node.chain.blocks(), rule,
                                            node.miners);
    if (std::holds_alternative<consensus::Rejection>(outcome)) {
      ++report.rejected_blocks;
      deliver(n, from, BlockRejected{bid});
      return;
    }
    broadcast(n, EventKind::Commit, CommitMessage{block, std::get<consensus::Approval>(outcome)});
  }

  void note_append(const Block& block) { first_append.emplace(ledger::block_id(block), now); }

  void on_commit(std::size_t n, std::size_t from, const CommitMessage& msg) {
    auto& node = nodes[n];
    const auto& block = msg.block;
    const auto h = block.header.height;
    if (h <= node.chain.height() && ledger::block_id(node.chain.at(h)) == ledger::block_id(block)) return;
    if (h == node.chain.height() + 1 && block.header.prev_hash == ledger::block_id(node.chain.tip())) {
      if (consensus::verify_approval(msg.approval, block, node.miners) &&
          !ledger::validate_block(block, node.chain.blocks(), rule, node.miners)) {
        note_append(block);
        append_block(node, block);
        try_propose(n);
      } else {
        ++report.rejected_blocks;
      }
      return;
    }
    // A gap or a competing branch: fetch the sender's chain and let fork
    // choice decide.
    deliver(n, from, SyncRequest{});
  }

  void on_sync_reply(std::size_t n, const Chain& theirs) {
    auto& node = nodes[n];
    std::array<Chain, 2> candidates{node.chain, theirs};
    const Chain* best = nullptr;
    try {
      best = &consensus::fork_choice(candidates, rule, node.miners);
    } catch (const consensus::ConsensusError&) {
      return;
    }
    if (*best == node.chain) return;
    for (const auto& b : best->blocks()) note_append(b);
    adopt_chain(node, *best);
    try_propose(n);
  }

  void on_rejected(std::size_t n, const Digest& bid) {
    auto& node = nodes[n];
    if (node.pending && node.pending->block_id == bid) {
      node.pending.reset();
      try_propose(n);
    }
  }

  void on_activity(const ParticipantId& miner, bool up) {
    auto& count = down_count[miner];
    count += up ? -1 : 1;
    const bool active = count <= 0;
    for (auto& node : nodes) {
      node.miners.set_active(miner, active);
      if (node.pending && !node.miners.is_active(node.pending->validator)) node.pending.reset();
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) try_propose(i);
  }

  // ---- client actions ----

  void on_action(std::size_t n, std::size_t step) {
    try {
      std::visit([&](const auto& a) { act(n, step, a); }, s.script[step].action);
    } catch (const std::exception& e) {
      fail(step, e.what());
    }
  }

  void act(std::size_t n, std::size_t, const RecordAction& a) {
    nodes[n].authority_stores[id(a.authority)].add(id(a.applicant), a.kind, a.statement);
  }

  void act(std::size_t n, std::size_t, const ClaimAction& a) {
    auto applicant = id(a.applicant);
    auto& profile = nodes[n].own_profiles[applicant];
    profile.applicant = applicant;
    ParticipantId issuer = a.issuer.empty() ? ParticipantId{} : id(a.issuer);
    profile.claims.push_back(recruit::Claim::make(a.kind, issuer, a.statement));
  }

  void act(std::size_t n, std::size_t, const ApplyAction& a) {
    auto applicant = id(a.applicant);
    auto& profile = nodes[n].own_profiles[applicant];
    profile.applicant = applicant;
    deliver(n, host(a.company), ProfileSubmission{id(a.company), profile});
  }

  void act(std::size_t n, std::size_t, const RequireAction& a) {
    auto company = id(a.company);
    auto& spec = nodes[n].specs[company];
    spec.company = company;
    spec.items.push_back(a.item);
  }

  void act(std::size_t n, std::size_t step, const RankAction& a) {
    auto& node = nodes[n];
    auto company = id(a.company);
    auto& spec = node.specs[company];
    spec.company = company;
    spec.validate();
    auto directory = registry::replay_directory(node.chain);

    RankRound round;
    round.id = ++rounds;
    round.step = step;
    round.company = company;
    round.profiles = node.received_profiles[company];
    for (std::size_t i = 0; i < round.profiles.size(); ++i) {
      const auto& profile = round.profiles[i];
      round.records.emplace_back(profile.claims.size());
      for (std::size_t j = 0; j < profile.claims.size(); ++j) {
        const auto& claim = profile.claims[j];
        std::optional<ParticipantId> authority;
        try {
          authority = registry::authority_for(claim.kind, claim.issuer, directory);
        } catch (const registry::RegistryError&) {
        }
        if (!authority || !host_of.contains(*authority)) {
          round.records[i][j] = recruit::unattested_record(claim);
          continue;
        }
        ++round.outstanding;
        deliver(n, host_of.at(*authority),
                VerifyRequest{round.id, i, j, *authority, profile.applicant, claim});
      }
    }
    node.round = std::move(round);
    if (node.round->outstanding == 0) finish_round(n);
  }

  void finish_round(std::size_t n) {
    auto& node = nodes[n];
    auto round = std::move(*node.round);
    node.round.reset();
    std::vector<std::vector<recruit::VerificationRecord>> records;
    for (auto& per_profile : round.records) {
      auto& out = records.emplace_back();
      for (auto& r : per_profile) out.push_back(std::move(*r));
    }
    try {
      auto list = recruit::rank_verified(round.profiles, records, node.specs[round.company]);
      node.latest_ranking[round.company] = list;
      report.rankings.push_back({now, round.company, std::move(list)});
    } catch (const std::exception& e) {
      fail(round.step, e.what());
    }
  }

  void on_verify_request(std::size_t n, std::size_t from, const VerifyRequest& req) {
    auto& node = nodes[n];
    const auto& keys = node.keys.at(req.authority);
    auto record = recruit::attest(req.applicant, req.claim, keys, node.authority_stores[req.authority]);
    recruit::ClaimAttestation payload{req.applicant, req.claim.kind, record};
    auto tx = ledger::make_transaction(ledger::TxKind::ClaimAttestation, payload.encode(), keys,
                                       take_nonce(node, req.authority));
    announce(n, tx);
    deliver(n, from, VerifyReply{req.round, req.applicant_index, req.claim_index, std::move(record)});
  }

  void on_verify_reply(std::size_t n, const VerifyReply& reply) {
    auto& node = nodes[n];
    if (!node.round || node.round->id != reply.round) return;
    auto& slot = node.round->records.at(reply.applicant_index).at(reply.claim_index);
    if (slot) return;
    slot = reply.record;
    if (--node.round->outstanding == 0) finish_round(n);
  }

  void act(std::size_t n, std::size_t step, const HireAction& a) {
    auto& node = nodes[n];
    auto company = id(a.company);
    auto applicant = id(a.applicant);
    auto ranking = node.latest_ranking.find(company);
    if (ranking == node.latest_ranking.end()) {
      throw hrm::HrmError(hrm::HrmErrc::NotInRankedList, "no ranking yet");
    }
    auto rank = ranking->second.rank_of(applicant);
    if (!rank) throw hrm::HrmError(hrm::HrmErrc::NotInRankedList, a.applicant);

    hrm::EmploymentContract contract;
    for (std::size_t i = 0; i < a.sections.size(); ++i) contract.section(i) = a.sections[i];
    contract.employee = applicant;
    contract.employer = company;
    contract.sign_as_employer(node.keys.at(company));
    deliver(n, host_of.at(applicant), ContractOffer{step, {company, applicant, *rank}, std::move(contract)});
  }

  void on_offer(std::size_t n, std::size_t from, ContractOffer offer) {
    offer.contract.sign_as_employee(nodes[n].keys.at(offer.decision.applicant));
    deliver(n, from, ContractAccept{offer.step, offer.decision, std::move(offer.contract)});
  }

  void on_accept(std::size_t n, const ContractAccept& accept) {
    auto& node = nodes[n];
    const auto& company = accept.decision.company;
    try {
      auto ranking = node.latest_ranking.find(company);
      if (ranking == node.latest_ranking.end()) throw hrm::HrmError(hrm::HrmErrc::NotInRankedList);
      hrm::check_hire(accept.decision, accept.contract, ranking->second,
                      registry::replay_directory(node.chain));
      announce(n, hrm::make_contract_tx(accept.contract, node.keys.at(company), take_nonce(node, company)));
    } catch (const std::exception& e) {
      fail(accept.step, e.what());
    }
  }

  void act(std::size_t n, std::size_t, const EventAction& a) {
    auto& node = nodes[n];
    hrm::HrEventRecord event;
    event.subject = id(a.subject);
    event.kind = a.kind;
    event.details = a.details;
    event.effective_tick = now;
    event.issuer = id(a.issuer);
    event.sign(node.keys.at(event.issuer));
    hrm::check_hr_event(event, node.chain.blocks());
    announce(n, hrm::make_hr_event_tx(event, node.keys.at(event.issuer), take_nonce(node, event.issuer)));
  }

  void act(std::size_t n, std::size_t, const GrantAction& a) {
    auto& node = nodes[n];
    auto grantor = id(a.grantor);
    auto directory = registry::replay_directory(node.chain);
    if (!directory.holds(grantor, registry::Right::Mine)) {
      throw registry::RegistryError(registry::RegistryErrc::InvalidGrant, a.grantor + " cannot grant");
    }
    const auto& subject = directory.get(id(a.subject));
    registry::GrantEntry entry{subject.id, subject.role, subject.public_key, a.rights};
    // Dry run so an unacceptable grant fails here rather than being
    // silently skipped when the block is folded.
    directory.apply_grant(grantor, entry, false);
    registry::PermissionGrant grant{{std::move(entry)}};
    announce(n, ledger::make_transaction(ledger::TxKind::PermissionGrant, grant.encode(),
                                         node.keys.at(grantor), take_nonce(node, grantor)));
  }

  // ---- driver ----

  void dispatch(Event& ev) {
    switch (ev.kind) {
      case EventKind::Announce: on_announce(ev.to, std::get<Transaction>(ev.payload)); break;
      case EventKind::Validate: on_validate(ev.to, ev.from, std::get<Block>(ev.payload)); break;
      case EventKind::Commit: on_commit(ev.to, ev.from, std::get<CommitMessage>(ev.payload)); break;
      case EventKind::MinerDown: on_activity(std::get<ParticipantId>(ev.payload), false); break;
      case EventKind::MinerUp: on_activity(std::get<ParticipantId>(ev.payload), true); break;
      case EventKind::ClientAction: on_action(ev.to, std::get<std::size_t>(ev.payload)); break;
      case EventKind::Deliver: {
        const auto n = ev.to, from = ev.from;
        std::visit(Overloaded{
                       [&](ProfileSubmission& m) {
                         auto& list = nodes[n].received_profiles[m.company];
                         auto it = std::find_if(list.begin(), list.end(), [&](const auto& p) {
                           return p.applicant == m.profile.applicant;
                         });
                         if (it == list.end()) {
                           list.push_back(std::move(m.profile));
                         } else {
                           *it = std::move(m.profile);
                         }
                       },
                       [&](VerifyRequest& m) { on_verify_request(n, from, m); },
                       [&](VerifyReply& m) { on_verify_reply(n, m); },
                       [&](ContractOffer& m) { on_offer(n, from, std::move(m)); },
                       [&](ContractAccept& m) { on_accept(n, m); },
                       [&](SyncRequest&) { deliver(n, from, SyncReply{nodes[n].chain}); },
                       [&](SyncReply& m) { on_sync_reply(n, m.chain); },
                       [&](BlockRejected& m) { on_rejected(n, m.block_id); },
                       [&](ProposalTimeout& m) { on_rejected(n, m.block_id); },
                   },
                   std::get<AppMessage>(ev.payload));
        break;
      }
    }
  }

  const Chain& reference_chain() const {
    const Chain* best = &nodes.front().chain;
    for (const auto& node : nodes) {
      if (consensus::preferred(node.chain, *best)) best = &node.chain;
    }
    return *best;
  }

  /// Work is waiting but no proposer/validator pair can act on the best
  /// chain under the current activity.
  bool stalled_now() const {
    bool pending = std::any_of(nodes.begin(), nodes.end(), [](const auto& n) { return !n.mempool.empty(); });
    if (!pending) return false;
    const auto& miners = nodes.front().miners;
    const auto& chain = reference_chain();
    auto eligible = consensus::eligible_miners(chain, miners, rule);
    auto proposer = consensus::designated_proposer(chain.height() + 1, miners, eligible);
    return !proposer || !consensus::designated_validator(*proposer, miners);
  }

  void observe_stall() {
    bool now_stalled = stalled_now();
    if (now_stalled && !stalled) report.stalls.push_back({now, std::nullopt});
    if (!now_stalled && stalled) report.stalls.back().end = now;
    stalled = now_stalled;
  }

  bool all_equal() const {
    return std::all_of(nodes.begin(), nodes.end(), [&](const auto& n) { return n.chain == nodes.front().chain; });
  }

  // Lost commits leave stragglers once traffic dies down. Each round every
  // node asks every other for its chain; capped so a partition cannot spin.
  bool schedule_sync_round() {
    if (!lossy() || all_equal() || sync_rounds >= kMaxSyncRounds) return false;
    ++sync_rounds;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (i != j) deliver(i, j, SyncRequest{});
      }
    }
    return true;
  }

  SimReport run() {
    if (ran) throw std::logic_error("Simulator::run called twice");
    ran = true;
    report.seed = s.seed;
    for (;;) {
      if (queue.empty() && !schedule_sync_round()) break;
      const auto tick = queue.begin()->first.first;
      if (tick > base + s.tick_limit) {
        report.tick_limit_reached = true;
        break;
      }
      now = tick;
      while (!queue.empty() && queue.begin()->first.first == tick) {
        auto ev = std::move(queue.extract(queue.begin()).mapped());
        dispatch(ev);
      }
      observe_stall();
    }
    finish();
    return report;
  }

  void finish() {
    report.final_tick = now;
    const bool recovery_scheduled = std::any_of(queue.begin(), queue.end(), [](const auto& kv) {
      return kv.second.kind == EventKind::MinerUp;
    });
    report.permanent_stall = stalled && !recovery_scheduled;

    const auto& best = reference_chain();
    for (const auto& block : best.blocks()) {
      auto bid = ledger::block_id(block);
      for (const auto& tx : block.transactions) {
        auto it = trace_index.find(ledger::tx_id(tx));
        if (it == trace_index.end()) continue;
        auto& trace = report.txs[it->second];
        trace.height = block.header.height;
        trace.commit_tick = first_append.at(bid);
      }
    }
    report.converged = all_equal();
    for (const auto& node : nodes) {
      report.nodes.push_back({node.name, node.chain.height(), ledger::block_id(node.chain.tip()),
                              ledger::double_hash(ledger::encode_chain_frames(node.chain.blocks()))});
    }
  }
};

Simulator::Simulator(Scenario scenario) : impl_(std::make_unique<Impl>(std::move(scenario))) {}
Simulator::~Simulator() = default;

SimReport Simulator::run() { return impl_->run(); }

const std::vector<SimNode>& Simulator::nodes() const { return impl_->nodes; }

const SimNode& Simulator::node(std::string_view name) const {
  auto it = impl_->node_index.find(name);
  if (it == impl_->node_index.end()) throw std::out_of_range("no node " + std::string(name));
  return impl_->nodes[it->second];
}

const registry::NameBook& Simulator::names() const { return impl_->names; }

SimReport run(const Scenario& scenario) { return Simulator(scenario).run(); }

}  // namespace hrchain::simnet
