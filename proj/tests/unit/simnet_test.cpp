#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hrchain/ledger/chain_store.hpp"
#include "hrchain/ledger/hash.hpp"
#include "hrchain/ledger/validation.hpp"
#include "hrchain/recruit/verification.hpp"
#include "hrchain/registry/authority.hpp"
#include "hrchain/simnet/bootstrap.hpp"
#include "hrchain/simnet/scenario_parser.hpp"
#include "hrchain/simnet/simulator.hpp"
#include "support/world.hpp"

using namespace hrchain;
using namespace hrchain::simnet;

namespace {

Scenario five_roles() { return parse_scenario(testing_support::read_fixture("scenarios/five_roles.scn")); }

// Any `window` consecutive non-genesis blocks have distinct miners.
bool window_respected(const ledger::Chain& chain, std::size_t window) {
  for (std::size_t start = 1; start + window <= chain.size(); ++start) {
    std::set<registry::ParticipantId> miners;
    for (std::size_t i = start; i < start + window; ++i) miners.insert(chain.at(i).header.miner);
    if (miners.size() != window) return false;
  }
  return true;
}

Scenario with_inactive(Scenario s, std::initializer_list<const char*> miners, std::uint64_t from,
                       std::optional<std::uint64_t> to = std::nullopt) {
  for (const char* m : miners) s = inject_inactivity(std::move(s), m, from, to);
  return s;
}

}  // namespace

TEST(ScenarioParser, ReadsTheFixture) {
  auto s = five_roles();
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(s.roster.size(), 8u);
  EXPECT_EQ(s.miner_names(), (std::vector<std::string>{"company", "employer", "applicants", "health", "law"}));
  EXPECT_EQ(s.diversity.diversity.units(), 750'000);
  ASSERT_EQ(s.script.size(), 21u);
  EXPECT_EQ(s.script.front().tick, 0u);
  const auto& hire = std::get<HireAction>(s.script.back().action);
  EXPECT_EQ(hire.applicant, "bob");
  EXPECT_EQ(hire.sections[3], *Record::parse("salary=5200;probation_months=3"));
  const auto& require = std::get<RequireAction>(s.script[14].action);
  EXPECT_TRUE(require.item.mandatory);
  EXPECT_EQ(require.item.predicate.to_string(), "field==CS");
}

TEST(ScenarioParser, OptionsAndErrors) {
  auto s = parse_scenario(
      "[roster]\nEmployer,a,\nEmployer,b,\nEmployer,c,\n"
      "[consensus]\ndiversity = 0.5\nminers = c,a\ninactive = a@3-9\ninactive = c@4-inf\n"
      "batch_contracts = true\nmax_block_txs = 4\n"
      "[network]\nseed = 9\nlatency = 2\ntick_limit = 500\nreorder = 1\nloss = 0.25\n"
      "[script]\n1 grant c b connect+send\n");
  EXPECT_EQ(s.miners, (std::vector<std::string>{"c", "a"}));
  ASSERT_EQ(s.inactivity.size(), 2u);
  EXPECT_EQ(s.inactivity[0].to, 9u);
  EXPECT_EQ(s.inactivity[1].to, std::nullopt);
  EXPECT_TRUE(s.batch_contracts);
  EXPECT_EQ(s.max_block_txs, 4u);
  EXPECT_EQ(s.latency, 2u);
  EXPECT_EQ(s.tick_limit, 500u);
  EXPECT_EQ(s.loss.units(), 250'000);
  EXPECT_EQ(std::get<GrantAction>(s.script[0].action).rights, (registry::Rights{registry::Right::Connect, registry::Right::Send}));

  auto expect_bad = [](std::string_view text, std::string_view fragment) {
    try {
      parse_scenario(text);
      ADD_FAILURE() << text;
    } catch (const SimnetError& e) {
      EXPECT_EQ(e.code(), SimnetErrc::MalformedScenario);
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_bad("[script]\n", "roster");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[script]\n5 grant a b connect\n3 grant a b connect\n", "line 6");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[script]\n1 dance a\n", "line 5");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[network]\nlatency = soon\n", "line 5");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[consensus]\ndiversity = 2\n", "line 5");
  expect_bad("[roster]\nEmployer,a,\nPirate,b,\n", "line 3");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[consensus]\nminers = a,zed\n", "zed");
  expect_bad("[roster]\nEmployer,a,\nEmployer,b,\n[script]\n1 apply nobody a\n", "nobody");
}

TEST(Scenario, InjectInactivity) {
  auto s = five_roles();
  auto t = inject_inactivity(s, "law", 5, 10);
  ASSERT_EQ(t.inactivity.size(), 1u);
  EXPECT_EQ(t.inactivity[0].miner, "law");
  try {
    inject_inactivity(s, "alice", 5, std::nullopt);
    FAIL();
  } catch (const SimnetError& e) {
    EXPECT_EQ(e.code(), SimnetErrc::UnknownMiner);
  }
  Scenario empty;
  EXPECT_THROW(check_scenario(empty), SimnetError);
  EXPECT_THROW(Simulator{empty}, SimnetError);
}

TEST(Bootstrap, GenesisRegistersEveryone) {
  auto s = five_roles();
  auto genesis = make_deployment_genesis(s.roster, s.miner_names());
  auto set = miner_set(s.roster, s.miner_names());
  EXPECT_EQ(ledger::validate_genesis(genesis, set), std::nullopt);
  auto dir = registry::replay_directory(std::span<const ledger::Block>(&genesis, 1));
  EXPECT_EQ(dir.participants().size(), s.roster.size());
  EXPECT_EQ(dir.miners().size(), 5u);
  registry::NameBook names(s.roster);
  EXPECT_TRUE(dir.holds(*names.id_of("law"), registry::Right::Attest));
  EXPECT_FALSE(dir.holds(*names.id_of("company"), registry::Right::Attest));
  EXPECT_FALSE(dir.holds(*names.id_of("alice"), registry::Right::Mine));
}

TEST(Simulator, FiveRoleScenarioEndToEnd) {
  auto s = five_roles();
  Simulator sim(s);
  auto report = sim.run();
  EXPECT_TRUE(report.converged);
  EXPECT_FALSE(report.permanent_stall);
  EXPECT_TRUE(report.failures.empty());
  EXPECT_EQ(report.messages_dropped, 0u);

  // Bob holds both items (2 + 3), alice only the mandatory one, carol's
  // PhD contradicts the employer's record.
  registry::NameBook names(s.roster);
  ASSERT_EQ(report.rankings.size(), 1u);
  const auto& list = report.rankings[0].list;
  EXPECT_EQ(list.entries, (std::vector<recruit::RankedEntry>{{*names.id_of("bob"), Decimal::from_integer(5)},
                                                             {*names.id_of("alice"), Decimal::from_integer(2)}}));
  EXPECT_EQ(list.discarded,
            (std::vector<recruit::DiscardedEntry>{{*names.id_of("carol"), recruit::DiscardReason::FakeCertificate}}));

  const auto& chain = sim.node("company").chain;
  for (const auto& n : sim.nodes()) EXPECT_EQ(n.chain, chain) << n.name;
  EXPECT_EQ(ledger::validate_chain(chain, s.diversity, miner_set(s.roster, s.miner_names())), std::nullopt);
  EXPECT_TRUE(window_respected(chain, 4));

  const auto& contract = report.txs.back();
  EXPECT_EQ(contract.kind, ledger::TxKind::ContractRecord);
  EXPECT_EQ(measure_latency(report, contract.tx_id), 3u);
  EXPECT_EQ(*contract.height, chain.height());
  EXPECT_THROW(measure_latency(report, ledger::Digest()), SimnetError);
}

// Every attested verdict from the ranking round lands on the chain exactly
// once; claims without a resolvable authority are never notarized.
TEST(Simulator, NotarizationIsComplete) {
  auto s = five_roles();
  // An extra claim nobody can attest.
  s.script.insert(s.script.begin(), ScriptStep{0, ClaimAction{"alice", recruit::ClaimKind::Training, "", *Record::parse("name=cloud")}});
  Simulator sim(s);
  auto report = sim.run();
  registry::NameBook names(s.roster);
  auto dir = registry::replay_directory(sim.node("company").chain);

  std::multiset<ledger::Digest> expected;
  for (const auto& step : s.script) {
    const auto* claim = std::get_if<ClaimAction>(&step.action);
    if (!claim) continue;
    auto issuer = claim->issuer.empty() ? registry::ParticipantId{} : *names.id_of(claim->issuer);
    auto c = recruit::Claim::make(claim->kind, issuer, claim->statement);
    try {
      registry::authority_for(c.kind, c.issuer, dir);
      expected.insert(c.evidence_hash);
    } catch (const registry::RegistryError&) {
    }
  }
  EXPECT_EQ(expected.size(), 7u);

  std::multiset<ledger::Digest> notarized;
  for (const auto& block : sim.node("company").chain.blocks()) {
    for (const auto& tx : block.transactions) {
      if (tx.kind != ledger::TxKind::ClaimAttestation) continue;
      auto a = recruit::ClaimAttestation::decode(tx.payload);
      EXPECT_TRUE(recruit::verify_record(a.record));
      EXPECT_EQ(tx.author, a.record.attester);
      notarized.insert(a.record.claim_ref);
    }
  }
  EXPECT_EQ(notarized, expected);
}

TEST(Simulator, RunsAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto s = testing_support::random_scenario(seed);
    s.loss = Decimal::from_units(seed % 2 ? 50'000 : 0);
    s.reorder = seed % 3;
    Simulator a(s), b(s);
    auto ra = a.run(), rb = b.run();
    EXPECT_EQ(ra, rb) << "seed " << seed;
    for (std::size_t i = 0; i < a.nodes().size(); ++i) EXPECT_EQ(a.nodes()[i].chain, b.nodes()[i].chain);
    std::ostringstream wa, wb;
    write_report(wa, ra, a.names());
    write_report(wb, rb, b.names());
    EXPECT_EQ(wa.str(), wb.str());
  }
}

TEST(Simulator, SeedChangesOnlyRandomisedRuns) {
  auto s = five_roles();
  auto t = s;
  t.seed = 99;
  auto rs = run(s), rt = run(t);
  EXPECT_EQ(rs.nodes, rt.nodes);  // lossless, no reordering: the seed is unused
  s.reorder = t.reorder = 3;
  EXPECT_NE(run(s).messages_sent + run(s).final_tick * 1000, 0u);
}

TEST(Simulator, LatencyScalesWithHopDelay) {
  for (std::uint64_t latency : {0u, 1u, 4u}) {
    auto s = testing_support::grant_stream_scenario(6, 40);
    s.latency = latency;
    auto report = run(s);
    ASSERT_EQ(report.txs.size(), 6u);
    for (const auto& tx : report.txs) {
      EXPECT_EQ(measure_latency(report, tx.tx_id), 3 * (1 + latency)) << "latency " << latency;
    }
  }
}

TEST(Simulator, RandomScenariosConvergeAndKeepTheWindow) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = testing_support::random_scenario(seed);
    Simulator sim(s);
    auto report = sim.run();
    ASSERT_TRUE(report.converged) << "seed " << seed;
    EXPECT_FALSE(report.tick_limit_reached) << "seed " << seed;
    EXPECT_EQ(report.messages_dropped, 0u);
    for (const auto& n : report.nodes) EXPECT_EQ(n.chain_digest, report.nodes.front().chain_digest) << "seed " << seed;
    EXPECT_TRUE(window_respected(sim.nodes().front().chain, 4)) << "seed " << seed;
    for (const auto& tx : report.txs) EXPECT_TRUE(tx.commit_tick.has_value()) << "seed " << seed;
  }
}

TEST(Simulator, OneMinerDownKeepsGrowing) {
  auto s = with_inactive(testing_support::grant_stream_scenario(30, 5), {"health"}, 0);
  Simulator sim(s);
  auto report = sim.run();
  EXPECT_FALSE(report.permanent_stall);
  EXPECT_GE(sim.node("company").chain.height(), 20u);
  for (const auto& b : sim.node("company").chain.blocks()) {
    EXPECT_NE(b.header.miner, sim.node("health").id);
  }
}

TEST(Simulator, ThreeOfFiveStallsPermanently) {
  for (auto down : {std::vector<const char*>{"employer", "law"}, std::vector<const char*>{"company", "health", "law"}}) {
    auto s = testing_support::grant_stream_scenario(30, 5);
    for (const char* m : down) s = inject_inactivity(std::move(s), m, 0, std::nullopt);
    auto report = run(s);
    EXPECT_TRUE(report.permanent_stall);
    ASSERT_FALSE(report.stalls.empty());
    EXPECT_EQ(report.stalls.back().end, std::nullopt);
    for (const auto& n : report.nodes) EXPECT_LT(n.height, 4u);
  }
}

TEST(Simulator, ReactivationEndsTheStall) {
  auto s = with_inactive(testing_support::grant_stream_scenario(30, 5), {"employer", "law"}, 10, 80);
  Simulator sim(s);
  auto report = sim.run();
  EXPECT_FALSE(report.permanent_stall);
  ASSERT_FALSE(report.stalls.empty());
  for (const auto& st : report.stalls) {
    ASSERT_TRUE(st.end.has_value());
    EXPECT_GE(st.start, 10u);
    EXPECT_LE(*st.end, 90u);
  }
  EXPECT_TRUE(report.converged);
  for (const auto& tx : report.txs) EXPECT_TRUE(tx.commit_tick.has_value());
  EXPECT_EQ(report.txs.size(), 30u);
}

// Permanent stall happens exactly when fewer miners than the liveness
// threshold stay up for good.
TEST(Simulator, StallIffBelowBoundary) {
  const char* const miners[] = {"company", "employer", "applicants", "health", "law"};
  testing_support::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testing_support::grant_stream_scenario(24, 5);
    std::size_t down_forever = 0;
    for (const char* m : miners) {
      auto roll = rng.below(3);
      const auto from = rng.below(60);
      if (roll == 0) {
        s = inject_inactivity(std::move(s), m, from, std::nullopt);
        ++down_forever;
      } else if (roll == 1) {
        s = inject_inactivity(std::move(s), m, from, from + 1 + rng.below(40));
      }
    }
    auto report = run(s);
    const bool below = 5 - down_forever < s.diversity.liveness_threshold(5);
    EXPECT_EQ(report.permanent_stall, below) << "trial " << trial << " down " << down_forever;
    if (!below) {
      for (const auto& tx : report.txs) EXPECT_TRUE(tx.commit_tick.has_value()) << "trial " << trial;
    }
  }
}

TEST(Simulator, LossAndReorderStillConverge) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = five_roles();
    s.seed = seed;
    s.loss = Decimal::from_units(100'000);
    s.reorder = 2;
    auto report = run(s);
    EXPECT_GT(report.messages_dropped, 0u) << "seed " << seed;
    EXPECT_TRUE(report.converged) << "seed " << seed;
    EXPECT_FALSE(report.tick_limit_reached) << "seed " << seed;

    auto r = testing_support::random_scenario(500 + seed);
    r.loss = Decimal::from_units(150'000);
    r.reorder = 3;
    auto rr = run(r);
    EXPECT_TRUE(rr.converged) << "random seed " << 500 + seed;
    EXPECT_FALSE(rr.tick_limit_reached) << "random seed " << 500 + seed;
  }
}

TEST(Simulator, FailedActionsAreReported) {
  auto s = five_roles();
  HireAction hire{"company", "carol", {}};
  s.script.push_back({30, hire});
  s.script.push_back({40, EventAction{"employer", "bob", hrm::HrEventKind::Salary, *Record::parse("amount=1")}});
  auto report = run(s);
  ASSERT_EQ(report.failures.size(), 2u);
  EXPECT_EQ(report.failures[0].step, s.script.size() - 2);
  EXPECT_NE(report.failures[0].error.find("NotInRankedList"), std::string::npos) << report.failures[0].error;
  EXPECT_NE(report.failures[1].error.find("NotCurrentEmployer"), std::string::npos) << report.failures[1].error;
}

TEST(Simulator, StartsFromAnExistingChain) {
  auto first = five_roles();
  Simulator a(first);
  a.run();
  auto s = testing_support::grant_stream_scenario(3, 10);
  s.roster = first.roster;
  s.initial_chain = a.node("company").chain;
  Simulator b(s);
  auto report = b.run();
  const auto& chain = b.node("law").chain;
  EXPECT_EQ(chain.height(), a.node("company").chain.height() + 3);
  EXPECT_TRUE(std::equal(a.node("company").chain.blocks().begin(), a.node("company").chain.blocks().end(),
                         chain.blocks().begin()));
  EXPECT_TRUE(report.converged);
}

TEST(Report, CsvLayout) {
  auto s = five_roles();
  Simulator sim(s);
  auto report = sim.run();
  std::ostringstream out;
  write_report(out, report, sim.names());
  auto text = out.str();
  EXPECT_EQ(text.rfind("tx_id,kind,author,announce_tick,commit_tick,height,latency\n", 0), 0u);
  EXPECT_NE(text.find("\n[summary]\nseed=7\n"), std::string::npos);
  EXPECT_NE(text.find("node,height,tip,chain_digest\ncompany,3,"), std::string::npos);
  auto digest = ledger::double_hash(ledger::encode_chain_frames(sim.node("law").chain.blocks()));
  EXPECT_EQ(report.nodes.back().chain_digest, digest);
}
