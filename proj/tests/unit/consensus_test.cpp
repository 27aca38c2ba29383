#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "hrchain/consensus/approval.hpp"
#include "hrchain/consensus/diversity.hpp"
#include "hrchain/consensus/fork_choice.hpp"
#include "hrchain/consensus/local_consensus.hpp"
#include "hrchain/ledger/validation.hpp"
#include "oracles/diversity_oracle.hpp"
#include "support/world.hpp"

using namespace hrchain;
using namespace hrchain::consensus;
using testing_support::Rng;

namespace {

DiversityRule rule_of(std::int64_t millionths) { return DiversityRule::of(Decimal::from_units(millionths)); }

std::vector<ParticipantId> ids_of(const std::vector<registry::KeyPair>& keys) {
  std::vector<ParticipantId> ids;
  for (const auto& k : keys) ids.push_back(k.id());
  return ids;
}

ledger::Transaction note(std::uint64_t nonce, std::uint8_t tag = 0) {
  static const auto author = registry::KeyPair::derive("consensus-test-author");
  return ledger::make_transaction(ledger::TxKind::HrEventRecord, Bytes{tag}, author, nonce);
}

}  // namespace

TEST(MinerSet, ConstructionAndActivity) {
  auto keys = testing_support::miner_keys(3);
  EXPECT_THROW(MinerSet({}), ConsensusError);
  try {
    MinerSet({keys[0].id(), keys[0].id()});
    FAIL();
  } catch (const ConsensusError& e) {
    EXPECT_EQ(e.code(), ConsensusErrc::DuplicateMiner);
  }
  MinerSet set(ids_of(keys));
  EXPECT_EQ(set.index_of(keys[2].id()), 2u);
  EXPECT_FALSE(set.contains(registry::KeyPair::derive("x").id()));
  set.set_active(keys[1].id(), false);
  EXPECT_EQ(set.active_count(), 2u);
  EXPECT_FALSE(set.is_active(keys[1].id()));
  EXPECT_EQ(set.all_active().active_count(), 3u);
}

TEST(Diversity, WindowAndThreshold) {
  EXPECT_EQ(rule_of(750'000).window(5), 4u);
  EXPECT_EQ(rule_of(750'000).liveness_threshold(5), 4u);
  EXPECT_EQ(rule_of(0).window(5), 0u);
  EXPECT_EQ(rule_of(0).liveness_threshold(5), 2u);
  EXPECT_EQ(rule_of(1'000'000).window(3), 3u);
  EXPECT_EQ(rule_of(500'000).window(5), 3u);
  EXPECT_THROW(rule_of(1'000'001), std::invalid_argument);
  EXPECT_THROW(DiversityRule::parse("x"), std::invalid_argument);
  EXPECT_EQ(DiversityRule::parse("0.75").diversity.units(), 750'000);
}

// Every history of up to four blocks over up to five miners, every activity
// mask and a spread of diversity values, against the plain reading.
TEST(Diversity, EligibilityMatchesOracleExhaustively) {
  auto keys = testing_support::miner_keys(5);
  std::size_t cases = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<ParticipantId> ids(m);
    for (std::size_t i = 0; i < m; ++i) ids[i] = keys[i].id();
    for (std::int64_t d : {0, 200'000, 500'000, 600'000, 750'000, 1'000'000}) {
      auto rule = rule_of(d);
      const auto w = oracle::window(static_cast<std::uint64_t>(d), m);
      for (std::size_t len = 0; len <= 4; ++len) {
        std::size_t combos = 1;
        for (std::size_t i = 0; i < len; ++i) combos *= m;
        for (std::size_t code = 0; code < combos; ++code) {
          std::vector<int> history;
          std::vector<ledger::Block> chain(1);  // genesis, mined by miner 0
          chain[0].header.miner = ids[0];
          for (std::size_t i = 0, c = code; i < len; ++i, c /= m) {
            history.push_back(static_cast<int>(c % m));
            ledger::Block b;
            b.header.height = i + 1;
            b.header.miner = ids[c % m];
            chain.push_back(b);
          }
          for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            MinerSet set(ids);
            std::vector<bool> active(m);
            for (std::size_t i = 0; i < m; ++i) {
              active[i] = (mask >> i) & 1;
              set.set_active(ids[i], active[i]);
            }
            std::vector<ParticipantId> want;
            for (int i : oracle::eligible(history, active, w)) want.push_back(ids[static_cast<std::size_t>(i)]);
            ASSERT_EQ(eligible_miners(chain, set, rule), want) << "m=" << m << " d=" << d << " code=" << code;
            ++cases;
          }
        }
      }
    }
  }
  EXPECT_GT(cases, 50'000u);
}

TEST(Diversity, ProposerIsRoundRobinWhenEveryoneIsEligible) {
  auto keys = testing_support::miner_keys(5);
  MinerSet set(ids_of(keys));
  auto all = ids_of(keys);
  for (std::uint64_t h = 1; h <= 12; ++h) {
    EXPECT_EQ(designated_proposer(h, set, all), all[(h - 1) % 5]);
  }
  // Skips forward past ineligible miners, wrapping.
  std::vector<ParticipantId> some{all[0], all[2]};
  EXPECT_EQ(designated_proposer(4, set, some), all[0]);
  EXPECT_EQ(designated_proposer(2, set, some), all[2]);
  EXPECT_EQ(designated_proposer(2, set, {}), std::nullopt);
}

TEST(Diversity, ValidatorIsNextActiveMiner) {
  auto keys = testing_support::miner_keys(4);
  MinerSet set(ids_of(keys));
  EXPECT_EQ(designated_validator(keys[1].id(), set), keys[2].id());
  EXPECT_EQ(designated_validator(keys[3].id(), set), keys[0].id());
  set.set_active(keys[2].id(), false);
  EXPECT_EQ(designated_validator(keys[1].id(), set), keys[3].id());
  set.set_active(keys[3].id(), false);
  set.set_active(keys[0].id(), false);
  EXPECT_EQ(designated_validator(keys[1].id(), set), std::nullopt);
  EXPECT_EQ(designated_validator(registry::KeyPair::derive("x").id(), set), std::nullopt);
}

TEST(LocalConsensus, RotationIsFairWithEveryoneActive) {
  auto keys = testing_support::miner_keys(5);
  for (std::int64_t d : {0, 500'000, 750'000, 1'000'000}) {
    LocalConsensus lc(keys, rule_of(d));
    auto chain = testing_support::genesis_chain(keys);
    const std::size_t k = 6;
    for (std::size_t i = 0; i < k * 5; ++i) lc.commit(chain, {note(i)}, i + 1);
    std::map<ParticipantId, std::size_t> mined;
    for (std::size_t h = 1; h < chain.size(); ++h) ++mined[chain.at(h).header.miner];
    for (const auto& key : keys) EXPECT_EQ(mined[key.id()], k) << "d=" << d;
    EXPECT_EQ(ledger::validate_chain(chain, lc.rule(), lc.miners()), std::nullopt);
  }
}

// With M=5 and d=0.75, any 4 active miners keep the chain growing and any
// 3 stall it, whichever miners they are.
TEST(LocalConsensus, LivenessBoundaryOverEveryActiveSubset) {
  auto keys = testing_support::miner_keys(5);
  const auto rule = rule_of(750'000);
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    LocalConsensus lc(keys, rule);
    std::size_t active = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      bool on = (mask >> i) & 1;
      lc.set_active(keys[i].id(), on);
      active += on;
    }
    auto chain = testing_support::genesis_chain(keys);
    std::size_t grown = 0;
    try {
      for (; grown < 40; ++grown) lc.commit(chain, {note(grown)}, grown + 1);
    } catch (const ConsensusError& e) {
      EXPECT_EQ(e.code(), ConsensusErrc::ConsensusStalled);
    }
    if (active >= rule.liveness_threshold(5)) {
      EXPECT_EQ(grown, 40u) << "mask " << mask;
    } else {
      EXPECT_LT(grown, 4u) << "mask " << mask;
    }
  }
}

TEST(LocalConsensus, ApprovalVerifies) {
  auto keys = testing_support::miner_keys(5);
  LocalConsensus lc(keys, rule_of(750'000));
  auto chain = testing_support::genesis_chain(keys);
  const auto& block = lc.commit(chain, {note(0)}, 1);
  EXPECT_EQ(lc.last_approval().block_id, ledger::block_id(block));
  EXPECT_EQ(lc.last_approval().validator, keys[1].id());
  EXPECT_TRUE(verify_approval(lc.last_approval(), block, lc.miners()));
  EXPECT_THROW(lc.commit(chain, {}, 2), ledger::LedgerError);
}

TEST(Approval, RejectionCodes) {
  auto keys = testing_support::miner_keys(5);
  const auto rule = rule_of(750'000);
  MinerSet set(ids_of(keys));
  auto chain = testing_support::genesis_chain(keys);
  auto block = ledger::build_block(chain.tip(), {note(0)}, keys[0].id(), 1);
  ledger::sign_block(block, keys[0]);

  auto self = approve_block(block, keys[0], chain.blocks(), rule, set);
  EXPECT_EQ(std::get<Rejection>(self).code, ConsensusErrc::SelfValidation);
  auto outsider = approve_block(block, registry::KeyPair::derive("x"), chain.blocks(), rule, set);
  EXPECT_EQ(std::get<Rejection>(outsider).code, ConsensusErrc::UnpermittedValidator);
  auto tampered = block;
  tampered.header.timestamp = 7;
  auto bad = approve_block(tampered, keys[1], chain.blocks(), rule, set);
  EXPECT_EQ(std::get<Rejection>(bad), (Rejection{ConsensusErrc::Rejected, ledger::ValidationErrc::BadSignature}));

  auto ok = std::get<Approval>(approve_block(block, keys[1], chain.blocks(), rule, set));
  EXPECT_TRUE(verify_approval(ok, block, set));
  EXPECT_FALSE(verify_approval(ok, tampered, set));
  auto forged = ok;
  forged.validator = keys[2].id();
  EXPECT_FALSE(verify_approval(forged, block, set));
}

TEST(ForkChoice, LongerThenSmallerTip) {
  auto keys = testing_support::miner_keys(5);
  const auto rule = rule_of(750'000);
  LocalConsensus lc(keys, rule);
  auto base = testing_support::genesis_chain(keys);
  for (std::uint64_t i = 0; i < 3; ++i) lc.commit(base, {note(i)}, i + 1);

  auto a = base, b = base, longer = base;
  lc.commit(a, {note(10, 1)}, 4);
  lc.commit(b, {note(10, 2)}, 4);
  lc.commit(longer, {note(10, 3)}, 4);
  lc.commit(longer, {note(11, 3)}, 5);

  const auto& smaller = ledger::block_id(a.tip()) < ledger::block_id(b.tip()) ? a : b;
  EXPECT_TRUE(preferred(smaller, smaller == a ? b : a));
  EXPECT_TRUE(preferred(longer, a));
  EXPECT_FALSE(preferred(a, a));

  MinerSet set(ids_of(keys));
  auto broken = longer;
  std::vector<ledger::Block> blocks(broken.blocks().begin(), broken.blocks().end());
  blocks.push_back(blocks.back());  // a duplicate tip cannot link
  broken = ledger::Chain(blocks);

  std::vector<ledger::Chain> candidates{base, a, b, longer, broken};
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& x, const auto& y) { return encode_block(x.tip()) < encode_block(y.tip()); });
  do {
    EXPECT_EQ(fork_choice(candidates, rule, set), longer);
  } while (std::next_permutation(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return encode_block(x.tip()) < encode_block(y.tip());
  }));

  std::vector<ledger::Chain> pair{b, a};
  EXPECT_EQ(fork_choice(pair, rule, set), smaller);
  std::vector<ledger::Chain> none{broken};
  EXPECT_THROW(fork_choice(none, rule, set), ConsensusError);
}
