#pragma once

// Random inputs shared by unit, property and acceptance tests. Every
// generator is driven by an explicit seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "../oracles/ranking_oracle.hpp"
#include "hrchain/consensus/local_consensus.hpp"
#include "hrchain/ledger/block.hpp"
#include "hrchain/recruit/ranking.hpp"
#include "hrchain/registry/directory.hpp"
#include "hrchain/simnet/scenario.hpp"

namespace testing_support {

using namespace hrchain;

/// Portable bounded draw: plain modulo over mt19937_64 output, which is
/// specified bit-exactly (std distributions are not).
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine() % n; }
  bool chance(std::uint64_t percent) { return below(100) < percent; }
  Bytes bytes(std::size_t n) {
    Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(engine());
    return out;
  }
};

/// A random recruitment instance in both forms: the oracle's world model
/// and the library inputs built from it.
struct RankingWorld {
  oracle::Instance instance;
  std::vector<registry::ParticipantId> party_ids;
  registry::Directory directory;
  recruit::AuthorityPanel panel;
  std::vector<recruit::ApplicantProfile> profiles;
  recruit::RequirementSpec spec;
};

RankingWorld make_ranking_world(std::uint64_t seed, std::size_t max_applicants = 10,
                                std::size_t max_claims = 8);

Record to_record(const oracle::Fields& fields);

/// `count` miner key pairs derived from fixed labels.
std::vector<registry::KeyPair> miner_keys(std::size_t count);

/// Genesis registering `miners` with the mine right plus `others` as applicants.
ledger::Chain genesis_chain(const std::vector<registry::KeyPair>& miners,
                            const std::vector<registry::KeyPair>& others = {});

/// Extends `chain` by `blocks` blocks through LocalConsensus, each holding
/// 1-3 signed HR-event-kind transactions with opaque payloads.
void grow_chain(ledger::Chain& chain, consensus::LocalConsensus& consensus, std::size_t blocks,
                Rng& rng);

/// The five-role deployment (company, employer, applicants node hosting
/// alice/bob/carol, health, law).
std::vector<registry::RosterEntry> five_role_roster();

/// Random script over the five-role roster: authority records, claims,
/// applications, a ranking, hires and HR events at random ticks.
simnet::Scenario random_scenario(std::uint64_t seed);

/// Scenario with a steady stream of `count` permission grants, one every
/// `spacing` ticks, from rotating miners.
simnet::Scenario grant_stream_scenario(std::size_t count, std::uint64_t spacing);

std::string fixture_path(const std::string& relative);
std::string read_fixture(const std::string& relative);

}  // namespace testing_support
