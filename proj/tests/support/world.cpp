#include "world.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hrchain/registry/permission.hpp"

#ifndef HRCHAIN_FIXTURE_DIR
#error "HRCHAIN_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testing_support {

namespace {

using registry::KeyPair;
using registry::ParticipantId;
using registry::Role;

const char* const kDegrees[] = {"BSc", "MSc", "PhD"};
const char* const kRoles[] = {"Engineer", "Analyst", "Manager"};

oracle::Fields random_statement(int kind, Rng& rng) {
  oracle::Fields f;
  switch (kind) {
    case oracle::Education:
      f["degree"] = std::string(kDegrees[rng.below(3)]);
      f["year"] = static_cast<std::int64_t>(2010 + rng.below(4));
      break;
    case oracle::Employment:
      f["role"] = std::string(kRoles[rng.below(3)]);
      f["years"] = static_cast<std::int64_t>(rng.below(10));
      break;
    case oracle::Training:
    case oracle::Certificate:
      f["name"] = std::string(rng.chance(50) ? "safety" : "cloud");
      f["hours"] = static_cast<std::int64_t>(10 * rng.below(5));
      break;
    case oracle::SalaryHistory:
      f["amount"] = static_cast<std::int64_t>(3000 + 500 * rng.below(6));
      break;
    case oracle::Performance:
      f["rating"] = static_cast<std::int64_t>(1 + rng.below(5));
      f["adverse"] = std::string(rng.chance(25) ? "true" : "false");
      break;
    case oracle::HealthRecord:
      f["fit"] = std::string(rng.chance(80) ? "true" : "false");
      break;
    case oracle::CriminalRecord:
      f["adverse"] = std::string(rng.chance(30) ? "true" : "false");
      break;
  }
  return f;
}

oracle::Predicate random_predicate(int kind, Rng& rng) {
  oracle::Predicate p;
  if (rng.chance(15)) return p;  // Any
  auto sample = random_statement(kind, rng);
  auto it = sample.begin();
  std::advance(it, static_cast<long>(rng.below(sample.size())));
  p.field = it->first;
  p.value = it->second;
  if (std::holds_alternative<std::int64_t>(p.value)) {
    p.op = static_cast<oracle::Predicate::Op>(1 + rng.below(5));
  } else {
    p.op = oracle::Predicate::Eq;
  }
  return p;
}

}  // namespace

Record to_record(const oracle::Fields& fields) {
  Record r;
  for (const auto& [name, value] : fields) {
    std::visit([&](const auto& v) { r.set(name, FieldValue(v)); }, value);
  }
  return r;
}

RankingWorld make_ranking_world(std::uint64_t seed, std::size_t max_applicants, std::size_t max_claims) {
  Rng rng(seed);
  RankingWorld w;
  auto& inst = w.instance;

  // Fixed cast: company, two attesting employers, one employer without the
  // attest right, health and law (each sometimes missing), then applicants.
  struct Cast {
    oracle::Role role;
    Role lib_role;
    bool attest;
  };
  std::vector<Cast> cast{{oracle::Company, Role::RecruitingCompany, false},
                         {oracle::Employer, Role::Employer, true},
                         {oracle::Employer, Role::Employer, true},
                         {oracle::Employer, Role::Employer, false}};
  if (rng.chance(85)) cast.push_back({oracle::Health, Role::HealthAuthority, true});
  if (rng.chance(85)) cast.push_back({oracle::Law, Role::LawAgency, true});
  const std::size_t applicants = rng.below(max_applicants + 1);
  for (std::size_t i = 0; i < applicants; ++i) cast.push_back({oracle::ApplicantRole, Role::Applicant, false});

  std::vector<KeyPair> keys;
  for (std::size_t i = 0; i < cast.size(); ++i) {
    keys.push_back(KeyPair::derive("world/" + std::to_string(seed) + "/" + std::to_string(i)));
    auto id = w.directory.register_participant(cast[i].lib_role, keys.back().public_key());
    w.party_ids.push_back(id);
    inst.parties.push_back({cast[i].role, cast[i].attest});
    registry::Rights rights{registry::Right::Connect, registry::Right::Send};
    if (cast[i].attest) rights = rights | registry::Rights{registry::Right::Attest};
    auto pk = keys.back().public_key();
    w.directory.apply_grant(w.party_ids.front(), {id, cast[i].lib_role, Bytes(pk.begin(), pk.end()), rights},
                            true);
    if (cast[i].attest) w.panel.emplace(id, recruit::Attester{keys.back(), {}});
  }

  const int first_applicant = static_cast<int>(cast.size() - applicants);
  for (int a = first_applicant; a < static_cast<int>(cast.size()); ++a) {
    oracle::Applicant app;
    app.party = a;
    auto id_bytes = w.party_ids[static_cast<std::size_t>(a)].value.bytes();
    app.id.assign(id_bytes.begin(), id_bytes.end());
    const std::size_t claims = rng.below(max_claims + 1);
    for (std::size_t c = 0; c < claims; ++c) {
      oracle::Claim claim;
      claim.kind = static_cast<int>(rng.below(8));
      if (claim.kind != oracle::HealthRecord && claim.kind != oracle::CriminalRecord) {
        claim.issuer = 1 + static_cast<int>(rng.below(3));
      } else if (rng.chance(50)) {
        claim.issuer = 1;  // ignored for these kinds
      }
      claim.evidence = random_statement(claim.kind, rng);
      claim.statement = claim.evidence;

      // What the responsible authority knows about this claim.
      if (auto authority = oracle::responsible(inst, claim)) {
        auto roll = rng.below(100);
        if (roll < 55) {
          inst.facts.push_back({*authority, a, claim.kind, claim.evidence});
        } else if (roll < 80) {
          auto other = random_statement(claim.kind, rng);
          if (other == claim.evidence) other["note"] = std::string("conflict");
          inst.facts.push_back({*authority, a, claim.kind, other});
        }
      }
      if (rng.chance(5)) claim.statement["edited"] = std::string("yes");
      app.claims.push_back(std::move(claim));
    }
    inst.applicants.push_back(std::move(app));
  }

  const std::size_t items = 1 + rng.below(4);
  for (std::size_t i = 0; i < items; ++i) {
    oracle::Item item;
    item.kind = static_cast<int>(rng.below(8));
    item.predicate = random_predicate(item.kind, rng);
    item.weight = static_cast<std::int64_t>(rng.below(6) * 1'000'000 + rng.below(4) * 250'000);
    item.mandatory = rng.chance(20);
    inst.items.push_back(std::move(item));
  }

  // Library-side view of the same world.
  for (const auto& f : inst.facts) {
    auto& attester = w.panel.at(w.party_ids[static_cast<std::size_t>(f.authority)]);
    attester.store.add(w.party_ids[static_cast<std::size_t>(f.applicant)], static_cast<recruit::ClaimKind>(f.kind),
                       to_record(f.statement));
  }
  for (const auto& app : inst.applicants) {
    recruit::ApplicantProfile profile{w.party_ids[static_cast<std::size_t>(app.party)], {}};
    for (const auto& c : app.claims) {
      auto issuer = c.issuer < 0 ? ParticipantId{} : w.party_ids[static_cast<std::size_t>(c.issuer)];
      auto claim = recruit::Claim::make(static_cast<recruit::ClaimKind>(c.kind), issuer, to_record(c.evidence));
      claim.statement = to_record(c.statement);
      profile.claims.push_back(std::move(claim));
    }
    w.profiles.push_back(std::move(profile));
  }
  w.spec.company = w.party_ids.front();
  for (const auto& item : inst.items) {
    recruit::RequirementItem lib;
    lib.kind = static_cast<recruit::ClaimKind>(item.kind);
    lib.predicate.op = static_cast<recruit::CompareOp>(item.predicate.op);
    lib.predicate.field = item.predicate.field;
    std::visit([&](const auto& v) { lib.predicate.value = FieldValue(v); }, item.predicate.value);
    lib.weight = Decimal::from_units(item.weight);
    lib.mandatory = item.mandatory;
    w.spec.items.push_back(std::move(lib));
  }
  return w;
}

std::vector<KeyPair> miner_keys(std::size_t count) {
  std::vector<KeyPair> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(KeyPair::derive("miner-" + std::to_string(i)));
  return out;
}

ledger::Chain genesis_chain(const std::vector<KeyPair>& miners, const std::vector<KeyPair>& others) {
  registry::PermissionGrant grant;
  auto entry = [](const KeyPair& k, registry::Rights rights) {
    auto pk = k.public_key();
    return registry::GrantEntry{k.id(), Role::Employer, Bytes(pk.begin(), pk.end()), rights};
  };
  for (const auto& m : miners) {
    grant.entries.push_back(entry(m, {registry::Right::Connect, registry::Right::Send, registry::Right::Mine}));
  }
  for (const auto& o : others) {
    auto e = entry(o, {registry::Right::Connect, registry::Right::Send});
    e.role = Role::Applicant;
    grant.entries.push_back(e);
  }
  auto tx = ledger::make_transaction(ledger::TxKind::PermissionGrant, grant.encode(), miners.front(), 0);
  return ledger::Chain(ledger::make_genesis(tx, miners.front()));
}

void grow_chain(ledger::Chain& chain, consensus::LocalConsensus& consensus, std::size_t blocks, Rng& rng) {
  static const auto author = KeyPair::derive("grow-chain-author");
  std::uint64_t nonce = 0;
  for (const auto& b : chain.blocks()) {
    for (const auto& tx : b.transactions) {
      if (tx.author == author.id()) nonce = std::max(nonce, tx.nonce + 1);
    }
  }
  for (std::size_t i = 0; i < blocks; ++i) {
    std::vector<ledger::Transaction> txs;
    const auto count = 1 + rng.below(3);
    for (std::uint64_t t = 0; t < count; ++t) {
      txs.push_back(ledger::make_transaction(ledger::TxKind::HrEventRecord, rng.bytes(8 + rng.below(24)), author,
                                             nonce++));
    }
    consensus.commit(chain, std::move(txs), chain.tip().header.timestamp + 1);
  }
}

std::vector<registry::RosterEntry> five_role_roster() {
  return registry::parse_roster(
      "RecruitingCompany,company,\n"
      "Employer,employer,\n"
      "Applicant,applicants,\n"
      "HealthAuthority,health,\n"
      "LawAgency,law,\n"
      "Applicant,alice,,applicants\n"
      "Applicant,bob,,applicants\n"
      "Applicant,carol,,applicants\n");
}

simnet::Scenario random_scenario(std::uint64_t seed) {
  using namespace simnet;
  Rng rng(seed);
  Scenario s;
  s.seed = seed;
  s.roster = five_role_roster();
  s.latency = rng.below(3);
  const char* const applicants[] = {"alice", "bob", "carol"};
  const recruit::ClaimKind employer_kinds[] = {recruit::ClaimKind::Education, recruit::ClaimKind::Employment,
                                               recruit::ClaimKind::Performance};

  auto statement = [&](recruit::ClaimKind kind) { return to_record(random_statement(static_cast<int>(kind), rng)); };

  std::vector<ScriptStep> steps;
  for (const char* a : applicants) {
    const auto claims = 1 + rng.below(3);
    for (std::uint64_t c = 0; c < claims; ++c) {
      auto roll = rng.below(5);
      std::string authority = roll < 3 ? "employer" : roll == 3 ? "health" : "law";
      auto kind = roll < 3    ? employer_kinds[roll]
                  : roll == 3 ? recruit::ClaimKind::HealthRecord
                              : recruit::ClaimKind::CriminalRecord;
      auto fact = statement(kind);
      steps.push_back({0, RecordAction{authority, a, kind, fact}});
      auto claimed = rng.chance(75) ? fact : statement(kind);
      steps.push_back({0, ClaimAction{a, kind, authority, claimed}});
    }
  }
  recruit::RequirementItem item;
  item.kind = recruit::ClaimKind::Employment;
  item.predicate = *recruit::Predicate::parse("years>=" + std::to_string(rng.below(6)));
  item.weight = Decimal::from_integer(static_cast<std::int64_t>(1 + rng.below(3)));
  steps.push_back({0, RequireAction{"company", item}});
  item.kind = recruit::ClaimKind::Education;
  item.predicate = *recruit::Predicate::parse("*");
  steps.push_back({0, RequireAction{"company", item}});
  for (const char* a : applicants) steps.push_back({1 + rng.below(3), ApplyAction{a, "company"}});
  const std::uint64_t rank_tick = 8 + rng.below(5);
  steps.push_back({rank_tick, RankAction{"company"}});

  // Hires may name applicants that were discarded; the failure is part of
  // the run and must be reproducible too.
  std::uint64_t tick = rank_tick + 20;
  for (const char* a : applicants) {
    if (!rng.chance(60)) continue;
    HireAction hire{"company", a, {}};
    hire.sections[0].set("name", std::string(a));
    hire.sections[3].set("salary", static_cast<std::int64_t>(4000 + 100 * rng.below(20)));
    steps.push_back({tick, hire});
    tick += 1 + rng.below(6);
  }
  tick += 20;
  for (int e = 0; e < 3; ++e) {
    Record details;
    details.set("level", static_cast<std::int64_t>(e + 1));
    steps.push_back({tick, EventAction{"company", applicants[rng.below(3)], hrm::HrEventKind::Promotion, details}});
    tick += 1 + rng.below(10);
  }
  const char* const miners[] = {"company", "employer", "applicants", "health", "law"};
  for (int g = 0; g < 4; ++g) {
    steps.push_back({rng.below(tick), GrantAction{miners[rng.below(5)], applicants[rng.below(3)],
                                                  registry::Rights{registry::Right::Connect, registry::Right::Send}}});
  }
  std::stable_sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.tick < b.tick; });
  s.script = std::move(steps);

  if (rng.chance(40)) {
    const auto from = rng.below(tick);
    s = inject_inactivity(std::move(s), miners[rng.below(5)], from, from + 5 + rng.below(40));
  }
  return s;
}

simnet::Scenario grant_stream_scenario(std::size_t count, std::uint64_t spacing) {
  simnet::Scenario s;
  s.roster = five_role_roster();
  const char* const miners[] = {"company", "employer", "applicants", "health", "law"};
  const char* const subjects[] = {"alice", "bob", "carol"};
  for (std::size_t i = 0; i < count; ++i) {
    s.script.push_back({1 + i * spacing, simnet::GrantAction{miners[i % 5], subjects[i % 3],
                                                              registry::Rights{registry::Right::Connect}}});
  }
  return s;
}

std::string fixture_path(const std::string& relative) { return std::string(HRCHAIN_FIXTURE_DIR) + "/" + relative; }

std::string read_fixture(const std::string& relative) {
  std::ifstream in(fixture_path(relative), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
