#pragma once

// Reference recruitment pipeline over a plain world model: verify every
// claim, filter, score by subset enumeration, then a stable insertion sort.
// Written from the documented rules; shares no code with the library.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oracle {

using Value = std::variant<std::int64_t, std::string>;
using Fields = std::map<std::string, Value>;

// Claim kinds, in declaration order.
enum Kind { Education, Employment, Training, Certificate, SalaryHistory, Performance, HealthRecord, CriminalRecord };
enum Role { Company, Employer, ApplicantRole, Health, Law };
enum Verdict { Confirmed, Refuted, Unknown };

struct Party {
  Role role = ApplicantRole;
  bool attest = false;
};

struct Claim {
  int kind = Education;
  int issuer = -1;  // party index, -1 for none
  Fields statement;
  Fields evidence;  // what the evidence hash was computed from
};

struct Fact {
  int authority = 0;
  int applicant = 0;
  int kind = Education;
  Fields statement;
};

struct Predicate {
  enum Op { Any, Eq, Ge, Le, Gt, Lt } op = Any;
  std::string field;
  Value value;
};

struct Item {
  int kind = Education;
  Predicate predicate;
  std::int64_t weight = 0;  // millionths
  bool mandatory = false;
};

struct Applicant {
  int party = 0;
  std::vector<std::uint8_t> id;  // participant id bytes, for tie-breaks
  std::vector<Claim> claims;
};

struct Instance {
  std::vector<Party> parties;  // registration order
  std::vector<Applicant> applicants;
  std::vector<Fact> facts;
  std::vector<Item> items;
};

struct Outcome {
  std::vector<std::pair<int, std::int64_t>> ranked;   // (party, score)
  std::vector<std::pair<int, std::string>> discarded;  // (party, reason)
  std::vector<std::vector<Verdict>> verdicts;          // per applicant, per claim
};

inline std::optional<int> responsible(const Instance& w, const Claim& c) {
  if (c.kind == HealthRecord || c.kind == CriminalRecord) {
    Role want = c.kind == HealthRecord ? Health : Law;
    for (std::size_t i = 0; i < w.parties.size(); ++i) {
      if (w.parties[i].role == want && w.parties[i].attest) return static_cast<int>(i);
    }
    return std::nullopt;
  }
  if (c.issuer < 0) return std::nullopt;
  const auto& p = w.parties[static_cast<std::size_t>(c.issuer)];
  if (p.role == Employer && p.attest) return c.issuer;
  return std::nullopt;
}

inline Verdict verdict(const Instance& w, int applicant, const Claim& c) {
  auto authority = responsible(w, c);
  if (!authority) return Unknown;
  bool any = false;
  for (const auto& f : w.facts) {
    if (f.authority != *authority || f.applicant != applicant || f.kind != c.kind) continue;
    any = true;
    if (f.statement == c.evidence) return Confirmed;
  }
  return any ? Refuted : Unknown;
}

inline bool predicate_holds(const Predicate& p, const Fields& s) {
  if (p.op == Predicate::Any) return true;
  auto it = s.find(p.field);
  if (it == s.end()) return false;
  if (p.op == Predicate::Eq) return it->second == p.value;
  if (!std::holds_alternative<std::int64_t>(it->second) || !std::holds_alternative<std::int64_t>(p.value)) {
    return false;
  }
  auto a = std::get<std::int64_t>(it->second), b = std::get<std::int64_t>(p.value);
  switch (p.op) {
    case Predicate::Ge: return a >= b;
    case Predicate::Le: return a <= b;
    case Predicate::Gt: return a > b;
    case Predicate::Lt: return a < b;
    default: return false;
  }
}

inline bool adverse(const Fields& s) {
  auto it = s.find("adverse");
  return it != s.end() && it->second == Value(std::string("true"));
}

inline Outcome rank(const Instance& w) {
  Outcome out;
  std::vector<std::pair<std::size_t, std::int64_t>> kept;  // (applicant index, score)

  for (std::size_t a = 0; a < w.applicants.size(); ++a) {
    const auto& app = w.applicants[a];
    auto& v = out.verdicts.emplace_back();
    for (const auto& c : app.claims) v.push_back(verdict(w, app.party, c));

    bool tampered = false, refuted = false, law = false, behaviour = false;
    for (std::size_t i = 0; i < app.claims.size(); ++i) {
      const auto& c = app.claims[i];
      tampered |= c.statement != c.evidence;
      refuted |= v[i] == Refuted;
      law |= c.kind == CriminalRecord && v[i] == Confirmed && adverse(c.statement);
      behaviour |= c.kind == Performance && v[i] == Confirmed && adverse(c.statement);
    }
    const char* reason = tampered ? "EvidenceMismatch"
                         : refuted ? "FakeCertificate"
                         : law     ? "LawIssue"
                         : behaviour ? "BehaviouralIssue"
                                     : nullptr;
    if (reason) {
      out.discarded.emplace_back(app.party, reason);
      continue;
    }

    std::vector<bool> satisfied;
    for (const auto& item : w.items) {
      bool ok = false;
      for (std::size_t i = 0; i < app.claims.size(); ++i) {
        ok |= app.claims[i].kind == item.kind && v[i] == Confirmed &&
              predicate_holds(item.predicate, app.claims[i].statement);
      }
      satisfied.push_back(ok);
    }
    bool mandatory_missing = false;
    for (std::size_t j = 0; j < w.items.size(); ++j) mandatory_missing |= w.items[j].mandatory && !satisfied[j];
    if (mandatory_missing) {
      out.discarded.emplace_back(app.party, "MandatoryUnmet");
      continue;
    }
    // Best total over every subset of items that are all satisfied.
    std::int64_t best = 0;
    const std::size_t n = w.items.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::int64_t total = 0;
      bool feasible = true;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1) {
          feasible &= static_cast<bool>(satisfied[j]);
          total += w.items[j].weight;
        }
      }
      if (feasible && total > best) best = total;
    }
    kept.emplace_back(a, best);
  }

  // Insertion sort: higher score first, then smaller id bytes.
  auto before = [&](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return w.applicants[x.first].id < w.applicants[y.first].id;
  };
  for (std::size_t i = 1; i < kept.size(); ++i) {
    for (std::size_t j = i; j > 0 && before(kept[j], kept[j - 1]); --j) std::swap(kept[j], kept[j - 1]);
  }
  for (const auto& [a, score] : kept) out.ranked.emplace_back(w.applicants[a].party, score);
  return out;
}

}  // namespace oracle
