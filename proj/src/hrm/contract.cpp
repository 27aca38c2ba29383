#include "hrchain/hrm/contract.hpp"

#include <utility>
#include <stdexcept>

namespace hrchain::hrm {

namespace {

void write_body(ByteWriter& w, const EmploymentContract& c) {
  for (std::size_t i = 0; i < kContractSections.size(); ++i) c.section(i).encode(w);
  w.raw(c.employee.value.view());
  w.raw(c.employer.value.view());
}

}  // namespace

const Record& EmploymentContract::section(std::size_t index) const {
  switch (index) {
    case 0: return personal_info;
    case 1: return previous_job_info;
    case 2: return company_info;
    case 3: return company_terms;
    case 4: return employee_terms;
  }
  throw std::out_of_range("contract section index");
}

Record& EmploymentContract::section(std::size_t index) {
  return const_cast<Record&>(std::as_const(*this).section(index));
}

Bytes EmploymentContract::body_bytes() const {
  ByteWriter w;
  w.str16("hrchain/contract");
  write_body(w, *this);
  return std::move(w).take();
}

void EmploymentContract::sign_as_employee(const registry::KeyPair& keys) {
  employee_signature = registry::sign(keys, body_bytes());
}

void EmploymentContract::sign_as_employer(const registry::KeyPair& keys) {
  employer_signature = registry::sign(keys, body_bytes());
}

bool EmploymentContract::signatures_valid() const {
  auto body = body_bytes();
  return registry::verify_signed_by(employee, body, employee_signature) &&
         registry::verify_signed_by(employer, body, employer_signature);
}

Bytes EmploymentContract::encode() const {
  ByteWriter w;
  write_body(w, *this);
  registry::encode_signature(w, employee_signature);
  registry::encode_signature(w, employer_signature);
  return std::move(w).take();
}

EmploymentContract EmploymentContract::decode(ByteView payload) {
  ByteReader in(payload);
  EmploymentContract c;
  for (std::size_t i = 0; i < kContractSections.size(); ++i) c.section(i) = Record::decode(in);
  c.employee = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  c.employer = ParticipantId{ledger::Digest(in.fixed<ledger::Digest::kSize>())};
  c.employee_signature = registry::decode_signature(in);
  c.employer_signature = registry::decode_signature(in);
  in.finish();
  return c;
}

}  // namespace hrchain::hrm
