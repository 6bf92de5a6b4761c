#include "liegc/certificate.hpp"

#include <sstream>

namespace liegc {

void Certificate::add_pass(const std::string& id) { clauses.push_back({id, ClauseStatus::pass, {}}); }

void Certificate::add_fail(const std::string& id, Witness w) {
  clauses.push_back({id, ClauseStatus::fail, std::move(w)});
}

void Certificate::add_skip(const std::string& id, const std::string& note) {
  Witness w;
  w.note = note;
  clauses.push_back({id, ClauseStatus::skipped, std::move(w)});
}

const Clause* Certificate::find(const std::string& id) const {
  for (const auto& c : clauses)
    if (c.id == id) return &c;
  return nullptr;
}

bool Certificate::clause_failed(const std::string& id) const {
  for (const auto& c : clauses)
    if (c.id == id && c.status == ClauseStatus::fail) return true;
  return false;
}

bool Certificate::passed() const {
  if (hypothesis_failed) return false;
  for (const auto& c : clauses)
    if (c.status == ClauseStatus::fail) return false;
  return true;
}

Verdict Certificate::verdict() const {
  if (hypothesis_failed) return Verdict::inconclusive;
  return passed() ? Verdict::pass : Verdict::fail;
}

std::string Certificate::summary() const {
  std::ostringstream os;
  switch (verdict()) {
    case Verdict::pass: os << "pass"; break;
    case Verdict::fail: os << "fail"; break;
    case Verdict::inconclusive: os << "inconclusive"; break;
  }
  for (const auto& c : clauses) {
    if (c.status != ClauseStatus::fail) continue;
    os << " [" << c.id;
    if (c.witness) {
      os << " @";
      for (int i : c.witness->indices) os << " " << i;
      if (c.witness->value) os << " = " << c.witness->value->str();
      if (!c.witness->note.empty()) os << " (" << c.witness->note << ")";
    }
    os << "]";
  }
  return os.str();
}

}  // namespace liegc
