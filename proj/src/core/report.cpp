#include "liftcat/report.hpp"

#include <json.hpp>

namespace liftcat {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_checkable: return "not-checkable";
  }
  return "?";
}

std::string Mode::str() const {
  if (!sampled) return "exhaustive";
  return "sampled(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
}

void Report::fail(Witness w) {
  ++violations_;
  if (witnesses_.size() < cap_) witnesses_.push_back(std::move(w));
}

void Report::not_checkable(std::string reason) {
  not_checkable_ = true;
  if (!reason_.empty()) reason_ += "; ";
  reason_ += reason;
}

void Report::skip(const std::string& reason, std::uint64_t count) {
  if (count) skipped_[reason] += count;
}

Report& Report::add(Report child) {
  children_.push_back(std::move(child));
  return children_.back();
}

void Report::merge_counts(const Report& other) {
  checked_ += other.checked_;
  for (const auto& [k, v] : other.skipped_) skipped_[k] += v;
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() < cap_) witnesses_.push_back(w);
  }
  violations_ += other.violations_;
  for (const auto& n : other.notes_) notes_.push_back(n);
  if (other.not_checkable_) not_checkable(other.reason_);
}

Status Report::status() const {
  bool nc = not_checkable_;
  if (violations_ > 0) return Status::fail;
  for (const auto& c : children_) {
    Status s = c.status();
    if (s == Status::fail) return Status::fail;
    if (s == Status::not_checkable) nc = true;
  }
  return nc ? Status::not_checkable : Status::pass;
}

std::uint64_t Report::checked_total() const {
  std::uint64_t n = checked_;
  for (const auto& c : children_) n += c.checked_total();
  return n;
}

std::uint64_t Report::skipped_total() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : skipped_) n += v;
  for (const auto& c : children_) n += c.skipped_total();
  return n;
}

std::uint64_t Report::violations_total() const {
  std::uint64_t n = violations_;
  for (const auto& c : children_) n += c.violations_total();
  return n;
}

const Report* Report::find(const std::string& suite) const {
  if (suite_ == suite) return this;
  for (const auto& c : children_) {
    if (const Report* r = c.find(suite)) return r;
  }
  return nullptr;
}

const Witness* Report::first_witness() const {
  if (!witnesses_.empty()) return &witnesses_.front();
  for (const auto& c : children_) {
    if (const Witness* w = c.first_witness()) return w;
  }
  return nullptr;
}

bool Report::has_law(const std::string& law) const {
  for (const auto& w : witnesses_) {
    if (w.law == law) return true;
  }
  for (const auto& c : children_) {
    if (c.has_law(law)) return true;
  }
  return false;
}

static std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i];
  }
  return s;
}

void Report::render_text(std::string& out, const std::string& p) const {
  out += p + "suite=" + suite_ + "\n";
  out += p + "status=" + to_string(status()) + "\n";
  out += p + "mode=" + mode_.str() + "\n";
  out += p + "checked=" + std::to_string(checked_) + "\n";
  if (not_checkable_) out += p + "reason=" + reason_ + "\n";
  for (const auto& [k, v] : skipped_) out += p + "skipped." + k + "=" + std::to_string(v) + "\n";
  for (std::size_t i = 0; i < notes_.size(); ++i)
    out += p + "note." + std::to_string(i) + "=" + notes_[i] + "\n";
  out += p + "violations=" + std::to_string(violations_) + "\n";
  for (std::size_t i = 0; i < witnesses_.size(); ++i) {
    const auto& w = witnesses_[i];
    std::string q = p + "witness." + std::to_string(i) + ".";
    out += q + "law=" + w.law + "\n";
    out += q + "inputs=" + join(w.inputs) + "\n";
    out += q + "expected=" + w.expected + "\n";
    out += q + "actual=" + w.actual + "\n";
  }
  if (violations_ > witnesses_.size())
    out += p + "witness.more=+" + std::to_string(violations_ - witnesses_.size()) + " more\n";
  for (std::size_t i = 0; i < children_.size(); ++i)
    children_[i].render_text(out, p + "child." + std::to_string(i) + ".");
}

std::string Report::to_text() const {
  std::string out = "liftcat-report v1\n";
  render_text(out, "");
  return out;
}

static nlohmann::ordered_json to_j(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite();
  j["status"] = to_string(r.status());
  j["mode"] = r.mode().str();
  j["checked"] = r.checked();
  if (!r.reason().empty()) j["reason"] = r.reason();
  nlohmann::ordered_json sk = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.skipped()) sk[k] = v;
  j["skipped"] = sk;
  j["notes"] = r.notes();
  j["violations"] = r.violations();
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses()) {
    ws.push_back({{"law", w.law}, {"inputs", w.inputs}, {"expected", w.expected},
                  {"actual", w.actual}});
  }
  j["witnesses"] = ws;
  if (r.violations() > r.witnesses().size())
    j["witness_more"] = "+" + std::to_string(r.violations() - r.witnesses().size()) + " more";
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : r.children()) cs.push_back(to_j(c));
  j["children"] = cs;
  return j;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "liftcat-report v1";
  j["report"] = to_j(*this);
  return j.dump(2) + "\n";
}

std::string Report::summary_line() const {
  std::string s = suite_ + ": " + to_string(status()) + " [" + mode_.str() +
                  ", checked " + std::to_string(checked_total());
  if (auto sk = skipped_total()) s += ", skipped " + std::to_string(sk);
  if (auto v = violations_total()) s += ", violations " + std::to_string(v);
  s += "]";
  if (status() == Status::fail) {
    if (const Witness* w = first_witness()) s += " first: " + w->law;
  }
  return s;
}

}  // namespace liftcat
