#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace liftcat {

enum class Status { pass, fail, not_checkable };

const char* to_string(Status s);

struct Mode {
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;

  static Mode exhaustive() { return {}; }
  static Mode sampling(std::uint64_t seed, std::uint64_t n) { return {true, seed, n}; }
  std::string str() const;
};

struct Witness {
  std::string law;
  std::vector<std::string> inputs;
  std::string expected;
  std::string actual;
};

// A checker result. Status is derived: fail dominates not_checkable dominates pass.
class Report {
 public:
  static constexpr std::size_t kDefaultWitnessCap = 16;

  Report() = default;
  explicit Report(std::string suite, Mode mode = Mode::exhaustive())
      : suite_(std::move(suite)), mode_(mode) {}

  const std::string& suite() const { return suite_; }
  const Mode& mode() const { return mode_; }
  void set_mode(Mode m) { mode_ = m; }

  void fail(Witness w);
  void fail(std::string law, std::vector<std::string> inputs, std::string expected,
            std::string actual) {
    fail(Witness{std::move(law), std::move(inputs), std::move(expected), std::move(actual)});
  }
  // Violations beyond the retained witnesses.
  void extra_violations(std::uint64_t n) { violations_ += n; }
  void not_checkable(std::string reason);
  void skip(const std::string& reason, std::uint64_t count = 1);
  void count(std::uint64_t n = 1) { checked_ += n; }
  void note(std::string n) { notes_.push_back(std::move(n)); }
  Report& add(Report child);
  void merge_counts(const Report& other);
  void set_witness_cap(std::size_t cap) { cap_ = cap; }

  Status status() const;
  bool passed() const { return status() == Status::pass; }
  bool failed() const { return status() == Status::fail; }

  std::uint64_t checked() const { return checked_; }
  std::uint64_t checked_total() const;
  std::uint64_t skipped_total() const;
  std::uint64_t violations() const { return violations_; }
  std::uint64_t violations_total() const;
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::map<std::string, std::uint64_t>& skipped() const { return skipped_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::string& reason() const { return reason_; }
  const std::vector<Report>& children() const { return children_; }
  const Report* find(const std::string& suite) const;
  // First witness anywhere in the tree, depth first.
  const Witness* first_witness() const;
  bool has_law(const std::string& law) const;

  std::string to_text() const;
  std::string to_json() const;
  std::string summary_line() const;

 private:
  void render_text(std::string& out, const std::string& prefix) const;

  std::string suite_;
  Mode mode_;
  std::vector<Witness> witnesses_;
  std::uint64_t violations_ = 0;
  std::uint64_t checked_ = 0;
  std::map<std::string, std::uint64_t> skipped_;
  std::vector<std::string> notes_;
  std::string reason_;
  bool not_checkable_ = false;
  std::vector<Report> children_;
  std::size_t cap_ = kDefaultWitnessCap;
};

}  // namespace liftcat
