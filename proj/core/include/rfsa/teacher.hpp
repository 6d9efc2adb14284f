#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "rfsa/automaton.hpp"

namespace rfsa {

struct QueryStats {
  std::size_t mq_total = 0;
  std::size_t mq_distinct = 0;
  std::size_t eq_count = 0;
  std::size_t longest_counterexample = 0;

  friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

/// Minimally adequate teacher: membership and equivalence queries.
class Teacher {
public:
  virtual ~Teacher() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual bool membership(const Word& w) = 0;
  /// nullopt if L(hypothesis) is the target language, else a counterexample.
  virtual std::optional<Word> equivalence(const Automaton& hypothesis) = 0;
  virtual const QueryStats& stats() const = 0;
};

/// Teacher simulated from a secret target automaton. Membership answers are
/// cached; counterexamples are shortlex-least.
class TeacherSession final : public Teacher {
public:
  explicit TeacherSession(Automaton target);

  const Alphabet& alphabet() const override { return target_.alphabet(); }
  bool membership(const Word& w) override;
  std::optional<Word> equivalence(const Automaton& hypothesis) override;
  const QueryStats& stats() const override { return stats_; }

  const Automaton& target() const noexcept { return target_; }

private:
  Automaton target_;
  QueryStats stats_;
  std::map<Word, bool> cache_;
};

/// View of another teacher that teaches the reversed language: queries and
/// hypotheses are reversed on the way in, counterexamples on the way out.
/// Counters accrue to the wrapped teacher.
class ReversalTeacher final : public Teacher {
public:
  explicit ReversalTeacher(Teacher& base) : base_(base) {}
  ReversalTeacher(const ReversalTeacher&) = delete;
  ReversalTeacher& operator=(const ReversalTeacher&) = delete;

  const Alphabet& alphabet() const override { return base_.alphabet(); }
  bool membership(const Word& w) override;
  std::optional<Word> equivalence(const Automaton& hypothesis) override;
  const QueryStats& stats() const override { return base_.stats(); }

private:
  Teacher& base_;
};

} // namespace rfsa
