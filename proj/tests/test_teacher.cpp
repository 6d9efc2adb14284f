#include <doctest.h>

#include <random>

#include "rfsa/errors.hpp"
#include "support.hpp"

using namespace rfsa;
using namespace rfsa::test;

TEST_SUITE("teacher") {

TEST_CASE("membership answers and counters") {
  TeacherSession none(empty_language());
  for (const auto& x : words_up_to(2, 4)) CHECK_FALSE(none.membership(x));

  TeacherSession even(even_a());
  const Alphabet& s = even.alphabet();
  CHECK(even.membership(w(s, "aa")));
  CHECK(even.stats().mq_total == 1);
  CHECK(even.stats().mq_distinct == 1);
  CHECK(even.membership(w(s, "aa")));
  CHECK(even.stats().mq_total == 2);
  CHECK(even.stats().mq_distinct == 1);
  CHECK_FALSE(even.membership(w(s, "ab")));
  CHECK(even.stats().mq_distinct == 2);
  CHECK_THROWS_AS(even.membership(Word{5}), InputError);
}

TEST_CASE("equivalence answers and counters") {
  TeacherSession even(even_a());
  CHECK_FALSE(even.equivalence(even_a()));
  CHECK(even.stats().eq_count == 1);
  CHECK(even.stats().longest_counterexample == 0);

  TeacherSession all(sigma_star());
  CHECK(all.equivalence(empty_language()) == Word{});
  CHECK(all.stats().eq_count == 1);

  Automaton no_b_loop(Alphabet::letters(2), 2);
  no_b_loop.add_initial(0);
  no_b_loop.add_final(0);
  no_b_loop.add_transition(0, 0, 1);
  no_b_loop.add_transition(1, 0, 0);
  no_b_loop.add_transition(1, 1, 1);
  TeacherSession target(even_a());
  const auto cex = target.equivalence(no_b_loop);
  REQUIRE(cex);
  CHECK(*cex == Word{1});
  CHECK(target.stats().longest_counterexample == 1);

  CHECK_THROWS_AS(target.equivalence(sigma_star(3)), InputError);
}

TEST_CASE("reversal view") {
  TeacherSession base(ends_with_a_dfa());
  ReversalTeacher view(base);
  const Alphabet& s = base.alphabet();
  CHECK(view.membership(w(s, "ab")));
  CHECK_FALSE(view.membership(w(s, "ba")));
  CHECK_FALSE(view.membership(w(s, "b")));
  CHECK(base.stats().mq_total == 3);
  CHECK(view.stats().mq_total == 3);

  const Automaton starts_with_a = minimal_dfa(reverse_automaton(ends_with_a_dfa()));
  CHECK_FALSE(view.equivalence(starts_with_a));
  CHECK(base.stats().eq_count == 1);

  const auto cex = view.equivalence(ends_with_a_dfa());
  REQUIRE(cex);
  CHECK(accepts(starts_with_a, *cex) != accepts(ends_with_a_dfa(), *cex));

  TeacherSession even(even_a());
  ReversalTeacher mirror(even);
  TeacherSession plain(even_a());
  for (const auto& x : words_up_to(2, 5)) CHECK(mirror.membership(x) == plain.membership(x));
}

TEST_CASE("property: counterexamples are minimal and exact") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    const Automaton target = random_nfa(1 + round % 4, 2, rng);
    const Automaton hypothesis = random_nfa(1 + (round / 4) % 4, 2, rng);
    TeacherSession session(target);
    const auto cex = session.equivalence(hypothesis);
    const bool same = minimal_dfa(hypothesis) == minimal_dfa(target);
    CHECK(cex.has_value() != same);
    if (!cex) continue;
    CHECK(accepts(target, *cex) != accepts(hypothesis, *cex));
    const auto brute = brute_force_difference(target, hypothesis, cex->size());
    REQUIRE(brute);
    CHECK(*brute == *cex);
    CHECK(session.stats().longest_counterexample == cex->size());
  }
}

TEST_CASE("property: double reversal behaves like the base session") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 60; ++round) {
    const Automaton target = random_nfa(1 + round % 5, 2, rng);
    const Automaton hypothesis = random_nfa(1 + round % 3, 2, rng);
    TeacherSession plain(target);
    TeacherSession wrapped(target);
    ReversalTeacher once(wrapped);
    ReversalTeacher twice(static_cast<Teacher&>(once));
    for (const auto& x : words_up_to(2, 4)) CHECK(twice.membership(x) == plain.membership(x));
    CHECK(twice.equivalence(hypothesis) == plain.equivalence(hypothesis));
    CHECK(wrapped.stats() == plain.stats());
  }
}

TEST_CASE("property: counters are monotone and distinct never exceeds total") {
  std::mt19937_64 rng(41);
  TeacherSession session(seeded_corpus().front().target);
  QueryStats last;
  for (int i = 0; i < 500; ++i) {
    Word x;
    for (std::size_t n = rng() % 6; n > 0; --n) x.push_back(static_cast<Symbol>(rng() % 2));
    if (i % 50 == 0) {
      session.equivalence(random_nfa(3, 2, rng));
    } else {
      session.membership(x);
    }
    const QueryStats& now = session.stats();
    CHECK(now.mq_distinct <= now.mq_total);
    CHECK(now.mq_total >= last.mq_total);
    CHECK(now.mq_distinct >= last.mq_distinct);
    CHECK(now.eq_count >= last.eq_count);
    CHECK(now.longest_counterexample >= last.longest_counterexample);
    last = now;
  }
}

} // TEST_SUITE
