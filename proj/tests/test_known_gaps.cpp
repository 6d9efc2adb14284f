// Expectations the two-step table surgery does not meet; see README.

#include <doctest.h>

#include "rfsa/learners.hpp"
#include "rfsa/residuals.hpp"
#include "support.hpp"

using namespace rfsa;
using namespace rfsa::test;

TEST_SUITE("known_gaps") {

TEST_CASE("rev2step on even-a yields the 2-state canonical RFSA") {
  TeacherSession session(even_a());
  const LearnerResult r = two_step_reversal(session);
  REQUIRE(r.modified);
  CHECK(r.modified->table.contexts().size() == 2);
  CHECK(r.hypothesis.num_states() == 2);
  CHECK(isomorphic(r.hypothesis, canonical_rfsa(even_a())));
}

TEST_CASE("rev2step yields the canonical RFSA on the corpus") {
  for (const auto& lang : seeded_corpus()) {
    TeacherSession session(lang.target);
    const LearnerResult r = two_step_reversal(session);
    CHECK_MESSAGE(isomorphic(r.hypothesis, canonical_rfsa(lang.target)), lang.name);
  }
}

TEST_CASE("modified reversal tables keep the language of the reversal DFA") {
  for (const auto& lang : seeded_corpus()) {
    TeacherSession session(lang.target);
    ReversalTeacher view(session);
    const LearnerResult r = lstar_col(view);
    const ModifiedTable m = apply_modifications(r.final_table);
    CHECK_MESSAGE(equivalent(derive_modified_dfa(m), derive_dfa(r.final_table)), lang.name);
  }
}

TEST_CASE("prime2step yields the canonical RFSA on the corpus") {
  for (const auto& lang : seeded_corpus()) {
    TeacherSession session(lang.target);
    Automaton hypothesis;
    CHECK_NOTHROW_MESSAGE(hypothesis = two_step_prime_contexts(session).hypothesis, lang.name);
    CHECK_MESSAGE(isomorphic(hypothesis, canonical_rfsa(lang.target)), lang.name);
  }
}

TEST_CASE("final L*_col tables are RFSA-consistent") {
  for (const auto& lang : seeded_corpus()) {
    TeacherSession session(lang.target);
    CHECK_FALSE_MESSAGE(is_rfsa_consistent(lstar_col(session).final_table), lang.name);
  }
}

TEST_CASE("distinguishing context count equals the prime count") {
  for (const auto& lang : seeded_corpus()) {
    if (lang.target.num_states() > kMaxContextSearchStates) continue;
    CHECK_MESSAGE(min_distinguishing_context_count(lang.target) == prime_count(residual_index(lang.target)),
                  lang.name);
  }
}

} // TEST_SUITE
