#pragma once

// The residue automaton for the standard language.
//
// A state is a set of walls at the identity: the walls W(g) of the chamber g
// reached so far, translated back by g^-1. From state U, a finite parabolic
// <T> with longest element w0 is appended when no wall of t in T lies in U
// and no wall w0(alpha_t) with t outside T lies in U. The next state keeps
// the walls of U and of the residue <T> that no other such wall separates
// from w0, translated back by w0. States are discovered by breadth-first
// search from the empty set; all states accept.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxfsa/coxeter.hpp"
#include "coxfsa/walls.hpp"

namespace coxfsa {

// Sorted normal forms of the reflections in the walls of a state.
struct StateKey {
  std::vector<Word> reflections;
  auto operator<=>(const StateKey&) const = default;
};

struct Transition {
  GeneratorSet t;
  Word w0;                  // normal form of the longest element of <T>
  std::vector<Word> labels; // all reduced words of w0, sorted
  std::size_t target;
};

class ResidueFsa {
 public:
  std::size_t start() const { return 0; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t transition_count() const;
  const StateKey& state(std::size_t i) const { return states_[i]; }
  const std::vector<Transition>& transitions(std::size_t i) const { return transitions_[i]; }
  std::optional<std::size_t> find(const StateKey& key) const;

  std::size_t add_state(StateKey key);
  void add_transition(std::size_t from, Transition tr);

 private:
  std::vector<StateKey> states_;
  std::vector<std::vector<Transition>> transitions_;
};

struct BuildCaps {
  std::size_t max_states = 100'000;
};

struct BuildReport {
  std::size_t state_count = 0;
  std::size_t transition_count = 0;
  // Longest reflection normal form among all state walls.
  std::size_t max_wall_depth = 0;
  bool truncated = false;
};

struct BuildResult {
  ResidueFsa fsa;
  BuildReport report;
};

// When the state cap is hit the partial automaton is returned with
// report.truncated set.
BuildResult build_automaton(const CoxeterSystem& sys, const BuildCaps& caps = {});

// The state reached by a language word for g: W(g) translated back by g^-1.
StateKey state_key_of(const Element& g);
std::vector<Wall> pulled_back_wall_set(const Element& g);

// Some run of the automaton consumes the whole word.
bool accepts(const ResidueFsa& fsa, const Word& word);

struct EquivalenceReport {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::size_t accepted = 0;
  std::size_t mismatches = 0;
  std::optional<Word> first_counterexample;
};

// Compares accepts() with is_in_standard_language() on every word of length
// <= max_len. Words are split across `threads` workers.
EquivalenceReport equivalence_scan(const ResidueFsa& fsa, const CoxeterSystem& sys,
                                   std::size_t max_len, unsigned threads = 1);

void export_dot(const ResidueFsa& fsa, const CoxeterSystem& sys, std::ostream& os);
void export_json(const ResidueFsa& fsa, const CoxeterSystem& sys, std::ostream& os);
// Throws ParseError on malformed input.
ResidueFsa import_json(const CoxeterSystem& sys, std::istream& is);

}  // namespace coxfsa
