#pragma once

// The standard language. For g != id let T(g) be its right descent set,
// w(g) the longest element of <T(g)> and Pi(g) = g w(g). A word v
// representing g is in the language iff its suffix of length l(w(g))
// represents w(g) and the remaining prefix is in the language.

#include <cstddef>
#include <optional>
#include <vector>

#include "coxfsa/coxeter.hpp"

namespace coxfsa {

struct DescentData {
  GeneratorSet t;
  Element w;
  Element pi;
};

// (T(g), w(g), Pi(g)); the identity gives (empty, id, id).
DescentData descent_data(const Element& g);

// Pi applied k times.
Element pi_power(const Element& g, std::size_t k);

// Chunks from g down to the identity: chunk i has pi = Pi^{i+1}(g).
using ChunkDecomposition = std::vector<DescentData>;
ChunkDecomposition chunk_decomposition(const Element& g);

bool is_in_standard_language(const CoxeterSystem& sys, const Word& word);

// Language word built from the ShortLex normal form of every chunk.
Word canonical_word(const Element& g);

// All reduced words of g, sorted. Throws ResourceError past `cap`.
std::vector<Word> reduced_words(const Element& g, std::size_t cap = 100'000);

// All language words representing g, sorted. Throws ResourceError past `cap`.
std::vector<Word> language_words(const Element& g, std::size_t cap = 100'000);

struct AppendLemmaCheck {
  // T(g w0(T)) = T
  bool lhs;
  // T and T(g) are disjoint, and for each t outside T the wall dual to
  // (g w0, g w0 t) is not in W(g).
  bool rhs;
};

// Throws PreconditionError when <T> is infinite.
AppendLemmaCheck check_append_lemma(const Element& g, GeneratorSet t);

struct PropMainWitness {
  std::size_t k;
  std::size_t k_prime;
  Generator p;
  Generator r;
  bool operator==(const PropMainWitness&) const = default;
};

// Is Pi^k'(g') in the residue Pi^k(g)<p, r>? Compared through the gates.
bool prop_main_holds(const Element& g, const Element& g_prime,
                     const PropMainWitness& witness);

// Searches k, k' <= 3 with k + k' > 0 and p <= r with m_pr finite, in that
// lexicographic order. Requires a 2-dimensional system, m_st finite and g'
// in g<s, t>; throws PreconditionError otherwise.
std::optional<PropMainWitness> check_prop_main(const Element& g, const Element& g_prime,
                                               Generator s, Generator t);

}  // namespace coxfsa
