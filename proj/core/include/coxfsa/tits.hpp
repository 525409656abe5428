#pragma once

// Word-rewriting oracle for the word problem, independent of the matrix
// representation. By Tits' solution, a word is reduced iff no sequence of
// braid moves creates a square ss, and the braid moves act transitively on
// the reduced words of an element. Exponential; meant for short words.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "coxfsa/coxeter.hpp"

namespace coxfsa {

class TitsOracle {
 public:
  // Words longer than `max_length` are rejected with ResourceError.
  explicit TitsOracle(const CoxeterMatrix& matrix, std::size_t max_length = 10);

  // A geodesic word for the same element: the lexicographically least
  // member of its braid class.
  Word reduce(const Word& w);
  std::size_t length(const Word& w) { return reduce(w).size(); }
  // All reduced words of the element represented by a reduced word `w`
  // (its braid class). Precondition: w is reduced.
  std::vector<Word> reduced_words(const Word& w);

 private:
  std::vector<Word> braid_class(const Word& w) const;

  const CoxeterMatrix& matrix_;
  std::size_t max_length_;
  std::unordered_map<Word, Word> memo_;
};

// One-shot convenience wrapper around TitsOracle.
Word tits_reduce(const CoxeterSystem& sys, const Word& word, std::size_t max_length = 10);

}  // namespace coxfsa
