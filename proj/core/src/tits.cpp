#include "coxfsa/tits.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "coxfsa/errors.hpp"

namespace coxfsa {

TitsOracle::TitsOracle(const CoxeterMatrix& matrix, std::size_t max_length)
    : matrix_(matrix), max_length_(max_length) {}

std::vector<Word> TitsOracle::braid_class(const Word& w) const {
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Generator a = cur[i], b = cur[i + 1];
      if (a == b) continue;
      const Order m = matrix_.m(a, b);
      if (m.is_infinite() || i + m.value() > cur.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m.value() && alternating; ++k) {
        alternating = cur[i + k] == (k % 2 == 0 ? a : b);
      }
      if (!alternating) continue;
      Word next = cur;
      for (std::size_t k = 0; k < m.value(); ++k) next[i + k] = k % 2 == 0 ? b : a;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    out.push_back(std::move(cur));
  }
  return out;
}

Word TitsOracle::reduce(const Word& w) {
  if (w.size() > max_length_) {
    throw ResourceError("tits oracle: word length " + std::to_string(w.size()) +
                        " exceeds cap " + std::to_string(max_length_));
  }
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  const auto cls = braid_class(w);
  Word result;
  bool found_square = false;
  for (const Word& v : cls) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] != v[i + 1]) continue;
      std::vector<Generator> shorter(v.begin(), v.begin() + i);
      shorter.insert(shorter.end(), v.begin() + i + 2, v.end());
      result = reduce(Word(std::move(shorter)));
      found_square = true;
      break;
    }
    if (found_square) break;
  }
  if (!found_square) result = *std::min_element(cls.begin(), cls.end());
  for (const Word& v : cls) memo_.emplace(v, result);
  return result;
}

std::vector<Word> TitsOracle::reduced_words(const Word& w) {
  if (reduce(w).size() != w.size()) {
    throw PreconditionError("reduced_words: word is not reduced");
  }
  auto cls = braid_class(w);
  std::sort(cls.begin(), cls.end());
  return cls;
}

Word tits_reduce(const CoxeterSystem& sys, const Word& word, std::size_t max_length) {
  TitsOracle oracle(sys.matrix(), max_length);
  return oracle.reduce(word);
}

}  // namespace coxfsa
