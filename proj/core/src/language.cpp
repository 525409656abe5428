#include "coxfsa/language.hpp"

#include <algorithm>
#include <unordered_map>

#include "coxfsa/errors.hpp"
#include "coxfsa/walls.hpp"

namespace coxfsa {

DescentData descent_data(const Element& g) {
  const GeneratorSet t = g.right_descents();
  if (t.empty()) return DescentData{t, g, g};
  if (!is_finite_parabolic(g.system(), t)) {
    throw InvariantError("descent set " + g.system().format_set(t) + " generates an infinite group");
  }
  Element w = longest_element(g.system(), t);
  Element pi = g * w;
  if (pi.length() + w.length() != g.length()) {
    throw InvariantError("l(Pi(g)) + l(w(g)) != l(g)");
  }
  return DescentData{t, std::move(w), std::move(pi)};
}

Element pi_power(const Element& g, std::size_t k) {
  Element h = g;
  for (std::size_t i = 0; i < k && !h.is_identity(); ++i) h = descent_data(h).pi;
  return h;
}

ChunkDecomposition chunk_decomposition(const Element& g) {
  ChunkDecomposition out;
  Element h = g;
  while (!h.is_identity()) {
    out.push_back(descent_data(h));
    h = out.back().pi;
  }
  return out;
}

bool is_in_standard_language(const CoxeterSystem& sys, const Word& word) {
  // prefixes[i] represents v(i).
  std::vector<Element> prefixes{sys.identity()};
  prefixes.reserve(word.size() + 1);
  for (Generator s : word) {
    if (s >= sys.rank()) throw PreconditionError("generator out of range");
    prefixes.push_back(prefixes.back().times(s));
  }
  if (prefixes.back().length() != word.size()) return false;
  // Peel chunks off the end: v(j-k+1, j) represents w(g) iff v(j-k) = Pi(g).
  std::size_t j = word.size();
  while (j > 0) {
    DescentData d = descent_data(prefixes[j]);
    const std::size_t k = d.w.length();
    if (!(prefixes[j - k] == d.pi)) return false;
    j -= k;
  }
  return true;
}

Word canonical_word(const Element& g) {
  const auto chunks = chunk_decomposition(g);
  Word out;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) out.append(it->w.normal_form());
  return out;
}

namespace {

struct ReducedWordSearch {
  std::size_t cap;
  std::unordered_map<Word, std::vector<Word>> memo;

  const std::vector<Word>& run(const Element& g) {
    if (auto it = memo.find(g.normal_form()); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (g.is_identity()) out.emplace_back();
    for (Generator s : g.right_descents().members()) {
      for (const Word& w : run(g.times(s))) {
        if (out.size() >= cap) {
          throw ResourceError("more than " + std::to_string(cap) + " reduced words");
        }
        out.push_back(w + Word{s});
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(g.normal_form(), std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Word> reduced_words(const Element& g, std::size_t cap) {
  ReducedWordSearch search{cap, {}};
  return search.run(g);
}

std::vector<Word> language_words(const Element& g, std::size_t cap) {
  std::vector<Word> out{Word()};
  const auto chunks = chunk_decomposition(g);
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    const auto pieces = reduced_words(it->w, cap);
    if (out.size() * pieces.size() > cap) {
      throw ResourceError("more than " + std::to_string(cap) + " language words");
    }
    std::vector<Word> next;
    next.reserve(out.size() * pieces.size());
    for (const Word& v : out) {
      for (const Word& p : pieces) next.push_back(v + p);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AppendLemmaCheck check_append_lemma(const Element& g, GeneratorSet t) {
  const auto& sys = g.system();
  const Element w0 = longest_element(sys, t);
  const Element gw = g * w0;
  AppendLemmaCheck out{gw.right_descents() == t, false};
  if (!(t & g.right_descents()).empty()) return out;
  const auto ws = wall_set(g);
  for (Generator s : sys.generators().minus(t).members()) {
    const Wall w = conjugate_wall(gw, wall_of_generator(sys, s));
    if (std::find(ws.begin(), ws.end(), w) != ws.end()) return out;
  }
  out.rhs = true;
  return out;
}

bool prop_main_holds(const Element& g, const Element& g_prime, const PropMainWitness& x) {
  const GeneratorSet pr{x.p, x.r};
  return residue_gate(pi_power(g, x.k), pr) == residue_gate(pi_power(g_prime, x.k_prime), pr);
}

std::optional<PropMainWitness> check_prop_main(const Element& g, const Element& g_prime,
                                               Generator s, Generator t) {
  const auto& sys = g.system();
  if (!is_two_dimensional(sys)) throw PreconditionError("check_prop_main: system is not 2-dimensional");
  if (s >= sys.rank() || t >= sys.rank()) throw PreconditionError("generator out of range");
  if (s != t && sys.matrix().m(s, t).is_infinite()) {
    throw PreconditionError("check_prop_main: m_st is infinite");
  }
  const GeneratorSet st{s, t};
  if (!(residue_gate(g, st) == residue_gate(g_prime, st))) {
    throw PreconditionError("check_prop_main: g' is not in g<s,t>");
  }
  std::vector<Element> pis{g}, pis_prime{g_prime};
  for (std::size_t k = 1; k <= 3; ++k) {
    pis.push_back(pi_power(pis.back(), 1));
    pis_prime.push_back(pi_power(pis_prime.back(), 1));
  }
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t kp = 0; kp <= 3; ++kp) {
      if (k + kp == 0) continue;
      for (Generator p = 0; p < sys.rank(); ++p) {
        for (Generator r = p; r < sys.rank(); ++r) {
          if (p != r && sys.matrix().m(p, r).is_infinite()) continue;
          const GeneratorSet pr{p, r};
          if (residue_gate(pis[k], pr) == residue_gate(pis_prime[kp], pr)) {
            return PropMainWitness{k, kp, p, r};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace coxfsa
