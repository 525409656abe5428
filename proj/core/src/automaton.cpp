#include "coxfsa/automaton.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "coxfsa/errors.hpp"
#include "coxfsa/language.hpp"

namespace coxfsa {

std::size_t ResidueFsa::transition_count() const {
  std::size_t n = 0;
  for (const auto& ts : transitions_) n += ts.size();
  return n;
}

std::optional<std::size_t> ResidueFsa::find(const StateKey& key) const {
  const auto it = std::find(states_.begin(), states_.end(), key);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t ResidueFsa::add_state(StateKey key) {
  states_.push_back(std::move(key));
  transitions_.emplace_back();
  return states_.size() - 1;
}

void ResidueFsa::add_transition(std::size_t from, Transition tr) {
  for (const auto& other : transitions_.at(from)) {
    if (other.t == tr.t) throw InvariantError("two transitions for the same parabolic");
  }
  transitions_.at(from).push_back(std::move(tr));
}

namespace {

struct Parabolic {
  GeneratorSet t;
  Element w0;
  std::vector<Word> labels;
  std::vector<Wall> residue;  // inversion walls of w0
  std::vector<Wall> blocked;  // walls whose presence forbids the transition
};

bool contains(const std::vector<Wall>& sorted, const Wall& w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

class KeyNames {
 public:
  StateKey key(const std::vector<Wall>& walls) {
    StateKey k;
    for (const auto& w : walls) k.reflections.push_back(name(w));
    std::sort(k.reflections.begin(), k.reflections.end(), shortlex_less);
    return k;
  }

 private:
  const Word& name(const Wall& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, w.reflection().normal_form()).first;
    return it->second;
  }
  std::unordered_map<Wall, Word> cache_;
};

std::vector<Wall> sorted_unique(std::vector<Wall> walls) {
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  return walls;
}

}  // namespace

std::vector<Wall> pulled_back_wall_set(const Element& g) {
  const Element back = g.inverse();
  std::vector<Wall> out;
  for (const auto& w : wall_set(g)) out.push_back(conjugate_wall(back, w));
  return sorted_unique(std::move(out));
}

StateKey state_key_of(const Element& g) {
  KeyNames names;
  return names.key(pulled_back_wall_set(g));
}

BuildResult build_automaton(const CoxeterSystem& sys, const BuildCaps& caps) {
  std::vector<Parabolic> parabolics;
  const std::uint64_t full = sys.generators().mask();
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const auto t = GeneratorSet::from_mask(mask);
    if (!is_finite_parabolic(sys, t)) continue;
    Element w0 = longest_element(sys, t);
    Parabolic p{t, w0, reduced_words(w0), sorted_unique(inversion_walls(w0)), {}};
    for (Generator s = 0; s < sys.rank(); ++s) {
      const Wall w = wall_of_generator(sys, s);
      p.blocked.push_back(t.contains(s) ? w : conjugate_wall(w0, w));
    }
    parabolics.push_back(std::move(p));
  }

  BuildResult result;
  KeyNames names;
  std::map<std::vector<Wall>, std::size_t> index;
  std::vector<std::vector<Wall>> walls_of;
  std::deque<std::size_t> queue;
  auto intern = [&](std::vector<Wall> walls) -> std::optional<std::size_t> {
    if (auto it = index.find(walls); it != index.end()) return it->second;
    if (walls_of.size() >= caps.max_states) return std::nullopt;
    const std::size_t id = result.fsa.add_state(names.key(walls));
    for (const auto& w : result.fsa.state(id).reflections) {
      result.report.max_wall_depth = std::max(result.report.max_wall_depth, w.size());
    }
    index.emplace(walls, id);
    walls_of.push_back(std::move(walls));
    queue.push_back(id);
    return id;
  };
  intern({});

  while (!queue.empty()) {
    const std::size_t from = queue.front();
    queue.pop_front();
    const std::vector<Wall> u = walls_of[from];
    for (const auto& p : parabolics) {
      if (std::any_of(p.blocked.begin(), p.blocked.end(),
                      [&](const Wall& w) { return contains(u, w); })) {
        continue;
      }
      std::vector<Wall> cand = u;
      cand.insert(cand.end(), p.residue.begin(), p.residue.end());
      cand = sorted_unique(std::move(cand));
      std::vector<Wall> next;
      for (const auto& b : cand) {
        const bool shadowed = std::any_of(cand.begin(), cand.end(), [&](const Wall& a) {
          return !(a == b) && separates_vertex_from_wall(a, p.w0, b);
        });
        if (!shadowed) next.push_back(conjugate_wall(p.w0, b));  // w0 is an involution
      }
      const auto target = intern(sorted_unique(std::move(next)));
      if (!target) {
        result.report.truncated = true;
        continue;
      }
      result.fsa.add_transition(from, Transition{p.t, p.w0.normal_form(), p.labels, *target});
    }
  }
  result.report.state_count = result.fsa.state_count();
  result.report.transition_count = result.fsa.transition_count();
  return result;
}

bool accepts(const ResidueFsa& fsa, const Word& word) {
  const std::size_t n = word.size();
  // reached[pos] holds the states some run occupies after `pos` letters.
  std::vector<std::vector<bool>> reached(n + 1, std::vector<bool>(fsa.state_count(), false));
  reached[0][fsa.start()] = true;
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t q = 0; q < fsa.state_count(); ++q) {
      if (!reached[pos][q]) continue;
      for (const auto& tr : fsa.transitions(q)) {
        const std::size_t len = tr.w0.size();
        if (pos + len > n) continue;
        const Word piece(std::vector<Generator>(word.begin() + pos, word.begin() + pos + len));
        if (std::binary_search(tr.labels.begin(), tr.labels.end(), piece)) {
          reached[pos + len][tr.target] = true;
        }
      }
    }
  }
  return std::find(reached[n].begin(), reached[n].end(), true) != reached[n].end();
}

EquivalenceReport equivalence_scan(const ResidueFsa& fsa, const CoxeterSystem& sys,
                                   std::size_t max_len, unsigned threads) {
  std::vector<Word> words{Word()};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Generator s = 0; s < sys.rank(); ++s) words.push_back(words[i] + Word{s});
    }
    begin = end;
  }
  threads = std::max(1U, threads);
  std::vector<EquivalenceReport> parts(threads);
  std::vector<std::size_t> first_index(threads, words.size());
  auto work = [&](unsigned id) {
    auto& r = parts[id];
    for (std::size_t i = id; i < words.size(); i += threads) {
      const bool a = accepts(fsa, words[i]);
      const bool m = is_in_standard_language(sys, words[i]);
      ++r.words_checked;
      r.accepted += a;
      if (a != m) {
        ++r.mismatches;
        first_index[id] = std::min(first_index[id], i);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  EquivalenceReport out;
  out.max_len = max_len;
  std::size_t first = words.size();
  for (unsigned id = 0; id < threads; ++id) {
    out.words_checked += parts[id].words_checked;
    out.accepted += parts[id].accepted;
    out.mismatches += parts[id].mismatches;
    first = std::min(first, first_index[id]);
  }
  if (first < words.size()) out.first_counterexample = words[first];
  return out;
}

void export_dot(const ResidueFsa& fsa, const CoxeterSystem& sys, std::ostream& os) {
  os << "digraph residue_fsa {\n  rankdir=LR;\n  node [shape=doublecircle];\n";
  for (std::size_t q = 0; q < fsa.state_count(); ++q) {
    std::size_t depth = 0;
    for (const auto& w : fsa.state(q).reflections) depth = std::max(depth, w.size());
    os << "  q" << q << " [label=\"" << q << "\\n" << fsa.state(q).reflections.size()
       << " walls, depth " << depth << "\"];\n";
  }
  for (std::size_t q = 0; q < fsa.state_count(); ++q) {
    for (const auto& tr : fsa.transitions(q)) {
      os << "  q" << q << " -> q" << tr.target << " [label=\"" << sys.format_set(tr.t)
         << " : " << sys.format_word(tr.w0) << "\"];\n";
    }
  }
  os << "}\n";
  if (!os) throw Error("failed to write DOT output");
}

void export_json(const ResidueFsa& fsa, const CoxeterSystem& sys, std::ostream& os) {
  using nlohmann::json;
  json states = json::array();
  for (std::size_t q = 0; q < fsa.state_count(); ++q) {
    json key = json::array();
    for (const auto& w : fsa.state(q).reflections) key.push_back(sys.format_word(w));
    states.push_back(std::move(key));
  }
  json transitions = json::array();
  for (std::size_t q = 0; q < fsa.state_count(); ++q) {
    for (const auto& tr : fsa.transitions(q)) {
      json t = json::array(), labels = json::array();
      for (Generator s : tr.t.members()) t.push_back(sys.matrix().name(s));
      for (const auto& w : tr.labels) labels.push_back(sys.format_word(w));
      transitions.push_back({{"from", q},
                             {"T", std::move(t)},
                             {"w0", sys.format_word(tr.w0)},
                             {"labels", std::move(labels)},
                             {"to", tr.target}});
    }
  }
  const json doc = {{"generators", sys.matrix().names()},
                    {"start", fsa.start()},
                    {"states", std::move(states)},
                    {"transitions", std::move(transitions)}};
  os << doc.dump(1) << '\n';
  if (!os) throw Error("failed to write JSON output");
}

ResidueFsa import_json(const CoxeterSystem& sys, std::istream& is) {
  using nlohmann::json;
  using Kind = ParseError::Kind;
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::exception& e) {
    throw ParseError(Kind::kSyntax, 0, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("start").get<std::size_t>() != 0) {
      throw ParseError(Kind::kBadEntry, 0, "start state must be 0");
    }
    ResidueFsa fsa;
    for (const auto& key : doc.at("states")) {
      StateKey k;
      for (const auto& w : key) k.reflections.push_back(sys.parse_word(w.get<std::string>()));
      fsa.add_state(std::move(k));
    }
    for (const auto& t : doc.at("transitions")) {
      Transition tr;
      for (const auto& name : t.at("T")) {
        const auto s = sys.matrix().find(name.get<std::string>());
        if (!s) throw ParseError(Kind::kUnknownGenerator, 0, "unknown generator in T");
        tr.t.insert(*s);
      }
      tr.w0 = sys.parse_word(t.at("w0").get<std::string>());
      for (const auto& w : t.at("labels")) tr.labels.push_back(sys.parse_word(w.get<std::string>()));
      std::sort(tr.labels.begin(), tr.labels.end());
      tr.target = t.at("to").get<std::size_t>();
      const auto from = t.at("from").get<std::size_t>();
      if (from >= fsa.state_count() || tr.target >= fsa.state_count()) {
        throw ParseError(Kind::kBadEntry, 0, "transition refers to a missing state");
      }
      fsa.add_transition(from, std::move(tr));
    }
    return fsa;
  } catch (const json::exception& e) {
    throw ParseError(Kind::kSyntax, 0, std::string("malformed automaton: ") + e.what());
  }
}

}  // namespace coxfsa
