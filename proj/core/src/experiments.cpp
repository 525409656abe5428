#include "coxfsa/experiments.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "coxfsa/errors.hpp"

namespace coxfsa {
namespace {

// Runs fn(i, worker) for i in [0, n), striding across workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i, 0U);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i, w);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<Element> dihedral_elements(const CoxeterSystem& sys, Generator s, Generator t) {
  std::vector<Element> out{sys.identity()};
  std::unordered_set<Word> seen{Word()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Generator x : {s, t}) {
      Element h = out[i].times(x);
      if (seen.insert(h.normal_form()).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace

std::size_t k_constant(const CoxeterSystem& sys) {
  std::size_t k = 0;
  const std::uint64_t full = sys.generators().mask();
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const auto t = GeneratorSet::from_mask(mask);
    if (is_finite_parabolic(sys, t)) k = std::max(k, longest_element(sys, t).length());
  }
  return k;
}

std::size_t word_pair_divergence(const CoxeterSystem& sys, const Word& v, const Word& v_prime,
                                 FtMode mode, Generator s) {
  const std::size_t n = std::max(v.size(), v_prime.size());
  // inv is the matrix of v(i)^-1, fwd the matrix of v'(i).
  Matrix inv = Matrix::identity(sys.field(), sys.rank());
  Matrix fwd = inv;
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i <= v.size()) sys.left_multiply(inv, v[i - 1]);
    if (i <= v_prime.size()) sys.right_multiply(fwd, v_prime[i - 1]);
    Matrix lhs = inv;
    if (mode == FtMode::kLeft) sys.right_multiply(lhs, s);
    best = std::max(best, length_of_matrix(sys, lhs * fwd));
  }
  return best;
}

std::size_t ft_pair_divergence(const Element& g, const Element& g_prime, FtMode mode,
                               Generator s) {
  const auto& sys = g.system();
  if (s >= sys.rank()) throw PreconditionError("generator out of range");
  const Element expect = mode == FtMode::kRight ? g.times(s) : g.left_times(s);
  if (!(expect == g_prime) || g_prime.length() <= g.length()) {
    throw PreconditionError("ft_pair_divergence: g' is not a longer neighbour of g");
  }
  return word_pair_divergence(sys, canonical_word(g), canonical_word(g_prime), mode, s);
}

void merge_witness(std::optional<Witness>& best, const Witness& w) {
  if (!best || w.value > best->value ||
      (w.value == best->value && std::tie(w.g, w.s) < std::tie(best->g, best->s))) {
    best = w;
  }
}

FtReport ft_scan(const CoxeterSystem& sys, std::size_t radius, const ScanOptions& options) {
  FtReport report;
  report.radius = radius;
  report.k = k_constant(sys);
  report.two_dimensional = is_two_dimensional(sys);
  const auto elems = ball(sys, radius, options.ball);
  const unsigned workers = std::max(1U, options.threads);
  std::vector<FtReport> parts(workers);

  auto words_of = [&](const Element& h) {
    return options.all_words ? language_words(h, options.word_cap)
                             : std::vector<Word>{canonical_word(h)};
  };
  parallel_for(elems.size(), workers, [&](std::size_t i, unsigned w) {
    const Element& g = elems[i];
    const auto vs = words_of(g);
    for (Generator s = 0; s < sys.rank(); ++s) {
      for (FtMode mode : {FtMode::kRight, FtMode::kLeft}) {
        const bool up = mode == FtMode::kRight ? !g.has_right_descent(s) : !g.has_left_descent(s);
        if (!up) continue;
        const Element gp = mode == FtMode::kRight ? g.times(s) : g.left_times(s);
        std::size_t value = 0;
        for (const Word& vp : words_of(gp)) {
          for (const Word& v : vs) value = std::max(value, word_pair_divergence(sys, v, vp, mode, s));
        }
        ++parts[w].pairs;
        const Witness wit{g.normal_form(), s, value};
        if (mode == FtMode::kRight) {
          merge_witness(parts[w].witness_ii, wit);
        } else {
          merge_witness(parts[w].witness_iii, wit);
        }
      }
    }
  });
  for (const auto& p : parts) {
    report.pairs += p.pairs;
    if (p.witness_ii) merge_witness(report.witness_ii, *p.witness_ii);
    if (p.witness_iii) merge_witness(report.witness_iii, *p.witness_iii);
  }
  if (report.witness_ii) report.max_ii = report.witness_ii->value;
  if (report.witness_iii) report.max_iii = report.witness_iii->value;
  return report;
}

std::vector<DivergenceRow> divergence_scan(const CoxeterSystem& sys,
                                           const std::vector<std::size_t>& radii,
                                           const ScanOptions& options) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) throw PreconditionError("radii must be strictly increasing");
  }
  if (radii.empty()) return {};
  const auto elems = ball(sys, radii.back(), options.ball);
  std::vector<std::optional<Witness>> per_element(elems.size());
  parallel_for(elems.size(), options.threads, [&](std::size_t i, unsigned) {
    const Element& g = elems[i];
    const Word v = canonical_word(g);
    for (Generator s = 0; s < sys.rank(); ++s) {
      if (g.has_right_descent(s)) continue;
      const std::size_t value =
          word_pair_divergence(sys, v, canonical_word(g.times(s)), FtMode::kRight, s);
      merge_witness(per_element[i], Witness{g.normal_form(), s, value});
    }
  });
  std::vector<DivergenceRow> rows;
  for (std::size_t r : radii) {
    DivergenceRow row;
    row.radius = r;
    for (std::size_t i = 0; i < elems.size() && elems[i].length() <= r; ++i) {
      if (per_element[i]) merge_witness(row.witness, *per_element[i]);
    }
    if (row.witness) row.max = row.witness->value;
    rows.push_back(std::move(row));
  }
  return rows;
}

PropMainReport prop_main_scan(const CoxeterSystem& sys, std::size_t radius,
                              const ScanOptions& options) {
  if (!is_two_dimensional(sys)) throw PreconditionError("prop_main_scan: system is not 2-dimensional");
  std::vector<std::pair<Generator, Generator>> pairs;
  std::vector<std::vector<Element>> residues;
  for (Generator s = 0; s < sys.rank(); ++s) {
    for (Generator t = s; t < sys.rank(); ++t) {
      if (s != t && sys.matrix().m(s, t).is_infinite()) continue;
      pairs.emplace_back(s, t);
      residues.push_back(dihedral_elements(sys, s, t));
    }
  }
  const auto elems = ball(sys, radius, options.ball);
  const unsigned workers = std::max(1U, options.threads);
  struct Part {
    std::size_t checked = 0, failures = 0;
    std::size_t first_index = SIZE_MAX;
    std::optional<PropMainFailure> first;
  };
  std::vector<Part> parts(workers);
  parallel_for(elems.size(), workers, [&](std::size_t i, unsigned w) {
    const Element& g = elems[i];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (const Element& u : residues[p]) {
        const Element gp = g * u;
        ++parts[w].checked;
        if (check_prop_main(g, gp, pairs[p].first, pairs[p].second)) continue;
        ++parts[w].failures;
        if (i < parts[w].first_index) {
          parts[w].first_index = i;
          parts[w].first = PropMainFailure{g.normal_form(), gp.normal_form(), pairs[p].first,
                                           pairs[p].second};
        }
      }
    }
  });
  PropMainReport report;
  report.radius = radius;
  std::size_t first = SIZE_MAX;
  for (auto& p : parts) {
    report.checked += p.checked;
    report.failures += p.failures;
    if (p.first_index < first) {
      first = p.first_index;
      report.first_failure = p.first;
    }
  }
  return report;
}

void write_ft_tsv(const CoxeterSystem& sys, const std::vector<FtReport>& reports,
                  std::ostream& os) {
  os << "radius\tK\tmax_ii\tmax_iii\twitness_g_nf\twitness_s\n";
  for (const auto& r : reports) {
    os << r.radius << '\t' << r.k << '\t' << r.max_ii << '\t' << r.max_iii << '\t';
    if (r.witness_ii) {
      os << sys.format_word(r.witness_ii->g) << '\t' << sys.matrix().name(r.witness_ii->s);
    } else {
      os << "-\t-";
    }
    os << '\n';
  }
}

void write_divergence_tsv(const CoxeterSystem& sys, const std::vector<DivergenceRow>& rows,
                          std::ostream& os) {
  os << "radius\tmax_divergence\twitness_g_nf\twitness_s\n";
  for (const auto& r : rows) {
    os << r.radius << '\t' << r.max << '\t';
    if (r.witness) {
      os << sys.format_word(r.witness->g) << '\t' << sys.matrix().name(r.witness->s);
    } else {
      os << "-\t-";
    }
    os << '\n';
  }
}

}  // namespace coxfsa
