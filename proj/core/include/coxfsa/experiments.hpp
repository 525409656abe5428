#pragma once

// Fellow-traveller measurements on balls of the Cayley graph.
//
// For language words v, v' of g and g' = gs (right) or g' = sg (left), the
// divergence is the maximum over i >= 1 of l(v(i)^-1 v'(i)), respectively
// l(v(i)^-1 s v'(i)), with v(i) the whole word once i passes its end.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coxfsa/coxeter.hpp"
#include "coxfsa/language.hpp"

namespace coxfsa {

// Largest l(w0(T)) over finite parabolics <T>.
std::size_t k_constant(const CoxeterSystem& sys);

enum class FtMode { kRight, kLeft };

std::size_t word_pair_divergence(const CoxeterSystem& sys, const Word& v, const Word& v_prime,
                                 FtMode mode, Generator s);

// Divergence of the canonical words of g and g'. Requires g' = gs (right) or
// g' = sg (left) with l(g') > l(g); throws PreconditionError otherwise.
std::size_t ft_pair_divergence(const Element& g, const Element& g_prime, FtMode mode,
                               Generator s);

struct Witness {
  Word g;  // normal form
  Generator s = 0;
  std::size_t value = 0;
};

// Larger value wins; ties go to the lexicographically least (g, s).
void merge_witness(std::optional<Witness>& best, const Witness& w);

struct ScanOptions {
  unsigned threads = 1;
  BallOptions ball;
  // Quantify over every language word of both endpoints, not only the
  // canonical ones.
  bool all_words = false;
  std::size_t word_cap = 10'000;
};

struct FtReport {
  std::size_t radius = 0;
  std::size_t k = 0;
  bool two_dimensional = false;
  std::size_t pairs = 0;
  std::size_t max_ii = 0;
  std::size_t max_iii = 0;
  std::optional<Witness> witness_ii;
  std::optional<Witness> witness_iii;
  // max_ii <= 5K; only asserted for 2-dimensional systems.
  bool bound_holds() const { return !two_dimensional || max_ii <= 5 * k; }
};

// g ranges over the ball of the given radius, s over generators with
// l(gs) > l(g) (resp. l(sg) > l(g)).
FtReport ft_scan(const CoxeterSystem& sys, std::size_t radius, const ScanOptions& options = {});

struct DivergenceRow {
  std::size_t radius = 0;
  std::size_t max = 0;
  std::optional<Witness> witness;
};

// Right-multiplication divergence of canonical words, maximized over each
// ball. Radii must be strictly increasing.
std::vector<DivergenceRow> divergence_scan(const CoxeterSystem& sys,
                                           const std::vector<std::size_t>& radii,
                                           const ScanOptions& options = {});

struct PropMainFailure {
  Word g, g_prime;
  Generator s, t;
};

struct PropMainReport {
  std::size_t radius = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<PropMainFailure> first_failure;
};

// Every g in the ball, every s <= t with m_st finite, every g' in g<s,t>.
// Requires a 2-dimensional system.
PropMainReport prop_main_scan(const CoxeterSystem& sys, std::size_t radius,
                              const ScanOptions& options = {});

// Columns: radius, K, max_ii, max_iii, witness_g_nf, witness_s.
void write_ft_tsv(const CoxeterSystem& sys, const std::vector<FtReport>& reports,
                  std::ostream& os);
// Columns: radius, max_divergence, witness_g_nf, witness_s.
void write_divergence_tsv(const CoxeterSystem& sys, const std::vector<DivergenceRow>& rows,
                          std::ostream& os);

}  // namespace coxfsa
