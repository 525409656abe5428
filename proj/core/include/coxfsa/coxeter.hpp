#pragma once

// Coxeter systems and their elements.
//
// An element is stored as its exact matrix in the geometric representation
// (the action on the span of the simple roots) together with the matrix of
// its inverse. The representation is faithful, so elements are compared by
// matrix. Each element also carries its ShortLex normal form, computed by
// repeatedly stripping the least left descent.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxfsa/scalar.hpp"
#include "coxfsa/word.hpp"

namespace coxfsa {

class CoxeterMatrix {
 public:
  // `table` is row-major n x n. Validates symmetry, the unit diagonal,
  // off-diagonal entries >= 2 and distinct names; throws ParseError.
  CoxeterMatrix(std::vector<std::string> names, std::vector<Order> table);

  std::size_t rank() const { return names_.size(); }
  const std::string& name(Generator s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  Order m(Generator s, Generator t) const { return table_[s * rank() + t]; }
  std::optional<Generator> find(std::string_view name) const;

  // Off-diagonal labels, each unordered pair once.
  std::vector<Order> labels() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Order> table_;
};

using Vector = std::vector<Scalar>;

// Dense square matrix of scalars, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix identity(const CycloField& field, std::size_t n);

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

class Element;

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix);
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CoxeterMatrix& matrix() const { return matrix_; }
  const CycloField& field() const { return *field_; }
  std::size_t rank() const { return matrix_.rank(); }
  GeneratorSet generators() const { return GeneratorSet::all(rank()); }

  // 2cos(pi/m_st) for s != t.
  const Scalar& cos2(Generator s, Generator t) const {
    return cos2_[s * rank() + t];
  }
  // 2B(alpha_s, alpha_t): 2 on the diagonal, -2cos(pi/m_st) off it.
  const Scalar& form2(Generator s, Generator t) const {
    return form2_[s * rank() + t];
  }
  // 2B(u, v) for coordinate vectors in the simple-root basis.
  Scalar form2(const Vector& u, const Vector& v) const;

  // Matrix of sigma_s.
  const Matrix& sigma(Generator s) const { return sigma_[s]; }
  // In-place M <- M * sigma_s (column operation).
  void right_multiply(Matrix& m, Generator s) const;
  // In-place M <- sigma_s * M (row operation).
  void left_multiply(Matrix& m, Generator s) const;
  // sigma_s applied to a coordinate vector.
  void reflect(Vector& v, Generator s) const;
  Vector simple_root(Generator s) const;

  Element identity() const;
  Element generator(Generator s) const;

  // Tokenizes a word: separators (space . , *) when present, otherwise one
  // letter per character if all names are single characters, otherwise
  // greedy longest match. "" and "-" denote the empty word.
  Word parse_word(std::string_view text) const;
  // Concatenation when every name is one character, '.'-joined otherwise;
  // "-" for the empty word.
  std::string format_word(const Word& w) const;
  std::string format_set(GeneratorSet t) const;

 private:
  CoxeterMatrix matrix_;
  std::unique_ptr<CycloField> field_;
  std::vector<Scalar> cos2_;
  std::vector<Scalar> form2_;
  std::vector<Matrix> sigma_;
  bool single_char_names_ = true;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// An element of W. The system must outlive every element created from it.
class Element {
 public:
  const CoxeterSystem& system() const { return *system_; }
  // Action on root coordinates; column t is g(alpha_t).
  const Matrix& matrix() const { return mat_; }
  const Matrix& inverse_matrix() const { return inv_; }
  std::size_t length() const { return nf_.size(); }
  // ShortLex-least reduced word.
  const Word& normal_form() const { return nf_; }
  bool is_identity() const { return nf_.empty(); }

  Element operator*(const Element& rhs) const;
  Element inverse() const;
  // g * s and s * g.
  Element times(Generator s) const;
  Element left_times(Generator s) const;

  // l(gs) < l(g)
  bool has_right_descent(Generator s) const;
  // l(sg) < l(g)
  bool has_left_descent(Generator s) const;
  GeneratorSet right_descents() const;
  GeneratorSet left_descents() const;

  Vector apply(const Vector& v) const { return mat_.apply(v); }
  Vector apply_inverse(const Vector& v) const { return inv_.apply(v); }

  // Exact matrix comparison. Throws MismatchError across systems.
  bool operator==(const Element& rhs) const;

  // Builds an element from a matrix and its inverse. The caller guarantees
  // both lie in the image of the representation.
  static Element from_matrices(const CoxeterSystem& sys, Matrix mat, Matrix inv);

 private:
  Element(const CoxeterSystem* sys, Matrix mat, Matrix inv);
  void check_same_system(const Element& rhs) const;

  const CoxeterSystem* system_;
  Matrix mat_;
  Matrix inv_;
  Word nf_;
};

// Sign of a root given by coordinates: +1 positive, -1 negative, 0 for the
// zero vector. Roots are uniformly signed, so the first nonzero coordinate
// decides.
int root_sign(const Vector& v);

// Is column j of m a negative root?
bool column_is_negative(const Matrix& m, std::size_t j);

// Length of the element with matrix m, by stripping right descents.
std::size_t length_of_matrix(const CoxeterSystem& sys, Matrix m);

// --- operations ------------------------------------------------------------

// Parses the group-definition text format:
//   generators s t r ...
//   m <a> <b> <value>     (value an integer >= 2 or "inf"; default inf)
// '#' starts a comment. Throws ParseError with the offending line.
SystemPtr parse_system(std::string_view text);
// Throws PreconditionError when the file cannot be read.
SystemPtr load_system(const std::string& path);
SystemPtr make_system(CoxeterMatrix matrix);

// Q(2cos(pi/N)) with N the lcm of the finite labels >= 3.
std::unique_ptr<CycloField> field_for(const CoxeterMatrix& matrix);

bool is_two_dimensional(const CoxeterSystem& sys);

Element element_of(const CoxeterSystem& sys, const Word& word);
Word shortlex_nf(const Element& g);

bool is_finite_parabolic(const CoxeterSystem& sys, GeneratorSet t);
// Longest element of the finite parabolic <t>; throws PreconditionError when
// <t> is infinite.
Element longest_element(const CoxeterSystem& sys, GeneratorSet t);
// Minimal-length element of the residue g<t> (the gate).
Element residue_gate(const Element& g, GeneratorSet t);

struct BallOptions {
  std::size_t max_elements = 1'000'000;
};

// All elements of length <= radius in nondecreasing length order, ShortLex
// order within each length. Throws ResourceError past the cap.
std::vector<Element> ball(const CoxeterSystem& sys, std::size_t radius,
                          const BallOptions& options = {});

}  // namespace coxfsa
