#include "coxfsa/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "coxfsa/errors.hpp"

namespace coxfsa {

// ---------------------------------------------------------------------------
// CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> names,
                             std::vector<Order> table)
    : names_(std::move(names)), table_(std::move(table)) {
  using Kind = ParseError::Kind;
  const std::size_t n = names_.size();
  if (n == 0) throw ParseError(Kind::kSyntax, 0, "no generators");
  if (n > kMaxRank) {
    throw ParseError(Kind::kSyntax, 0,
                     "rank " + std::to_string(n) + " exceeds the supported maximum");
  }
  if (table_.size() != n * n) {
    throw ParseError(Kind::kSyntax, 0, "Coxeter table has the wrong size");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw ParseError(Kind::kSyntax, 0, "empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw ParseError(Kind::kDuplicateGenerator, 0,
                         "duplicate generator name '" + names_[i] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Order mij = table_[i * n + j];
      if (i == j) {
        if (mij != Order(1)) {
          throw ParseError(Kind::kBadEntry, 0, "diagonal entries must be 1");
        }
        continue;
      }
      if (mij != table_[j * n + i]) {
        throw ParseError(Kind::kAsymmetric, 0,
                         "asymmetric entry for " + names_[i] + "," + names_[j]);
      }
      if (mij.is_finite() && mij.value() < 2) {
        throw ParseError(Kind::kBadEntry, 0,
                         "m(" + names_[i] + "," + names_[j] + ") must be >= 2");
      }
    }
  }
}

std::optional<Generator> CoxeterMatrix::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

std::vector<Order> CoxeterMatrix::labels() const {
  std::vector<Order> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      out.push_back(m(static_cast<Generator>(i), static_cast<Generator>(j)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(const CycloField& field, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

int root_sign(const Vector& v) {
  for (const Scalar& x : v) {
    const int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

bool column_is_negative(const Matrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int s = m(i, j).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// CoxeterSystem

std::unique_ptr<CycloField> field_for(const CoxeterMatrix& matrix) {
  const auto labels = matrix.labels();
  return std::make_unique<CycloField>(CycloField::conductor(labels));
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), field_(field_for(matrix_)) {
  const std::size_t n = rank();
  cos2_.resize(n * n);
  form2_.resize(n * n);
  for (Generator s = 0; s < n; ++s) {
    for (Generator t = 0; t < n; ++t) {
      if (s == t) {
        form2_[s * n + t] = field_->from_rational(2);
        continue;
      }
      cos2_[s * n + t] = field_->cos_embed(matrix_.m(s, t));
      form2_[s * n + t] = -cos2_[s * n + t];
    }
  }
  for (Generator s = 0; s < n; ++s) {
    Matrix sig = Matrix::identity(*field_, n);
    right_multiply(sig, s);
    sigma_.push_back(std::move(sig));
  }
  for (const auto& name : matrix_.names()) {
    if (name.size() != 1) single_char_names_ = false;
  }
}

Scalar CoxeterSystem::form2(const Vector& u, const Vector& v) const {
  Scalar acc;
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || form2_[i * n + j].is_zero()) continue;
      acc += u[i] * form2_[i * n + j] * v[j];
    }
  }
  return acc;
}

void CoxeterSystem::right_multiply(Matrix& m, Generator s) const {
  const std::size_t n = rank();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == s) continue;
    const Scalar& c = cos2_[s * n + j];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!m(i, s).is_zero()) m(i, j) += c * m(i, s);
    }
  }
  for (std::size_t i = 0; i < n; ++i) m(i, s) = -m(i, s);
}

void CoxeterSystem::left_multiply(Matrix& m, Generator s) const {
  const std::size_t n = rank();
  for (std::size_t j = 0; j < n; ++j) {
    Scalar acc = -m(s, j);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s) continue;
      const Scalar& c = cos2_[s * n + t];
      if (!c.is_zero() && !m(t, j).is_zero()) acc += c * m(t, j);
    }
    m(s, j) = std::move(acc);
  }
}

void CoxeterSystem::reflect(Vector& v, Generator s) const {
  const std::size_t n = rank();
  Scalar acc = -v[s];
  for (std::size_t t = 0; t < n; ++t) {
    if (t == s) continue;
    const Scalar& c = cos2_[s * n + t];
    if (!c.is_zero() && !v[t].is_zero()) acc += c * v[t];
  }
  v[s] = std::move(acc);
}

Vector CoxeterSystem::simple_root(Generator s) const {
  Vector v(rank());
  v[s] = field_->one();
  return v;
}

Element CoxeterSystem::identity() const {
  return Element::from_matrices(*this, Matrix::identity(*field_, rank()),
                                Matrix::identity(*field_, rank()));
}

Element CoxeterSystem::generator(Generator s) const {
  return Element::from_matrices(*this, sigma_.at(s), sigma_.at(s));
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  using Kind = ParseError::Kind;
  auto unknown = [](std::string_view tok) {
    return ParseError(Kind::kUnknownGenerator, 0,
                      "unknown generator '" + std::string(tok) + "'");
  };
  Word w;
  if (text.empty() || text == "-") return w;
  const std::string_view seps = " .,*\t";
  if (text.find_first_of(seps) != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t start = text.find_first_not_of(seps, pos);
      if (start == std::string_view::npos) break;
      std::size_t stop = text.find_first_of(seps, start);
      if (stop == std::string_view::npos) stop = text.size();
      const auto tok = text.substr(start, stop - start);
      const auto g = matrix_.find(tok);
      if (!g) throw unknown(tok);
      w.push_back(*g);
      pos = stop;
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::optional<Generator> best;
    std::size_t best_len = 0;
    for (Generator g = 0; g < rank(); ++g) {
      const auto& name = matrix_.name(g);
      if (name.size() > best_len && text.substr(pos, name.size()) == name) {
        best = g;
        best_len = name.size();
      }
    }
    if (!best) throw unknown(text.substr(pos, 1));
    w.push_back(*best);
    pos += best_len;
  }
  return w;
}

std::string CoxeterSystem::format_word(const Word& w) const {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_names_ && i > 0) out += '.';
    out += matrix_.name(w[i]);
  }
  return out;
}

std::string CoxeterSystem::format_set(GeneratorSet t) const {
  std::string out = "{";
  bool first = true;
  for (Generator g : t.members()) {
    if (!first) out += ',';
    first = false;
    out += matrix_.name(g);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const CoxeterSystem* sys, Matrix mat, Matrix inv)
    : system_(sys), mat_(std::move(mat)), inv_(std::move(inv)) {
  // Left descents of g are the right descents of g^-1; strip the least one.
  Matrix work = inv_;
  const std::size_t n = sys->rank();
  for (;;) {
    std::size_t s = 0;
    while (s < n && !column_is_negative(work, s)) ++s;
    if (s == n) break;
    nf_.push_back(static_cast<Generator>(s));
    sys->right_multiply(work, static_cast<Generator>(s));
  }
}

Element Element::from_matrices(const CoxeterSystem& sys, Matrix mat, Matrix inv) {
  return Element(&sys, std::move(mat), std::move(inv));
}

void Element::check_same_system(const Element& rhs) const {
  if (system_ != rhs.system_) throw MismatchError("elements from different systems");
}

Element Element::operator*(const Element& rhs) const {
  check_same_system(rhs);
  return Element(system_, mat_ * rhs.mat_, rhs.inv_ * inv_);
}

Element Element::inverse() const { return Element(system_, inv_, mat_); }

Element Element::times(Generator s) const {
  Matrix m = mat_, i = inv_;
  system_->right_multiply(m, s);
  system_->left_multiply(i, s);
  return Element(system_, std::move(m), std::move(i));
}

Element Element::left_times(Generator s) const {
  Matrix m = mat_, i = inv_;
  system_->left_multiply(m, s);
  system_->right_multiply(i, s);
  return Element(system_, std::move(m), std::move(i));
}

bool Element::has_right_descent(Generator s) const {
  return column_is_negative(mat_, s);
}

bool Element::has_left_descent(Generator s) const {
  return column_is_negative(inv_, s);
}

GeneratorSet Element::right_descents() const {
  GeneratorSet out;
  for (Generator s = 0; s < system_->rank(); ++s) {
    if (has_right_descent(s)) out.insert(s);
  }
  return out;
}

GeneratorSet Element::left_descents() const {
  GeneratorSet out;
  for (Generator s = 0; s < system_->rank(); ++s) {
    if (has_left_descent(s)) out.insert(s);
  }
  return out;
}

bool Element::operator==(const Element& rhs) const {
  check_same_system(rhs);
  return mat_ == rhs.mat_;
}

std::size_t length_of_matrix(const CoxeterSystem& sys, Matrix m) {
  std::size_t len = 0;
  const std::size_t n = sys.rank();
  for (;;) {
    std::size_t s = 0;
    while (s < n && !column_is_negative(m, s)) ++s;
    if (s == n) return len;
    sys.right_multiply(m, static_cast<Generator>(s));
    ++len;
  }
}

// ---------------------------------------------------------------------------
// Operations

SystemPtr make_system(CoxeterMatrix matrix) {
  return std::make_shared<const CoxeterSystem>(std::move(matrix));
}

SystemPtr parse_system(std::string_view text) {
  using Kind = ParseError::Kind;
  std::vector<std::string> names;
  struct Entry {
    std::size_t line;
    Generator a, b;
    Order value;
  };
  std::vector<Entry> entries;
  bool have_generators = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "generators") {
      if (have_generators) {
        throw ParseError(Kind::kSyntax, lineno, "second 'generators' line");
      }
      have_generators = true;
      std::string name;
      while (ls >> name) {
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError(Kind::kDuplicateGenerator, lineno,
                           "duplicate generator name '" + name + "'");
        }
        names.push_back(name);
      }
      if (names.empty()) throw ParseError(Kind::kSyntax, lineno, "no generators listed");
      continue;
    }
    if (keyword != "m") {
      throw ParseError(Kind::kSyntax, lineno, "unexpected keyword '" + keyword + "'");
    }
    if (!have_generators) {
      throw ParseError(Kind::kSyntax, lineno, "'m' line before 'generators'");
    }
    std::string a, b, value, extra;
    if (!(ls >> a >> b >> value) || (ls >> extra)) {
      throw ParseError(Kind::kSyntax, lineno, "expected 'm <a> <b> <value>'");
    }
    auto lookup = [&](const std::string& nm) {
      const auto it = std::find(names.begin(), names.end(), nm);
      if (it == names.end()) {
        throw ParseError(Kind::kUnknownGenerator, lineno,
                         "unknown generator '" + nm + "'");
      }
      return static_cast<Generator>(it - names.begin());
    };
    const Generator ga = lookup(a), gb = lookup(b);
    if (ga == gb) {
      throw ParseError(Kind::kBadEntry, lineno, "diagonal entry m(" + a + "," + a + ")");
    }
    Order m;
    if (value != "inf") {
      if (value.empty() ||
          !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          value.size() > 9) {
        throw ParseError(Kind::kBadEntry, lineno, "bad value '" + value + "'");
      }
      const unsigned v = static_cast<unsigned>(std::stoul(value));
      if (v < 2) {
        throw ParseError(Kind::kBadEntry, lineno,
                         "m(" + a + "," + b + ") = " + value + " must be >= 2");
      }
      m = Order(v);
    }
    entries.push_back({lineno, ga, gb, m});
  }
  if (!have_generators) throw ParseError(Kind::kSyntax, 0, "missing 'generators' line");

  const std::size_t n = names.size();
  std::vector<Order> table(n * n, Order::infinity());
  std::vector<std::size_t> set_at(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = Order(1);
  for (const auto& e : entries) {
    const std::size_t ij = e.a * n + e.b, ji = e.b * n + e.a;
    if (set_at[ij] != 0 && table[ij] != e.value) {
      throw ParseError(Kind::kAsymmetric, e.line,
                       "conflicting value for m(" + names[e.a] + "," + names[e.b] +
                           "), first given on line " + std::to_string(set_at[ij]));
    }
    table[ij] = table[ji] = e.value;
    set_at[ij] = set_at[ji] = e.line;
  }
  return make_system(CoxeterMatrix(std::move(names), std::move(table)));
}

SystemPtr load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

bool is_two_dimensional(const CoxeterSystem& sys) {
  const auto& mx = sys.matrix();
  const std::size_t n = sys.rank();
  // 1/a + 1/b + 1/c <= 1 with 1/inf = 0, cleared of denominators.
  auto inv = [](Order m) -> Rational {
    return m.is_infinite() ? Rational(0) : Rational(1, m.value());
  };
  for (Generator s = 0; s < n; ++s) {
    for (Generator t = s + 1; t < n; ++t) {
      for (Generator r = t + 1; r < n; ++r) {
        if (inv(mx.m(s, t)) + inv(mx.m(s, r)) + inv(mx.m(t, r)) > 1) return false;
      }
    }
  }
  return true;
}

Element element_of(const CoxeterSystem& sys, const Word& word) {
  Matrix mat = Matrix::identity(sys.field(), sys.rank());
  Matrix inv = mat;
  for (Generator s : word) {
    if (s >= sys.rank()) throw PreconditionError("letter out of range");
    sys.right_multiply(mat, s);
    sys.left_multiply(inv, s);
  }
  return Element::from_matrices(sys, std::move(mat), std::move(inv));
}

Word shortlex_nf(const Element& g) { return g.normal_form(); }

namespace {

// Classifies one connected component of a Coxeter diagram (edges m >= 3)
// against the finite types A, B, D, E, F, H, I.
bool component_is_finite(const CoxeterMatrix& mx, const std::vector<Generator>& verts) {
  const std::size_t k = verts.size();
  if (k <= 2) return true;  // labels already known finite
  std::vector<std::vector<std::size_t>> adj(k);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (mx.m(verts[i], verts[j]).value() >= 3) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  if (edges != k - 1) return false;  // finite types are trees
  auto label = [&](std::size_t i, std::size_t j) { return mx.m(verts[i], verts[j]).value(); };

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < k; ++i) {
    if (adj[i].size() > 3) return false;
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.size() > 1) return false;

  if (branch.size() == 1) {
    // D_n, E6, E7, E8: simply laced with arms (1,1,k), (1,2,2), (1,2,3), (1,2,4).
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j : adj[i]) {
        if (label(i, j) != 3) return false;
      }
    }
    std::vector<std::size_t> arms;
    const std::size_t c = branch[0];
    for (std::size_t start : adj[c]) {
      std::size_t prev = c, cur = start, len = 1;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return true;                     // D
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return true;     // E6-8
    return false;
  }

  // A path: walk it from an end and read the labels.
  std::size_t end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<unsigned> labels;
  std::size_t prev = end, cur = adj[end][0];
  labels.push_back(label(prev, cur));
  while (adj[cur].size() == 2) {
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    labels.push_back(label(cur, next));
    prev = cur;
    cur = next;
  }
  std::size_t heavy = 0, pos = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > 3) {
      ++heavy;
      pos = i;
    }
  }
  if (heavy == 0) return true;  // A_n
  if (heavy > 1) return false;
  const unsigned m = labels[pos];
  const bool at_end = pos == 0 || pos + 1 == labels.size();
  if (m == 4) return at_end || (k == 4 && pos == 1);  // B_n, F4
  if (m == 5) return at_end && k <= 4;                 // H3, H4
  return false;
}

}  // namespace

bool is_finite_parabolic(const CoxeterSystem& sys, GeneratorSet t) {
  const auto& mx = sys.matrix();
  const auto members = t.members();
  for (Generator a : members) {
    if (a >= sys.rank()) throw PreconditionError("generator out of range");
    for (Generator b : members) {
      if (a != b && mx.m(a, b).is_infinite()) return false;
    }
  }
  std::vector<bool> seen(sys.rank(), false);
  for (Generator root : members) {
    if (seen[root]) continue;
    std::vector<Generator> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Generator b : members) {
        if (!seen[b] && comp[i] != b && mx.m(comp[i], b).value() >= 3) {
          seen[b] = true;
          comp.push_back(b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (!component_is_finite(mx, comp)) return false;
  }
  return true;
}

Element longest_element(const CoxeterSystem& sys, GeneratorSet t) {
  if (!is_finite_parabolic(sys, t)) {
    throw PreconditionError("longest_element: parabolic " + sys.format_set(t) +
                            " is infinite");
  }
  Element g = sys.identity();
  const auto members = t.members();
  for (;;) {
    const auto it = std::find_if(members.begin(), members.end(),
                                 [&](Generator s) { return !g.has_right_descent(s); });
    if (it == members.end()) return g;
    g = g.times(*it);
  }
}

Element residue_gate(const Element& g, GeneratorSet t) {
  Element h = g;
  const auto members = t.members();
  for (;;) {
    const auto it = std::find_if(members.begin(), members.end(),
                                 [&](Generator s) { return h.has_right_descent(s); });
    if (it == members.end()) return h;
    h = h.times(*it);
  }
}

std::vector<Element> ball(const CoxeterSystem& sys, std::size_t radius,
                          const BallOptions& options) {
  std::vector<Element> out;
  out.push_back(sys.identity());
  std::size_t level_begin = 0;
  for (std::size_t len = 0; len < radius; ++len) {
    const std::size_t level_end = out.size();
    std::unordered_set<Word> seen;
    std::vector<Element> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Generator s = 0; s < sys.rank(); ++s) {
        if (out[i].has_right_descent(s)) continue;
        Element h = out[i].times(s);
        if (!seen.insert(h.normal_form()).second) continue;
        if (out.size() + next.size() >= options.max_elements) {
          throw ResourceError("ball: more than " + std::to_string(options.max_elements) +
                              " elements");
        }
        next.push_back(std::move(h));
      }
    }
    if (next.empty()) break;  // finite group exhausted
    std::sort(next.begin(), next.end(), [](const Element& a, const Element& b) {
      return a.normal_form() < b.normal_form();
    });
    level_begin = level_end;
    for (auto& e : next) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace coxfsa
