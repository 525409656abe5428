#include "coxfsa/walls.hpp"

#include <algorithm>

#include "coxfsa/errors.hpp"

namespace coxfsa {
namespace {

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Positive representative of +-v for a root v.
Vector positive(Vector v) { return root_sign(v) < 0 ? negated(std::move(v)) : v; }

void require_distinct(const Wall& a, const Wall& b, const char* what) {
  if (a == b) throw PreconditionError(std::string(what) + ": the two walls coincide");
}

}  // namespace

Wall Wall::from_root(const CoxeterSystem& sys, Vector root) {
  if (root.size() != sys.rank()) throw PreconditionError("root has the wrong dimension");
  bool pos = false, neg = false;
  for (const auto& x : root) {
    const int s = x.sign();
    pos |= s > 0;
    neg |= s < 0;
  }
  if (pos == neg) throw PreconditionError("vector is not uniformly signed");
  if (sys.form2(root, root) != sys.field().from_rational(2)) {
    throw PreconditionError("vector does not have unit norm");
  }
  return Wall(&sys, positive(std::move(root)));
}

Element Wall::reflection() const {
  const auto& sys = *system_;
  const std::size_t n = sys.rank();
  Matrix m = Matrix::identity(sys.field(), n);
  for (std::size_t j = 0; j < n; ++j) {
    // r(alpha_j) = alpha_j - 2B(alpha_j, beta) beta
    Scalar c;
    for (std::size_t i = 0; i < n; ++i) {
      if (!root_[i].is_zero()) c += sys.form2(static_cast<Generator>(j), static_cast<Generator>(i)) * root_[i];
    }
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!root_[i].is_zero()) m(i, j) -= c * root_[i];
    }
  }
  return Element::from_matrices(sys, m, m);
}

bool Wall::operator<(const Wall& o) const {
  return std::lexicographical_compare(root_.begin(), root_.end(), o.root_.begin(),
                                      o.root_.end(), [](const Scalar& a, const Scalar& b) {
                                        return (a <=> b) < 0;
                                      });
}

Wall wall_of_generator(const CoxeterSystem& sys, Generator s) {
  return Wall(&sys, sys.simple_root(s));
}

Wall conjugate_wall(const Element& g, const Wall& w) {
  return Wall(&g.system(), positive(g.apply(w.root())));
}

Side side(const Wall& w, const Element& g) {
  return root_sign(g.apply_inverse(w.root())) > 0 ? Side::kNear : Side::kFar;
}

std::vector<Wall> inversion_walls(const Element& g) {
  const auto& sys = g.system();
  std::vector<Wall> out;
  Matrix prefix = Matrix::identity(sys.field(), sys.rank());
  for (Generator s : g.normal_form()) {
    out.push_back(Wall::from_root(sys, prefix.column(s)));
    sys.right_multiply(prefix, s);
  }
  return out;
}

bool walls_cross(const Wall& a, const Wall& b) {
  require_distinct(a, b, "walls_cross");
  const auto& sys = a.system();
  const Scalar x = sys.form2(a.root(), b.root());
  const Scalar two = sys.field().from_rational(2);
  return (two - x).sign() > 0 && (two + x).sign() > 0;
}

DualEdge dual_edge(const Wall& w) {
  const auto& sys = w.system();
  const std::size_t n = sys.rank();
  Vector beta = w.root();
  Word h;
  for (;;) {
    // Simple roots are the only positive roots with a single nonzero entry.
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!beta[i].is_zero()) ++nonzero, last = i;
    }
    if (nonzero == 1) {
      return DualEdge{element_of(sys, h), static_cast<Generator>(last)};
    }
    Generator s = 0;
    while (s < n && sys.form2(beta, sys.simple_root(s)).sign() <= 0) ++s;
    if (s == n) throw InvariantError("dual_edge: root has no descent");
    sys.reflect(beta, s);
    h.push_back(s);
  }
}

Element adjacent_chamber(const Wall& w) { return dual_edge(w).chamber; }

bool separates_vertex_from_wall(const Wall& a, const Element& g, const Wall& b) {
  require_distinct(a, b, "separates_vertex_from_wall");
  if (walls_cross(a, b)) return false;
  return side(a, g) != side(a, adjacent_chamber(b));
}

std::vector<Wall> wall_set(const Element& g) {
  const auto inv = inversion_walls(g);
  std::vector<Wall> out;
  for (const auto& b : inv) {
    const bool shadowed = std::any_of(inv.begin(), inv.end(), [&](const Wall& a) {
      return !(a == b) && separates_vertex_from_wall(a, g, b);
    });
    if (!shadowed) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wall> residue_walls(const CoxeterSystem& sys, const Element& g,
                                GeneratorSet t) {
  const Element w0 = longest_element(sys, t);
  const Element gate = residue_gate(g, t);
  std::vector<Wall> out;
  for (const auto& w : inversion_walls(w0)) out.push_back(conjugate_wall(gate, w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxfsa
