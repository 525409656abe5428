#pragma once

// Walls of the Cayley graph, represented by positive roots.
//
// The wall of a reflection r = g s g^-1 is stored as the positive root
// +-g(alpha_s). A chamber h lies on the identity side ("near") of the wall
// with root beta iff h^-1(beta) is positive.

#include <cstddef>
#include <functional>
#include <vector>

#include "coxfsa/coxeter.hpp"

namespace coxfsa {

enum class Side { kNear, kFar };

class Wall {
 public:
  // Validates that `root` is uniformly signed with 2B(root, root) = 2 and
  // stores the positive representative. Throws PreconditionError otherwise.
  static Wall from_root(const CoxeterSystem& sys, Vector root);

  const CoxeterSystem& system() const { return *system_; }
  const Vector& root() const { return root_; }
  // The reflection in this wall, as a group element.
  Element reflection() const;

  bool operator==(const Wall& o) const { return root_ == o.root_; }
  // Arbitrary but fixed total order on roots, for canonical sorting.
  bool operator<(const Wall& o) const;

 private:
  Wall(const CoxeterSystem* sys, Vector root) : system_(sys), root_(std::move(root)) {}
  friend Wall wall_of_generator(const CoxeterSystem& sys, Generator s);
  friend Wall conjugate_wall(const Element& g, const Wall& w);

  const CoxeterSystem* system_;
  Vector root_;
};

Wall wall_of_generator(const CoxeterSystem& sys, Generator s);
// The wall g * w.
Wall conjugate_wall(const Element& g, const Wall& w);

Side side(const Wall& w, const Element& g);

// The l(g) walls crossed by the normal form of g, in order.
std::vector<Wall> inversion_walls(const Element& g);

// |B(a, b)| < 1. Tangent walls (|B| = 1) do not cross.
bool walls_cross(const Wall& a, const Wall& b);

// A dual edge (chamber, chamber * generator) of the wall.
struct DualEdge {
  Element chamber;
  Generator generator;
};

// Found by reducing the root to a simple root, always lowering depth through
// the least generator available.
DualEdge dual_edge(const Wall& w);
Element adjacent_chamber(const Wall& w);

// Does wall a separate chamber g from wall b?
bool separates_vertex_from_wall(const Wall& a, const Element& g, const Wall& b);

// W(g): inversion walls of g with no other wall between them and g. Sorted.
std::vector<Wall> wall_set(const Element& g);

// Walls meeting the residue g<T>, sorted. Throws PreconditionError when <T>
// is infinite.
std::vector<Wall> residue_walls(const CoxeterSystem& sys, const Element& g,
                                GeneratorSet t);

}  // namespace coxfsa

template <>
struct std::hash<coxfsa::Wall> {
  std::size_t operator()(const coxfsa::Wall& w) const noexcept {
    std::size_t h = 0;
    for (const auto& c : w.root()) h = h * 31 + std::hash<coxfsa::Scalar>()(c);
    return h;
  }
};
