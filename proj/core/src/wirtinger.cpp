#include "twistrim/wirtinger.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twistrim {

namespace {

class DisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // the smaller id stays representative
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

struct CrossingArcs {
  std::size_t over;
  std::size_t in;
  std::size_t out;
  int sign;
};

Word crossing_relator(int over, int in, int out, int sign) {
  return sign > 0 ? Word{over, in, -over, -out} : Word{-over, in, over, -out};
}

// Numbers arc classes 1..n in order of their least element.
GroupPresentation assemble(DisjointSets& arcs, const std::vector<CrossingArcs>& crossings,
                           std::size_t meridian_arc) {
  std::map<std::size_t, int> number;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const std::size_t root = arcs.find(a);
    if (!number.count(root)) {
      const int next = static_cast<int>(number.size()) + 1;
      number.emplace(root, next);
    }
  }
  GroupPresentation p = free_presentation(static_cast<int>(number.size()));
  p.meridian = number.at(arcs.find(meridian_arc));
  for (const auto& c : crossings)
    p.relators.push_back(crossing_relator(number.at(arcs.find(c.over)),
                                          number.at(arcs.find(c.in)),
                                          number.at(arcs.find(c.out)), c.sign));
  return p;
}

}  // namespace

GroupPresentation wirtinger_from_braid(const Braid& b) {
  if (b.strands < 1) throw std::invalid_argument("braid needs at least one strand");
  if (closure_components(b) != 1)
    throw std::invalid_argument("braid closure is not a knot");
  const auto n = static_cast<std::size_t>(b.strands);
  DisjointSets arcs;
  std::vector<std::size_t> at(n);
  for (auto& a : at) a = arcs.add();
  const std::vector<std::size_t> top = at;

  std::vector<CrossingArcs> crossings;
  crossings.reserve(b.word.size());
  for (int k : b.word) {
    const auto i = static_cast<std::size_t>(std::abs(k) - 1);
    const std::size_t fresh = arcs.add();
    if (k > 0) {
      // Over-strand moves i+1 -> i; the under-strand leaves i for i+1.
      crossings.push_back({at[i + 1], at[i], fresh, +1});
      at[i] = at[i + 1];
      at[i + 1] = fresh;
    } else {
      // Over-strand moves i -> i+1; the under-strand leaves i+1 for i.
      crossings.push_back({at[i], at[i + 1], fresh, -1});
      at[i + 1] = at[i];
      at[i] = fresh;
    }
  }
  for (std::size_t pos = 0; pos < n; ++pos) arcs.unite(at[pos], top[pos]);
  return assemble(arcs, crossings, top[0]);
}

GroupPresentation wirtinger_from_pd(const PDCode& code) {
  if (code.crossings.empty()) return free_presentation(1);
  const PDOrientation orient = analyze_pd(code);

  std::map<int, std::size_t> edge;
  DisjointSets arcs;
  for (const auto& x : code.crossings)
    for (int label : x)
      if (!edge.count(label)) edge.emplace(label, 0);
  // Edges in ascending label order get ascending ids.
  for (auto& [label, id] : edge) id = arcs.add();

  std::vector<CrossingArcs> crossings;
  for (std::size_t x = 0; x < code.crossings.size(); ++x) {
    const auto& [a, b, c, d] = code.crossings[x];
    arcs.unite(edge.at(b), edge.at(d));
    crossings.push_back({edge.at(b), edge.at(a), edge.at(c), orient.sign[x]});
  }
  return assemble(arcs, crossings, edge.begin()->second);
}

GroupPresentation presentation_connected_sum(const GroupPresentation& a,
                                             const GroupPresentation& b) {
  a.validate();
  b.validate();
  const int shift = a.generator_count();
  GroupPresentation out = free_presentation(shift + b.generator_count(), a.meridian);
  out.relators = a.relators;
  for (const auto& r : b.relators) {
    Word moved = r;
    for (int& x : moved) x += x > 0 ? shift : -shift;
    out.relators.push_back(std::move(moved));
  }
  out.relators.push_back({a.meridian, -(b.meridian + shift)});
  return out;
}

GroupPresentation presentation_mirror(const GroupPresentation& p) {
  GroupPresentation out = p;
  for (auto& r : out.relators) {
    if (is_wirtinger_relator(r)) {
      // Inverting every letter of x y x^-1 z^-1 gives a relator equivalent
      // to x^-1 y x z^-1.
      r = {-r[0], r[1], r[0], r[3]};
    } else {
      for (int& x : r) x = -x;
    }
  }
  return out;
}

bool is_wirtinger_relator(const Word& w) {
  return w.size() == 4 && w[1] > 0 && w[3] < 0 && w[2] == -w[0];
}

GroupPresentation knot_presentation(const KnotExpr& k) {
  return std::visit(
      [](const auto& n) -> GroupPresentation {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Unknot>) {
          return free_presentation(1);
        } else if constexpr (std::is_same_v<N, TorusKnot>) {
          return wirtinger_from_braid(torus_braid(std::min(n.p, n.q), std::max(n.p, n.q)));
        } else if constexpr (std::is_same_v<N, Mirror>) {
          const KnotExpr& child = *n.child;
          if (child.is<TorusKnot>()) {
            const auto& t = child.as<TorusKnot>();
            return wirtinger_from_braid(
                mirror_braid(torus_braid(std::min(t.p, t.q), std::max(t.p, t.q))));
          }
          if (child.is<Braid>()) return wirtinger_from_braid(mirror_braid(child.as<Braid>()));
          if (child.is<PDCode>()) return wirtinger_from_pd(mirror_pd(child.as<PDCode>()));
          return presentation_mirror(knot_presentation(child));
        } else if constexpr (std::is_same_v<N, ConnectedSum>) {
          return presentation_connected_sum(knot_presentation(*n.left),
                                            knot_presentation(*n.right));
        } else if constexpr (std::is_same_v<N, Braid>) {
          return wirtinger_from_braid(n);
        } else {
          return wirtinger_from_pd(n);
        }
      },
      k.node());
}

}  // namespace twistrim
