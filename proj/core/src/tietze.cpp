#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>

#include "twistrim/group_engine.hpp"

namespace twistrim {

namespace {

std::size_t total(const std::vector<Word>& rels) {
  std::size_t n = 0;
  for (const auto& r : rels) n += r.size();
  return n;
}

// Cyclically reduces, drops trivial relators and duplicates up to rotation
// and inversion. Keeps first occurrences in order.
std::vector<Word> tidy(const std::vector<Word>& rels) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : rels) {
    Word w = cyclic_reduce(r);
    if (w.empty()) continue;
    if (!seen.insert(canonical_cyclic_form(w)).second) continue;
    out.push_back(std::move(w));
  }
  return out;
}

Word substitute(const Word& w, int g, const Word& image) {
  const Word image_inv = inverse(image);
  Word out;
  for (int x : w) {
    if (x == g)
      out.insert(out.end(), image.begin(), image.end());
    else if (x == -g)
      out.insert(out.end(), image_inv.begin(), image_inv.end());
    else
      out.push_back(x);
  }
  return out;
}

struct Elimination {
  int generator;
  std::vector<Word> relators;
};

// Tries to remove one non-meridian generator that occurs exactly once in a
// relator, without growing the total relator length.
std::optional<Elimination> find_elimination(const std::vector<Word>& rels, int meridian) {
  std::vector<std::size_t> order(rels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&rels](std::size_t a, std::size_t b) {
    return rels[a].size() < rels[b].size();
  });
  const std::size_t current = total(rels);
  for (std::size_t idx : order) {
    const Word& r = rels[idx];
    std::vector<int> gens;
    for (int x : r) gens.push_back(std::abs(x));
    std::sort(gens.begin(), gens.end());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int g = gens[k];
      const bool once = (k == 0 || gens[k - 1] != g) && (k + 1 == gens.size() || gens[k + 1] != g);
      if (!once || g == meridian) continue;
      // Rotate so the g-letter comes last: r ~ s x, hence x = s^-1.
      const auto pos = static_cast<std::size_t>(
          std::find_if(r.begin(), r.end(), [g](int x) { return std::abs(x) == g; }) - r.begin());
      Word rotated(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
      rotated.insert(rotated.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
      const Word image = r[pos] > 0 ? free_reduce(inverse(rotated)) : free_reduce(rotated);
      std::vector<Word> next;
      next.reserve(rels.size() - 1);
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != idx) next.push_back(substitute(rels[j], g, image));
      next = tidy(next);
      if (total(next) <= current) return Elimination{g, std::move(next)};
    }
  }
  return std::nullopt;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, int budget) {
  p.validate();
  std::vector<Word> rels = tidy(p.relators);
  std::vector<bool> alive(static_cast<std::size_t>(p.generator_count()) + 1, true);
  for (int pass = 0; pass < budget; ++pass) {
    auto step = find_elimination(rels, p.meridian);
    if (!step) break;
    alive[static_cast<std::size_t>(step->generator)] = false;
    rels = std::move(step->relators);
  }

  // Renumber surviving generators, keeping their names.
  std::vector<int> renum(alive.size(), 0);
  GroupPresentation out;
  for (int g = 1; g <= p.generator_count(); ++g) {
    if (!alive[static_cast<std::size_t>(g)]) continue;
    out.generators.push_back(p.generators[static_cast<std::size_t>(g - 1)]);
    renum[static_cast<std::size_t>(g)] = out.generator_count();
  }
  out.meridian = renum[static_cast<std::size_t>(p.meridian)];
  for (auto& r : rels) {
    for (int& x : r) x = x > 0 ? renum[static_cast<std::size_t>(x)] : -renum[static_cast<std::size_t>(-x)];
    out.relators.push_back(std::move(r));
  }
  return out;
}

}  // namespace twistrim
