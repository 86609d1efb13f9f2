#include "twistrim/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace twistrim {

std::size_t GroupPresentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

void GroupPresentation::validate() const {
  const int n = generator_count();
  if (meridian < 1 || meridian > n)
    throw std::invalid_argument("meridian g" + std::to_string(meridian) + " is not declared");
  for (const auto& r : relators)
    for (int letter : r)
      if (letter == 0 || std::abs(letter) > n)
        throw std::invalid_argument("relator letter " + std::to_string(letter) +
                                    " references an undeclared generator");
}

GroupPresentation free_presentation(int generators, int meridian) {
  GroupPresentation p;
  for (int i = 1; i <= generators; ++i) p.generators.push_back("g" + std::to_string(i));
  p.meridian = meridian;
  return p;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word power(const Word& w, long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

long exponent_sum(const Word& w, int g) {
  long s = 0;
  for (int x : w) {
    if (x == g) ++s;
    if (x == -g) --s;
  }
  return s;
}

namespace {

Word least_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

Word canonical_cyclic_form(const Word& w) {
  const Word c = cyclic_reduce(w);
  return std::min(least_rotation(c), least_rotation(inverse(c)));
}

}  // namespace twistrim
