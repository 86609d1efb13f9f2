#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace twistrim {

/// A word in the free group: each letter is a signed 1-based generator
/// number, so -2 stands for g2^-1.
using Word = std::vector<int>;

/// Finitely presented group with a distinguished meridian generator.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// 1-based generator number of the meridian.
  int meridian = 1;

  int generator_count() const { return static_cast<int>(generators.size()); }
  std::size_t total_length() const;

  /// Throws std::invalid_argument if a relator mentions an undeclared
  /// generator or the meridian is out of range.
  void validate() const;

  bool operator==(const GroupPresentation&) const = default;
};

/// Presentation with generators g1..gn and no relators.
GroupPresentation free_presentation(int generators, int meridian = 1);

Word inverse(const Word& w);
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation across the ends.
Word cyclic_reduce(const Word& w);
/// w^k for any integer k.
Word power(const Word& w, long k);
Word concat(std::initializer_list<Word> parts);
/// Signed count of occurrences of generator g.
long exponent_sum(const Word& w, int g);
/// Least rotation of w and of its inverse, for duplicate detection.
Word canonical_cyclic_form(const Word& w);

}  // namespace twistrim
