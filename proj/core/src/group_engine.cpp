#include "twistrim/group_engine.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace twistrim {

Integer AbelianInvariants::torsion_order() const {
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " ⊕ ";
    first = false;
  };
  for (int i = 0; i < free_rank; ++i) {
    sep();
    os << 'Z';
  }
  for (const auto& t : torsion) {
    sep();
    os << "Z/" << t;
  }
  return os.str();
}

namespace {

// Locates the nonzero entry of least absolute value in m[k.., k..].
bool find_min_pivot(const IntMatrix& m, std::size_t k, std::size_t& row, std::size_t& col) {
  bool found = false;
  Integer best;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Integer& v = m(i, j);
      if (v == 0) continue;
      if (!found || cmpabs(v, best) < 0) {
        best = v;
        row = i;
        col = j;
        found = true;
        if (abs(best) == 1) return true;
      }
    }
  return found;
}

}  // namespace

std::vector<Integer> smith_diagonal(IntMatrix m) {
  std::vector<Integer> diag;
  const std::size_t limit = std::min(m.rows(), m.cols());
  Integer q;
  for (std::size_t k = 0; k < limit; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(m, k, pr, pc)) break;
    m.swap_rows(k, pr);
    m.swap_cols(k, pc);
    for (;;) {
      bool dirty = false;
      // Clear column k below the pivot.
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (m(i, k) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(i, k).get_mpz_t(), m(k, k).get_mpz_t());
        for (std::size_t j = k; j < m.cols(); ++j)
          mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(k, j).get_mpz_t());
        if (m(i, k) != 0) dirty = true;
      }
      // Clear row k right of the pivot.
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (m(k, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(k, j).get_mpz_t(), m(k, k).get_mpz_t());
        for (std::size_t i = k; i < m.rows(); ++i)
          mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(i, k).get_mpz_t());
        if (m(k, j) != 0) dirty = true;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column k; pivot on it.
        std::size_t r = k, c = k;
        for (std::size_t i = k; i < m.rows(); ++i)
          if (m(i, k) != 0 && cmpabs(m(i, k), m(r, c)) < 0) r = i, c = k;
        for (std::size_t j = k; j < m.cols(); ++j)
          if (m(k, j) != 0 && cmpabs(m(k, j), m(r, c)) < 0) r = k, c = j;
        m.swap_rows(k, r);
        m.swap_cols(k, c);
        continue;
      }
      // The pivot must divide everything left; otherwise fold an offending
      // row into row k and go again.
      bool divides = true;
      for (std::size_t i = k + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < m.cols(); ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(k, k).get_mpz_t())) {
            for (std::size_t jj = k; jj < m.cols(); ++jj) m(k, jj) += m(i, jj);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m(k, k)));
  }
  return diag;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  const std::vector<Integer> diag = smith_diagonal(m);
  AbelianInvariants out;
  out.free_rank = static_cast<int>(m.cols() - diag.size());
  for (const auto& d : diag)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  const auto n = static_cast<std::size_t>(p.generator_count());
  IntMatrix m(p.relators.size(), n, Integer(0));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int x : p.relators[r]) m(r, static_cast<std::size_t>(std::abs(x) - 1)) += x > 0 ? 1 : -1;
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  p.validate();
  return cokernel_invariants(exponent_matrix(p));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

CyclicCheck check_cyclic_of_order(const GroupPresentation& p, int d, std::size_t budget) {
  if (d < 1) throw std::invalid_argument("order must be >= 1");
  CyclicCheck out;
  out.abelian = abelianization(p);
  AbelianInvariants expected;
  if (d > 1) expected.torsion.push_back(d);
  if (!(out.abelian == expected)) {
    out.verdict = Verdict::No;
    return out;
  }
  out.enumeration = todd_coxeter(p, budget);
  out.enumerated = true;
  if (!out.enumeration.complete())
    out.verdict = Verdict::Unknown;
  else
    out.verdict = out.enumeration.order == static_cast<std::size_t>(d) ? Verdict::Yes : Verdict::No;
  return out;
}

}  // namespace twistrim
