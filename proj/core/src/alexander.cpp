#include "twistrim/alexander.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

#include "twistrim/group_engine.hpp"
#include "twistrim/wirtinger.hpp"

namespace twistrim {

LaurentPoly fox_derivative(const Word& w, int generator) {
  std::map<std::int64_t, long> terms;
  std::int64_t prefix = 0;  // exponent of ab(prefix) = t^prefix
  for (int x : w) {
    if (x == generator) terms[prefix] += 1;
    if (x == -generator) terms[prefix - 1] -= 1;
    prefix += x > 0 ? 1 : -1;
  }
  LaurentPoly out;
  for (const auto& [e, c] : terms)
    if (c != 0) out += LaurentPoly::monomial(Integer(c), e);
  return out;
}

AlexMatrix alexander_matrix(const GroupPresentation& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.generator_count());
  AlexMatrix m(p.relators.size(), n);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t g = 0; g < n; ++g)
      m(r, g) = fox_derivative(p.relators[r], static_cast<int>(g + 1));
  return m;
}

LaurentPoly alexander_minor(const AlexMatrix& m, std::size_t row, std::size_t col) {
  if (m.rows() != m.cols()) throw std::invalid_argument("alexander_minor needs a square matrix");
  return bareiss_determinant(m.without(row, col)).normalized();
}

namespace {

using Row = std::vector<LaurentPoly>;

// Multiplies the row by a unit of Q[t, t^-1] so that its entries are
// polynomials with coprime integer coefficients and no common factor t.
void tidy_row(Row& row) {
  bool any = false;
  std::int64_t lo = 0;
  Integer g = 0;
  for (const auto& e : row) {
    if (e.is_zero()) continue;
    lo = any ? std::min(lo, e.min_exp()) : e.min_exp();
    any = true;
    const Integer c = e.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (!any) return;
  for (auto& e : row) {
    if (e.is_zero()) continue;
    std::vector<Integer> cs = e.coeffs();
    for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    e = LaurentPoly(e.min_exp() - lo, std::move(cs));
  }
}

// Row-reduces over Q[t] using only integer scalings and polynomial
// multiples of other rows (pseudo-division), so the ideal of maximal minors
// is preserved up to rational units. Returns the primitive normalized gcd
// of the maximal minors, or zero if the rank is deficient.
LaurentPoly echelon_maximal_minor_gcd(std::vector<Row> rows, std::size_t cols) {
  for (auto& r : rows) tidy_row(r);
  LaurentPoly product = LaurentPoly::one();
  std::size_t top = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        const LaurentPoly& e = rows[i][j];
        if (e.is_zero()) continue;
        if (best == rows.size() || e.max_exp() < rows[best][j].max_exp() ||
            (e.max_exp() == rows[best][j].max_exp() &&
             mpz_cmpabs(e.leading().get_mpz_t(), rows[best][j].leading().get_mpz_t()) < 0))
          best = i;
      }
      if (best == rows.size()) return {};
      std::swap(rows[top], rows[best]);
      const Row& piv = rows[top];
      const LaurentPoly& p = piv[j];
      bool pending = false;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        Row& row = rows[i];
        while (!row[j].is_zero() && row[j].max_exp() >= p.max_exp()) {
          const LaurentPoly factor =
              LaurentPoly::monomial(row[j].leading(), row[j].max_exp() - p.max_exp());
          const Integer scale = p.leading();
          for (std::size_t k = j; k < cols; ++k) {
            row[k] *= scale;
            if (!piv[k].is_zero()) row[k] -= factor * piv[k];
          }
          tidy_row(row);
        }
        if (!row[j].is_zero()) pending = true;
      }
      if (!pending) break;
    }
    product *= rows[top][j];
    ++top;
  }
  return primitive_part(product).normalized();
}

bool wirtinger_shaped(const GroupPresentation& p) {
  for (const auto& r : p.relators)
    if (!is_wirtinger_relator(r)) return false;
  return true;
}

}  // namespace

LaurentPoly alexander_polynomial(const GroupPresentation& p) {
  p.validate();
  for (const auto& r : p.relators) {
    long total = 0;
    for (int x : r) total += x > 0 ? 1 : -1;
    if (total != 0)
      throw NotAKnotGroup("relator with nonzero exponent sum: generators are not all meridians");
  }
  const AbelianInvariants ab = abelianization(p);
  if (!(ab.free_rank == 1 && ab.torsion.empty()))
    throw NotAKnotGroup("abelianization is " + ab.to_string() + ", not Z");

  const AlexMatrix full = alexander_matrix(p);
  const std::size_t mer = static_cast<std::size_t>(p.meridian - 1);
  const std::size_t cols = full.cols() - 1;
  if (cols == 0) return LaurentPoly::one();

  std::vector<Row> rows;
  std::vector<std::size_t> source;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    Row row;
    bool nonzero = false;
    for (std::size_t c = 0; c < full.cols(); ++c) {
      if (c == mer) continue;
      row.push_back(full(r, c));
      nonzero = nonzero || !full(r, c).is_zero();
    }
    if (nonzero) {
      rows.push_back(std::move(row));
      source.push_back(r);
    }
  }

  const bool square = rows.size() == cols;
  const bool wirtinger = rows.size() == cols + 1 && wirtinger_shaped(p);
  if (square || wirtinger) {
    AlexMatrix m(cols, cols);
    for (std::size_t r = 0; r < cols; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    const LaurentPoly det = bareiss_determinant(std::move(m)).normalized();
    const Integer at_one = det.evaluate(1);
    if (square || abs(at_one) == 1) return det;
  }
  return echelon_maximal_minor_gcd(std::move(rows), cols);
}

LaurentPoly torus_alexander(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus_alexander needs coprime positive p, q");
  const LaurentPoly one = LaurentPoly::one();
  auto one_minus_t_to = [&one](std::int64_t k) { return one - LaurentPoly::monomial(1, k); };
  const std::int64_t pq = static_cast<std::int64_t>(p) * q;
  const LaurentPoly num = one_minus_t_to(1) * one_minus_t_to(pq);
  const LaurentPoly den = one_minus_t_to(p) * one_minus_t_to(q);
  return divexact(num, den).normalized();
}

Integer resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.min_exp() < 0 || g.min_exp() < 0)
    throw std::invalid_argument("resultant needs ordinary polynomials");
  const auto m = static_cast<std::size_t>(f.max_exp());
  const auto n = static_cast<std::size_t>(g.max_exp());
  if (m + n == 0) return 1;
  IntMatrix s(m + n, m + n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f.coeff(static_cast<std::int64_t>(m - k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k)
      s(n + i, i + k) = g.coeff(static_cast<std::int64_t>(n - k));
  return bareiss_determinant(std::move(s));
}

Integer resultant_with_cyclotomic(const LaurentPoly& delta, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (delta.is_zero()) throw std::invalid_argument("delta must be nonzero");
  const LaurentPoly f = LaurentPoly::monomial(1, d) - LaurentPoly::one();
  return resultant(f, delta.normalized());
}

}  // namespace twistrim
