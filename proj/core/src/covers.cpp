#include "twistrim/covers.hpp"

#include <stdexcept>

#include "twistrim/alexander.hpp"
#include "twistrim/matrix.hpp"

namespace twistrim {

std::string CoverOrder::to_string() const { return infinite ? "infinite" : order.get_str(); }

CoverOrder branched_cover_order(const LaurentPoly& delta, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const Integer res = resultant_with_cyclotomic(delta, d);
  if (res == 0) return CoverOrder::unbounded();
  return CoverOrder::finite(abs(res));
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

// Companion matrix of 1 + t + ... + t^{n}: ones below the diagonal and -1
// down the last column.
IntMatrix companion(std::size_t n) {
  IntMatrix c(n, n, Integer(0));
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -1;
  return c;
}

}  // namespace

AbelianInvariants branched_cover_structure(const GroupPresentation& p, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const AlexMatrix a = alexander_matrix(p);
  const auto mer = static_cast<std::size_t>(p.meridian - 1);
  const std::size_t block = static_cast<std::size_t>(d - 1);
  const std::size_t cols = a.cols() - 1;
  if (block == 0 || cols == 0) return {};

  // Rows are shifted to non-negative exponents; t^k maps to the invertible
  // C^k, so this does not change the cokernel.
  std::vector<std::int64_t> shift(a.rows(), 0);
  std::int64_t top = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c == mer || a(r, c).is_zero()) continue;
      shift[r] = any ? std::min(shift[r], a(r, c).min_exp()) : a(r, c).min_exp();
      any = true;
    }
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (c != mer && !a(r, c).is_zero()) top = std::max(top, a(r, c).max_exp() - shift[r]);
  }
  const IntMatrix comp = companion(block);
  std::vector<IntMatrix> powers{identity(block)};
  for (std::int64_t k = 1; k <= top; ++k) powers.push_back(multiply(powers.back(), comp));

  IntMatrix big(a.rows() * block, cols * block, Integer(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
      if (c == mer) continue;
      const LaurentPoly& e = a(r, c);
      for (std::int64_t k = e.min_exp(); !e.is_zero() && k <= e.max_exp(); ++k) {
        const Integer coeff = e.coeff(k);
        if (coeff == 0) continue;
        const IntMatrix& pw = powers[static_cast<std::size_t>(k - shift[r])];
        for (std::size_t i = 0; i < block; ++i)
          for (std::size_t j = 0; j < block; ++j)
            mpz_addmul(big(r * block + i, cc * block + j).get_mpz_t(), coeff.get_mpz_t(),
                       pw(i, j).get_mpz_t());
      }
      ++cc;
    }
  }
  return cokernel_invariants(big);
}

bool unbranched_cover_is_homology_circle(const LaurentPoly& delta, int d) {
  const CoverOrder o = branched_cover_order(delta, d);
  return !o.infinite && o.order == 1;
}

CoverHomology cover_homology(const GroupPresentation& p, int d, bool with_structure) {
  CoverHomology out;
  out.d = d;
  out.order = branched_cover_order(alexander_polynomial(p), d);
  if (with_structure) out.structure = branched_cover_structure(p, d);
  return out;
}

}  // namespace twistrim
