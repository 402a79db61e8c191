#include "acq/oracle.hpp"

#include <string>

#include "acq/errors.hpp"
#include "acq/matrix.hpp"

namespace acq {

CongruenceSystem congruence_system(const Presentation& p, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be at least 1");
  CongruenceSystem s;
  s.modulus = n;
  s.E.assign(p.generators.size(), std::vector<long>(p.relators.size(), 0));
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const Syllable& syl : p.relators[j].syllables()) s.E[syl.generator][j] += syl.exponent;
  }
  return s;
}

std::uint64_t zn_count(const Presentation& p, std::uint64_t n, std::uint64_t max_points) {
  const CongruenceSystem s = congruence_system(p, n);
  const std::size_t m = p.relators.size();
  std::uint64_t points = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (points > max_points / n) {
      throw EnumerationTooLarge("enumeration of Z_" + std::to_string(n) + "^" +
                                std::to_string(m) + " exceeds " + std::to_string(max_points));
    }
    points *= n;
  }
  const auto nn = static_cast<long>(n);
  std::vector<long> b(m, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t j = m; j-- > 0;) {
      b[j] = static_cast<long>(rest % n);
      rest /= n;
    }
    bool ok = true;
    for (const auto& row : s.E) {
      long sum = 0;
      for (std::size_t j = 0; j < m; ++j) sum = (sum + (row[j] % nn) * b[j]) % nn;
      if (sum != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

Scalar brute_cycle_trace(const Category& c, SimpleLabel b, std::size_t k,
                         std::size_t max_carrier) {
  const Field f = c.field();
  const SimpleObject& s = c.simple(b);
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= s.dim;
    if (n > max_carrier) {
      throw EvaluationGuard("carrier of b^" + std::to_string(k) + " exceeds " +
                            std::to_string(max_carrier));
    }
  }
  const std::size_t grading = c.data().grading;
  if (grading > 1 && (k * s.grade) % grading != 0) return Scalar::zero(f);

  // Invariants: common kernel of ρ(g)^{⊗k} - I over all generators.
  Matrix stacked(f, s.action.size() * n, n);
  for (std::size_t g = 0; g < s.action.size(); ++g) {
    Matrix power = Matrix::identity(f, 1);
    for (std::size_t i = 0; i < k; ++i) power = kron(power, s.action[g]);
    power -= Matrix::identity(f, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t col = 0; col < n; ++col) stacked(g * n + r, col) = power(r, col);
    }
  }
  std::vector<Vector> basis;
  if (s.action.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, Scalar::zero(f));
      e[i] = Scalar::one(f);
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(stacked);
  }
  const std::size_t r = basis.size();
  if (r == 0) return Scalar::zero(f);

  Matrix B(f, n, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < n; ++i) B(i, j) = basis[j][i];
  }
  // Cyclic shift of tensor positions: position i of the word moves to i + 1.
  std::vector<std::size_t> digits(k);
  Matrix CB(f, n, r);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = rest % s.dim;
      rest /= s.dim;
    }
    std::size_t target = 0;
    for (std::size_t i = 0; i < k; ++i) target = target * s.dim + digits[(i + k - 1) % k];
    for (std::size_t j = 0; j < r; ++j) CB(target, j) = B(idx, j);
  }
  // Solve B X = CB using r independent rows of B.
  const RowEchelon e = rref(B.transpose());
  Matrix Bs(f, r, r);
  Matrix CBs(f, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t row = e.pivots[i];
    for (std::size_t j = 0; j < r; ++j) {
      Bs(i, j) = B(row, j);
      CBs(i, j) = CB(row, j);
    }
  }
  return (mat_inverse(Bs) * CBs).trace();
}

std::size_t selfdual_count(const Category& c) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.data().simples.size(); ++i) {
    if (c.data().simples[i].dual.index == i) ++count;
  }
  return count;
}

}  // namespace acq
