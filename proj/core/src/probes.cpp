#include "acq/probes.hpp"

#include <string>

#include "acq/errors.hpp"
#include "acq/eval_state.hpp"
#include "acq/hom.hpp"

namespace acq {

DimensionTable dimension_report(const Category& c) {
  const std::size_t n = c.size();
  DimensionTable t(n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
  for (SimpleLabel a : c.labels()) {
    for (SimpleLabel b : c.labels()) {
      for (SimpleLabel cc : c.labels()) t[a.index][b.index][cc.index] = hom_dimension(c, a, {b, cc});
    }
  }
  return t;
}

Conjecture1bReport conjecture1b_probe(const Category& c) {
  Conjecture1bReport report;
  report.simple_count = c.size();
  for (SimpleLabel b : c.labels()) {
    std::size_t sum = 0;
    for (SimpleLabel cc : c.labels()) sum += hom_dimension(c, b, {cc, c.dual(cc)});
    report.rows.push_back({b, Scalar(c.field(), static_cast<long>(sum)) * c.rank_inverse(b)});
  }
  return report;
}

std::vector<CirculatorOrder> circulator_order_probe(const Category& c, std::size_t bound) {
  std::vector<CirculatorOrder> out;
  for (SimpleLabel a : c.labels()) {
    for (SimpleLabel b : c.labels()) {
      const CirculatorMatrix cr = circulator(c, a, b);
      CirculatorOrder row{a, b, cr.matrix.rows(), std::nullopt};
      Matrix power = cr.matrix;
      for (std::size_t k = 1; k <= bound; ++k) {
        if (power.is_identity()) {
          row.order = k;
          break;
        }
        power = power * cr.matrix;
      }
      out.push_back(row);
    }
  }
  return out;
}

CorollaryReport corollary_probe(const Presentation& p, const Category& c, std::size_t k) {
  if (k >= p.generators.size()) throw IndexOutOfRange("generator index out of range");
  std::string name = "y";
  for (std::size_t suffix = 1;; ++suffix) {
    bool taken = false;
    for (const auto& g : p.generators) taken = taken || g == name;
    if (!taken) break;
    name = "y" + std::to_string(suffix);
  }
  CorollaryReport r;
  r.with_commutator = p;
  r.with_commutator.generators.push_back(name);
  const std::size_t y = p.generators.size();
  r.with_commutator.relators.push_back(Word{{k, 1}, {y, 1}, {k, -1}, {y, -1}});
  r.with_generator = p;
  r.with_generator.relators.push_back(Word{{k, 1}});
  r.lhs = q_invariant_state(r.with_commutator, c);
  r.rhs = Scalar(c.field(), static_cast<long>(c.size())) * q_invariant_state(r.with_generator, c);
  r.equal = r.lhs == r.rhs;
  return r;
}

std::vector<Conjecture2Row> conjecture2_probe(const Category& c, SimpleLabel b, std::size_t k,
                                              std::size_t max_carrier) {
  const ObjectWord word = ObjectWord::repeat(b, k + 1);
  const std::size_t n = c.carrier(word);
  if (n > max_carrier) {
    throw EvaluationGuard("carrier of b^" + std::to_string(k + 1) + " exceeds " +
                          std::to_string(max_carrier));
  }
  std::vector<std::size_t> perm(k + 1);
  for (std::size_t i = 0; i <= k; ++i) perm[i] = (i + 1) % (k + 1);
  const LinearMap sigma = permutation_map(c, word, perm);
  std::vector<Conjecture2Row> rows;
  for (SimpleLabel w : c.labels()) {
    LinearMap t = partial_trace(c, sigma, 1, k, w);
    const bool zero = t.matrix.is_zero();
    const bool identity = t.matrix.is_identity();
    rows.push_back({w, std::move(t), zero, identity});
  }
  return rows;
}

}  // namespace acq
