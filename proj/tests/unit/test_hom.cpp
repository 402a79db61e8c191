#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "acq/category.hpp"
#include "acq/errors.hpp"
#include "acq/hom.hpp"
#include "acq/linear_map.hpp"
#include "acq/tensor_index.hpp"

namespace acq {
namespace {

const std::vector<std::string> kSmall = {"zn:3", "zn:4", "rep-z2-q", "rep-z3-q", "rep-s3-q",
                                         "rep-s3-f5"};

ObjectWord random_word(std::mt19937_64& rng, const Category& c, std::size_t max_len,
                       std::size_t max_carrier) {
  while (true) {
    std::vector<SimpleLabel> letters(1 + rng() % max_len);
    for (auto& l : letters) l = SimpleLabel{rng() % c.size()};
    ObjectWord w(letters);
    if (c.carrier(w) <= max_carrier) return w;
  }
}

LinearMap random_endomorphism(std::mt19937_64& rng, const Category& c, const ObjectWord& w) {
  const std::size_t n = c.carrier(w);
  Matrix m(c.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(c.field(), static_cast<long>(rng() % 7) - 3);
  }
  return {w, w, m};
}

TEST(HomBasis, UnitAppearsOnceInEveryPair) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Category c = load_category("zn:" + std::to_string(n));
    for (SimpleLabel b : c.labels()) {
      EXPECT_EQ(hom_basis(c, kUnit, ObjectWord{b, c.dual(b)})->size(), 1u);
    }
  }
}

TEST(HomBasis, SchurVanishing) {
  for (const auto& name : kSmall) {
    const Category c = load_category(name);
    for (SimpleLabel a : c.labels()) {
      for (SimpleLabel b : c.labels()) {
        EXPECT_EQ(hom_dimension(c, a, ObjectWord{b}), a == b ? 1u : 0u) << name;
      }
    }
  }
}

TEST(HomBasis, SignInStdStd) {
  const Category c = load_category("rep-s3-q");
  const SimpleLabel s = c.label("std");
  EXPECT_EQ(hom_basis(c, c.label("sign"), ObjectWord{s, s})->size(), 1u);
  EXPECT_EQ(hom_basis(c, kUnit, ObjectWord{s, s})->size(), 1u);
  EXPECT_EQ(hom_basis(c, s, ObjectWord{s, s})->size(), 1u);
  EXPECT_EQ(hom_basis(c, s, ObjectWord{s, s, s})->size(), 3u);
}

TEST(HomBasis, EmptyWord) {
  const Category c = load_category("rep-s3-q");
  EXPECT_EQ(hom_basis(c, kUnit, ObjectWord{})->size(), 1u);
  EXPECT_EQ(hom_basis(c, c.label("std"), ObjectWord{})->size(), 0u);
}

TEST(HomBasis, SingularGramOverF2) {
  std::ifstream in(std::string(ACQ_TEST_DATA) + "/z2-regular-f2.cat");
  std::stringstream text;
  text << in.rdbuf();
  const Category c(parse_category(text.str()));
  EXPECT_THROW(hom_basis(c, kUnit, ObjectWord{SimpleLabel{1}}, HomMethod::direct),
               SemisimplicityFailure);
}

// Duality and completeness, for both construction methods.
TEST(HomBasisProperty, DualityAndCompleteness) {
  std::mt19937_64 rng(31);
  for (const auto& name : kSmall) {
    const Category c = load_category(name);
    for (int t = 0; t < 12; ++t) {
      const ObjectWord w = random_word(rng, c, 4, 64);
      for (HomMethod method : {HomMethod::direct, HomMethod::fusion_tree, HomMethod::automatic}) {
        Matrix sum(c.field(), c.carrier(w), c.carrier(w));
        for (SimpleLabel a : c.labels()) {
          const auto basis = hom_basis(c, a, w, method);
          for (std::size_t i = 0; i < basis->size(); ++i) {
            for (std::size_t j = 0; j < basis->size(); ++j) {
              const Matrix p = basis->duals[i] * basis->maps[j];
              EXPECT_EQ(p, i == j ? Matrix::identity(c.field(), c.dim(a))
                                  : Matrix(c.field(), c.dim(a), c.dim(a)));
            }
            // ε_i is an intertwiner.
            for (std::size_t g = 0; g < c.data().generator_count; ++g) {
              EXPECT_EQ(c.action(w, g) * basis->maps[i], basis->maps[i] * c.action(ObjectWord{a}, g));
            }
            sum += basis->maps[i] * basis->duals[i];
          }
          EXPECT_EQ(hom_basis(c, a, w, HomMethod::direct)->size(),
                    hom_basis(c, a, w, HomMethod::fusion_tree)->size());
          EXPECT_EQ(hom_dimension(c, a, w), hom_basis(c, a, w, HomMethod::direct)->size());
        }
        EXPECT_TRUE(sum.is_identity()) << name;
      }
    }
  }
}

TEST(Rank, Examples) {
  const Category c = load_category("rep-s3-q");
  EXPECT_TRUE(rank(c, identity_map(c, ObjectWord{})).is_one());
  EXPECT_EQ(rank(c, identity_map(c, ObjectWord{c.label("std")})), Scalar(c.field(), 2));
  const ObjectWord w{c.label("std"), c.label("sign"), c.label("std")};
  EXPECT_EQ(rank(c, identity_map(c, w)), Scalar(c.field(), 4));
}

TEST(Rank, RankOfDualMatches) {
  for (const auto& name : kSmall) {
    const Category c = load_category(name);
    for (SimpleLabel b : c.labels()) {
      EXPECT_EQ(rank(c, identity_map(c, ObjectWord{b})), c.rank(b));
      EXPECT_EQ(c.rank(b), c.rank(c.dual(b)));
    }
  }
}

TEST(PartialTrace, IdentityTracedToSimple) {
  const Category c = load_category("rep-s3-q");
  for (SimpleLabel b : c.labels()) {
    for (SimpleLabel target : c.labels()) {
      const LinearMap t = partial_trace(c, identity_map(c, ObjectWord{b}), 0, 1, target);
      if (b == target) {
        EXPECT_TRUE(t.matrix.is_identity());
      } else {
        EXPECT_TRUE(t.matrix.is_zero());
      }
    }
  }
}

TEST(PartialTrace, RejectsNonEndomorphisms) {
  const Category c = load_category("rep-s3-q");
  EXPECT_THROW(partial_trace(c, cap(c, c.label("std")), 0, 1, kUnit), WordMismatch);
  EXPECT_THROW(partial_trace(c, identity_map(c, ObjectWord{kUnit}), 0, 2, kUnit),
               IndexOutOfRange);
}

TEST(PartialTraceProperty, BasisIndependence) {
  std::mt19937_64 rng(41);
  for (const std::string name : {"rep-s3-q", "rep-s3-f5", "zn:4"}) {
    const Category c = load_category(name);
    for (int t = 0; t < 10; ++t) {
      const ObjectWord w = random_word(rng, c, 3, 32);
      const LinearMap phi = random_endomorphism(rng, c, w);
      const std::size_t first = rng() % w.size();
      const std::size_t count = 1 + rng() % (w.size() - first);
      for (SimpleLabel b : c.labels()) {
        const ObjectWord part = w.slice(first, count);
        const auto direct = hom_basis(c, b, part, HomMethod::direct);
        const auto tree = hom_basis(c, b, part, HomMethod::fusion_tree);
        // A third basis: rescale and mix the direct one with an invertible matrix.
        HomBasis mixed = *direct;
        if (mixed.size() >= 2) {
          mixed.maps[0] += mixed.maps[1];
          mixed.duals[1] -= mixed.duals[0];
        }
        if (mixed.size() >= 1) {
          mixed.maps[0] *= Scalar(c.field(), 3);
          mixed.duals[0] *= Scalar(c.field(), 3).inverse();
        }
        const LinearMap a = partial_trace(c, phi, first, count, b, *direct);
        EXPECT_EQ(a, partial_trace(c, phi, first, count, b, *tree));
        EXPECT_EQ(a, partial_trace(c, phi, first, count, b, mixed));
      }
    }
  }
}

TEST(PartialTraceProperty, DisjointTracesCommute) {
  std::mt19937_64 rng(42);
  const Category c = load_category("rep-s3-q");
  for (int t = 0; t < 10; ++t) {
    const ObjectWord w = random_word(rng, c, 4, 64);
    if (w.size() < 2) continue;
    const LinearMap phi = random_endomorphism(rng, c, w);
    const std::size_t i = rng() % (w.size() - 1);
    for (SimpleLabel x : c.labels()) {
      for (SimpleLabel y : c.labels()) {
        // Trace factor i and factor i+1 (each alone), in both orders.
        const LinearMap a = partial_trace(c, partial_trace(c, phi, i, 1, x), i + 1, 1, y);
        const LinearMap b = partial_trace(c, partial_trace(c, phi, i + 1, 1, y), i, 1, x);
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(PartialTraceProperty, ConjugationByPermutation) {
  std::mt19937_64 rng(43);
  const Category c = load_category("rep-s3-q");
  for (int t = 0; t < 10; ++t) {
    const ObjectWord w = random_word(rng, c, 3, 32);
    if (w.size() < 2) continue;
    const LinearMap phi = random_endomorphism(rng, c, w);
    // Move the last factor to the front, trace it there, compare with tracing in place.
    const std::size_t n = w.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i + 1 < n; ++i) perm[i] = i + 1;
    perm[n - 1] = 0;
    const LinearMap moved = permute_domain(c, permute_codomain(c, phi, perm), perm);
    for (SimpleLabel b : c.labels()) {
      const LinearMap in_place = partial_trace(c, phi, n - 1, 1, b);
      const LinearMap at_front = partial_trace(c, moved, 0, 1, b);
      std::vector<std::size_t> back(n);
      for (std::size_t i = 0; i + 1 < n; ++i) back[i + 1] = i;
      back[0] = n - 1;
      EXPECT_EQ(permute_domain(c, permute_codomain(c, at_front, back), back), in_place);
    }
  }
}

TEST(PartialTraceProperty, NestedTracesCompose) {
  // Tracing (x, y) to b equals tracing y to c first, then (x, c) to b, summed over c.
  std::mt19937_64 rng(44);
  const Category c = load_category("rep-s3-q");
  for (int t = 0; t < 8; ++t) {
    const ObjectWord w = random_word(rng, c, 3, 32);
    if (w.size() < 2) continue;
    const LinearMap phi = random_endomorphism(rng, c, w);
    const std::size_t first = w.size() - 2;
    for (SimpleLabel b : c.labels()) {
      const LinearMap whole = partial_trace(c, phi, first, 2, b);
      Matrix sum(c.field(), whole.matrix.rows(), whole.matrix.cols());
      for (SimpleLabel mid : c.labels()) {
        const LinearMap inner = partial_trace(c, phi, first + 1, 1, mid);
        sum += partial_trace(c, inner, first, 2, b).matrix;
      }
      // Summing over intermediate objects gives back the full trace.
      EXPECT_EQ(sum, whole.matrix);
    }
  }
}

TEST(Hat, IdentityAndInvolution) {
  std::mt19937_64 rng(51);
  for (const std::string name : {"rep-s3-q", "zn:5", "rep-z3-q"}) {
    const Category c = load_category(name);
    for (int t = 0; t < 10; ++t) {
      const ObjectWord a = random_word(rng, c, 3, 16);
      EXPECT_EQ(hat(c, identity_map(c, a)), identity_map(c, c.dual(a)));
      const ObjectWord b = random_word(rng, c, 2, 16);
      Matrix m(c.field(), c.carrier(b), c.carrier(a));
      for (auto& e : m.entries()) e = Scalar(c.field(), static_cast<long>(rng() % 5) - 2);
      const LinearMap f{a, b, m};
      const LinearMap h = hat(c, f);
      EXPECT_EQ(h.domain, c.dual(b));
      EXPECT_EQ(h.codomain, c.dual(a));
      EXPECT_EQ(hat(c, h), f);
    }
  }
}

TEST(Hat, MapsBasesToBases) {
  const Category c = load_category("rep-s3-q");
  const SimpleLabel s = c.label("std");
  for (SimpleLabel a : c.labels()) {
    const ObjectWord w{s, s};
    const auto basis = hom_basis(c, a, w);
    for (std::size_t i = 0; i < basis->size(); ++i) {
      for (std::size_t j = 0; j < basis->size(); ++j) {
        // hat reverses composition: (ε_j* ∘ ε_i)^ = ε_i^ ∘ ε_j*^.
        const LinearMap p = compose(hat(c, basis->map(i)), hat(c, basis->dual(j)));
        EXPECT_EQ(p.matrix.is_identity(), i == j);
        if (i != j) EXPECT_TRUE(p.matrix.is_zero());
      }
    }
  }
}

TEST(Zeta, TrivialCase) {
  const Category c = load_category("rep-s3-q");
  const ZetaBasis z = zeta_bases(c, kUnit, kUnit, kUnit);
  ASSERT_EQ(z.zeta.size(), 1u);
  EXPECT_TRUE(z.factor.is_one());
  EXPECT_TRUE(z.zeta[0].matrix.is_identity());
  EXPECT_TRUE(z.zeta_bar[0].matrix.is_identity());
}

TEST(Zeta, CyclicGroup) {
  const Category c = load_category("zn:5");
  for (SimpleLabel a : c.labels()) {
    for (SimpleLabel b : c.labels()) {
      const SimpleLabel cc{(a.index + 5 - b.index) % 5};
      const ZetaBasis z = zeta_bases(c, a, b, cc);
      EXPECT_EQ(z.zeta.size(), 1u);
      EXPECT_TRUE(z.factor.is_one());
    }
  }
}

TEST(Zeta, DualBasisPairing) {
  for (const std::string name : {"rep-s3-q", "rep-s3-f5", "zn:4"}) {
    const Category c = load_category(name);
    for (SimpleLabel a : c.labels()) {
      for (SimpleLabel b : c.labels()) {
        for (SimpleLabel cc : c.labels()) {
          const ZetaBasis z = zeta_bases(c, a, b, cc);
          for (std::size_t i = 0; i < z.zeta.size(); ++i) {
            for (std::size_t j = 0; j < z.zeta.size(); ++j) {
              const Matrix p = z.factor * compose(z.zeta_bar[i], z.zeta[j]).matrix;
              EXPECT_EQ(p.is_identity(), i == j) << name;
            }
          }
        }
      }
    }
  }
}

TEST(Cycl, RequiresTwoLegCodomain) {
  const Category c = load_category("rep-s3-q");
  const SimpleLabel s = c.label("std");
  const auto basis = hom_basis(c, s, ObjectWord{s, s});
  const LinearMap once = cycl(c, s, s, s, basis->map(0));
  EXPECT_EQ(once.domain, ObjectWord{s});
  EXPECT_EQ(once.codomain, (ObjectWord{s, s}));
  EXPECT_THROW(cycl(c, s, s, kUnit, basis->map(0)), WordMismatch);
}

TEST(Cycl, ThreeFoldIsAScalarMultiple) {
  // Rotating a trivalent vertex three times returns to the same space; in a
  // symmetric category with trivial twist the result is the original map.
  for (const std::string name : {"rep-s3-q", "zn:4", "rep-z3-q"}) {
    const Category c = load_category(name);
    for (SimpleLabel a : c.labels()) {
      for (SimpleLabel b : c.labels()) {
        for (SimpleLabel cc : c.labels()) {
          const auto basis = hom_basis(c, a, ObjectWord{b, cc});
          for (std::size_t i = 0; i < basis->size(); ++i) {
            const LinearMap one = cycl(c, a, b, cc, basis->map(i));
            const LinearMap two = cycl(c, c.dual(b), cc, c.dual(a), one);
            const LinearMap three = cycl(c, c.dual(cc), c.dual(a), b, two);
            EXPECT_EQ(three, basis->map(i)) << name;
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace acq
