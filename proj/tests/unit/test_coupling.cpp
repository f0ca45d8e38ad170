#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "qunit/errors.hpp"
#include "qunit/symmetry.hpp"
#include "test_support.hpp"

using namespace qunit;
using namespace qunit::symmetry;
using hilbert::Matrix;
using hilbert::SpaceSpec;
using qunit::testing::ket;

namespace {

const StateVector& find(const std::vector<CoupledState>& basis, CoupledLabel label) {
  for (const auto& c : basis) {
    if (c.label == label) return c.state;
  }
  throw std::runtime_error("missing label " + label.to_string());
}

Matrix span_projector(const std::vector<StateVector>& vectors) {
  const auto dim = vectors.front().amplitudes().size();
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& v : vectors) p += v.amplitudes() * v.amplitudes().adjoint();
  return p;
}

}  // namespace

TEST(CoupledBasis, Examples) {
  const double r2 = 1 / std::sqrt(2.0);
  const auto two = coupled_basis(SpaceSpec(2, 2));
  EXPECT_LT((find(two, {2, 0, 1}).amplitudes() - ket(2, {{"12", r2}, {"21", r2}}).amplitudes()).norm(), 1e-15);

  const auto three = coupled_basis(SpaceSpec(2, 3));
  EXPECT_LT((find(three, {3, 3, 1}).amplitudes() - ket(2, {{"111", 1}}).amplitudes()).norm(), 1e-15);

  const double r6 = 1 / std::sqrt(6.0);
  const auto expected = ket(2, {{"112", 2 * r6}, {"121", -r6}, {"211", -r6}});
  EXPECT_LT((find(three, {1, 1, 1}).amplitudes() - expected.amplitudes()).norm(), 1e-15);
}

TEST(CoupledBasis, OrderingAndLabels) {
  const auto three = coupled_basis(SpaceSpec(2, 3));
  ASSERT_EQ(three.size(), 8u);
  EXPECT_EQ(three[0].label.to_string(), "|3/2,3/2;1>");
  EXPECT_EQ(three[3].label.to_string(), "|3/2,-3/2;1>");
  EXPECT_EQ(three[4].label.to_string(), "|1/2,1/2;1>");
  EXPECT_EQ(three[7].label.to_string(), "|1/2,-1/2;2>");
  EXPECT_EQ(half_integer_string(-3), "-3/2");
  EXPECT_EQ(half_integer_string(4), "2");
}

TEST(CoupledBasis, UnitaryWithExpectedMultiplicities) {
  for (int N = 2; N <= 8; ++N) {
    const SpaceSpec space(2, N);
    const auto basis = coupled_basis(space);
    ASSERT_EQ(basis.size(), space.dimension());
    std::vector<StateVector> states;
    std::map<int, int> per_j;
    for (const auto& c : basis) {
      states.push_back(c.state);
      ++per_j[c.label.twice_j];
      EXPECT_LE(c.label.d, coupled_multiplicity(N, c.label.twice_j));
    }
    const Matrix gram = hilbert::gram_matrix(states);
    EXPECT_LT((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 1e-10);
    for (auto [twice_j, count] : per_j) {
      const Partition lambda = coupled_partition(N, twice_j);
      EXPECT_EQ(count, tableaux::hook_length_dim(lambda) * tableaux::weyl_dim(lambda, 2));
      EXPECT_EQ(count, coupled_multiplicity(N, twice_j) * (twice_j + 1));
    }
  }
  const auto three = coupled_basis(SpaceSpec(2, 3));
  int quartet = 0, doublet = 0;
  for (const auto& c : three) (c.label.twice_j == 3 ? quartet : doublet)++;
  EXPECT_EQ(quartet, 4);
  EXPECT_EQ(doublet, 4);
}

TEST(CoupledBasis, LoweringOperatorConsistency) {
  for (int N = 2; N <= 6; ++N) {
    const auto basis = coupled_basis(SpaceSpec(2, N));
    for (const auto& [label, state] : basis) {
      const auto lowered = total_lowering(state);
      if (label.twice_m == -label.twice_j) {
        EXPECT_LT(lowered.norm(), 1e-10);
        continue;
      }
      const double j = label.j(), m = label.m();
      const double coefficient = std::sqrt(j * (j + 1) - m * (m - 1));
      const auto& next = find(basis, {label.twice_j, label.twice_m - 2, label.d});
      EXPECT_LT((lowered.amplitudes() - coefficient * next.amplitudes()).cwiseAbs().maxCoeff(), 1e-10)
          << label.to_string();
      const auto jz = total_jz(state);
      EXPECT_LT((jz.amplitudes() - m * state.amplitudes()).norm(), 1e-12);
    }
  }
}

TEST(CoupledBasis, StatesLieInMatchingIsotypicComponent) {
  for (int N = 2; N <= 5; ++N) {
    for (const auto& [label, state] : coupled_basis(SpaceSpec(2, N))) {
      EXPECT_NEAR(sector_membership(state, coupled_partition(N, label.twice_j)), 1.0, 1e-10);
    }
  }
}

TEST(CoupledBasis, FixtureConventionReproducesTables) {
  const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0), r6 = 1 / std::sqrt(6.0);
  const auto fixtures = coupled_basis(SpaceSpec(2, 3), CouplingConvention::PaperFixtures);
  ASSERT_EQ(fixtures.size(), 8u);
  EXPECT_LT((find(fixtures, {3, 1, 1}).amplitudes() -
             ket(2, {{"112", r3}, {"121", r3}, {"211", r3}}).amplitudes()).norm(), 1e-15);
  EXPECT_LT((find(fixtures, {1, 1, 1}).amplitudes() -
             ket(2, {{"211", 2 * r6}, {"112", -r6}, {"121", -r6}}).amplitudes()).norm(), 1e-15);
  EXPECT_LT((find(fixtures, {1, -1, 2}).amplitudes() -
             ket(2, {{"221", r2}, {"212", -r2}}).amplitudes()).norm(), 1e-15);

  std::vector<StateVector> states;
  for (const auto& c : fixtures) states.push_back(c.state);
  const Matrix gram = hilbert::gram_matrix(states);
  EXPECT_LT((gram - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CoupledBasis, FixtureDoubletsSpanSameSpaceAsSequential) {
  const SpaceSpec space(2, 3);
  auto doublets = [](const std::vector<CoupledState>& basis) {
    std::vector<StateVector> out;
    for (const auto& c : basis) {
      if (c.label.twice_j == 1) out.push_back(c.state);
    }
    return out;
  };
  const auto fixture = doublets(coupled_basis(space, CouplingConvention::PaperFixtures));
  const auto sequential = doublets(coupled_basis(space));
  ASSERT_EQ(fixture.size(), 4u);
  EXPECT_LT((span_projector(fixture) - span_projector(sequential)).cwiseAbs().maxCoeff(), 1e-10);
  // The individual copies do not coincide.
  EXPECT_GT((fixture[0].amplitudes() - sequential[0].amplitudes()).norm(), 0.1);
}

TEST(CoupledBasis, Errors) {
  EXPECT_THROW(coupled_basis(SpaceSpec(3, 3)), UnsupportedError);
  EXPECT_THROW(coupled_basis(SpaceSpec(2, 4), CouplingConvention::PaperFixtures), UnsupportedError);
  EXPECT_THROW(coupled_basis(SpaceSpec(2, 1)), BoundsError);
  EXPECT_THROW(coupled_partition(3, 2), DomainError);
}
