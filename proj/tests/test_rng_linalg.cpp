// Copyright 2026 The SWT Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>

#include "swt/errors.hpp"
#include "swt/linalg.hpp"
#include "swt/rng.hpp"
#include "test_support.hpp"

namespace swt {
namespace {

// Reference words from numpy.random.Philox(key=..., counter=0).random_raw():
// the counter is advanced before each block.
TEST(Philox, KnownAnswerZeroKey) {
  const std::array<std::uint64_t, 8> want = {
      0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL, 0x907d7a052fd5b4dcULL,
      0x809bf322883987c3ULL, 0x471128b9e807f7ddULL, 0xf250ba0dbec065b7ULL, 0xfc6ed66767a457bcULL};
  RngStream rng(0, 0);
  for (std::uint64_t w : want) EXPECT_EQ(rng.next_u64(), w);
}

TEST(Philox, KnownAnswerNonzeroKey) {
  const std::array<std::uint64_t, 4> want = {0x7af1ec3cbd0ad88aULL, 0x009cd89c3efe261fULL, 0x0b019d81fcae091cULL,
                                             0x61331f09223ecda9ULL};
  RngStream rng(0x1234, 0x5678);
  for (std::uint64_t w : want) EXPECT_EQ(rng.next_u64(), w);
}

TEST(RngStream, Reproducible) {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs = differs || x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(RngStream, UniformAndBelowRanges) {
  RngStream rng(1, 2);
  double mean = 0.0;
  std::array<int, 5> counts{};
  for (int k = 0; k < 20000; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    mean += u;
    ++counts[rng.below(5)];
  }
  EXPECT_NEAR(mean / 20000, 0.5, 0.01);
  for (int c : counts) EXPECT_NEAR(c, 4000, 300);
}

TEST(RngStream, DerivedIdsDiffer) {
  EXPECT_NE(derive_stream_id({1, 2}), derive_stream_id({2, 1}));
  EXPECT_EQ(derive_stream_id({3, 4, 5}), derive_stream_id({3, 4, 5}));
}

TEST(Eigh, DiagonalAndPauliX) {
  DenseOperator d = DenseOperator::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  const SpectralDecomposition s = eigh(d);
  EXPECT_DOUBLE_EQ(s.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues[1], 3.0);
  const SpectralDecomposition x = eigh(testing::kron_pauli("X"));
  EXPECT_NEAR(x.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(x.eigenvalues[1], 1.0, 1e-15);
}

TEST(Eigh, RejectsNonHermitian) {
  DenseOperator a = DenseOperator::Zero(2, 2);
  a(0, 1) = 1.0;
  try {
    eigh(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContract);
  }
}

TEST(Eigh, ResidualsAndOrthonormality) {
  std::mt19937_64 gen(4);
  DenseOperator a = DenseOperator::Random(16, 16);
  a = (a + a.adjoint()).eval();
  const SpectralDecomposition s = eigh(a);
  for (Eigen::Index k = 0; k < 16; ++k) {
    EXPECT_LT((a * s.eigenvectors.col(k) - s.eigenvalues[k] * s.eigenvectors.col(k)).norm(), 1e-9);
    if (k > 0) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
  }
  EXPECT_LT(max_abs(s.eigenvectors.adjoint() * s.eigenvectors - DenseOperator::Identity(16, 16)), 1e-10);
}

TEST(Eigh, PhaseConvention) {
  DenseOperator a = testing::kron_pauli("ZZ") + testing::kron_pauli("XX");
  const SpectralDecomposition s = eigh(a);
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    Eigen::Index arg = 0;
    s.eigenvectors.col(k).cwiseAbs().maxCoeff(&arg);
    EXPECT_NEAR(s.eigenvectors(arg, k).imag(), 0.0, 1e-14);
    EXPECT_GT(s.eigenvectors(arg, k).real(), 0.0);
  }
}

TEST(EvolutionOperator, MatchesMatrixExponential) {
  const DenseOperator h = testing::kron_pauli("XZ") + 0.3 * testing::kron_pauli("YY") - testing::kron_pauli("ZI");
  const DenseOperator want = testing::expm_i(h, -0.7);
  EXPECT_LT(max_abs(evolution_operator(h, 0.7) - want), 1e-12);
}

TEST(MatrixPower, AgreesWithRepeatedProduct) {
  const DenseOperator u = testing::expm_i(testing::kron_pauli("XY"), 0.3);
  DenseOperator want = DenseOperator::Identity(4, 4);
  for (int k = 0; k < 13; ++k) want = (want * u).eval();
  EXPECT_LT(max_abs(matrix_power(u, 13) - want), 1e-12);
  EXPECT_LT(max_abs(matrix_power(u, 0) - DenseOperator::Identity(4, 4)), 1e-15);
}

TEST(Dimensions, QubitCountOfDimension) {
  EXPECT_EQ(qubit_count_of_dimension(16), 4);
  EXPECT_THROW(qubit_count_of_dimension(12), Error);
}

}  // namespace
}  // namespace swt
