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

#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swt/errors.hpp"
#include "swt/linalg.hpp"
#include "swt/numeric_policy.hpp"

namespace swt {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);

/// Throws kDimension unless 1 <= n_qubits <= 64.
void check_qubit_count(int n_qubits);

/// An n-qubit Pauli operator without phase, stored symplectically as an X
/// mask and a Z mask (Y sets both). Qubit q (1-based, leftmost letter) lives
/// at bit n - q, so the X mask is exactly the bit-flip pattern on
/// computational-basis indices.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  /// Identity on n qubits.
  explicit PauliString(int n_qubits);

  static PauliString from_letters(std::string_view letters);
  static PauliString from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);
  /// A single non-identity letter on qubit `qubit` (1-based).
  static PauliString single(int n_qubits, int qubit, PauliLetter letter);

  int n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  PauliLetter letter(int qubit) const;
  PauliString with_letter(int qubit, PauliLetter letter) const;
  std::string letters() const;

  int weight() const { return std::popcount(x_ | z_); }
  int y_count() const { return std::popcount(x_ & z_); }
  bool is_identity() const { return (x_ | z_) == 0; }
  /// 1-based qubits carrying a non-identity letter, ascending.
  std::vector<int> support() const;

  bool commutes_with(const PauliString& other) const;

  /// sigma|b> = basis_phase(b) |b XOR x_mask>.
  Complex basis_phase(std::uint64_t index) const;

  /// Canonical order: lexicographic on letters, qubit 1 first, I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

 private:
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);
  std::uint64_t bit(int qubit) const { return std::uint64_t{1} << (n_ - qubit); }

  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
};

/// Product a*b = i^quarter_turns * product.
struct PauliProduct {
  int quarter_turns = 0;
  PauliString product;

  Complex phase() const;
};

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b);

template <typename Coeff>
struct BasicPauliTerm {
  Coeff coefficient;
  PauliString string;
};

/// A weighted sum of Pauli strings kept in normal form: duplicate strings
/// merged, |coefficient| < drop tolerance removed, terms in canonical order.
template <typename Coeff>
class BasicPauliSum {
 public:
  using Term = BasicPauliTerm<Coeff>;

  explicit BasicPauliSum(int n_qubits) : n_(n_qubits) { check_qubit_count(n_qubits); }
  BasicPauliSum(int n_qubits, std::vector<Term> terms,
                double drop_tolerance = default_policy().drop_tolerance)
      : n_(n_qubits), terms_(std::move(terms)) {
    check_qubit_count(n_qubits);
    for (const Term& t : terms_) {
      require(t.string.n_qubits() == n_, ErrorKind::kDimension,
              "Pauli term " + t.string.letters() + " does not act on " + std::to_string(n_) +
                  " qubits");
    }
    normalize(drop_tolerance);
  }

  int n_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of `s`, zero when absent.
  Coeff coefficient(const PauliString& s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const PauliString& key) { return t.string < key; });
    return (it != terms_.end() && it->string == s) ? it->coefficient : Coeff{};
  }

  BasicPauliSum operator+(const BasicPauliSum& other) const {
    require(n_ == other.n_, ErrorKind::kDimension, "adding Pauli sums of different sizes");
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return BasicPauliSum(n_, std::move(all));
  }

  BasicPauliSum scaled(Coeff factor) const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coefficient *= factor;
    return BasicPauliSum(n_, std::move(out));
  }

  friend bool operator==(const BasicPauliSum& a, const BasicPauliSum& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].string == b.terms_[k].string) ||
          a.terms_[k].coefficient != b.terms_[k].coefficient)
        return false;
    }
    return true;
  }

 private:
  void normalize(double drop_tolerance) {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.string < b.string; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
      if (!merged.empty() && merged.back().string == t.string) {
        merged.back().coefficient += t.coefficient;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [&](const Term& t) { return std::abs(t.coefficient) < drop_tolerance; });
    terms_ = std::move(merged);
  }

  int n_;
  std::vector<Term> terms_;
};

using PauliTerm = BasicPauliTerm<double>;
using PauliSum = BasicPauliSum<double>;
using ComplexPauliSum = BasicPauliSum<Complex>;

/// Real-coefficient sum sum_j alpha_j sigma_j with [A, B] = i sum_j alpha_j sigma_j.
PauliSum hermitian_commutator(const PauliSum& a, const PauliSum& b);

/// Symbolic product A*B with complex coefficients.
ComplexPauliSum pauli_sum_product(const PauliSum& a, const PauliSum& b);

/// True when every coefficient has |imag| <= tolerance.
bool is_real(const ComplexPauliSum& s, double tolerance = default_policy().drop_tolerance);

/// Drops imaginary parts; throws kContract if any exceeds `tolerance`.
PauliSum real_part(const ComplexPauliSum& s, double tolerance = 1e-10);

DenseOperator to_dense(const PauliString& s, const NumericPolicy& policy = default_policy());
DenseOperator to_dense(const PauliSum& s, const NumericPolicy& policy = default_policy());
DenseOperator to_dense(const ComplexPauliSum& s, const NumericPolicy& policy = default_policy());

/// sigma * v without materializing sigma.
ComplexVector apply_pauli(const PauliString& s, const ComplexVector& v);
/// H * v without materializing H.
ComplexVector apply_pauli_sum(const PauliSum& h, const ComplexVector& v);

/// <a|sigma|b>.
Complex pauli_matrix_element(const ComplexVector& a, const PauliString& s, const ComplexVector& b);

/// One term per line, "<coefficient> <letters>", qubit 1 leftmost.
std::string to_text(const PauliSum& s);
PauliSum parse_pauli_sum(std::string_view text);

/// Shortest round-trip decimal rendering that always carries a '.' or an
/// exponent ("2.0", "0.5", "1e-05").
std::string format_coefficient(double value);

}  // namespace swt
