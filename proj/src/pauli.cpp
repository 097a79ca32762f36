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

#include "swt/pauli.hpp"

#include <charconv>
#include <sstream>

namespace swt {
namespace {

constexpr Complex kQuarterTurn[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same_size(int a, int b, const char* what) {
  require(a == b, ErrorKind::kDimension,
          std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b) + " qubits");
}

}  // namespace

char to_char(PauliLetter letter) { return "IXYZ"[static_cast<int>(letter)]; }

void check_qubit_count(int n_qubits) {
  require(n_qubits >= 1 && n_qubits <= PauliString::kMaxQubits, ErrorKind::kDimension,
          "qubit count " + std::to_string(n_qubits) + " outside [1, 64]");
}

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  check_qubit_count(n_qubits);
  require(((x_ | z_) & ~low_mask(n_)) == 0, ErrorKind::kDimension,
          "Pauli masks exceed " + std::to_string(n_) + " qubits");
}

PauliString PauliString::from_masks(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask) {
  return PauliString(n_qubits, x_mask, z_mask);
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString out(static_cast<int>(letters.size()));
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int q = static_cast<int>(k) + 1;
    switch (letters[k]) {
      case 'I': case '_': break;
      case 'X': out.x_ |= out.bit(q); break;
      case 'Y': out.x_ |= out.bit(q); out.z_ |= out.bit(q); break;
      case 'Z': out.z_ |= out.bit(q); break;
      default:
        fail(ErrorKind::kParse, "invalid Pauli letter '" + std::string(1, letters[k]) + "'");
    }
  }
  return out;
}

PauliString PauliString::single(int n_qubits, int qubit, PauliLetter letter) {
  return PauliString(n_qubits).with_letter(qubit, letter);
}

PauliLetter PauliString::letter(int qubit) const {
  require(qubit >= 1 && qubit <= n_, ErrorKind::kDimension, "qubit index out of range");
  const bool x = (x_ & bit(qubit)) != 0;
  const bool z = (z_ & bit(qubit)) != 0;
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

PauliString PauliString::with_letter(int qubit, PauliLetter letter) const {
  require(qubit >= 1 && qubit <= n_, ErrorKind::kDimension, "qubit index out of range");
  PauliString out = *this;
  const std::uint64_t b = bit(qubit);
  out.x_ &= ~b;
  out.z_ &= ~b;
  if (letter == PauliLetter::X || letter == PauliLetter::Y) out.x_ |= b;
  if (letter == PauliLetter::Z || letter == PauliLetter::Y) out.z_ |= b;
  return out;
}

std::string PauliString::letters() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 1; q <= n_; ++q) out[static_cast<std::size_t>(q - 1)] = to_char(letter(q));
  return out;
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 1; q <= n_; ++q) {
    if ((x_ | z_) & bit(q)) out.push_back(q);
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  check_same_size(n_, other.n_, "commutes_with");
  return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

Complex PauliString::basis_phase(std::uint64_t index) const {
  // Y = iXZ: each Y contributes i, each Z-part bit set in the input a sign.
  const int turns = y_count() + 2 * std::popcount(index & z_);
  return kQuarterTurn[turns & 3];
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (int q = 1; q <= a.n_; ++q) {
    const auto la = static_cast<int>(a.letter(q));
    const auto lb = static_cast<int>(b.letter(q));
    if (la != lb) return la < lb;
  }
  return false;
}

Complex PauliProduct::phase() const { return kQuarterTurn[quarter_turns & 3]; }

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a.n_qubits(), b.n_qubits(), "pauli_multiply");
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  // P(x,z) = i^{xz} X^x Z^z, and Z^z1 X^x2 = (-1)^{z1 x2} X^x2 Z^z1.
  int turns = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
              2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
  turns = ((turns % 4) + 4) % 4;
  return {turns, PauliString::from_masks(a.n_qubits(), x, z)};
}

PauliSum hermitian_commutator(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits(), "hermitian_commutator");
  std::vector<PauliTerm> terms;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (ta.string.commutes_with(tb.string)) continue;
      // Anticommuting pair: [sa, sb] = 2 sa sb = 2 (+-i) P, so alpha = +-2.
      PauliProduct p = pauli_multiply(ta.string, tb.string);
      const double sign = p.quarter_turns == 1 ? 1.0 : -1.0;
      terms.push_back({2.0 * sign * ta.coefficient * tb.coefficient, p.product});
    }
  }
  return PauliSum(a.n_qubits(), std::move(terms));
}

ComplexPauliSum pauli_sum_product(const PauliSum& a, const PauliSum& b) {
  check_same_size(a.n_qubits(), b.n_qubits(), "pauli_sum_product");
  std::vector<ComplexPauliSum::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      PauliProduct p = pauli_multiply(ta.string, tb.string);
      terms.push_back({p.phase() * (ta.coefficient * tb.coefficient), p.product});
    }
  }
  return ComplexPauliSum(a.n_qubits(), std::move(terms));
}

bool is_real(const ComplexPauliSum& s, double tolerance) {
  return std::all_of(s.terms().begin(), s.terms().end(),
                     [&](const auto& t) { return std::abs(t.coefficient.imag()) <= tolerance; });
}

PauliSum real_part(const ComplexPauliSum& s, double tolerance) {
  std::vector<PauliTerm> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    require(std::abs(t.coefficient.imag()) <= tolerance, ErrorKind::kContract,
            "coefficient of " + t.string.letters() + " is not real");
    terms.push_back({t.coefficient.real(), t.string});
  }
  return PauliSum(s.n_qubits(), std::move(terms));
}

namespace {

template <typename Sum>
DenseOperator dense_of_sum(const Sum& s, const NumericPolicy& policy) {
  check_dense_cap(s.n_qubits(), policy);
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& t : s.terms()) {
    const std::uint64_t flip = t.string.x_mask();
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto b = static_cast<std::uint64_t>(col);
      out(static_cast<Eigen::Index>(b ^ flip), col) += Complex(t.coefficient) * t.string.basis_phase(b);
    }
  }
  return out;
}

}  // namespace

DenseOperator to_dense(const PauliString& s, const NumericPolicy& policy) {
  return dense_of_sum(PauliSum(s.n_qubits(), {{1.0, s}}), policy);
}

DenseOperator to_dense(const PauliSum& s, const NumericPolicy& policy) {
  return dense_of_sum(s, policy);
}

DenseOperator to_dense(const ComplexPauliSum& s, const NumericPolicy& policy) {
  return dense_of_sum(s, policy);
}

ComplexVector apply_pauli(const PauliString& s, const ComplexVector& v) {
  require(v.size() == (Eigen::Index{1} << s.n_qubits()), ErrorKind::kDimension,
          "vector size does not match Pauli string");
  ComplexVector out(v.size());
  const std::uint64_t flip = s.x_mask();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const auto b = static_cast<std::uint64_t>(k);
    out[static_cast<Eigen::Index>(b ^ flip)] = s.basis_phase(b) * v[k];
  }
  return out;
}

ComplexVector apply_pauli_sum(const PauliSum& h, const ComplexVector& v) {
  require(v.size() == (Eigen::Index{1} << h.n_qubits()), ErrorKind::kDimension,
          "vector size does not match Pauli sum");
  ComplexVector out = ComplexVector::Zero(v.size());
  for (const auto& t : h.terms()) {
    const std::uint64_t flip = t.string.x_mask();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      const auto b = static_cast<std::uint64_t>(k);
      out[static_cast<Eigen::Index>(b ^ flip)] += t.coefficient * t.string.basis_phase(b) * v[k];
    }
  }
  return out;
}

Complex pauli_matrix_element(const ComplexVector& a, const PauliString& s, const ComplexVector& b) {
  require(a.size() == b.size(), ErrorKind::kDimension, "vector sizes differ");
  return a.dot(apply_pauli(s, b));
}

std::string format_coefficient(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string out(buf, end);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

std::string to_text(const PauliSum& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    out += format_coefficient(t.coefficient);
    out += ' ';
    out += t.string.letters();
    out += '\n';
  }
  return out;
}

PauliSum parse_pauli_sum(std::string_view text) {
  std::vector<PauliTerm> terms;
  int n = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line.remove_prefix(first);

    const auto space = line.find_first_of(" \t");
    require(space != std::string_view::npos, ErrorKind::kParse,
            "line " + std::to_string(line_no) + ": expected '<coefficient> <letters>'");
    std::string_view coeff_text = line.substr(0, space);
    std::string_view rest = line.substr(space);
    rest.remove_prefix(std::min(rest.find_first_not_of(" \t"), rest.size()));
    const auto tail = rest.find_last_not_of(" \t");
    rest = rest.substr(0, tail == std::string_view::npos ? 0 : tail + 1);

    double coeff = 0.0;
    auto [ptr, ec] = std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
    require(ec == std::errc{} && ptr == coeff_text.data() + coeff_text.size(), ErrorKind::kParse,
            "line " + std::to_string(line_no) + ": bad coefficient '" + std::string(coeff_text) + "'");
    require(!rest.empty() && rest.find_first_of(" \t") == std::string_view::npos, ErrorKind::kParse,
            "line " + std::to_string(line_no) + ": bad Pauli letters");
    PauliString s = PauliString::from_letters(rest);
    if (n < 0) n = s.n_qubits();
    require(s.n_qubits() == n, ErrorKind::kParse,
            "line " + std::to_string(line_no) + ": inconsistent qubit count");
    terms.push_back({coeff, s});
  }
  require(n > 0, ErrorKind::kParse, "empty Pauli sum text");
  return PauliSum(n, std::move(terms));
}

}  // namespace swt
