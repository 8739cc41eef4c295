// Copyright 2026 The lrn-detect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrn/stabilizer/pauli.hpp"

namespace lrn::stabilizer {

enum class Gate { kH, kS, kCnot, kCz, kX, kY, kZ };

/// Number of qubits a gate acts on.
int arity(Gate g);
const char* to_string(Gate g);

/// n commuting, independent generators with signs +-1.
class StabilizerTableau {
 public:
  /// |0...0>: generators Z_q.
  static StabilizerTableau zero_state(int n);
  /// Throws DependentGenerators if the rows anticommute, are dependent, carry
  /// a non-real phase, or are not n rows on n qubits.
  static StabilizerTableau from_generators(std::vector<PauliString> gens);

  int num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  /// In-place Clifford conjugation. Throws TargetOutOfRange.
  void h(int q);
  void s(int q);
  void cnot(int control, int target);
  void cz(int a, int b);
  void x(int q);
  void y(int q);
  void z(int q);
  void apply_inplace(Gate g, std::span<const int> targets);

  /// Same group, generators in reduced row-echelon form over the columns
  /// X_0..X_{n-1}, Z_0..Z_{n-1}.
  StabilizerTableau canonicalized() const;

  /// One generator per line.
  std::string str() const;
  /// Inverse of str(); blank lines and '#' comments are skipped.
  static StabilizerTableau parse(std::string_view text);

  bool operator==(const StabilizerTableau&) const = default;

 private:
  void check(int q) const;

  int n_ = 0;
  std::vector<PauliString> gens_;
};

StabilizerTableau apply_gate(const StabilizerTableau& t, Gate g, std::span<const int> targets);
StabilizerTableau canonicalize(const StabilizerTableau& t);

/// Rank over GF(2) of the generator bits restricted to the given qubits.
int restricted_rank(const StabilizerTableau& t, std::span<const int> qubits);

/// S(rho_R) in bits: |R| - n + rank of the generators on the complement.
int entropy(const StabilizerTableau& t, std::span<const int> region);

/// S(A) + S(B) - S(A u B). Throws OverlappingRegions.
int mutual_information(const StabilizerTableau& t, std::span<const int> a, std::span<const int> b);

}  // namespace lrn::stabilizer
