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

#include "lrn/stabilizer/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "lrn/errors.hpp"

namespace lrn::stabilizer {

namespace {

using Row = std::vector<std::uint64_t>;

bool get(const Row& r, int c) { return (r[c >> 6] >> (c & 63)) & 1u; }
void flip(Row& r, int c) { r[c >> 6] ^= std::uint64_t{1} << (c & 63); }

void xor_into(Row& dst, const Row& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Rank of a bit matrix by Gaussian elimination.
int gf2_rank(std::vector<Row> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (get(rows[r], c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && get(rows[r], c)) xor_into(rows[r], rows[rank]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int arity(Gate g) { return (g == Gate::kCnot || g == Gate::kCz) ? 2 : 1; }

const char* to_string(Gate g) {
  switch (g) {
    case Gate::kH: return "H";
    case Gate::kS: return "S";
    case Gate::kCnot: return "CNOT";
    case Gate::kCz: return "CZ";
    case Gate::kX: return "X";
    case Gate::kY: return "Y";
    case Gate::kZ: return "Z";
  }
  return "?";
}

StabilizerTableau StabilizerTableau::zero_state(int n) {
  if (n < 1) throw TargetOutOfRange("tableau needs at least one qubit");
  StabilizerTableau t;
  t.n_ = n;
  t.gens_.assign(n, PauliString(n));
  for (int q = 0; q < n; ++q) t.gens_[q].set_z(q, true);
  return t;
}

StabilizerTableau StabilizerTableau::from_generators(std::vector<PauliString> gens) {
  if (gens.empty()) throw DependentGenerators("no generators");
  const int n = gens.front().num_qubits();
  if (static_cast<int>(gens.size()) != n) {
    throw DependentGenerators(std::to_string(gens.size()) + " generators for " + std::to_string(n) + " qubits");
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.num_qubits() != n) throw DependentGenerators("generator " + std::to_string(i) + " has the wrong length");
    if (g.phase() % 2 != 0) throw DependentGenerators("generator " + std::to_string(i) + " has an imaginary phase");
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.commutes(gens[j])) {
        throw DependentGenerators("generators " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
      }
    }
    Row r((2 * n + 63) / 64, 0);
    for (int q = 0; q < n; ++q) {
      if (g.x(q)) flip(r, q);
      if (g.z(q)) flip(r, n + q);
    }
    rows.push_back(std::move(r));
  }
  const int rank = gf2_rank(rows, 2 * n);
  if (rank < n) {
    throw DependentGenerators("generator matrix has rank " + std::to_string(rank) + " < " + std::to_string(n));
  }
  StabilizerTableau t;
  t.n_ = n;
  t.gens_ = std::move(gens);
  return t;
}

void StabilizerTableau::check(int q) const {
  if (q < 0 || q >= n_) {
    throw TargetOutOfRange("qubit " + std::to_string(q) + " outside [0, " + std::to_string(n_) + ")");
  }
}

void StabilizerTableau::h(int q) {
  check(q);
  for (auto& g : gens_) {
    const bool xb = g.x(q), zb = g.z(q);
    if (xb && zb) g.set_phase(g.phase() + 2);
    g.set_x(q, zb);
    g.set_z(q, xb);
  }
}

void StabilizerTableau::s(int q) {
  check(q);
  for (auto& g : gens_) {
    const bool xb = g.x(q), zb = g.z(q);
    if (xb && zb) g.set_phase(g.phase() + 2);
    g.set_z(q, zb ^ xb);
  }
}

void StabilizerTableau::cnot(int a, int b) {
  check(a);
  check(b);
  if (a == b) throw TargetOutOfRange("CNOT needs distinct qubits");
  for (auto& g : gens_) {
    const bool xa = g.x(a), za = g.z(a), xb = g.x(b), zb = g.z(b);
    if (xa && zb && (xb == za)) g.set_phase(g.phase() + 2);
    g.set_x(b, xb ^ xa);
    g.set_z(a, za ^ zb);
  }
}

void StabilizerTableau::cz(int a, int b) {
  check(a);
  check(b);
  if (a == b) throw TargetOutOfRange("CZ needs distinct qubits");
  h(b);
  cnot(a, b);
  h(b);
}

void StabilizerTableau::x(int q) {
  check(q);
  for (auto& g : gens_) {
    if (g.z(q)) g.set_phase(g.phase() + 2);
  }
}

void StabilizerTableau::y(int q) {
  check(q);
  for (auto& g : gens_) {
    if (g.x(q) != g.z(q)) g.set_phase(g.phase() + 2);
  }
}

void StabilizerTableau::z(int q) {
  check(q);
  for (auto& g : gens_) {
    if (g.x(q)) g.set_phase(g.phase() + 2);
  }
}

void StabilizerTableau::apply_inplace(Gate g, std::span<const int> t) {
  if (static_cast<int>(t.size()) != arity(g)) {
    throw TargetOutOfRange(std::string(to_string(g)) + " takes " + std::to_string(arity(g)) + " targets");
  }
  switch (g) {
    case Gate::kH: h(t[0]); break;
    case Gate::kS: s(t[0]); break;
    case Gate::kCnot: cnot(t[0], t[1]); break;
    case Gate::kCz: cz(t[0], t[1]); break;
    case Gate::kX: x(t[0]); break;
    case Gate::kY: y(t[0]); break;
    case Gate::kZ: z(t[0]); break;
  }
}

StabilizerTableau StabilizerTableau::canonicalized() const {
  StabilizerTableau out = *this;
  auto& rows = out.gens_;
  const int n = n_;
  auto bit = [n](const PauliString& p, int c) { return c < n ? p.x(c) : p.z(c - n); };
  int rank = 0;
  for (int c = 0; c < 2 * n && rank < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (bit(rows[r], c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && bit(rows[r], c)) rows[r] *= rows[rank];
    }
    ++rank;
  }
  if (rank < n) throw DependentGenerators("generator matrix has rank " + std::to_string(rank) + " < " + std::to_string(n));
  return out;
}

std::string StabilizerTableau::str() const {
  std::string s;
  for (const auto& g : gens_) {
    s += g.str();
    s.push_back('\n');
  }
  return s;
}

StabilizerTableau StabilizerTableau::parse(std::string_view text) {
  std::vector<PauliString> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    gens.push_back(PauliString::parse(std::string_view(line).substr(b, e - b + 1)));
  }
  return from_generators(std::move(gens));
}

StabilizerTableau apply_gate(const StabilizerTableau& t, Gate g, std::span<const int> targets) {
  StabilizerTableau out = t;
  out.apply_inplace(g, targets);
  return out;
}

StabilizerTableau canonicalize(const StabilizerTableau& t) { return t.canonicalized(); }

int restricted_rank(const StabilizerTableau& t, std::span<const int> qubits) {
  const int m = static_cast<int>(qubits.size());
  std::vector<Row> rows;
  rows.reserve(t.num_qubits());
  for (const auto& g : t.generators()) {
    Row r((2 * m + 63) / 64 + 1, 0);
    for (int k = 0; k < m; ++k) {
      if (g.x(qubits[k])) flip(r, k);
      if (g.z(qubits[k])) flip(r, m + k);
    }
    rows.push_back(std::move(r));
  }
  return gf2_rank(std::move(rows), 2 * m);
}

namespace {

std::vector<int> complement(int n, std::span<const int> region) {
  std::vector<char> in(n, 0);
  for (int q : region) {
    if (q < 0 || q >= n) throw TargetOutOfRange("qubit " + std::to_string(q) + " outside the system");
    in[q] = 1;
  }
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if (!in[q]) out.push_back(q);
  }
  return out;
}

}  // namespace

int entropy(const StabilizerTableau& t, std::span<const int> region) {
  const int n = t.num_qubits();
  const auto rest = complement(n, region);
  const int size = n - static_cast<int>(rest.size());
  return size - n + restricted_rank(t, rest);
}

int mutual_information(const StabilizerTableau& t, std::span<const int> a, std::span<const int> b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw OverlappingRegions("qubit " + std::to_string(x) + " is in both regions");
    }
  }
  std::vector<int> ab(a.begin(), a.end());
  ab.insert(ab.end(), b.begin(), b.end());
  return entropy(t, a) + entropy(t, b) - entropy(t, ab);
}

}  // namespace lrn::stabilizer
