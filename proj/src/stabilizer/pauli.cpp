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

#include "lrn/stabilizer/pauli.hpp"

#include <bit>

#include "lrn/errors.hpp"

namespace lrn::stabilizer {

PauliString::PauliString(int n) : n_(n), x_((n + 63) / 64, 0), z_((n + 63) / 64, 0) {}

void PauliString::set_x(int q, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (q & 63);
  x_[q >> 6] = v ? (x_[q >> 6] | m) : (x_[q >> 6] & ~m);
}

void PauliString::set_z(int q, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (q & 63);
  z_[q >> 6] = v ? (z_[q >> 6] | m) : (z_[q >> 6] & ~m);
}

bool PauliString::commutes(const PauliString& other) const {
  unsigned parity = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    parity ^= std::popcount((x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w])) & 1u;
  }
  return parity == 0;
}

PauliString& PauliString::operator*=(const PauliString& other) {
  // Sum over qubits of the exponent of i picked up by sigma_a * sigma_b.
  int acc = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    const std::uint64_t x1 = x_[w], z1 = z_[w], x2 = other.x_[w], z2 = other.z_[w];
    // Cyclic products X*Y, Y*Z, Z*X give +i; anti-cyclic ones give -i.
    const std::uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const std::uint64_t minus = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    acc += std::popcount(plus) - std::popcount(minus);
    x_[w] ^= x2;
    z_[w] ^= z2;
  }
  set_phase(phase_ + other.phase_ + acc);
  return *this;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_];
  s.reserve(s.size() + n_);
  for (int q = 0; q < n_; ++q) {
    const bool xb = x(q), zb = z(q);
    s.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
  }
  return s;
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  std::size_t pos = 0;
  if (text.substr(0, 3) == "\xE2\x88\x92") {
    phase = 2;
    pos = 3;
  } else if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    phase = text[0] == '-' ? 2 : 0;
    pos = 1;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string_view body = text.substr(pos);
  if (body.empty()) throw ParseError("empty Pauli string");
  PauliString p(static_cast<int>(body.size()));
  for (std::size_t q = 0; q < body.size(); ++q) {
    switch (body[q]) {
      case 'I': case '_': break;
      case 'X': p.set_x(static_cast<int>(q), true); break;
      case 'Z': p.set_z(static_cast<int>(q), true); break;
      case 'Y':
        p.set_x(static_cast<int>(q), true);
        p.set_z(static_cast<int>(q), true);
        break;
      default:
        throw ParseError("bad Pauli character '" + std::string(1, body[q]) + "' in \"" + std::string(text) + "\"");
    }
  }
  p.set_phase(phase);
  return p;
}

}  // namespace lrn::stabilizer
