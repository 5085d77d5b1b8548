/*
 * Copyright 2026 the golodsyz authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GOLODSYZ_FP_HPP
#define GOLODSYZ_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace golodsyz {

/// Arithmetic in the prime field F_p. The modulus is a session-wide
/// constant (NTL-style context): set it once before constructing elements.
namespace fpctx {
void set_prime(std::uint64_t p);  // throws std::invalid_argument unless p is an odd prime
std::uint64_t prime();
bool is_prime(std::uint64_t n);
}  // namespace fpctx

class Fp {
 public:
  Fp() : v_(0) {}
  explicit Fp(std::int64_t n) {
    std::int64_t p = static_cast<std::int64_t>(fpctx::prime());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static Fp from_raw(std::uint32_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }

  std::uint32_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Residue in the symmetric range (-p/2, p/2], used for printing.
  std::int64_t symmetric() const {
    std::int64_t p = static_cast<std::int64_t>(fpctx::prime());
    std::int64_t r = v_;
    return (r > p / 2) ? r - p : r;
  }

  Fp operator+(Fp o) const {
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    std::uint64_t p = fpctx::prime();
    if (s >= p) s -= p;
    return from_raw(static_cast<std::uint32_t>(s));
  }
  Fp operator-(Fp o) const {
    std::uint64_t p = fpctx::prime();
    std::uint64_t s = static_cast<std::uint64_t>(v_) + p - o.v_;
    if (s >= p) s -= p;
    return from_raw(static_cast<std::uint32_t>(s));
  }
  Fp operator-() const {
    if (v_ == 0) return *this;
    return from_raw(static_cast<std::uint32_t>(fpctx::prime() - v_));
  }
  Fp operator*(Fp o) const {
    std::uint64_t prod = static_cast<std::uint64_t>(v_) * o.v_;
    return from_raw(static_cast<std::uint32_t>(prod % fpctx::prime()));
  }
  Fp inv() const;  // throws std::domain_error on zero
  Fp operator/(Fp o) const { return *this * o.inv(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  bool operator==(Fp o) const { return v_ == o.v_; }
  bool operator!=(Fp o) const { return v_ != o.v_; }

 private:
  std::uint32_t v_;
};

Fp fp_pow(Fp base, std::uint64_t e);

}  // namespace golodsyz

#endif  // GOLODSYZ_FP_HPP
