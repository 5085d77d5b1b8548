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

#include "golodsyz/fp.hpp"

namespace golodsyz {

namespace fpctx {

namespace {
std::uint64_t g_prime = 101;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void set_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(p));
  }
  if (p > (1u << 30)) {
    throw std::invalid_argument("field modulus too large");
  }
  g_prime = p;
}

std::uint64_t prime() { return g_prime; }

}  // namespace fpctx

Fp fp_pow(Fp base, std::uint64_t e) {
  Fp acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inv() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  return fp_pow(*this, fpctx::prime() - 2);
}

}  // namespace golodsyz
