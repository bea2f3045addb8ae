#pragma once

#include <cstdint>
#include <vector>

#include "twc/field.hpp"

namespace twc::cosets {

// Orbit of a residue under multiplication by p modulo n.
struct CyclotomicCoset {
  std::uint32_t leader = 0;               // smallest member
  std::vector<std::uint32_t> members;     // sorted ascending
  int size() const { return static_cast<int>(members.size()); }
};

CyclotomicCoset coset(const field::FieldConfig& F, std::uint32_t a);

bool cosets_disjoint(const field::FieldConfig& F, std::uint32_t u, std::uint32_t v);

// One coset per leader, covering every residue 0..n-1 exactly once.
std::vector<CyclotomicCoset> all_cosets(const field::FieldConfig& F);

// Minimal polynomial of alpha^{-a} over GF(p): product of (x - alpha^{-k})
// over the coset of a, expanded in GF(q)[x] and projected down to GF(p).
Polynomial minimal_polynomial(const field::FieldConfig& F, std::uint32_t a);

// m_u(x) * m_v(x); the cosets of u and v must be disjoint.
Polynomial parity_check_polynomial(const field::FieldConfig& F, std::uint32_t u,
                                   std::uint32_t v);

}  // namespace twc::cosets
