#pragma once

// Exhaustive finite-field census for Sp(V1) × Sp(V2) acting on the
// Lagrangians of V1 ⊕ V2. Everything is enumerated: the Lagrangians, both
// symplectic groups, and the orbit partition.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lagorb/symplectic.hpp"

namespace lagorb {

struct CensusOrbit {
  std::size_t size = 0;
  std::size_t invariant_i = 0;

  friend bool operator==(const CensusOrbit&, const CensusOrbit&) = default;
};

struct CensusReport {
  std::uint32_t p = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t total_lagrangians = 0;
  std::size_t group_order = 0;
  std::vector<CensusOrbit> orbits;
  bool agreement = false;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Desk-scale guards: ambient dimension, field size, and enumerated work.
inline constexpr std::size_t kMaxCensusDim = 6;
inline constexpr std::uint32_t kMaxCensusPrime = 3;
inline constexpr std::uint64_t kMaxGroupOrder = 60000;
inline constexpr std::uint64_t kMaxCensusWork = 5000000;

/// |Sp(2n, F_p)| = p^{n²} Π_{k=1..n} (p^{2k} − 1)
std::uint64_t sp_order(std::size_t n, std::uint32_t p);

/// Number of Lagrangians in a 2n-dimensional symplectic space over F_p:
/// Π_{k=1..n} (p^k + 1).
std::uint64_t lagrangian_count(std::size_t n, std::uint32_t p);

std::vector<FpSubspace> enumerate_lagrangians(const SymplecticSpace<Zp>& v);

/// Closure of all transvections under multiplication, in BFS order from the
/// identity.
std::vector<FpMat> enumerate_sp(const SymplecticSpace<Zp>& v);

CensusReport orbit_census(std::size_t m, std::size_t n, std::uint32_t p, std::size_t threads = 1);

}  // namespace lagorb
