#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unispecht/cyclo.hpp"
#include "unispecht/partition.hpp"

namespace unispecht {

// Character-free route: walk the action of a fixed class representative on
// all lambda-tabloids, read off orbit lengths, and unwind Young's rule
// triangularly to recover Specht characteristic polynomials.  Used to
// certify the charpoly module, never the other way around.

inline constexpr std::uint64_t kDefaultOrbitBudget = 1'000'000;

// Orbit lengths (ascending) of the cyclic group generated by the class
// representative whose cycles occupy consecutive integers in part order.
// Throws resource_error when the tabloid count n!/lambda! exceeds budget.
std::vector<std::uint64_t> tabloid_orbit_lengths(const Partition& lambda,
                                                 const Partition& mu,
                                                 std::uint64_t budget = kDefaultOrbitBudget);

// prod over orbit lengths L of (x^L - 1); degree n!/lambda!.
CycloProduct perm_module_charpoly(const Partition& lambda, const Partition& mu,
                                  std::uint64_t budget = kDefaultOrbitBudget);

// Characteristic polynomials of the class mu on every Specht module of n
// whose tabloid count fits the budget, in enumeration (reverse-lex) order.
// Each shape's polynomial is its permutation-module polynomial minus the
// Kostka-weighted polynomials of the strictly dominating shapes.
std::vector<std::pair<Partition, CycloProduct>>
specht_charpoly_table(unsigned n, const Partition& mu,
                      std::uint64_t budget = kDefaultOrbitBudget);

CycloProduct specht_charpoly_oracle(const Partition& lambda, const Partition& mu,
                                    std::uint64_t budget = kDefaultOrbitBudget);

// Closed form for the class (n-2,2) on the tabloids of shape (n-2,2),
// odd n >= 5:  (x^{n-2}-1)^{(n-3)/2} (x^{2n-4}-1) (x-1).
CycloProduct closed_form_n22(unsigned n);

// Characteristic polynomial of an l-cycle acting on the unordered pairs of
// its own support (l >= 2): for even l, (x^l-1)^{l/2-1}(x^{l/2}-1); for odd
// l, (x^l-1)^{(l-1)/2}.  Divides the pair-tabloid polynomial of any class
// containing an l-cycle.
CycloProduct cycle_pairs_charpoly(unsigned cycle_len);

} // namespace unispecht
