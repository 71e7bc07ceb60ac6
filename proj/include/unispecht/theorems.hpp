#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unispecht/charpoly.hpp"
#include "unispecht/partition.hpp"

namespace unispecht {

// A size-k selection from the eigenvalue multiset of a class-mu permutation
// on the standard module: r-1 copies of 1 plus, per part mu_i, the
// nontrivial mu_i-th roots of unity.  part = -1 selects from the pool of
// unit eigenvalues (exponent 0); otherwise exponent e in [1, mu_part - 1]
// names the eigenvalue z_{mu_part}^e.  The selected eigenvalues multiply
// to 1, which witness_valid re-checks in exact arithmetic.
struct Witness {
    unsigned n = 0;
    unsigned k = 0;
    Partition mu;
    std::vector<std::pair<int, std::uint64_t>> picks;
    bool via_search = false; // the constructive recipe failed; found by search

    std::string str() const;
};

// true iff the picks are k distinct positions of the eigenvalue multiset
// whose exponents sum to an integer (product of the roots is exactly 1).
bool witness_valid(const Witness& w);

// Constructive witness that a class-mu permutation has eigenvalue 1 on the
// k-th exterior power of the standard module.  Hypotheses: n >= 7,
// 2 <= k <= (n-1)/2, mu partitions n.  Falls back to exhaustive search if
// the recipe ever collides, marking via_search.
Witness witness_subset(unsigned n, unsigned k, const Partition& mu);

struct TheoremReport {
    std::string name;
    std::string range;
    bool passed = false;
    std::optional<std::string> counterexample;
};

// Hook-shape family (CLI suite "gamma"): the standard module is never
// unisingular with (n) among the offenders; (n-k,1^k) is unisingular for
// k = 2..n-3; (2,1^{n-2}) is unisingular iff n is even; and the witness
// construction is valid across its whole hypothesis range.
std::vector<TheoremReport> verify_hook_family(unsigned n_max);

// Two-column family (CLI suite "theorem13"): (2,2,1^{n-4}) is unisingular
// iff n is even; for odd n the offender is exactly (n-2,2); for even n
// every odd class has eigenvalue -1 on S^{(n-2,2)}, equivalently the
// pair-module multiplicity of -1 exceeds the even-part count.
TheoremReport verify_two_column_family(unsigned n_max);

// CLI suite "emu": on odd classes, the natural module has eigenvalue -1
// with multiplicity exactly the number of even parts, which is odd.
TheoremReport verify_minus_one_rule(unsigned n_max);

// CLI suite "single-offender": every non-unisingular S^lambda other than
// the sign module has exactly one offending class.  Reported as a finding.
TheoremReport verify_single_offender(unsigned n_max);

// The 768-dimensional staircase module S^(4,3,2,1) of S_10, decided by the
// character route.
UnisingularVerdict resolve_open_case();

inline constexpr unsigned kDefaultFamilyMaxN = 12;
inline constexpr unsigned kDefaultSingleOffenderMaxN = 10;

} // namespace unispecht
