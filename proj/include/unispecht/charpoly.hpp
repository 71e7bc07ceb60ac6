#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "unispecht/cyclo.hpp"
#include "unispecht/partition.hpp"

namespace unispecht {

// Characteristic polynomial of a class-mu permutation on the natural
// n-dimensional permutation module: prod_j (x^{mu_j} - 1).
CycloProduct natural_perm_charpoly(const Partition& mu);

// Characteristic polynomial on the standard (n-1)-dimensional module:
// the natural one with a single Phi_1 factor removed.  Requires n >= 2.
CycloProduct standard_charpoly(const Partition& mu);

// Multiplicity of eigenvalue 1 of a class-mu permutation on the Specht
// module S^lambda: the character averaged over the cyclic group it
// generates.  The average is asserted integral.
std::uint64_t fixed_space_dim(const Partition& lambda, const Partition& mu);

// Full characteristic polynomial of the class mu on S^lambda, as a
// cyclotomic product.  Solved triangularly over the divisors d of the class
// order: fix(d) = sum_{e | d} a_e phi(e) where fix(d) is the fixed-space
// dimension of the d-th power class.
CycloProduct charpoly(const Partition& lambda, const Partition& mu);

// Multiplicity of eigenvalue -1 (the Phi_2 multiplicity of charpoly).
std::uint64_t minus_one_multiplicity(const Partition& lambda, const Partition& mu);

struct UnisingularVerdict {
    Partition lambda;
    mpz_class dimension;
    bool unisingular = false;
    std::vector<Partition> offending; // classes with no eigenvalue 1, scan order

    bool operator==(const UnisingularVerdict&) const = default;
};

// Verdict over all classes of S_n (n >= 2).
UnisingularVerdict verdict(const Partition& lambda);

// Verdict over the even classes only, i.e. for the restriction to A_n
// treated as a single (possibly reducible) module.  Requires n >= 3.
UnisingularVerdict verdict_alternating(const Partition& lambda);

// Non-unisingular shapes known in closed form: (1^n), (n-1,1), and for odd
// n also (2,1^{n-2}) and (2,2,1^{n-4}).  Everything non-unisingular outside
// these is reported as exceptional by scan.
bool family_nonunisingular(unsigned n, const Partition& lambda);

struct ScanReport {
    unsigned n = 0;
    std::uint64_t partition_count = 0;
    std::uint64_t unisingular_count = 0;
    std::vector<UnisingularVerdict> verdicts; // enumeration order
    std::vector<std::size_t> exceptional;     // indices into verdicts

    bool operator==(const ScanReport&) const = default;
};

inline constexpr unsigned kMaxScanN = 24;

// Assemble a report from per-shape verdicts already in enumeration order
// (counts and the exceptional list are derived here).
ScanReport make_scan_report(unsigned n, std::vector<UnisingularVerdict> verdicts);

// Verdicts for every lambda of n, fanned out over `jobs` workers; the
// report is assembled in enumeration order regardless of job count.
ScanReport scan(unsigned n, unsigned jobs = 1);

} // namespace unispecht
