#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unispecht {

// A partition of n: non-increasing positive parts.  Serves both as a shape
// index (lambda) and as a cycle type / conjugacy class index (mu); fixed
// points appear explicitly as 1-parts.  The empty partition (n = 0) is a
// valid value used as the base of recursions; public enumerators never
// produce it.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    explicit Partition(std::vector<unsigned> parts); // sorts, drops zeros

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned n() const { return n_; }
    std::size_t rows() const { return parts_.size(); }
    unsigned operator[](std::size_t i) const { return parts_[i]; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const; // "(4,3,1)"

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
// Rejects n = 0.
std::vector<Partition> enumerate_partitions(unsigned n);

Partition conjugate(const Partition& lambda);

// sgn(pi) for any pi of cycle type mu: (-1)^(n - r).
int class_parity(const Partition& mu);

// Order of any pi of cycle type mu: lcm of the parts.
std::uint64_t class_order(const Partition& mu);

// Cycle type of pi^k: each part l splits into gcd(l,k) cycles of length
// l/gcd(l,k); k = 0 gives (1^n).
Partition power_cycle_type(const Partition& mu, std::uint64_t k);

mpz_class factorial(unsigned n);

// f^lambda by the hook length formula; the division is asserted exact.
mpz_class specht_dimension(const Partition& lambda);

// n!/lambda! = number of lambda-tabloids.
mpz_class tabloid_count(const Partition& lambda);

// true iff every partial sum of lo is <= the corresponding partial sum of
// hi (hi dominates lo).  Both must partition the same n.
bool dominance_leq(const Partition& lo, const Partition& hi);

// Number of semistandard Young tableaux of the given shape and content
// (rows weakly increase, columns strictly increase).  Memoized.
std::uint64_t kostka(const Partition& shape, const Partition& content);

} // namespace unispecht
