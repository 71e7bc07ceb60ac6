#pragma once

#include <gmpxx.h>

#include "unispecht/partition.hpp"

namespace unispecht {

// Irreducible character chi^lambda(mu) by the Murnaghan-Nakayama rule,
// stripping the largest part of mu first.  Values are memoized process-wide
// behind an idempotent insert-only map; concurrent evaluation is safe.
mpz_class mn_character(const Partition& lambda, const Partition& mu);

// Trace of a class-mu permutation on the permutation module M^lambda:
// the number of lambda-tabloids it fixes, counted by distributing the
// cycles of mu among the rows of lambda.
mpz_class permutation_character(const Partition& lambda, const Partition& mu);

} // namespace unispecht
