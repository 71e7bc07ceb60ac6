#include "unispecht/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "unispecht/errors.hpp"

namespace unispecht {

namespace {

// representative of C_mu with cycles on consecutive integers, 0-based
std::vector<unsigned> class_representative(const Partition& mu) {
    std::vector<unsigned> pi(mu.n());
    unsigned start = 0;
    for (unsigned part : mu.parts()) {
        for (unsigned i = 0; i < part; ++i)
            pi[start + i] = start + (i + 1) % part;
        start += part;
    }
    return pi;
}

} // namespace

std::vector<std::uint64_t> tabloid_orbit_lengths(const Partition& lambda,
                                                 const Partition& mu,
                                                 std::uint64_t budget) {
    if (lambda.n() != mu.n())
        throw argument_error("tabloid_orbit_lengths: lambda and mu partition different n");
    mpz_class count = tabloid_count(lambda);
    if (count > budget)
        throw resource_error("tabloid_orbit_lengths: " + count.get_str() +
                             " tabloids exceed budget " + std::to_string(budget));

    const unsigned n = lambda.n();
    std::vector<unsigned> pi = class_representative(mu);

    // a tabloid is the row-index coloring of {1..n}; rows are sets, so the
    // coloring itself is the canonical form
    std::string coloring(n, '\0');
    {
        unsigned pos = 0;
        for (std::size_t r = 0; r < lambda.rows(); ++r)
            for (unsigned i = 0; i < lambda[r]; ++i)
                coloring[pos++] = static_cast<char>(r);
    }
    std::sort(coloring.begin(), coloring.end());

    std::unordered_set<std::string> visited;
    visited.reserve(count.get_ui() * 2);
    std::vector<std::uint64_t> lengths;
    std::string next(n, '\0');
    do {
        if (visited.contains(coloring))
            continue;
        std::string cur = coloring;
        std::uint64_t len = 0;
        do {
            visited.insert(cur);
            for (unsigned x = 0; x < n; ++x)
                next[pi[x]] = cur[x];
            cur.swap(next);
            ++len;
        } while (cur != coloring);
        lengths.push_back(len);
    } while (std::next_permutation(coloring.begin(), coloring.end()));

    std::sort(lengths.begin(), lengths.end());
    std::uint64_t total = 0;
    for (std::uint64_t l : lengths)
        total += l;
    if (mpz_class(static_cast<unsigned long>(total)) != count)
        throw internal_error("tabloid_orbit_lengths: orbit lengths do not sum to the tabloid count");
    return lengths;
}

CycloProduct perm_module_charpoly(const Partition& lambda, const Partition& mu,
                                  std::uint64_t budget) {
    CycloProduct out;
    for (std::uint64_t len : tabloid_orbit_lengths(lambda, mu, budget))
        out.mul_xn_minus_one(len);
    return out;
}

std::vector<std::pair<Partition, CycloProduct>>
specht_charpoly_table(unsigned n, const Partition& mu, std::uint64_t budget) {
    if (n != mu.n())
        throw argument_error("specht_charpoly_table: mu does not partition n");
    std::vector<std::pair<Partition, CycloProduct>> table;
    for (const Partition& shape : enumerate_partitions(n)) {
        if (tabloid_count(shape) > budget)
            continue; // dominated shapes only need dominating ones, which are cheaper
        CycloProduct poly = perm_module_charpoly(shape, mu, budget);
        for (const auto& [above, spoly] : table) {
            std::uint64_t k = kostka(above, shape);
            if (k == 0)
                continue;
            if (!dominance_leq(shape, above))
                throw internal_error("specht_charpoly_table: enumeration order is not dominance-compatible");
            poly.divide_exact(spoly, k);
        }
        table.emplace_back(shape, std::move(poly));
    }
    return table;
}

CycloProduct specht_charpoly_oracle(const Partition& lambda, const Partition& mu,
                                    std::uint64_t budget) {
    if (tabloid_count(lambda) > budget)
        throw resource_error("specht_charpoly_oracle: tabloid count of " + lambda.str() +
                             " exceeds budget " + std::to_string(budget));
    for (auto& [shape, poly] : specht_charpoly_table(lambda.n(), mu, budget))
        if (shape == lambda)
            return poly;
    throw internal_error("specht_charpoly_oracle: shape missing from its own table");
}

CycloProduct closed_form_n22(unsigned n) {
    if (n < 5 || n % 2 == 0)
        throw argument_error("closed_form_n22: requires odd n >= 5");
    CycloProduct out;
    out.mul_xn_minus_one(n - 2, (n - 3) / 2);
    out.mul_xn_minus_one(2 * n - 4);
    out.mul_xn_minus_one(1);
    return out;
}

CycloProduct cycle_pairs_charpoly(unsigned cycle_len) {
    if (cycle_len < 2)
        throw argument_error("cycle_pairs_charpoly: cycle length must be >= 2");
    CycloProduct out;
    if (cycle_len % 2 == 0) {
        out.mul_xn_minus_one(cycle_len, cycle_len / 2 - 1);
        out.mul_xn_minus_one(cycle_len / 2);
    } else {
        out.mul_xn_minus_one(cycle_len, (cycle_len - 1) / 2);
    }
    return out;
}

} // namespace unispecht
