#include "unispecht/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "unispecht/errors.hpp"

namespace unispecht {

namespace {

using Parts = std::vector<unsigned>;
using Key = std::pair<Parts, Parts>;

std::map<Key, mpz_class>& memo() {
    static std::map<Key, mpz_class> m;
    return m;
}
std::shared_mutex& memo_mutex() {
    static std::shared_mutex m;
    return m;
}

// chi^lambda(mu) via first-column hook lengths (beta numbers): removing a
// border strip of length t moves one beta number down by t; the sign is
// (-1)^(number of beta numbers jumped over), which equals the strip height.
mpz_class mn_eval(const Parts& lam, const Parts& mu) {
    if (mu.empty())
        return lam.empty() ? 1 : 0;
    {
        std::shared_lock lock(memo_mutex());
        auto it = memo().find({lam, mu});
        if (it != memo().end())
            return it->second;
    }

    unsigned t = mu.front();
    Parts rest(mu.begin() + 1, mu.end());
    std::size_t s = lam.size();
    std::vector<long> betas(s);
    for (std::size_t i = 0; i < s; ++i)
        betas[i] = static_cast<long>(lam[i]) + static_cast<long>(s - 1 - i);

    mpz_class total = 0;
    for (std::size_t i = 0; i < s; ++i) {
        long nb = betas[i] - static_cast<long>(t);
        if (nb < 0 || std::find(betas.begin(), betas.end(), nb) != betas.end())
            continue;
        int crossings = 0;
        std::vector<long> nbetas;
        nbetas.reserve(s);
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i)
                continue;
            if (betas[j] > nb && betas[j] < betas[i])
                ++crossings;
            nbetas.push_back(betas[j]);
        }
        nbetas.push_back(nb);
        std::sort(nbetas.rbegin(), nbetas.rend());
        Parts nlam;
        nlam.reserve(s);
        for (std::size_t j = 0; j < s; ++j) {
            long part = nbetas[j] - static_cast<long>(s - 1 - j);
            if (part > 0)
                nlam.push_back(static_cast<unsigned>(part));
        }
        mpz_class sub = mn_eval(nlam, rest);
        if (crossings % 2)
            total -= sub;
        else
            total += sub;
    }

    std::unique_lock lock(memo_mutex());
    return memo().emplace(Key{lam, mu}, std::move(total)).first->second;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace

mpz_class mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw argument_error("mn_character: lambda and mu partition different n");
    return mn_eval(lambda.parts(), mu.parts());
}

mpz_class permutation_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw argument_error("permutation_character: lambda and mu partition different n");

    // group the cycles by length
    std::vector<std::pair<unsigned, unsigned>> groups; // (length, count)
    for (unsigned part : mu.parts()) {
        if (!groups.empty() && groups.back().first == part)
            ++groups.back().second;
        else
            groups.emplace_back(part, 1);
    }

    std::vector<unsigned> caps(lambda.parts());
    mpz_class total = 0;

    // distribute each group's (interchangeable-length, distinct-support)
    // cycles over the rows; a full assignment fixes exactly one tabloid
    auto place = [&](auto&& self, std::size_t g, std::size_t row, unsigned left,
                     const mpz_class& ways) -> void {
        if (g == groups.size()) {
            total += ways;
            return;
        }
        if (left == 0) {
            std::size_t ng = g + 1;
            unsigned nleft = ng < groups.size() ? groups[ng].second : 0;
            self(self, ng, 0, nleft, ways);
            return;
        }
        if (row == caps.size())
            return;
        unsigned len = groups[g].first;
        unsigned fit = std::min(left, caps[row] / len);
        for (unsigned c = 0; c <= fit; ++c) {
            caps[row] -= c * len;
            self(self, g, row + 1, left - c, ways * binomial(left, c));
            caps[row] += c * len;
        }
    };
    place(place, 0, 0, groups.empty() ? 0 : groups[0].second, 1);
    return total;
}

} // namespace unispecht
