#include "unispecht/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "unispecht/errors.hpp"

namespace unispecht {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    if (n == 0)
        throw argument_error("enumerate_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<unsigned> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // next partition in reverse-lexicographic order
        std::size_t k = cur.size();
        while (k > 0 && cur[k - 1] == 1)
            --k;
        if (k == 0)
            break;
        unsigned rem = static_cast<unsigned>(cur.size() - k) + 1;
        cur.resize(k);
        cur[k - 1] -= 1;
        unsigned cap = cur[k - 1];
        while (rem > 0) {
            unsigned next = std::min(rem, cap);
            cur.push_back(next);
            rem -= next;
        }
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<unsigned> out;
    if (lambda.empty())
        return Partition{};
    out.reserve(lambda[0]);
    for (unsigned j = 1; j <= lambda[0]; ++j) {
        unsigned count = 0;
        for (unsigned part : lambda.parts())
            if (part >= j)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

int class_parity(const Partition& mu) {
    return (mu.n() - mu.rows()) % 2 == 0 ? 1 : -1;
}

std::uint64_t class_order(const Partition& mu) {
    std::uint64_t m = 1;
    for (unsigned part : mu.parts())
        m = std::lcm(m, static_cast<std::uint64_t>(part));
    return m;
}

Partition power_cycle_type(const Partition& mu, std::uint64_t k) {
    if (k == 0)
        return Partition(std::vector<unsigned>(mu.n(), 1));
    std::vector<unsigned> out;
    out.reserve(mu.n());
    for (unsigned part : mu.parts()) {
        auto g = static_cast<unsigned>(std::gcd<std::uint64_t>(part, k));
        for (unsigned i = 0; i < g; ++i)
            out.push_back(part / g);
    }
    return Partition(std::move(out));
}

mpz_class factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class specht_dimension(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (unsigned j = 0; j < lambda[i]; ++j) {
            unsigned arm = lambda[i] - j - 1;
            unsigned leg = conj[j] - static_cast<unsigned>(i) - 1;
            hooks *= arm + leg + 1;
        }
    mpz_class num = factorial(lambda.n());
    if (!mpz_divisible_p(num.get_mpz_t(), hooks.get_mpz_t()))
        throw internal_error("specht_dimension: hook product does not divide n!");
    return num / hooks;
}

mpz_class tabloid_count(const Partition& lambda) {
    mpz_class out = factorial(lambda.n());
    for (unsigned part : lambda.parts())
        out /= factorial(part);
    return out;
}

bool dominance_leq(const Partition& lo, const Partition& hi) {
    if (lo.n() != hi.n())
        throw argument_error("dominance_leq: partitions of different n");
    std::uint64_t slo = 0, shi = 0;
    std::size_t len = std::max(lo.rows(), hi.rows());
    for (std::size_t i = 0; i < len; ++i) {
        slo += i < lo.rows() ? lo[i] : 0;
        shi += i < hi.rows() ? hi[i] : 0;
        if (slo > shi)
            return false;
    }
    return true;
}

namespace {

using PartsPair = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

// Every SSYT decomposes uniquely into horizontal strips, peeling the largest
// letter first: the cells holding the last content part form a horizontal
// strip at the rim.  Depth-first over the strip placements, memoized.
std::uint64_t kostka_rec(const std::vector<unsigned>& shape,
                         const std::vector<unsigned>& content,
                         std::map<PartsPair, std::uint64_t>& memo) {
    if (content.empty())
        return shape.empty() ? 1 : 0;
    auto it = memo.find({shape, content});
    if (it != memo.end())
        return it->second;

    unsigned strip = content.back();
    std::vector<unsigned> rest(content.begin(), content.end() - 1);
    std::uint64_t total = 0;
    std::vector<unsigned> reduced(shape);

    // Choose how many cells the strip removes from each row.  Row i may
    // shrink to no less than shape[i+1] (at most one cell per column), which
    // also keeps the reduced shape weakly decreasing.
    auto dfs = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == shape.size() || left == 0) {
            if (left != 0)
                return;
            std::vector<unsigned> next(reduced);
            while (!next.empty() && next.back() == 0)
                next.pop_back();
            total += kostka_rec(next, rest, memo);
            return;
        }
        unsigned lo_bound = i + 1 < shape.size() ? shape[i + 1] : 0;
        unsigned max_take = shape[i] - lo_bound;
        for (unsigned take = 0; take <= std::min(max_take, left); ++take) {
            reduced[i] = shape[i] - take;
            self(self, i + 1, left - take);
            reduced[i] = shape[i];
        }
    };
    dfs(dfs, 0, strip);
    memo.insert({{shape, content}, total});
    return total;
}

} // namespace

std::uint64_t kostka(const Partition& shape, const Partition& content) {
    if (shape.n() != content.n())
        throw argument_error("kostka: shape and content have different n");
    static std::map<PartsPair, std::uint64_t> memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return kostka_rec(shape.parts(), content.parts(), memo);
}

} // namespace unispecht
