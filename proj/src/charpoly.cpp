#include "unispecht/charpoly.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "unispecht/character.hpp"
#include "unispecht/errors.hpp"

namespace unispecht {

CycloProduct natural_perm_charpoly(const Partition& mu) {
    CycloProduct out;
    for (unsigned part : mu.parts())
        out.mul_xn_minus_one(part);
    return out;
}

CycloProduct standard_charpoly(const Partition& mu) {
    if (mu.n() < 2)
        throw argument_error("standard_charpoly: module is zero-dimensional for n < 2");
    CycloProduct out = natural_perm_charpoly(mu);
    CycloProduct phi1;
    phi1.mul_phi(1);
    out.divide_exact(phi1);
    return out;
}

std::uint64_t fixed_space_dim(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw argument_error("fixed_space_dim: lambda and mu partition different n");
    std::uint64_t order = class_order(mu);
    // pi^k and pi^gcd(k, order) are conjugate, so group the sum by divisor
    mpz_class sum = 0;
    for (std::uint64_t d : divisors(order))
        sum += mpz_class(euler_phi(order / d)) * mn_character(lambda, power_cycle_type(mu, d));
    mpz_class q = sum / mpz_class(static_cast<unsigned long>(order));
    if (q * mpz_class(static_cast<unsigned long>(order)) != sum || sum < 0)
        throw internal_error("fixed_space_dim: character average is not a nonnegative integer");
    if (!q.fits_ulong_p())
        throw internal_error("fixed_space_dim: result exceeds 64 bits");
    return q.get_ui();
}

CycloProduct charpoly(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw argument_error("charpoly: lambda and mu partition different n");
    std::uint64_t order = class_order(mu);
    CycloProduct out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> solved; // (d, a_d)
    for (std::uint64_t d : divisors(order)) {
        std::uint64_t fix = fixed_space_dim(lambda, power_cycle_type(mu, d));
        std::uint64_t acc = 0;
        for (auto [e, a] : solved)
            if (d % e == 0)
                acc += a * euler_phi(e);
        if (fix < acc || (fix - acc) % euler_phi(d) != 0)
            throw internal_error("charpoly: triangular solve produced an invalid multiplicity at d=" +
                                 std::to_string(d));
        std::uint64_t a = (fix - acc) / euler_phi(d);
        solved.emplace_back(d, a);
        if (a)
            out.mul_phi(d, a);
    }
    return out;
}

std::uint64_t minus_one_multiplicity(const Partition& lambda, const Partition& mu) {
    if (class_order(mu) % 2 != 0)
        return 0;
    // a_2 = fix(2) - a_1, with fix(2) the fixed dimension of the square class
    std::uint64_t a1 = fixed_space_dim(lambda, mu);
    std::uint64_t fix2 = fixed_space_dim(lambda, power_cycle_type(mu, 2));
    if (fix2 < a1)
        throw internal_error("minus_one_multiplicity: fix(2) < fix(1)");
    return fix2 - a1;
}

namespace {

UnisingularVerdict verdict_over(const Partition& lambda, bool even_classes_only) {
    UnisingularVerdict v;
    v.lambda = lambda;
    v.dimension = specht_dimension(lambda);
    for (const Partition& mu : enumerate_partitions(lambda.n())) {
        if (even_classes_only && class_parity(mu) != 1)
            continue;
        if (fixed_space_dim(lambda, mu) == 0)
            v.offending.push_back(mu);
    }
    v.unisingular = v.offending.empty();
    return v;
}

} // namespace

UnisingularVerdict verdict(const Partition& lambda) {
    if (lambda.n() < 2)
        throw argument_error("verdict: requires n >= 2");
    return verdict_over(lambda, false);
}

UnisingularVerdict verdict_alternating(const Partition& lambda) {
    if (lambda.n() < 3)
        throw argument_error("verdict_alternating: requires n >= 3");
    return verdict_over(lambda, true);
}

bool family_nonunisingular(unsigned n, const Partition& lambda) {
    if (lambda == Partition(std::vector<unsigned>(n, 1)))
        return true;
    if (n >= 2 && lambda == Partition{n - 1, 1})
        return true;
    if (n % 2 == 1) {
        std::vector<unsigned> col{2};
        col.insert(col.end(), n - 2, 1);
        if (n >= 3 && lambda == Partition(col))
            return true;
        if (n >= 5) {
            std::vector<unsigned> cols{2, 2};
            cols.insert(cols.end(), n - 4, 1);
            if (lambda == Partition(cols))
                return true;
        }
    }
    return false;
}

ScanReport make_scan_report(unsigned n, std::vector<UnisingularVerdict> verdicts) {
    ScanReport report;
    report.n = n;
    report.partition_count = verdicts.size();
    report.verdicts = std::move(verdicts);
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        if (report.verdicts[i].unisingular)
            ++report.unisingular_count;
        else if (!family_nonunisingular(n, report.verdicts[i].lambda))
            report.exceptional.push_back(i);
    }
    return report;
}

ScanReport scan(unsigned n, unsigned jobs) {
    if (n < 2 || n > kMaxScanN)
        throw argument_error("scan: n must lie in [2, " + std::to_string(kMaxScanN) + "]");
    std::vector<Partition> shapes = enumerate_partitions(n);
    std::vector<UnisingularVerdict> verdicts(shapes.size());

    if (jobs <= 1) {
        for (std::size_t i = 0; i < shapes.size(); ++i)
            verdicts[i] = verdict(shapes[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= shapes.size())
                        return;
                    verdicts[i] = verdict(shapes[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(shapes.size()));
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
    return make_scan_report(n, std::move(verdicts));
}

} // namespace unispecht
