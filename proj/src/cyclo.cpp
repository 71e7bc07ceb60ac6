#include "unispecht/cyclo.hpp"

#include <algorithm>
#include <mutex>

#include "unispecht/errors.hpp"

namespace unispecht {

std::uint64_t euler_phi(std::uint64_t d) {
    std::uint64_t result = d;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0)
                d /= p;
        }
    }
    if (d > 1)
        result -= result / d;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t CycloProduct::multiplicity(std::uint64_t d) const {
    auto it = factors_.find(d);
    return it == factors_.end() ? 0 : it->second;
}

void CycloProduct::mul_phi(std::uint64_t d, std::uint64_t count) {
    if (count)
        factors_[d] += count;
}

void CycloProduct::mul_xn_minus_one(std::uint64_t L, std::uint64_t count) {
    for (std::uint64_t d : divisors(L))
        mul_phi(d, count);
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& other) {
    for (auto [d, m] : other.factors_)
        factors_[d] += m;
    return *this;
}

void CycloProduct::divide_exact(const CycloProduct& other, std::uint64_t count) {
    for (auto [d, m] : other.factors_) {
        auto it = factors_.find(d);
        std::uint64_t need = m * count;
        if (it == factors_.end() || it->second < need)
            throw internal_error("CycloProduct::divide_exact: negative multiplicity at Phi_" +
                                 std::to_string(d));
        it->second -= need;
        if (it->second == 0)
            factors_.erase(it);
    }
}

bool CycloProduct::divides(const CycloProduct& other, std::uint64_t count) const {
    for (auto [d, m] : factors_)
        if (other.multiplicity(d) < m * count)
            return false;
    return true;
}

mpz_class CycloProduct::degree() const {
    mpz_class deg = 0;
    for (auto [d, m] : factors_)
        deg += mpz_class(euler_phi(d)) * m;
    return deg;
}

std::string CycloProduct::str() const {
    if (factors_.empty())
        return "1";
    std::string out;
    for (auto [d, m] : factors_) {
        if (!out.empty())
            out += " * ";
        out += "Phi_" + std::to_string(d);
        if (m > 1)
            out += "^" + std::to_string(m);
    }
    return out;
}

CycloProduct negate_roots(const CycloProduct& p) {
    CycloProduct out;
    for (auto [d, m] : p.factors()) {
        std::uint64_t nd;
        if (d == 1)
            nd = 2;
        else if (d == 2)
            nd = 1;
        else if (d % 2 == 1)
            nd = 2 * d;
        else if (d % 4 == 2)
            nd = d / 2;
        else
            nd = d;
        out.mul_phi(nd, m);
    }
    return out;
}

namespace {

// numerator / divisor, exact division of integer polynomials
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& div) {
    if (num.size() < div.size())
        throw internal_error("poly_div_exact: degree underflow");
    std::vector<mpz_class> quot(num.size() - div.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class q = num[i + div.size() - 1] / div.back();
        if (q * div.back() != num[i + div.size() - 1])
            throw internal_error("poly_div_exact: inexact leading division");
        quot[i] = q;
        for (std::size_t j = 0; j < div.size(); ++j)
            num[i + j] -= q * div[j];
    }
    for (const auto& c : num)
        if (c != 0)
            throw internal_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_coeffs(std::uint64_t d) {
    static std::map<std::uint64_t, std::vector<mpz_class>> memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto compute = [&](auto&& self, std::uint64_t k) -> const std::vector<mpz_class>& {
        auto it = memo.find(k);
        if (it != memo.end())
            return it->second;
        // x^k - 1 divided by all proper-divisor cyclotomics
        std::vector<mpz_class> num(k + 1);
        num[0] = -1;
        num[k] = 1;
        for (std::uint64_t e : divisors(k))
            if (e != k)
                num = poly_div_exact(std::move(num), self(self, e));
        return memo.emplace(k, std::move(num)).first->second;
    };
    return compute(compute, d);
}

std::vector<mpz_class> expand(const CycloProduct& p) {
    std::vector<mpz_class> out{1};
    for (auto [d, m] : p.factors())
        for (std::uint64_t i = 0; i < m; ++i)
            out = poly_mul(out, cyclotomic_coeffs(d));
    return out;
}

std::string polynomial_str(const std::vector<mpz_class>& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const mpz_class& c = coeffs[i];
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1)
                out += a.get_str() + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace unispecht
