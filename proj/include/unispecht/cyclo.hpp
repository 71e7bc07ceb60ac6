#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unispecht {

std::uint64_t euler_phi(std::uint64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t n); // ascending

// An integer polynomial kept permanently in cyclotomic-factored form:
// a map d -> multiplicity of Phi_d.  Zero multiplicities are never stored,
// so equality of the maps is equality of the polynomials.
class CycloProduct {
public:
    CycloProduct() = default;

    std::uint64_t multiplicity(std::uint64_t d) const;
    const std::map<std::uint64_t, std::uint64_t>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    void mul_phi(std::uint64_t d, std::uint64_t count = 1);
    // multiply by (x^L - 1)^count = prod_{d | L} Phi_d^count
    void mul_xn_minus_one(std::uint64_t L, std::uint64_t count = 1);
    CycloProduct& operator*=(const CycloProduct& other);
    friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) {
        a *= b;
        return a;
    }
    // subtract count * other from the multiplicity map; going negative is an
    // internal_error (exact arithmetic cannot produce it from correct inputs)
    void divide_exact(const CycloProduct& other, std::uint64_t count = 1);
    bool divides(const CycloProduct& other, std::uint64_t count = 1) const;

    mpz_class degree() const;

    bool operator==(const CycloProduct&) const = default;

    std::string str() const; // "Phi_1^2 * Phi_3 * Phi_5", "1" when empty

private:
    std::map<std::uint64_t, std::uint64_t> factors_;
};

// The polynomial whose roots are the negatives of p's roots.  On indices:
// Phi_1 <-> Phi_2, Phi_d <-> Phi_2d for odd d >= 3, Phi_d fixed for 4 | d.
// An involution; preserves degree.
CycloProduct negate_roots(const CycloProduct& p);

// Coefficients of Phi_d, constant term first.  Memoized.
const std::vector<mpz_class>& cyclotomic_coeffs(std::uint64_t d);

// Expand the product to a dense coefficient vector, constant term first.
std::vector<mpz_class> expand(const CycloProduct& p);

// Render an expanded polynomial as "x^5 - x^3 + 2*x - 1".
std::string polynomial_str(const std::vector<mpz_class>& coeffs);

} // namespace unispecht
