#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flaghom {

// Dense integer polynomial in one variable t.  coeffs[k] is the coefficient
// of t^k; the representation is kept trimmed (no trailing zeros), so the zero
// polynomial is the empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<long long> c) : coeffs_(std::move(c)) { trim(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly monomial(int deg, long long c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(int k) const;
    const std::vector<long long>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

    // t -> t^k substitution.
    IntPoly inflate(int k) const;

    // Exact division; throws InvariantError if the remainder is nonzero.
    IntPoly divide_exact(const IntPoly& d) const;

    long long eval(long long x) const;
    std::string to_string() const; // "t^7 + 2t^4 + 1" style, descending powers

private:
    void trim();
    std::vector<long long> coeffs_;
};

// 1 + t + ... + t^(n-1)
IntPoly q_int(int n);
// q-factorial [n]_t!
IntPoly q_factorial(int n);
// Gaussian multinomial [n; parts]_t with sum(parts) <= n (an implicit part
// n - sum(parts) is appended), evaluated at t^power.
IntPoly q_multinomial(int n, const std::vector<int>& parts, int power = 1);

} // namespace flaghom
