#include "flaghom/poly.hpp"
#include "flaghom/errors.hpp"

#include <algorithm>
#include <numeric>

namespace flaghom {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int deg, long long c) {
    if (c == 0) return IntPoly();
    std::vector<long long> v(static_cast<size_t>(deg) + 1, 0);
    v.back() = c;
    return IntPoly(std::move(v));
}

long long IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<long long> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::inflate(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<long long> v((coeffs_.size() - 1) * static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<size_t>(k)] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw InvariantError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    std::vector<long long> rem = coeffs_;
    const auto& dc = d.coeffs_;
    if (rem.size() < dc.size())
        throw InvariantError("polynomial division is not exact: " + to_string() + " / " + d.to_string());
    std::vector<long long> quot(rem.size() - dc.size() + 1, 0);
    for (size_t k = quot.size(); k-- > 0;) {
        long long lead = rem[k + dc.size() - 1];
        if (lead % dc.back() != 0)
            throw InvariantError("polynomial division is not exact: " + to_string() + " / " + d.to_string());
        long long q = lead / dc.back();
        quot[k] = q;
        if (q != 0)
            for (size_t j = 0; j < dc.size(); ++j) rem[k + j] -= q * dc[j];
    }
    for (long long r : rem)
        if (r != 0)
            throw InvariantError("polynomial division is not exact: " + to_string() + " / " + d.to_string());
    return IntPoly(std::move(quot));
}

long long IntPoly::eval(long long x) const {
    long long acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        long long c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) {
            out += (c > 0) ? " + " : " - ";
            c = std::abs(c);
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPoly q_int(int n) {
    if (n < 0) throw InvariantError("q_int of negative argument");
    return IntPoly(std::vector<long long>(static_cast<size_t>(n), 1));
}

IntPoly q_factorial(int n) {
    IntPoly p = IntPoly::one();
    for (int k = 2; k <= n; ++k) p = p * q_int(k);
    return p;
}

IntPoly q_multinomial(int n, const std::vector<int>& parts, int power) {
    int used = std::accumulate(parts.begin(), parts.end(), 0);
    if (used > n) throw InvariantError("q_multinomial: parts exceed n");
    IntPoly num = q_factorial(n);
    IntPoly den = q_factorial(n - used);
    for (int p : parts) den = den * q_factorial(p);
    IntPoly q = num.divide_exact(den);
    return power == 1 ? q : q.inflate(power);
}

} // namespace flaghom
