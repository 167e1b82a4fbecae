#include "hha/legendre.hpp"

#include <stdexcept>

namespace hha {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(int n, const Rat& c) {
    if (n < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<Rat> v(static_cast<std::size_t>(n) + 1, 0);
    v.back() = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rat(int(k)) * coeffs_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k] += o.coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + Rat(-1) * o; }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& s, const UniPoly& p) {
    if (s == 0) return UniPoly();
    std::vector<Rat> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        const Rat a = abs(c);
        if (a != 1 || k == 0) s += rat_str(a);
        if (k > 0) {
            if (a != 1) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

UniPoly legendre(int n) {
    if (n < 0) throw std::invalid_argument("Legendre index must be >= 0");
    UniPoly prev = UniPoly::constant(1);
    if (n == 0) return prev;
    UniPoly cur = UniPoly::monomial(1);
    const UniPoly x = cur;
    for (int k = 1; k < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        UniPoly next = (Rat(1) / Rat(k + 1)) * (Rat(2 * k + 1) * (x * cur) - Rat(k) * prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly legendre_operator(const UniPoly& p) {
    const UniPoly d1 = p.derivative();
    const UniPoly d2 = d1.derivative();
    const UniPoly one_minus_x2({1, 0, -1});
    const UniPoly two_x({0, 2});
    return one_minus_x2 * d2 - two_x * d1;
}

Rat poly_inner(const UniPoly& p, const UniPoly& q) {
    const UniPoly prod = p * q;
    Rat total = 0;
    for (int k = 0; k <= prod.degree(); k += 2) total += prod.coeff(k) * Rat(2) / Rat(k + 1);
    return total;
}

TruncatedSeries genfun_truncated(int N) {
    if (N < 0) throw std::invalid_argument("series order must be >= 0");
    TruncatedSeries s;
    s.coeffs.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) s.coeffs.push_back(legendre(n));
    return s;
}

TruncatedSeries euler_operator(const TruncatedSeries& s, int r) {
    if (r < 1) throw std::invalid_argument("tower exponent must be >= 1");
    TruncatedSeries out = s;
    for (int n = 0; n < static_cast<int>(out.coeffs.size()); ++n) {
        Rat scale = 1;
        const Rat eig = Rat(n) * Rat(n + 1);  // E z^n = n(n+1) z^n
        for (int i = 0; i < r; ++i) scale *= eig;
        out.coeffs[static_cast<std::size_t>(n)] =
            scale * out.coeffs[static_cast<std::size_t>(n)];
    }
    return out;
}

bool genfun_identity_check(int N, int r) {
    if (r < 1) throw std::invalid_argument("tower exponent must be >= 1");
    const TruncatedSeries g = genfun_truncated(N);
    TruncatedSeries lhs = g;
    for (auto& c : lhs.coeffs)
        for (int i = 0; i < r; ++i) c = legendre_operator(c);
    TruncatedSeries rhs = euler_operator(g, r);
    const Rat sign = r % 2 == 0 ? 1 : -1;
    for (auto& c : rhs.coeffs) c = sign * c;
    return lhs == rhs;
}

}  // namespace hha
