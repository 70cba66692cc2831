#include "flowpoly/polynomial.hpp"

#include <sstream>
#include <utility>

namespace flowpoly {

namespace {

template <typename T>
void trim(std::vector<T>& c)
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

using QPoly = std::vector<BigRational>;

// Remainder of a / b; b must be nonzero (trimmed).
QPoly remainder(QPoly a, const QPoly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        BigRational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign(const BigRational& v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Sign changes of the chain at -infinity (negative) or +infinity.
int variations_at_infinity(const std::vector<QPoly>& chain, bool negative)
{
    int changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign(p.back());
        if (negative && (p.size() - 1) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs)
{
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim(coeffs_);
}

Polynomial Polynomial::from_counts(const std::vector<std::size_t>& counts)
{
    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (auto v : counts) c.emplace_back(v);
    return Polynomial(std::move(c));
}

BigInt Polynomial::sum() const
{
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

BigInt Polynomial::evaluate(const BigInt& z) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

bool Polynomial::nonnegative() const
{
    for (const auto& c : coeffs_) {
        if (c < 0) return false;
    }
    return true;
}

bool Polynomial::log_concave() const
{
    for (std::size_t k = 1; k + 1 < coeffs_.size(); ++k) {
        if (coeffs_[k] * coeffs_[k] < coeffs_[k - 1] * coeffs_[k + 1]) return false;
    }
    return true;
}

bool Polynomial::unimodal() const
{
    std::size_t k = 1;
    while (k < coeffs_.size() && coeffs_[k] >= coeffs_[k - 1]) ++k;
    while (k < coeffs_.size() && coeffs_[k] <= coeffs_[k - 1]) ++k;
    return k >= coeffs_.size();
}

bool Polynomial::real_rooted() const
{
    if (degree() <= 1) return true;
    QPoly p(coeffs_.begin(), coeffs_.end());
    QPoly dp;
    for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(p[k] * static_cast<long long>(k));

    std::vector<QPoly> chain{p, dp};
    while (!chain.back().empty()) {
        QPoly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    const QPoly& gcd = chain.back();

    const int distinct_real = variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
    const int squarefree_degree = degree() - static_cast<int>(gcd.size() - 1);
    // Every distinct root is real iff all roots are.
    return squarefree_degree == distinct_real;
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << "z";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    trim(coeffs_);
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<BigInt>& values)
{
    // Lagrange basis on the nodes t = 0..N, accumulated in monomial form.
    const std::size_t nodes = values.size();
    std::vector<BigRational> result(nodes, BigRational(0));
    for (std::size_t k = 0; k < nodes; ++k) {
        std::vector<BigRational> basis{BigRational(1)};
        BigRational denom = 1;
        for (std::size_t x = 0; x < nodes; ++x) {
            if (x == k) continue;
            std::vector<BigRational> next(basis.size() + 1, BigRational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * static_cast<long long>(x);
            }
            basis = std::move(next);
            denom *= static_cast<long long>(k) - static_cast<long long>(x);
        }
        BigRational scale = BigRational(values[k]) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
    }
    return RationalPolynomial(std::move(result));
}

BigRational RationalPolynomial::evaluate(const BigRational& t) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string RationalPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        os << (first ? "" : " + ") << "(" << coeffs_[k] << ")";
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

} // namespace flowpoly
