#include "arcperm/canonical.hpp"

#include <numeric>
#include <stdexcept>

namespace arcperm {

Permutation cycle_A(int m, int n)
{
    if (m < 1 || m >= n)
        throw std::out_of_range("cycle_A needs 1 <= m < n, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    w[0] = m + 1;
    for (int i = 2; i <= m + 1; ++i)
        w[static_cast<std::size_t>(i - 1)] = i - 1;
    return Permutation(std::move(w));
}

SignedPermutation cycle_B(int m, int n)
{
    if (m < 0 || m >= n)
        throw std::out_of_range("cycle_B needs 0 <= m < n, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    w[0] = -(m + 1);
    for (int i = 2; i <= m + 1; ++i)
        w[static_cast<std::size_t>(i - 1)] = i - 1;
    return SignedPermutation(std::move(w));
}

// Both decompositions peel the outermost factor: c_{m-1}^k moves m to pi(m),
// the orbit of m under c_{m-1} is a full cycle, so k is determined by pi(m);
// c_{m-1}^{-k} pi then fixes m and the rest lives in the smaller group.

ExponentVectorA decompose_A(const Permutation& p)
{
    ExponentVectorA e{p.size(), std::vector<int>(static_cast<std::size_t>(p.size() - 1), 0)};
    Permutation cur = p;
    for (int m = p.size(); m >= 2; --m) {
        const int k = m - cur(m);
        e.k[static_cast<std::size_t>(m - 2)] = k;
        const Permutation peeled = compose(power(cycle_A(m - 1, m), -k), cur);
        cur = Permutation({peeled.word().begin(), peeled.word().end() - 1});
    }
    return e;
}

ExponentVectorB decompose_B(const SignedPermutation& p)
{
    ExponentVectorB e{p.size(), std::vector<int>(static_cast<std::size_t>(p.size()), 0)};
    SignedPermutation cur = p;
    for (int m = p.size(); m >= 1; --m) {
        const int v = cur(m);
        const int k = v > 0 ? m - v : 2 * m + v;
        e.k[static_cast<std::size_t>(m - 1)] = k;
        if (m == 1)
            break;
        const SignedPermutation peeled = compose(power(cycle_B(m - 1, m), -k), cur);
        cur = SignedPermutation({peeled.word().begin(), peeled.word().end() - 1});
    }
    return e;
}

Permutation recompose(const ExponentVectorA& e)
{
    if (static_cast<int>(e.k.size()) != e.n - 1)
        throw std::invalid_argument("type A exponent vector needs n-1 entries");
    Permutation result = Permutation::identity(e.n);
    for (int i = 1; i < e.n; ++i) {
        const int k = e.exponent(i);
        if (k < 0 || k > i)
            throw std::invalid_argument("k_" + std::to_string(i) + "=" + std::to_string(k) + " out of range");
        // left-multiply, so the factor with the largest index ends up outermost
        result = compose(power(cycle_A(i, e.n), k), result);
    }
    return result;
}

SignedPermutation recompose(const ExponentVectorB& e)
{
    if (static_cast<int>(e.k.size()) != e.n)
        throw std::invalid_argument("type B exponent vector needs n entries");
    SignedPermutation result = SignedPermutation::identity(e.n);
    for (int i = 0; i < e.n; ++i) {
        const int k = e.exponent(i);
        if (k < 0 || k > 2 * i + 1)
            throw std::invalid_argument("k_" + std::to_string(i) + "=" + std::to_string(k) + " out of range");
        result = compose(power(cycle_B(i, e.n), k), result);
    }
    return result;
}

int maj_from_exponents(const ExponentVectorA& e) { return std::accumulate(e.k.begin(), e.k.end(), 0); }

int fmaj_from_exponents(const ExponentVectorB& e) { return std::accumulate(e.k.begin(), e.k.end(), 0); }

bool is_arc_by_exponents(const ExponentVectorA& e)
{
    for (int i = 1; i < e.n; ++i) {
        const int k = e.exponent(i);
        const bool ok = i == e.n - 1 ? (0 <= k && k <= e.n - 1) : (k == 0 || k == i);
        if (!ok)
            return false;
    }
    return true;
}

bool is_b_arc_by_exponents(const ExponentVectorB& e)
{
    for (int i = 0; i < e.n; ++i) {
        const int k = e.exponent(i);
        const bool ok = i == e.n - 1 ? (0 <= k && k <= 2 * e.n - 1) : (k == 0 || k == 2 * i + 1);
        if (!ok)
            return false;
    }
    return true;
}

std::vector<ExponentVectorA> arc_exponent_vectors(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    std::vector<ExponentVectorA> out;
    if (n == 1) {
        out.push_back({1, {}});
        return out;
    }
    const int free_bits = n - 2;
    for (unsigned mask = 0; mask < (1u << free_bits); ++mask)
        for (int last = 0; last <= n - 1; ++last) {
            ExponentVectorA e{n, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
            for (int i = 1; i <= free_bits; ++i)
                if (mask & (1u << (i - 1)))
                    e.k[static_cast<std::size_t>(i - 1)] = i;
            e.k.back() = last;
            out.push_back(std::move(e));
        }
    return out;
}

std::vector<ExponentVectorB> b_arc_exponent_vectors(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    std::vector<ExponentVectorB> out;
    const int free_bits = n - 1;
    for (unsigned mask = 0; mask < (1u << free_bits); ++mask)
        for (int last = 0; last <= 2 * n - 1; ++last) {
            ExponentVectorB e{n, std::vector<int>(static_cast<std::size_t>(n), 0)};
            for (int i = 0; i < free_bits; ++i)
                if (mask & (1u << i))
                    e.k[static_cast<std::size_t>(i)] = 2 * i + 1;
            e.k.back() = last;
            out.push_back(std::move(e));
        }
    return out;
}

namespace {

std::string vector_text(char group, const std::vector<int>& k)
{
    std::string s = std::string(1, group) + " k=[";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(k[i]);
    }
    return s + "]";
}

} // namespace

std::string to_string(const ExponentVectorA& e) { return vector_text('A', e.k); }
std::string to_string(const ExponentVectorB& e) { return vector_text('B', e.k); }

} // namespace arcperm
