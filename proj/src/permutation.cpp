#include "arcperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace arcperm {

namespace {

void check_bijection(std::span<const int> word, bool allow_signs)
{
    const int n = static_cast<int>(word.size());
    if (n == 0)
        throw ParseError("permutation must have at least one entry");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word) {
        if (v < 0 && !allow_signs)
            throw ParseError("negative entry " + std::to_string(v) + " in an unsigned permutation");
        const int a = std::abs(v);
        if (a < 1 || a > n)
            throw ParseError("entry " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (seen[static_cast<std::size_t>(a)])
            throw ParseError("repeated value " + std::to_string(a));
        seen[static_cast<std::size_t>(a)] = true;
    }
}

std::vector<int> identity_word(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive, got " + std::to_string(n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return w;
}

template <class Word>
std::string bracketed(const Word& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    s += ']';
    return s;
}

std::vector<int> parse_word(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        throw ParseError("empty permutation text");

    std::vector<int> word;
    if (text.front() != '[') {
        // compact digit form
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError(std::string("unexpected token '") + c + "' in compact permutation");
            word.push_back(c - '0');
        }
        return word;
    }
    if (text.back() != ']')
        throw ParseError("missing closing ']' in '" + std::string(text) + "'");
    std::string_view body = trim(text.substr(1, text.size() - 2));
    if (body.empty())
        throw ParseError("permutation must have at least one entry");
    while (true) {
        const auto comma = body.find(',');
        std::string_view token = trim(body.substr(0, comma));
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (!token.empty() && token.front() == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last)
            throw ParseError("bad token '" + std::string(token) + "'");
        word.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return word;
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    check_bijection(word_, false);
}

Permutation Permutation::identity(int n) { return Permutation(identity_word(n)); }

SignedPermutation::SignedPermutation(std::vector<int> word) : word_(std::move(word))
{
    check_bijection(word_, true);
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(identity_word(n)); }

SignedPermutation SignedPermutation::from_unsigned(const Permutation& p)
{
    return SignedPermutation({p.word().begin(), p.word().end()});
}

// ---------------------------------------------------------------------------

PositionSet descent_set(const Permutation& p)
{
    PositionSet d;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1))
            d.push_back(i);
    return d;
}

int des(const Permutation& p) { return static_cast<int>(descent_set(p).size()); }

int maj(const Permutation& p)
{
    const auto d = descent_set(p);
    return std::accumulate(d.begin(), d.end(), 0);
}

int inv(const Permutation& p)
{
    int count = 0;
    const auto w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            count += w[i] > w[j];
    return count;
}

int sign(const Permutation& p) { return inv(p) % 2 ? -1 : 1; }

PositionSet descent_set(const SignedPermutation& p)
{
    PositionSet d;
    for (int i = 1; i < p.size(); ++i)
        if (b_less(p(i + 1), p(i)))
            d.push_back(i);
    return d;
}

PositionSet negative_set(const SignedPermutation& p)
{
    PositionSet s;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) < 0)
            s.push_back(i);
    return s;
}

Permutation absolute(const SignedPermutation& p)
{
    std::vector<int> w(p.word().begin(), p.word().end());
    for (int& v : w)
        v = std::abs(v);
    return Permutation(std::move(w));
}

StatProfile stats(const SignedPermutation& p)
{
    StatProfile s;
    s.des_set = descent_set(p);
    s.des = static_cast<int>(s.des_set.size());
    s.maj = std::accumulate(s.des_set.begin(), s.des_set.end(), 0);
    s.inv = inv(absolute(p));
    s.neg_set = negative_set(p);
    s.neg = static_cast<int>(s.neg_set.size());
    s.fmaj = 2 * s.maj + s.neg;
    s.fdes = 2 * s.des + (p(1) < 0 ? 1 : 0);
    s.sign_abs = s.inv % 2 ? -1 : 1;
    s.neg_parity = s.neg % 2 ? -1 : 1;
    s.sign = s.sign_abs * s.neg_parity;
    return s;
}

StatProfile stats(const Permutation& p) { return stats(SignedPermutation::from_unsigned(p)); }

// ---------------------------------------------------------------------------

int character_value(Character chi, const SignedPermutation& p)
{
    switch (chi) {
    case Character::trivial:
        return 1;
    case Character::sign:
        return (inv(absolute(p)) + static_cast<int>(negative_set(p).size())) % 2 ? -1 : 1;
    case Character::neg_parity:
        return negative_set(p).size() % 2 ? -1 : 1;
    case Character::sign_abs:
        return sign(absolute(p));
    }
    return 1;
}

std::string_view to_string(Character chi)
{
    switch (chi) {
    case Character::trivial:
        return "trivial";
    case Character::sign:
        return "sign";
    case Character::neg_parity:
        return "neg_parity";
    case Character::sign_abs:
        return "sign_abs";
    }
    return "?";
}

Character parse_character(std::string_view name)
{
    for (Character chi : all_characters)
        if (to_string(chi) == name)
            return chi;
    throw ParseError("unknown character '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

Permutation compose(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(q.size()));
    for (int i = 1; i <= q.size(); ++i)
        w[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q)
{
    if (p.size() != q.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(q.size()));
    for (int i = 1; i <= q.size(); ++i)
        w[static_cast<std::size_t>(i - 1)] = p(q(i));
    return SignedPermutation(std::move(w));
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i)
        w[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& p)
{
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) {
        const int v = p(i);
        w[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
    }
    return SignedPermutation(std::move(w));
}

namespace {

template <class Perm>
Perm power_impl(const Perm& p, long long e)
{
    Perm base = e < 0 ? inverse(p) : p;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm result = Perm::identity(p.size());
    while (k) {
        if (k & 1)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

} // namespace

Permutation power(const Permutation& p, long long e) { return power_impl(p, e); }
SignedPermutation power(const SignedPermutation& p, long long e) { return power_impl(p, e); }

// ---------------------------------------------------------------------------

std::string to_string(const Permutation& p) { return bracketed(p.word()); }
std::string to_string(const SignedPermutation& p) { return bracketed(p.word()); }

SignedPermutation parse_signed_permutation(std::string_view text)
{
    return SignedPermutation(parse_word(text));
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

} // namespace arcperm
