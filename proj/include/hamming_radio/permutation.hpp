#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace hamming_radio {

/// Element of S_n in one-line notation over {1..n}.
class Permutation {
public:
    Permutation() = default;

    /// `images[x-1]` is the image of x.
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw Error(Errc::InvalidPermutation, "one-line notation is not a bijection on {1.." +
                                                          std::to_string(images_.size()) + "}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        return Permutation(std::move(images));
    }

    /// Builds a permutation of {1..n} from disjoint cycles, e.g. {{1,2,3}}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles)
    {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        std::vector<bool> touched(static_cast<std::size_t>(n), false);
        for (const auto &cycle : cycles) {
            for (std::size_t p = 0; p < cycle.size(); ++p) {
                const int from = cycle[p];
                const int to = cycle[(p + 1) % cycle.size()];
                if (from < 1 || from > n || touched[static_cast<std::size_t>(from - 1)])
                    throw Error(Errc::InvalidPermutation, "cycles must be disjoint and within {1.." +
                                                              std::to_string(n) + "}");
                touched[static_cast<std::size_t>(from - 1)] = true;
                images[static_cast<std::size_t>(from - 1)] = to;
            }
        }
        return Permutation(std::move(images));
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }

    /// Image of the 1-based point x.
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

    std::span<const int> one_line() const noexcept { return images_; }

    bool is_identity() const noexcept
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i + 1))
                return false;
        return true;
    }

    Permutation inverse() const
    {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
        return Permutation(std::move(inv));
    }

    /// Cycle notation without fixed points; "id" for the identity.
    /// Points are concatenated when n <= 9 ("(123)") and comma separated otherwise.
    std::string to_cycle_string() const
    {
        if (is_identity())
            return "id";
        const bool compact = size() <= 9;
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start)
                continue;
            out += "(";
            int x = start;
            bool first = true;
            do {
                if (!first && !compact)
                    out += ",";
                out += std::to_string(x);
                seen[static_cast<std::size_t>(x - 1)] = true;
                x = (*this)(x);
                first = false;
            } while (x != start);
            out += ")";
        }
        return out;
    }

    friend auto operator<=>(const Permutation &, const Permutation &) = default;
    friend bool operator==(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> images_;
};

/// Parses "id", "()", cycle notation such as "(12)(34)", "(1,2,3)" or "(1 2 3)",
/// or one-line notation in brackets such as "[2,1,3]".
inline Permutation parse_permutation(std::string_view text, int n)
{
    auto fail = [&](const std::string &why) -> Error {
        return Error(Errc::ParseError, "permutation '" + std::string(text) + "': " + why);
    };
    // collapse whitespace runs to a single space and trim
    std::string s;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!s.empty() && s.back() != ' ')
                s += ' ';
        } else {
            s += c;
        }
    }
    while (!s.empty() && s.back() == ' ')
        s.pop_back();

    if (s == "id" || s == "()" || s.empty())
        return Permutation::identity(n);

    auto read_points = [&](std::string_view body) {
        std::vector<int> points;
        const bool separated = body.find_first_of(", ") != std::string_view::npos;
        if (!separated) {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw fail("unexpected character");
                points.push_back(c - '0');
            }
            return points;
        }
        std::string token;
        auto flush = [&] {
            if (!token.empty())
                points.push_back(std::stoi(token));
            token.clear();
        };
        for (char c : body) {
            if (c == ',' || c == ' ')
                flush();
            else if (std::isdigit(static_cast<unsigned char>(c)))
                token += c;
            else
                throw fail("unexpected character");
        }
        flush();
        return points;
    };

    try {
        if (s.front() == '[') {
            if (s.back() != ']')
                throw fail("unterminated one-line notation");
            auto points = read_points(std::string_view(s).substr(1, s.size() - 2));
            if (static_cast<int>(points.size()) != n)
                throw fail("expected " + std::to_string(n) + " images");
            return Permutation(std::move(points));
        }
        std::vector<std::vector<int>> cycles;
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] == ' ') {
                ++pos;
                continue;
            }
            if (s[pos] != '(')
                throw fail("expected '('");
            const auto close = s.find(')', pos);
            if (close == std::string::npos)
                throw fail("unterminated cycle");
            cycles.push_back(read_points(std::string_view(s).substr(pos + 1, close - pos - 1)));
            pos = close + 1;
        }
        return Permutation::from_cycles(n, cycles);
    } catch (const Error &e) {
        if (e.code() == Errc::ParseError)
            throw;
        throw fail(e.what());
    }
}

/// Left-to-right product: applies `a` first, then `b` (b ∘ a).
inline Permutation compose(const Permutation &a, const Permutation &b)
{
    if (a.size() != b.size())
        throw Error(Errc::SizeMismatch, "cannot compose permutations of sizes " + std::to_string(a.size()) +
                                            " and " + std::to_string(b.size()));
    std::vector<int> images(static_cast<std::size_t>(a.size()));
    for (int x = 1; x <= a.size(); ++x)
        images[static_cast<std::size_t>(x - 1)] = b(a(x));
    return Permutation(std::move(images));
}

/// Left-to-right product of a run of permutations.
inline Permutation compose_run(std::span<const Permutation> run)
{
    if (run.empty())
        throw Error(Errc::SizeMismatch, "empty run");
    Permutation product = run.front();
    for (std::size_t i = 1; i < run.size(); ++i)
        product = compose(product, run[i]);
    return product;
}

/// n pairwise distinct values of {1..n}: an element of D_n.
class Arrangement {
public:
    Arrangement() = default;
    explicit Arrangement(std::vector<int> values) : values_(std::move(values))
    {
        std::vector<bool> seen(values_.size(), false);
        for (int v : values_) {
            if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v - 1)])
                throw Error(Errc::InvalidPermutation, "arrangement entries must be distinct values of {1..n}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    /// (1, 2, ..., n)
    static Arrangement initial(int n)
    {
        std::vector<int> values(static_cast<std::size_t>(n));
        std::iota(values.begin(), values.end(), 1);
        return Arrangement(std::move(values));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }
    /// Value held at the 1-based position p.
    int at(int p) const { return values_[static_cast<std::size_t>(p - 1)]; }
    int front() const { return values_.front(); }
    std::span<const int> values() const noexcept { return values_; }

    /// 1-based position of `value`.
    int position_of(int value) const
    {
        auto it = std::find(values_.begin(), values_.end(), value);
        if (it == values_.end())
            throw Error(Errc::RangeError, "value " + std::to_string(value) + " not in arrangement");
        return static_cast<int>(it - values_.begin()) + 1;
    }

    friend bool operator==(const Arrangement &, const Arrangement &) = default;

private:
    std::vector<int> values_;
};

/// σ · (x_1..x_n) = (x_{σ⁻¹(1)}, ..., x_{σ⁻¹(n)}): the entry at position p moves to σ(p).
inline Arrangement act(const Permutation &sigma, const Arrangement &arr)
{
    if (sigma.size() != arr.size())
        throw Error(Errc::SizeMismatch, "permutation of size " + std::to_string(sigma.size()) +
                                            " acting on arrangement of size " + std::to_string(arr.size()));
    std::vector<int> out(static_cast<std::size_t>(arr.size()));
    for (int p = 1; p <= arr.size(); ++p)
        out[static_cast<std::size_t>(sigma(p) - 1)] = arr.at(p);
    return Arrangement(std::move(out));
}

} // namespace hamming_radio

template <>
struct std::hash<hamming_radio::Permutation> {
    std::size_t operator()(const hamming_radio::Permutation &p) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.one_line())
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
