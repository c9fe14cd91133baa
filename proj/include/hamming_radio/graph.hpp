#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hamming_radio {

/// One factor K_n^t of a Hamming graph.
struct Factor {
    int n = 0;
    int t = 0;

    friend bool operator==(const Factor &, const Factor &) = default;
};

/// A Hamming graph K_{n_1}^{t_1} x ... x K_{n_m}^{t_m} with n_1 < ... < n_m.
///
/// Columns are 0-based here. Column j belongs to factor k when
/// prefix_t(k-1) <= j < prefix_t(k). The vertex count may be too large to
/// represent; such specs are still usable for bound queries.
class GraphSpec {
public:
    explicit GraphSpec(std::vector<Factor> factors) : factors_(std::move(factors))
    {
        if (factors_.empty())
            throw Error(Errc::EmptySpec, "a Hamming graph needs at least one factor");
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            const auto [n, t] = factors_[k];
            if (n < 2 || t < 1)
                throw Error(Errc::InvalidFactor, "factor K_" + std::to_string(n) + "^" + std::to_string(t) +
                                                     " needs n >= 2 and t >= 1");
            if (k > 0 && factors_[k - 1].n >= n)
                throw Error(Errc::NonIncreasingFactors,
                            "factor sizes must be strictly increasing; merge equal factors first");
        }

        int total = 0;
        std::uint64_t count = 1;
        bool overflow = false;
        for (const auto &[n, t] : factors_) {
            total += t;
            prefix_t_.push_back(total);
            for (int i = 0; i < t && !overflow; ++i) {
                if (count > UINT64_MAX / static_cast<std::uint64_t>(n))
                    overflow = true;
                else
                    count *= static_cast<std::uint64_t>(n);
            }
            for (int i = 0; i < t; ++i)
                alphabet_.push_back(n);
        }
        t_ = total;
        if (!overflow)
            vertex_count_ = count;
    }

    std::span<const Factor> factors() const noexcept { return factors_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }

    /// Diameter, i.e. the number of coordinates.
    int dimension() const noexcept { return t_; }

    /// t̄_k for the 0-based factor index k (sum of t_1..t_{k+1}).
    int prefix_t(std::size_t k) const { return prefix_t_.at(k); }

    /// Alphabet size n of column j.
    int alphabet(std::size_t column) const { return alphabet_.at(column); }
    std::span<const int> alphabets() const noexcept { return alphabet_; }

    std::size_t factor_of_column(std::size_t column) const
    {
        for (std::size_t k = 0; k < prefix_t_.size(); ++k)
            if (column < static_cast<std::size_t>(prefix_t_[k]))
                return k;
        throw Error(Errc::ColumnOutOfRange, "column " + std::to_string(column) + " outside dimension " +
                                                std::to_string(t_));
    }

    bool vertex_count_fits() const noexcept { return vertex_count_.has_value(); }

    /// N. Throws Overflow when N does not fit in 64 bits.
    std::uint64_t vertex_count() const
    {
        if (!vertex_count_)
            throw Error(Errc::Overflow, "vertex count of " + to_string() + " exceeds 64 bits");
        return *vertex_count_;
    }

    /// True when N fits in memory-sized containers (at most `limit` vertices).
    bool enumerable(std::uint64_t limit = std::uint64_t{1} << 26) const noexcept
    {
        return vertex_count_ && *vertex_count_ <= limit;
    }

    /// Canonical form used in document headers: "3^4 x 4^7".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k)
                out += " x ";
            out += std::to_string(factors_[k].n) + "^" + std::to_string(factors_[k].t);
        }
        return out;
    }

    friend bool operator==(const GraphSpec &a, const GraphSpec &b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
    std::vector<int> prefix_t_;
    std::vector<int> alphabet_;
    int t_ = 0;
    std::optional<std::uint64_t> vertex_count_;
};

inline GraphSpec make_graph_spec(std::vector<Factor> factors) { return GraphSpec(std::move(factors)); }

/// Ordered t-tuple of 1-based coordinate values.
class Vertex {
public:
    Vertex() = default;
    Vertex(std::initializer_list<int> coords) : coords_(coords) {}
    explicit Vertex(std::vector<int> coords) : coords_(std::move(coords)) {}

    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t j) const { return coords_[j]; }
    int &operator[](std::size_t j) { return coords_[j]; }
    std::span<const int> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    bool valid_for(const GraphSpec &spec) const noexcept
    {
        if (coords_.size() != static_cast<std::size_t>(spec.dimension()))
            return false;
        for (std::size_t j = 0; j < coords_.size(); ++j)
            if (coords_[j] < 1 || coords_[j] > spec.alphabet(j))
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t j = 0; j < coords_.size(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(coords_[j]);
        }
        return out + ")";
    }

    friend auto operator<=>(const Vertex &, const Vertex &) = default;
    friend bool operator==(const Vertex &, const Vertex &) = default;

private:
    std::vector<int> coords_;
};

/// Number of coordinates in which u and v agree.
inline int shared_coordinates(const Vertex &u, const Vertex &v)
{
    if (u.size() != v.size())
        throw Error(Errc::DimensionMismatch, "vertices of length " + std::to_string(u.size()) + " and " +
                                                 std::to_string(v.size()));
    int shared = 0;
    for (std::size_t j = 0; j < u.size(); ++j)
        shared += u[j] == v[j];
    return shared;
}

/// Graph distance: the number of differing coordinates.
inline int distance(const Vertex &u, const Vertex &v, const GraphSpec &spec)
{
    if (u.size() != static_cast<std::size_t>(spec.dimension()) ||
        v.size() != static_cast<std::size_t>(spec.dimension()))
        throw Error(Errc::DimensionMismatch, "vertex length differs from graph dimension " +
                                                 std::to_string(spec.dimension()));
    return spec.dimension() - shared_coordinates(u, v);
}

/// Mixed-radix rank of v in lexicographic vertex order.
inline std::uint64_t vertex_index(const GraphSpec &spec, const Vertex &v)
{
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        index = index * static_cast<std::uint64_t>(spec.alphabet(j)) + static_cast<std::uint64_t>(v[j] - 1);
    return index;
}

/// Lazy lexicographic walk over V(G).
class VertexRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = const Vertex &;

        iterator() = default;
        iterator(const GraphSpec *spec, bool done) : spec_(spec), done_(done)
        {
            if (!done_)
                current_ = Vertex(std::vector<int>(static_cast<std::size_t>(spec_->dimension()), 1));
        }

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator &operator++()
        {
            for (std::size_t j = current_.size(); j-- > 0;) {
                if (current_[j] < spec_->alphabet(j)) {
                    ++current_[j];
                    return *this;
                }
                current_[j] = 1;
            }
            done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator &a, const iterator &b) { return a.done_ == b.done_; }

    private:
        const GraphSpec *spec_ = nullptr;
        bool done_ = true;
        Vertex current_;
    };

    explicit VertexRange(const GraphSpec &spec) : spec_(&spec) {}
    iterator begin() const { return iterator(spec_, false); }
    iterator end() const { return iterator(spec_, true); }

private:
    const GraphSpec *spec_;
};

/// All N vertices in lexicographic coordinate order. The spec must outlive the range.
inline VertexRange enumerate_vertices(const GraphSpec &spec) { return VertexRange(spec); }

/// An N x t matrix of coordinate values. Repeated rows are allowed (a weak ordering).
class Ordering {
public:
    Ordering(GraphSpec spec, std::vector<Vertex> rows) : spec_(std::move(spec)), rows_(std::move(rows))
    {
        const auto n = spec_.vertex_count();
        if (rows_.size() != n)
            throw Error(Errc::ShapeError, "ordering of " + spec_.to_string() + " needs " + std::to_string(n) +
                                              " rows, got " + std::to_string(rows_.size()));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!rows_[i].valid_for(spec_))
                throw Error(Errc::ShapeError, "row " + std::to_string(i + 1) + " " + rows_[i].to_string() +
                                                  " is not a vertex of " + spec_.to_string());
    }

    const GraphSpec &spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const Vertex &operator[](std::size_t i) const { return rows_[i]; }
    std::span<const Vertex> rows() const noexcept { return rows_; }

    friend bool operator==(const Ordering &, const Ordering &) = default;

private:
    GraphSpec spec_;
    std::vector<Vertex> rows_;
};

} // namespace hamming_radio

template <>
struct std::hash<hamming_radio::Vertex> {
    std::size_t operator()(const hamming_radio::Vertex &v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int c : v)
            h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
        return h;
    }
};
