#pragma once

#include <algorithm>
#include <vector>

#include "graph.hpp"
#include "instruction.hpp"
#include "verify.hpp"
#include "violation.hpp"

namespace hamming_radio {

/// N x t matrix of instructions σ_i^j. Column j is generated with its own
/// instruction set generator over the alphabet of that column.
class OrderGenerator {
public:
    /// `rows[i][j]` is σ_{i+1}^j. Throws StructureError unless row 1 is all
    /// identity, row 2 all f_2, and every cell is legal for its column's generator.
    OrderGenerator(GraphSpec spec, std::vector<InstructionGenerator> generators,
                   std::vector<std::vector<Permutation>> rows)
        : spec_(std::move(spec)), generators_(std::move(generators)), rows_(std::move(rows))
    {
        const auto t = static_cast<std::size_t>(spec_.dimension());
        if (generators_.size() != t)
            throw Error(Errc::StructureError, "need one generator per column (" + std::to_string(t) + ")");
        if (rows_.size() != spec_.vertex_count())
            throw Error(Errc::StructureError, "order-generator of " + spec_.to_string() + " needs " +
                                                  std::to_string(spec_.vertex_count()) + " rows");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].size() != t)
                throw Error(Errc::StructureError, "row " + std::to_string(i + 1) + " has the wrong width");
        for (std::size_t j = 0; j < t; ++j) {
            if (generators_[j].n() != spec_.alphabet(j))
                throw Error(Errc::StructureError, "generator for column " + std::to_string(j + 1) +
                                                      " has the wrong alphabet size");
            try {
                check_membership(column(j), generators_[j]);
            } catch (const Error &e) {
                throw Error(Errc::StructureError, "column " + std::to_string(j + 1) + ": " + e.what());
            }
        }
    }

    /// One generator shared by every column (all columns must have the same alphabet).
    static OrderGenerator uniform(GraphSpec spec, const InstructionGenerator &gen,
                                  std::vector<std::vector<Permutation>> rows)
    {
        std::vector<InstructionGenerator> gens(static_cast<std::size_t>(spec.dimension()), gen);
        return OrderGenerator(std::move(spec), std::move(gens), std::move(rows));
    }

    /// Column-wise φ⁻¹ of an ordering whose first rows are all-1 and all-2.
    static OrderGenerator from_ordering(const Ordering &o, std::vector<InstructionGenerator> generators)
    {
        const auto t = static_cast<std::size_t>(o.spec().dimension());
        if (generators.size() != t)
            throw Error(Errc::StructureError, "need one generator per column");
        std::vector<std::vector<Permutation>> rows(o.size(), std::vector<Permutation>(t));
        for (std::size_t j = 0; j < t; ++j) {
            std::vector<int> values;
            for (const auto &row : o.rows())
                values.push_back(row[j]);
            const auto col = phi_inverse(values, generators[j]);
            for (std::size_t i = 0; i < col.size(); ++i)
                rows[i][j] = col[i];
        }
        return OrderGenerator(o.spec(), std::move(generators), std::move(rows));
    }

    const GraphSpec &spec() const noexcept { return spec_; }
    std::size_t size() const noexcept { return rows_.size(); }
    const Permutation &cell(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
    const InstructionGenerator &generator(std::size_t j) const { return generators_.at(j); }

    std::vector<Permutation> column(std::size_t j) const
    {
        std::vector<Permutation> col;
        col.reserve(rows_.size());
        for (const auto &row : rows_)
            col.push_back(row[j]);
        return col;
    }

    /// Subscript k of cell (i, j) within the set it was drawn from; 1 for the identity in row 1.
    int subscript(std::size_t i, std::size_t j) const
    {
        if (i == 0)
            return 1;
        const auto col = column(j);
        const auto set = generators_[j].at(i + 1, std::span<const Permutation>(col).first(i));
        return *set.subscript_of(col[i]);
    }

    /// Φ_G: applies φ to every column.
    Ordering materialize() const
    {
        const auto t = static_cast<std::size_t>(spec_.dimension());
        std::vector<Vertex> rows(rows_.size(), Vertex(std::vector<int>(t, 0)));
        for (std::size_t j = 0; j < t; ++j) {
            const auto values = phi(column(j), generators_[j]);
            for (std::size_t i = 0; i < values.size(); ++i)
                rows[i][j] = values[i];
        }
        return Ordering(spec_, std::move(rows));
    }

private:
    GraphSpec spec_;
    std::vector<InstructionGenerator> generators_;
    std::vector<std::vector<Permutation>> rows_;
};

/// For every row i and window s < t, counts the columns whose trailing run
/// σ_{i-s+1}..σ_i fixes 1 and reports counts above s - 1; also reports row
/// repetition in Φ_G(og). Empty iff Φ_G(og) induces a consecutive radio labeling.
inline std::vector<ViolationReport> check_order_generator(const OrderGenerator &og)
{
    const int t = og.spec().dimension();
    const std::size_t n_rows = og.size();
    std::vector<ViolationReport> reports;

    // image[s] = image of 1 under the trailing run of length s ending at the current row.
    std::vector<std::vector<int>> image(static_cast<std::size_t>(t), std::vector<int>(static_cast<std::size_t>(t), 0));
    std::vector<int> fixed(static_cast<std::size_t>(t), 0);
    for (std::size_t i = 1; i < n_rows; ++i) {
        std::fill(fixed.begin(), fixed.end(), 0);
        for (std::size_t j = 0; j < static_cast<std::size_t>(t); ++j) {
            const auto &sigma = og.cell(i, j);
            auto &img = image[j];
            // Runs may only start at row 2, so the longest run ending at row i+1 has length i.
            const int longest = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t - 1), i));
            for (int s = longest; s >= 2; --s)
                img[static_cast<std::size_t>(s)] = sigma(img[static_cast<std::size_t>(s - 1)]);
            if (t > 1)
                img[1] = sigma(1);
            for (int s = 1; s <= longest; ++s)
                fixed[static_cast<std::size_t>(s)] += img[static_cast<std::size_t>(s)] == 1;
        }
        const int longest = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t - 1), i));
        for (int s = 1; s <= longest; ++s)
            if (fixed[static_cast<std::size_t>(s)] > s - 1)
                reports.push_back(make_report(RunOverflow{i + 1, s, fixed[static_cast<std::size_t>(s)]}));
    }

    for (auto &r : check_ordering(og.materialize()))
        if (r.is<Repetition>())
            reports.push_back(std::move(r));
    return reports;
}

} // namespace hamming_radio
