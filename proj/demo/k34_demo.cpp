// Builds the K_3^2 ordering from its instruction matrix, checks it, and prints
// the bound verdict for a few small Hamming graphs.

#include <iostream>

#include "hamming_radio/hamming_radio.hpp"

namespace hr = hamming_radio;

int main()
{
    const auto spec = hr::make_graph_spec({{3, 2}});
    const auto gen = hr::builtin_generator(hr::GeneratorKind::LRU, 3);
    const auto id = hr::Permutation::identity(3);
    const auto f2 = gen.at(2, std::vector<hr::Permutation>{id}).f(2);
    const auto f3 = gen.at(2, std::vector<hr::Permutation>{id}).f(3);

    const std::vector<std::vector<hr::Permutation>> rows{
        {id, id}, {f2, f2}, {f3, f3}, {f3, f2}, {f3, f2}, {f3, f3}, {f3, f2}, {f3, f2}, {f3, f3},
    };
    const auto og = hr::OrderGenerator::uniform(spec, gen, rows);
    const auto ordering = og.materialize();

    const auto labels = hr::induced_labels(ordering);
    for (std::size_t i = 0; i < ordering.size(); ++i)
        std::cout << ordering[i].to_string() << " -> " << labels[i] << "\n";
    std::cout << "order-generator violations: " << hr::check_order_generator(og).size() << "\n";

    for (const char *text : {"3^3", "3^4", "3^5", "4^10", "3^4x4^7"}) {
        const auto verdict = hr::bound_verdict(hr::parse_spec(text));
        std::cout << text << ": " << hr::to_string(verdict.overall) << "\n";
    }
}
