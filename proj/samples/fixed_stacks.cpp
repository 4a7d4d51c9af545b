// Lists the decks of N cards over j labels that one k-stack shuffle leaves
// unchanged, and checks the count against the down-set counter.
//
//   sample_fixed_stacks [N] [k] [j]

#include <cstdlib>
#include <iostream>

#include "ordered_shuffle/ordered_shuffle.hpp"

using namespace ordered_shuffle;

int main(int argc, char** argv) {
    const std::size_t N = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
    const std::size_t k = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;
    const std::size_t j = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 2;
    try {
        const ShuffleParams p = make_params(N, k);
        const ShufflingPoset sp = build_shuffling_poset(algorithm_up(p));
        const FixedPoset fp = build_fixed_poset(sp);

        std::cout << format_weight_table(sp.wf);
        std::cout << fp.size() << " cycles, " << fp.edges.size() << " constraints\n";

        std::size_t listed = 0;
        enumerate_fixed(fp, j, [&](const Deck& d) {
            std::cout << format_deck(d, j) << (shuffle_once(d, p) == d ? "" : "  (not fixed!)") << '\n';
            return ++listed < 50;
        });
        std::cout << count_fixed(fp, j) << " fixed decks in total\n";
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
