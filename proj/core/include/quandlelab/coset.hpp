#pragma once

#include "quandlelab/permgroup.hpp"
#include "quandlelab/presentation.hpp"

namespace ql {

// Completed, collapsed, standardized coset table of a subgroup H <= G.
// Coset 0 is H itself. schreier_words[c] is a transversal word taking
// coset 0 to coset c (BFS-minimal, empty at 0).
struct CosetTable {
    int num_cosets = 0;
    int num_generators = 0;
    std::vector<std::vector<int>> act;     // act[g][c], 0-based generator g
    std::vector<std::vector<int>> act_inv; // inverse action
    std::vector<Word> schreier_words;
    Presentation presentation;
    std::vector<Word> subgroup_words;

    int step(int c, int letter) const { // letter: signed 1-based generator
        return letter > 0 ? act[letter - 1][c] : act_inv[-letter - 1][c];
    }
    int trace(int c, const Word& w) const {
        for (int s : w) c = step(c, s);
        return c;
    }
    Perm generator_perm(int g) const { // 0-based generator index
        return Perm(act[g].begin(), act[g].end());
    }
    // Checks completeness and that every relator closes everywhere.
    void validate() const;
};

// Todd-Coxeter coset enumeration, HLT strategy: full relator scanning in
// fixed relator order, definitions at the first gap, immediate
// coincidence processing via union-find. Deterministic. Throws CapError
// once max_cosets cosets have been defined.
CosetTable coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup_words,
                           long max_cosets = 1000000);

} // namespace ql
