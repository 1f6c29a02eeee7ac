#pragma once

#include <string>
#include <vector>

#include "quandlelab/abgroup.hpp"
#include "quandlelab/intmatrix.hpp"

namespace ql {

// Word over group generators: nonzero signed 1-based indices,
// +k = generator k, -k = its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

// Finitely presented group: num_generators, freely reduced relators.
struct Presentation {
    int num_generators = 0;
    std::vector<Word> relators;

    void add_relator(const Word& w); // freely reduces, drops empties
    void validate() const;           // indices in range

    // {"gens": n, "relators": [[±g1, ±g2, ...], ...]}
    std::string to_json() const;
    static Presentation from_json(const std::string& text);
};

// Exponent-sum matrix: one column per relator, one row per generator.
IntMatrix relation_matrix(const Presentation& p);

// Abelianization of a finitely presented group via SNF of the relation
// matrix, with canonical class coordinates for arbitrary words.
class AbelianizedGroup {
  public:
    explicit AbelianizedGroup(const Presentation& p);

    const AbGroup& group() const { return group_; }
    std::vector<std::int64_t> coords_of(const Word& w) const;
    std::vector<std::int64_t> generator_coords(int gen) const; // 1-based

  private:
    int num_generators_;
    AbGroup group_;
    IntMatrix u_; // row transform from the SNF of the relation matrix
    std::vector<long> free_rows_;
    std::vector<std::pair<long, std::int64_t>> torsion_rows_;
};

AbGroup abelianize_presentation(const Presentation& p);

} // namespace ql
