#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "quandlelab/abgroup.hpp"
#include "quandlelab/coset.hpp"
#include "quandlelab/presentation.hpp"
#include "quandlelab/quandle.hpp"

namespace ql {

// As(X) = < e_x (x in X) | e_{x◁y}^-1 e_y^-1 e_x e_y >, with relators
// freely reducing to nothing dropped (exactly the diagonal pairs).
Presentation as_presentation(const QuandleTable& q);

// Computational realization of As(X) for finite connected X.
//
// Ker(eps_X) is carried by the cosets of <e_a> (a = smallest element)
// under the fixed bijection  <e_a> g  <->  e_a^{-eps(g)} g,  so coset 0
// is the identity and right multiplication by Ker-eps elements is the
// right-regular action. As(X) elements are decided faithfully as
// (permutation of cosets, eps).
class AssocGroup {
  public:
    static AssocGroup build(const QuandleTable& q, long max_cosets = 1000000);

    const QuandleTable& quandle() const { return q_; }
    const CosetTable& cosets() const { return ct_; }
    const Presentation& presentation() const { return ct_.presentation; }
    int base_point() const { return base_; }
    int kernel_size() const { return ct_.num_cosets; }

    // --- KerEpsGroup: group structure on cosets --------------------------
    int mul(int a, int b) const;
    int inverse(int a) const;
    long element_order(int a) const;
    // p : Ker(eps) -> X, g -> a . g (covering carrier map)
    int orbit_image(int a) const { return orbit_image_[a]; }
    // word over e_x generators (signed, 1-based) representing coset c
    Word element_word(int c) const;

    // --- AdjointRep: faithful (permutation, eps) elements -----------------
    struct Element {
        Perm perm;
        long eps = 0;
        bool operator==(const Element& o) const = default;
        auto operator<=>(const Element& o) const = default;
    };
    Element identity_element() const;
    Element gen_element(int x) const; // e_x, 0-based x
    Element eval(const Word& w) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    // coset carrying an eps = 0 element (throws otherwise)
    int coset_of(const Element& e) const;

    // Right-regular freeness: no nonidentity Ker-eps element fixes any
    // coset. ConsistencyError on failure.
    void check_regular_freeness() const;

  private:
    QuandleTable q_;
    CosetTable ct_;
    int base_ = 0;
    std::vector<long> word_eps_;    // eps of schreier_words[c]
    std::vector<int> orbit_image_;  // p(c)
};

// ker_eps_group and adjoint_rep are the same built object.
inline AssocGroup ker_eps_group(const QuandleTable& q, long max_cosets = 1000000) {
    return AssocGroup::build(q, max_cosets);
}

struct ExtendedQuandle {
    QuandleTable table;        // X~ on the Ker-eps carrier
    std::vector<int> covering; // p : X~ -> X
};

// X~ = (Ker eps_X, g ◁ h = e_a^-1 g e_{a.h}) via the coset action.
ExtendedQuandle extended_quandle(const AssocGroup& g);

// Reidemeister-Schreier presentation of Stab(x0) <= As(X) over the orbit
// coset table (cosets = orbit elements, action = quandle action).
class StabilizerPresentation {
  public:
    StabilizerPresentation(const QuandleTable& q, int x0);

    const Presentation& presentation() const { return pres_; }
    int base() const { return x0_; }
    // Rewrites a word over the e_x into Schreier generators; throws
    // InputError if the word does not stabilize x0.
    Word rewrite(const Word& w) const;
    // The word e_{x0} as a Schreier-generator word.
    Word base_loop() const { return rewrite({x0_ + 1}); }
    // Transversal word u_z with x0 . u_z = z (empty off the orbit of x0).
    const Word& transversal_word(int z) const { return transversal_.at(z); }

  private:
    const QuandleTable& q_;
    int x0_;
    Presentation pres_;
    std::vector<Word> transversal_;        // u_z per orbit element, empty off-orbit
    std::vector<int> in_orbit_;
    std::vector<std::vector<int>> sgen_;   // (z, y) -> 1-based index, 0 = tree edge
};

// Eisermann H2^Q(X): per orbit, Stab(x_i)_ab / <[e_{x_i}]>, summed.
class EisermannH2 {
  public:
    explicit EisermannH2(const QuandleTable& q);

    const AbGroup& group() const { return total_; }
    int num_orbits() const { return int(parts_.size()); }
    const AbGroup& orbit_group(int i) const { return parts_[i].group; }
    int orbit_rep(int i) const { return parts_[i].rep; }

    // Class of an As(X)-word stabilizing orbit_rep(i), as coordinates in
    // orbit i's summand.
    std::vector<std::int64_t> class_coords(int orbit, const Word& w) const;
    std::int64_t class_order(int orbit, const std::vector<std::int64_t>& coords) const;

    int orbit_index_of(int x) const { return od_.orbit_id.at(x); }
    // word g with orbit_rep . g = x
    const Word& conjugator(int x) const;
    size_t coord_len(int orbit) const;

  private:
    OrbitData od_;
    struct Part {
        int rep;
        StabilizerPresentation stab;
        AbelianizedGroup ab; // of stab presentation + killed [e_rep]
        AbGroup group;
    };
    std::vector<Part> parts_;
    AbGroup total_;
};

inline AbGroup h2q_eisermann(const QuandleTable& q) { return EisermannH2(q).group(); }

// Clauwens' model for connected Alexander quandles:
// Coker(mu: X⊗X -> X⊗X, x⊗y -> x⊗y - Ty⊗x); As(X) ≅ Z x X x Coker(mu),
// so |Ker eps| = |X| * |Coker mu| and H2^Q(X) ≅ Coker(mu).
struct ClauwensResult {
    AbGroup coker_mu;
    std::int64_t kernel_size_prediction;
};
ClauwensResult clauwens_model(const QuandleTable& q);

// Invariant factors of a finite abelian group given by element ids and a
// multiplication callback (identity must be id 0).
std::vector<std::int64_t> abelian_invariants(
    int size, const std::function<int(int, int)>& mul);

// Elements of Ker(p_* : As(X~) -> As(X)) as X~-cosets, with structure.
struct KernelPstar {
    std::vector<int> elements; // cosets in As(X~)'s Ker eps
    AbGroup group;
};
KernelPstar kernel_pstar(const AssocGroup& gx, const AssocGroup& gxt,
                         const std::vector<int>& covering);

} // namespace ql
