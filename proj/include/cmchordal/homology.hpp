#ifndef CMCHORDAL_HOMOLOGY_HPP
#define CMCHORDAL_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "cmchordal/complex.hpp"

namespace cmchordal {

// Coefficient field for homology: the rationals or a prime field F_p with
// p in {2, 3}.
struct FieldSpec {
    int characteristic = 0; // 0 = rationals

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(int p);

    std::string name() const; // "q", "f2", "f3"
    bool operator==(const FieldSpec&) const = default;
};

// Reduced Betti numbers of the augmented chain complex; index -1 through dim.
struct BettiProfile {
    int dim = -1;
    std::vector<long> values; // values[i] = reduced Betti number in degree i-1

    long betti(int degree) const { return values.at(static_cast<std::size_t>(degree) + 1); }
    bool vanishes_below_dim() const;
};

// Exact ranks. Entries of the rational-rank matrix are taken as integers;
// elimination is fraction-free (Bareiss) over arbitrary-precision integers,
// so there is no floating point anywhere.
int matrix_rank_mod_p(std::vector<std::vector<int>> m, int p);
int matrix_rank_rational(const std::vector<std::vector<int>>& m);

// Reduced simplicial homology ranks over the chosen field, with boundary
// maps of the augmented chain complex (vertices map to the empty face).
// Rejects the void complex. For the empty complex the profile is the single
// value betti(-1) = 1.
BettiProfile reduced_betti(const SimplicialComplex& c, FieldSpec k);

} // namespace cmchordal

#endif
