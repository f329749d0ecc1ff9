#include "cmchordal/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace cmchordal {

FieldSpec FieldSpec::prime(int p) {
    if (p != 2 && p != 3)
        throw precondition_error("field: characteristic must be 0, 2 or 3");
    return {p};
}

std::string FieldSpec::name() const {
    switch (characteristic) {
    case 0:
        return "q";
    case 2:
        return "f2";
    case 3:
        return "f3";
    }
    return "f" + std::to_string(characteristic);
}

bool BettiProfile::vanishes_below_dim() const {
    for (int i = -1; i < dim; ++i)
        if (betti(i) != 0)
            return false;
    return true;
}

int matrix_rank_mod_p(std::vector<std::vector<int>> m, int p) {
    if (p != 2 && p != 3)
        throw precondition_error("rank mod p: p must be 2 or 3");
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[rank], m[piv]);
        int inv = m[rank][col] == 1 ? 1 : (p == 3 ? 2 : 1); // inverse of 1 or 2 in F_2/F_3
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0)
                continue;
            int factor = (m[r][col] * inv) % p;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = (m[r][c] - factor * m[rank][c] % p + p * p) % p;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

// Bareiss fraction-free elimination; entries stay integral, divisions exact.
int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace

int matrix_rank_rational(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<mpz_class>> z(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        z[r].reserve(m[r].size());
        for (int x : m[r])
            z[r].emplace_back(x);
    }
    return rank_bareiss(std::move(z));
}

namespace {

int rank_over(const std::vector<std::vector<int>>& m, FieldSpec k) {
    if (m.empty() || m[0].empty())
        return 0;
    return k.characteristic == 0 ? matrix_rank_rational(m) : matrix_rank_mod_p(m, k.characteristic);
}

} // namespace

BettiProfile reduced_betti(const SimplicialComplex& c, FieldSpec k) {
    if (c.is_void())
        throw precondition_error("reduced_betti: void complex");

    std::vector<VertexSet> faces = enumerate_faces(c);
    int dim = c.dim();

    // per-dimension face lists; dimension d stored at index d+1
    std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(dim) + 2);
    for (const auto& f : faces)
        by_dim[f.size()].push_back(to_mask(f));
    for (auto& level : by_dim)
        std::sort(level.begin(), level.end());

    auto index_of = [&](int level, std::uint64_t mask) {
        const auto& v = by_dim[static_cast<std::size_t>(level)];
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
    };

    // boundary ranks: ranks[d+1] = rank of the map C_d -> C_{d-1}
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 3, 0);
    for (int d = 0; d <= dim; ++d) {
        const auto& domain = by_dim[static_cast<std::size_t>(d) + 1];
        const auto& codomain = by_dim[static_cast<std::size_t>(d)];
        std::vector<std::vector<int>> mat(codomain.size(), std::vector<int>(domain.size(), 0));
        for (std::size_t col = 0; col < domain.size(); ++col) {
            std::uint64_t fm = domain[col];
            int sign = 1;
            for (std::uint64_t rest = fm; rest; rest &= rest - 1) {
                std::uint64_t bit = rest & (~rest + 1);
                mat[index_of(d, fm & ~bit)][col] = sign;
                sign = -sign;
            }
        }
        ranks[static_cast<std::size_t>(d) + 1] = rank_over(mat, k);
    }

    BettiProfile profile;
    profile.dim = dim;
    profile.values.resize(static_cast<std::size_t>(dim) + 2);
    for (int d = -1; d <= dim; ++d) {
        long chains = static_cast<long>(by_dim[static_cast<std::size_t>(d) + 1].size());
        long rank_d = ranks[static_cast<std::size_t>(d) + 1];   // boundary out of C_d
        long rank_d1 = ranks[static_cast<std::size_t>(d) + 2];  // boundary into C_d
        if (d == -1)
            rank_d = 0;
        profile.values[static_cast<std::size_t>(d) + 1] = chains - rank_d - rank_d1;
    }

    // Euler characteristic identity: alternating face count equals
    // alternating Betti sum. A failure here is a bug in the engine.
    long lhs = 0, rhs = 0;
    for (int d = -1; d <= dim; ++d) {
        long sign = (d % 2 == 0) ? 1 : -1;
        lhs += sign * static_cast<long>(by_dim[static_cast<std::size_t>(d) + 1].size());
        rhs += sign * profile.values[static_cast<std::size_t>(d) + 1];
    }
    if (lhs != rhs)
        throw std::logic_error("reduced_betti: Euler characteristic mismatch");

    return profile;
}

} // namespace cmchordal
