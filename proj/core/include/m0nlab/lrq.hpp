#ifndef M0NLAB_LRQ_HPP
#define M0NLAB_LRQ_HPP

#include <vector>

#include "m0nlab/numeric.hpp"

namespace m0nlab {

// Partitions are weakly decreasing vectors of positive parts (no zeros stored).
using Partition = std::vector<int>;

Partition normalize_partition(std::vector<int> parts);
int part_size(const Partition& p);                       // |lambda|
bool fits_rectangle(const Partition& p, int rows, int cols);
bool contains_partition(const Partition& outer, const Partition& inner);
// complement in the rows x cols rectangle, row-reversed (Grassmannian
// Poincare duality)
Partition rectangle_dual(const Partition& p, int rows, int cols);

// contragredient weight for the (r+1)-type algebra: pad to r+1 rows, then
// (p_1 - p_{r+1}, ..., p_1 - p_2); this is the dual the factorization
// recursion uses (sl_2 weights are self-dual)
Partition contragredient(const Partition& p, int r);

// Classical LR coefficient c^nu_{lambda mu} by LR skew-tableau counting
// (reverse reading word lattice condition).
Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

// Multi-factor coefficient against the full rows x cols rectangle,
// by iterated contraction pruned to shapes inside the rectangle.
Int multi_lr(const std::vector<Partition>& lams, int rows, int cols);

struct LevelAlphabet {
    int r = 1;   // algebra type: (r+1) x (r+1) trace zero
    int ell = 1; // level

    std::vector<Partition> members() const; // all partitions in the r x ell rectangle
};

// Coefficient of q^d times the top class (N-k)^k in the quantum product on
// Gr(k, N): classical expansion in <= k rows followed by N-rim-hook
// reduction on beta-numbers, sign (-1)^{k - height} per hook.
// Requires sum |lambda^i| = k(N-k) + dN; anything else gives 0.
Int quantum_lr(const std::vector<Partition>& lams, int k, int N, int d);

// Rank of the conformal-block bundle with the given one-weight-per-leg
// list, by the (quantum) LR dictionary.
Int conformal_rank(const LevelAlphabet& alphabet, const std::vector<Partition>& weights);

// sum over mu of rank(left + mu) * rank(right + mu*); must agree with
// conformal_rank on the full list.
Int rank_by_factorization(const LevelAlphabet& alphabet,
                          const std::vector<Partition>& weights,
                          const std::vector<int>& left_legs);

// Independent sl_2 oracle: the level-ell Verlinde sum evaluated in long
// double with an integrality check. Test-scale only (ell <= 8 or so).
Int verlinde_rank_sl2(int ell, const std::vector<int>& weights);

} // namespace m0nlab

#endif
