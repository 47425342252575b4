#pragma once

// The double-coset index set I(P) for P\G/H, P-admissibility, and the
// splitting of a segment tuple along a coset matrix (Jacquet module of the
// inducing datum) together with the Mackey distinction conditions.

#include "segcalc/formula.hpp"
#include "segcalc/permutation.hpp"
#include "segcalc/segments.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segcalc {

/// Symmetric t×t matrix of non-negative integers.
class CosetMatrix {
public:
    /// Throws PreconditionError unless entries.size() == t·t, all entries are
    /// non-negative and the matrix is symmetric.
    CosetMatrix(std::size_t t, std::vector<int> entries);

    std::size_t size() const { return t_; }
    int at(std::size_t i, std::size_t j) const { return entries_[i * t_ + j]; }
    int row_sum(std::size_t i) const;
    const std::vector<int>& entries() const { return entries_; }

    /// "[[0,1],[1,0]]".
    std::string str() const;

    friend bool operator==(const CosetMatrix&, const CosetMatrix&) = default;
    friend auto operator<=>(const CosetMatrix&, const CosetMatrix&) = default;

private:
    std::size_t t_;
    std::vector<int> entries_;
};

/// All symmetric non-negative matrices with row sums `partition` (and even
/// diagonal when d is odd), in lexicographic row-major order.
std::vector<CosetMatrix> enumerate_coset_matrices(std::span<const int> partition, int d);

/// True iff every row has exactly one nonzero entry.
bool is_admissible(const CosetMatrix& s);

/// σ(i) = the unique j with n_{i,j} ≠ 0. Throws PreconditionError when s is
/// not admissible.
Permutation involution_of(const CosetMatrix& s);

/// Cell (i,j) holds Δ_{i,j}, or nothing when n_{i,j} = 0.
class SplitData {
public:
    explicit SplitData(std::size_t t) : t_(t), cells_(t * t) {}

    std::size_t size() const { return t_; }
    const std::optional<Segment>& at(std::size_t i, std::size_t j) const { return cells_[i * t_ + j]; }
    std::optional<Segment>& at(std::size_t i, std::size_t j) { return cells_[i * t_ + j]; }

private:
    std::size_t t_;
    std::vector<std::optional<Segment>> cells_;
};

/// Carves each Δ_i = [a_i, b_i] into consecutive chunks from the top: the
/// first nonzero cell of row i gets the highest n_{i,j}/k_i points, the next
/// one the block below it, and so on. Returns nullopt when some n_{i,j} is not
/// a multiple of k_i. Throws PreconditionError when the row sums do not match.
std::optional<SplitData> jacquet_splitting(std::span<const Segment> segments, const CosetMatrix& s);

/// Δ_{i,j} ≅ Δ_{j,i}^∨ for all i ≠ j (emptiness included).
bool mackey_offdiagonal_ok(const SplitData& split);

/// Δ_{i,j} ≅ Δ_{j,i}^∨ for all i, j, diagonal cells included.
bool mackey_duality_ok(const SplitData& split);

/// First (i,j) in row-major order where the duality fails, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_duality_failure(const SplitData& split);

/// The conjunction of Dist(Δ_{i,i}) over nonempty diagonal cells, or nullopt
/// when the cell duality fails or some diagonal cell violates the embedding
/// condition.
std::optional<Clause> mackey_atoms(const SplitData& split, const Context& ctx);

}  // namespace segcalc
