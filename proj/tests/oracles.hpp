#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the normal-form code; inputs are plain edge lists and machine integers.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;
using Matrix = std::vector<std::vector<long long>>;

/// Counts spanning trees by trying every (n-1)-subset of edges. Loops are skipped.
long long spanning_trees(int vertex_count, const EdgeList& edges);

/// Invariant-factor chain of (+) Z/orders[i], built from the prime-power
/// multiset. Factors equal to 1 are dropped.
std::vector<long long> canonical_chain(const std::vector<long long>& orders);

/// Invariant factors of an integer matrix from determinantal divisors
/// (gcd of all k x k minors). Intended for matrices up to 4 x 4. Trailing
/// zeros mark rank deficiency; the list has min(rows, cols) entries.
std::vector<long long> determinantal_invariants(const Matrix& m);

/// Is v = m * c for some c with entries in [-bound, bound]?
bool bounded_combination(const Matrix& m, const std::vector<long long>& v, int bound);

/// Multigraph isomorphism by trying every vertex bijection. Loops are ignored.
bool isomorphic(int vertex_count, const EdgeList& a, const EdgeList& b);

/// Connected loopless multigraph with `vertex_count` vertices and `edge_count`
/// edges (edge_count >= vertex_count - 1): a random spanning tree plus
/// random extra edges, parallel edges allowed.
EdgeList random_connected_multigraph(std::mt19937_64& rng, int vertex_count, int edge_count);

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi);

long long gcd_all(const std::vector<long long>& values);

}  // namespace oracle
