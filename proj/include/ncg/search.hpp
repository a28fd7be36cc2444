#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ncg/relations.hpp"

namespace ncg {

/// Lexicographic objective: smaller primary wins, then smaller slack.
struct BasisScore {
  long primary = 0;
  double slack = 0.0;
};
bool better(const BasisScore& a, const BasisScore& b);

enum class MoveKind {
  givens,  // unitary rotations with phase on a vector pair; keeps orthonormality
  shear,   // v_p += eps * phase * v_q; keeps linear independence only
};

struct SearchConfig {
  std::size_t starts = 64;
  int sweeps = 2;
  std::uint64_t seed = 0;
  MoveKind moves = MoveKind::givens;
  // Structured starts, tried before the random ones (origins 0..seeds-1).
  std::vector<std::vector<Vector>> seeds;
  // Hermitian orthonormal basis; when non-empty every random start is first
  // jointly diagonalized against it.
  std::vector<ComplexMatrix> polish;
};

using ScoreFn = std::function<BasisScore(const DerivedGraphs&)>;

struct Candidate {
  std::vector<Vector> basis;
  DerivedGraphs graphs;
  BasisScore score;
  std::size_t origin = 0;  // start index, for deterministic tie-breaks
};

/// Local refinement by accepting strictly improving pair moves, sweep by sweep.
Candidate refine(const RelationOracle& oracle, const ScoreFn& score, std::vector<Vector> start, int sweeps,
                 MoveKind moves, std::size_t origin);

/// Jacobi joint diagonalization: unitary pair rotations (closed-form angle)
/// that maximize sum_b sum_i |v_i^* B_b v_i|^2, i.e. the mass of the rank-one
/// diagonals v_i v_i^* inside span{B_b}.
std::vector<Vector> joint_diagonalize(std::span<const ComplexMatrix> hermitian, std::vector<Vector> start,
                                      int max_sweeps = 100);
double diagonal_mass(std::span<const ComplexMatrix> hermitian, std::span<const Vector> basis);

/// Seeds first, then random Haar starts (sub-seed derived from (seed, start index)), each
/// refined independently. Results are returned in start order, so the output
/// does not depend on the thread count.
std::vector<Candidate> multistart(const RelationOracle& oracle, const ScoreFn& score, const SearchConfig& config);
std::vector<Candidate> multistart_serial(const RelationOracle& oracle, const ScoreFn& score,
                                         const SearchConfig& config);

/// Best by (score, origin).
const Candidate& best_of(std::span<const Candidate> candidates);

}  // namespace ncg
