#pragma once

#include <string>
#include <vector>

#include "ncg/family.hpp"
#include "ncg/parameters.hpp"
#include "ncg/subspace.hpp"

namespace ncg {

/// X -> sum_i E_i X E_i^*, E_i of shape n_out x n_in.
struct KrausMap {
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  std::vector<ComplexMatrix> kraus;

  /// ||sum_i E_i^* E_i - I||_HS
  double tp_defect() const;
  ComplexMatrix apply(const ComplexMatrix& x) const;
};

/// Checks shapes (DimensionError) and trace preservation (InvariantError).
KrausMap make_kraus(std::size_t n_in, std::size_t n_out, std::vector<ComplexMatrix> kraus);

/// E : C^n_in -> C^d (x) C^n_out, E = sum_k e_k (x) E_k (row k*n_out + a).
struct IsometryCertificate {
  std::size_t d = 1;
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  ComplexMatrix e;
};

IsometryCertificate kraus_to_isometry(const KrausMap& k);
KrausMap isometry_to_kraus(const IsometryCertificate& c);

struct HomCheck {
  bool ok = false;
  double max_residual = 0.0;  // over E_a b E_c^* for basis elements b
  double tp_defect = 0.0;
  std::string reason;
};

/// E_a J E_c^* inside K for all a, c, and the map is trace preserving.
HomCheck verify_hom(const KrausMap& k, const MatrixSubspace& from, const MatrixSubspace& to,
                    double tolerance = tol::orth);

/// Traces out the first factor of M_d (x) M_n.
ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d, std::size_t n);
/// Traces out the second factor of M_n (x) M_m.
ComplexMatrix partial_trace_second(const ComplexMatrix& x, std::size_t n, std::size_t m);

KrausMap identity_map(std::size_t n);
KrausMap unitary_map(const ComplexMatrix& u);
/// X -> (1/d) 1_d (x) X: Kraus d^{-1/2} (e_k (x) I_n).
KrausMap embed_amplify(std::size_t n, std::size_t d);
/// M_d (x) M_n -> M_n: Kraus e_k^* (x) I_n.
KrausMap partial_trace_first_map(std::size_t d, std::size_t n);
/// M_n (x) M_m -> M_n: Kraus I_n (x) e_k^*.
KrausMap partial_trace_second_map(std::size_t n, std::size_t m);
/// J -> J (x) D_w : x -> x (x) w_1/||w_1||.
KrausMap box_left_embedding(std::size_t n, const OrthonormalFamily& w);
/// K -> D_v (x) K : x -> v_1/||v_1|| (x) x.
KrausMap box_right_embedding(const OrthonormalFamily& v, std::size_t m);

/// Pulls a minimal colouring of M_d (x) K back through E^* and splits it by
/// the filtration V_s = span of the new directions of part s, giving a
/// minimal colouring of J with at most as many parts.
Colouring transport_minimal_colouring(const IsometryCertificate& cert, const Colouring& target);

}  // namespace ncg
