#include "ncg/homomorphism.hpp"

#include <algorithm>
#include <cmath>

namespace ncg {

double KrausMap::tp_defect() const {
  ComplexMatrix s(n_in);
  for (const auto& e : kraus) s += e.adjoint() * e;
  return (s - ComplexMatrix::identity(n_in)).hs_norm();
}

ComplexMatrix KrausMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != n_in || x.cols() != n_in) throw DimensionError("kraus: input dimension mismatch");
  ComplexMatrix out(n_out);
  for (const auto& e : kraus) out += e * x * e.adjoint();
  return out;
}

KrausMap make_kraus(std::size_t n_in, std::size_t n_out, std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("kraus: at least one operator required");
  for (const auto& e : kraus)
    if (e.rows() != n_out || e.cols() != n_in) throw DimensionError("kraus: operator shape is not n_out x n_in");
  KrausMap k{n_in, n_out, std::move(kraus)};
  if (k.tp_defect() > tol::orth) throw InvariantError("kraus: map is not trace preserving");
  return k;
}

IsometryCertificate kraus_to_isometry(const KrausMap& k) {
  const std::size_t d = k.kraus.size();
  IsometryCertificate c{d, k.n_in, k.n_out, ComplexMatrix(d * k.n_out, k.n_in)};
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t a = 0; a < k.n_out; ++a)
      for (std::size_t j = 0; j < k.n_in; ++j) c.e(b * k.n_out + a, j) = k.kraus[b](a, j);
  if (isometry_defect(c.e) > tol::orth) throw InvariantError("isometry: E^* E differs from I");
  return c;
}

KrausMap isometry_to_kraus(const IsometryCertificate& c) {
  if (c.e.rows() != c.d * c.n_out || c.e.cols() != c.n_in) throw DimensionError("isometry: shape is not (d m) x n");
  if (isometry_defect(c.e) > tol::orth) throw InvariantError("isometry: E^* E differs from I");
  std::vector<ComplexMatrix> ks;
  for (std::size_t b = 0; b < c.d; ++b) {
    ComplexMatrix e(c.n_out, c.n_in);
    for (std::size_t a = 0; a < c.n_out; ++a)
      for (std::size_t j = 0; j < c.n_in; ++j) e(a, j) = c.e(b * c.n_out + a, j);
    ks.push_back(std::move(e));
  }
  return KrausMap{c.n_in, c.n_out, std::move(ks)};
}

HomCheck verify_hom(const KrausMap& k, const MatrixSubspace& from, const MatrixSubspace& to, double tolerance) {
  HomCheck h;
  if (from.n() != k.n_in || to.n() != k.n_out) throw DimensionError("verify_hom: dimensions do not match the map");
  for (const auto& e : k.kraus)
    if (e.rows() != k.n_out || e.cols() != k.n_in) throw DimensionError("verify_hom: Kraus operator shape");
  h.tp_defect = k.tp_defect();
  std::vector<ComplexMatrix> adj;
  for (const auto& e : k.kraus) adj.push_back(e.adjoint());
  for (const auto& b : from.basis())
    for (const auto& ea : k.kraus) {
      const auto left = ea * b;
      for (const auto& ec : adj) h.max_residual = std::max(h.max_residual, to.residual(left * ec));
    }
  if (h.tp_defect > tol::orth) h.reason = "map is not trace preserving";
  else if (h.max_residual > tolerance) h.reason = "E_a J E_c^* leaves the target space";
  h.ok = h.reason.empty();
  return h;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d, std::size_t n) {
  if (x.rows() != d * n || x.cols() != d * n) throw DimensionError("partial_trace: dimension does not factor as d*n");
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out(a, b) += x(k * n + a, k * n + b);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& x, std::size_t n, std::size_t m) {
  if (x.rows() != n * m || x.cols() != n * m) throw DimensionError("partial_trace: dimension does not factor as n*m");
  ComplexMatrix out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < m; ++k) out(a, b) += x(a * m + k, b * m + k);
  return out;
}

KrausMap identity_map(std::size_t n) { return KrausMap{n, n, {ComplexMatrix::identity(n)}}; }

KrausMap unitary_map(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("unitary_map: matrix is not square");
  return make_kraus(u.n(), u.n(), {u});
}

KrausMap embed_amplify(std::size_t n, std::size_t d) {
  if (d == 0) throw DimensionError("embed_amplify: d must be positive");
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix e(d * n, n);
    for (std::size_t a = 0; a < n; ++a) e(k * n + a, a) = s;
    ks.push_back(std::move(e));
  }
  return KrausMap{n, d * n, std::move(ks)};
}

KrausMap partial_trace_first_map(std::size_t d, std::size_t n) {
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix e(n, d * n);
    for (std::size_t a = 0; a < n; ++a) e(a, k * n + a) = 1.0;
    ks.push_back(std::move(e));
  }
  return KrausMap{d * n, n, std::move(ks)};
}

KrausMap partial_trace_second_map(std::size_t n, std::size_t m) {
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexMatrix e(n, n * m);
    for (std::size_t a = 0; a < n; ++a) e(a, a * m + k) = 1.0;
    ks.push_back(std::move(e));
  }
  return KrausMap{n * m, n, std::move(ks)};
}

KrausMap box_left_embedding(std::size_t n, const OrthonormalFamily& w) {
  const std::size_t m = w.n();
  const auto w1 = normalized(w[0]);
  ComplexMatrix e(n * m, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) e(a * m + b, a) = w1[b];
  return make_kraus(n, n * m, {e});
}

KrausMap box_right_embedding(const OrthonormalFamily& v, std::size_t m) {
  const std::size_t n = v.n();
  const auto v1 = normalized(v[0]);
  ComplexMatrix e(n * m, m);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < m; ++a) e(b * m + a, a) = v1[b];
  return make_kraus(m, n * m, {e});
}

Colouring transport_minimal_colouring(const IsometryCertificate& cert, const Colouring& target) {
  const std::size_t big = cert.d * cert.n_out;
  if (target.basis.size() != big) throw DimensionError("transport: colouring does not live on M_d(K)");
  const ComplexMatrix eadj = cert.e.adjoint();
  const std::size_t n = cert.n_in;

  std::vector<Vector> accepted_on;  // orthonormalized copy of everything accepted so far
  Colouring out;
  out.mode = ColouringMode::minimal;
  for (const auto& part : target.parts) {
    std::vector<std::size_t> q;
    for (const auto i : part) {
      Vector u = eadj * target.basis[i];
      const double len = norm(u);
      if (len <= tol::rank) continue;
      u = normalized(u);
      // Residual of the unit vector against the accepted span is the volume
      // ratio det(Gram + u) / det(Gram).
      Vector r = u;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : accepted_on) {
          const cplx c = vdot(b, r);
          for (std::size_t a = 0; a < n; ++a) r[a] -= c * b[a];
        }
      const double rn = norm(r);
      if (rn <= 1e-8) continue;
      for (auto& x : r) x /= rn;
      accepted_on.push_back(std::move(r));
      q.push_back(out.basis.size());
      out.basis.push_back(std::move(u));
    }
    if (!q.empty()) out.parts.push_back(std::move(q));
  }
  if (out.basis.size() != n) throw InvariantError("transport: pulled-back vectors do not span C^n");
  return out;
}

}  // namespace ncg
