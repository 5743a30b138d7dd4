#ifndef ACBM_LIE_HPP
#define ACBM_LIE_HPP

#include <stdexcept>
#include <tuple>
#include <vector>

#include "acbm/condition_set.hpp"
#include "acbm/linalg.hpp"
#include "acbm/ring.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// A finite-dimensional Lie algebra presented by structure constants over an
// exact ring: [e_i, e_j] = c(k,i,j) e_k, antisymmetric in (i,j). The Jacobi
// identity is not assumed; it is exposed as a checkable condition so that
// parameter families can be classified by where it holds.
template <class Ring>
class LieAlgebra {
public:
  LieAlgebra(int dim, Tensor<Ring> structure)
      : dim_(dim), c_(std::move(structure)) {
    if (dim <= 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
    Variance want{IndexKind::Upper, IndexKind::Lower, IndexKind::Lower};
    if (c_.dimension() != dim || c_.variance() != want)
      throw std::invalid_argument("LieAlgebra: structure tensor must be (1,2) of matching dimension");
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= i; ++j) {
          Ring s = c_(k, i, j) + c_(k, j, i);
          if (!ring_traits<Ring>::is_zero(s))
            throw std::invalid_argument("LieAlgebra: structure constants not antisymmetric");
        }
  }

  // Brackets given as (i, j, k, value) entries with i < j meaning
  // [e_i, e_j] has coefficient `value` on e_k; omitted entries are zero.
  static LieAlgebra from_brackets(int dim,
                                  const std::vector<std::tuple<int, int, int, Ring>>& entries) {
    Tensor<Ring> c(dim, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
    for (const auto& [i, j, k, value] : entries) {
      if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
        throw std::invalid_argument("LieAlgebra: bracket index out of range");
      if (i >= j) throw std::invalid_argument("LieAlgebra: bracket entries need i < j");
      c(k, i, j) = c(k, i, j) + value;
      c(k, j, i) = c(k, j, i) - value;
    }
    return LieAlgebra(dim, std::move(c));
  }

  int dimension() const { return dim_; }
  const Tensor<Ring>& structure() const { return c_; }
  const Ring& c(int k, int i, int j) const { return c_(k, i, j); }

  // Components of [e_i, e_j] in the frame.
  std::vector<Ring> bracket(int i, int j) const {
    std::vector<Ring> out(static_cast<size_t>(dim_));
    for (int k = 0; k < dim_; ++k) out[size_t(k)] = c_(k, i, j);
    return out;
  }

  // ad(e_i) as a (1,1) tensor: slot (k, j) holds the e_k-component of [e_i, e_j].
  Tensor<Ring> adjoint(int i) const {
    Tensor<Ring> a(dim_, {IndexKind::Upper, IndexKind::Lower});
    for (int k = 0; k < dim_; ++k)
      for (int j = 0; j < dim_; ++j) a(k, j) = c_(k, i, j);
    return a;
  }

private:
  int dim_;
  Tensor<Ring> c_;  // (Upper, Lower, Lower), slots (k, i, j)
};

// Cyclic-sum residuals of the Jacobi identity, one polynomializable value per
// (i < j < k, m). All must vanish for the bracket to close into a Lie algebra.
template <class Ring>
std::vector<Ring> jacobi_residuals(const LieAlgebra<Ring>& L) {
  int d = L.dimension();
  std::vector<Ring> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          Ring acc{};
          for (int l = 0; l < d; ++l) {
            acc = acc + L.c(l, j, k) * L.c(m, i, l);
            acc = acc + L.c(l, k, i) * L.c(m, j, l);
            acc = acc + L.c(l, i, j) * L.c(m, k, l);
          }
          out.push_back(acc);
        }
  return out;
}

template <class Ring>
ConditionSet check_jacobi(const LieAlgebra<Ring>& L) {
  std::vector<Polynomial> res;
  for (const Ring& r : jacobi_residuals(L)) res.push_back(ring_traits<Ring>::to_polynomial(r));
  return ConditionSet::from_residuals(res);
}

// Trace of ad(e_i) per i; a Lie algebra is unimodular when every adjoint map
// is traceless.
template <class Ring>
std::vector<Ring> unimodular_residuals(const LieAlgebra<Ring>& L) {
  int d = L.dimension();
  std::vector<Ring> out;
  for (int i = 0; i < d; ++i) {
    Ring acc{};
    for (int k = 0; k < d; ++k) acc = acc + L.c(k, i, k);
    out.push_back(acc);
  }
  return out;
}

template <class Ring>
ConditionSet check_unimodular(const LieAlgebra<Ring>& L) {
  std::vector<Polynomial> res;
  for (const Ring& r : unimodular_residuals(L))
    res.push_back(ring_traits<Ring>::to_polynomial(r));
  return ConditionSet::from_residuals(res);
}

inline bool is_unimodular(const LieAlgebra<Rational>& L) {
  for (const Rational& r : unimodular_residuals(L))
    if (!r.is_zero()) return false;
  return true;
}

// Evaluates a parametric algebra at a rational parameter point.
inline LieAlgebra<Rational> specialize(const LieAlgebra<Polynomial>& L,
                                       const std::map<std::string, Rational>& point) {
  int d = L.dimension();
  Tensor<Rational> c(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  for (size_t f = 0; f < c.size(); ++f)
    c.component(f) = L.structure().component(f).eval(point);
  return LieAlgebra<Rational>(d, std::move(c));
}

// Structure constants in the frame f_i = P^m_i e_m (columns of P are the new
// frame vectors): c'(k,i,j) = (P^-1)^k_l c(l,m,n) P^m_i P^n_j.
inline LieAlgebra<Rational> change_frame(const LieAlgebra<Rational>& L, const QMatrix& P) {
  int d = L.dimension();
  if (P.rows() != d || P.cols() != d)
    throw std::invalid_argument("change_frame: matrix size mismatch");
  auto Pinv = inverse(P);
  if (!Pinv) throw std::invalid_argument("change_frame: frame matrix is singular");
  Tensor<Rational> c(d, {IndexKind::Upper, IndexKind::Lower, IndexKind::Lower});
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational acc;
        for (int l = 0; l < d; ++l)
          for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
              acc += Pinv->at(k, l) * L.c(l, m, n) * P.at(m, i) * P.at(n, j);
        c(k, i, j) = acc;
      }
  return LieAlgebra<Rational>(d, std::move(c));
}

}  // namespace acbm

#endif
