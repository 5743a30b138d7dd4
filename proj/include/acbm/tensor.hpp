#ifndef ACBM_TENSOR_HPP
#define ACBM_TENSOR_HPP

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "acbm/linalg.hpp"
#include "acbm/ring.hpp"

namespace acbm {

enum class IndexKind : std::uint8_t { Upper, Lower };

using Variance = std::vector<IndexKind>;

// Dense frame-component tensor over an exact scalar ring, with an explicit
// upper/lower kind per slot. Rank 0 holds a single scalar.
template <class Ring>
class Tensor {
public:
  Tensor() : dim_(0), comp_(1) {}
  Tensor(int dim, Variance variance)
      : dim_(dim), variance_(std::move(variance)), comp_(count(dim, variance_.size())) {
    if (dim <= 0) throw std::invalid_argument("Tensor: dimension must be positive");
  }

  int dimension() const { return dim_; }
  int rank() const { return int(variance_.size()); }
  const Variance& variance() const { return variance_; }

  size_t size() const { return comp_.size(); }
  Ring& component(size_t flat) { return comp_[flat]; }
  const Ring& component(size_t flat) const { return comp_[flat]; }

  const Ring& at(const std::vector<int>& idx) const { return comp_[flat(idx)]; }
  Ring& at(const std::vector<int>& idx) { return comp_[flat(idx)]; }

  template <class... I>
  Ring& operator()(I... idx) {
    return comp_[flat({int(idx)...})];
  }
  template <class... I>
  const Ring& operator()(I... idx) const {
    return comp_[flat({int(idx)...})];
  }

  const Ring& scalar_value() const {
    if (rank() != 0) throw std::domain_error("Tensor: scalar_value on rank > 0");
    return comp_[0];
  }

  size_t flat(const std::vector<int>& idx) const {
    if (idx.size() != variance_.size())
      throw std::invalid_argument("Tensor: wrong number of indices");
    size_t f = 0;
    for (size_t s = 0; s < idx.size(); ++s) {
      if (idx[s] < 0 || idx[s] >= dim_) throw std::out_of_range("Tensor: index out of range");
      f = f * size_t(dim_) + size_t(idx[s]);
    }
    return f;
  }
  size_t flat(std::initializer_list<int> idx) const { return flat(std::vector<int>(idx)); }

  // Decodes a flat offset into a multi-index.
  std::vector<int> unflat(size_t f) const {
    std::vector<int> idx(variance_.size());
    for (size_t s = variance_.size(); s-- > 0;) {
      idx[s] = int(f % size_t(dim_));
      f /= size_t(dim_);
    }
    return idx;
  }

private:
  static size_t count(int dim, size_t rank) {
    size_t n = 1;
    for (size_t s = 0; s < rank; ++s) n *= size_t(dim);
    return n;
  }

  int dim_;
  Variance variance_;
  std::vector<Ring> comp_;
};

template <class Ring>
bool same_shape(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  return a.dimension() == b.dimension() && a.variance() == b.variance();
}

template <class Ring>
bool operator==(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  if (!same_shape(a, b)) return false;
  for (size_t f = 0; f < a.size(); ++f)
    if (!(a.component(f) == b.component(f))) return false;
  return true;
}

template <class Ring>
bool operator!=(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  return !(a == b);
}

template <class Ring>
bool is_zero(const Tensor<Ring>& t) {
  for (size_t f = 0; f < t.size(); ++f)
    if (!ring_traits<Ring>::is_zero(t.component(f))) return false;
  return true;
}

template <class Ring>
Tensor<Ring> operator+(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  if (!same_shape(a, b)) throw std::invalid_argument("Tensor: shape mismatch in +");
  Tensor<Ring> r = a;
  for (size_t f = 0; f < r.size(); ++f) r.component(f) = r.component(f) + b.component(f);
  return r;
}

template <class Ring>
Tensor<Ring> operator-(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  if (!same_shape(a, b)) throw std::invalid_argument("Tensor: shape mismatch in -");
  Tensor<Ring> r = a;
  for (size_t f = 0; f < r.size(); ++f) r.component(f) = r.component(f) - b.component(f);
  return r;
}

template <class Ring>
Tensor<Ring> operator-(const Tensor<Ring>& a) {
  Tensor<Ring> r = a;
  for (size_t f = 0; f < r.size(); ++f) r.component(f) = -r.component(f);
  return r;
}

template <class Ring>
  requires(!std::same_as<Ring, Rational>)
Tensor<Ring> scale(const Tensor<Ring>& a, const Ring& c) {
  Tensor<Ring> r = a;
  for (size_t f = 0; f < r.size(); ++f) r.component(f) = r.component(f) * c;
  return r;
}

template <class Ring>
Tensor<Ring> scale(const Tensor<Ring>& a, const Rational& c) {
  Tensor<Ring> r = a;
  for (size_t f = 0; f < r.size(); ++f)
    r.component(f) = ring_traits<Ring>::scale(r.component(f), c);
  return r;
}

template <class Ring>
Tensor<Ring> outer(const Tensor<Ring>& a, const Tensor<Ring>& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("Tensor: dimension mismatch in outer");
  Variance v = a.variance();
  v.insert(v.end(), b.variance().begin(), b.variance().end());
  Tensor<Ring> r(a.dimension(), v);
  for (size_t fa = 0; fa < a.size(); ++fa)
    for (size_t fb = 0; fb < b.size(); ++fb)
      r.component(fa * b.size() + fb) = a.component(fa) * b.component(fb);
  return r;
}

// Contracts one upper slot against one lower slot (arguments in either order).
template <class Ring>
Tensor<Ring> contract(const Tensor<Ring>& t, int slot_a, int slot_b) {
  int r = t.rank(), d = t.dimension();
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= r || slot_b >= r)
    throw std::invalid_argument("Tensor: bad contraction slots");
  if (t.variance()[slot_a] == t.variance()[slot_b])
    throw std::invalid_argument("Tensor: contraction needs one upper and one lower slot");
  int lo = slot_a < slot_b ? slot_a : slot_b;
  int hi = slot_a < slot_b ? slot_b : slot_a;
  Variance v = t.variance();
  v.erase(v.begin() + hi);
  v.erase(v.begin() + lo);
  Tensor<Ring> out(d, v);
  std::vector<int> full(static_cast<size_t>(r));
  for (size_t f = 0; f < out.size(); ++f) {
    std::vector<int> j = out.unflat(f);
    Ring acc{};
    for (int m = 0; m < d; ++m) {
      int jp = 0;
      for (int s = 0; s < r; ++s)
        full[size_t(s)] = (s == lo || s == hi) ? m : j[size_t(jp++)];
      acc = acc + t.at(full);
    }
    out.component(f) = acc;
  }
  return out;
}

// Result slot p reads the input slot perm[p].
template <class Ring>
Tensor<Ring> permute(const Tensor<Ring>& t, const std::vector<int>& perm) {
  int r = t.rank();
  if (int(perm.size()) != r) throw std::invalid_argument("Tensor: bad permutation size");
  std::vector<bool> seen(static_cast<size_t>(r), false);
  Variance v(static_cast<size_t>(r));
  for (int p = 0; p < r; ++p) {
    if (perm[size_t(p)] < 0 || perm[size_t(p)] >= r || seen[size_t(perm[size_t(p)])])
      throw std::invalid_argument("Tensor: invalid permutation");
    seen[size_t(perm[size_t(p)])] = true;
    v[size_t(p)] = t.variance()[size_t(perm[size_t(p)])];
  }
  Tensor<Ring> out(t.dimension(), v);
  std::vector<int> src(static_cast<size_t>(r));
  for (size_t f = 0; f < out.size(); ++f) {
    std::vector<int> j = out.unflat(f);
    for (int p = 0; p < r; ++p) src[size_t(perm[size_t(p)])] = j[size_t(p)];
    out.component(f) = t.at(src);
  }
  return out;
}

// Metric and its exact inverse. Entries must be constants; the inverse is
// computed by adjugate over determinant in exact rationals.
template <class Ring>
struct MetricPair {
  Tensor<Ring> g;      // (Lower, Lower)
  Tensor<Ring> g_inv;  // (Upper, Upper)

  int dimension() const { return g.dimension(); }

  static MetricPair from_metric(const Tensor<Ring>& g) {
    if (g.rank() != 2 || g.variance() != Variance{IndexKind::Lower, IndexKind::Lower})
      throw std::invalid_argument("MetricPair: metric must be a (0,2) tensor");
    int d = g.dimension();
    QMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (!ring_traits<Ring>::is_constant(g(i, j)))
          throw std::invalid_argument("MetricPair: metric entries must be constants");
        m.at(i, j) = ring_traits<Ring>::to_rational(g(i, j));
      }
    if (!m.is_symmetric()) throw std::invalid_argument("MetricPair: metric not symmetric");
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("MetricPair: metric is degenerate");
    MetricPair pair{g, Tensor<Ring>(d, {IndexKind::Upper, IndexKind::Upper})};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        pair.g_inv(i, j) = ring_traits<Ring>::from_rational(inv->at(i, j));
    return pair;
  }
};

template <class Ring>
Tensor<Ring> raise_index(const Tensor<Ring>& t, int slot, const MetricPair<Ring>& m) {
  int r = t.rank(), d = t.dimension();
  if (slot < 0 || slot >= r) throw std::invalid_argument("Tensor: bad slot in raise_index");
  if (t.variance()[size_t(slot)] != IndexKind::Lower)
    throw std::invalid_argument("Tensor: raise_index needs a lower slot");
  Variance v = t.variance();
  v[size_t(slot)] = IndexKind::Upper;
  Tensor<Ring> out(d, v);
  for (size_t f = 0; f < out.size(); ++f) {
    std::vector<int> idx = out.unflat(f);
    int a = idx[size_t(slot)];
    Ring acc{};
    for (int mm = 0; mm < d; ++mm) {
      idx[size_t(slot)] = mm;
      acc = acc + m.g_inv(a, mm) * t.at(idx);
    }
    out.component(f) = acc;
  }
  return out;
}

template <class Ring>
Tensor<Ring> lower_index(const Tensor<Ring>& t, int slot, const MetricPair<Ring>& m) {
  int r = t.rank(), d = t.dimension();
  if (slot < 0 || slot >= r) throw std::invalid_argument("Tensor: bad slot in lower_index");
  if (t.variance()[size_t(slot)] != IndexKind::Upper)
    throw std::invalid_argument("Tensor: lower_index needs an upper slot");
  Variance v = t.variance();
  v[size_t(slot)] = IndexKind::Lower;
  Tensor<Ring> out(d, v);
  for (size_t f = 0; f < out.size(); ++f) {
    std::vector<int> idx = out.unflat(f);
    int a = idx[size_t(slot)];
    Ring acc{};
    for (int mm = 0; mm < d; ++mm) {
      idx[size_t(slot)] = mm;
      acc = acc + m.g(a, mm) * t.at(idx);
    }
    out.component(f) = acc;
  }
  return out;
}

}  // namespace acbm

#endif
