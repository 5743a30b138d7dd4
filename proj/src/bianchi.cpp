#include "acbm/bianchi.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace acbm {

namespace {

int eps(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // Parity of the permutation (i j k) of (0 1 2).
  return ((j - i) * (k - j) * (k - i) > 0) ? 1 : -1;
}

std::string format_h(double h) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", h);
  return buf;
}

struct Decomposition {
  QMatrix n{3, 3};
  std::vector<Rational> a{Rational(), Rational(), Rational()};
};

Decomposition decompose(const LieAlgebra<Rational>& L) {
  Decomposition d;
  for (int i = 0; i < 3; ++i) {
    Rational t;
    for (int k = 0; k < 3; ++k) t += L.c(k, i, k);
    d.a[size_t(i)] = t / Rational(2);
  }
  QMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int mm = 0; mm < 3; ++mm) {
        int e = eps(i, j, mm);
        if (e == 0) continue;
        for (int k = 0; k < 3; ++k)
          m.at(mm, k) += Rational(e) * L.c(k, i, j);
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d.n.at(i, j) = (m.at(i, j) + m.at(j, i)) / Rational(2);

  // The decomposition is a linear bijection in dimension 3; re-expanding it
  // must reproduce the structure constants exactly.
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Rational rebuilt;
        for (int l = 0; l < 3; ++l) rebuilt += Rational(eps(i, j, l)) * d.n.at(l, k);
        if (k == j) rebuilt += d.a[size_t(i)];
        if (k == i) rebuilt -= d.a[size_t(j)];
        if (rebuilt != L.c(k, i, j))
          throw std::logic_error("bianchi_classify: structure-constant decomposition failed");
      }
  return d;
}

bool vector_is_zero(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Restricted adjoint map data on an invariant 2-plane W spanned by (w0, w1):
// A is ad_v restricted to W, where v is the first standard frame vector
// outside W.
struct RestrictedAdjoint {
  Rational trace;
  Rational det;
};

RestrictedAdjoint restricted_adjoint(const LieAlgebra<Rational>& L,
                                     const std::vector<Rational>& w0,
                                     const std::vector<Rational>& w1) {
  QMatrix span(3, 2);
  for (int r = 0; r < 3; ++r) {
    span.at(r, 0) = w0[size_t(r)];
    span.at(r, 1) = w1[size_t(r)];
  }
  int v = -1;
  for (int m = 0; m < 3 && v < 0; ++m) {
    QMatrix probe(3, 3);
    for (int r = 0; r < 3; ++r) {
      probe.at(r, 0) = w0[size_t(r)];
      probe.at(r, 1) = w1[size_t(r)];
      probe.at(r, 2) = Rational(r == m ? 1 : 0);
    }
    if (rank(probe) == 3) v = m;
  }
  if (v < 0) throw std::logic_error("bianchi_classify: invariant plane is not 2-dimensional");

  Rational A[2][2];
  const std::vector<Rational>* w[2] = {&w0, &w1};
  for (int col = 0; col < 2; ++col) {
    std::vector<Rational> image(3);
    for (int k = 0; k < 3; ++k) {
      Rational acc;
      for (int j = 0; j < 3; ++j) acc += L.c(k, v, j) * (*w[col])[size_t(j)];
      image[size_t(k)] = acc;
    }
    auto coords = solve(span, image);
    if (!coords) throw std::logic_error("bianchi_classify: plane not invariant under adjoint");
    A[0][col] = (*coords)[0];
    A[1][col] = (*coords)[1];
  }
  return {A[0][0] + A[1][1], A[0][0] * A[1][1] - A[0][1] * A[1][0]};
}

// Basis of the derived algebra, as column vectors.
std::vector<std::vector<Rational>> derived_basis(const LieAlgebra<Rational>& L) {
  QMatrix all(3, 3);
  int col = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j, ++col)
      for (int k = 0; k < 3; ++k) all.at(k, col) = L.c(k, i, j);
  std::vector<std::vector<Rational>> basis;
  for (int c : column_basis(all)) {
    std::vector<Rational> v(3);
    for (int r = 0; r < 3; ++r) v[size_t(r)] = all.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of ker(a) for a nonzero covector a.
std::vector<std::vector<Rational>> covector_kernel(const std::vector<Rational>& a) {
  int p = -1;
  for (int i = 0; i < 3; ++i)
    if (!a[size_t(i)].is_zero()) {
      p = i;
      break;
    }
  std::vector<std::vector<Rational>> basis;
  for (int i = 0; i < 3; ++i) {
    if (i == p) continue;
    std::vector<Rational> w(3);
    w[size_t(i)] = Rational(1);
    w[size_t(p)] = -a[size_t(i)] / a[size_t(p)];
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace

std::string BianchiType::tag_name() const {
  switch (tag) {
    case Tag::I: return "I";
    case Tag::II: return "II";
    case Tag::III: return "III";
    case Tag::IV: return "IV";
    case Tag::V: return "V";
    case Tag::VI_h: return "VI_h";
    case Tag::VII_0: return "VII_0";
    case Tag::VII_h: return "VII_h";
    case Tag::VIII: return "VIII";
    case Tag::IX: return "IX";
  }
  return "?";
}

std::string BianchiType::to_string() const {
  std::string s = "type " + tag_name();
  if (tag == Tag::I) return s + " (abelian)";
  std::vector<std::string> parts;
  if (h) parts.push_back("h = " + format_h(*h));
  if (trace_a) parts.push_back("tr = " + trace_a->str());
  if (det_a) parts.push_back("det = " + det_a->str());
  if (!parts.empty()) {
    s += " (";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ", ";
      s += parts[i];
    }
    s += ")";
  }
  return s;
}

BianchiType bianchi_classify(const LieAlgebra<Rational>& L) {
  if (L.dimension() != 3)
    throw std::invalid_argument("bianchi_classify: only 3-dimensional algebras are classified");
  for (const Rational& r : jacobi_residuals(L))
    if (!r.is_zero())
      throw std::invalid_argument("bianchi_classify: Jacobi identity fails at this point");

  Decomposition d = decompose(L);

  // Jacobi for the decomposed bracket is exactly n a = 0.
  for (int i = 0; i < 3; ++i) {
    Rational dot;
    for (int j = 0; j < 3; ++j) dot += d.n.at(i, j) * d.a[size_t(j)];
    if (!dot.is_zero())
      throw std::logic_error("bianchi_classify: Jacobi holds but n a != 0");
  }

  auto [pos, neg] = inertia(d.n);
  int rank_n = pos + neg;
  bool class_a = vector_is_zero(d.a);

  BianchiType out{};
  auto fill_adjoint = [&](const std::vector<std::vector<Rational>>& plane) -> RestrictedAdjoint {
    RestrictedAdjoint ra = restricted_adjoint(L, plane[0], plane[1]);
    out.trace_a = ra.trace;
    out.det_a = ra.det;
    return ra;
  };

  if (class_a) {
    if (rank_n == 0) {
      out.tag = BianchiType::Tag::I;
    } else if (rank_n == 1) {
      out.tag = BianchiType::Tag::II;
    } else if (rank_n == 2) {
      RestrictedAdjoint ra = fill_adjoint(derived_basis(L));
      if (!ra.trace.is_zero())
        throw std::logic_error("bianchi_classify: unimodular algebra with traceful adjoint");
      if (pos == 1 && neg == 1) {
        if (ra.det.sign() >= 0)
          throw std::logic_error("bianchi_classify: signature of n contradicts det A");
        out.tag = BianchiType::Tag::VI_h;
        out.h_exact = Rational(0);
        out.h = 0.0;
      } else {
        if (ra.det.sign() <= 0)
          throw std::logic_error("bianchi_classify: signature of n contradicts det A");
        out.tag = BianchiType::Tag::VII_0;
      }
    } else {
      out.tag = (neg == 0 || pos == 0) ? BianchiType::Tag::IX : BianchiType::Tag::VIII;
    }
    return out;
  }

  if (rank_n == 3)
    throw std::logic_error("bianchi_classify: n has full rank despite n a = 0, a != 0");
  if (rank_n == 0) {
    out.tag = BianchiType::Tag::V;
    fill_adjoint(covector_kernel(d.a));
    return out;
  }
  if (rank_n == 1) {
    out.tag = BianchiType::Tag::IV;
    fill_adjoint(covector_kernel(d.a));
    return out;
  }

  // rank_n == 2, a != 0: the solvable families III / VI_h / VII_h, separated
  // by the eigenvalues of A = ad_v restricted to ker(a).
  RestrictedAdjoint ra = fill_adjoint(covector_kernel(d.a));
  Rational disc = ra.trace * ra.trace - Rational(4) * ra.det;
  if (ra.det.is_zero()) {
    if (!(pos == 1 && neg == 1))
      throw std::logic_error("bianchi_classify: det A = 0 with definite n");
    out.tag = BianchiType::Tag::III;
    return out;
  }
  if (disc.sign() < 0) {
    if (pos == 1 && neg == 1)
      throw std::logic_error("bianchi_classify: non-real eigenvalues with mixed n");
    out.tag = BianchiType::Tag::VII_h;
    out.h = std::abs(ra.trace.to_double()) / std::sqrt(ra.det.to_double());
    return out;
  }
  if (disc.is_zero())
    throw std::logic_error("bianchi_classify: repeated eigenvalue with rank-2 n");
  if (!(pos == 1 && neg == 1))
    throw std::logic_error("bianchi_classify: real distinct eigenvalues with definite n");
  out.tag = BianchiType::Tag::VI_h;
  out.h_exact = -(ra.trace * ra.trace) / disc;
  out.h = out.h_exact->to_double();
  return out;
}

BianchiType bianchi_classify(const LieAlgebra<Polynomial>& L,
                             const std::map<std::string, Rational>& point) {
  return bianchi_classify(specialize(L, point));
}

}  // namespace acbm
