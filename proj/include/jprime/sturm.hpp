#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jprime/errors.hpp"
#include "jprime/poly.hpp"
#include "jprime/rational.hpp"

namespace jprime {

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval requires lo < hi");
  }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo < v && v < hi; }
};

/// Signed remainder sequence p, p', -rem(p, p'), ... Every entry is made
/// primitive (divided by a positive rational), which leaves all signs intact.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm sequence of the zero polynomial");
    seq_.push_back(p.primitive());
    RationalPoly d = p.derivative();
    if (d.is_zero()) return;
    seq_.push_back(d.primitive());
    while (true) {
      RationalPoly r = seq_[seq_.size() - 2] % seq_.back();
      if (r.is_zero()) break;
      seq_.push_back((-r).primitive());
    }
  }

  const std::vector<RationalPoly>& polys() const { return seq_; }

  /// Sign variations at a finite point (zeros skipped).
  std::size_t variations_at(const Rational& x) const {
    std::size_t count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      int s = sgn(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Sign variations at +inf (positive) or -inf (negative).
  std::size_t variations_at_infinity(bool positive) const {
    std::size_t count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      int s = sgn(q.leading());
      if (!positive && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct real roots in (lo, hi); the endpoints must not be roots of p.
  std::size_t count(const Interval& iv) const {
    return variations_at(iv.lo) - variations_at(iv.hi);
  }

  std::size_t count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  std::vector<RationalPoly> seq_;
};

/// Number of distinct real roots of p in the open interval iv.
inline std::size_t sturm_count(const RationalPoly& p, const Interval& iv) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "sturm_count of the zero polynomial");
  if (sgn(p(iv.lo)) == 0 || sgn(p(iv.hi)) == 0)
    throw Error(ErrorKind::EndpointIsRoot, "bracket endpoint is a root; perturb the interval");
  return SturmSequence(p).count(iv);
}

/// Number of distinct real roots of p on the whole line.
inline std::size_t real_root_count(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real_root_count of the zero polynomial");
  return SturmSequence(p).count_all();
}

/// p / gcd(p, p').
inline RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

/// Yun's squarefree decomposition: p = c * prod_i factors[i]^(i+1), each
/// factor squarefree and monic, pairwise coprime.
inline std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
  std::vector<RationalPoly> out;
  if (p.degree() <= 0) return out;
  RationalPoly a = p.monic();
  RationalPoly b = a.derivative();
  RationalPoly c = gcd(a, b);
  RationalPoly w = exact_div(a, c);
  RationalPoly y = exact_div(b, c);
  RationalPoly z = y - w.derivative();
  while (w.degree() > 0) {
    RationalPoly g = gcd(w, z);
    out.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
  }
  return out;
}

/// Cauchy bound: every real root lies strictly inside (-B, B).
inline Rational root_bound(const RationalPoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace detail {

/// A split point strictly inside (lo, hi) that is not a root of p.
inline Rational safe_split(const RationalPoly& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (unsigned k = 3; sgn(p(mid)) == 0; k += 2) mid = lo + (hi - lo) * Rational(k - 1, 2 * k);
  return mid;
}

}  // namespace detail

/// Disjoint open intervals of width <= width, each isolating exactly one real
/// root, in increasing order. p is reduced to its squarefree part first.
inline std::vector<Interval> isolate_real_roots(const RationalPoly& p, const Rational& width) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "isolate_real_roots of the zero polynomial");
  if (sgn(width) <= 0) throw Error(ErrorKind::InvalidArgument, "isolation width must be positive");
  std::vector<Interval> out;
  if (p.degree() <= 0) return out;
  const RationalPoly sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  const Rational bound = root_bound(sf);

  // Depth-first split in increasing order.
  std::vector<std::pair<Interval, std::size_t>> stack;
  Interval whole(-bound, bound);
  std::size_t total = sturm.count(whole);
  if (total > 0) stack.emplace_back(whole, total);
  std::vector<Interval> isolated;
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = detail::safe_split(sf, iv.lo, iv.hi);
    Interval left(iv.lo, mid), right(mid, iv.hi);
    std::size_t nl = sturm.count(left);
    std::size_t nr = n - nl;
    if (nr > 0) stack.emplace_back(right, nr);
    if (nl > 0) stack.emplace_back(left, nl);
  }

  // Shrink each bracket by sign bisection; every root of sf is simple.
  for (auto iv : isolated) {
    int s_lo = sgn(sf(iv.lo));
    while (iv.width() > width) {
      Rational mid = iv.midpoint();
      int s_mid = sgn(sf(mid));
      if (s_mid == 0) {
        Rational eps = width / 4;
        if (eps > iv.width() / 4) eps = iv.width() / 4;
        iv = Interval(mid - eps, mid + eps);
        break;
      }
      if (s_mid == s_lo) {
        iv.lo = mid;
      } else {
        iv.hi = mid;
      }
    }
    out.push_back(iv);
  }
  return out;
}

/// Number of nonreal roots counted with multiplicity. Always even.
inline std::size_t count_nonreal_roots(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "count_nonreal_roots of the zero polynomial");
  std::size_t real_with_multiplicity = 0;
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() > 0) real_with_multiplicity += (i + 1) * real_root_count(factors[i]);
  return static_cast<std::size_t>(p.degree()) - real_with_multiplicity;
}

}  // namespace jprime
