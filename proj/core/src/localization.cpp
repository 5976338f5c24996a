#include "qtoda/localization.hpp"

#include <algorithm>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {

QRational qr_pow(const QRational& base, int e) {
  if (e == 0) return QRational::one(base.rank());
  QRational b = e > 0 ? base : base.inverse();
  QRational out = QRational::one(base.rank());
  for (int k = e > 0 ? e : -e; k > 0; --k) out *= b;
  return out;
}

ScalarField sf_pow(const ScalarField& base, int e) {
  ScalarField out = ScalarField::one(base.rank());
  if (e == 0) return out;
  ScalarField b = e > 0 ? base : base.inverse();
  for (int k = e > 0 ? e : -e; k > 0; --k) out = out * b;
  return out;
}

// scalar part and q-exponent of a monomial c·q^e
struct WeightMono {
  ScalarField c;
  int e = 0;
};

WeightMono weight_parts(const QRational& w) {
  QPoly den = w.den();
  const QPoly& num = w.num();
  bool den_power = den.is_one() || (den.valuation() == den.degree() && den.leading().is_one());
  if (num.is_zero() || !den_power || num.valuation() != num.degree())
    throw Error("weight is not a monomial: " + w.str());
  return {num.coeff(num.degree()), num.degree() - den.degree()};
}

// Multiset of q-constant Euler factors shared across fixed-point terms.
// Sums of terms with such factors in their denominators reduce poorly term
// by term, so each term is instead scaled by the complement of its own
// factors inside the common multiset and the total is divided back once.
struct ConstFactorPool {
  int rank;
  std::vector<ScalarField> values;
  std::vector<std::vector<int>> counts;  // counts[i][t]: factor i in term t
  int terms = 0;

  explicit ConstFactorPool(int r) : rank(r) {}

  void begin_term() {
    ++terms;
    for (auto& row : counts) row.push_back(0);
  }
  void note(const ScalarField& v) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) {
        ++counts[i].back();
        return;
      }
    values.push_back(v);
    counts.emplace_back(terms, 0);
    counts.back().back() = 1;
  }
  int lcm_mult(std::size_t i) const {
    return *std::max_element(counts[i].begin(), counts[i].end());
  }
  ScalarField complement(int t) const {
    ScalarField out = ScalarField::one(rank);
    for (std::size_t i = 0; i < values.size(); ++i)
      for (int k = counts[i][t]; k < lcm_mult(i); ++k) out = out * values[i];
    return out;
  }
  ScalarField full_product() const {
    ScalarField out = ScalarField::one(rank);
    for (std::size_t i = 0; i < values.size(); ++i)
      for (int k = 0; k < lcm_mult(i); ++k) out = out * values[i];
    return out;
  }
};

// Sum of terms q^shift · num(q) / Π_i fac_i(q), evaluated through Laurent
// series.  Merging such terms as rational functions multiplies their mostly
// disjoint denominators out; when the sum is known to collapse to a Laurent
// polynomial it is far cheaper to expand every term by forward substitution
// (fraction-free here: the factors' bottom coefficients are monomials) and
// to certify the reconstruction.  The certificate: the polynomial part of
// each term is bounded by shift + deg num - deg den, and the tail of the
// series obeys a linear recurrence of order Σ deg over the distinct factors,
// so that many consecutive zero coefficients past every polynomial bound
// force the tail to vanish identically.
class LaurentSum {
 public:
  explicit LaurentSum(int rank) : rank_(rank) {}

  void add(QPoly num, const std::vector<QPoly>& fac, int shift) {
    if (num.is_zero()) return;
    Term t{std::move(num), {}, shift};
    t.fac.reserve(fac.size());
    for (const QPoly& f : fac) {
      int v = f.valuation();
      if (v > 0) {
        t.shift -= v;
        t.fac.push_back(f.shifted_down(v));
      } else {
        t.fac.push_back(f);
      }
    }
    terms_.push_back(std::move(t));
  }

  // The exact sum, with every coefficient divided by `post` (exactly).
  // Throws Error when the sum fails to be a Laurent polynomial or a
  // coefficient fails to be divisible.
  QRational evaluate(const LambdaPoly& post) const {
    const int r = rank_;
    if (terms_.empty()) return QRational::zero(r);
    int v0 = 0, w0 = 0, order = 0;
    bool first = true;
    std::vector<const QPoly*> uniq;
    for (const auto& t : terms_) {
      int dden = 0;
      for (const auto& f : t.fac) dden += f.degree();
      int lo = t.shift + t.num.valuation();
      int hi = t.shift + t.num.degree() - dden;
      v0 = first ? lo : std::min(v0, lo);
      w0 = first ? hi : std::max(w0, hi);
      first = false;
      for (const auto& f : t.fac) {
        bool seen = false;
        for (const QPoly* u : uniq)
          if (*u == f) {
            seen = true;
            break;
          }
        if (!seen) {
          uniq.push_back(&f);
          order += f.degree();
        }
      }
    }
    if (w0 < v0 - 1) w0 = v0 - 1;
    const int top = w0 + order;

    std::vector<ScalarField> acc(top - v0 + 1, ScalarField(r));
    std::vector<ScalarField> c;
    for (const auto& t : terms_) {
      const int len = top - t.shift + 1;
      if (len <= 0) continue;
      c.assign(len, ScalarField(r));
      for (int k = 0; k <= t.num.degree() && k < len; ++k) c[k] = t.num.coeff(k);
      for (const auto& f : t.fac) {
        const int df = f.degree();
        const bool unit0 = f.coeff(0).is_one();
        ScalarField inv0 = unit0 ? ScalarField::one(r) : f.coeff(0).inverse();
        for (int k = 0; k < len; ++k) {
          ScalarField s = std::move(c[k]);
          for (int j = 1; j <= df && j <= k; ++j) {
            if (f.coeff(j).is_zero() || c[k - j].is_zero()) continue;
            s -= f.coeff(j) * c[k - j];
          }
          if (!unit0 && !s.is_zero()) s *= inv0;
          c[k] = std::move(s);
        }
      }
      for (int k = 0; k < len; ++k)
        if (!c[k].is_zero()) acc[t.shift + k - v0] += c[k];
    }
    for (int e = w0 + 1; e <= top; ++e)
      if (!acc[e - v0].is_zero()) throw Error("fixed-point series does not terminate");

    QPoly num(r);
    for (int e = v0; e <= w0; ++e) {
      ScalarField& s = acc[e - v0];
      if (s.is_zero()) continue;
      auto quot = LambdaPoly::try_divide(s.num(), post);
      if (!quot) throw Error("fixed-point sum not divisible by the Euler denominator");
      num.set_coeff(e - v0, ScalarField(std::move(*quot), s.den()));
    }
    return QRational::from_qpoly(std::move(num)) * QRational::q_power(r, v0);
  }

 private:
  struct Term {
    QPoly num;
    std::vector<QPoly> fac;
    int shift;
  };
  int rank_;
  std::vector<Term> terms_;
};

}  // namespace

WeightedProjectiveData quasimap_weights(int r, int d) {
  if (r < 1) throw Error("quasimap_weights needs rank >= 1");
  if (d < 0) throw Error("quasimap_weights needs degree >= 0");
  WeightedProjectiveData wd{r, d, {}};
  wd.weights.reserve(static_cast<std::size_t>(r + 1) * (d + 1));
  for (int j = 0; j <= r; ++j)
    for (int m = 0; m <= d; ++m)
      wd.weights.push_back(QRational::q_monomial(ScalarField::lambda_power(r, j), -m));
  return wd;
}

QRational chi_projective(const WeightedProjectiveData& wd, int z) {
  const int r = wd.rank;
  const std::size_t n = wd.weights.size();
  std::vector<WeightMono> w;
  w.reserve(n);
  for (const auto& x : wd.weights) w.push_back(weight_parts(x));
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = f + 1; g < n; ++g)
      if (w[f].e == w[g].e && w[f].c == w[g].c)
        throw PoleError("repeated weight " + wd.weights[f].str());

  // The tangent weights at the f-th coordinate point are w_g/w_f, so the
  // K-theoretic Euler factor of the term is Π_{g≠f}(1 - w_f/w_g).  Factors
  // constant in q go through the shared pool; the q-dependent ones are
  // divided in one at a time so the denominator stays factored.
  ConstFactorPool pool(r);
  for (std::size_t f = 0; f < n; ++f) {
    pool.begin_term();
    for (std::size_t g = 0; g < n; ++g)
      if (g != f && w[f].e == w[g].e)
        pool.note(ScalarField::one(r) - w[f].c / w[g].c);
  }

  QRational total(r);
  for (std::size_t f = 0; f < n; ++f) {
    QRational term = QRational::q_monomial(sf_pow(w[f].c, -z), -z * w[f].e);
    term.scale(pool.complement(static_cast<int>(f)));
    for (std::size_t g = 0; g < n; ++g) {
      if (g == f || w[f].e == w[g].e) continue;
      term /= QRational::one(r) - QRational::q_monomial(w[f].c / w[g].c, w[f].e - w[g].e);
    }
    total += term;
  }
  total.scale(pool.full_product().inverse());
  return total;
}

QRational symmetric_h_oracle(const WeightedProjectiveData& wd, int z) {
  if (z < 0) throw Error("symmetric_h_oracle needs z >= 0");
  const int r = wd.rank;
  std::vector<QRational> inv;
  inv.reserve(wd.weights.size());
  for (const auto& w : wd.weights) inv.push_back(w.inverse());
  QRational total(r);
  // multisets of size z: products of inverse weights with nondecreasing index
  auto rec = [&](auto&& self, std::size_t start, int left, const QRational& acc) -> void {
    if (left == 0) {
      total += acc;
      return;
    }
    for (std::size_t i = start; i < inv.size(); ++i) self(self, i, left - 1, acc * inv[i]);
  };
  rec(rec, 0, z, QRational::one(r));
  return total;
}

std::map<DegreeVector, QRational> genfun_G(int r, const std::vector<int>& z, int truncation) {
  if (static_cast<int>(z.size()) != r) throw Error("genfun_G needs z of length rank");
  TwistedSeries s = solve_jseries(r, truncation);
  std::map<DegreeVector, LocalizedClass> inverted;
  for (const auto& [deg, cls] : s.coeffs) {
    LocalizedClass m{r, {}};
    m.values.reserve(cls.values.size());
    for (const auto& v : cls.values) m.values.push_back(v.substituted_q_power(-1));
    inverted.emplace(deg, std::move(m));
  }
  auto points = fixed_points(r);

  // The splitting formula lives in the inverse-character convention: the
  // twist comes as p^{-z}, the Euler factors of its pairing are Π (1 - w)
  // over tangent weights, and inverting the full torus (Λj -> Λj^-1 at the
  // very end, q -> q^-1 absorbed by moving the q^{z·d} twist onto the d-
  // half of each splitting) brings the answer back.  Composing every
  // restriction with the longest permutation turns the Π (1 - w) pairing
  // into the familiar Π (1 - w^-1), assembled here over the common Euler
  // denominator with the series shortcut of LaurentSum.
  std::vector<int> zneg(z);
  for (auto& v : zneg) v = -v;
  std::vector<ScalarField> scale;  // p^{-z} at σ∘w0, Euler complement at σ
  std::vector<std::size_t> rev_idx(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    FlagPoint rev = points[k];
    std::reverse(rev.sigma.begin(), rev.sigma.end());
    rev_idx[k] = static_cast<std::size_t>(fixed_point_index(r, rev));
  }
  scale.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k)
    scale.push_back(restrict_monomial(r, points[rev_idx[k]], zneg) *
                    ScalarField::from_poly(euler_complement(r, points[k])));
  LambdaPoly eden = euler_denominator(r);

  std::map<DegreeVector, QRational> out;
  for (const auto& d : degrees_up_to(r, truncation)) {
    LaurentSum sum(r);
    // all splittings d = dplus + dminus, componentwise
    DegreeVector dplus(r, 0);
    while (true) {
      DegreeVector dminus(r);
      for (int i = 0; i < r; ++i) dminus[i] = d[i] - dplus[i];
      int twist = 0;
      for (int i = 0; i < r; ++i) twist += z[i] * dminus[i];
      const LocalizedClass& plus = s.at(dplus);
      const LocalizedClass& minus = inverted.at(dminus);
      for (std::size_t k = 0; k < points.size(); ++k) {
        const QRational& a = plus.values[rev_idx[k]];
        const QRational& b = minus.values[rev_idx[k]];
        std::vector<QPoly> fac = a.factors();
        fac.insert(fac.end(), b.factors().begin(), b.factors().end());
        sum.add((a.num() * b.num()).scaled(scale[k]), fac, twist);
      }
      int i = 0;
      while (i < r && dplus[i] == d[i]) dplus[i++] = 0;
      if (i == r) break;
      ++dplus[i];
    }
    out.emplace(d, sum.evaluate(eden).inverted_lambda());
  }
  return out;
}

QRational residue_G_r2(const std::vector<int>& z, const DegreeVector& d) {
  const int r = 2;
  if (z.size() != 2 || d.size() != 2) throw Error("residue_G_r2 is rank-2 only");
  if (d[0] < 0 || d[1] < 0) throw Error("residue_G_r2 needs d >= 0");
  const int d1 = d[0], d2 = d[1];

  // pole locations: P_1 = Λ_j^{-1} q^m (m <= d_1), P_2 = Λ_j q^{m'} (m' <= d_2)
  struct Pole {
    int j, m;
  };
  std::vector<Pole> poles1, poles2;
  for (int j = 0; j <= r; ++j)
    for (int m = 0; m <= d1; ++m) poles1.push_back({j, m});
  for (int j = 0; j <= r; ++j)
    for (int m = 0; m <= d2; ++m) poles2.push_back({j, m});

  // Terms with pa.j == pb.j vanish: the numerator factor at q-shift
  // pa.m + pb.m degenerates to 1 - Λ_j/Λ_j = 0.
  auto skip = [](const Pole& pa, const Pole& pb) { return pa.j == pb.j; };

  // q-constant factors of each term, pooled as in chi_projective
  ConstFactorPool pool(r);
  auto lam_ratio = [&](int jn, int jd) {
    return ScalarField::lambda_power(r, jn) / ScalarField::lambda_power(r, jd);
  };
  for (const auto& pa : poles1)
    for (const auto& pb : poles2) {
      if (skip(pa, pb)) continue;
      pool.begin_term();
      for (const auto& other : poles1)
        if (other.m == pa.m && other.j != pa.j)
          pool.note(ScalarField::one(r) - lam_ratio(other.j, pa.j));
      for (const auto& other : poles2)
        if (other.m == pb.m && other.j != pb.j)
          pool.note(ScalarField::one(r) - lam_ratio(pb.j, other.j));
    }

  QRational total(r);
  int t = 0;
  for (const auto& pa : poles1)
    for (const auto& pb : poles2) {
      if (skip(pa, pb)) continue;
      // P_1^{-z_1} P_2^{-z_2} at the pole pair: the contour form carries the
      // inverse-character twist, matched by inverting Λ at the very end
      QRational term = QRational::q_monomial(sf_pow(ScalarField::lambda_power(r, pa.j), z[0]),
                                             -z[0] * pa.m);
      term *= QRational::q_monomial(sf_pow(ScalarField::lambda_power(r, pb.j), -z[1]),
                                    -z[1] * pb.m);
      term.scale(pool.complement(t++));
      // numerator Π_{s=0}^{d_1+d_2} (1 - P_1 P_2 q^{-s}); P_1 P_2 = (Λ_{j_b}/Λ_{j_a}) q^{m_a+m_b}
      for (int s = 0; s <= d1 + d2; ++s) {
        int shift = pa.m + pb.m - s;
        if (shift == 0)
          term.scale(ScalarField::one(r) - lam_ratio(pb.j, pa.j));
        else
          term *= QRational::one(r) -
                  QRational::q_monomial(lam_ratio(pb.j, pa.j), shift);
      }
      // remaining integrand factors evaluated at the pole pair, divided in
      // one at a time so the denominator stays factored
      for (const auto& other : poles1) {
        if (other.j == pa.j && other.m == pa.m) continue;
        if (other.m == pa.m) continue;  // pooled
        QRational factor = QRational::one(r) - QRational::q_monomial(lam_ratio(other.j, pa.j),
                                                                     pa.m - other.m);
        if (factor.is_zero()) throw PoleError("higher-order pole in P_1 at j=" +
                                              std::to_string(pa.j));
        term /= factor;
      }
      for (const auto& other : poles2) {
        if (other.j == pb.j && other.m == pb.m) continue;
        if (other.m == pb.m) continue;  // pooled
        QRational factor = QRational::one(r) - QRational::q_monomial(lam_ratio(pb.j, other.j),
                                                                     pb.m - other.m);
        if (factor.is_zero()) throw PoleError("higher-order pole in P_2 at j=" +
                                              std::to_string(pb.j));
        term /= factor;
      }
      total += term;
    }
  total.scale(pool.full_product().inverse());
  // invert the full torus: Λj -> Λj^-1 and q -> q^-1
  return total.inverted_lambda().substituted_q_power(-1);
}

bool is_laurent(const QRational& x) {
  QPoly den = x.den();
  if (den.is_one()) return true;
  return den.valuation() == den.degree() && den.leading().is_one();
}

}  // namespace qtoda
