#include "qtoda/series.hpp"

#include <algorithm>
#include <sstream>

#include "qtoda/errors.hpp"
#include "qtoda/parallel.hpp"

namespace qtoda {

namespace {

std::string degree_str(const DegreeVector& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

QRational q_times_scalar(const ScalarField& s, int k) { return QRational::q_monomial(s, k); }

// Π_j shift_action(j, d, σ)^{m_j}: the translation part collapses to a single
// Λ-monomial times a q-power, so assemble exponents instead of multiplying
// rationals.
QRational shift_factor(const std::vector<int>& m, const DegreeVector& d, const FlagPoint& p) {
  const int r = static_cast<int>(d.size());
  ScalarField lam = ScalarField::one(r);
  int qexp = 0;
  for (int j = 0; j <= r; ++j) {
    if (m[j] == 0) continue;
    lam *= ScalarField::lambda_power(r, p.sigma[j], -m[j]);
    qexp += m[j] * (degree_entry(d, j + 1) - degree_entry(d, j));
  }
  return q_times_scalar(lam, qexp);
}

}  // namespace

int degree_total(const DegreeVector& d) {
  int t = 0;
  for (int x : d) t += x;
  return t;
}

int degree_entry(const DegreeVector& d, int i) {
  if (i <= 0 || i > static_cast<int>(d.size())) return 0;
  return d[i - 1];
}

std::vector<DegreeVector> degrees_up_to(int r, int D) {
  if (r < 1 || D < 0) throw Error("degrees_up_to needs r >= 1, D >= 0");
  std::vector<DegreeVector> out;
  DegreeVector probe(r, 0);
  auto lex = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      probe[pos] = left;
      out.push_back(probe);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      probe[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  // graded layers, lexicographic within each layer
  for (int total = 0; total <= D; ++total) lex(lex, 0, total);
  return out;
}

const LocalizedClass& TwistedSeries::at(const DegreeVector& d) const {
  auto it = coeffs.find(d);
  if (it == coeffs.end())
    throw TruncationError("series coefficient " + degree_str(d) + " beyond truncation " +
                          std::to_string(truncation));
  return it->second;
}

const QRational& TwistedSeries::at(const DegreeVector& d, int sigma_index) const {
  return at(d).values.at(static_cast<std::size_t>(sigma_index));
}

QRational shift_action(int j, const DegreeVector& d, const FlagPoint& p) {
  const int r = static_cast<int>(d.size());
  if (j < 0 || j > r) throw Error("shift_action index out of range");
  std::vector<int> m(r + 1, 0);
  m[j] = 1;
  return shift_factor(m, d, p);
}

DifferenceOperator DifferenceOperator::identity(int r) {
  return translation(r, std::vector<int>(r + 1, 0));
}

DifferenceOperator DifferenceOperator::translation(int r, const std::vector<int>& m) {
  DifferenceOperator op{r, {}};
  op.add(m, DegreeVector(r, 0), QRational::one(r));
  return op;
}

void DifferenceOperator::add(const std::vector<int>& m, const DegreeVector& k,
                             const QRational& c) {
  if (static_cast<int>(m.size()) != rank + 1) throw Error("operator shift size != rank+1");
  if (static_cast<int>(k.size()) != rank) throw Error("operator Q-monomial size != rank");
  if (c.is_zero()) return;
  Coeff& coeff = terms[m];
  auto it = coeff.find(k);
  if (it == coeff.end()) {
    coeff.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    coeff.erase(it);
    if (coeff.empty()) terms.erase(m);
  }
}

int DifferenceOperator::q_degree() const {
  int g = 0;
  for (const auto& [m, coeff] : terms)
    for (const auto& [k, c] : coeff) g = std::max(g, degree_total(k));
  return g;
}

DifferenceOperator& DifferenceOperator::operator+=(const DifferenceOperator& o) {
  if (rank != o.rank) throw Error("operator rank mismatch");
  for (const auto& [m, coeff] : o.terms)
    for (const auto& [k, c] : coeff) add(m, k, c);
  return *this;
}

DifferenceOperator& DifferenceOperator::operator-=(const DifferenceOperator& o) {
  if (rank != o.rank) throw Error("operator rank mismatch");
  for (const auto& [m, coeff] : o.terms)
    for (const auto& [k, c] : coeff) add(m, k, -c);
  return *this;
}

DifferenceOperator DifferenceOperator::scaled(const QRational& c) const {
  DifferenceOperator out{rank, {}};
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms)
    for (const auto& [k, v] : coeff) out.add(m, k, v * c);
  return out;
}

bool DifferenceOperator::operator==(const DifferenceOperator& o) const {
  if (rank != o.rank || terms.size() != o.terms.size()) return false;
  auto it = terms.begin();
  auto jt = o.terms.begin();
  for (; it != terms.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.size() != jt->second.size()) return false;
    auto ik = it->second.begin();
    auto jk = jt->second.begin();
    for (; ik != it->second.end(); ++ik, ++jk) {
      if (ik->first != jk->first || !(ik->second == jk->second)) return false;
    }
  }
  return true;
}

std::string DifferenceOperator::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [m, coeff] : terms) {
    if (!first_term) os << " + ";
    first_term = false;
    os << "T";
    os << "(";
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m[j];
    os << ")∘[";
    bool first_mono = true;
    for (const auto& [k, c] : coeff) {
      if (!first_mono) os << " + ";
      first_mono = false;
      os << "(" << c.str() << ")";
      for (int i = 0; i < rank; ++i) {
        if (k[i] == 0) continue;
        os << "*Q" << (i + 1);
        if (k[i] != 1) os << "^" << k[i];
      }
    }
    os << "]";
  }
  return os.str();
}

DifferenceOperator build_toda_operator(int r) {
  if (r < 1) throw Error("build_toda_operator needs r >= 1");
  DifferenceOperator op{r, {}};
  DegreeVector zero(r, 0);
  std::vector<int> m(r + 1, 0);
  m[0] = 1;
  op.add(m, zero, QRational::one(r));
  for (int j = 1; j <= r; ++j) {
    std::fill(m.begin(), m.end(), 0);
    m[j] = 1;
    op.add(m, zero, QRational::one(r));
    DegreeVector qj(r, 0);
    qj[j - 1] = 1;
    op.add(m, qj, -QRational::one(r));
  }
  return op;
}

DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b) {
  if (a.rank != b.rank) throw Error("operator rank mismatch in compose");
  const int r = a.rank;
  DifferenceOperator out{r, {}};
  std::vector<int> m(r + 1);
  DegreeVector k(r);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      for (int j = 0; j <= r; ++j) m[j] = ma[j] + mb[j];
      for (const auto& [kaq, caq] : ca) {
        // Pulling the left coefficient through T_{mb} twists Q^k by
        // q^{Σ_i k_i((mb)_i - (mb)_{i-1})}.
        int tw = 0;
        for (int i = 1; i <= r; ++i) tw += kaq[i - 1] * (mb[i] - mb[i - 1]);
        QRational twisted = caq * QRational::q_power(r, tw);
        for (const auto& [kbq, cbq] : cb) {
          for (int i = 0; i < r; ++i) k[i] = kaq[i] + kbq[i];
          out.add(m, k, twisted * cbq);
        }
      }
    }
  }
  return out;
}

TwistedSeries apply_operator(const DifferenceOperator& d, const TwistedSeries& s) {
  if (d.rank != s.rank) throw Error("rank mismatch in apply_operator");
  const int r = s.rank;
  TwistedSeries out;
  out.rank = r;
  out.truncation = s.truncation - d.q_degree();
  if (out.truncation < 0)
    throw TruncationError("operator Q-degree exceeds series truncation");
  const auto pts = fixed_points(r);
  const auto degs = degrees_up_to(r, out.truncation);
  for (const auto& deg : degs) {
    LocalizedClass cls;
    cls.rank = r;
    cls.values.assign(pts.size(), QRational(r));
    out.coeffs.emplace(deg, std::move(cls));
  }
  struct Cell {
    const DegreeVector* deg;
    std::size_t sigma;
    QRational* slot;
  };
  std::vector<Cell> cells;
  cells.reserve(degs.size() * pts.size());
  for (const auto& deg : degs) {
    auto& values = out.coeffs.find(deg)->second.values;
    for (std::size_t i = 0; i < pts.size(); ++i) cells.push_back({&deg, i, &values[i]});
  }
  parallel_for(cells.size(), [&](std::size_t idx) {
    const DegreeVector& deg = *cells[idx].deg;
    const std::size_t sig = cells[idx].sigma;
    QRational acc(r);
    DegreeVector src(r);
    for (const auto& [m, coeff] : d.terms) {
      QRational factor = shift_factor(m, deg, pts[sig]);
      for (const auto& [k, c] : coeff) {
        bool ok = true;
        for (int i = 0; i < r; ++i) {
          src[i] = deg[i] - k[i];
          if (src[i] < 0) ok = false;
        }
        if (!ok) continue;
        acc += factor * c * s.at(src, static_cast<int>(sig));
      }
    }
    *cells[idx].slot = std::move(acc);
  });
  return out;
}

TwistedSeries solve_jseries(int r, int truncation, bool invert_q) {
  if (r < 1 || truncation < 0) throw Error("solve_jseries needs r >= 1, truncation >= 0");
  const int sgn = invert_q ? -1 : 1;
  const auto pts = fixed_points(r);
  TwistedSeries s;
  s.rank = r;
  s.truncation = truncation;
  const auto degs = degrees_up_to(r, truncation);
  for (const auto& deg : degs) {
    LocalizedClass cls;
    cls.rank = r;
    cls.values.assign(pts.size(), QRational(r));
    s.coeffs.emplace(deg, std::move(cls));
  }
  for (auto& v : s.coeffs[DegreeVector(r, 0)].values) v = QRational::one(r);

  for (int layer = 1; layer <= truncation; ++layer) {
    struct Cell {
      const DegreeVector* deg;
      std::size_t sigma;
      QRational* slot;
    };
    std::vector<Cell> cells;
    for (const auto& deg : degs) {
      if (degree_total(deg) != layer) continue;
      auto& values = s.coeffs.find(deg)->second.values;
      for (std::size_t i = 0; i < pts.size(); ++i) cells.push_back({&deg, i, &values[i]});
    }
    parallel_for(cells.size(), [&](std::size_t idx) {
      const DegreeVector& deg = *cells[idx].deg;
      const std::size_t sig = cells[idx].sigma;
      const FlagPoint& p = pts[sig];
      QRational bracket(r);
      for (int i = 1; i <= r + 1; ++i) {
        int step = degree_entry(deg, i) - degree_entry(deg, i - 1);
        if (step == 0) continue;
        ScalarField lam = ScalarField::lambda_power(r, p.sigma[i - 1], -1);
        bracket += q_times_scalar(lam, sgn * step) - QRational::from_scalar(lam);
      }
      if (bracket.is_zero())
        throw Error("recursion divisor vanished at sigma=" + p.str() + ", d=" +
                    degree_str(deg));
      QRational rhs(r);
      DegreeVector lower(deg);
      for (int i = 1; i <= r; ++i) {
        if (deg[i - 1] == 0) continue;
        lower[i - 1] -= 1;
        int step = degree_entry(deg, i + 1) - degree_entry(deg, i);
        ScalarField lam = ScalarField::lambda_power(r, p.sigma[i], -1);
        rhs += q_times_scalar(lam, sgn * step) * s.at(lower, static_cast<int>(sig));
        lower[i - 1] += 1;
      }
      *cells[idx].slot = rhs / bracket;
    });
  }
  return s;
}

LocalizedClass closed_form_r1(int d) {
  if (d < 0) throw Error("closed_form_r1 needs d >= 0");
  const int r = 1;
  LocalizedClass cls;
  cls.rank = r;
  for (const FlagPoint& p : fixed_points(r)) {
    ScalarField taut = ScalarField::lambda_power(r, p.sigma[0], -1);
    QRational den = QRational::one(r);
    for (int j = 0; j <= r; ++j) {
      ScalarField base = taut * ScalarField::lambda_power(r, j, 1);
      for (int m = 1; m <= d; ++m)
        den *= QRational::one(r) - q_times_scalar(base, m);
    }
    cls.values.push_back(den.inverse());
  }
  return cls;
}

LocalizedClass closed_form_r2(const DegreeVector& d) {
  if (d.size() != 2 || d[0] < 0 || d[1] < 0) throw Error("closed_form_r2 needs d in Z^2, d >= 0");
  const int r = 2;
  LocalizedClass cls;
  cls.rank = r;
  for (const FlagPoint& p : fixed_points(r)) {
    ScalarField p1 = restrict_p(r, p, 1);
    ScalarField p2 = restrict_p(r, p, 2);
    QRational num = QRational::one(r);
    for (int m = 1; m <= d[0] + d[1]; ++m)
      num *= QRational::one(r) - q_times_scalar(p1 * p2, m);
    QRational den = QRational::one(r);
    for (int j = 0; j <= r; ++j) {
      ScalarField up = p1 * ScalarField::lambda_power(r, j, 1);
      ScalarField down = p2 * ScalarField::lambda_power(r, j, -1);
      for (int m = 1; m <= d[0]; ++m) den *= QRational::one(r) - q_times_scalar(up, m);
      for (int m = 1; m <= d[1]; ++m) den *= QRational::one(r) - q_times_scalar(down, m);
    }
    cls.values.push_back(num / den);
  }
  return cls;
}

QRational toda_eigenvalue(int r) {
  QRational e(r);
  for (int j = 0; j <= r; ++j) e += QRational::lambda_power(r, j, -1);
  return e;
}

EigenReport check_eigen(const TwistedSeries& s) {
  const int r = s.rank;
  EigenReport rep;
  TwistedSeries hs = apply_operator(build_toda_operator(r), s);
  QRational eig = toda_eigenvalue(r);
  const auto pts = fixed_points(r);
  for (const auto& [deg, cls] : hs.coeffs) {
    ++rep.checked_degrees;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!(cls.values[i] == eig * s.at(deg, static_cast<int>(i)))) {
        rep.pass = false;
        rep.failures.push_back({deg, pts[i]});
      }
    }
  }
  return rep;
}

}  // namespace qtoda
