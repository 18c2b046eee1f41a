#include "qhd/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhd {

UniPoly::UniPoly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Cyclotomic& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Cyclotomic& c, int k) {
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative exponent");
  std::vector<Cyclotomic> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclotomic UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyclotomic();
  return c_[static_cast<std::size_t>(k)];
}

Cyclotomic UniPoly::lead() const { return c_.empty() ? Cyclotomic() : c_.back(); }

Cyclotomic UniPoly::operator()(const Cyclotomic& x) const {
  Cyclotomic acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Cyclotomic> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Cyclotomic(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  Cyclotomic inv = c_.back().inverse();
  UniPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Cyclotomic> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  r = a;
  const int db = b.degree();
  std::vector<Cyclotomic> qc(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
  Cyclotomic inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree();
    Cyclotomic c = r.lead() * inv;
    qc[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r.c_[static_cast<std::size_t>(k - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
    r.c_.pop_back();
    r.trim();
  }
  q = UniPoly(std::move(qc));
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  return r;
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  UniPoly::divmod(a, b, q, r);
  return q;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[k].to_string();
    bool atom = c_[k].is_rational() || cs.find(' ') == std::string::npos;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (!c_[k].is_one()) os << (atom ? cs : "(" + cs + ")") << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return (f / gcd(f, f.derivative())).monic();
}

UniPoly interpolate(const std::vector<Cyclotomic>& xs, const std::vector<Cyclotomic>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Cyclotomic> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  UniPoly result;
  for (std::size_t k = n; k-- > 0;) {
    result *= UniPoly(std::vector<Cyclotomic>{-xs[k], Cyclotomic(1L)});
    result += UniPoly(dd[k]);
  }
  return result;
}

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(Cyclotomic(1L), std::move(e));
}

MultiPoly MultiPoly::monomial(const Cyclotomic& c, Exponent e) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Cyclotomic MultiPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Cyclotomic() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Cyclotomic& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Cyclotomic MultiPoly::evaluate(const std::vector<Cyclotomic>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MultiPoly::evaluate: wrong point size");
  std::vector<std::vector<Cyclotomic>> powers(point.size());
  Cyclotomic acc;
  for (const auto& [e, c] : t_) {
    Cyclotomic term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Cyclotomic(1L));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
      term *= pw[static_cast<std::size_t>(e[i])];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly d(nvars_);
  for (const auto& [e, c] : t_) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent f = e;
    f[static_cast<std::size_t>(var)] -= 1;
    d.add_term(f, c * Cyclotomic(static_cast<long>(k)));
  }
  return d;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("MultiPoly::substitute: wrong arity");
  const int out_vars = subs.empty() ? 0 : subs[0].nvars();
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  MultiPoly result(out_vars);
  for (const auto& [e, c] : t_) {
    MultiPoly term = constant(out_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(out_vars, Cyclotomic(1L)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
      term *= pw[static_cast<std::size_t>(e[i])];
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::substitute_monomial(const std::vector<int>& target,
                                         const std::vector<Cyclotomic>& scale) const {
  MultiPoly result(nvars_);
  for (const auto& [e, c] : t_) {
    Exponent f(e.size(), 0);
    Cyclotomic coef = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      f[static_cast<std::size_t>(target[i])] += e[i];
      coef *= scale[i].pow(e[i]);
    }
    result.add_term(f, coef);
  }
  return result;
}

MultiPoly MultiPoly::specialize(int var, const Cyclotomic& value) const {
  MultiPoly result(nvars_);
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    int k = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    result.add_term(f, c * value.pow(k));
  }
  return result;
}

UniPoly MultiPoly::to_uni(int var) const {
  std::vector<Cyclotomic> v(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)));
  for (const auto& [e, c] : t_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != var && e[i] != 0)
        throw std::invalid_argument("MultiPoly::to_uni: other variables present");
    }
    v[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += c;
  }
  return UniPoly(std::move(v));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree_in(var) + 1)), MultiPoly(nvars_));
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    int k = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(k)].add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) {
      Exponent e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  *this = std::move(r);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto it = b.t_.begin();
  for (const auto& [e, c] : a.t_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly result = constant(nvars_, Cyclotomic(1L)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "X" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    if (mono.empty()) {
      os << cs;
    } else if (c.is_one()) {
      os << mono;
    } else {
      bool atom = cs.find(' ') == std::string::npos;
      os << (atom ? cs : "(" + cs + ")") << "*" << mono;
    }
  }
  return os.str();
}

Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m) {
  const std::size_t n = m.size();
  Cyclotomic det(1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Cyclotomic();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Cyclotomic inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Cyclotomic f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) {
        if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
      }
    }
  }
  return det;
}

std::vector<std::vector<Cyclotomic>> nullspace(std::vector<std::vector<Cyclotomic>> m,
                                               std::size_t ncols) {
  // Reduced row echelon form, then read off free columns.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Cyclotomic inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Cyclotomic f = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Cyclotomic> v(ncols);
    v[free] = Cyclotomic(1L);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

UniPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.nvars() != 2 || g.nvars() != 2) throw std::invalid_argument("resultant: bivariate input required");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  const int other = 1 - var;
  const int df = f.degree_in(var), dg = g.degree_in(var);
  if (df == 0 && dg == 0) return UniPoly(Cyclotomic(1L));
  const int bound = dg * std::max(0, f.degree_in(other)) + df * std::max(0, g.degree_in(other));
  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);

  // Evaluate the Sylvester determinant at integer points, then interpolate.
  std::vector<Cyclotomic> xs, ys;
  const std::size_t size = static_cast<std::size_t>(df + dg);
  for (int k = 0; k <= bound; ++k) {
    Cyclotomic x0(static_cast<long>(k));
    auto eval_coeffs = [&](const std::vector<MultiPoly>& cs) {
      std::vector<Cyclotomic> v;
      for (const auto& c : cs) v.push_back(c.specialize(other, x0).coeff(Exponent{0, 0}));
      return v;
    };
    auto fv = eval_coeffs(fc), gv = eval_coeffs(gc);
    std::vector<std::vector<Cyclotomic>> syl(size, std::vector<Cyclotomic>(size));
    for (int r = 0; r < dg; ++r)
      for (int j = 0; j <= df; ++j) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = fv[static_cast<std::size_t>(df - j)];
    for (int r = 0; r < df; ++r)
      for (int j = 0; j <= dg; ++j) syl[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + j)] = gv[static_cast<std::size_t>(dg - j)];
    xs.push_back(x0);
    ys.push_back(determinant(std::move(syl)));
  }
  return interpolate(xs, ys);
}

}  // namespace qhd
