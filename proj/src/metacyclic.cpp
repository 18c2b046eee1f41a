#include "qhd/metacyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhd {

void validate(const MetacyclicParams& p) {
  if (p.m < 1 || p.n < 1 || p.d < 1 || p.n_prime < 1)
    throw std::invalid_argument("metacyclic: m, n, d, n' must be positive");
  if (p.n != p.n_prime * p.d) throw std::invalid_argument("metacyclic: n != n' d");
  if (gcd64(mod64(p.r, p.m), p.m) != 1) throw std::invalid_argument("metacyclic: r not a unit mod m");
  if (powmod64(mod64(p.r, p.m), p.n, p.m) != mod64(1, p.m))
    throw std::invalid_argument("metacyclic: r^n != 1 mod m");
}

std::int64_t multiplicative_order(std::int64_t r, std::int64_t m) {
  if (m == 1) return 1;
  r = mod64(r, m);
  if (gcd64(r, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::int64_t x = r, k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * r) % m);
    ++k;
  }
  return k;
}

WolfReport wolf_conditions(const MetacyclicParams& p) {
  WolfReport w;
  w.n_factors = p.n == p.n_prime * p.d;
  std::int64_t rm1 = mod64(p.r - 1, p.m);
  w.coprime = gcd64(gcd64(rm1, p.m) * gcd64(p.n, p.m), p.m) == 1;
  w.order_d = gcd64(mod64(p.r, p.m), p.m) == 1 && multiplicative_order(p.r, p.m) == p.d;
  w.primes_of_d = true;
  std::int64_t d = p.d;
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % q) continue;
    if (p.n_prime % q) w.primes_of_d = false;
    while (d % q == 0) d /= q;
  }
  if (d > 1 && p.n_prime % d) w.primes_of_d = false;
  return w;
}

std::string GroupWord::to_string() const {
  if (is_identity()) return "1";
  std::ostringstream os;
  if (i) os << "S" << (i == 1 ? "" : "^" + std::to_string(i));
  if (j) os << "T" << (j == 1 ? "" : "^" + std::to_string(j));
  return os.str();
}

namespace {

std::int64_t rpow(const MetacyclicParams& p, std::int64_t e) {
  return powmod64(mod64(p.r, p.m), mod64(e, p.n), p.m);
}

}  // namespace

GroupWord normalize(GroupWord g, const MetacyclicParams& p) {
  return {mod64(g.i, p.m), mod64(g.j, p.n)};
}

// T^j S^i = S^{i r^j} T^j
GroupWord word_multiply(const GroupWord& a, const GroupWord& b, const MetacyclicParams& p) {
  std::int64_t t = static_cast<std::int64_t>((static_cast<__int128>(mod64(b.i, p.m)) * rpow(p, a.j)) % p.m);
  return normalize({a.i + t, a.j + b.j}, p);
}

GroupWord word_inverse(const GroupWord& g, const MetacyclicParams& p) {
  std::int64_t t = static_cast<std::int64_t>((static_cast<__int128>(mod64(g.i, p.m)) * rpow(p, -g.j)) % p.m);
  return normalize({-t, -g.j}, p);
}

GroupWord word_power(GroupWord g, std::int64_t e, const MetacyclicParams& p) {
  if (e < 0) {
    g = word_inverse(g, p);
    e = -e;
  }
  GroupWord r{0, 0};
  while (e) {
    if (e & 1) r = word_multiply(r, g, p);
    g = word_multiply(g, g, p);
    e >>= 1;
  }
  return r;
}

std::int64_t word_order(const GroupWord& g, const MetacyclicParams& p) {
  GroupWord x = normalize(g, p);
  std::int64_t k = 1;
  GroupWord y = x;
  while (!y.is_identity()) {
    y = word_multiply(y, x, p);
    ++k;
  }
  return k;
}

GroupWord conjugate(const GroupWord& g, const GroupWord& h, const MetacyclicParams& p) {
  return word_multiply(word_multiply(h, g, p), word_inverse(h, p), p);
}

GroupWord conjugate_closed_form(const GroupWord& g, const GroupWord& h, const MetacyclicParams& p) {
  __int128 a = static_cast<__int128>(mod64(g.i, p.m)) * rpow(p, h.j);
  __int128 b = static_cast<__int128>(mod64(h.i, p.m)) * mod64(rpow(p, g.j) - 1, p.m);
  return normalize({static_cast<std::int64_t>((a - b) % p.m), g.j}, p);
}

std::vector<GroupWord> conjugacy_class(const GroupWord& g, const MetacyclicParams& p) {
  std::vector<GroupWord> out{normalize(g, p)};
  std::vector<char> seen(static_cast<std::size_t>(p.m * p.n), 0);
  seen[out[0].i * p.n + out[0].j] = 1;
  const GroupWord gens[2] = {{1, 0}, {0, 1}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& h : gens) {
      GroupWord c = conjugate_closed_form(out[k], h, p);
      char& s = seen[c.i * p.n + c.j];
      if (!s) {
        s = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<GroupWord>> conjugacy_classes(const MetacyclicParams& p) {
  std::vector<std::vector<GroupWord>> out;
  std::vector<char> seen(static_cast<std::size_t>(p.m * p.n), 0);
  for (std::int64_t i = 0; i < p.m; ++i)
    for (std::int64_t j = 0; j < p.n; ++j) {
      if (seen[i * p.n + j]) continue;
      auto cls = conjugacy_class({i, j}, p);
      for (const auto& c : cls) seen[c.i * p.n + c.j] = 1;
      out.push_back(std::move(cls));
    }
  return out;
}

MonomialTransform::MonomialTransform(std::int64_t N, std::vector<int> perm, std::vector<std::int64_t> exps)
    : n_(N), perm_(std::move(perm)), exps_(std::move(exps)) {
  if (N < 1) throw std::invalid_argument("MonomialTransform: root order must be positive");
  if (perm_.size() != exps_.size()) throw std::invalid_argument("MonomialTransform: size mismatch");
  std::vector<char> hit(perm_.size(), 0);
  for (int x : perm_) {
    if (x < 0 || x >= static_cast<int>(perm_.size()) || hit[x])
      throw std::invalid_argument("MonomialTransform: not a permutation");
    hit[x] = 1;
  }
  for (auto& e : exps_) e = mod64(e, n_);
}

MonomialTransform MonomialTransform::identity(std::int64_t N, int dim) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialTransform(N, perm, std::vector<std::int64_t>(dim, 0));
}

MonomialTransform MonomialTransform::diagonal(std::int64_t N, std::vector<std::int64_t> exps) {
  std::vector<int> perm(exps.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialTransform(N, perm, std::move(exps));
}

MonomialTransform MonomialTransform::scalar(std::int64_t N, int dim, std::int64_t e) {
  return diagonal(N, std::vector<std::int64_t>(dim, e));
}

MonomialTransform MonomialTransform::operator*(const MonomialTransform& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("MonomialTransform: dimension mismatch");
  if (n_ != o.n_) {
    std::int64_t L = lcm64(n_, o.n_);
    return lift(L) * o.lift(L);
  }
  std::vector<int> perm(dim());
  std::vector<std::int64_t> exps(dim());
  for (int i = 0; i < dim(); ++i) {
    int j = o.perm_[i];
    perm[i] = perm_[j];
    exps[i] = o.exps_[i] + exps_[j];
  }
  return MonomialTransform(n_, std::move(perm), std::move(exps));
}

MonomialTransform MonomialTransform::inverse() const {
  std::vector<int> perm(dim());
  std::vector<std::int64_t> exps(dim());
  for (int i = 0; i < dim(); ++i) {
    perm[perm_[i]] = i;
    exps[perm_[i]] = -exps_[i];
  }
  return MonomialTransform(n_, std::move(perm), std::move(exps));
}

MonomialTransform MonomialTransform::pow(std::int64_t e) const {
  MonomialTransform base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  MonomialTransform r = identity(n_, dim());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool MonomialTransform::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (perm_[i] != i || exps_[i] != 0) return false;
  return true;
}

std::optional<std::int64_t> MonomialTransform::scalar_exponent() const {
  for (int i = 0; i < dim(); ++i)
    if (perm_[i] != i || exps_[i] != exps_[0]) return std::nullopt;
  return dim() ? exps_[0] : 0;
}

std::vector<Cyclotomic> MonomialTransform::apply(const std::vector<Cyclotomic>& v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("MonomialTransform: vector size");
  std::vector<Cyclotomic> out(v.size());
  for (int i = 0; i < dim(); ++i)
    out[perm_[i]] = exps_[i] ? v[i] * Cyclotomic::root_of_unity(n_, exps_[i]) : v[i];
  return out;
}

std::vector<std::optional<UnitRoot>> MonomialTransform::apply(
    const std::vector<std::optional<UnitRoot>>& v) const {
  if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("MonomialTransform: vector size");
  std::vector<std::optional<UnitRoot>> out(v.size());
  for (int i = 0; i < dim(); ++i)
    if (v[i]) out[perm_[i]] = *v[i] * coefficient(i);
  return out;
}

MonomialTransform MonomialTransform::lift(std::int64_t M) const {
  if (M % n_) throw std::invalid_argument("MonomialTransform: lift to a non-multiple");
  std::vector<std::int64_t> exps(exps_);
  for (auto& e : exps) e *= M / n_;
  return MonomialTransform(M, perm_, std::move(exps));
}

Cyclotomic MonomialTransform::trace() const {
  Cyclotomic t;
  for (int i = 0; i < dim(); ++i)
    if (perm_[i] == i) t += Cyclotomic::root_of_unity(n_, exps_[i]);
  return t;
}

std::string MonomialTransform::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << "e" << i + 1 << "->" << coefficient(i).to_string() << "*e" << perm_[i] + 1;
  }
  return os.str();
}

MonomialTransform Representation::image(const GroupWord& g) const {
  GroupWord w = normalize(g, params);
  return S.pow(w.i) * T.pow(w.j);
}

Representation pi_kl(const MetacyclicParams& p) {
  validate(p);
  if (powmod64(mod64(p.r, p.m), p.d, p.m) != mod64(1, p.m))
    throw std::invalid_argument("pi_kl: r^d != 1 mod m");
  const std::int64_t N = lcm64(p.m, p.n);
  const std::int64_t zeta = N / p.m, eta = N / p.n;
  const int d = static_cast<int>(p.d);
  std::vector<std::int64_t> s(d);
  std::vector<int> perm(d);
  std::vector<std::int64_t> t(d, p.l * eta);
  for (int i = 0; i < d; ++i) {
    s[i] = p.k * powmod64(mod64(p.r, p.m), i, p.m) * zeta;
    perm[i] = (i + d - 1) % d;
  }
  return {p, MonomialTransform::diagonal(N, s), MonomialTransform(N, perm, t)};
}

bool relations_hold(const Representation& rep) {
  const auto& p = rep.params;
  if (!rep.S.pow(p.m).is_identity() || !rep.T.pow(p.n).is_identity()) return false;
  return rep.T * rep.S * rep.T.inverse() == rep.S.pow(mod64(p.r, p.m));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A4: return "A4";
    case Family::B4: return "B4";
    case Family::C4: return "C4";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A4" || s == "a4") return Family::A4;
  if (s == "B4" || s == "b4") return Family::B4;
  if (s == "C4" || s == "c4") return Family::C4;
  throw std::invalid_argument("unknown family: " + s);
}

std::string to_string(const FamilyId& f) {
  std::string s = family_name(f.tag) + "(p=" + std::to_string(f.p);
  if (f.variant != 1) s += ", l=" + std::to_string(f.variant);
  return s + ")";
}

MetacyclicParams family_params(const FamilyId& f) {
  if (f.p < 1) throw std::invalid_argument("family: p must be >= 1");
  if (f.variant != 1 && f.variant != -1) throw std::invalid_argument("family: variant must be +1 or -1");
  const std::int64_t p = f.p;
  MetacyclicParams q;
  switch (f.tag) {
    case Family::A4:
      q.m = 3 * p * p - 3 * p + 1;
      q.n_prime = 3 * p;
      q.d = 3;
      q.r = q.m - (3 * p - 1);
      break;
    case Family::B4:
      q.m = 2 * p * p - 2 * p + 1;
      q.n_prime = 2 * p;
      q.d = 4;
      q.r = q.m - (2 * p - 1);
      break;
    case Family::C4:
      q.m = p * p - p + 1;
      q.n_prime = p;
      q.d = 6;
      q.r = q.m - p + 1;
      break;
  }
  q.n = q.n_prime * q.d;
  q.r = mod64(q.r, q.m);
  q.k = 1;
  q.l = f.variant;
  validate(q);
  return q;
}

Representation family_representation(const FamilyId& f) {
  Representation rep = pi_kl(family_params(f));
  if (f.tag != Family::C4) return rep;
  // Seventh coordinate: trivial under S, eta^l under T.
  auto widen = [](const MonomialTransform& t, std::int64_t e7) {
    std::vector<int> perm = t.perm();
    std::vector<std::int64_t> exps = t.exps();
    perm.push_back(static_cast<int>(perm.size()));
    exps.push_back(e7);
    return MonomialTransform(t.root_order(), perm, exps);
  };
  const std::int64_t N = rep.root_order();
  rep.S = widen(rep.S, 0);
  rep.T = widen(rep.T, rep.params.l * (N / rep.params.n));
  return rep;
}

std::int64_t abelianization_order(const MetacyclicParams& p) {
  IntMatrix rel{{static_cast<long>(p.m), 0}, {static_cast<long>(p.r - 1), 0}, {0, static_cast<long>(p.n)}};
  auto snf = smith_normal_form(rel);
  Integer prod = 1;
  for (const auto& x : snf.diagonal) prod *= x;
  return prod.get_si();
}

std::vector<CharacterValue> character_table_row(const Representation& rep) {
  std::vector<CharacterValue> out;
  for (const auto& cls : conjugacy_classes(rep.params))
    out.push_back({cls.front(), cls.size(), rep.image(cls.front()).trace()});
  return out;
}

bool reps_equivalent(const Representation& a, const Representation& b) {
  const auto &pa = a.params, &pb = b.params;
  if (pa.m != pb.m || pa.n != pb.n || mod64(pa.r - pb.r, pa.m) != 0)
    throw std::invalid_argument("reps_equivalent: different groups");
  if (a.dim() != b.dim()) return false;
  for (const auto& cls : conjugacy_classes(pa))
    if (!(a.image(cls.front()).trace() == b.image(cls.front()).trace())) return false;
  return true;
}

std::int64_t subgroup_count(const MetacyclicParams& p) { return euler_phi(gcd64(p.n_prime, p.d)); }

bool images_conjugate(std::int64_t l, std::int64_t lp, const MetacyclicParams& p) {
  return mod64(l - lp, gcd64(p.d, p.n_prime)) == 0;
}

std::vector<std::vector<std::optional<UnitRoot>>> fixed_vectors(const MonomialTransform& t) {
  std::vector<std::vector<std::optional<UnitRoot>>> out;
  std::vector<char> done(t.dim(), 0);
  for (int s = 0; s < t.dim(); ++s) {
    if (done[s]) continue;
    std::int64_t sum = 0;
    int i = s;
    do {
      done[i] = 1;
      sum += t.exps()[i];
      i = t.perm()[i];
    } while (i != s);
    if (mod64(sum, t.root_order())) continue;
    std::vector<std::optional<UnitRoot>> v(t.dim());
    UnitRoot c;
    i = s;
    do {
      v[i] = c;
      c = c * t.coefficient(i);
      i = t.perm()[i];
    } while (i != s);
    out.push_back(std::move(v));
  }
  return out;
}

FreenessResult free_off_origin(const Representation& rep) {
  const auto& p = rep.params;
  FreenessResult res;
  MonomialTransform Tj = MonomialTransform::identity(rep.root_order(), rep.dim());
  for (std::int64_t j = 0; j < p.n; ++j) {
    MonomialTransform g = Tj;
    for (std::int64_t i = 0; i < p.m; ++i) {
      if (i || j) {
        auto fv = fixed_vectors(g);
        if (!fv.empty()) {
          res.free = false;
          res.witness = GroupWord{i, j};
          res.fixed_vector = fv.front();
          return res;
        }
      }
      g = rep.S * g;
    }
    Tj = Tj * rep.T;
  }
  return res;
}

}  // namespace qhd
