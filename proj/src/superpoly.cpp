#include "superschur/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace superschur {

std::optional<std::pair<std::vector<int>, int>> normal_order(std::vector<int> indices) {
  int sign = 1;
  // Bubble sort: each adjacent swap is one anticommutation.
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
      if (indices[j] == indices[j + 1]) return std::nullopt;
      if (indices[j] > indices[j + 1]) {
        std::swap(indices[j], indices[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < indices.size(); ++j)
    if (indices[j] == indices[j + 1]) return std::nullopt;
  return std::make_pair(std::move(indices), sign);
}

std::optional<std::pair<std::uint32_t, int>> theta_merge(std::uint32_t a, std::uint32_t b) {
  if (a & b) return std::nullopt;
  // Moving each bit of b past the higher bits of a costs one sign each.
  int crossings = 0;
  std::uint32_t bb = b;
  while (bb) {
    int i = std::countr_zero(bb);
    bb &= bb - 1;
    crossings += std::popcount(a >> (i + 1));
  }
  return std::make_pair(a | b, crossings % 2 ? -1 : 1);
}

SuperPolynomial::SuperPolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::runtime_error("superpolynomial: bad variable count");
}

SuperPolynomial SuperPolynomial::constant(int nvars, const Rat& c) {
  SuperPolynomial p(nvars);
  p.add_term({0, 0}, c);
  return p;
}

SuperPolynomial SuperPolynomial::from_polynomial(const Polynomial& p) {
  SuperPolynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term({m, 0}, c);
  return r;
}

SuperPolynomial SuperPolynomial::theta(int nvars, int i) {
  SuperPolynomial p(nvars);
  p.add_term({0, std::uint32_t(1) << (i - 1)}, 1);
  return p;
}

void SuperPolynomial::add_term(SMono m, const Rat& c) {
  if (superschur::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (superschur::is_zero(it->second)) terms_.erase(it);
  }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::runtime_error("superpolynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::runtime_error("superpolynomial: mixed variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial SuperPolynomial::operator+(const SuperPolynomial& o) const {
  SuperPolynomial r = *this;
  r += o;
  return r;
}

SuperPolynomial SuperPolynomial::operator-(const SuperPolynomial& o) const {
  SuperPolynomial r = *this;
  r -= o;
  return r;
}

SuperPolynomial SuperPolynomial::operator*(const SuperPolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::runtime_error("superpolynomial: mixed variable counts");
  SuperPolynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      auto merged = theta_merge(ma.th, mb.th);
      if (!merged) continue;
      Rat c = ca * cb;
      if (merged->second < 0) c = -c;
      r.add_term({mono_mul(ma.x, mb.x), merged->first}, c);
    }
  return r;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rat& c) {
  if (superschur::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

SuperPolynomial SuperPolynomial::act(const std::vector<int>& perm, ActMode mode) const {
  if (int(perm.size()) != nvars_) throw std::runtime_error("act: bad permutation size");
  SuperPolynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono nx = 0;
    for (int i = 1; i <= nvars_; ++i) nx = mono_set(nx, perm[i - 1], mono_exp(m.x, i));
    std::uint32_t nth = m.th;
    int sign = 1;
    if (mode == ActMode::diagonal && m.th) {
      std::vector<int> idx;
      for (int i = 1; i <= nvars_; ++i)
        if (m.th & (1u << (i - 1))) idx.push_back(perm[i - 1]);
      auto no = normal_order(std::move(idx));
      sign = no->second;
      nth = 0;
      for (int i : no->first) nth |= 1u << (i - 1);
    }
    r.add_term({nx, nth}, sign > 0 ? c : -c);
  }
  return r;
}

int SuperPolynomial::theta_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = std::popcount(m.th);
    if (d == -1) d = k;
    else if (d != k) return -1;
  }
  return d;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<SMono, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.th != b.first.th) return a.first.th < b.first.th;
    return a.first.x > b.first.x;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rat ac = abs(c);
    bool unit = ac == 1 && !(m.x == 0 && m.th == 0);
    if (!unit) os << rat_to_string(ac);
    bool any = !unit;
    for (int i = 1; i <= nvars_; ++i)
      if (m.th & (1u << (i - 1))) {
        if (any) os << "*";
        os << "t" << i;
        any = true;
      }
    for (int i = 1; i <= nvars_; ++i) {
      int e = mono_exp(m.x, i);
      if (!e) continue;
      if (any) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      any = true;
    }
    first = false;
  }
  return os.str();
}

bool is_diagonal_invariant(const SuperPolynomial& p) {
  int n = p.nvars();
  for (int i = 1; i < n; ++i) {
    std::vector<int> perm(n);
    for (int k = 1; k <= n; ++k) perm[k - 1] = k;
    std::swap(perm[i - 1], perm[i]);
    if (p.act(perm, ActMode::diagonal) != p) return false;
  }
  return true;
}

Polynomial theta_coefficient(const SuperPolynomial& p, int m) {
  std::uint32_t want = m == 0 ? 0 : (std::uint32_t(1) << m) - 1;
  Polynomial r(p.nvars());
  for (const auto& [mono, c] : p.terms())
    if (mono.th == want) r.add_term(mono.x, c);
  return r;
}

Polynomial vandermonde_divide(const Polynomial& f, int m) {
  Polynomial q = f;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) q = q.divide_linear(i, j);
  return q;
}

SuperPolynomial reconstruct(const Polynomial& f, int m, int nvars) {
  if (f.nvars() != nvars) throw std::runtime_error("reconstruct: variable count mismatch");
  if (m > nvars) throw std::runtime_error("reconstruct: m exceeds variable count");
  Polynomial g = vandermonde(nvars, m) * f;
  SuperPolynomial out(nvars);
  // Minimal coset representatives of S_N/(S_m x S_{m^c}) <-> m-subsets.
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      std::vector<int> perm(nvars);
      std::vector<bool> used(nvars + 1, false);
      for (int i = 0; i < m; ++i) {
        perm[i] = subset[i];
        used[subset[i]] = true;
      }
      int pos = m;
      for (int v = 1; v <= nvars; ++v)
        if (!used[v]) perm[pos++] = v;
      std::uint32_t th = 0;
      for (int i = 0; i < m; ++i) th |= 1u << (subset[i] - 1);
      Polynomial gp = g.permute_vars(perm);
      for (const auto& [mono, c] : gp.terms()) out.add_term({mono, th}, c);
      return;
    }
    for (int v = from; v + left - 1 <= nvars; ++v) {
      subset.push_back(v);
      rec(v + 1, left - 1);
      subset.pop_back();
    }
  };
  rec(1, m);
  return out;
}

SuperPolynomial d_operator(const SuperPolynomial& p) {
  SuperPolynomial r(p.nvars());
  for (const auto& [m, c] : p.terms())
    for (int i = 1; i <= p.nvars(); ++i) {
      int e = mono_exp(m.x, i);
      if (e == 0) continue;
      if (m.th & (1u << (i - 1))) continue;
      auto merged = theta_merge(std::uint32_t(1) << (i - 1), m.th);
      SMono nm{mono_set(m.x, i, e - 1), merged->first};
      Rat nc = c * e;
      r.add_term(nm, merged->second > 0 ? nc : -nc);
    }
  return r;
}

}  // namespace superschur
