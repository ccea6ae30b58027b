#include "superschur/superpartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superschur {

SuperPartition::SuperPartition(std::vector<int> a_, std::vector<int> s_)
    : a(std::move(a_)), s(canonical(std::move(s_))) {
  if (!is_valid_superpartition(a, s))
    throw std::invalid_argument("invalid superpartition (" + to_string() + ")");
}

bool is_valid_superpartition(const std::vector<int>& a, const std::vector<int>& s) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (i + 1 < a.size() && a[i] <= a[i + 1]) return false;
  }
  return is_partition(s);
}

int SuperPartition::total_degree() const {
  return std::accumulate(a.begin(), a.end(), 0) + std::accumulate(s.begin(), s.end(), 0);
}

int SuperPartition::rows() const { return int(circled().size()); }

// Merge a and s in weakly decreasing order; on ties the fermionic part comes
// first so that adding its circle keeps the circled diagram a partition.
Partition SuperPartition::star() const {
  Partition st;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < s.size()) {
    if (j >= s.size() || (i < a.size() && a[i] >= s[j]))
      st.push_back(a[i++]);
    else
      st.push_back(s[j++]);
  }
  return canonical(std::move(st));
}

std::vector<int> SuperPartition::circle_rows() const {
  std::vector<int> rows;
  std::size_t i = 0, j = 0;
  int row = 0;
  while (i < a.size() || j < s.size()) {
    ++row;
    if (j >= s.size() || (i < a.size() && a[i] >= s[j])) {
      rows.push_back(row);
      ++i;
    } else {
      ++j;
    }
  }
  return rows;
}

Partition SuperPartition::circled() const {
  Partition ci = star();
  for (int r : circle_rows()) {
    if (r > int(ci.size())) ci.resize(r, 0);
    ci[r - 1] += 1;
  }
  return ci;
}

std::vector<std::pair<int, int>> SuperPartition::circle_cells() const {
  Partition st = star();
  std::vector<std::pair<int, int>> cells;
  for (int r : circle_rows()) cells.emplace_back(r, part(st, r) + 1);
  return cells;
}

SuperPartition SuperPartition::conjugate() const {
  return from_star_circled(conjugate_partition(star()), conjugate_partition(circled()));
}

SuperPartition from_star_circled(const Partition& star, const Partition& circled) {
  if (!is_partition(star) || !is_partition(circled))
    throw std::invalid_argument("from_star_circled: inputs must be partitions");
  Partition st = canonical(star), ci = canonical(circled);
  if (!contains(ci, st)) throw std::invalid_argument("from_star_circled: star not inside circled");
  if (!is_strip(ci, st, StripKind::horizontal) || !is_strip(ci, st, StripKind::vertical))
    throw std::invalid_argument("from_star_circled: circled/star is not a rook strip");
  std::vector<int> a, s;
  for (std::size_t r = 0; r < ci.size(); ++r) {
    int stv = r < st.size() ? st[r] : 0;
    if (ci[r] != stv)
      a.push_back(stv);
    else
      s.push_back(stv);
  }
  return SuperPartition(std::move(a), std::move(s));
}

bool dominance_leq(const SuperPartition& omega, const SuperPartition& lambda) {
  if (omega.fermionic_degree() != lambda.fermionic_degree()) return false;
  if (omega.total_degree() != lambda.total_degree()) return false;
  return dominance_leq(omega.star(), lambda.star()) &&
         dominance_leq(omega.circled(), lambda.circled());
}

namespace {
int lex_cmp(const Partition& x, const Partition& y) {
  std::size_t rows = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < rows; ++i) {
    int xv = i < x.size() ? x[i] : 0;
    int yv = i < y.size() ? y[i] : 0;
    if (xv != yv) return xv < yv ? -1 : 1;
  }
  return 0;
}
}  // namespace

int order_cmp(const SuperPartition& x, const SuperPartition& y) {
  if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree() ? -1 : 1;
  if (x.fermionic_degree() != y.fermionic_degree())
    return x.fermionic_degree() < y.fermionic_degree() ? -1 : 1;
  // Dominant elements first.
  if (int c = lex_cmp(x.circled(), y.circled())) return -c;
  if (int c = lex_cmp(x.star(), y.star())) return -c;
  return 0;
}

std::vector<SuperPartition> superpartitions_of(int n, int m) {
  std::vector<SuperPartition> out;
  // Strictly decreasing a with m parts >= 0 and |a| = w, then s a partition
  // of n - w.
  std::vector<int> a;
  std::function<void(int, int, int)> rec = [&](int k, int maxv, int rem) {
    if (k == 0) {
      if (rem < 0) return;
      for (const Partition& s : partitions_of(rem)) out.emplace_back(a, s);
      return;
    }
    // Remaining k parts are strictly decreasing and >= k-1, k-2, ..., 0.
    int floor_sum = k * (k - 1) / 2;
    for (int v = std::min(maxv, rem - floor_sum + (k - 1)); v >= k - 1; --v) {
      a.push_back(v);
      rec(k - 1, v - 1, rem - v);
      a.pop_back();
    }
  };
  rec(m, n, n);
  std::sort(out.begin(), out.end(), SpBefore{});
  return out;
}

std::string SuperPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ';';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os.str();
}

SuperPartition parse_superpartition(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("superpartition must contain ';': \"" + text + "\"");
  auto parse_side = [&](const std::string& side) {
    std::vector<int> v;
    std::string tok;
    std::istringstream is(side);
    while (std::getline(is, tok, ',')) {
      // allow surrounding spaces
      std::size_t b = tok.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      std::size_t e = tok.find_last_not_of(" \t");
      tok = tok.substr(b, e - b + 1);
      std::size_t pos = 0;
      int val;
      try {
        val = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer \"" + tok + "\" in superpartition");
      }
      if (pos != tok.size() || val < 0)
        throw std::invalid_argument("bad part \"" + tok + "\" in superpartition");
      v.push_back(val);
    }
    return v;
  };
  std::vector<int> a = parse_side(text.substr(0, semi));
  std::vector<int> s = parse_side(text.substr(semi + 1));
  if (!is_valid_superpartition(a, canonical(s)))
    throw std::invalid_argument("not a superpartition: \"" + text + "\"");
  return SuperPartition(std::move(a), std::move(s));
}

std::ostream& operator<<(std::ostream& os, const SuperPartition& sp) {
  return os << '(' << sp.to_string() << ')';
}

}  // namespace superschur
