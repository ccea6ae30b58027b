#include "superschur/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace superschur {

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition canonical(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int num_parts(const Partition& p) {
  int k = int(p.size());
  while (k > 0 && p[k - 1] == 0) --k;
  return k;
}

Partition conjugate_partition(const Partition& p) {
  Partition q;
  int cols = p.empty() ? 0 : p[0];
  for (int c = 1; c <= cols; ++c) {
    int h = 0;
    for (int v : p)
      if (v >= c) ++h;
    q.push_back(h);
  }
  return q;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    int o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

bool dominance_leq(const Partition& mu, const Partition& la) {
  if (weight(mu) != weight(la)) return false;
  int acc_mu = 0, acc_la = 0;
  std::size_t rows = std::max(mu.size(), la.size());
  for (std::size_t i = 0; i < rows; ++i) {
    acc_mu += i < mu.size() ? mu[i] : 0;
    acc_la += i < la.size() ? la[i] : 0;
    if (acc_mu > acc_la) return false;
  }
  return true;
}

bool is_strip(const Partition& outer, const Partition& inner, StripKind kind) {
  if (!contains(outer, inner)) return false;
  if (kind == StripKind::horizontal) {
    // No two skew cells in one column: outer_{i+1} <= inner_i.
    for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
      int in = i < inner.size() ? inner[i] : 0;
      if (outer[i + 1] > in) return false;
    }
    return true;
  }
  // Vertical: at most one skew cell per row.
  for (std::size_t i = 0; i < outer.size(); ++i) {
    int in = i < inner.size() ? inner[i] : 0;
    if (outer[i] - in > 1) return false;
  }
  return true;
}

namespace {

void strips_rec(const Partition& la, int ell, StripKind kind, int row, int maxrows,
                Partition& cur, std::vector<Partition>& out) {
  if (ell == 0) {
    Partition mu = cur;
    for (int r = row; r <= maxrows; ++r) {
      int v = part(la, r);
      if (v == 0) break;
      mu.push_back(v);
    }
    out.push_back(canonical(std::move(mu)));
    return;
  }
  if (row > maxrows) return;
  int lo = part(la, row);
  int above = row == 1 ? lo + ell : cur[row - 2];
  int hi;
  if (kind == StripKind::horizontal) {
    // mu_row <= la_{row-1} keeps the skew free of vertical pairs.
    hi = row == 1 ? lo + ell : std::min(above, part(la, row - 1));
  } else {
    hi = std::min(above, lo + 1);
  }
  hi = std::min(hi, lo + ell);
  for (int v = hi; v >= lo; --v) {
    if (row > 1 && v > cur[row - 2]) continue;
    cur.push_back(v);
    strips_rec(la, ell - (v - lo), kind, row + 1, maxrows, cur, out);
    cur.pop_back();
    if (v == 0) break;
  }
}

}  // namespace

std::vector<Partition> strips(const Partition& la, int ell, StripKind kind) {
  std::vector<Partition> out;
  if (ell < 0) return out;
  int maxrows = num_parts(la) + (kind == StripKind::horizontal ? 1 : std::max(ell, 1));
  Partition cur;
  strips_rec(canonical(la), ell, kind, 1, maxrows, cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) { return y < x; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int v = std::min(rem, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  if (n == 0) out.push_back({});
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace superschur
