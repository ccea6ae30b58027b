#include "superschur/tableaux.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "superschur/pieri.hpp"

namespace superschur {

std::vector<Letter> parse_weight(const std::string& text) {
  std::vector<Letter> w;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    Letter l;
    if (!tok.empty() && tok.back() == '~') {
      l.fermionic = true;
      tok.pop_back();
    }
    try {
      std::size_t pos = 0;
      l.value = std::stoi(tok, &pos);
      if (pos != tok.size() || l.value < 0) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight letter \"" + tok + "\"");
    }
    w.push_back(l);
  }
  return w;
}

std::string weight_to_string(const std::vector<Letter>& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i].value;
    if (w[i].fermionic) os << '~';
  }
  return os.str();
}

namespace {

PieriKind step_kind(Basis family, bool fermionic) {
  if (family == Basis::s)
    return fermionic ? PieriKind::sstar_htilde : PieriKind::sstar_h;
  if (family == Basis::sbar)
    return fermionic ? PieriKind::sbarstar_htilde : PieriKind::sbarstar_h;
  throw std::invalid_argument("tableaux: family must be s or sbar");
}

// Circles with letters, tracked along a step cur -> next.  Old circles are
// matched index-wise on row-sorted lists; a fermionic step contributes one
// new circle carrying the step's letter.
struct TrackedCircle {
  int row, col, letter;
};

std::vector<TrackedCircle> advance_circles(const std::vector<TrackedCircle>& cur,
                                           const SuperPartition& from,
                                           const SuperPartition& to, Basis family, int letter,
                                           bool fermionic) {
  auto to_cells = to.circle_cells();
  std::vector<std::pair<int, int>> cells(to_cells.begin(), to_cells.end());
  int new_idx = -1;
  if (fermionic) {
    // identify the new circle
    if (family == Basis::s) {
      // first column without a cell of to.star()/from.star()
      Partition mu = to.star(), st = from.star();
      Partition muc = conjugate_partition(mu), stc = conjugate_partition(st);
      int c0 = 1;
      while (part(muc, c0) != part(stc, c0)) ++c0;
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].second == c0) new_idx = int(i);
    } else {
      // rightmost cell of to.circled()/from.circled()
      Partition nu = to.circled(), ci = from.circled();
      std::pair<int, int> best{-1, -1};
      for (int r = 1; r <= num_parts(nu); ++r)
        for (int c = part(ci, r) + 1; c <= part(nu, r); ++c)
          if (c > best.second) best = {r, c};
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == best) new_idx = int(i);
    }
    if (new_idx < 0) throw std::runtime_error("advance_circles: new circle not found");
  }
  std::vector<TrackedCircle> out;
  std::size_t old_pos = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (int(i) == new_idx) {
      out.push_back({cells[i].first, cells[i].second, letter});
    } else {
      out.push_back({cells[i].first, cells[i].second, cur[old_pos].letter});
      ++old_pos;
    }
  }
  if (old_pos != cur.size()) throw std::runtime_error("advance_circles: circle count mismatch");
  return out;
}

int word_inversions(const std::vector<TrackedCircle>& circles) {
  // circles are row-sorted: read top to bottom
  int inv = 0;
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (std::size_t j = i + 1; j < circles.size(); ++j)
      if (circles[i].letter > circles[j].letter) ++inv;
  return inv;
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const SuperPartition& lambda,
                                        const SuperPartition& omega,
                                        const std::vector<Letter>& weight, Basis family) {
  std::vector<Tableau> out;
  int need_m = lambda.fermionic_degree() - omega.fermionic_degree();
  int need_n = lambda.total_degree() - omega.total_degree();
  int wf = 0, wn = 0;
  for (const Letter& l : weight) {
    wf += l.fermionic ? 1 : 0;
    wn += l.value;
  }
  if (wf != need_m || wn != need_n || need_m < 0 || need_n < 0) return out;

  struct Frame {
    SuperPartition sp;
    int sign;
    std::vector<TrackedCircle> circles;
  };
  std::vector<SuperPartition> chain{omega};
  std::vector<TrackedCircle> circles0;
  for (auto [r, c] : omega.circle_cells()) circles0.push_back({r, c, 0});

  std::function<void(std::size_t, const Frame&)> rec = [&](std::size_t i, const Frame& fr) {
    if (i == weight.size()) {
      if (fr.sp != lambda) return;
      Tableau t;
      t.family = family;
      t.chain = chain;
      t.weight = weight;
      t.sign = fr.sign;
      int inv = word_inversions(fr.circles);
      int wsign = inv % 2 ? -1 : 1;
      if (!omega.fermionic_degree() && wsign != fr.sign)
        throw std::runtime_error("tableau sign disagrees with circle-word inversions");
      out.push_back(std::move(t));
      return;
    }
    const Letter& l = weight[i];
    std::vector<SignedTerm> steps;
    if (!l.fermionic && l.value == 0) {
      steps.push_back({fr.sp, 1});  // h_0 = 1
    } else {
      steps = pieri(step_kind(family, l.fermionic), fr.sp, l.value);
    }
    for (const SignedTerm& st : steps) {
      // prune on degree
      if (st.omega.total_degree() > lambda.total_degree()) continue;
      Frame nx;
      nx.sp = st.omega;
      nx.sign = fr.sign * st.sign;
      nx.circles = advance_circles(fr.circles, fr.sp, st.omega, family, int(i) + 1,
                                   l.fermionic);
      chain.push_back(st.omega);
      rec(i + 1, nx);
      chain.pop_back();
    }
  };
  rec(0, Frame{omega, 1, circles0});
  return out;
}

SymSuperFunc generating_function(const SuperPartition& lambda, const SuperPartition& omega,
                                 Basis family) {
  SymSuperFunc out(Basis::m);
  int n = lambda.total_degree() - omega.total_degree();
  int m = lambda.fermionic_degree() - omega.fermionic_degree();
  if (n < 0 || m < 0) return out;
  for (const SuperPartition& gamma : superpartitions_of(n, m)) {
    std::vector<Letter> w;
    for (int v : gamma.a) w.push_back({v, true});
    for (int v : gamma.s) w.push_back({v, false});
    Rat total = 0;
    for (const Tableau& t : enumerate_tableaux(lambda, omega, w, family)) total += t.sign;
    out.add(gamma, total);
  }
  return out;
}

Filling filling_of(const Tableau& t) {
  Filling f;
  f.inner = t.chain.front().star();
  Partition outer = t.chain.back().star();
  f.letters.assign(outer.size(), {});
  for (std::size_t r = 0; r < outer.size(); ++r) f.letters[r].assign(outer[r], 0);
  for (std::size_t i = 1; i < t.chain.size(); ++i) {
    Partition prev = t.chain[i - 1].star(), cur = t.chain[i].star();
    for (int r = 1; r <= num_parts(cur); ++r)
      for (int c = part(prev, r) + 1; c <= part(cur, r); ++c)
        f.letters[r - 1][c - 1] = int(i);
  }
  std::vector<TrackedCircle> circles;
  for (auto [r, c] : t.chain.front().circle_cells()) circles.push_back({r, c, 0});
  for (std::size_t i = 1; i < t.chain.size(); ++i)
    circles = advance_circles(circles, t.chain[i - 1], t.chain[i], t.family, int(i),
                              t.weight[i - 1].fermionic);
  for (const auto& c : circles) f.circles.push_back({c.row, c.col, c.letter});
  return f;
}

std::string render(const Tableau& t, RenderFormat fmt) {
  Filling f = filling_of(t);
  std::size_t rows = f.letters.size();
  for (const auto& c : f.circles) rows = std::max(rows, std::size_t(c[0]));
  std::ostringstream os;
  for (std::size_t r = 1; r <= rows; ++r) {
    std::vector<std::string> cells;
    if (r <= f.letters.size())
      for (int v : f.letters[r - 1]) cells.push_back(v == 0 ? "." : std::to_string(v));
    for (const auto& c : f.circles)
      if (std::size_t(c[0]) == r) {
        if (fmt == RenderFormat::latex)
          cells.push_back("\\bl\\tcercle{" + std::to_string(c[2]) + "}");
        else
          cells.push_back("(" + std::to_string(c[2]) + ")");
      }
    if (fmt == RenderFormat::latex) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "&";
        os << cells[i];
      }
      os << "\\\\";
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << " ";
        os << cells[i];
      }
      os << "\n";
    }
  }
  if (fmt == RenderFormat::latex) return "{\\tableau[scY]{" + os.str() + "}}";
  return os.str();
}

namespace {

struct Grid {
  std::vector<std::vector<int>> letters;  // star cells; 0 = inner cell
  std::vector<std::array<int, 3>> circles;

  int rows() const { return int(letters.size()); }
  int row_len(int r) const { return r >= 1 && r <= rows() ? int(letters[r - 1].size()) : 0; }
  int at(int r, int c) const {
    if (r < 1 || r > rows() || c < 1 || c > row_len(r)) return -1;
    return letters[r - 1][c - 1];
  }
};

// Path of a circle per the diagram rules of the s family: start at the
// smallest entry above the circle's letter in the leftmost column missing
// that letter, then repeatedly take the smallest larger entry in the next
// row (leftmost on ties), stopping above the circle's row.
std::vector<std::pair<int, int>> circle_path(const Grid& g, const std::array<int, 3>& circle) {
  std::vector<std::pair<int, int>> path;
  int letter = circle[2], crow = circle[0];
  int width = 0;
  for (int r = 1; r <= g.rows(); ++r) width = std::max(width, g.row_len(r));
  int c0 = -1;
  for (int c = 1; c <= width + 1 && c0 < 0; ++c) {
    bool has = false;
    for (int r = 1; r <= g.rows(); ++r) has |= g.at(r, c) == letter;
    if (!has) c0 = c;
  }
  // first step: smallest entry larger than `letter` in column c0
  int best = -1, brow = -1;
  for (int r = 1; r <= g.rows(); ++r) {
    int v = g.at(r, c0);
    if (v > letter && (best < 0 || v < best)) {
      best = v;
      brow = r;
    }
  }
  if (brow < 0) return path;
  path.push_back({brow, c0});
  int curv = best;
  for (int r = brow + 1; r <= crow - 1; ++r) {
    int nbest = -1, ncol = -1;
    for (int c = 1; c <= g.row_len(r); ++c) {
      int v = g.at(r, c);
      if (v > curv && (nbest < 0 || v < nbest)) {
        nbest = v;
        ncol = c;
      }
    }
    if (ncol < 0) return path;
    path.push_back({r, ncol});
    curv = nbest;
  }
  return path;
}

SuperPartition grid_to_sp(const Grid& g) {
  Partition star;
  for (const auto& row : g.letters)
    if (!row.empty()) star.push_back(int(row.size()));
  std::vector<int> rows;
  for (const auto& c : g.circles) rows.push_back(c[0]);
  std::sort(rows.begin(), rows.end());
  Partition ci = star;
  if (!rows.empty() && rows.back() > int(ci.size())) ci.resize(rows.back(), 0);
  for (int r : rows) ci[r - 1] += 1;
  return from_star_circled(star, ci);
}

}  // namespace

std::vector<SuperPartition> reconstruct_chain(const Filling& f, Basis family, int nletters) {
  Grid g;
  g.letters = f.letters;
  g.circles = f.circles;
  std::vector<SuperPartition> chain;
  chain.push_back(grid_to_sp(g));
  for (int k = nletters; k >= 1; --k) {
    // decide circle movements before removing the letters
    std::vector<std::array<int, 3>> next_circles;
    for (const auto& c : g.circles) {
      if (c[2] == k) continue;  // the circled k disappears with its letter
      bool up;
      if (family == Basis::s) {
        up = false;
        for (auto [r, cc] : circle_path(g, c))
          if (r == c[0] - 1 && g.at(r, cc) == k) up = true;
      } else {
        // a letter k directly above pulls the circle up; letters k to its
        // left only shift it within its row, which the re-seating handles
        up = g.at(c[0] - 1, c[1]) == k;
      }
      if (up)
        next_circles.push_back({c[0] - 1, 0, c[2]});
      else
        next_circles.push_back({c[0], 0, c[2]});
    }
    // strip the letters k
    for (auto& row : g.letters)
      while (!row.empty() && row.back() == k) row.pop_back();
    while (!g.letters.empty() && g.letters.back().empty()) g.letters.pop_back();
    // re-seat circles at the ends of their rows
    for (auto& c : next_circles) c[1] = g.row_len(c[0]) + 1;
    g.circles = next_circles;
    chain.push_back(grid_to_sp(g));
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace superschur
