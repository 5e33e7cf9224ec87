#include "ppg/projmap.hpp"

#include <algorithm>

namespace ppg {

ExtRat phi_nonneg(const Bits& prefix, uint8_t tail) {
  ExtRat r = tail ? ExtRat::infinity() : ExtRat(0);
  for (std::size_t i = prefix.size(); i-- > 0;) {
    if (prefix[i] == 1) {
      r = ExtRat(1) + r;  // phi(1 xi) = 1 + phi(xi)
    } else {
      // phi(0 xi) = 1/(1 + 1/phi(xi)) = phi(xi)/(phi(xi)+1)
      r = ExtRat(r.num(), r.num() + r.den());
    }
  }
  return r;
}

ExtRat phi_eval(const Bits& prefix, uint8_t tail) {
  if (prefix.empty()) return ExtRat::infinity();  // Phi of a constant sequence
  Bits rest = prefix.drop(1);
  if (prefix[0] == 1) return phi_nonneg(rest, tail);
  return -phi_nonneg(rest.complement(), tail ^ 1);
}

ExtRat phi_eval(const Seq& s) {
  if (!(s.period() == Bits{0} || s.period() == Bits{1}))
    throw error("Phi is rational only on eventually constant sequences");
  return phi_eval(s.preperiod(), s.period()[0]);
}

std::pair<ExtRat, ExtRat> phi_interval(const Bits& s) {
  if (s.empty()) throw error("phi_interval needs a nonempty prefix");
  return {phi_eval(s, 0), phi_eval(s, 1)};
}

PiecewiseMap::PiecewiseMap(std::vector<ExtRat> breakpoints, std::vector<ProjMat> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.empty() || breaks_.size() != pieces_.size())
    throw error("breakpoint and piece counts must match and be nonzero");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!cyc_less(breaks_[i], breaks_[i + 1]))
      throw error("breakpoints must be strictly increasing (infinity first)");
  // continuity at every breakpoint
  std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExtRat& bp = breaks_[i];
    if (!(pieces_[i].apply(bp) == pieces_[(i + n - 1) % n].apply(bp)))
      throw error("pieces disagree at breakpoint " + bp.str());
  }
  // merge adjacent equal pieces (cyclically)
  for (std::size_t i = 0; i < breaks_.size() && breaks_.size() > 1;) {
    std::size_t prev = (i + breaks_.size() - 1) % breaks_.size();
    if (pieces_[i] == pieces_[prev]) {
      breaks_.erase(breaks_.begin() + static_cast<long>(i));
      pieces_.erase(pieces_.begin() + static_cast<long>(i));
      i = 0;
    } else {
      ++i;
    }
  }
  if (pieces_.size() == 1) breaks_ = {ExtRat::infinity()};
}

bool PiecewiseMap::is_identity() const {
  return pieces_.size() == 1 && pieces_[0].is_identity();
}

std::size_t PiecewiseMap::arc_index(const ExtRat& t) const {
  // last breakpoint <= t, else the wrap-around arc
  std::size_t lo = 0;
  if (cyc_less(t, breaks_[0])) return breaks_.size() - 1;
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    if (!cyc_less(t, breaks_[i])) lo = i;
  return lo;
}

ExtRat PiecewiseMap::apply(const ExtRat& t) const { return piece_at(t).apply(t); }

const ProjMat& PiecewiseMap::piece_at(const ExtRat& t) const {
  return pieces_[arc_index(t)];
}

namespace {

// A rational strictly inside the arc from p to q (cyclically, p != q).
ExtRat arc_sample(const ExtRat& p, const ExtRat& q) {
  if (p.is_infinity()) return q + ExtRat(-1);
  if (q.is_infinity()) return p + ExtRat(1);
  if (cyc_less(p, q))
    return ExtRat(p.num() * q.den() + q.num() * p.den(), 2 * p.den() * q.den());
  return p + ExtRat(1);  // wrap arc passes through infinity's side
}

}  // namespace

PiecewiseMap PiecewiseMap::then(const PiecewiseMap& g) const {
  // refine this map's arcs by preimages of g's breakpoints
  std::vector<ExtRat> cuts = breaks_;
  std::size_t n = breaks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExtRat& lo = breaks_[i];
    const ExtRat& hi = breaks_[(i + 1) % n];
    ProjMat inv = pieces_[i].inverse();
    for (const ExtRat& beta : g.breakpoints()) {
      ExtRat p = inv.apply(beta);
      bool inside = n == 1;
      if (!inside) {
        if (cyc_less(lo, hi))
          inside = cyc_less(lo, p) && cyc_less(p, hi);
        else
          inside = cyc_less(lo, p) || cyc_less(p, hi);
      }
      if (inside) cuts.push_back(p);
    }
  }
  std::sort(cuts.begin(), cuts.end(), cyc_less);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<ProjMat> mats;
  std::size_t m = cuts.size();
  for (std::size_t i = 0; i < m; ++i) {
    ExtRat s = m == 1 ? arc_sample(cuts[0], ExtRat::infinity())
                      : arc_sample(cuts[i], cuts[(i + 1) % m]);
    const ProjMat& f_piece = piece_at(s);
    const ProjMat& g_piece = g.piece_at(f_piece.apply(s));
    mats.push_back(f_piece.then(g_piece));
  }
  return PiecewiseMap(std::move(cuts), std::move(mats));
}

PiecewiseMap PiecewiseMap::inverse() const {
  for (const ProjMat& p : pieces_)
    if (p.det() < 0) throw error("only orientation-preserving maps invert here");
  std::vector<std::pair<ExtRat, ProjMat>> arcs;
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    arcs.emplace_back(pieces_[i].apply(breaks_[i]), pieces_[i].inverse());
  std::sort(arcs.begin(), arcs.end(),
            [](const auto& x, const auto& y) { return cyc_less(x.first, y.first); });
  std::vector<ExtRat> bs;
  std::vector<ProjMat> ms;
  for (auto& [b, m] : arcs) {
    bs.push_back(b);
    ms.push_back(m);
  }
  if (pieces_.size() == 1) bs = {ExtRat::infinity()};
  return PiecewiseMap(std::move(bs), std::move(ms));
}

std::vector<ProjMat> PiecewiseMap::pieces_on(const ExtRat& lo, const ExtRat& hi) const {
  if (!cyc_less(lo, hi) || lo.is_infinity()) throw error("need finite lo < hi");
  std::vector<ProjMat> out;
  std::size_t n = breaks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    // arc [b_i, b_{i+1}) meets (lo, hi)?
    const ExtRat& a = breaks_[i];
    const ExtRat& b = breaks_[(i + 1) % n];
    bool meets;
    if (n == 1) {
      meets = true;
    } else if (cyc_less(a, b)) {
      meets = cyc_less(lo, b) && cyc_less(a, hi);
    } else {  // wrap arc: [a, top] U {inf} U [bottom, b)
      meets = cyc_less(a, hi) || cyc_less(lo, b);
    }
    if (meets) out.push_back(pieces_[i]);
  }
  return out;
}

std::string PiecewiseMap::piece_table() const {
  std::string out;
  std::size_t n = breaks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExtRat& lo = breaks_[i];
    const ExtRat& hi = breaks_[(i + 1) % n];
    out += "[" + lo.str() + ", " + hi.str() + "]: " + pieces_[i].str() + "\n";
  }
  return out;
}

PiecewiseMap builtin_map(BuiltinMap which) {
  switch (which) {
    case BuiltinMap::a:
      return PiecewiseMap({ExtRat::infinity()}, {ProjMat(1, 1, 0, 1)});
    case BuiltinMap::b:
      return PiecewiseMap(
          {ExtRat::infinity(), ExtRat(0), ExtRat(1, 2), ExtRat(1)},
          {ProjMat::identity(), ProjMat(1, 0, -1, 1), ProjMat(3, -1, 1, 0),
           ProjMat(1, 1, 0, 1)});
    case BuiltinMap::c:
      return PiecewiseMap({ExtRat(0), ExtRat(1)},
                          {ProjMat(2, 0, 1, 1), ProjMat::identity()});
  }
  throw error("unknown builtin map");
}

}  // namespace ppg
