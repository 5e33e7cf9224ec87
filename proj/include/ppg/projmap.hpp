#pragma once

#include <utility>
#include <vector>

#include "ppg/extrat.hpp"
#include "ppg/seq.hpp"

namespace ppg {

/// Phi(prefix (tail)^inf) computed exactly through the continued-fraction
/// recursion. Only eventually constant sequences give rational values.
ExtRat phi_eval(const Bits& prefix, uint8_t tail);
ExtRat phi_eval(const Seq& s);

/// The nonnegative branch: phi(prefix (tail)^inf) in [0, inf].
ExtRat phi_nonneg(const Bits& prefix, uint8_t tail);

/// Endpoints {Phi(s 0...), Phi(s 1...)} of the arc holding every Phi-image of
/// an extension of s. Rejects the empty word (the whole line).
std::pair<ExtRat, ExtRat> phi_interval(const Bits& s);

/// An exact piecewise projective self-map of the projective line.
/// Breakpoints are listed with infinity first, then increasing; piece i acts
/// on the arc from breakpoint i (inclusive) to breakpoint i+1 (exclusive),
/// cyclically. Adjacent pieces agree at the shared breakpoint.
class PiecewiseMap {
 public:
  PiecewiseMap() : breaks_{ExtRat::infinity()}, pieces_{ProjMat::identity()} {}
  PiecewiseMap(std::vector<ExtRat> breakpoints, std::vector<ProjMat> pieces);

  const std::vector<ExtRat>& breakpoints() const { return breaks_; }
  const std::vector<ProjMat>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  bool operator==(const PiecewiseMap&) const = default;
  bool is_identity() const;

  ExtRat apply(const ExtRat& t) const;
  const ProjMat& piece_at(const ExtRat& t) const;

  PiecewiseMap then(const PiecewiseMap& g) const;
  PiecewiseMap inverse() const;

  /// Pieces whose arcs meet the open interval (lo, hi); lo < hi finite.
  std::vector<ProjMat> pieces_on(const ExtRat& lo, const ExtRat& hi) const;

  /// One "[lo, hi]: (at+b)/(ct+d)" line per piece.
  std::string piece_table() const;

 private:
  std::size_t arc_index(const ExtRat& t) const;
  std::vector<ExtRat> breaks_;
  std::vector<ProjMat> pieces_;
};

enum class BuiltinMap { a, b, c };

PiecewiseMap builtin_map(BuiltinMap which);

inline PiecewiseMap compose(const PiecewiseMap& f, const PiecewiseMap& g) {
  return f.then(g);
}
inline PiecewiseMap invert(const PiecewiseMap& f) { return f.inverse(); }

}  // namespace ppg
