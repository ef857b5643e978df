#pragma once

#include "delzant/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace delzant {

/// Exact piecewise-linear function with closed support. Zero outside the
/// support. Canonical form: adjacent pieces with equal slope and intercept
/// are merged, and identically-zero pieces at either end are trimmed, so
/// equality of values is equality of representations.
class PiecewiseLinear {
public:
  struct Piece {
    Rational slope;
    Rational intercept;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  PiecewiseLinear() = default;  // the zero function

  static PiecewiseLinear zero() { return {}; }

  /// From breakpoints x0 < ... < xn and one (slope, intercept) per interval.
  static PiecewiseLinear from_pieces(std::vector<Rational> breakpoints,
                                     std::vector<Piece> pieces) {
    if (breakpoints.size() != pieces.size() + 1 && !(breakpoints.empty() && pieces.empty()))
      throw std::domain_error("piecewise: breakpoint/piece count mismatch");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
      if (!(breakpoints[i] < breakpoints[i + 1]))
        throw std::domain_error("piecewise: breakpoints not strictly increasing");
    PiecewiseLinear f;
    f.breaks_ = std::move(breakpoints);
    f.pieces_ = std::move(pieces);
    f.canonicalize();
    return f;
  }

  /// Continuous interpolation through (x_i, v_i).
  static PiecewiseLinear interpolate(const std::vector<Rational>& xs,
                                     const std::vector<Rational>& vs) {
    if (xs.size() != vs.size() || xs.size() < 2)
      throw std::domain_error("piecewise: need at least two nodes");
    std::vector<Piece> pieces;
    pieces.reserve(xs.size() - 1);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      Rational slope = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i]);
      pieces.push_back({slope, vs[i] - slope * xs[i]});
    }
    return from_pieces(xs, std::move(pieces));
  }

  bool is_zero() const { return pieces_.empty(); }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  Rational support_lo() const { return breaks_.front(); }
  Rational support_hi() const { return breaks_.back(); }

  Rational operator()(const Rational& x) const {
    if (is_zero() || x < breaks_.front() || x > breaks_.back()) return 0;
    size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
    if (i > 0) --i;
    if (i >= pieces_.size()) i = pieces_.size() - 1;
    return pieces_[i].slope * x + pieces_[i].intercept;
  }

  /// Pieces agree at every interior breakpoint. (The function may still
  /// jump to zero at the ends of its support.)
  bool is_continuous() const {
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const Rational& x = breaks_[i + 1];
      if (pieces_[i].slope * x + pieces_[i].intercept !=
          pieces_[i + 1].slope * x + pieces_[i + 1].intercept)
        return false;
    }
    return true;
  }

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
  std::vector<Rational> breaks_;
  std::vector<Piece> pieces_;

  void canonicalize() {
    // merge equal neighbours
    size_t w = 0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
      if (w > 0 && pieces_[i] == pieces_[w - 1]) {
        breaks_.erase(breaks_.begin() + w);
      } else {
        pieces_[w++] = pieces_[i];
      }
    }
    pieces_.resize(w);
    // trim zero pieces at either end
    auto zero_piece = [](const Piece& p) { return p.slope.is_zero() && p.intercept.is_zero(); };
    while (!pieces_.empty() && zero_piece(pieces_.front())) {
      pieces_.erase(pieces_.begin());
      breaks_.erase(breaks_.begin());
    }
    while (!pieces_.empty() && zero_piece(pieces_.back())) {
      pieces_.pop_back();
      breaks_.pop_back();
    }
    if (pieces_.empty()) breaks_.clear();
  }
};

inline PiecewiseLinear pl_scale(const PiecewiseLinear& f, const Rational& c) {
  if (c.is_zero() || f.is_zero()) return PiecewiseLinear::zero();
  std::vector<PiecewiseLinear::Piece> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back({p.slope * c, p.intercept * c});
  return PiecewiseLinear::from_pieces(f.breakpoints(), std::move(pieces));
}

inline PiecewiseLinear pl_add(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  std::vector<Rational> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto piece_on = [](const PiecewiseLinear& h, const Rational& lo, const Rational& hi) {
    PiecewiseLinear::Piece out{0, 0};
    if (h.is_zero() || hi <= h.support_lo() || lo >= h.support_hi()) return out;
    const auto& bs = h.breakpoints();
    size_t i = std::upper_bound(bs.begin(), bs.end(), lo) - bs.begin();
    if (i > 0) --i;
    if (i >= h.pieces().size()) i = h.pieces().size() - 1;
    return h.pieces()[i];
  };

  std::vector<PiecewiseLinear::Piece> pieces;
  pieces.reserve(xs.size() - 1);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    auto pf = piece_on(f, xs[i], xs[i + 1]);
    auto pg = piece_on(g, xs[i], xs[i + 1]);
    pieces.push_back({pf.slope + pg.slope, pf.intercept + pg.intercept});
  }
  return PiecewiseLinear::from_pieces(std::move(xs), std::move(pieces));
}

/// Definite integral over the support, computed piece by piece.
inline Rational pl_integral(const PiecewiseLinear& f) {
  Rational total = 0;
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    const Rational& a = f.breakpoints()[i];
    const Rational& b = f.breakpoints()[i + 1];
    const auto& p = f.pieces()[i];
    total += p.slope * (b * b - a * a) / Rational(2) + p.intercept * (b - a);
  }
  return total;
}

}  // namespace delzant
