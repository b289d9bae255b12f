#include "rikit/shape_function.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rikit::shapefn {

namespace {

bool is_affine(const ShapePiece& p) { return p.add != 0; }

// Exact value of the piece formula at a rational point (ignores the piece
// interval, callers pick the right piece).
PowerValue formula_power(const ShapePiece& p, const Rat& t) {
  if (is_affine(p)) return PowerValue::of(p.coef * t + p.add);
  return PowerValue::of(p.coef) * PowerValue::pow(t, p.exp);
}

void require_pure(const ShapeFunction& phi, const char* op) {
  if (!phi.pure_power())
    throw std::invalid_argument(std::string(op) + ": shape has affine pieces; pure power pieces required");
}

}  // namespace

ShapeFunction ShapeFunction::make(std::vector<ShapePiece> pieces, ExtRat alpha) {
  if (pieces.empty()) throw std::invalid_argument("shape function needs at least one piece");
  if (!alpha.is_inf() && alpha.finite() <= 0)
    throw std::invalid_argument("shape domain bound must be positive");
  std::vector<ShapePiece> merged;
  for (auto& p : pieces) {
    if (p.coef <= 0) throw std::invalid_argument("shape piece coefficient must be positive");
    if (p.add != 0) {
      if (p.exp != 1) throw std::invalid_argument("affine offset requires exponent 1");
      if (p.coef * p.from + p.add < 0)
        throw std::invalid_argument("affine shape piece negative at its left end");
    }
    if (p.from < 0) throw std::invalid_argument("shape piece starts before 0");
    if (!(ExtRat(p.from) < p.to)) throw std::invalid_argument("empty shape piece");
    if (!merged.empty() && merged.back().coef == p.coef && merged.back().exp == p.exp &&
        merged.back().add == p.add && merged.back().to == ExtRat(p.from)) {
      merged.back().to = p.to;
    } else {
      merged.push_back(std::move(p));
    }
  }
  if (merged.front().from != 0) throw std::invalid_argument("shape pieces must start at 0");
  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i].to != ExtRat(merged[i + 1].from))
      throw std::invalid_argument("shape pieces must tile the domain");
  }
  if (merged.back().to != alpha)
    throw std::invalid_argument("last shape piece must end at the domain bound");

  ShapeFunction out;
  out.pieces_ = std::move(merged);
  out.alpha_ = std::move(alpha);
  out.pure_power_ = true;
  for (const auto& p : out.pieces_)
    if (is_affine(p)) out.pure_power_ = false;

  bool mono = true;
  for (const auto& p : out.pieces_)
    if (p.exp < 0) mono = false;
  if (mono) {
    for (size_t i = 0; i + 1 < out.pieces_.size(); ++i) {
      const Rat b = out.pieces_[i].to.finite();
      if (pv_less(formula_power(out.pieces_[i + 1], b), formula_power(out.pieces_[i], b))) {
        mono = false;
        break;
      }
    }
  }
  out.monotone_ = mono;
  return out;
}

size_t ShapeFunction::piece_index(const Rat& t) const {
  if (t <= 0) throw std::out_of_range("shape evaluation needs t > 0");
  if (!alpha_.is_inf() && t > alpha_.finite())
    throw std::out_of_range("shape evaluation beyond the domain bound");
  for (size_t i = 0; i < pieces_.size(); ++i)
    if (ExtRat(t) <= pieces_[i].to) return i;
  throw std::out_of_range("shape evaluation beyond the domain bound");
}

ExtValue ShapeFunction::eval(const Rat& t) const {
  if (t == 0) return ExtValue::zero();
  const ShapePiece& p = pieces_[piece_index(t)];
  if (is_affine(p)) return ExtValue::exact(p.coef * t + p.add);
  return ev_pow(ExtValue::exact(t), p.exp) * ExtValue::exact(p.coef);
}

PowerValue ShapeFunction::eval_power(const Rat& t) const {
  if (t == 0) return PowerValue::zero();
  return formula_power(pieces_[piece_index(t)], t);
}

double ShapeFunction::eval_d(double t) const {
  if (t <= 0) return 0;
  for (const auto& p : pieces_) {
    if (p.to.is_inf() || t <= p.to.to_double())
      return rat_to_double(p.coef) * std::pow(t, rat_to_double(p.exp)) + rat_to_double(p.add);
  }
  const auto& p = pieces_.back();
  return rat_to_double(p.coef) * std::pow(t, rat_to_double(p.exp)) + rat_to_double(p.add);
}

ExtValue ShapeFunction::eval_ext(const ExtRat& t) const {
  if (t.is_inf()) return limit_at_sup();
  return eval(t.finite());
}

ExtValue ShapeFunction::limit_at_zero() const {
  const ShapePiece& p = pieces_.front();
  if (is_affine(p)) return ExtValue::exact(p.add);
  if (p.exp > 0) return ExtValue::zero();
  if (p.exp == 0) return ExtValue::exact(p.coef);
  return ExtValue::infinity();
}

ExtValue ShapeFunction::limit_at_sup() const {
  if (!alpha_.is_inf()) return eval(alpha_.finite());
  const ShapePiece& p = pieces_.back();
  if (is_affine(p)) return ExtValue::infinity();
  if (p.exp > 0) return ExtValue::infinity();
  if (p.exp == 0) return ExtValue::exact(p.coef);
  return ExtValue::zero();
}

ShapeFunction power_shape(Rat coef, Rat exp, ExtRat alpha) {
  return ShapeFunction::make({{Rat(0), alpha, std::move(coef), std::move(exp)}}, alpha);
}

ShapeFunction min_t_one_shape() {
  return ShapeFunction::make(
      {{Rat(0), ExtRat(Rat(1)), Rat(1), Rat(1)}, {Rat(1), ExtRat::infinity(), Rat(1), Rat(0)}},
      ExtRat::infinity());
}

ShapeFunction one_shape() { return power_shape(Rat(1), Rat(0)); }

PowerValue doubling_power(const ShapeFunction& phi) {
  require_pure(phi, "doubling constant");
  const auto& ps = phi.pieces();
  const ExtRat& alpha = phi.alpha();
  const bool bounded = !alpha.is_inf();
  const Rat half_alpha = bounded ? alpha.finite() / 2 : Rat(0);

  std::set<Rat> cuts;
  auto add_cut = [&](const Rat& x) {
    if (x > 0 && (!bounded || x < half_alpha)) cuts.insert(x);
  };
  for (const auto& p : ps) {
    add_cut(p.from);
    add_cut(p.from / 2);
    if (!p.to.is_inf()) {
      add_cut(p.to.finite());
      add_cut(p.to.finite() / 2);
    }
  }
  std::vector<Rat> ends(cuts.begin(), cuts.end());
  if (bounded) ends.push_back(half_alpha);

  PowerValue best = PowerValue::zero();
  auto cell = [&](const Rat& u, const ExtRat& w) {
    size_t den_idx, num_idx;
    if (!w.is_inf()) {
      den_idx = phi.piece_index(w.finite());
      num_idx = phi.piece_index(w.finite() * 2);
    } else {
      den_idx = ps.size() - 1;
      num_idx = ps.size() - 1;
    }
    const Rat dexp = ps[num_idx].exp - ps[den_idx].exp;
    const PowerValue base =
        PowerValue::of(ps[num_idx].coef / ps[den_idx].coef) * PowerValue::pow(Rat(2), ps[num_idx].exp);
    auto at = [&](const Rat& t) { return base * PowerValue::pow(t, dexp); };
    if (u > 0) {
      best = pv_max(best, at(u));
    } else if (dexp == 0) {
      best = pv_max(best, base);
    } else if (dexp < 0) {
      best = PowerValue::infinity();
    }
    if (!w.is_inf()) {
      best = pv_max(best, at(w.finite()));
    } else if (dexp > 0) {
      best = PowerValue::infinity();
    } else if (dexp == 0) {
      best = pv_max(best, base);
    }
  };
  Rat prev = 0;
  for (const auto& x : ends) {
    cell(prev, ExtRat(x));
    prev = x;
  }
  if (!bounded) cell(prev, ExtRat::infinity());
  return best;
}

ExtValue delta2_constant(const ShapeFunction& phi) { return doubling_power(phi).to_ext_value(); }

PowerValue wqc_power(const ShapeFunction& phi) {
  require_pure(phi, "weak quasiconcavity constant");
  const auto& ps = phi.pieces();
  auto ratio_at = [](const ShapePiece& p, const Rat& t) {
    return PowerValue::of(p.coef) * PowerValue::pow(t, p.exp - 1);
  };
  auto piece_sup = [&](const ShapePiece& p) {
    const Rat q = p.exp - 1;
    if (q > 0) return p.to.is_inf() ? PowerValue::infinity() : ratio_at(p, p.to.finite());
    if (q < 0) return p.from == 0 ? PowerValue::infinity() : ratio_at(p, p.from);
    return PowerValue::of(p.coef);
  };
  auto piece_inf = [&](const ShapePiece& p) {
    const Rat q = p.exp - 1;
    if (q > 0) return p.from == 0 ? PowerValue::zero() : ratio_at(p, p.from);
    if (q < 0) return p.to.is_inf() ? PowerValue::zero() : ratio_at(p, p.to.finite());
    return PowerValue::of(p.coef);
  };
  PowerValue best = PowerValue::of(Rat(1));
  for (size_t i = 0; i < ps.size(); ++i) {
    for (size_t j = i; j < ps.size(); ++j) {
      // Within one piece phi(t)/t is monotone: a non-increasing stretch never
      // beats ratio 1.
      if (i == j && ps[i].exp <= 1) continue;
      const PowerValue top = piece_sup(ps[j]);
      const PowerValue bottom = piece_inf(ps[i]);
      if (top.is_inf() || bottom.is_zero()) return PowerValue::infinity();
      best = pv_max(best, pv_div(top, bottom));
    }
  }
  return best;
}

ExtValue wqc_constant(const ShapeFunction& phi) { return wqc_power(phi).to_ext_value(); }

ShapeReport check_admissible(const ShapeFunction& phi) {
  ShapeReport r;
  r.monotone = phi.monotone();
  r.limit_at_zero = phi.limit_at_zero();
  r.limit_at_sup = phi.limit_at_sup();
  const PowerValue d2 = doubling_power(phi);
  r.delta2 = d2.to_ext_value();
  r.delta2_finite = !d2.is_inf();
  r.admissible = r.monotone && r.delta2_finite;
  r.wqc = wqc_constant(phi);
  return r;
}

bool is_concave(const ShapeFunction& phi) {
  if (!phi.monotone() || !phi.pure_power()) return false;
  const auto& ps = phi.pieces();
  for (const auto& p : ps)
    if (p.exp < 0 || p.exp > 1) return false;
  for (size_t i = 0; i + 1 < ps.size(); ++i) {
    const Rat b = ps[i].to.finite();
    // Continuity at the junction, and slopes may only flatten: for power
    // pieces meeting continuously the slope ratio is exp_right / exp_left.
    if (!pv_equal(formula_power(ps[i], b), formula_power(ps[i + 1], b))) return false;
    if (ps[i + 1].exp > ps[i].exp) return false;
  }
  return true;
}

std::string signature(const ShapeFunction& phi) {
  auto coef_str = [](const Rat& c) { return format_rat(c); };
  auto piece_str = [&](const ShapePiece& p) {
    std::string body;
    if (p.exp == 0) {
      body = coef_str(p.coef);
    } else {
      body = (p.coef == 1 ? std::string() : coef_str(p.coef) + "*") + "t";
      if (p.exp != 1) body += "^(" + format_rat(p.exp) + ")";
    }
    if (p.add != 0) body += "+" + format_rat(p.add);
    return body;
  };
  if (phi.pieces().size() == 1) return piece_str(phi.pieces().front());
  std::string out = "{";
  for (size_t i = 0; i < phi.pieces().size(); ++i) {
    const auto& p = phi.pieces()[i];
    if (i) out += "; ";
    out += piece_str(p) + " on (" + format_rat(p.from) + "," + p.to.to_string() + "]";
  }
  return out + "}";
}

ShapeFunction bar(const ShapeFunction& phi) {
  require_pure(phi, "bar");
  std::vector<ShapePiece> out;
  out.reserve(phi.pieces().size());
  for (const auto& p : phi.pieces()) out.push_back({p.from, p.to, Rat(1) / p.coef, Rat(1) - p.exp});
  return ShapeFunction::make(std::move(out), phi.alpha());
}

ExtValue reciprocal_integral_over(const ShapeFunction& phi, const Rat& from, const ExtRat& to) {
  require_pure(phi, "reciprocal integral");
  if (from < 0) throw std::invalid_argument("reciprocal integral needs from >= 0");
  const ExtRat upper = std::min(to, phi.alpha());
  ExtValue total = ExtValue::zero();
  auto difference_over = [](const ExtValue& a, const ExtValue& b, const Rat& denom) {
    if (a.is_exact() && b.is_exact()) {
      Rat d = a.rat() - b.rat();
      if (d < 0) d = -d;
      return ExtValue::exact(d / denom);
    }
    return ExtValue::approx(std::abs(a.value() - b.value()) / rat_to_double(denom));
  };
  for (const auto& p : phi.pieces()) {
    const Rat x = std::max(from, p.from);
    const ExtRat y = std::min(upper, p.to);
    if (!(ExtRat(x) < y)) continue;
    const Rat q = 1 - p.exp;  // integrating t^{-exp}
    if (x == 0) {
      if (p.exp >= 1) return ExtValue::infinity();
      if (y.is_inf()) return ExtValue::infinity();
      total = total + ev_pow(ExtValue::exact(y.finite()), q) * ExtValue::exact(Rat(1) / (p.coef * q));
    } else if (y.is_inf()) {
      if (p.exp <= 1) return ExtValue::infinity();
      total = total +
              ev_pow(ExtValue::exact(x), q) * ExtValue::exact(Rat(1) / (p.coef * (p.exp - 1)));
    } else if (p.exp == 1) {
      total = total + ExtValue::approx(std::log(rat_to_double(y.finite()) / rat_to_double(x)) /
                                       rat_to_double(p.coef));
    } else {
      Rat aq = q < 0 ? -q : q;
      total = total + difference_over(ev_pow(ExtValue::exact(y.finite()), q),
                                      ev_pow(ExtValue::exact(x), q), p.coef * aq);
    }
    if (total.is_inf()) return total;
  }
  return total;
}

ExtValue reciprocal_integral(const ShapeFunction& phi, const ExtRat& t) {
  return reciprocal_integral_over(phi, Rat(0), t);
}

ShapeFunction max_with(const ShapeFunction& a, const ShapeFunction& b) {
  require_pure(a, "max of shapes");
  require_pure(b, "max of shapes");
  if (a.alpha() != b.alpha()) throw std::invalid_argument("max of shapes: domain bounds differ");

  std::set<Rat> cuts;
  for (const ShapeFunction* f : {&a, &b}) {
    for (const auto& p : f->pieces()) {
      if (p.from > 0) cuts.insert(p.from);
      if (!p.to.is_inf()) cuts.insert(p.to.finite());
    }
  }

  std::vector<ShapePiece> out;
  auto handle_cell = [&](const Rat& u, const ExtRat& w) {
    const Rat rep = w.is_inf() ? u + 1 : w.finite();
    const ShapePiece& pa = a.pieces()[a.piece_index(rep)];
    const ShapePiece& pb = b.pieces()[b.piece_index(rep)];
    auto emit = [&](const Rat& lo, const ExtRat& hi, const ShapePiece& win) {
      out.push_back({lo, hi, win.coef, win.exp});
    };
    if (pa.exp == pb.exp) {
      emit(u, w, pa.coef >= pb.coef ? pa : pb);
      return;
    }
    auto side = [&](const Rat& t) {
      const PowerValue va = formula_power(pa, t);
      const PowerValue vb = formula_power(pb, t);
      return pv_equal(va, vb) ? 0 : (pv_less(vb, va) ? 1 : -1);
    };
    // Near 0 the smaller exponent dominates; near infinity the larger one.
    int left = u > 0 ? side(u) : (pa.exp < pb.exp ? 1 : -1);
    int right = w.is_inf() ? (pa.exp > pb.exp ? 1 : -1) : side(w.finite());
    if (left == 0) left = right;
    if (right == 0) right = left;
    if (left == right) {
      emit(u, w, left >= 0 ? pa : pb);
      return;
    }
    // Exactly one crossing strictly inside the cell.
    auto cross = rat_pow_exact(pa.coef / pb.coef, Rat(1) / (pb.exp - pa.exp));
    if (!cross) throw std::domain_error("max of shapes: crossing point is not rational");
    emit(u, ExtRat(*cross), left > 0 ? pa : pb);
    emit(*cross, w, right > 0 ? pa : pb);
  };

  Rat prev = 0;
  for (const auto& x : cuts) {
    handle_cell(prev, ExtRat(x));
    prev = x;
  }
  if (a.alpha().is_inf()) handle_cell(prev, ExtRat::infinity());
  return ShapeFunction::make(std::move(out), a.alpha());
}

MajorantResult concave_majorant(const ShapeFunction& phi, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("concave majorant needs grid_size >= 2");
  if (wqc_power(phi).is_inf())
    throw std::domain_error("concave majorant needs a finite weak-quasiconcavity constant");

  const ExtRat& alpha = phi.alpha();
  std::set<Rat> grid_set;
  auto add = [&](const Rat& t) {
    if (t > 0 && (alpha.is_inf() || t <= alpha.finite())) grid_set.insert(t);
  };
  const int octaves = 12;
  const int per_octave = std::max(1, (grid_size + 2 * octaves - 1) / (2 * octaves));
  Rat base = 1;
  for (int j = 0; j < octaves; ++j) base /= 2;
  Rat step = base;
  for (int j = -octaves; j < octaves; ++j) {
    for (int i = 0; i < per_octave; ++i) add(step * (per_octave + i) / per_octave);
    step *= 2;
  }
  add(step);
  for (const auto& p : phi.pieces()) {
    if (p.from > 0) add(p.from);
    if (!p.to.is_inf()) add(p.to.finite());
  }
  if (!alpha.is_inf()) {
    add(alpha.finite());
    add(alpha.finite() / 2);
  }

  std::vector<Rat> grid(grid_set.begin(), grid_set.end());
  const size_t n = grid.size();
  std::vector<double> ts(n), ys(n);
  std::vector<ExtValue> vals(n);
  for (size_t i = 0; i < n; ++i) {
    ts[i] = rat_to_double(grid[i]);
    vals[i] = phi.eval(grid[i]);
    ys[i] = vals[i].value();
  }

  // Upper hull: chord slopes strictly decreasing left to right.
  std::vector<size_t> hull;
  auto slope_d = [&](size_t i, size_t j) { return (ys[j] - ys[i]) / (ts[j] - ts[i]); };
  for (size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2 &&
           slope_d(hull[hull.size() - 2], hull.back()) <= slope_d(hull.back(), i))
      hull.pop_back();
    hull.push_back(i);
  }

  auto chord = [&](size_t i, size_t j) -> std::pair<Rat, Rat> {  // slope, intercept
    Rat yi, yj;
    if (vals[i].is_exact() && vals[j].is_exact()) {
      yi = vals[i].rat();
      yj = vals[j].rat();
    } else {
      yi = rat_from_double(ys[i]);
      yj = rat_from_double(ys[j]);
    }
    const Rat m = (yj - yi) / (grid[j] - grid[i]);
    return {m, yi - m * grid[i]};
  };
  auto exact_y = [&](size_t i) {
    return vals[i].is_exact() ? vals[i].rat() : rat_from_double(ys[i]);
  };

  std::vector<ShapePiece> out;
  auto push_affine = [&](const Rat& lo, const ExtRat& hi, const Rat& m, const Rat& c) {
    if (m == 0) {
      out.push_back({lo, hi, c, Rat(0)});
    } else {
      out.push_back({lo, hi, m, Rat(1), c});
    }
  };

  if (hull.size() == 1) {
    out.push_back({Rat(0), alpha, exact_y(hull[0]), Rat(0)});
  } else {
    for (size_t s = 0; s + 1 < hull.size(); ++s) {
      auto [m, c] = chord(hull[s], hull[s + 1]);
      if (s == 0) {
        if (c >= 0) {
          push_affine(Rat(0), ExtRat(grid[hull[1]]), m, c);
          continue;
        }
        // A chord dipping below zero cannot reach down to 0; bridge with the
        // line through the origin and the first sample.
        const Rat t0 = grid[hull[0]];
        push_affine(Rat(0), ExtRat(t0), exact_y(hull[0]) / t0, Rat(0));
      }
      push_affine(grid[hull[s]], ExtRat(grid[hull[s + 1]]), m, c);
    }
    if (ExtRat(grid[hull.back()]) != alpha) {
      auto [m, c] = chord(hull[hull.size() - 2], hull.back());
      push_affine(grid[hull.back()], alpha, m, c);
    }
  }

  MajorantResult result{ShapeFunction::make(std::move(out), alpha), 0.0, std::move(grid)};
  const double t_lo = ts.front();
  const double t_hi = ts.back();
  for (int k = 0; k <= 1000; ++k) {
    const double t = t_lo * std::pow(t_hi / t_lo, k / 1000.0);
    const double ratio = result.majorant.eval_d(t) / phi.eval_d(t);
    result.max_ratio = std::max(result.max_ratio, ratio);
  }
  return result;
}

}  // namespace rikit::shapefn
