#include "qmval/intersection.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qmval/bivariate_gcd.hpp"
#include "qmval/linalg.hpp"

namespace qmval {

namespace {

// f(x, 0) as a dense coefficient vector.
std::vector<Rat> restrict_y0(const MPoly& f) {
  std::vector<Rat> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[1] != 0) continue;
    std::size_t i = static_cast<std::size_t>(e[0]);
    if (out.size() <= i) out.resize(i + 1, Rat(0));
    out[i] = c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::int64_t ord_x(const std::vector<Rat>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<std::int64_t>(i);
  throw internal_error("ord_x of zero restriction");
}

// f / y, defined when every term has a positive y exponent.
MPoly divide_out_y(const MPoly& f) {
  MPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    if (e[1] == 0) throw internal_error("divide_out_y on a term without y");
    out.add_term({e[0], e[1] - 1}, c);
  }
  return out;
}

MPoly shift_x(const MPoly& f, std::int64_t k) {
  MPoly out(2);
  for (const auto& [e, c] : f.terms()) out.add_term({e[0] + k, e[1]}, c);
  return out;
}

// Finite branch of Fulton's reduction; callers ruled out common components
// through the origin.
std::int64_t imult_finite(MPoly f, MPoly g) {
  std::int64_t total = 0;
  while (true) {
    if (f.is_zero() || g.is_zero())
      throw internal_error("vanishing intermediate in intersection reduction");
    if (f.constant_term() != 0 || g.constant_term() != 0) return total;

    std::vector<Rat> f0 = restrict_y0(f);
    std::vector<Rat> g0 = restrict_y0(g);
    if (f0.empty() && g0.empty())
      throw internal_error("common factor y slipped past the gcd test");
    if (f0.empty()) {
      // I(y h, g) = ord_x g(x,0) + I(h, g)
      total += ord_x(g0);
      f = divide_out_y(f);
      continue;
    }
    if (g0.empty()) {
      total += ord_x(f0);
      g = divide_out_y(g);
      continue;
    }

    if (f0.size() > g0.size()) {
      std::swap(f, g);
      std::swap(f0, g0);
    }
    // Kill the leading term of g(x,0); the value is unchanged and the
    // degree of the restriction strictly drops.
    std::int64_t shift = static_cast<std::int64_t>(g0.size() - f0.size());
    Rat factor = g0.back() / f0.back();
    g = g - factor * shift_x(f, shift);
  }
}

std::int64_t binom2(std::int64_t d) { return d * (d + 1) / 2; }

// dim of C[[x,y]] / ((f,g) + m^D): monomials of total degree < D modulo the
// span of truncated monomial multiples.
std::int64_t truncated_quotient_dim(const MPoly& f, const MPoly& g, std::int64_t cap) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> col_of;
  for (std::int64_t d = 0; d < cap; ++d)
    for (std::int64_t i = 0; i <= d; ++i)
      col_of.emplace(std::make_pair(i, d - i), col_of.size());

  std::vector<std::vector<Rat>> rows;
  auto add_multiples = [&](const MPoly& h) {
    std::int64_t slack = cap - 1 - h.order();
    for (std::int64_t a = 0; a <= slack; ++a) {
      for (std::int64_t b = 0; a + b <= slack; ++b) {
        std::vector<Rat> row(col_of.size(), Rat(0));
        bool nonzero = false;
        for (const auto& [e, c] : h.terms()) {
          auto it = col_of.find({e[0] + a, e[1] + b});
          if (it == col_of.end()) continue;  // truncated away
          row[it->second] = c;
          nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  };
  add_multiples(f);
  add_multiples(g);

  return binom2(cap) - matrix_rank(std::move(rows));
}

}  // namespace

CurveGerm CurveGerm::make(MPoly poly, bool irreducible_asserted) {
  if (poly.nvars() != 2) throw invalid_input("curve germs are bivariate");
  if (poly.is_zero()) throw invalid_input("curve germ polynomial is zero");
  if (!poly.vanishes_at_origin())
    throw invalid_input("curve germ does not vanish at the origin");
  std::int64_t mult = poly.order();
  return CurveGerm(std::move(poly), irreducible_asserted, mult);
}

NewtonPolygon newton_polygon(const MPoly& f) {
  if (f.nvars() != 2) throw invalid_input("newton_polygon requires two variables");
  if (f.is_zero()) throw invalid_input("newton_polygon of the zero polynomial");
  if (!f.vanishes_at_origin())
    throw invalid_input("newton_polygon requires vanishing at the origin");

  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const auto& [e, c] : f.terms()) pts.emplace_back(e[0], e[1]);
  std::sort(pts.begin(), pts.end());

  // Pareto-minimal support points, x ascending (hence y strictly descending).
  std::vector<std::pair<std::int64_t, std::int64_t>> minimal;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts)
      if (q != p && q.first <= p.first && q.second <= p.second) {
        dominated = true;
        break;
      }
    if (!dominated && (minimal.empty() || minimal.back() != p)) minimal.push_back(p);
  }

  // Monotone-chain scan; collinear middle points are not vertices.
  NewtonPolygon polygon;
  auto& hull = polygon.vertices;
  for (const auto& p : minimal) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      std::int64_t cross = (b.first - a.first) * (p.second - b.second) -
                           (b.second - a.second) * (p.first - b.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return polygon;
}

IrreducibleTest irreducible_sufficient(const MPoly& f) {
  NewtonPolygon polygon = newton_polygon(f);
  const auto& v = polygon.vertices;
  if (v.size() == 1) {
    if (v[0] == std::make_pair<std::int64_t, std::int64_t>(1, 0) ||
        v[0] == std::make_pair<std::int64_t, std::int64_t>(0, 1))
      return IrreducibleTest::kIrreducible;
    return IrreducibleTest::kUnknown;
  }
  if (v.size() != 2) return IrreducibleTest::kUnknown;
  if (v.front().first != 0 || v.back().second != 0) return IrreducibleTest::kUnknown;
  std::int64_t m = v.front().second;
  std::int64_t n = v.back().first;
  // gcd(m,n) = 1 leaves no lattice point inside the segment, so the edge
  // polynomial is a binomial y^m - c x^n: a single Puiseux cycle.
  return std::gcd(m, n) == 1 ? IrreducibleTest::kIrreducible : IrreducibleTest::kUnknown;
}

ExtRat imult(const MPoly& f, const MPoly& g) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw invalid_input("imult requires two variables");
  if (f.is_zero() || g.is_zero()) throw invalid_input("imult of the zero polynomial");

  if (f.constant_term() != 0 || g.constant_term() != 0) return ExtRat(Rat(0));

  MPoly common = gcd_bivariate(f, g);
  if (common.order() > 0) return ExtRat::infinity();

  return ExtRat(Rat(imult_finite(f, g)));
}

std::int64_t imult_oracle(const MPoly& f, const MPoly& g, OracleOptions options) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw invalid_input("imult_oracle requires two variables");
  if (f.is_zero() || g.is_zero())
    throw invalid_input("imult_oracle of the zero polynomial");
  if (f.vanishes_at_origin() && g.vanishes_at_origin() &&
      gcd_bivariate(f, g).order() > 0)
    throw invalid_input("imult_oracle requires no common component through the origin");

  std::int64_t start = std::max<std::int64_t>(2, options.start);
  std::int64_t previous = -1;
  for (std::int64_t cap = start; cap <= options.ceiling; ++cap) {
    std::int64_t dim = truncated_quotient_dim(f, g, cap);
    if (dim == previous) return dim;
    previous = dim;
  }
  throw invalid_input("imult_oracle undecided at ceiling D=" +
                      std::to_string(options.ceiling));
}

}  // namespace qmval
