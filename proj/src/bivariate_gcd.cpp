#include "qmval/bivariate_gcd.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qmval {

namespace {

// Dense univariate polynomial over Rat, coefficient i of x^i.
using XPoly = std::vector<Rat>;
// Dense in y with XPoly coefficients, coefficient j of y^j.
using XYPoly = std::vector<XPoly>;

void x_trim(XPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool x_is_zero(const XPoly& p) { return p.empty(); }

int x_deg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

XPoly x_mul(const XPoly& a, const XPoly& b) {
  if (x_is_zero(a) || x_is_zero(b)) return {};
  XPoly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  x_trim(out);
  return out;
}

XPoly x_sub(const XPoly& a, const XPoly& b) {
  XPoly out = a;
  if (out.size() < b.size()) out.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  x_trim(out);
  return out;
}

// Division with remainder in Q[x]; b nonzero.
std::pair<XPoly, XPoly> x_divrem(const XPoly& a, const XPoly& b) {
  XPoly rem = a, quot;
  if (x_deg(a) >= x_deg(b)) quot.assign(a.size() - b.size() + 1, Rat(0));
  while (!x_is_zero(rem) && x_deg(rem) >= x_deg(b)) {
    int shift = x_deg(rem) - x_deg(b);
    Rat c = rem.back() / b.back();
    quot[shift] += c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= c * b[i];
    x_trim(rem);
  }
  x_trim(quot);
  return {quot, rem};
}

XPoly x_div_exact(const XPoly& a, const XPoly& b) {
  auto [q, r] = x_divrem(a, b);
  if (!x_is_zero(r)) throw internal_error("inexact division in gcd");
  return q;
}

// Monic gcd in Q[x].
XPoly x_gcd(XPoly a, XPoly b) {
  x_trim(a);
  x_trim(b);
  while (!x_is_zero(b)) {
    XPoly r = x_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!x_is_zero(a)) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

int y_deg(const XYPoly& p) { return static_cast<int>(p.size()) - 1; }

void y_trim(XYPoly& p) {
  while (!p.empty() && x_is_zero(p.back())) p.pop_back();
}

bool y_is_zero(const XYPoly& p) { return p.empty(); }

// gcd over Q[x] of the y-coefficients.
XPoly xy_content(const XYPoly& p) {
  XPoly c;
  for (const XPoly& coeff : p) {
    if (x_is_zero(coeff)) continue;
    c = x_is_zero(c) ? x_gcd(coeff, {}) : x_gcd(c, coeff);
  }
  return c;
}

XYPoly xy_div_xpoly(const XYPoly& p, const XPoly& d) {
  XYPoly out;
  out.reserve(p.size());
  for (const XPoly& coeff : p)
    out.push_back(x_is_zero(coeff) ? XPoly{} : x_div_exact(coeff, d));
  return out;
}

XYPoly xy_primitive(const XYPoly& p) { return xy_div_xpoly(p, xy_content(p)); }

// Pseudo-remainder of a by b in y (deg_y a >= deg_y b >= 0, b nonzero),
// up to Q[x]-content which the caller strips anyway.
XYPoly y_prem(XYPoly a, const XYPoly& b) {
  const XPoly& lead_b = b.back();
  while (!y_is_zero(a) && y_deg(a) >= y_deg(b)) {
    int shift = y_deg(a) - y_deg(b);
    XPoly lead_a = a.back();
    // a <- lead_b * a - lead_a * y^shift * b
    XYPoly next(std::max(a.size(), b.size() + shift) - 1);
    for (int j = 0; j + 1 < static_cast<int>(a.size()); ++j)
      next[j] = x_mul(lead_b, a[j]);
    for (int j = 0; j < static_cast<int>(b.size()) - 1; ++j)
      next[j + shift] = x_sub(next[j + shift], x_mul(lead_a, b[j]));
    y_trim(next);
    a = std::move(next);
  }
  return a;
}

XYPoly to_xy(const MPoly& f) {
  XYPoly out;
  for (const auto& [e, c] : f.terms()) {
    std::size_t i = static_cast<std::size_t>(e[0]);
    std::size_t j = static_cast<std::size_t>(e[1]);
    if (out.size() <= j) out.resize(j + 1);
    if (out[j].size() <= i) out[j].resize(i + 1, Rat(0));
    out[j][i] = c;
  }
  for (XPoly& coeff : out) x_trim(coeff);
  y_trim(out);
  return out;
}

MPoly from_xy(const XYPoly& p) {
  MPoly out(2);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      if (p[j][i] != 0)
        out.add_term({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)},
                     p[j][i]);
  return out;
}

std::int64_t degree_of(const Expvec& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

}  // namespace

MPoly primitive_normal_form(const MPoly& f) {
  if (f.is_zero()) throw invalid_input("normal form of the zero polynomial");

  Int denom_lcm = 1;
  for (const auto& [e, c] : f.terms())
    denom_lcm = lcm(denom_lcm, denominator(c));

  Int content = 0;
  for (const auto& [e, c] : f.terms())
    content = gcd(content, Int(numerator(c) * (denom_lcm / denominator(c))));

  const Expvec* lead = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!lead || degree_of(e) > degree_of(*lead) ||
        (degree_of(e) == degree_of(*lead) && e > *lead))
      lead = &e;
  }
  Rat scale = make_rat(denom_lcm, content);
  if (f.coefficient(*lead) < 0) scale = -scale;
  return scale * f;
}

MPoly gcd_bivariate(const MPoly& f, const MPoly& g) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw invalid_input("gcd_bivariate requires two variables");
  if (f.is_zero() || g.is_zero())
    throw invalid_input("gcd_bivariate requires nonzero inputs");

  XYPoly a = to_xy(f), b = to_xy(g);
  XPoly content = x_gcd(xy_content(a), xy_content(b));

  XYPoly result;
  if (y_deg(a) == 0 && y_deg(b) == 0) {
    result = {content};
  } else if (y_deg(a) == 0 || y_deg(b) == 0) {
    // One side lies in Q[x]; the y-primitive parts are coprime.
    result = {content};
  } else {
    XYPoly pa = xy_primitive(a), pb = xy_primitive(b);
    if (y_deg(pa) < y_deg(pb)) std::swap(pa, pb);
    while (true) {
      XYPoly r = y_prem(pa, pb);
      if (y_is_zero(r)) {
        result = xy_primitive(pb);
        break;
      }
      if (y_deg(r) == 0) {
        result = {XPoly{Rat(1)}};  // coprime primitive parts
        break;
      }
      pa = std::move(pb);
      pb = xy_primitive(r);
    }
    // Multiply the y-gcd by the Q[x] content gcd.
    for (XPoly& coeff : result) coeff = x_mul(coeff, content);
  }

  return primitive_normal_form(from_xy(result));
}

}  // namespace qmval
