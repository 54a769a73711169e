#include "qmval/monomial.hpp"

#include <algorithm>
#include <string>

#include "qmval/linalg.hpp"

namespace qmval {

namespace {

Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  Rat out(0);
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

std::vector<Rat> to_rat_vector(const Expvec& e) {
  std::vector<Rat> out;
  out.reserve(e.size());
  for (std::int64_t x : e) out.emplace_back(x);
  return out;
}

// Support minimum of sum over active j of (alpha_j + shift)/a_j.
Rat support_min(const MPoly& f, const MonomialWeight& w, int shift) {
  if (f.is_zero()) throw invalid_input("weight of the zero polynomial");
  if (static_cast<std::size_t>(f.nvars()) != w.nvars())
    throw invalid_input("weight dimension does not match the polynomial");
  std::optional<Rat> best;
  for (const auto& [e, c] : f.terms()) {
    Rat sum(0);
    for (std::size_t j = 0; j < w.nvars(); ++j) {
      if (!w.active()[j]) continue;
      sum += Rat(e[j] + shift) / w.scales()[j];
    }
    if (!best || sum < *best) best = sum;
  }
  return *best;
}

// Scale u to coprime integer entries. Orientation is the caller's problem.
std::vector<Rat> integer_normalize(std::vector<Rat> u) {
  Int denom_lcm = 1;
  for (const Rat& c : u) denom_lcm = lcm(denom_lcm, denominator(c));
  Int content = 0;
  for (const Rat& c : u) content = gcd(content, Int(numerator(c) * (denom_lcm / denominator(c))));
  if (content == 0) throw internal_error("normalizing the zero normal");
  Rat scale = make_rat(denom_lcm, content);
  for (Rat& c : u) c *= scale;
  return u;
}

}  // namespace

MonomialWeight MonomialWeight::make(std::vector<Rat> scales) {
  return make_masked(std::move(scales), {});
}

MonomialWeight MonomialWeight::make_masked(std::vector<Rat> scales,
                                           std::vector<bool> active) {
  if (scales.empty()) throw invalid_input("monomial weight needs at least one variable");
  if (active.empty()) active.assign(scales.size(), true);
  if (active.size() != scales.size())
    throw invalid_input("weight mask length mismatch");
  bool any = false;
  for (std::size_t j = 0; j < scales.size(); ++j) {
    if (!active[j]) continue;
    any = true;
    if (scales[j] <= 0)
      throw invalid_input("weight scale a_" + std::to_string(j + 1) +
                          " must be positive");
  }
  if (!any) throw invalid_input("monomial weight has no active variable");
  return MonomialWeight(std::move(scales), std::move(active));
}

FracMonomialWeight FracMonomialWeight::make(
    std::vector<std::pair<Expvec, Rat>> parts) {
  if (parts.empty()) throw invalid_input("fractional monomial weight is empty");
  std::size_t n = parts.front().first.size();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& [beta, a] = parts[j];
    if (beta.size() != n) throw invalid_input("weight exponent dimension mismatch");
    if (a <= 0)
      throw invalid_input("weight exponent a_" + std::to_string(j + 1) +
                          " must be positive");
    bool zero = true;
    for (std::int64_t e : beta) {
      if (e < 0) throw invalid_input("weight exponents must be nonnegative");
      if (e != 0) zero = false;
    }
    if (zero)
      throw invalid_input("weight monomial beta_" + std::to_string(j + 1) +
                          " must be nonzero");
  }
  return FracMonomialWeight(std::move(parts));
}

bool ideal_member(const MPoly& f, const MonomialWeight& w, const Rat& c) {
  if (c <= 0) throw invalid_input("multiplier ideal scale must be positive");
  return jumping_number(f, w) > c;
}

Rat jumping_number(const MPoly& f, const MonomialWeight& w) {
  return support_min(f, w, 1);
}

Rat kiselman_sigma(const MPoly& f, const MonomialWeight& w) {
  return support_min(f, w, 0);
}

TianValue tian_monomial(const MPoly& g, const MPoly& f, const MonomialWeight& w,
                        const Rat& t) {
  if (t < 0) throw invalid_input("Tian parameter must be nonnegative");
  TianValue out;
  out.formula = jumping_number(g, w) + t * kiselman_sigma(f, w);
  if (denominator(t) == 1) {
    out.exact = jumping_number(g * f.pow(static_cast<std::int64_t>(numerator(t))), w);
    out.consistent = (*out.exact == out.formula);
  }
  return out;
}

NewtonPolyhedron newton_facets(const std::vector<std::vector<Rat>>& raw_points,
                               std::size_t max_dim) {
  if (raw_points.empty()) throw invalid_input("newton_facets of an empty point set");
  const std::size_t n = raw_points.front().size();
  if (n == 0 || n > max_dim)
    throw invalid_input("newton_facets dimension " + std::to_string(n) +
                        " outside supported range 1.." + std::to_string(max_dim));
  for (const auto& p : raw_points) {
    if (p.size() != n) throw invalid_input("point dimension mismatch");
    for (const Rat& c : p)
      if (c < 0) throw invalid_input("newton_facets points must be nonnegative");
  }

  std::vector<std::vector<Rat>> points = raw_points;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Candidate elements: the points, then the coordinate rays.
  const std::size_t total = points.size() + n;
  std::vector<std::size_t> subset;
  std::vector<Facet> facets;

  auto consider = [&]() {
    std::size_t first_point = total;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t id : subset) {
      if (id < points.size()) {
        if (first_point == total) {
          first_point = id;
        } else {
          std::vector<Rat> row(n);
          for (std::size_t c = 0; c < n; ++c)
            row[c] = points[id][c] - points[first_point][c];
          rows.push_back(std::move(row));
        }
      } else {
        std::vector<Rat> row(n, Rat(0));
        row[id - points.size()] = 1;
        rows.push_back(std::move(row));
      }
    }
    if (first_point == total) return;  // a facet contains a vertex

    std::optional<std::vector<Rat>> normal = nullspace_line(rows, n);
    if (!normal) return;

    bool has_pos = false, has_neg = false;
    for (const Rat& c : *normal) {
      if (c > 0) has_pos = true;
      if (c < 0) has_neg = true;
    }
    if (has_pos && has_neg) return;  // not a supporting normal of the orthant sum
    if (has_neg)
      for (Rat& c : *normal) c = -c;
    std::vector<Rat> u = integer_normalize(std::move(*normal));
    Rat d = dot(u, points[first_point]);

    std::vector<std::vector<Rat>> tight_rows;
    const std::vector<Rat>* anchor = nullptr;
    for (const auto& p : points) {
      Rat value = dot(u, p);
      if (value < d) return;  // invalid inequality
      if (value == d) {
        if (!anchor) {
          anchor = &p;
        } else {
          std::vector<Rat> row(n);
          for (std::size_t c = 0; c < n; ++c) row[c] = p[c] - (*anchor)[c];
          tight_rows.push_back(std::move(row));
        }
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (u[c] == 0) {
        std::vector<Rat> row(n, Rat(0));
        row[c] = 1;
        tight_rows.push_back(std::move(row));
      }
    }
    if (matrix_rank(std::move(tight_rows)) != static_cast<int>(n) - 1)
      return;  // a valid inequality but only a lower-dimensional face

    Facet facet{std::move(u), std::move(d)};
    for (const Facet& existing : facets)
      if (existing.normal == facet.normal && existing.offset == facet.offset) return;
    facets.push_back(std::move(facet));
  };

  auto recurse = [&](auto&& self, std::size_t next, std::size_t need) -> void {
    if (need == 0) {
      consider();
      return;
    }
    if (next + need > total) return;
    subset.push_back(next);
    self(self, next + 1, need - 1);
    subset.pop_back();
    self(self, next + 1, need);
  };
  recurse(recurse, 0, n);

  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });

  return NewtonPolyhedron{std::move(points), std::move(facets)};
}

Rat relative_type_frac(const Expvec& gamma, const FracMonomialWeight& w) {
  if (gamma.size() != w.nvars())
    throw invalid_input("relative_type_frac dimension mismatch");
  bool zero = true;
  for (std::int64_t e : gamma) {
    if (e < 0) throw invalid_input("relative_type_frac exponent must be nonnegative");
    if (e != 0) zero = false;
  }
  if (zero) throw invalid_input("relative_type_frac of a unit monomial");

  std::vector<std::vector<Rat>> points;
  for (const auto& [beta, a] : w.parts()) {
    std::vector<Rat> p = to_rat_vector(beta);
    for (Rat& c : p) c /= a;
    points.push_back(std::move(p));
  }
  NewtonPolyhedron polyhedron = newton_facets(points);

  std::vector<Rat> g = to_rat_vector(gamma);
  std::optional<Rat> best;
  for (const Facet& facet : polyhedron.facets) {
    if (facet.offset <= 0) continue;
    Rat value(dot(facet.normal, g) / facet.offset);
    if (!best || value < *best) best = value;
  }
  if (!best)
    throw invalid_input("degenerate weight: no facet separates the origin");
  return *best;
}

LpResult feasibility_lp(const std::vector<std::pair<Expvec, Rat>>& rows,
                        std::size_t max_vars) {
  if (rows.empty()) throw invalid_input("feasibility_lp with no equations");
  const std::size_t n = rows.front().first.size();
  const std::size_t m = rows.size();
  if (n == 0 || n > max_vars)
    throw invalid_input("feasibility_lp dimension " + std::to_string(n) +
                        " outside supported range 1.." + std::to_string(max_vars));
  for (const auto& [beta, a] : rows)
    if (beta.size() != n) throw invalid_input("equation dimension mismatch");

  // Inequality rows c.w <= rhs with multipliers over the 2m+n originals:
  // indices 2j / 2j+1 for beta_j.w <= a_j / >= a_j, then -w_i <= 0.
  struct Ineq {
    std::vector<Rat> coeff;
    Rat rhs;
    std::vector<Rat> combo;
  };
  std::vector<Ineq> system;
  auto original = [&](std::size_t index) {
    std::vector<Rat> combo(2 * m + n, Rat(0));
    combo[index] = 1;
    return combo;
  };
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rat> beta = to_rat_vector(rows[j].first);
    std::vector<Rat> neg = beta;
    for (Rat& c : neg) c = -c;
    system.push_back({beta, rows[j].second, original(2 * j)});
    system.push_back({std::move(neg), Rat(-rows[j].second), original(2 * j + 1)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> coeff(n, Rat(0));
    coeff[i] = -1;
    system.push_back({std::move(coeff), Rat(0), original(2 * m + i)});
  }

  for (std::size_t var = n; var-- > 0;) {
    std::vector<Ineq> keep, pos, neg;
    for (Ineq& row : system) {
      if (row.coeff[var] > 0)
        pos.push_back(std::move(row));
      else if (row.coeff[var] < 0)
        neg.push_back(std::move(row));
      else
        keep.push_back(std::move(row));
    }
    for (const Ineq& p : pos) {
      for (const Ineq& q : neg) {
        // scale p by -q.coeff[var] > 0 and q by p.coeff[var] > 0
        Rat sp = -q.coeff[var], sq = p.coeff[var];
        Ineq merged;
        merged.coeff.resize(n);
        for (std::size_t c = 0; c < n; ++c)
          merged.coeff[c] = sp * p.coeff[c] + sq * q.coeff[c];
        merged.rhs = sp * p.rhs + sq * q.rhs;
        merged.combo.resize(2 * m + n);
        for (std::size_t c = 0; c < 2 * m + n; ++c)
          merged.combo[c] = sp * p.combo[c] + sq * q.combo[c];
        keep.push_back(std::move(merged));
      }
    }
    // Deduplicate identical inequalities to contain the blowup.
    std::sort(keep.begin(), keep.end(), [](const Ineq& a, const Ineq& b) {
      if (a.coeff != b.coeff) return a.coeff < b.coeff;
      return a.rhs < b.rhs;
    });
    keep.erase(std::unique(keep.begin(), keep.end(),
                           [](const Ineq& a, const Ineq& b) {
                             return a.coeff == b.coeff && a.rhs == b.rhs;
                           }),
               keep.end());
    system = std::move(keep);
  }

  for (const Ineq& row : system) {
    if (row.rhs >= 0) continue;
    // 0 <= negative: infeasible. Assemble lambda from the tracked combo.
    InfeasibilityCertificate cert;
    cert.multipliers.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
      cert.multipliers.push_back(Rat(row.combo[2 * j] - row.combo[2 * j + 1]));
    // Verify by substitution: sum lambda_j beta_j >= 0 and lambda.a < 0.
    for (std::size_t c = 0; c < n; ++c) {
      Rat component(0);
      for (std::size_t j = 0; j < m; ++j)
        component += cert.multipliers[j] * Rat(rows[j].first[c]);
      if (component < 0)
        throw internal_error("infeasibility certificate fails substitution");
    }
    Rat value(0);
    for (std::size_t j = 0; j < m; ++j)
      value += cert.multipliers[j] * rows[j].second;
    if (value >= 0) throw internal_error("infeasibility certificate is not negative");
    return LpResult{std::nullopt, std::move(cert)};
  }

  // Feasible: enumerate basic solutions and pick the vertex whose support
  // set is lexicographically smallest (ties by the point itself).
  std::vector<std::vector<Rat>> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> free_cols;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask & (std::size_t{1} << i))) free_cols.push_back(i);
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(free_cols.size()));
    std::vector<Rat> b(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t c = 0; c < free_cols.size(); ++c)
        a[j][c] = Rat(rows[j].first[free_cols[c]]);
      b[j] = rows[j].second;
    }
    std::optional<std::vector<Rat>> solved =
        free_cols.empty() ? std::nullopt : solve_unique(a, b);
    if (free_cols.empty()) {
      // w = 0 solves only the all-zero right-hand side.
      bool ok = true;
      for (std::size_t j = 0; j < m; ++j)
        if (rows[j].second != 0) ok = false;
      if (ok) solved.emplace();
    }
    if (!solved) continue;
    std::vector<Rat> w(n, Rat(0));
    bool nonneg = true;
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      if ((*solved)[c] < 0) nonneg = false;
      w[free_cols[c]] = (*solved)[c];
    }
    if (!nonneg) continue;
    if (std::find(vertices.begin(), vertices.end(), w) == vertices.end())
      vertices.push_back(std::move(w));
  }
  if (vertices.empty())
    throw internal_error("feasible system produced no basic solution");

  auto support = [](const std::vector<Rat>& w) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) s.push_back(i);
    return s;
  };
  std::sort(vertices.begin(), vertices.end(),
            [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
              auto sa = support(a), sb = support(b);
              if (sa != sb) return sa < sb;
              return a < b;
            });
  return LpResult{std::move(vertices.front()), std::nullopt};
}

MonomialDecision monomial_interp_decide(
    const std::vector<std::pair<Expvec, Rat>>& pairs) {
  FracMonomialWeight weight = FracMonomialWeight::make(pairs);

  Expvec gamma(weight.nvars(), 0);
  Rat required(0);
  for (const auto& [beta, a] : pairs) {
    for (std::size_t c = 0; c < gamma.size(); ++c) gamma[c] += beta[c];
    required += a;
  }

  MonomialDecision decision;
  decision.criterion_value = relative_type_frac(gamma, weight);
  decision.criterion_required = required;
  bool criterion_ok = decision.criterion_value == required;

  LpResult lp = feasibility_lp(pairs);
  if (criterion_ok != lp.witness.has_value())
    throw internal_error(
        "relative-type criterion and exact feasibility disagree: sigma=" +
        rat_to_string(decision.criterion_value) + ", required=" +
        rat_to_string(required) + ", feasible=" +
        (lp.witness ? std::string("yes") : std::string("no")));

  decision.accepted = criterion_ok;
  if (lp.witness) decision.witness = std::move(*lp.witness);
  decision.certificate = std::move(lp.certificate);
  return decision;
}

}  // namespace qmval
