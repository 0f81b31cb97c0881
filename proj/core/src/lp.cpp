// Copyright 2026 The tropfan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropfan/lp.hpp"

#include <map>

namespace tropfan {

namespace {

struct Row {
  RatVector coeffs;
  Rational constant;
  Relation relation;
  RatVector mult;  // combination of the input constraints producing this row
};

bool holds(Relation rel, const Rational& v) {
  switch (rel) {
    case Relation::kEqual: return v == 0;
    case Relation::kGreaterEqual: return v >= 0;
    case Relation::kGreater: return v > 0;
  }
  return false;
}

void scale(Row& r, const Rational& k) {
  for (auto& c : r.coeffs) c *= k;
  r.constant *= k;
  for (auto& m : r.mult) m *= k;
}

// a*x + b with the combination a*A + b*B.
Row combine(const Row& a, const Rational& ka, const Row& b, const Rational& kb) {
  Row r;
  r.coeffs.resize(a.coeffs.size());
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    r.coeffs[i] = ka * a.coeffs[i] + kb * b.coeffs[i];
  r.constant = ka * a.constant + kb * b.constant;
  r.mult.resize(a.mult.size());
  for (std::size_t i = 0; i < r.mult.size(); ++i)
    r.mult[i] = ka * a.mult[i] + kb * b.mult[i];
  return r;
}

// Positive rescaling so that the first nonzero coefficient has absolute
// value 1; equalities also fix its sign.
void normalize(Row& r) {
  for (const auto& c : r.coeffs) {
    if (c == 0) continue;
    Rational k = 1 / abs(c);
    if (r.relation == Relation::kEqual && c < 0) k = -k;
    scale(r, k);
    return;
  }
}

int strength(Relation rel) { return rel == Relation::kGreater ? 1 : 0; }

// Keeps, per coefficient vector, the most restrictive inequality.
std::vector<Row> dedupe(std::vector<Row> rows) {
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<Row> out;
  for (auto& r : rows) {
    normalize(r);
    if (r.relation == Relation::kEqual) {
      out.push_back(std::move(r));
      continue;
    }
    std::vector<std::string> key;
    key.reserve(r.coeffs.size());
    for (const auto& c : r.coeffs) key.push_back(c.get_str());
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(r));
      continue;
    }
    Row& old = out[it->second];
    if (r.constant < old.constant ||
        (r.constant == old.constant && strength(r.relation) > strength(old.relation)))
      old = std::move(r);
  }
  return out;
}

struct Stage {
  std::size_t var;
  std::optional<Row> pivot_equality;
  std::vector<Row> bounds;  // rows with nonzero coefficient on var
};

Rational eval_rest(const Row& r, const RatVector& x, std::size_t skip) {
  Rational v = r.constant;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != skip && r.coeffs[i] != 0) v += r.coeffs[i] * x[i];
  return v;
}

struct Elimination {
  std::vector<Stage> stages;
  std::vector<Row> residual;  // variable-free rows
};

Elimination eliminate(std::vector<Row> rows, std::size_t variables,
                      const std::vector<std::size_t>& order) {
  Elimination e;
  for (std::size_t var : order) {
    Stage st;
    st.var = var;
    std::size_t eq = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].relation == Relation::kEqual && rows[i].coeffs[var] != 0) {
        eq = i;
        break;
      }
    std::vector<Row> next;
    if (eq != rows.size()) {
      Row piv = rows[eq];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == eq) continue;
        if (rows[i].coeffs[var] == 0) {
          next.push_back(rows[i]);
          continue;
        }
        Rational k = -rows[i].coeffs[var] / piv.coeffs[var];
        Row r = combine(rows[i], Rational(1), piv, k);
        r.relation = rows[i].relation;
        r.coeffs[var] = 0;
        next.push_back(std::move(r));
      }
      st.pivot_equality = std::move(piv);
    } else {
      std::vector<const Row*> pos, neg;
      for (const auto& r : rows) {
        if (r.coeffs[var] > 0)
          pos.push_back(&r);
        else if (r.coeffs[var] < 0)
          neg.push_back(&r);
        else
          next.push_back(r);
      }
      for (const Row* p : pos)
        for (const Row* n : neg) {
          Row r = combine(*p, -n->coeffs[var], *n, p->coeffs[var]);
          r.coeffs[var] = 0;
          r.relation = (p->relation == Relation::kGreater ||
                        n->relation == Relation::kGreater)
                           ? Relation::kGreater
                           : Relation::kGreaterEqual;
          next.push_back(std::move(r));
        }
      for (const Row* p : pos) st.bounds.push_back(*p);
      for (const Row* n : neg) st.bounds.push_back(*n);
    }
    e.stages.push_back(std::move(st));
    // Variable-free rows leave the system immediately.
    rows.clear();
    for (auto& r : dedupe(std::move(next))) {
      bool constant_row = true;
      for (const auto& c : r.coeffs)
        if (c != 0) constant_row = false;
      if (constant_row)
        e.residual.push_back(std::move(r));
      else
        rows.push_back(std::move(r));
    }
  }
  (void)variables;
  for (auto& r : rows) e.residual.push_back(std::move(r));
  return e;
}

std::optional<RatVector> contradiction(const std::vector<Row>& residual) {
  for (const auto& r : residual) {
    if (holds(r.relation, r.constant)) continue;
    RatVector m = r.mult;
    if (r.relation == Relation::kEqual && r.constant > 0)
      for (auto& x : m) x = -x;
    return m;
  }
  return std::nullopt;
}

// Assigns eliminated variables in reverse order.
void back_substitute(const Elimination& e, RatVector& x) {
  for (auto it = e.stages.rbegin(); it != e.stages.rend(); ++it) {
    const Stage& st = *it;
    const std::size_t v = st.var;
    if (st.pivot_equality) {
      const Row& r = *st.pivot_equality;
      x[v] = -eval_rest(r, x, v) / r.coeffs[v];
      continue;
    }
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& r : st.bounds) {
      Rational bound = -eval_rest(r, x, v) / r.coeffs[v];
      bool strict = r.relation == Relation::kGreater;
      if (r.coeffs[v] > 0) {
        if (!lo || bound > *lo || (bound == *lo && strict)) {
          lo = bound;
          lo_strict = strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && strict)) {
          hi = bound;
          hi_strict = strict;
        }
      }
    }
    if (lo && hi) {
      if (*lo == *hi) {
        check_internal(!lo_strict && !hi_strict, "back substitution: empty interval");
        x[v] = *lo;
      } else {
        check_internal(*lo < *hi, "back substitution: inverted interval");
        x[v] = (*lo + *hi) / 2;
      }
    } else if (lo) {
      x[v] = *lo + 1;
    } else if (hi) {
      x[v] = *hi - 1;
    } else {
      x[v] = 0;
    }
  }
}

std::vector<Row> to_rows(const std::vector<LinearConstraint>& constraints,
                         std::size_t variables) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    if (c.coeffs.size() != variables) throw InputError("constraint width mismatch");
    Row r{c.coeffs, c.constant, c.relation, RatVector(constraints.size())};
    r.mult[i] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

}  // namespace

LpCertificate lp_feasible(const std::vector<LinearConstraint>& constraints,
                          std::size_t variables) {
  Elimination e = eliminate(to_rows(constraints, variables), variables,
                            natural_order(variables));
  LpCertificate cert;
  if (auto m = contradiction(e.residual)) {
    cert.multipliers = std::move(*m);
    return cert;
  }
  cert.feasible = true;
  cert.point.assign(variables, Rational(0));
  back_substitute(e, cert.point);
  check_internal(verify_certificate(constraints, variables, cert),
                 "lp point fails its own constraints");
  return cert;
}

bool verify_certificate(const std::vector<LinearConstraint>& constraints,
                        std::size_t variables, const LpCertificate& cert) {
  if (cert.feasible) {
    if (cert.point.size() != variables) return false;
    for (const auto& c : constraints) {
      Rational v = c.constant;
      for (std::size_t i = 0; i < variables; ++i) v += c.coeffs[i] * cert.point[i];
      if (!holds(c.relation, v)) return false;
    }
    return true;
  }
  if (cert.multipliers.size() != constraints.size()) return false;
  RatVector sum(variables);
  Rational constant = 0;
  bool strict_used = false;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& y = cert.multipliers[k];
    const auto& c = constraints[k];
    if (c.relation != Relation::kEqual && y < 0) return false;
    if (c.relation == Relation::kGreater && y > 0) strict_used = true;
    for (std::size_t i = 0; i < variables; ++i) sum[i] += y * c.coeffs[i];
    constant += y * c.constant;
  }
  for (const auto& s : sum)
    if (s != 0) return false;
  return constant < 0 || (constant == 0 && strict_used);
}

std::vector<LinearConstraint> strict_system(const RatMatrix& eqs,
                                            const RatMatrix& strict) {
  const std::size_t n = std::max(eqs.cols(), strict.cols());
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < eqs.rows(); ++i)
    cs.push_back({eqs.row_vector(i), Rational(0), Relation::kEqual});
  for (std::size_t i = 0; i < strict.rows(); ++i)
    cs.push_back({strict.row_vector(i), Rational(0), Relation::kGreater});
  for (auto& c : cs) c.coeffs.resize(n);
  return cs;
}

LpCertificate strict_lp_feasible(const RatMatrix& eqs, const RatMatrix& strict) {
  if (eqs.rows() > 0 && strict.rows() > 0 && eqs.cols() != strict.cols())
    throw InputError("strict_lp_feasible: width mismatch");
  const std::size_t n = std::max(eqs.cols(), strict.cols());
  return lp_feasible(strict_system(eqs, strict), n);
}

LpMinimum lp_minimize(const RatVector& objective,
                      const std::vector<LinearConstraint>& constraints,
                      std::size_t variables) {
  if (objective.size() != variables) throw InputError("objective width mismatch");
  // Variable t = objective . x is appended last and kept.
  std::vector<LinearConstraint> ext;
  for (const auto& c : constraints) {
    auto e = c;
    e.coeffs.push_back(0);
    ext.push_back(std::move(e));
  }
  LinearConstraint def;
  def.coeffs = objective;
  for (auto& c : def.coeffs) c = -c;
  def.coeffs.push_back(1);
  def.relation = Relation::kEqual;
  ext.push_back(def);

  Elimination e = eliminate(to_rows(ext, variables + 1), variables + 1,
                            natural_order(variables));
  LpMinimum out;
  std::vector<Row> on_t, constant_rows;
  for (auto& r : e.residual) {
    if (r.coeffs[variables] != 0)
      on_t.push_back(r);
    else
      constant_rows.push_back(r);
  }
  if (contradiction(constant_rows)) return out;
  std::optional<Rational> lo, hi, fixed;
  bool lo_strict = false, hi_strict = false;
  for (const auto& r : on_t) {
    Rational bound = -r.constant / r.coeffs[variables];
    bool strict = r.relation == Relation::kGreater;
    if (r.relation == Relation::kEqual) {
      if (fixed && *fixed != bound) return out;
      fixed = bound;
    } else if (r.coeffs[variables] > 0) {
      if (!lo || bound > *lo || (bound == *lo && strict)) lo = bound, lo_strict = strict;
    } else {
      if (!hi || bound < *hi || (bound == *hi && strict)) hi = bound, hi_strict = strict;
    }
  }
  auto inside = [&](const Rational& t) {
    if (lo && (t < *lo || (t == *lo && lo_strict))) return false;
    if (hi && (t > *hi || (t == *hi && hi_strict))) return false;
    return true;
  };
  Rational target;
  if (fixed) {
    if (!inside(*fixed)) return out;
    target = *fixed;
    out.attained = true;
  } else {
    if (lo && hi && (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))))
      return out;
    if (!lo) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
    target = *lo;
    out.attained = !lo_strict;
  }
  out.status = LpStatus::kOptimal;
  out.value = target;
  if (out.attained) {
    auto with_t = constraints;
    LinearConstraint pin;
    pin.coeffs = objective;
    pin.constant = -target;
    pin.relation = Relation::kEqual;
    with_t.push_back(pin);
    LpCertificate c = lp_feasible(with_t, variables);
    check_internal(c.feasible, "lp_minimize: optimum not attained");
    out.point = std::move(c.point);
  }
  return out;
}

}  // namespace tropfan
