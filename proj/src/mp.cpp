#include "padchar/mp.hpp"

#include <sstream>

namespace padchar {

namespace {

Rational depth_sum(const Depth& a, const Depth& b) { return a.value + b.value; }

void require_valid(const DepthFunction& f, const OrbitSet& os, const char* name) {
  const auto problems = validate_function(f, os);
  if (!problems.empty())
    throw ValidationError(std::string(name) + ": " + problems.front());
}

void require_lattice(const TorusLattice& tl) {
  for (const TorusLine& line : tl.lines) {
    if (line.q_line < 2) throw ValidationError("torus line size must be at least 2");
    if (line.e < 1) throw ValidationError("torus line ramification must be positive");
  }
}

long long integral_exponent(const Rational& ex, const char* what) {
  if (!is_integer(ex))
    throw ValidationError(std::string(what) + " has a fractional exponent");
  return to_ll(boost::multiprecision::numerator(ex));
}

}  // namespace

const Depth& DepthFunction::of(const std::string& orbit_id) const {
  auto it = at.find(orbit_id);
  if (it == at.end())
    throw ValidationError("depth function is missing orbit " + orbit_id);
  return it->second;
}

DepthFunction DepthFunction::plusified() const {
  DepthFunction out;
  out.torus_value = torus_value.plusified();
  for (const auto& [id, d] : at) out.at[id] = d.plusified();
  return out;
}

DepthFunction constant_function(const OrbitSet& os, const Depth& torus,
                                const Depth& root) {
  DepthFunction f;
  f.torus_value = torus;
  for (const OrbitInfo& o : os.list) f.at[o.id] = root;
  return f;
}

std::vector<std::string> validate_function(const DepthFunction& f, const OrbitSet& os) {
  std::vector<std::string> out;
  for (const OrbitInfo& o : os.list)
    if (!f.at.count(o.id)) out.push_back("missing orbit " + o.id);
  for (const auto& [id, d] : f.at) {
    (void)d;
    if (!os.has_key(id)) out.push_back("value for unknown orbit " + id);
  }
  return out;
}

bool pm_invariant(const DepthFunction& f, const OrbitSet& os) {
  for (const OrbitInfo& o : os.list)
    if (!(f.of(o.id) == f.of(o.neg_id))) return false;
  return true;
}

TorusLattice TorusLattice::unramified(long long rank, long long q) {
  TorusLattice tl;
  for (long long i = 0; i < rank; ++i) tl.lines.push_back({Rational(0), 1, q});
  return tl;
}

void CardLedger::mul(long long base, long long expo) {
  if (base < 2) throw ValidationError("ledger base must be at least 2");
  if (expo == 0) return;
  auto [it, inserted] = exponents.try_emplace(base, 0);
  it->second += expo;
  if (it->second == 0) exponents.erase(it);
}

CardLedger CardLedger::times(const CardLedger& o) const {
  CardLedger out = *this;
  for (const auto& [base, expo] : o.exponents) out.mul(base, expo);
  return out;
}

CardLedger CardLedger::inverse() const {
  CardLedger out;
  for (const auto& [base, expo] : exponents) out.exponents[base] = -expo;
  return out;
}

long long CardLedger::p_exponent(long long p) const {
  long long total = 0;
  for (const auto& [base, expo] : exponents) {
    long long b = base;
    long long k = 0;
    while (b % p == 0) {
      b /= p;
      ++k;
    }
    if (b != 1)
      throw ValidationError("ledger base " + std::to_string(base) +
                            " is not a power of " + std::to_string(p));
    total += k * expo;
  }
  return total;
}

std::string CardLedger::str() const {
  if (exponents.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [base, expo] : exponents) {
    if (!first) out << " * ";
    out << base << "^" << expo;
    first = false;
  }
  return out.str();
}

CardLedger card_quotient(const ApartmentPoint& pt, const OrbitSet& os,
                         const DepthFunction& f, const DepthFunction& g,
                         const TorusLattice& tl) {
  require_valid(f, os, "f");
  require_valid(g, os, "g");
  require_lattice(tl);
  if (!(f.torus_value <= g.torus_value))
    throw ValidationError("f exceeds g at the zero weight");
  if (!f.torus_value.infinite && g.torus_value.infinite)
    throw ValidationError("the zero weight: g is infinite where f is finite");
  for (const OrbitInfo& o : os.list) {
    if (!(f.of(o.id) <= g.of(o.id)))
      throw ValidationError("f exceeds g on orbit " + o.id);
    if (!f.of(o.id).infinite && g.of(o.id).infinite)
      throw ValidationError("orbit " + o.id + ": g is infinite where f is finite");
  }

  CardLedger out;
  if (!f.torus_value.infinite)
    for (const TorusLine& line : tl.lines)
      out.mul(line.q_line,
              count_lattice_points(line.coset, line.e, f.torus_value, g.torus_value));
  for (const OrbitInfo& o : os.list) {
    const Depth& fo = f.of(o.id);
    if (fo.infinite) continue;
    out.mul(o.q_alpha, count_coset_points(pt, o, fo, g.of(o.id)));
  }
  return out;
}

bool verify_gxf_card(const ApartmentPoint& pt, const OrbitSet& os,
                     const DepthFunction& f, const DepthFunction& g,
                     const TorusLattice& tl, const ResidueField& rf) {
  require_valid(f, os, "f");
  require_valid(g, os, "g");
  require_lattice(tl);
  // the statement is about plain real values; plus markers only enter via f+
  auto plus_free = [](const DepthFunction& h, const char* name) {
    if (h.torus_value.plus)
      throw ValidationError(std::string("hypothesis violated: ") + name +
                            " takes a plus value at the zero weight");
    for (const auto& [id, d] : h.at)
      if (d.plus)
        throw ValidationError(std::string("hypothesis violated: ") + name +
                              " takes a plus value on orbit " + id);
  };
  plus_free(f, "f");
  plus_free(g, "g");
  if (!(f.torus_value <= g.torus_value))
    throw ValidationError("hypothesis violated: f exceeds g at the zero weight");
  if (!f.torus_value.infinite && g.torus_value.infinite)
    throw ValidationError(
        "hypothesis violated: g is infinite where f is finite at the zero weight");
  for (const OrbitInfo& o : os.list) {
    const Depth &fo = f.of(o.id), &go = g.of(o.id);
    if (!(fo <= go))
      throw ValidationError("hypothesis violated: f exceeds g on orbit " + o.id);
    if (fo.infinite != f.of(o.neg_id).infinite)
      throw ValidationError(
          "hypothesis violated: finiteness of f is not negation-symmetric on orbit " +
          o.id);
    if (go.infinite != g.of(o.neg_id).infinite)
      throw ValidationError(
          "hypothesis violated: finiteness of g is not negation-symmetric on orbit " +
          o.id);
    if (!fo.infinite && go.infinite)
      throw ValidationError("hypothesis violated: g is infinite where f is finite on orbit " +
                            o.id);
    if (!fo.infinite && !is_integer(depth_sum(fo, f.of(o.neg_id)) * o.e))
      throw ValidationError("hypothesis violated: f(a) + f(-a) is not in Z_a on orbit " +
                            o.id);
    if (!go.infinite && !is_integer(depth_sum(go, g.of(o.neg_id)) * o.e))
      throw ValidationError("hypothesis violated: g(a) + g(-a) is not in Z_a on orbit " +
                            o.id);
  }

  const CardLedger lhs =
      card_quotient(pt, os, f, g, tl)
          .times(card_quotient(pt, os, f.plusified(), g.plusified(), tl));

  CardLedger rhs;
  if (!f.torus_value.infinite)
    for (const TorusLine& line : tl.lines) {
      rhs.mul(line.q_line, count_lattice_points(line.coset, line.e, f.torus_value,
                                                g.torus_value));
      rhs.mul(line.q_line,
              count_lattice_points(line.coset, line.e, f.torus_value.plusified(),
                                   g.torus_value.plusified()));
    }
  for (const OrbitInfo& o : os.list) {
    const Depth& fo = f.of(o.id);
    if (fo.infinite) continue;
    const Rational s =
        depth_sum(g.of(o.id), g.of(o.neg_id)) - depth_sum(fo, f.of(o.neg_id));
    rhs.mul(rf.q(), integral_exponent(Rational(o.n) * s,
                                      "q^{(g+g)-(f+f)} over an orbit"));
  }
  return lhs.p_exponent(rf.p) == rhs.p_exponent(rf.p);
}

DepthFunction shifted_function(const DepthFunction& f,
                               const std::map<std::string, Rational>& shifts,
                               const OrbitSet& os) {
  for (const auto& [id, r] : shifts) {
    if (!os.has_key(id)) throw ValidationError("shift for unknown orbit " + id);
    if (!is_integer(r * os.by_key(id).e))
      throw ValidationError("shift on orbit " + id + " is not in (1/e)Z");
  }
  DepthFunction out;
  out.torus_value = f.torus_value;
  for (const OrbitInfo& o : os.list) {
    const Depth& fo = f.of(o.id);
    auto it = shifts.find(o.id);
    out.at[o.id] = (it == shifts.end() || fo.infinite) ? fo : fo.shifted(it->second);
  }
  return out;
}

Rational shift_valuation(const DepthFunction& f,
                         const std::map<std::string, Rational>& shifts,
                         const OrbitSet& os) {
  Rational total(0);
  for (const OrbitInfo& o : os.list) {
    if (f.of(o.id).infinite) continue;
    auto it = shifts.find(o.id);
    if (it != shifts.end()) total += Rational(o.n) * it->second;
  }
  return total;
}

DepthFunction dual_function(const DepthFunction& f, const OrbitSet& os) {
  DepthFunction out;
  out.torus_value =
      f.torus_value.infinite ? Depth::infinity() : depth_tilde(f.torus_value);
  for (const OrbitInfo& o : os.list) {
    const Depth& src = f.of(o.neg_id);
    out.at[o.id] = src.infinite ? Depth::infinity() : depth_tilde(src);
  }
  return out;
}

namespace {

// 0+ on centralizer orbits, (r - d)/2 elsewhere; infinity off `keep`.
DepthFunction bracket_cutoff(const SignContext& ctx, const ElementProfile& head,
                             const std::set<std::string>& root_h,
                             const std::set<std::string>& keep) {
  DepthFunction f;
  f.torus_value = Depth::of_plus(Rational(0));
  for (const OrbitInfo& o : ctx.os.list) {
    if (!keep.count(o.id))
      f.at[o.id] = Depth::infinity();
    else if (root_h.count(o.id))
      f.at[o.id] = Depth::of_plus(Rational(0));
    else
      f.at[o.id] = Depth::of((ctx.r - head.at(o.id).d.value) / 2);
  }
  return f;
}

DepthFunction half_cutoff(const SignContext& ctx, const std::set<std::string>& keep) {
  DepthFunction g;
  g.torus_value = Depth::of_plus(Rational(0));
  for (const OrbitInfo& o : ctx.os.list)
    g.at[o.id] = keep.count(o.id) ? Depth::of(ctx.r / 2) : Depth::infinity();
  return g;
}

// [bracket : T_{0+} G_{x,r/2}] [bracket+ : T_{0+} G_{x,(r/2)+}] over the
// orbits in `keep` (the whole group or a Levi).
CardLedger bracket_index(const SignContext& ctx, const TorusLattice& tl,
                         const ElementProfile& head,
                         const std::set<std::string>& root_h,
                         const std::set<std::string>& keep) {
  const DepthFunction f = bracket_cutoff(ctx, head, root_h, keep);
  const DepthFunction g = half_cutoff(ctx, keep);
  return card_quotient(ctx.x, ctx.os, f, g, tl)
      .times(card_quotient(ctx.x, ctx.os, f.plusified(), g.plusified(), tl));
}

void require_index_inputs(const SignContext& ctx) {
  if (!(Rational(0) < ctx.r))
    throw ValidationError("index products need a positive depth");
  if (!ctx.gamma.bounded)
    throw ValidationError("index products need a bounded element");
}

void require_match(const IndexProduct& out, long long p) {
  if (out.lhs.p_exponent(p) != out.rhs.p_exponent(p))
    throw ValidationError("index product mismatch: counted " + out.lhs.str() +
                          ", closed form " + out.rhs.str());
}

}  // namespace

IndexProduct index_product_const(const SignContext& ctx, const TorusLattice& tl) {
  require_index_inputs(ctx);
  const ElementProfile head = head_profile({ctx.r, ctx.gamma}, ctx.os, ctx.rf);
  const std::set<std::string> root_h = centralizer_orbits({ctx.r, ctx.gamma}, ctx.os);
  std::set<std::string> all;
  for (const OrbitInfo& o : ctx.os.list) all.insert(o.id);

  IndexProduct out;
  out.lhs = bracket_index(ctx, tl, head, root_h, all);

  const Depth zero = Depth::of(Rational(0));
  const Depth zero_plus = Depth::of_plus(Rational(0));
  CardLedger rhs;
  for (const TorusLine& line : tl.lines) {
    const long long c = count_lattice_points(line.coset, line.e, zero, zero_plus);
    rhs.mul(line.q_line, c);   // |t_{0:0+}|
    rhs.mul(line.q_line, -c);  // cancelled by the torus part of |h_{x,0:0+}|^{-1}
  }
  Rational h_roots(0);
  for (const OrbitInfo& o : ctx.os.list) {
    if (!root_h.count(o.id)) continue;
    rhs.mul(o.q_alpha, -count_coset_points(ctx.x, o, zero, zero_plus));
    h_roots += Rational(o.n) * ctx.r;
  }
  rhs.mul(ctx.rf.q(), integral_exponent(h_roots, "q^r over the centralizer roots"));
  rhs.mul(ctx.rf.q(),
          integral_exponent(disc_val_gamma(head, ctx.os), "discriminant valuation"));
  out.rhs = rhs;
  require_match(out, ctx.rf.p);
  return out;
}

IndexProduct index_product_cor(const SignContext& ctx, const TorusLattice& tl) {
  require_index_inputs(ctx);
  const ElementProfile head = head_profile({ctx.r, ctx.gamma}, ctx.os, ctx.rf);
  const std::set<std::string> root_h = centralizer_orbits({ctx.r, ctx.gamma}, ctx.os);
  std::set<std::string> all;
  for (const OrbitInfo& o : ctx.os.list) all.insert(o.id);

  IndexProduct out;
  out.lhs = bracket_index(ctx, tl, head, root_h, all)
                .times(bracket_index(ctx, tl, head, root_h, ctx.cov.levi_orbits)
                           .inverse());

  const Depth zero = Depth::of(Rational(0));
  const Depth zero_plus = Depth::of_plus(Rational(0));
  CardLedger rhs;
  Rational h_roots_off_levi(0);  // |D_H(X*)| = q^{r #(Root_H \ Root_H')}
  Rational disc_off_levi(0);     // |D_G|^{-1} |D_G'| = q^{v - v'}
  for (const OrbitInfo& o : ctx.os.list) {
    if (ctx.cov.in_levi(o.id)) continue;
    if (root_h.count(o.id)) {
      rhs.mul(o.q_alpha, -count_coset_points(ctx.x, o, zero, zero_plus));
      h_roots_off_levi += Rational(o.n) * ctx.r;
    }
    const OrbitValue& val = head.at(o.id);
    if (!val.d.infinite) disc_off_levi += Rational(o.n) * val.d.value;
  }
  rhs.mul(ctx.rf.q(),
          integral_exponent(h_roots_off_levi, "q^r over the centralizer roots"));
  rhs.mul(ctx.rf.q(), integral_exponent(disc_off_levi, "discriminant valuation"));
  out.rhs = rhs;
  require_match(out, ctx.rf.p);
  return out;
}

}  // namespace padchar
