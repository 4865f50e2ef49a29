#include "commulab/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "commulab/symbolic.hpp"

namespace commulab {

namespace {

// Engine representation: terms sorted strictly descending under the active
// order, leading term first, all basis elements monic.
struct ETerm {
  Monomial m;
  Coeff c;
};
using EPoly = std::vector<ETerm>;

EPoly to_engine(const MultiPoly& p, const MonomialOrder& ord) {
  EPoly out;
  out.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) out.push_back({m, c});
  std::sort(out.begin(), out.end(),
            [&](const ETerm& a, const ETerm& b) { return ord.less(b.m, a.m); });
  return out;
}

MultiPoly from_engine(const EPoly& p, const CoeffField& field,
                      const VarListPtr& vars) {
  MultiPoly out(field, vars);
  for (const auto& t : p) out.add_term(t.m, t.c);
  return out;
}

void make_monic(EPoly& p, const CoeffField& field) {
  if (p.empty() || coeff_is_one(p[0].c)) return;
  Coeff inv = coeff_inv(field, p[0].c);
  for (auto& t : p) t.c = coeff_mul(field, t.c, inv);
}

// r = a - c * x^shift * b   (merge of sorted sequences)
EPoly sub_mul_shift(const EPoly& a, const Coeff& c, const Monomial& shift,
                    const EPoly& b, const CoeffField& field,
                    const MonomialOrder& ord) {
  EPoly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      r.push_back(a[i++]);
      continue;
    }
    Monomial bm = monomial_mul(shift, b[j].m);
    if (i == a.size()) {
      Coeff nc = coeff_neg(field, coeff_mul(field, c, b[j].c));
      if (!coeff_is_zero(nc)) r.push_back({std::move(bm), std::move(nc)});
      ++j;
      continue;
    }
    int cmp = ord.compare(a[i].m, bm);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      Coeff nc = coeff_neg(field, coeff_mul(field, c, b[j].c));
      if (!coeff_is_zero(nc)) r.push_back({std::move(bm), std::move(nc)});
      ++j;
    } else {
      Coeff nc = coeff_sub(field, a[i].c, coeff_mul(field, c, b[j].c));
      if (!coeff_is_zero(nc)) r.push_back({a[i].m, std::move(nc)});
      ++i;
      ++j;
    }
  }
  return r;
}

// Full normal form of p against the (monic) reducers.
EPoly reduce_full(EPoly p, const std::vector<EPoly>& reducers,
                  const std::vector<Monomial>& lms, const CoeffField& field,
                  const MonomialOrder& ord,
                  const std::vector<bool>* alive = nullptr) {
  EPoly out;
  while (!p.empty()) {
    bool reduced = false;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (alive && !(*alive)[k]) continue;
      if (!monomial_divides(lms[k], p[0].m)) continue;
      Monomial shift = monomial_div(p[0].m, lms[k]);
      p = sub_mul_shift(p, p[0].c, shift, reducers[k], field, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.push_back(std::move(p[0]));
      p.erase(p.begin());
    }
  }
  return out;
}

struct SPair {
  int i, j;
  Monomial lcm;
  int deg;
};

struct SPairLess {
  MonomialOrder ord;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& g : gens)
    if (!g.is_zero() && g.total_degree() == 0) return true;
  return false;
}

bool GroebnerBasis::contains_in_ideal(const MultiPoly& p) const {
  return normal_form(p, *this).is_zero();
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens,
                         const MonomialOrder& ord,
                         const GroebnerOptions& opts) {
  CoeffField field;
  VarListPtr vars;
  for (const auto& g : gens) {
    field = g.field();
    vars = g.vars();
    break;
  }
  GroebnerBasis result{ord, field, vars, {}};
  if (gens.empty()) return result;
  for (const auto& g : gens) {
    if (!(g.field() == field) || *g.vars() != *vars)
      throw std::invalid_argument("generators from different polynomial rings");
  }

  std::vector<EPoly> basis;
  std::vector<Monomial> lms;
  std::set<SPair, SPairLess> pairs{SPairLess{ord}};

  // Gebauer-Moeller update: prune new and old pairs as h joins the basis.
  auto update_pairs = [&](const EPoly& h, int t) {
    const Monomial& lmh = h[0].m;
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c_set, d_set;
    for (int g = 0; g < t; ++g)
      c_set.push_back({g, monomial_lcm(lms[g], lmh),
                       monomial_coprime(lms[g], lmh)});
    for (std::size_t idx = 0; idx < c_set.size(); ++idx) {
      const Cand& cand = c_set[idx];
      bool keep = cand.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t r = idx + 1; r < c_set.size() && keep; ++r)
          if (monomial_divides(c_set[r].lcm, cand.lcm) &&
              c_set[r].lcm != cand.lcm)
            keep = false;
        for (const auto& d : d_set)
          if (!keep) break;
          else if (monomial_divides(d.lcm, cand.lcm)) keep = false;
      }
      if (keep) d_set.push_back(cand);
    }
    // drop old pairs superseded by h
    for (auto it = pairs.begin(); it != pairs.end();) {
      const SPair& p = *it;
      bool drop = monomial_divides(lmh, p.lcm) &&
                  monomial_lcm(lms[p.i], lmh) != p.lcm &&
                  monomial_lcm(lms[p.j], lmh) != p.lcm;
      it = drop ? pairs.erase(it) : std::next(it);
    }
    for (const auto& d : d_set) {
      if (d.coprime) continue;  // Buchberger's first criterion
      pairs.insert({d.g, t, d.lcm, monomial_degree(d.lcm)});
    }
  };

  // seed the basis with the reduced nonzero inputs, in order
  for (const auto& g : gens) {
    EPoly h = reduce_full(to_engine(g, ord), basis, lms, field, ord);
    if (h.empty()) continue;
    make_monic(h, field);
    update_pairs(h, static_cast<int>(basis.size()));
    lms.push_back(h[0].m);
    basis.push_back(std::move(h));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > opts.max_pairs)
      throw budget_exceeded("S-pair budget exhausted after " +
                            std::to_string(opts.max_pairs) + " pairs");
    SPair p = *pairs.begin();
    pairs.erase(pairs.begin());
    // S-polynomial of monic f, g: shift each to the lcm and subtract.
    const EPoly& f = basis[p.i];
    const EPoly& g = basis[p.j];
    Monomial sf = monomial_div(p.lcm, f[0].m);
    Monomial sg = monomial_div(p.lcm, g[0].m);
    EPoly s;
    s.reserve(f.size());
    for (const auto& t : f) s.push_back({monomial_mul(sf, t.m), t.c});
    s = sub_mul_shift(s, coeff_from_long(field, 1), sg, g, field, ord);
    EPoly h = reduce_full(std::move(s), basis, lms, field, ord);
    if (h.empty()) continue;
    make_monic(h, field);
    if (basis.size() + 1 > opts.max_basis)
      throw budget_exceeded("basis size budget exhausted at " +
                            std::to_string(opts.max_basis));
    update_pairs(h, static_cast<int>(basis.size()));
    lms.push_back(h[0].m);
    basis.push_back(std::move(h));
  }

  // minimalize: keep only elements whose lm no other kept lm divides
  std::vector<bool> alive(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      if (monomial_divides(lms[j], lms[i]) &&
          (lms[j] != lms[i] || j < i))
        alive[i] = false;
    }
  }
  // tail-reduce survivors against each other
  std::vector<EPoly> reduced;
  std::vector<bool> alive2 = alive;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!alive[i]) continue;
    alive2[i] = false;
    EPoly r = reduce_full(basis[i], basis, lms, field, ord, &alive2);
    alive2[i] = true;
    make_monic(r, field);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const EPoly& a, const EPoly& b) {
              return ord.less(b[0].m, a[0].m);
            });
  for (const auto& r : reduced)
    result.gens.push_back(from_engine(r, field, vars));
  return result;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
  if (!(p.field() == gb.field) || (gb.vars && *p.vars() != *gb.vars))
    throw std::invalid_argument("polynomial incompatible with basis");
  std::vector<EPoly> reducers;
  std::vector<Monomial> lms;
  for (const auto& g : gb.gens) {
    reducers.push_back(to_engine(g, gb.order));
    lms.push_back(reducers.back()[0].m);
  }
  EPoly r = reduce_full(to_engine(p, gb.order), reducers, lms, gb.field,
                        gb.order);
  return from_engine(r, p.field(), p.vars());
}

namespace {

int independent_set_max(const std::vector<std::uint64_t>& supports,
                        std::uint64_t allowed, int best_so_far) {
  int avail = __builtin_popcountll(allowed);
  if (avail <= best_so_far) return best_so_far;
  const std::uint64_t* violated = nullptr;
  for (const auto& s : supports) {
    if ((s & ~allowed) == 0) {  // support entirely inside the candidate set
      violated = &s;
      break;
    }
  }
  if (!violated) return avail;
  int best = best_so_far;
  std::uint64_t s = *violated;
  while (s) {
    std::uint64_t bit = s & (~s + 1);
    s ^= bit;
    best = independent_set_max(supports, allowed & ~bit, best);
  }
  return best;
}

}  // namespace

int hilbert_dimension(const GroebnerBasis& gb) {
  const int nv = gb.vars ? static_cast<int>(gb.vars->size()) : 0;
  if (nv > 63) throw std::domain_error("too many variables for dimension");
  if (gb.is_unit_ideal())
    throw std::domain_error("unit ideal has no variety dimension");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.gens) {
    if (g.is_zero()) continue;
    auto [m, c] = g.leading_term(gb.order);
    std::uint64_t s = 0;
    for (int i = 0; i < nv; ++i)
      if (m[i] > 0) s |= (std::uint64_t{1} << i);
    supports.push_back(s);
  }
  // a support containing another is a weaker constraint; drop it
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool redundant = false;
    for (auto t : supports)
      if (t != s && (t & ~s) == 0) {
        redundant = true;
        break;
      }
    if (!redundant &&
        std::find(minimal.begin(), minimal.end(), s) == minimal.end())
      minimal.push_back(s);
  }
  std::uint64_t all = nv == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << nv) - 1);
  return independent_set_max(minimal, all, 0);
}

// ---------------------------------------------------------------------------
// membership over the parameter fraction field

namespace {

Monomial block_part(const Monomial& m, int lo, int hi) {
  Monomial r(m.size(), 0);
  for (int i = lo; i < hi; ++i) r[i] = m[i];
  return r;
}

Monomial param_part(const Monomial& m, int lo, int hi) {
  Monomial r = m;
  for (int i = lo; i < hi; ++i) r[i] = 0;
  return r;
}

// sum of the terms of g whose block part equals mx, with block exponents
// stripped: the K(parameters) coefficient of x^mx
MultiPoly block_coefficient(const MultiPoly& g, const Monomial& mx, int lo,
                            int hi) {
  MultiPoly c(g.field(), g.vars());
  for (const auto& [m, cf] : g.terms())
    if (block_part(m, lo, hi) == mx) c.add_term(param_part(m, lo, hi), cf);
  return c;
}

// leading block monomial of p under degrevlex on the block
std::optional<Monomial> leading_block(const MultiPoly& p, int lo, int hi) {
  if (p.is_zero()) return std::nullopt;
  MonomialOrder drl = MonomialOrder::degrevlex();
  std::optional<Monomial> best;
  for (const auto& [m, cf] : p.terms()) {
    Monomial bp = block_part(m, lo, hi);
    if (!best || drl.less(*best, bp)) best = bp;
  }
  return best;
}

}  // namespace

bool extended_field_membership(const MultiPoly& p, const GroebnerBasis& gb,
                               int block_lo, int block_hi) {
  if (gb.order.kind != MonomialOrder::Kind::BlockDegRevLex ||
      gb.order.block_lo != block_lo || gb.order.block_hi != block_hi)
    throw std::invalid_argument(
        "extended membership needs a basis in the matching block order");
  struct Reducer {
    Monomial mx;         // leading block monomial
    MultiPoly coeff;     // parameter coefficient of x^mx
    const MultiPoly* g;  // the full basis element
  };
  std::vector<Reducer> reducers;
  for (const auto& g : gb.gens) {
    if (g.is_zero()) continue;
    auto [lm, lc] = g.leading_term(gb.order);
    Monomial mx = block_part(lm, block_lo, block_hi);
    reducers.push_back(
        {mx, block_coefficient(g, mx, block_lo, block_hi), &g});
  }
  MultiPoly work = p;
  while (!work.is_zero()) {
    Monomial mxw = *leading_block(work, block_lo, block_hi);
    if (monomial_degree(mxw) == 0) return false;  // nonzero parameter element
    const Reducer* red = nullptr;
    for (const auto& r : reducers)
      if (monomial_divides(r.mx, mxw)) {
        red = &r;
        break;
      }
    if (!red) return false;
    MultiPoly cw = block_coefficient(work, mxw, block_lo, block_hi);
    MultiPoly shift(work.field(), work.vars());
    shift.add_term(monomial_div(mxw, red->mx),
                   coeff_from_long(work.field(), 1));
    // c_g * work - c_w * x^(mxw - mxg) * g cancels the whole x^mxw slice
    work = sub(mul(red->coeff, work), mul(mul(cw, shift), *red->g));
  }
  return true;
}

// ---------------------------------------------------------------------------
// dimension experiments

VarietySystem variety_system_from_name(const std::string& name) {
  if (name == "Y") return VarietySystem::YFiber;
  if (name == "S") return VarietySystem::SFiber;
  if (name == "N") return VarietySystem::NilpotentCone;
  if (name == "V4") return VarietySystem::V4Fiber;
  if (name == "V4W") return VarietySystem::V4CommutingFiber;
  if (name == "W") return VarietySystem::WCommuting;
  throw std::invalid_argument("unknown system '" + name +
                              "' (expected Y, S, N, V4, V4W or W)");
}

std::string variety_system_name(VarietySystem s) {
  switch (s) {
    case VarietySystem::YFiber:
      return "Y";
    case VarietySystem::SFiber:
      return "S";
    case VarietySystem::NilpotentCone:
      return "N";
    case VarietySystem::V4Fiber:
      return "V4";
    case VarietySystem::V4CommutingFiber:
      return "V4W";
    case VarietySystem::WCommuting:
      return "W";
  }
  return "?";
}

CheckReport variety_dimension_experiment(VarietySystem system,
                                         const VarietyDimensionConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  CoeffField field{config.characteristic};
  const int n = config.n;
  PolySystem sys;
  bool fiber_total = false;  // compose with dim of the nilpotent cone
  int cone_n = n;
  switch (system) {
    case VarietySystem::YFiber:
      sys = build_jordan_fiber_system(n, config.alpha, field);
      break;
    case VarietySystem::SFiber:
      sys = build_jordan_fiber_system(n, config.alpha, field);
      fiber_total = true;
      break;
    case VarietySystem::NilpotentCone:
      sys = build_nilpotent_cone_system(n, field);
      break;
    case VarietySystem::V4Fiber:
      sys = build_v4_fiber_system(field);
      fiber_total = true;
      cone_n = 4;
      break;
    case VarietySystem::V4CommutingFiber:
      sys = build_v4_commuting_fiber_system(field);
      fiber_total = true;
      cone_n = 4;
      break;
    case VarietySystem::WCommuting:
      sys = build_commuting_nilpotent_pair_system(n, field);
      break;
  }

  CheckReport report;
  report.check_id = "dim-" + variety_system_name(system);
  report.metric("system", variety_system_name(system));
  report.metric("n", static_cast<std::int64_t>(
                         (system == VarietySystem::V4Fiber ||
                          system == VarietySystem::V4CommutingFiber)
                             ? 4
                             : n));
  report.metric("alpha", static_cast<std::int64_t>(config.alpha));
  report.metric("char", static_cast<std::int64_t>(config.characteristic));
  report.metric("order", config.order.str());
  try {
    GroebnerBasis gb = buchberger(sys.gens, config.order, config.groebner);
    int dim = hilbert_dimension(gb);
    report.status = CheckReport::Status::Pass;
    report.metric("dimension", static_cast<std::int64_t>(dim));
    report.metric("basis_size", static_cast<std::int64_t>(gb.gens.size()));
    if (fiber_total) {
      std::int64_t cone = static_cast<std::int64_t>(cone_n) * cone_n - cone_n;
      report.metric("nilpotent_cone_dimension", cone);
      report.metric("total_dimension", cone + dim);
    }
  } catch (const budget_exceeded& e) {
    report.status = CheckReport::Status::Inconclusive;
    report.detail = std::string("budget: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report;
}

}  // namespace commulab
