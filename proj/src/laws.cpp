#include "topolab/laws.hpp"

#include <algorithm>

#include "topolab/errors.hpp"

namespace topolab {

namespace {

struct LawNameRow {
  LawId id;
  const char* name;
};

constexpr LawNameRow kLawNames[] = {
    {LawId::star1, "STAR1"},
    {LawId::star2, "STAR2"},
    {LawId::star3, "STAR3"},
    {LawId::star4, "STAR4"},
    {LawId::star5, "STAR5"},
    {LawId::gamma1, "GAMMA1"},
    {LawId::gamma2, "GAMMA2"},
    {LawId::gamma3, "GAMMA3"},
    {LawId::gamma4, "GAMMA4"},
    {LawId::psi1, "PSI1"},
    {LawId::psi2, "PSI2"},
    {LawId::psi3, "PSI3"},
    {LawId::psi4, "PSI4"},
    {LawId::sigma_char, "SIGMA_CHAR"},
    {LawId::theta_omega_char, "THETA_OMEGA_CHAR"},
    {LawId::incl_sigma_omega, "INCL_SIGMA_OMEGA"},
    {LawId::eq_omega_star, "EQ_OMEGA_STAR"},
    {LawId::chain_theta_sigma_sigma0, "CHAIN_THETA_SIGMA_SIGMA0"},
    {LawId::chain_cl, "CHAIN_CL"},
    {LawId::ideal_open_theta_omega, "IDEAL_OPEN_THETA_OMEGA"},
    {LawId::regular_collapse, "REGULAR_COLLAPSE"},
    {LawId::tau_in_star, "TAU_IN_STAR"},
    {LawId::theta_omega_in_tau, "THETA_OMEGA_IN_TAU"},
};

// Per-context evaluation tables: every operator value for every subset,
// indexed by bit pattern. With the 16-point sweep cap these stay small.
struct Tables {
  int n = 0;
  std::uint64_t subsets = 0;
  PointSet universe;
  std::vector<PointSet> cl, star, gamma, psi, cl_theta, cl_theta_omega;

  explicit Tables(const Context& ctx) {
    n = ctx.points();
    if (n > 16) {
      throw CapacityExceeded("law checking sweeps all subsets, capped at 16 points");
    }
    subsets = std::uint64_t{1} << n;
    universe = ctx.universe();
    cl.resize(subsets);
    star.resize(subsets);
    gamma.resize(subsets);
    psi.resize(subsets);
    cl_theta.resize(subsets);
    cl_theta_omega.resize(subsets);
    for (std::uint64_t raw = 0; raw < subsets; ++raw) {
      const PointSet a{raw};
      cl[raw] = ctx.space().closure(a);
      star[raw] = ctx.local_star(a);
      gamma[raw] = ctx.gamma(a);
      psi[raw] = ctx.psi_gamma(a);
      cl_theta[raw] = ctx.theta_closure(a);
      cl_theta_omega[raw] = ctx.theta_omega_closure(a);
    }
  }

  PointSet at(const std::vector<PointSet>& t, PointSet s) const {
    return t[s.bits()];
  }
};

class Emitter {
 public:
  Emitter(const Context& ctx, std::vector<Violation>& out)
      : ctx_(ctx), out_(out) {}

  void emit(LawId law, std::optional<PointSet> a, std::optional<PointSet> b,
            std::optional<PointSet> member, std::optional<PointSet> lhs,
            std::optional<PointSet> rhs, std::string detail) {
    out_.push_back(Violation{law, ctx_.space(), ctx_.ideal(), a, b, member,
                             lhs, rhs, std::move(detail)});
  }

 private:
  const Context& ctx_;
  std::vector<Violation>& out_;
};

}  // namespace

const char* law_name(LawId id) {
  for (const auto& row : kLawNames) {
    if (row.id == id) return row.name;
  }
  return "?";
}

LawId law_from_name(const std::string& name) {
  for (const auto& row : kLawNames) {
    if (name == row.name) return row.id;
  }
  throw ParseError("unknown law name '" + name + "'");
}

const std::vector<LawId>& all_laws() {
  static const std::vector<LawId> laws = [] {
    std::vector<LawId> v;
    for (const auto& row : kLawNames) v.push_back(row.id);
    return v;
  }();
  return laws;
}

std::vector<Violation> check_star_laws(const Context& ctx) {
  std::vector<Violation> out;
  Emitter emit{ctx, out};
  const Tables t{ctx};
  const SetFamily members = ctx.ideal().members();

  for (std::uint64_t ra = 0; ra < t.subsets; ++ra) {
    const PointSet a{ra};
    const PointSet sa = t.star[ra];

    if (t.at(t.cl, sa) != sa) {
      emit.emit(LawId::star2, a, {}, {}, t.at(t.cl, sa), sa,
                "A* is not closed");
    }
    if (!sa.subset_of(t.cl[ra])) {
      emit.emit(LawId::star2, a, {}, {}, sa, t.cl[ra], "A* exceeds Cl(A)");
    }
    if (!t.at(t.star, sa).subset_of(sa)) {
      emit.emit(LawId::star3, a, {}, {}, t.at(t.star, sa), sa,
                "(A*)* exceeds A*");
    }

    for (std::uint64_t rb = 0; rb < t.subsets; ++rb) {
      const PointSet b{rb};
      if (a.subset_of(b) && !sa.subset_of(t.star[rb])) {
        emit.emit(LawId::star1, a, b, {}, sa, t.star[rb],
                  "A ⊆ B but A* exceeds B*");
      }
      if (ra < rb) {
        const PointSet lhs = t.at(t.star, a | b);
        const PointSet rhs = sa | t.star[rb];
        if (lhs != rhs) {
          emit.emit(LawId::star4, a, b, {}, lhs, rhs,
                    "(A ∪ B)* differs from A* ∪ B*");
        }
      }
    }

    for (const PointSet& i : members) {
      const PointSet with = t.at(t.star, a | i);
      const PointSet without = t.at(t.star, a.minus(i));
      if (with != sa) {
        emit.emit(LawId::star5, a, {}, i, with, sa,
                  "(A ∪ I)* differs from A*");
      }
      if (without != sa) {
        emit.emit(LawId::star5, a, {}, i, without, sa,
                  "(A \\ I)* differs from A*");
      }
    }
  }
  return out;
}

std::vector<Violation> check_gamma_psi_laws(const Context& ctx) {
  std::vector<Violation> out;
  Emitter emit{ctx, out};
  const Tables t{ctx};
  const SetFamily members = ctx.ideal().members();

  for (std::uint64_t ra = 0; ra < t.subsets; ++ra) {
    const PointSet a{ra};
    const PointSet ga = t.gamma[ra];
    const PointSet pa = t.psi[ra];

    if (!t.star[ra].subset_of(ga)) {
      emit.emit(LawId::gamma1, a, {}, {}, t.star[ra], ga, "A* exceeds Γ(A)");
    }
    if (t.at(t.cl, ga) != ga) {
      emit.emit(LawId::gamma2, a, {}, {}, t.at(t.cl, ga), ga,
                "Γ(A) is not closed");
    }
    if (!ga.subset_of(t.cl_theta[ra])) {
      emit.emit(LawId::gamma2, a, {}, {}, ga, t.cl_theta[ra],
                "Γ(A) exceeds Cl_θ(A)");
    }
    if (ctx.space().interior(pa) != pa) {
      emit.emit(LawId::psi1, a, {}, {}, ctx.space().interior(pa), pa,
                "ψ(A) is not open");
    }

    for (std::uint64_t rb = ra + 1; rb < t.subsets; ++rb) {
      const PointSet b{rb};
      const PointSet g_union = t.at(t.gamma, a | b);
      if (g_union != (ga | t.gamma[rb])) {
        emit.emit(LawId::gamma3, a, b, {}, g_union, ga | t.gamma[rb],
                  "Γ(A ∪ B) differs from Γ(A) ∪ Γ(B)");
      }
      const PointSet p_inter = t.at(t.psi, a & b);
      if (p_inter != (pa & t.psi[rb])) {
        emit.emit(LawId::psi2, a, b, {}, p_inter, pa & t.psi[rb],
                  "ψ(A ∩ B) differs from ψ(A) ∩ ψ(B)");
      }
    }

    for (const PointSet& i : members) {
      if (t.at(t.gamma, a | i) != ga) {
        emit.emit(LawId::gamma4, a, {}, i, t.at(t.gamma, a | i), ga,
                  "Γ(A ∪ I) differs from Γ(A)");
      }
      if (t.at(t.gamma, a.minus(i)) != ga) {
        emit.emit(LawId::gamma4, a, {}, i, t.at(t.gamma, a.minus(i)), ga,
                  "Γ(A \\ I) differs from Γ(A)");
      }
      if (t.at(t.psi, a | i) != pa) {
        emit.emit(LawId::psi3, a, {}, i, t.at(t.psi, a | i), pa,
                  "ψ(A ∪ I) differs from ψ(A)");
      }
      if (t.at(t.psi, a.minus(i)) != pa) {
        emit.emit(LawId::psi3, a, {}, i, t.at(t.psi, a.minus(i)), pa,
                  "ψ(A \\ I) differs from ψ(A)");
      }
    }
  }

  // psi property (4) ranges over theta-open sets only.
  for (const PointSet& u : ctx.family(Slot::tau_theta)) {
    if (!u.subset_of(t.at(t.psi, u))) {
      emit.emit(LawId::psi4, u, {}, {}, u, t.at(t.psi, u),
                "θ-open U not inside ψ(U)");
    }
  }
  return out;
}

std::vector<Violation> check_characterizations(const Context& ctx) {
  std::vector<Violation> out;
  Emitter emit{ctx, out};
  if (ctx.points() > 16) {
    throw CapacityExceeded("law checking sweeps all subsets, capped at 16 points");
  }
  const std::uint64_t subsets = std::uint64_t{1} << ctx.points();
  const SetFamily sigma = ctx.family(Slot::sigma);
  const SetFamily theta_omega = ctx.family(Slot::tau_theta_omega);

  for (std::uint64_t ra = 0; ra < subsets; ++ra) {
    const PointSet a{ra};

    bool sigma_cond = true;
    a.for_each([&](int x) {
      if (!ctx.ideal().contains(ctx.closure_of_nbhd(x).minus(a))) {
        sigma_cond = false;
      }
    });
    if (sigma.contains(a) != sigma_cond) {
      emit.emit(LawId::sigma_char, a, {}, {}, {}, {},
                sigma_cond ? "characterization admits A but σ lacks it"
                           : "A ∈ σ but some Cl(N(x)) \\ A is not small");
    }

    bool tw_cond = true;
    a.for_each([&](int x) {
      if (!ctx.omega_closure(ctx.space().minimal_nbhd(x)).subset_of(a)) {
        tw_cond = false;
      }
    });
    if (theta_omega.contains(a) != tw_cond) {
      emit.emit(LawId::theta_omega_char, a, {}, {}, {}, {},
                tw_cond ? "characterization admits A but τ_θω lacks it"
                        : "A ∈ τ_θω but some ω-closure of N(x) escapes A");
    }
  }
  return out;
}

std::vector<Violation> check_inclusion_theorems(const Context& ctx) {
  std::vector<Violation> out;
  Emitter emit{ctx, out};
  const Tables t{ctx};
  const DerivedFamilies fams = ctx.derive_families();

  auto family_included = [&](Slot lo, Slot hi, LawId law, const char* text) {
    if (auto missing = fams[lo].first_not_in(fams[hi])) {
      emit.emit(law, *missing, {}, {}, {}, {}, text);
    }
  };

  family_included(Slot::sigma, Slot::tau_omega, LawId::incl_sigma_omega,
                  "σ has a set τ_ω lacks");
  family_included(Slot::tau_omega, Slot::tau_star, LawId::eq_omega_star,
                  "τ_ω has a set τ* lacks");
  family_included(Slot::tau_star, Slot::tau_omega, LawId::eq_omega_star,
                  "τ* has a set τ_ω lacks");
  family_included(Slot::tau_theta, Slot::sigma,
                  LawId::chain_theta_sigma_sigma0, "τ_θ has a set σ lacks");
  family_included(Slot::sigma, Slot::sigma0, LawId::chain_theta_sigma_sigma0,
                  "σ has a set σ₀ lacks");
  family_included(Slot::tau, Slot::tau_star, LawId::tau_in_star,
                  "τ has a set τ* lacks");
  // θ-closed sets are θω-closed and θω-closed sets are closed; stated on
  // the open families, which carries identical content one complement away.
  family_included(Slot::tau_theta, Slot::tau_theta_omega,
                  LawId::theta_omega_in_tau, "τ_θ has a set τ_θω lacks");
  family_included(Slot::tau_theta_omega, Slot::tau,
                  LawId::theta_omega_in_tau, "τ_θω has a set τ lacks");

  for (std::uint64_t ra = 0; ra < t.subsets; ++ra) {
    const PointSet a{ra};
    if (!t.cl[ra].subset_of(t.cl_theta_omega[ra])) {
      emit.emit(LawId::chain_cl, a, {}, {}, t.cl[ra], t.cl_theta_omega[ra],
                "Cl(A) exceeds Cl_θω(A)");
    }
    if (!t.cl_theta_omega[ra].subset_of(t.cl_theta[ra])) {
      emit.emit(LawId::chain_cl, a, {}, {}, t.cl_theta_omega[ra],
                t.cl_theta[ra], "Cl_θω(A) exceeds Cl_θ(A)");
    }
  }

  for (const PointSet& u : ctx.space().opens()) {
    if (ctx.ideal().contains(u) && !fams[Slot::tau_theta_omega].contains(u)) {
      emit.emit(LawId::ideal_open_theta_omega, u, {}, {}, {}, {},
                "open set inside the ideal is not θω-open");
    }
  }

  if (ctx.space().is_regular()) {
    if (auto missing = fams[Slot::tau].first_not_in(fams[Slot::tau_theta])) {
      emit.emit(LawId::regular_collapse, *missing, {}, {}, {}, {},
                "regular space with an open set that is not θ-open");
    }
  }
  return out;
}

LawReport run_law_suite(const Context& ctx) {
  LawReport report;
  auto absorb = [&](std::vector<Violation> v) {
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(v.begin()),
                             std::make_move_iterator(v.end()));
  };
  absorb(check_star_laws(ctx));
  absorb(check_gamma_psi_laws(ctx));
  absorb(check_characterizations(ctx));
  if (ctx.ideal().is_union_closed()) {
    absorb(check_inclusion_theorems(ctx));
    report.laws_checked = kLawCount;
  } else {
    report.skipped = {LawId::incl_sigma_omega,
                      LawId::eq_omega_star,
                      LawId::chain_theta_sigma_sigma0,
                      LawId::chain_cl,
                      LawId::ideal_open_theta_omega,
                      LawId::regular_collapse,
                      LawId::tau_in_star,
                      LawId::theta_omega_in_tau};
    report.laws_checked = kLawCount - static_cast<int>(report.skipped.size());
  }
  return report;
}

namespace {

std::vector<Violation> rerun_owner(const Context& ctx, LawId law) {
  switch (law) {
    case LawId::star1:
    case LawId::star2:
    case LawId::star3:
    case LawId::star4:
    case LawId::star5:
      return check_star_laws(ctx);
    case LawId::gamma1:
    case LawId::gamma2:
    case LawId::gamma3:
    case LawId::gamma4:
    case LawId::psi1:
    case LawId::psi2:
    case LawId::psi3:
    case LawId::psi4:
      return check_gamma_psi_laws(ctx);
    case LawId::sigma_char:
    case LawId::theta_omega_char:
      return check_characterizations(ctx);
    default:
      return check_inclusion_theorems(ctx);
  }
}

}  // namespace

std::vector<Violation> sweep_laws_range(const Corpus& corpus, std::size_t lo,
                                        std::size_t hi) {
  std::vector<Violation> out;
  for (std::size_t i = lo; i < hi; ++i) {
    const Corpus::Instance inst = corpus.instance(i);
    const Context ctx{inst.space, inst.ideal};
    LawReport report = run_law_suite(ctx);
    out.insert(out.end(),
               std::make_move_iterator(report.violations.begin()),
               std::make_move_iterator(report.violations.end()));
  }
  return out;
}

bool replay_violation(const Violation& v) {
  try {
    const Context ctx{v.space, v.ideal};
    for (const Violation& found : rerun_owner(ctx, v.law)) {
      if (found.law == v.law && found.a == v.a && found.b == v.b &&
          found.member == v.member && found.lhs == v.lhs &&
          found.rhs == v.rhs && found.detail == v.detail) {
        return true;
      }
    }
    return false;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace topolab
