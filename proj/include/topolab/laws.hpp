#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topolab/context.hpp"
#include "topolab/corpus.hpp"

namespace topolab {

// Every law the checker knows. Star and gamma/psi numbers follow the
// classical property lists for the local function and the local closure
// function; the remaining codes name the characterizations and the
// inclusion/equality theorems between the derived topologies.
enum class LawId {
  star1,  // A ⊆ B implies A* ⊆ B*
  star2,  // A* closed and A* ⊆ Cl(A)
  star3,  // (A*)* ⊆ A*
  star4,  // (A ∪ B)* = A* ∪ B*
  star5,  // (A ∪ I)* = A* = (A \ I)* for ideal members I

  gamma1,  // A* ⊆ Γ(A)
  gamma2,  // Γ(A) closed and Γ(A) ⊆ Cl_θ(A)
  gamma3,  // Γ(A ∪ B) = Γ(A) ∪ Γ(B)
  gamma4,  // Γ(A ∪ I) = Γ(A) = Γ(A \ I)

  psi1,  // ψ(A) open
  psi2,  // ψ(A ∩ B) = ψ(A) ∩ ψ(B)
  psi3,  // ψ(A ∪ I) = ψ(A) = ψ(A \ I)
  psi4,  // θ-open U implies U ⊆ ψ(U)

  sigma_char,        // A ∈ σ iff Cl(N(x)) \ A is small for every x in A
  theta_omega_char,  // A ∈ τ_θω iff ω-closure of N(x) ⊆ A for every x in A

  incl_sigma_omega,         // σ ⊆ τ_ω
  eq_omega_star,            // τ_ω = τ*
  chain_theta_sigma_sigma0, // τ_θ ⊆ σ ⊆ σ₀
  chain_cl,                 // Cl(A) ⊆ Cl_θω(A) ⊆ Cl_θ(A)
  ideal_open_theta_omega,   // open U in the ideal is θω-open
  regular_collapse,         // regular space implies τ_θ = τ
  tau_in_star,              // τ ⊆ τ*
  theta_omega_in_tau,       // τ_θ ⊆ τ_θω ⊆ τ
};

inline constexpr int kLawCount = 23;

const char* law_name(LawId id);                  // "STAR4", ...
LawId law_from_name(const std::string& name);    // throws ParseError
const std::vector<LawId>& all_laws();

// A replayable counterexample to one law on one (space, ideal) instance:
// rebuilding the context from the stored data and rerunning the single law
// reproduces it bit for bit.
struct Violation {
  LawId law;
  Space space;
  Ideal ideal;
  std::optional<PointSet> a;       // primary witness set
  std::optional<PointSet> b;       // secondary witness set
  std::optional<PointSet> member;  // ideal member, for laws quantified over one
  std::optional<PointSet> lhs;     // differing values where both are sets
  std::optional<PointSet> rhs;
  std::string detail;
};

// Local function properties (1)-(5), quantified over all subsets A, B and
// all ideal members. Sweeps 2^n subsets; capped at 16 points.
std::vector<Violation> check_star_laws(const Context& ctx);

// Local closure function properties (1)-(4) and psi properties (1)-(4).
std::vector<Violation> check_gamma_psi_laws(const Context& ctx);

// The per-point membership characterizations of sigma and tau_theta_omega.
std::vector<Violation> check_characterizations(const Context& ctx);

// Inclusion and equality theorems between the derived topologies plus the
// closure chain. These proofs lean on union closure, so the caller skips
// semi-ideal contexts (run_law_suite marks them Skipped).
std::vector<Violation> check_inclusion_theorems(const Context& ctx);

struct LawReport {
  std::vector<Violation> violations;
  std::vector<LawId> skipped;  // laws not applicable on this instance
  int laws_checked = 0;
};

LawReport run_law_suite(const Context& ctx);

// True when rerunning the stored law on the stored instance reproduces the
// stored witness data.
bool replay_violation(const Violation& v);

// Runs the full suite over corpus indices [lo, hi) and concatenates the
// violations in scan order. Pure; ranges can run on separate threads and
// concatenate deterministically.
std::vector<Violation> sweep_laws_range(const Corpus& corpus, std::size_t lo,
                                        std::size_t hi);

}  // namespace topolab
