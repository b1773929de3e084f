#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zcpn/homomorphisms.hpp"
#include "zcpn/independence.hpp"
#include "zcpn/units.hpp"

namespace zcpn {

/// The pipeline hit data outside the expected pattern; carries diagnostics
/// and is never silently swallowed.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Free-part generators of U_1(Z C_{p^n}) used as the input of the next
/// level: symmetric units for odd p, units congruent to 1 mod the squared
/// augmentation ideal for p = 2.
struct LevelTable {
    PrimePowerCtx ctx;
    std::vector<GroupRingElem> gens;
    std::string source;  // "paper-base-case" or "computed-previous-level"
};

struct ImageBasis {
    FpSubgroup subgroup;   // echelonized image of the table under f1
    Int size = 1;          // |Im(f1)| restricted to the table span
    Certificate cert;      // leading-term independence of the basis
};

/// Generators of N = ker(f1) within the span of the table, as explicit words
/// in the table generators.  When the image is elementary abelian the words
/// are exactly the p-th powers u_i^p; otherwise the Hermite basis of the
/// exponent-kernel lattice generalizes them.
struct KernelGens {
    std::vector<GroupRingElem> words;          // elements of Z C_{p^{n-1}}, == 1 mod p
    std::vector<std::vector<Int>> exponents;   // HNF rows over the table generators
    bool plain_powers = false;                 // words are exactly u_i^p
    Certificate index_cert;                    // |U_* : N| vs |Im(f1)|
};

struct AssemblyResult {
    PrimePowerCtx ctx;
    std::vector<GroupRingElem> hoechsmann;       // theta_i, i = 1..kappa
    std::vector<GroupRingElem> hoechsmann_sym;   // g^{-s_i} theta_i
    std::vector<long> sym_shift;                 // the s_i
    std::vector<GroupRingElem> kernel;           // lifted w_i, pi1(w_i) = 1
    KernelGens kernel_construction;
    Certificate h_rank_cert;                     // log-rank of the pi1 images
    Certificate hypothesis_cert;
    long total_rank = 0;
    std::vector<std::string> assumptions;
};

bool in_scope(long p, long n);
/// The composite sweep cases: {9, 27, 81, 25, 49, 8, 16, 32, 64, 128}.
std::vector<std::pair<long, long>> sweep_cases();

/// Images of the table generators under f1, echelonized into an independent
/// basis with pairwise distinct p-free leading parts (multiplying pairs as
/// needed).  |Im(f1)| is the product of the basis orders.
ImageBasis image_basis(const LevelTable& table);

/// The kernel generators N = ker(f1) of one level together with the exact
/// index certification p^{|table|} == |Im(f1)| == [Z^k : K].
KernelGens kernel_gens_mod_p(const LevelTable& table, const ImageBasis& ib);

/// Lift u == 1 mod p from Z C_{p^{n-1}} to the kernel element
/// w = 1 + sum_j a_j g^j P of Z C_{p^n}, a_j = (coeff_j(u) - [j=0])/p.
KernelElem lift_to_integral_kernel(const GroupRingElem& u);

/// Memoizing store for per-case tables and assemblies, optionally persisted
/// as JSON files under a cases directory (one writer per case file).
class CaseStore {
  public:
    CaseStore() = default;
    explicit CaseStore(std::filesystem::path cases_dir) : dir_(std::move(cases_dir)) {}

    const LevelTable& table(long p, long n);
    const AssemblyResult& assembly(long p, long n);

    /// Writes the assembly (and its table) for one case to the cases
    /// directory; returns the file path.
    std::filesystem::path persist(long p, long n);

    std::optional<long> t_override;
    long log_precision = 128;

  private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::pair<long, long>, LevelTable> tables_;
    std::map<std::pair<long, long>, AssemblyResult> assemblies_;
};

/// The section-5 hypothesis verification for one case: lambda and the element
/// e = 1 - (-1)^p lambda x^{p^{n-1}-1} must be multiplicatively independent
/// of the image basis of the level below.  When the level below has no free
/// generators the kernel is trivial by rank count and the verdict is a
/// vacuous "holds".
Certificate hypothesis_check(CaseStore& store, long p, long n);

/// Full generator description of U(Z C_{p^n}): torsion +-C_{p^n}, the
/// Hoechsmann part, and the lifted kernel part, with every member certified
/// and the total rank reconciled against the Higman formula.
AssemblyResult assemble(CaseStore& store, long p, long n);

}  // namespace zcpn
