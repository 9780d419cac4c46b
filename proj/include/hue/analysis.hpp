// Submodule computation, maximal-submodule formulas, irreducibility
// certification, intertwiner search, classification, Frobenius-kernel
// restriction and the divisibility check.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hue/errors.hpp"
#include "hue/module_rep.hpp"

namespace hue {

/// Smallest subspace containing v and closed under all generator matrices.
Subspace spin(const ModuleRep& rep, const std::vector<FieldElem>& v);
/// Spin of the b-th basis vector.
Subspace spin_basis(const ModuleRep& rep, int b);

struct MaximalSubmodule {
    std::vector<int64_t> indices;  // Verma indices k with v_k in M
    Subspace space;
    MaximalSubmodule(std::vector<int64_t> idx, Subspace s)
        : indices(std::move(idx)), space(std::move(s)) {}
};

/// The maximal submodule M_chi^r(lambda) of Z_chi^r(lambda) as a coordinate
/// subspace, verified closed under all generators, and verified to be the
/// unique maximal submodule by spinning every basis vector outside it.
/// Throws theorem_violation if any verification fails.
MaximalSubmodule maximal_submodule(const ChiForm& chi, const Weight& lambda);

/// Expected dimension of the irreducible quotient:
/// prod_{i<r}(lambda_i + 1) * p for chi != 0, prod_{i<=r}(lambda_i + 1) for chi = 0.
int64_t expected_irreducible_dim(const ChiForm& chi, const Weight& lambda);

/// The irreducible quotient L_chi^r(lambda) = Z / M on the surviving basis
/// vectors. Throws theorem_violation if the dimension misses the formula.
ModuleRep irreducible_quotient(const ChiForm& chi, const Weight& lambda);

enum class IrrVerdict { irreducible, reducible, inconclusive };

struct IrreducibilityCertificate {
    IrrVerdict verdict = IrrVerdict::inconclusive;
    char strategy = '?';  // 'A' joint H-spectra, 'B' coordinate scan, 'C' probe
    bool conclusive = false;
    std::string detail;
};

/// Certified irreducibility test.
/// A: if the H-family is diagonal with pairwise distinct joint eigenvalue
///    tuples, every invariant subspace is coordinate-spanned, so it suffices
///    to spin every basis vector. Conclusive.
/// B: exhaustive scan of coordinate subsets (dim <= 12). Conclusive for a
///    reducible verdict; for irreducible it only rules out coordinate-spanned
///    submodules.
/// C: seeded random spin probes plus the End(M) = K necessary condition.
///    Conclusive only for a reducible verdict.
IrreducibilityCertificate is_irreducible(const ModuleRep& rep, uint64_t seed = 0,
                                         char force_strategy = 0);

struct IntertwinerResult {
    std::vector<Matrix> basis;  // basis of Hom(A, B) as dimB x dimA matrices
    bool isomorphic = false;
};

/// Solution space of T g_A = g_B T over the generator matrices of levels
/// 0..max_level (max_level = r for full module homomorphisms, r-1 for
/// Hom over the r-th Frobenius kernel). Modules must share p and field.
IntertwinerResult find_intertwiners(const ModuleRep& A, const ModuleRep& B, int max_level = -1);

struct IsoClass {
    Weight lambda;               // representative
    int64_t dim = 0;
    std::vector<int> members;    // indices into the weight enumeration
    int64_t dim_n = 0;           // Frobenius-kernel constituent dimension
    int64_t multiplicity = 0;    // number of copies under Di(G_(r))
};

struct Classification {
    ChiForm chi;
    std::vector<Weight> weights;
    std::vector<IsoClass> classes;
};

/// Builds all p^{r+1} irreducible quotients, partitions them into isomorphism
/// classes and checks the expected counts (semisimple: p^{r+1}; nilpotent:
/// p^r (p+1)/2 with the top-coordinate pairing; zero: p^{r+1}).
/// Throws theorem_violation on a count or pairing mismatch.
Classification classify(const ChiForm& chi);

struct RestrictionDecomposition {
    ModuleRep N;               // level-(r-1), chi = 0 constituent
    int64_t multiplicity = 0;  // dim Hom_{Di(G_(r))}(N, L)
    std::vector<int> n_positions;
};

/// Decomposes the irreducible L under the r-th Frobenius kernel: finds the
/// constituent N spanned by the surviving v_k with k < p^r, verifies the
/// translation maps phi_a : v_z -> v_{a p^r + z} are Di(G_(r))-isomorphisms
/// as exact matrix identities, verifies N is the level-(r-1) chi = 0
/// irreducible at the truncated weight, and returns the multiplicity
/// (p for chi != 0, lambda_r + 1 for chi = 0).
/// Throws theorem_violation if any identity fails.
RestrictionDecomposition restrict_and_decompose(const ModuleRep& L, const ChiForm& chi,
                                                const Weight& lambda);

/// dim(G . chi): rank of the coadjoint differential x -> chi([x, .]) at chi,
/// computed from the sl2 structure constants.
int coadjoint_orbit_dim(const ChiForm& chi);

struct DivisibilityReport {
    bool ok = true;
    int orbit_dim = 0;
    std::vector<std::string> lines;
};

/// For every irreducible with chi != 0: p^{dim(G.chi)/2} divides
/// dim Hom_{Di(G_(r))}(N, M), and dim M = dim N * dim Hom.
/// Throws theorem_violation on failure.
DivisibilityReport kw_divisibility(const ChiForm& chi, const Classification& cls);

}  // namespace hue
