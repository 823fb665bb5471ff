#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cperm/core.hpp"
#include "cperm/ferrers.hpp"

// Theorem harness.  Every identity the library claims is an executable check
// against an independent oracle: Cayley-graph BFS for lengths, the comb-graph
// simulation for the sorting index, filter enumeration for restricted
// subgroups, and exact polynomial comparison for generating functions.

namespace cperm {

enum class TheoremId {
    ell_dist,
    sor_dist,
    main_a,
    main_b,
    cor_gf_restricted,
    cyc0_dist,
    ellprime_dist,
    phi_pointwise,
    phi_ferrers,
    stirling_equi,
    acode_ell,
    acode_stats,
    bcode_sor,
    bcode_stats,
    sor_graph_oracle_id,
    length_bfs,
    reflength_bfs,
    d_psi_pointwise,
    d_main,
    d_gf,
    d_cor_gf,
    d_ellprime_dist,
    d_ccode_stats,
    d_dcode_stats,
    d_length_bfs,
};

// Kebab-case wire names ("main-a", "d-psi-pointwise", ...).  The vocabulary
// is closed; unknown names are rejected.
std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct CheckOptions {
    long long enum_cap = kDefaultEnumCap;
    long long bfs_cap = 100'000;
    int jobs = 1;
    // Deliberately corrupts the sorting statistics (adds 1 to sor and sor_D of
    // the identity) so the harness can prove it detects a broken
    // implementation.  Checks that depend on them must then fail.
    bool negative_control = false;
};

struct Report {
    TheoremId theorem = TheoremId::ell_dist;
    int r = 1;
    int n = 0;
    std::optional<std::vector<int>> f;  // empty when the claim has no bound
    bool all_ferrers = false;
    bool pass = false;
    long long checked = 0;
    long long elapsed_ms = 0;
    std::optional<std::string> counterexample;

    std::string to_json() const;
    std::string to_text() const;
};

// Runs one claim on one parameter point.  With all_f set, loops over every
// Ferrers bound of size n and aggregates into a single report (the
// counterexample then names the offending bound).  Errors (unknown id,
// cap exceeded, invalid parameters) surface as exceptions, not failed reports.
Report check(TheoremId id, int r, int n, const std::optional<FerrersBound>& f,
             bool all_f, const CheckOptions& opts = {});

// The default exhaustive grid for one claim: r <= 3, n <= 4 and all bounds
// where a bound applies; BFS-backed claims stop at n <= 3 (coxeter gensets
// for G) or n <= 4 (type D); the type D histogram corollary runs to n = 5.
std::vector<Report> check_default_grid(TheoremId id, const CheckOptions& opts = {});

// Cayley-graph oracles ------------------------------------------------------

enum class GenSet { coxeter_g, reflections_t, coxeter_d };

std::string genset_name(GenSet g);
GenSet genset_from_name(const std::string& name);

// Exact geodesic distances from the identity under right multiplication by
// the generating set.  coxeter_d requires r = 2 and explores only the
// even-signed subgroup.
std::map<ColoredPermutation, int> bfs_lengths(GenSet genset, int r, int n,
                                              long long bfs_cap = 100'000);

// Simulates the comb-graph sorting procedure: for j = n down to 1 locate the
// letter j, add its network distance to slot j, and apply the corresponding
// transposition.  Per-letter distances (in that order) are appended to
// *step_distances when given.  The total equals the sorting index.
long long sor_graph_oracle(const ColoredPermutation& pi,
                           std::vector<int>* step_distances = nullptr);

}  // namespace cperm
