#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Self-contained verification suites, one per acceptance criterion. Each
// suite builds its own canonical instances (the homogeneous tube over small
// primes and the two-vertex linear quiver) and reports pass/fail with a check
// counter.

namespace detmor {
namespace verify {

struct CriterionResult {
    std::string name;
    bool pass = false;
    bool vacuous = false;  // bound-zero runs that check nothing
    size_t checks = 0;
    std::string detail;
};

// 1: dim Ext^1(X, Y) = dim Hom(Y, X) in the tube, trace-pairing nondegenerate.
CriterionResult verify_serre_dim(size_t length_bound = 5);
// 2: epi <=> right determined by the kernel; mono <=> left determined (op).
CriterionResult verify_epi_dichotomy(size_t length_bound = 3);
// 3: bijection tables in both instances, cross-checked by brute force.
CriterionResult verify_tables();
// 4: every morphism in the quiver instance has a determiner; the zero map in
// the tube has none.
CriterionResult verify_determiner_existence();
// 5: almost split sequences pass the definitional check in both instances.
CriterionResult verify_almost_split();
// 6: Ext^1(f, -) = 0 over the pool only for f = 0 in the tube.
CriterionResult verify_trivial_vanishing(size_t length_bound = 3);
// 7: for determined morphisms, right equivalence <=> equal image submodule.
CriterionResult verify_equivalence_image(size_t pairs = 200, uint64_t seed = 1);
// 8: rank-nullity, rref idempotence, decomposition round trips, determinism.
CriterionResult verify_infrastructure(uint64_t seed = 1);

std::vector<CriterionResult> run_all();
// Suite by name ("serre-dim", "epi-dichotomy", "tables",
// "determiner-existence", "almost-split", "trivial-vanishing",
// "equivalence-image", "infrastructure", "all" handled by the caller).
std::optional<CriterionResult> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace verify
}  // namespace detmor
