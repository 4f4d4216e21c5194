#ifndef PRIMEGRAPH_VERIFY_HPP
#define PRIMEGRAPH_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/graphcore.hpp"
#include "primegraph/groupdata.hpp"

namespace pg::verify {

using u64 = std::uint64_t;

struct PalfyResult {
    bool satisfied = true;
    std::optional<std::array<u64, 3>> violating_triple;
};

/// Palfy's condition: every 3-subset of rho(d) has two primes dividing a
/// common degree. Returns the lexicographically least violating triple
/// when unsatisfied.
PalfyResult check_palfy(const groupdata::DegreeSet& d);

struct InstanceRecord {
    std::string descriptor;
    std::size_t rho_size = 0;
    bool triangle_free = false;
    std::size_t components = 0;
    std::optional<graphcore::FigureA> figure_a;
    bool is_cycle = false;
    bool is_tree = false;
    std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
};

struct Counterexample {
    std::string descriptor;
    std::string reason;
    std::vector<std::string> factorizations;  // audit trail
};

struct VerificationReport {
    std::string check_id;
    std::string parameter_range;
    std::vector<InstanceRecord> instances;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> data_gaps;  // missing bundled entries
    double elapsed_seconds = 0.0;

    bool success() const { return counterexamples.empty() && data_gaps.empty(); }
};

std::string report_to_json(const VerificationReport& r, bool include_timing);
std::string report_to_text(const VerificationReport& r, bool include_timing);

struct ScanConfig {
    unsigned max_f = 24;          // PSL2(2^f) scans
    u64 max_q = 10000;            // odd PSL2(q) scans
    unsigned max_suzuki_exp = 13;  // Suzuki q^2 <= 2^max_suzuki_exp
    u64 max_psl3_q = 100;
};

/// For each f in [2, max_f]: triangle-free iff |pi(2^f +- 1)| <= 2,
/// component structure {2} | pi(2^f-1) | pi(2^f+1), and every
/// triangle-free 5-vertex instance matches Figure A Second with f >= 6.
/// Also re-checks the maximal-index ratio fact for eligible f in range.
VerificationReport scan_psl2_even(unsigned max_f);

/// For each odd prime power q in [7, max_q]: triangle-free iff
/// |pi(q +- 1)| <= 2, |rho| <= 4 when triangle-free, and exactly the two
/// components {p} and pi(q^2 - 1).
VerificationReport scan_psl2_odd(u64 max_q);

/// The families excluded from the triangle-free classification: bundled
/// sporadic/alternating cases and PSL3(4)/PSU3(4) must show a triangle;
/// Suzuki and PSL3 partial data must force one via a >= 3-clique;
/// PSL3(3)/PSU3(3) must be exactly triangles.
VerificationReport verify_excluded_simple_families(const ScanConfig& cfg,
                                                   const groupdata::NamedGroupTable& table);

VerificationReport verify_theorem_a(const ScanConfig& cfg, const groupdata::NamedGroupTable& table);
VerificationReport verify_theorem_b(const ScanConfig& cfg, const groupdata::NamedGroupTable& table);
VerificationReport verify_theorem_c(const ScanConfig& cfg, const groupdata::NamedGroupTable& table);
VerificationReport verify_bipartite_bound(const ScanConfig& cfg,
                                          const groupdata::NamedGroupTable& table);

// ---- classification ------------------------------------------------------

struct ClassificationVerdict {
    enum class Kind { OccursWithWitness, OccursSolvableOnly, ProvenImpossible, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<groupdata::GroupDescriptor> witness;
    std::string citation;
};

std::string verdict_kind_name(ClassificationVerdict::Kind k);

/// Decides whether the given graph can occur as a prime graph, using the
/// verified theorems and the witness catalog. Witnesses are re-verified
/// by rebuilding their prime graph. Rejects partial or > 8-vertex input.
ClassificationVerdict classify(const graphcore::PrimeGraph& g,
                               const groupdata::NamedGroupTable& table);

}  // namespace pg::verify

#endif
