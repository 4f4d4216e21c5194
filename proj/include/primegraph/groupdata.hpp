#ifndef PRIMEGRAPH_GROUPDATA_HPP
#define PRIMEGRAPH_GROUPDATA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "primegraph/numtheory.hpp"

namespace pg::groupdata {

using u64 = std::uint64_t;

/// cd(G): sorted, duplicate-free, always contains the principal degree 1.
struct DegreeSet {
    std::vector<u64> degrees;

    bool operator==(const DegreeSet&) const = default;
};

/// Validates and normalizes a list of degrees into a DegreeSet.
DegreeSet make_degree_set(std::vector<u64> degrees);

// ---- group descriptors ------------------------------------------------

struct Psl2 {
    u64 q;  // prime power >= 4; q = 5 is normalized to 4 (PSL2(4) = PSL2(5))
};

struct Named {
    std::string id;
};

struct SuzukiPartial {
    u64 q_squared;  // 2^(2m+1), m >= 1
};

struct Psl3Partial {
    int epsilon;  // +1 (linear) or -1 (unitary)
    u64 q;        // prime power > 2, q != 4
};

struct GroupDescriptor;

struct Product {
    std::shared_ptr<GroupDescriptor> left;
    std::shared_ptr<GroupDescriptor> right;
};

struct GroupDescriptor {
    std::variant<Psl2, Named, Product, SuzukiPartial, Psl3Partial> value;
};

GroupDescriptor make_psl2(u64 q);
GroupDescriptor make_named(std::string id);
GroupDescriptor make_product(GroupDescriptor left, GroupDescriptor right);
GroupDescriptor make_suzuki(u64 q_squared);
GroupDescriptor make_psl3(int epsilon, u64 q);

bool is_partial(const GroupDescriptor& g);
std::string describe(const GroupDescriptor& g);

// ---- named-group table ------------------------------------------------

enum class Source { PaperQuoted, ExternalTable };

struct NamedGroupEntry {
    std::string id;
    DegreeSet degree_set;
    Source source = Source::ExternalTable;
    std::string notes;
};

/// Read-only table of named groups, loaded once from a data file of
/// lines "id;d1,d2,...;source[;notes]". Fails fast on malformed entries.
class NamedGroupTable {
public:
    static NamedGroupTable load(const std::string& path);
    /// Resolves the data file from the PRIMEGRAPH_DATA environment
    /// variable, falling back to the bundled default path.
    static const NamedGroupTable& bundled();

    const NamedGroupEntry& entry(const std::string& id) const;  // throws with id list
    const NamedGroupEntry* find(const std::string& id) const;
    const std::vector<NamedGroupEntry>& entries() const { return entries_; }

private:
    std::vector<NamedGroupEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

// ---- operations -------------------------------------------------------

/// cd(PSL2(q)). Even q: {1, q-1, q, q+1}. Odd q > 5: {1, (q+eps)/2, q-1, q, q+1}
/// with eps = (-1)^((q-1)/2). q = 5 normalizes to 4. Rejects q < 4 and
/// non-prime-powers.
DegreeSet psl2_degrees(u64 q);

DegreeSet named_degrees(const std::string& id);
DegreeSet named_degrees(const NamedGroupTable& table, const std::string& id);

/// Degrees of a direct product: all pairwise products, deduplicated.
DegreeSet product_degrees(const DegreeSet& a, const DegreeSet& b);

/// Degree set of an arbitrary non-partial descriptor.
DegreeSet degrees_of(const GroupDescriptor& g, const NamedGroupTable& table);

/// Vertex data for a family where only a lower bound on edges is known:
/// the subgraph on complete_on is complete, other adjacencies undetermined.
struct PartialVertexData {
    std::vector<u64> vertices;
    std::vector<u64> complete_on;
};

/// Suzuki 2B2(q^2): vertices {2} u pi(q^2-1) u pi(q^4+1); everything but 2
/// spans a complete subgraph. Rejects q^2 not of the form 2^(2m+1), m >= 1.
PartialVertexData suzuki_vertices(u64 q_squared);

/// PSL3/PSU3(q): vertices {p} u pi((q^2-1)(q^2+eps*q+1)); complete away
/// from p. Rejects q <= 2 and q = 4.
PartialVertexData psl3_vertices(int epsilon, u64 q);

/// Indices of the maximal subgroups of PSL2(2^f), fully factored:
/// { 2^(f-1)(2^f+1), 2^(f-1)(2^f-1), 2^f+1 } plus one entry
/// 2^f(2^(2f)-1) / (2^a(2^(2a)-1)) for each divisor a of f with f/a prime.
std::vector<numtheory::FactoredInteger> psl2_even_maximal_indices(unsigned f);

}  // namespace pg::groupdata

#endif
