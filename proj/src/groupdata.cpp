#include "primegraph/groupdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pg::groupdata {

namespace nt = pg::numtheory;

DegreeSet make_degree_set(std::vector<u64> degrees) {
    for (u64 d : degrees)
        if (d == 0) throw std::invalid_argument("DegreeSet: degrees must be positive");
    degrees.push_back(1);  // principal character
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return DegreeSet{std::move(degrees)};
}

// ---- descriptors --------------------------------------------------------

GroupDescriptor make_psl2(u64 q) {
    if (q == 5) q = 4;  // PSL2(5) = PSL2(4)
    if (q < 4 || !nt::prime_power_decompose(q))
        throw std::invalid_argument("PSL2: q must be a prime power >= 4");
    return GroupDescriptor{Psl2{q}};
}

GroupDescriptor make_named(std::string id) { return GroupDescriptor{Named{std::move(id)}}; }

GroupDescriptor make_product(GroupDescriptor left, GroupDescriptor right) {
    if (is_partial(left) || is_partial(right))
        throw std::invalid_argument("Product: operands must not be partial families");
    return GroupDescriptor{Product{std::make_shared<GroupDescriptor>(std::move(left)),
                                   std::make_shared<GroupDescriptor>(std::move(right))}};
}

GroupDescriptor make_suzuki(u64 q_squared) {
    auto pp = nt::prime_power_decompose(q_squared);
    if (!pp || pp->first != 2 || pp->second < 3 || pp->second % 2 == 0)
        throw std::invalid_argument("Suzuki: q^2 must be 2^(2m+1) with m >= 1");
    return GroupDescriptor{SuzukiPartial{q_squared}};
}

GroupDescriptor make_psl3(int epsilon, u64 q) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("PSL3: epsilon must be +1 or -1");
    if (q <= 2 || q == 4 || !nt::prime_power_decompose(q))
        throw std::invalid_argument("PSL3: q must be a prime power > 2, q != 4");
    return GroupDescriptor{Psl3Partial{epsilon, q}};
}

bool is_partial(const GroupDescriptor& g) {
    return std::holds_alternative<SuzukiPartial>(g.value) ||
           std::holds_alternative<Psl3Partial>(g.value);
}

std::string describe(const GroupDescriptor& g) {
    struct Visitor {
        std::string operator()(const Psl2& p) const { return "PSL2(" + std::to_string(p.q) + ")"; }
        std::string operator()(const Named& n) const { return n.id; }
        std::string operator()(const Product& p) const {
            return describe(*p.left) + " x " + describe(*p.right);
        }
        std::string operator()(const SuzukiPartial& s) const {
            return "2B2(" + std::to_string(s.q_squared) + ")";
        }
        std::string operator()(const Psl3Partial& p) const {
            return std::string(p.epsilon == 1 ? "PSL3(" : "PSU3(") + std::to_string(p.q) + ")";
        }
    };
    return std::visit(Visitor{}, g.value);
}

// ---- named-group table --------------------------------------------------

NamedGroupTable NamedGroupTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("named-group data file not found: " + path);
    NamedGroupTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ';')) fields.push_back(field);
        if (fields.size() < 3 || fields.size() > 4)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected id;degrees;source[;notes]");
        NamedGroupEntry e;
        e.id = fields[0];
        std::vector<u64> degs;
        std::stringstream ds(fields[1]);
        std::string tok;
        while (std::getline(ds, tok, ',')) {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(tok, &pos);
            if (pos != tok.size() || v == 0)
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": bad degree '" + tok + "'");
            degs.push_back(v);
        }
        e.degree_set = make_degree_set(std::move(degs));
        if (fields[2] == "paper-quoted")
            e.source = Source::PaperQuoted;
        else if (fields[2] == "external-table")
            e.source = Source::ExternalTable;
        else
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown source tag '" +
                                     fields[2] + "'");
        if (fields.size() == 4) e.notes = fields[3];
        if (table.index_.count(e.id))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": duplicate id '" +
                                     e.id + "'");
        table.index_[e.id] = table.entries_.size();
        table.entries_.push_back(std::move(e));
    }
    if (table.entries_.empty()) throw std::runtime_error(path + ": no entries");
    return table;
}

const NamedGroupTable& NamedGroupTable::bundled() {
    static NamedGroupTable table = [] {
        const char* env = std::getenv("PRIMEGRAPH_DATA");
        std::string path = env && *env ? env : PRIMEGRAPH_BUNDLED_DATA;
        return load(path);
    }();
    return table;
}

const NamedGroupEntry* NamedGroupTable::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const NamedGroupEntry& NamedGroupTable::entry(const std::string& id) const {
    if (const NamedGroupEntry* e = find(id)) return *e;
    std::string msg = "unknown group id '" + id + "'; available:";
    for (const auto& e : entries_) msg += " " + e.id;
    throw std::out_of_range(msg);
}

// ---- operations -----------------------------------------------------------

DegreeSet psl2_degrees(u64 q) {
    if (q == 5) q = 4;
    auto pp = nt::prime_power_decompose(q);
    if (!pp || q < 4) throw std::invalid_argument("psl2_degrees: q must be a prime power >= 4");
    if (pp->first == 2) return make_degree_set({q - 1, q, q + 1});
    // odd q > 5
    u64 eps_term = ((q - 1) / 2) % 2 == 0 ? (q + 1) / 2 : (q - 1) / 2;
    return make_degree_set({eps_term, q - 1, q, q + 1});
}

DegreeSet named_degrees(const NamedGroupTable& table, const std::string& id) {
    return table.entry(id).degree_set;
}

DegreeSet named_degrees(const std::string& id) {
    return named_degrees(NamedGroupTable::bundled(), id);
}

DegreeSet product_degrees(const DegreeSet& a, const DegreeSet& b) {
    std::vector<u64> out;
    out.reserve(a.degrees.size() * b.degrees.size());
    for (u64 x : a.degrees)
        for (u64 y : b.degrees) out.push_back(x * y);
    return make_degree_set(std::move(out));
}

DegreeSet degrees_of(const GroupDescriptor& g, const NamedGroupTable& table) {
    struct Visitor {
        const NamedGroupTable& table;
        DegreeSet operator()(const Psl2& p) const { return psl2_degrees(p.q); }
        DegreeSet operator()(const Named& n) const { return named_degrees(table, n.id); }
        DegreeSet operator()(const Product& p) const {
            return product_degrees(degrees_of(*p.left, table), degrees_of(*p.right, table));
        }
        DegreeSet operator()(const SuzukiPartial&) const {
            throw std::invalid_argument("degrees_of: Suzuki family carries only partial data");
        }
        DegreeSet operator()(const Psl3Partial&) const {
            throw std::invalid_argument("degrees_of: PSL3 family carries only partial data");
        }
    };
    return std::visit(Visitor{table}, g.value);
}

namespace {
std::vector<u64> support64(u64 n) {
    std::vector<u64> out;
    for (auto p : nt::prime_support(n)) out.push_back(static_cast<u64>(p));
    return out;
}
}  // namespace

PartialVertexData suzuki_vertices(u64 q_squared) {
    make_suzuki(q_squared);  // validate
    u64 q4_plus_1 = q_squared * q_squared + 1;
    std::vector<u64> odd = support64(q_squared - 1);
    for (u64 p : support64(q4_plus_1)) odd.push_back(p);
    std::sort(odd.begin(), odd.end());
    odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
    PartialVertexData out;
    out.complete_on = odd;
    out.vertices = odd;
    out.vertices.insert(out.vertices.begin(), 2);
    return out;
}

PartialVertexData psl3_vertices(int epsilon, u64 q) {
    make_psl3(epsilon, q);  // validate
    u64 p = nt::prime_power_decompose(q)->first;
    u64 cyclotomic = epsilon == 1 ? q * q + q + 1 : q * q - q + 1;
    std::vector<u64> verts = support64((q * q - 1) * cyclotomic);
    std::vector<u64> complete;
    for (u64 v : verts)
        if (v != p) complete.push_back(v);
    if (std::find(verts.begin(), verts.end(), p) == verts.end()) verts.push_back(p);
    std::sort(verts.begin(), verts.end());
    return PartialVertexData{std::move(verts), std::move(complete)};
}

std::vector<nt::FactoredInteger> psl2_even_maximal_indices(unsigned f) {
    if (f < 2 || f > 60) throw std::invalid_argument("psl2_even_maximal_indices: need 2 <= f <= 60");
    using nt::u128;
    u128 q = static_cast<u128>(1) << f;
    std::vector<nt::FactoredInteger> out;
    out.push_back(nt::factor((q / 2) * (q + 1)));
    out.push_back(nt::factor((q / 2) * (q - 1)));
    out.push_back(nt::factor(q + 1));
    for (unsigned a = 1; a < f; ++a) {
        if (f % a != 0) continue;
        unsigned n = f / a;
        if (!nt::is_prime(n)) continue;
        u128 num = q * ((q * q) - 1);
        u128 den = (static_cast<u128>(1) << a) * ((static_cast<u128>(1) << (2 * a)) - 1);
        out.push_back(nt::factor(num / den));
    }
    return out;
}

}  // namespace pg::groupdata
